#include "dualkit/duality.hpp"

#include <algorithm>
#include <numeric>

namespace dualkit {

Caps round_trip_caps() {
  Caps caps;
  caps.max_relations = 512;
  return caps;
}

namespace {

/// Index translation by label; throws when a label is missing.
std::vector<int> label_indices(const WorldSet& from, const WorldSet& to) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(from.size()));
  for (int i = 0; i < from.size(); ++i) {
    auto idx = to.index_of(from.label(i));
    if (!idx)
      throw ValidationError("label '" + from.label(i) + "' missing from relabel target");
    out.push_back(*idx);
  }
  return out;
}

/// Relabeling element map between powerset algebras with equal atom bases up
/// to label order.
ElementMap relabel_map(const BoxAlgebra& from, const BoxAlgebra& to) {
  const auto translate = label_indices(from.atoms(), to.atoms());
  std::vector<Mask> table(from.carrier_size());
  for (Mask x = 0; x < static_cast<Mask>(from.carrier_size()); ++x) {
    Mask y = 0;
    for (int a = 0; a < from.atom_count(); ++a)
      if ((x >> a) & 1) y |= Mask{1} << translate[static_cast<std::size_t>(a)];
    table[x] = y;
  }
  return ElementMap(from, to, std::move(table));
}

bool element_map_bijective(const ElementMap& h) {
  if (h.source.carrier_size() != h.target.carrier_size()) return false;
  std::vector<Mask> values = h.table;
  std::sort(values.begin(), values.end());
  return std::adjacent_find(values.begin(), values.end()) == values.end();
}

RoundTripReport frame_iso_report(std::string direction, const WorldMap& f,
                                 const MRFrame& m1, const MRFrame& m2) {
  RoundTripReport report{std::move(direction)};
  if (!f.bijective()) {
    report.ok = false;
    report.witness = Witness{"bijective", {}, "relabeling is not a bijection"};
    return report;
  }
  if (auto fwd = is_mkf_hom(f, m1, m2); !fwd.ok) {
    report.ok = false;
    report.witness = fwd.witness;
    return report;
  }
  if (auto bwd = is_mkf_hom(f.inverse(), m2, m1); !bwd.ok) {
    report.ok = false;
    report.witness = bwd.witness;
    report.witness->condition = "inverse-" + report.witness->condition;
  }
  return report;
}

} // namespace

RoundTripReport verify_tau(const BoxAlgebra& a) {
  const Caps caps = round_trip_caps();
  const MRFrame fa = functor_F_obj(a, caps);
  const BoxAlgebra gfa = functor_G_obj(fa, caps);
  const ElementMap tau = relabel_map(a, gfa);

  RoundTripReport report{"algebra-first"};
  if (!element_map_bijective(tau)) {
    report.ok = false;
    report.witness = Witness{"bijective", {}, "tau is not a bijection"};
    return report;
  }
  if (auto hom = is_modal_hom(tau); !hom.ok) {
    report.ok = false;
    report.witness = hom.witness;
  }
  return report;
}

RoundTripReport verify_theta(const MRFrame& m) {
  const Caps caps = round_trip_caps();
  const BoxAlgebra gm = functor_G_obj(m, caps);
  // The relation construction is total on any box table, so the round trip is
  // attempted even when M is not directed; that is where theta fails.
  const MRFrame fgm = box_relation_frame(gm, caps);
  const WorldMap theta(m.worlds(), fgm.worlds(), label_indices(m.worlds(), fgm.worlds()));
  return frame_iso_report("frame-first", theta, m, fgm);
}

RoundTripReport verify_nfr_equivalence(const MRFrame& m, const NFrame& z, Kappa kappa) {
  const Caps caps = round_trip_caps();
  if (auto dd = check_kappa_dd(m, kappa); !dd.ok)
    throw ValidationError("verify_nfr_equivalence requires a kappa-directed frame");
  if (auto complete = check_nfr(z, kappa); !complete.ok)
    throw ValidationError("verify_nfr_equivalence requires a kappa-complete frame");

  const NFrame nm = functor_N_obj(m);
  const MRFrame hnm = functor_H_obj(nm, kappa, caps);
  RoundTripReport gamma =
      frame_iso_report("nfr-equivalence", identity_world_map(m.worlds()), m, hnm);
  if (!gamma.ok) return gamma;

  const MRFrame hz = functor_H_obj(z, kappa, caps);
  const NFrame nhz = functor_N_obj(hz);
  for (int c = 0; c < z.size(); ++c)
    if (nhz.nbhd(c) != z.nbhd(c)) {
      gamma.ok = false;
      gamma.witness = Witness{"delta-neighborhoods", {c},
                              "N(H(Z)) differs from Z at world " + z.worlds().label(c)};
      return gamma;
    }
  return gamma;
}

RoundTripReport verify_cama_nfr(const BoxAlgebra& a, const NFrame& z, Kappa kappa) {
  const Caps caps = round_trip_caps();
  if (!validate_algebra(a, Kappa::all()).normal())
    throw ValidationError("verify_cama_nfr requires a normal algebra");
  if (auto complete = check_nfr(z, kappa); !complete.ok)
    throw ValidationError("verify_cama_nfr requires a kappa-complete frame");

  RoundTripReport report{"cama-nfr"};
  const NFrame ja = functor_J_obj(a);
  const BoxAlgebra kja = functor_K_obj(ja, caps);
  const ElementMap delta = relabel_map(a, kja);
  if (!element_map_bijective(delta)) {
    report.ok = false;
    report.witness = Witness{"bijective", {}, "delta is not a bijection"};
    return report;
  }
  if (auto hom = is_modal_hom(delta); !hom.ok) {
    report.ok = false;
    report.witness = hom.witness;
    return report;
  }

  const BoxAlgebra kz = functor_K_obj(z, caps);
  const NFrame jkz = box_neighborhood_frame(kz);
  for (int c = 0; c < z.size(); ++c)
    if (jkz.nbhd(c) != z.nbhd(c)) {
      report.ok = false;
      report.witness = Witness{"gamma-neighborhoods", {c},
                               "J(K(Z)) differs from Z at world " + z.worlds().label(c)};
      return report;
    }
  return report;
}

MorphismReport check_naturality_tau(const ElementMap& h) {
  if (auto hom = is_modal_hom(h); !hom.ok)
    throw ValidationError("naturality square requires a modal homomorphism");
  const Caps caps = round_trip_caps();
  const WorldMap ff = functor_F_map(h);
  const BoxAlgebra gfa = functor_G_obj(functor_F_obj(h.source, caps), caps);
  const BoxAlgebra gfb = functor_G_obj(functor_F_obj(h.target, caps), caps);
  const ElementMap gff = preimage_element_map(ff, gfa, gfb);
  const ElementMap tau_a = relabel_map(h.source, gfa);
  const ElementMap tau_b = relabel_map(h.target, gfb);
  for (Mask x = 0; x < static_cast<Mask>(h.source.carrier_size()); ++x)
    if (gff.apply(tau_a.apply(x)) != tau_b.apply(h.apply(x)))
      return {false, Witness{"tau-square", {x}, "square does not commute"}};
  return {};
}

MorphismReport check_naturality_theta(const WorldMap& g, const MRFrame& m1,
                                      const MRFrame& m2) {
  const Caps caps = round_trip_caps();
  const ElementMap gg = functor_G_map(g, m1, m2, caps); // validates g
  const WorldMap fgg = functor_F_map(gg);
  const MRFrame fgm1 = box_relation_frame(functor_G_obj(m1, caps), caps);
  const MRFrame fgm2 = box_relation_frame(functor_G_obj(m2, caps), caps);
  const auto theta1 = label_indices(m1.worlds(), fgm1.worlds());
  const auto theta2 = label_indices(m2.worlds(), fgm2.worlds());
  // Both paths: F(G(g))(theta1(w)) vs theta2(g(w)), compared through labels.
  const auto fgg_from_fgm1 = label_indices(fgm1.worlds(), fgg.source);
  const auto fgg_to_fgm2 = label_indices(fgg.target, fgm2.worlds());
  for (int w = 0; w < m1.size(); ++w) {
    const int left = fgg_to_fgm2[static_cast<std::size_t>(fgg.apply(
        fgg_from_fgm1[static_cast<std::size_t>(theta1[static_cast<std::size_t>(w)])]))];
    const int right = theta2[static_cast<std::size_t>(g.apply(w))];
    if (left != right)
      return {false, Witness{"theta-square", {w}, "square does not commute"}};
  }
  return {};
}

MorphismReport check_naturality_delta(const ElementMap& h) {
  if (auto hom = is_modal_hom(h); !hom.ok)
    throw ValidationError("naturality square requires a modal homomorphism");
  const Caps caps = round_trip_caps();
  const WorldMap jh = functor_J_map(h);
  const BoxAlgebra kja = functor_K_obj(functor_J_obj(h.source), caps);
  const BoxAlgebra kjb = functor_K_obj(functor_J_obj(h.target), caps);
  const ElementMap kjh = preimage_element_map(jh, kja, kjb);
  const ElementMap delta_a = relabel_map(h.source, kja);
  const ElementMap delta_b = relabel_map(h.target, kjb);
  for (Mask x = 0; x < static_cast<Mask>(h.source.carrier_size()); ++x)
    if (kjh.apply(delta_a.apply(x)) != delta_b.apply(h.apply(x)))
      return {false, Witness{"delta-square", {x}, "square does not commute"}};
  return {};
}

bool corollary_preimage_check(const WorldMap& f, const MRFrame& m1, const MRFrame& m2) {
  const Caps caps = round_trip_caps();
  const bool frame_side = is_mkf_hom(f, m1, m2).ok;
  const ElementMap g =
      preimage_element_map(f, functor_G_obj(m2, caps), functor_G_obj(m1, caps));
  const bool algebra_side = is_modal_hom(g).ok;
  return frame_side == algebra_side;
}

std::optional<WorldMap> find_iso(const MRFrame& m1, const MRFrame& m2) {
  if (m1.size() != m2.size())
    throw ValidationError("find_iso requires equally sized world sets");
  if (m1.size() > 4) throw CapExceeded("find_iso is capped at 4 worlds");
  std::vector<int> perm(static_cast<std::size_t>(m1.size()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    WorldMap candidate(m1.worlds(), m2.worlds(), perm);
    if (is_mkf_hom(candidate, m1, m2).ok &&
        is_mkf_hom(candidate.inverse(), m2, m1).ok)
      return candidate;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

} // namespace dualkit
