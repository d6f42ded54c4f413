#include "dualkit/morphisms.hpp"

#include <algorithm>
#include <bit>

namespace dualkit {

WorldMap::WorldMap(WorldSet src, WorldSet dst, std::vector<int> tbl)
    : source(std::move(src)), target(std::move(dst)), table(std::move(tbl)) {
  if (static_cast<int>(table.size()) != source.size())
    throw ValidationError("world map must be total on the source");
  for (int v : table)
    if (v < 0 || v >= target.size())
      throw ValidationError("world map value outside the target");
}

Mask WorldMap::preimage(Mask y) const {
  Mask out = 0;
  for (int w = 0; w < source.size(); ++w)
    if ((y >> apply(w)) & 1) out |= Mask{1} << w;
  return out;
}

bool WorldMap::bijective() const {
  if (source.size() != target.size()) return false;
  Mask seen = 0;
  for (int v : table) seen |= Mask{1} << v;
  return std::popcount(seen) == target.size();
}

WorldMap WorldMap::inverse() const {
  if (!bijective()) throw ValidationError("inverse requires a bijection");
  std::vector<int> inv(table.size());
  for (int w = 0; w < source.size(); ++w) inv[static_cast<std::size_t>(apply(w))] = w;
  return WorldMap(target, source, std::move(inv));
}

WorldMap identity_world_map(const WorldSet& w) {
  std::vector<int> table(static_cast<std::size_t>(w.size()));
  for (int i = 0; i < w.size(); ++i) table[static_cast<std::size_t>(i)] = i;
  return WorldMap(w, w, std::move(table));
}

WorldMap compose(const WorldMap& first, const WorldMap& then) {
  if (!(first.target == then.source))
    throw ValidationError("composition requires matching world sets");
  std::vector<int> table;
  table.reserve(first.table.size());
  for (int v : first.table) table.push_back(then.apply(v));
  return WorldMap(first.source, then.target, std::move(table));
}

namespace {

void require_frames(const WorldMap& f, const WorldSet& w1, const WorldSet& w2) {
  if (!(f.source == w1) || !(f.target == w2))
    throw ValidationError("world map does not match the frames' world sets");
}

MorphismReport fail(std::string condition, std::vector<long long> data,
                    std::string detail) {
  return MorphismReport{false,
                        Witness{std::move(condition), std::move(data), std::move(detail)}};
}

} // namespace

MorphismReport is_kripke_hom(const WorldMap& f, const KripkeFrame& f1,
                             const KripkeFrame& f2) {
  require_frames(f, f1.worlds, f2.worlds);
  const int n1 = f1.worlds.size();
  const int n2 = f2.worlds.size();
  for (int v = 0; v < n1; ++v)
    for (int w = 0; w < n1; ++w)
      if (rel_has(f1.rel, n1, v, w) && !rel_has(f2.rel, n2, f.apply(v), f.apply(w)))
        return fail("kripke-hom-1", {v, w},
                    f1.worlds.label(v) + " R1 " + f1.worlds.label(w) +
                        " but the images are unrelated");
  for (int w = 0; w < n1; ++w)
    for (int u = 0; u < n2; ++u) {
      if (!rel_has(f2.rel, n2, f.apply(w), u)) continue;
      bool lifted = false;
      for (int v = 0; v < n1 && !lifted; ++v)
        if (rel_has(f1.rel, n1, w, v) && f.apply(v) == u) lifted = true;
      if (!lifted)
        return fail("kripke-hom-2", {w, u},
                    "f(" + f1.worlds.label(w) + ") R2 " + f2.worlds.label(u) +
                        " but no R1-successor maps to it");
    }
  return {};
}

MorphismReport is_mkf_hom(const WorldMap& f, const MRFrame& m1, const MRFrame& m2) {
  require_frames(f, m1.worlds(), m2.worlds());
  const int n1 = m1.size();
  const int n2 = m2.size();

  for (int x = 0; x < n1; ++x)
    for (std::size_t j = 0; j < m2.rels().size(); ++j) {
      const Rel r2 = m2.rels()[j];
      bool pushed = false;
      for (Rel r1 : m1.rels()) {
        bool all = true;
        for (int y = 0; y < n1 && all; ++y)
          if (rel_has(r1, n1, x, y) && !rel_has(r2, n2, f.apply(x), f.apply(y)))
            all = false;
        if (all) {
          pushed = true;
          break;
        }
      }
      if (!pushed)
        return fail("mkf-hom-1", {x, static_cast<long long>(j)},
                    "world " + m1.worlds().label(x) + ": no source relation pushes "
                        "forward into target relation #" + std::to_string(j));
    }

  for (int x = 0; x < n1; ++x)
    for (std::size_t i = 0; i < m1.rels().size(); ++i) {
      const Rel r1 = m1.rels()[i];
      bool covered = false;
      for (Rel r2 : m2.rels()) {
        bool all = true;
        for (int u = 0; u < n2 && all; ++u) {
          if (!rel_has(r2, n2, f.apply(x), u)) continue;
          bool lifted = false;
          for (int y = 0; y < n1 && !lifted; ++y)
            if (rel_has(r1, n1, x, y) && f.apply(y) == u) lifted = true;
          if (!lifted) all = false;
        }
        if (all) {
          covered = true;
          break;
        }
      }
      if (!covered) {
        // Name a concrete unliftable successor under the first target relation.
        std::string detail = "world " + m1.worlds().label(x) +
                             ", source relation #" + std::to_string(i) + ":";
        const Rel r2 = m2.rels().front();
        for (int u = 0; u < n2; ++u) {
          if (!rel_has(r2, n2, f.apply(x), u)) continue;
          bool lifted = false;
          for (int y = 0; y < n1 && !lifted; ++y)
            if (rel_has(r1, n1, x, y) && f.apply(y) == u) lifted = true;
          if (!lifted) {
            detail += " f(" + m1.worlds().label(x) + ") Q " + m2.worlds().label(u) +
                      " but no successor of " + m1.worlds().label(x) +
                      " maps to " + m2.worlds().label(u);
            break;
          }
        }
        return fail("mkf-hom-2", {x, static_cast<long long>(i)}, std::move(detail));
      }
    }
  return {};
}

MorphismReport is_nfr_hom(const WorldMap& f, const NFrame& z1, const NFrame& z2) {
  require_frames(f, z1.worlds(), z2.worlds());
  const Mask full2 = z2.worlds().full();
  for (int c = 0; c < z1.size(); ++c) {
    const auto& family1 = z1.nbhd(c);
    const auto& family2 = z2.nbhd(f.apply(c));
    for (Mask x = 0; x <= full2; ++x) {
      const bool lhs = std::binary_search(family1.begin(), family1.end(), f.preimage(x));
      const bool rhs = std::binary_search(family2.begin(), family2.end(), x);
      if (lhs != rhs)
        return fail("nfr-hom", {c, x},
                    "biconditional fails at world " + z1.worlds().label(c) +
                        (lhs ? ": preimage is a neighborhood but the set is not"
                             : ": the set is a neighborhood but its preimage is not"));
    }
  }
  return {};
}

MorphismReport is_cba_hom(const ElementMap& h) {
  const auto carrier = static_cast<Mask>(h.source.carrier_size());
  const Mask sfull = h.source.full();
  const Mask tfull = h.target.full();

  if (h.apply(0) != 0) return fail("zero", {}, "h(0) != 0");
  if (h.apply(sfull) != tfull) return fail("one", {}, "h(1) != 1");
  for (Mask x = 0; x < carrier; ++x)
    if (h.apply(sfull & ~x) != (tfull & ~h.apply(x)))
      return fail("complement", {x}, "h(-x) != -h(x)");
  for (Mask x = 0; x < carrier; ++x)
    for (Mask y = 0; y < carrier; ++y) {
      if (h.apply(x | y) != (h.apply(x) | h.apply(y)))
        return fail("join", {x, y}, "h(x v y) != h(x) v h(y)");
      if (h.apply(x & y) != (h.apply(x) & h.apply(y)))
        return fail("meet", {x, y}, "h(x ^ y) != h(x) ^ h(y)");
    }
  for (Mask x = 0; x < carrier; ++x) {
    Mask join = 0;
    for (int a = 0; a < h.source.atom_count(); ++a)
      if ((x >> a) & 1) join |= h.apply(Mask{1} << a);
    if (h.apply(x) != join)
      return fail("atom-decomposition", {x}, "h(x) is not the join of its atom images");
  }

  // Definitional cross-check over every subset of the carrier, where feasible.
  if (carrier <= 16) {
    for (std::size_t subset = 0; subset < (std::size_t{1} << carrier); ++subset) {
      Mask join = 0, meet = sfull, ijoin = 0, imeet = tfull;
      for (Mask x = 0; x < carrier; ++x)
        if ((subset >> x) & 1) {
          join |= x;
          meet &= x;
          ijoin |= h.apply(x);
          imeet &= h.apply(x);
        }
      if (subset == 0) meet = sfull, imeet = tfull; // empty meet is 1
      if (h.apply(join) != ijoin)
        return fail("complete-join", {static_cast<long long>(subset)},
                    "h does not preserve the join of this subset");
      if (h.apply(meet) != imeet)
        return fail("complete-meet", {static_cast<long long>(subset)},
                    "h does not preserve the meet of this subset");
    }
  }
  return {};
}

MorphismReport is_modal_hom(const ElementMap& h) {
  if (auto report = is_cba_hom(h); !report.ok) return report;
  const auto carrier = static_cast<Mask>(h.source.carrier_size());
  for (Mask x = 0; x < carrier; ++x)
    if (h.apply(h.source.box(x)) != h.target.box(h.apply(x)))
      return fail("box", {x}, "h(box x) != box h(x)");
  return {};
}

ElementMap cba_hom_from_atom_map(const BoxAlgebra& source, const BoxAlgebra& target,
                                 const std::vector<int>& g) {
  if (static_cast<int>(g.size()) != target.atom_count())
    throw ValidationError("atom map must be total on the target atoms");
  for (int v : g)
    if (v < 0 || v >= source.atom_count())
      throw ValidationError("atom map value outside the source atoms");
  const auto carrier = static_cast<Mask>(source.carrier_size());
  std::vector<Mask> table(carrier);
  for (Mask x = 0; x < carrier; ++x) {
    Mask image = 0;
    for (int b = 0; b < target.atom_count(); ++b)
      if ((x >> g[static_cast<std::size_t>(b)]) & 1) image |= Mask{1} << b;
    table[x] = image;
  }
  return ElementMap(source, target, std::move(table));
}

MorphismReport is_mkf_iso(const WorldMap& f, const MRFrame& m1, const MRFrame& m2) {
  require_frames(f, m1.worlds(), m2.worlds());
  if (!f.bijective())
    return fail("bijective", {}, "underlying mapping is not a bijection");
  if (auto report = is_mkf_hom(f, m1, m2); !report.ok) return report;
  // The inverse of a bijective homomorphism is claimed to be a homomorphism;
  // a failure here would be a counterexample to that claim.
  if (auto back = is_mkf_hom(f.inverse(), m2, m1); !back.ok)
    throw std::logic_error("bijective mkf homomorphism with non-hom inverse: " +
                           back.witness->condition);
  return {};
}

} // namespace dualkit
