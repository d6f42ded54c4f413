#include "dualkit/functors.hpp"

#include <algorithm>
#include <bit>

namespace dualkit {

bool is_contravariant(FunctorTag tag) {
  switch (tag) {
    case FunctorTag::G_mkf_to_alg:
    case FunctorTag::F_alg_to_mkf:
    case FunctorTag::J_alg_to_nfr:
    case FunctorTag::K_nfr_to_alg:
      return true;
    default:
      return false;
  }
}

ElementMap preimage_element_map(const WorldMap& f, const BoxAlgebra& from,
                                const BoxAlgebra& to) {
  if (!(from.atoms() == f.target) || !(to.atoms() == f.source))
    throw ValidationError("preimage map requires algebras over the map's world sets");
  std::vector<Mask> table(from.carrier_size());
  for (Mask x = 0; x < static_cast<Mask>(from.carrier_size()); ++x)
    table[x] = f.preimage(x);
  return ElementMap(from, to, std::move(table));
}

BoxAlgebra functor_G_obj(const MRFrame& m, const Caps& caps) {
  const int n = m.size();
  const Mask full = m.worlds().full();
  std::vector<Mask> box(std::size_t{1} << n);
  for (Mask x = 0; x <= full; ++x) {
    Mask value = full;
    for (Rel r : m.rels()) value &= relation_image(r, n, x, ImageDir::Down);
    box[x] = value;
  }
  return BoxAlgebra(m.worlds(), std::move(box), caps);
}

ElementMap functor_G_map(const WorldMap& f, const MRFrame& m1, const MRFrame& m2,
                         const Caps& caps) {
  if (auto report = is_mkf_hom(f, m1, m2); !report.ok)
    throw ValidationError("functor_G_map requires a frame homomorphism (failed: " +
                          report.witness->condition + ")");
  return preimage_element_map(f, functor_G_obj(m2, caps), functor_G_obj(m1, caps));
}

namespace {

// a R({x}) b  iff  b <= x implies a <= box(x).
Rel singleton_relation(const BoxAlgebra& a, Mask x) {
  const int n = a.atom_count();
  Rel r = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!((x >> j) & 1) || ((a.box(x) >> i) & 1)) r |= rel_bit(n, i, j);
  return r;
}

} // namespace

MRFrame box_relation_frame(const BoxAlgebra& a, const Caps& caps) {
  const int n = a.atom_count();
  std::vector<Rel> rels{rel_total(n)};
  for (Mask x = 0; x < static_cast<Mask>(a.carrier_size()); ++x)
    rels.push_back(singleton_relation(a, x));
  std::sort(rels.begin(), rels.end());
  rels.erase(std::unique(rels.begin(), rels.end()), rels.end());

  // Intersection closure; reaches the fixed point in finitely many rounds.
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t count = rels.size();
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = i + 1; j < count; ++j) {
        const Rel inter = rels[i] & rels[j];
        if (std::find(rels.begin(), rels.end(), inter) == rels.end()) {
          rels.push_back(inter);
          grew = true;
        }
      }
    std::sort(rels.begin(), rels.end());
    if (rels.size() > caps.max_relations)
      throw CapExceeded("relation closure reached " + std::to_string(rels.size()) +
                        " relations, cap is " + std::to_string(caps.max_relations));
  }
  return MRFrame(a.atoms(), std::move(rels), caps);
}

MRFrame functor_F_obj(const BoxAlgebra& a, const Caps& caps) {
  const AlgebraClass cls = validate_algebra(a, Kappa::all());
  if (!cls.normal())
    throw ValidationError("functor_F_obj requires a normal (completely additive) algebra");
  return box_relation_frame(a, caps);
}

WorldMap functor_F_map(const ElementMap& h) {
  if (auto report = is_modal_hom(h); !report.ok)
    throw ValidationError("functor_F_map requires a modal homomorphism (failed: " +
                          report.witness->condition + ")");
  const auto carrier = static_cast<Mask>(h.source.carrier_size());
  std::vector<int> table;
  table.reserve(static_cast<std::size_t>(h.target.atom_count()));
  for (int b = 0; b < h.target.atom_count(); ++b) {
    Mask meet = h.source.full();
    for (Mask x = 0; x < carrier; ++x)
      if ((h.apply(x) >> b) & 1) meet &= x;
    if (std::popcount(meet) != 1)
      throw std::logic_error("left adjoint of a validated hom did not map an atom "
                             "to an atom"); // unreachable
    table.push_back(std::countr_zero(meet));
  }
  return WorldMap(h.target.atoms(), h.source.atoms(), std::move(table));
}

NFrame functor_N_obj(const MRFrame& m) {
  const int n = m.size();
  std::vector<std::vector<Mask>> nbhd;
  nbhd.reserve(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    std::vector<Mask> successors;
    for (Rel r : m.rels())
      successors.push_back(relation_image(r, n, Mask{1} << x, ImageDir::Up));
    nbhd.push_back(up_closure(successors, n));
  }
  return NFrame(m.worlds(), std::move(nbhd));
}

WorldMap functor_N_map(const WorldMap& f, const MRFrame& m1, const MRFrame& m2) {
  if (auto report = is_mkf_hom(f, m1, m2); !report.ok)
    throw ValidationError("functor_N_map requires a frame homomorphism (failed: " +
                          report.witness->condition + ")");
  return f;
}

MRFrame functor_H_obj(const NFrame& z, Kappa kappa, const Caps& caps) {
  if (auto report = check_nfr(z, kappa); !report.ok)
    throw ValidationError("functor_H_obj requires a kappa-complete frame (failed: " +
                          report.witness->condition + ")");
  const int n = z.size();
  std::size_t product = 1;
  for (int c = 0; c < n; ++c) {
    product *= z.nbhd(c).size();
    if (product > caps.max_selectors)
      throw CapExceeded("selector count exceeds cap " +
                        std::to_string(caps.max_selectors) + " (product is at least " +
                        std::to_string(product) + ")");
  }
  std::vector<Rel> rels;
  rels.reserve(product);
  std::vector<std::size_t> choice(static_cast<std::size_t>(n), 0);
  for (;;) {
    Rel r = 0;
    for (int c = 0; c < n; ++c) {
      const Mask row = z.nbhd(c)[choice[static_cast<std::size_t>(c)]];
      for (int y = 0; y < n; ++y)
        if ((row >> y) & 1) r |= rel_bit(n, c, y);
    }
    rels.push_back(r);
    int c = 0;
    while (c < n && ++choice[static_cast<std::size_t>(c)] == z.nbhd(c).size())
      choice[static_cast<std::size_t>(c++)] = 0;
    if (c == n) break;
  }
  return MRFrame(z.worlds(), std::move(rels), caps);
}

WorldMap functor_H_map(const WorldMap& f, const NFrame& z1, const NFrame& z2) {
  if (auto report = is_nfr_hom(f, z1, z2); !report.ok)
    throw ValidationError("functor_H_map requires a neighborhood homomorphism "
                          "(failed: " + report.witness->condition + ")");
  return f;
}

NFrame box_neighborhood_frame(const BoxAlgebra& a) {
  const Mask full = a.full();
  std::vector<std::vector<Mask>> nbhd;
  for (int atom = 0; atom < a.atom_count(); ++atom) {
    std::vector<Mask> family;
    for (Mask x = 0; x <= full; ++x)
      if (!((a.box(full & ~x) >> atom) & 1)) family.push_back(x);
    nbhd.push_back(std::move(family));
  }
  return NFrame(a.atoms(), std::move(nbhd));
}

NFrame functor_J_obj(const BoxAlgebra& a) {
  const AlgebraClass cls = validate_algebra(a, Kappa::all());
  if (!cls.normal())
    throw ValidationError("functor_J_obj requires a normal algebra");
  return box_neighborhood_frame(a);
}

WorldMap functor_J_map(const ElementMap& h) { return functor_F_map(h); }

BoxAlgebra functor_K_obj(const NFrame& z, const Caps& caps) {
  const Mask full = z.worlds().full();
  std::vector<Mask> box(std::size_t{1} << z.size());
  for (Mask x = 0; x <= full; ++x) {
    Mask value = 0;
    for (int c = 0; c < z.size(); ++c) {
      const auto& family = z.nbhd(c);
      if (!std::binary_search(family.begin(), family.end(), full & ~x))
        value |= Mask{1} << c;
    }
    box[x] = value;
  }
  return BoxAlgebra(z.worlds(), std::move(box), caps);
}

ElementMap functor_K_map(const WorldMap& f, const NFrame& z1, const NFrame& z2,
                         const Caps& caps) {
  if (auto report = is_nfr_hom(f, z1, z2); !report.ok)
    throw ValidationError("functor_K_map requires a neighborhood homomorphism "
                          "(failed: " + report.witness->condition + ")");
  return preimage_element_map(f, functor_K_obj(z2, caps), functor_K_obj(z1, caps));
}

MRFrame functor_M_obj(const KripkeFrame& f) {
  return MRFrame(f.worlds, {f.rel});
}

KripkeFrame functor_L_obj(const MRFrame& m) {
  Rel inter = m.rels().front();
  for (Rel r : m.rels()) inter &= r;
  if (!std::binary_search(m.rels().begin(), m.rels().end(), inter))
    throw ValidationError("functor_L_obj requires a completely downward directed frame");
  return KripkeFrame(m.worlds(), inter);
}

NFrame underlying_U(const MRFrame& m) {
  const int n = m.size();
  std::vector<std::vector<Mask>> nbhd;
  for (int x = 0; x < n; ++x) {
    std::vector<Mask> family;
    for (Rel r : m.rels())
      family.push_back(relation_image(r, n, Mask{1} << x, ImageDir::Up));
    nbhd.push_back(std::move(family));
  }
  return NFrame(m.worlds(), std::move(nbhd));
}

} // namespace dualkit
