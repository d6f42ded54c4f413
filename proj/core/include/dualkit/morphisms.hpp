#ifndef DUALKIT_MORPHISMS_HPP
#define DUALKIT_MORPHISMS_HPP

#include "dualkit/adjoints.hpp"
#include "dualkit/model.hpp"

namespace dualkit {

/// Total function between two world sets, by index.
struct WorldMap {
  WorldSet source;
  WorldSet target;
  std::vector<int> table;

  WorldMap(WorldSet src, WorldSet dst, std::vector<int> tbl);

  int apply(int w) const { return table.at(static_cast<std::size_t>(w)); }
  Mask preimage(Mask y) const;
  bool bijective() const;
  WorldMap inverse() const; // requires bijective
};

WorldMap identity_world_map(const WorldSet& w);
WorldMap compose(const WorldMap& first, const WorldMap& then);

/// Forth condition plus successor lifting. Witnesses use the first failure in
/// lexicographic scan order.
MorphismReport is_kripke_hom(const WorldMap& f, const KripkeFrame& f1,
                             const KripkeFrame& f2);

/// Condition 1: for every source world and target relation some source
/// relation pushes forward. Condition 2: for every source world and source
/// relation some target relation's successors all lift.
MorphismReport is_mkf_hom(const WorldMap& f, const MRFrame& m1, const MRFrame& m2);

/// Neighborhood biconditional: preimage membership at the source iff
/// membership at the image point, for every world and target subset.
MorphismReport is_nfr_hom(const WorldMap& f, const NFrame& z1, const NFrame& z2);

/// Complete-Boolean-algebra homomorphism: preserves 0, 1, complement, binary
/// meet/join, and decomposes through atoms; a definitional all-subsets check
/// runs as a cross-check on small carriers.
MorphismReport is_cba_hom(const ElementMap& h);

/// is_cba_hom plus commuting with the box tables.
MorphismReport is_modal_hom(const ElementMap& h);

/// Preimage element map induced by an atom map g from the target algebra's
/// atoms to the source algebra's atoms: h(X) = g^{-1}[X].
ElementMap cba_hom_from_atom_map(const BoxAlgebra& source, const BoxAlgebra& target,
                                 const std::vector<int>& g);

/// Bijective homomorphism whose inverse is also checked; an inverse failing
/// the hom validator is reported as an internal error, not a verdict.
MorphismReport is_mkf_iso(const WorldMap& f, const MRFrame& m1, const MRFrame& m2);

} // namespace dualkit

#endif // DUALKIT_MORPHISMS_HPP
