#ifndef DUALKIT_FUNCTORS_HPP
#define DUALKIT_FUNCTORS_HPP

#include "dualkit/core_model.hpp"
#include "dualkit/morphisms.hpp"

namespace dualkit {

enum class FunctorTag {
  G_mkf_to_alg,  // contravariant
  F_alg_to_mkf,  // contravariant
  N_mkf_to_nfr,  // covariant
  H_nfr_to_mkf,  // covariant
  J_alg_to_nfr,  // contravariant
  K_nfr_to_alg,  // contravariant
  M_kfr_to_mkf,  // covariant
  L_mkf_to_kfr,  // covariant
  U_underlying,  // not a functor
};

bool is_contravariant(FunctorTag tag);

/// Preimage element map X -> f^{-1}[X] from an algebra over f's target worlds
/// to one over f's source worlds. No homomorphism validation; building block
/// for the contravariant arrow parts and the preimage-characterization check.
ElementMap preimage_element_map(const WorldMap& f, const BoxAlgebra& from,
                                const BoxAlgebra& to);

/// Powerset algebra of a frame; box is the intersection over all relations of
/// the down-image. Accepts non-directed frames, whose boxes come out merely
/// monotone.
BoxAlgebra functor_G_obj(const MRFrame& m, const Caps& caps = kDefaultCaps);

/// Arrow part of G: validates the frame homomorphism, then takes preimages.
ElementMap functor_G_map(const WorldMap& f, const MRFrame& m1, const MRFrame& m2,
                         const Caps& caps = kDefaultCaps);

/// Frame of box-certified relations over the atom base, for an arbitrary box
/// table. The relation set is the intersection closure of the single-element
/// relations together with the total relation; that equals the full family
/// R(X) over all subsets X of the carrier, since R(X) factors as the
/// intersection of R({x}) for x in X.
MRFrame box_relation_frame(const BoxAlgebra& a, const Caps& caps = kDefaultCaps);

/// box_relation_frame gated on normality (exposed at kappa = All only; finite
/// bounds are not regular in the sense the construction needs).
MRFrame functor_F_obj(const BoxAlgebra& a, const Caps& caps = kDefaultCaps);

/// Arrow part of F: the left adjoint restricted to atoms.
WorldMap functor_F_map(const ElementMap& h);

/// Neighborhoods are the upward closures of the successor sets.
NFrame functor_N_obj(const MRFrame& m);
WorldMap functor_N_map(const WorldMap& f, const MRFrame& m1, const MRFrame& m2);

/// One relation per selector of neighborhoods, rows given by the chosen sets.
MRFrame functor_H_obj(const NFrame& z, Kappa kappa, const Caps& caps = kDefaultCaps);
WorldMap functor_H_map(const WorldMap& f, const NFrame& z1, const NFrame& z2);

/// Neighborhoods of an atom: the subsets whose complement the box does not
/// certify at that atom. Total for any box table; functor_J_obj gates it on
/// normality.
NFrame box_neighborhood_frame(const BoxAlgebra& a);

NFrame functor_J_obj(const BoxAlgebra& a);
WorldMap functor_J_map(const ElementMap& h);

BoxAlgebra functor_K_obj(const NFrame& z, const Caps& caps = kDefaultCaps);
ElementMap functor_K_map(const WorldMap& f, const NFrame& z1, const NFrame& z2,
                         const Caps& caps = kDefaultCaps);

MRFrame functor_M_obj(const KripkeFrame& f);
/// Collapses to the intersection; requires the intersection to be a member
/// (complete downward directedness).
KripkeFrame functor_L_obj(const MRFrame& m);

/// Successor-set neighborhoods without upward closure. Not a functor; exists
/// to replay the three counterexamples that show why.
NFrame underlying_U(const MRFrame& m);

} // namespace dualkit

#endif // DUALKIT_FUNCTORS_HPP
