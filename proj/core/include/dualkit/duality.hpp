#ifndef DUALKIT_DUALITY_HPP
#define DUALKIT_DUALITY_HPP

#include "dualkit/functors.hpp"

namespace dualkit {

struct RoundTripReport {
  std::string direction; // algebra-first | frame-first | nfr-equivalence | cama-nfr
  bool ok = true;
  std::optional<Witness> witness;
};

/// Caps used inside round-trip constructions: F(G(M)) and H(N(M)) routinely
/// need more relations than standalone frames do.
Caps round_trip_caps();

/// tau_A: x -> set of atoms below x, checked as a modal isomorphism from A to
/// G(F(A)). Expected to hold for every normal algebra within caps.
RoundTripReport verify_tau(const BoxAlgebra& a);

/// theta_M: w -> {w}, checked as a frame isomorphism from M to F(G(M)) in
/// both directions. Fails with a witness when M is not All-directed.
RoundTripReport verify_theta(const MRFrame& m);

/// gamma_M: identity from M to H(N(M)) as a frame isomorphism, and
/// delta_Z: identity from Z to N(H(Z)) with equal neighborhoods.
RoundTripReport verify_nfr_equivalence(const MRFrame& m, const NFrame& z, Kappa kappa);

/// delta_A: K(J(A)) isomorphic to A, and gamma_Z: J(K(Z)) isomorphic to Z.
RoundTripReport verify_cama_nfr(const BoxAlgebra& a, const NFrame& z, Kappa kappa);

/// Naturality squares, composed elementwise/worldwise along both paths.
MorphismReport check_naturality_tau(const ElementMap& h);
MorphismReport check_naturality_theta(const WorldMap& g, const MRFrame& m1,
                                      const MRFrame& m2);
MorphismReport check_naturality_delta(const ElementMap& h);

/// The biconditional itself: f is a frame homomorphism iff its preimage map is
/// a modal homomorphism between the dual algebras. Returns whether the two
/// sides agree (expected true on every input).
bool corollary_preimage_check(const WorldMap& f, const MRFrame& m1, const MRFrame& m2);

/// Exhaustive search over bijections for a frame isomorphism; deterministic
/// order, absence means none exists. Requires equal sizes <= 4.
std::optional<WorldMap> find_iso(const MRFrame& m1, const MRFrame& m2);

} // namespace dualkit

#endif // DUALKIT_DUALITY_HPP
