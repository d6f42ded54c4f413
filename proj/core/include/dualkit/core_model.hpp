#ifndef DUALKIT_CORE_MODEL_HPP
#define DUALKIT_CORE_MODEL_HPP

#include "dualkit/model.hpp"

namespace dualkit {

/// Axiom classification of a box table, computed by direct quantification.
struct AlgebraClass {
  bool box_zero_is_zero = false;
  bool monotone = false;
  bool binary_additive = false;
  bool kappa_additive = false;
  /// First failing pair (X, Y) in lexicographic mask order, if binary
  /// additivity fails.
  std::optional<std::pair<Mask, Mask>> additivity_witness;
  /// First failing pair X <= Y, if monotonicity fails.
  std::optional<std::pair<Mask, Mask>> monotone_witness;

  bool normal() const { return box_zero_is_zero && binary_additive; }
};

AlgebraClass validate_algebra(const BoxAlgebra& a, Kappa kappa);

struct DirectednessReport {
  bool ok = true;
  /// A subfamily with no lower bound inside the relation set, if !ok.
  std::vector<Rel> offending;
};

/// kappa-downward directedness: every subfamily of size < k (or any size, for
/// All) has a lower bound inside the relation set. For All the single test
/// "intersection of all relations is a member" is run as a second route and
/// must agree.
DirectednessReport check_kappa_dd(const MRFrame& m, Kappa kappa);

struct NfrReport {
  bool ok = true;
  std::optional<Witness> witness; // condition in {whole-set, upward-closed, meet-closed}
};

/// kappa-completeness of a neighborhood frame: whole set present, upward
/// closed, and closed under intersections of nonempty subfamilies of size < k.
NfrReport check_nfr(const NFrame& z, Kappa kappa);

/// The upward-closure condition alone (used by the counterexample replays,
/// where it can fail together with whole-set membership).
std::optional<Witness> find_upward_closure_violation(const NFrame& z);

} // namespace dualkit

#endif // DUALKIT_CORE_MODEL_HPP
