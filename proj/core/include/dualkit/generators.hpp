#ifndef DUALKIT_GENERATORS_HPP
#define DUALKIT_GENERATORS_HPP

#include "dualkit/core_model.hpp"
#include "dualkit/morphisms.hpp"

namespace dualkit {

struct GenParams {
  int max_worlds = 3;
  int max_relations = 3;
  int max_atoms = 3;
  std::uint64_t seed = 0;
  int count = 0; // random streams only

  std::optional<Kappa> directed_filter;  // frames passing check_kappa_dd
  std::optional<Kappa> complete_filter;  // neighborhood frames passing check_nfr
  bool require_normal = false;           // algebras
  bool close_under_intersection = false; // frames, applied before the filter
};

/// splitmix64; fixed algorithm so sequences are stable across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform value in [0, bound), bound >= 1, by rejection.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

/// All frames with 1..max_worlds worlds and nonempty relation sets of size at
/// most max_relations, drawn from every binary relation; exhaustive mode is
/// capped at 3 worlds and refuses parameter combinations whose raw count
/// exceeds an internal budget.
std::vector<MRFrame> enumerate_mrframes(const GenParams& p);

/// Exactly the normal algebras with 1..max_atoms atoms (atom rows chosen
/// freely, tables extended by union); capped at 3 atoms.
std::vector<BoxAlgebra> enumerate_normal_algebras(const GenParams& p);

/// Seeded random objects, uniform over raw encodings then filtered; identical
/// (params, seed) yields identical sequences.
std::vector<MRFrame> random_mrframes(const GenParams& p);
std::vector<NFrame> random_nframes(const GenParams& p);
std::vector<BoxAlgebra> random_algebras(const GenParams& p);

/// Adds all pairwise (hence all finite) intersections to the relation set,
/// making the frame completely downward directed.
MRFrame close_under_intersection(const MRFrame& m, const Caps& caps = kDefaultCaps);

/// The named counterexample fixtures.
struct Fixture {
  std::optional<MRFrame> m1;
  std::optional<MRFrame> m2;
  std::optional<WorldMap> map;
  std::optional<BoxAlgebra> algebra;
};

/// Names: FX1_single, FX2_pair, FX3_triple, FX4_fork, FX5_idbox2.
Fixture fixture(const std::string& name);

} // namespace dualkit

#endif // DUALKIT_GENERATORS_HPP
