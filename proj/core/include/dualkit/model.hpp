#ifndef DUALKIT_MODEL_HPP
#define DUALKIT_MODEL_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

/// Finite structures for modal-algebra / frame duality computations.
///
/// Everything is small and dense by construction: subsets of a world or atom
/// base are bitmasks, binary relations are bitmasks over n*n index pairs, and
/// a modal algebra is the full powerset of its atom base with an explicit box
/// table. Sizes are capped (see Caps) because round trips through the functor
/// constructions are doubly exponential.
namespace dualkit {

/// Subset of a world/atom base; bit i is element i.
using Mask = std::uint32_t;

/// Binary relation over n worlds; bit (i*n + j) is the pair (i, j).
using Rel = std::uint64_t;

struct Caps {
  int max_atoms = 5;
  int max_worlds = 6;
  std::size_t max_relations = 64;   // after dedup
  std::size_t max_selectors = 4096; // product of neighborhood family sizes
};

inline constexpr Caps kDefaultCaps{};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A size cap would be exceeded; never silently truncates.
struct CapExceeded : Error {
  using Error::Error;
};

/// Structural precondition violated (ill-formed input, failed hom check, ...).
struct ValidationError : Error {
  using Error::Error;
};

inline bool mask_leq(Mask x, Mask y) { return (x & ~y) == 0; }

inline Rel rel_bit(int n, int i, int j) {
  return Rel{1} << (i * n + j);
}

inline bool rel_has(Rel r, int n, int i, int j) {
  return (r >> (i * n + j)) & 1;
}

inline Rel rel_total(int n) {
  const int bits = n * n;
  return bits >= 64 ? ~Rel{0} : (Rel{1} << bits) - 1;
}

/// Ordered base of distinct labels; indices 0..n-1 are stable.
class WorldSet {
 public:
  explicit WorldSet(std::vector<std::string> labels, const Caps& caps = kDefaultCaps);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> index_of(std::string_view label) const;
  Mask full() const { return (Mask{1} << size()) - 1; }

  bool operator==(const WorldSet&) const = default;

 private:
  std::vector<std::string> labels_;
};

struct KripkeFrame {
  WorldSet worlds;
  Rel rel = 0;

  KripkeFrame(WorldSet w, Rel r);
  bool operator==(const KripkeFrame&) const = default;
};

/// World set plus a nonempty deduplicated set of binary relations.
class MRFrame {
 public:
  MRFrame(WorldSet worlds, std::vector<Rel> rels, const Caps& caps = kDefaultCaps);

  const WorldSet& worlds() const { return worlds_; }
  const std::vector<Rel>& rels() const { return rels_; } // sorted ascending
  int size() const { return worlds_.size(); }

  bool operator==(const MRFrame&) const = default;

 private:
  WorldSet worlds_;
  std::vector<Rel> rels_;
};

/// World set plus a total neighborhood map; each family is a set of masks.
class NFrame {
 public:
  NFrame(WorldSet worlds, std::vector<std::vector<Mask>> nbhd);

  const WorldSet& worlds() const { return worlds_; }
  const std::vector<Mask>& nbhd(int world) const {
    return nbhd_.at(static_cast<std::size_t>(world));
  }
  int size() const { return worlds_.size(); }

  bool operator==(const NFrame&) const = default;

 private:
  WorldSet worlds_;
  std::vector<std::vector<Mask>> nbhd_; // per world, sorted ascending
};

/// Powerset algebra over a finite atom base with an explicit box table on all
/// 2^n elements. The full table keeps merely-monotone (non-normal) boxes
/// representable.
class BoxAlgebra {
 public:
  BoxAlgebra(WorldSet atoms, std::vector<Mask> box, const Caps& caps = kDefaultCaps);

  const WorldSet& atoms() const { return atoms_; }
  int atom_count() const { return atoms_.size(); }
  std::size_t carrier_size() const { return box_.size(); } // 2^n
  Mask full() const { return atoms_.full(); }
  Mask box(Mask x) const { return box_.at(x); }
  const std::vector<Mask>& box_table() const { return box_; }

  bool operator==(const BoxAlgebra&) const = default;

 private:
  WorldSet atoms_;
  std::vector<Mask> box_;
};

/// Closure-strength parameter: Finite(k) quantifies over subsets of size < k,
/// All over every subset (the finite surrogate for kappa >= omega).
class Kappa {
 public:
  static Kappa finite(int k) {
    if (k < 1) throw ValidationError("Kappa::finite requires k >= 1");
    return Kappa(k);
  }
  static Kappa all() { return Kappa(-1); }

  bool is_all() const { return k_ < 0; }
  int finite_bound() const { return k_; } // valid only if !is_all()

  /// Largest subset size that quantification over a ground set of the given
  /// size has to reach.
  std::size_t size_bound(std::size_t ground_size) const {
    if (is_all()) return ground_size;
    const auto b = static_cast<std::size_t>(k_ - 1);
    return b < ground_size ? b : ground_size;
  }

  std::string to_string() const {
    return is_all() ? "all" : std::to_string(k_);
  }

  bool operator==(const Kappa&) const = default;

 private:
  explicit Kappa(int k) : k_(k) {}
  int k_;
};

/// Verdict plus a concrete witness when a checked condition fails.
struct Witness {
  std::string condition;
  std::vector<long long> data; // indices/masks, meaning depends on condition
  std::string detail;
};

struct MorphismReport {
  bool ok = true;
  std::optional<Witness> witness;
};

} // namespace dualkit

#endif // DUALKIT_MODEL_HPP
