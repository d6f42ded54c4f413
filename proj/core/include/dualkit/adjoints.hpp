#ifndef DUALKIT_ADJOINTS_HPP
#define DUALKIT_ADJOINTS_HPP

#include "dualkit/model.hpp"

namespace dualkit {

/// Total element map between two powerset algebras.
struct ElementMap {
  BoxAlgebra source;
  BoxAlgebra target;
  std::vector<Mask> table; // one target element per source element

  ElementMap(BoxAlgebra src, BoxAlgebra dst, std::vector<Mask> tbl);

  Mask apply(Mask x) const { return table.at(x); }
};

enum class ImageDir { Up, Down };

/// Relational image: Up collects R-successors of X, Down collects
/// R-predecessors.
Mask relation_image(Rel r, int n, Mask x, ImageDir dir);

enum class AdjointSide { Right, Left };

/// Right adjoint: join of all source elements mapping below b.
/// Left adjoint: meet of all source elements mapping above b.
/// Rejects maps that fail complete-Boolean-algebra validation. Empty join is
/// 0 and empty meet is 1, globally.
Mask adjoint(const ElementMap& f, Mask b, AdjointSide side);

/// Join of the elements of X whose box value lies below the complement of the
/// given atom.
Mask p_element(const BoxAlgebra& a, const std::vector<Mask>& xs, Mask atom);

/// Upward closure of a family of subsets inside an n-element base.
std::vector<Mask> up_closure(const std::vector<Mask>& family, int n);

/// Brute-force agreement of the four atom characterizations (minimal nonzero,
/// complete join-irreducible, join-irreducible, complemented-prime) on every
/// nonzero element.
bool check_atom_characterizations(const BoxAlgebra& a);

} // namespace dualkit

#endif // DUALKIT_ADJOINTS_HPP
