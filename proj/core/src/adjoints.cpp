#include "dualkit/adjoints.hpp"

#include <bit>

#include "dualkit/morphisms.hpp"

namespace dualkit {

ElementMap::ElementMap(BoxAlgebra src, BoxAlgebra dst, std::vector<Mask> tbl)
    : source(std::move(src)), target(std::move(dst)), table(std::move(tbl)) {
  if (table.size() != source.carrier_size())
    throw ValidationError("element map must be total on the source carrier");
  for (Mask v : table)
    if (!mask_leq(v, target.full()))
      throw ValidationError("element map value outside the target carrier");
}

Mask relation_image(Rel r, int n, Mask x, ImageDir dir) {
  if (!mask_leq(x, (Mask{1} << n) - 1))
    throw ValidationError("subset references indices outside the world set");
  Mask out = 0;
  for (int w = 0; w < n; ++w)
    for (int v = 0; v < n; ++v) {
      if (!((x >> v) & 1)) continue;
      const bool hit = dir == ImageDir::Up ? rel_has(r, n, v, w) : rel_has(r, n, w, v);
      if (hit) {
        out |= Mask{1} << w;
        break;
      }
    }
  return out;
}

Mask adjoint(const ElementMap& f, Mask b, AdjointSide side) {
  if (auto report = is_cba_hom(f); !report.ok)
    throw ValidationError("adjoint requires a complete-BA homomorphism (failed: " +
                          report.witness->condition + ")");
  const auto carrier = static_cast<Mask>(f.source.carrier_size());
  if (side == AdjointSide::Right) {
    Mask join = 0;
    for (Mask x = 0; x < carrier; ++x)
      if (mask_leq(f.apply(x), b)) join |= x;
    return join;
  }
  Mask meet = f.source.full();
  for (Mask x = 0; x < carrier; ++x)
    if (mask_leq(b, f.apply(x))) meet &= x;
  return meet;
}

Mask p_element(const BoxAlgebra& a, const std::vector<Mask>& xs, Mask atom) {
  if (std::popcount(atom) != 1 || !mask_leq(atom, a.full()))
    throw ValidationError("p_element requires an atom of the algebra");
  Mask join = 0;
  for (Mask x : xs) {
    if (!mask_leq(x, a.full()))
      throw ValidationError("p_element argument outside the carrier");
    if ((a.box(x) & atom) == 0) join |= x; // box(x) <= -atom
  }
  return join;
}

std::vector<Mask> up_closure(const std::vector<Mask>& family, int n) {
  const Mask full = (Mask{1} << n) - 1;
  std::vector<Mask> out;
  for (Mask y = 0; y <= full; ++y)
    for (Mask x : family)
      if (mask_leq(x, y)) {
        out.push_back(y);
        break;
      }
  return out;
}

bool check_atom_characterizations(const BoxAlgebra& a) {
  const std::size_t carrier = a.carrier_size();
  if (carrier > 16)
    throw CapExceeded("atom characterization enumerates all subsets of the "
                      "carrier; carrier size " + std::to_string(carrier) +
                      " exceeds 16");
  const auto top = static_cast<Mask>(carrier - 1);
  for (Mask e = 1; e <= top; ++e) {
    const bool minimal = std::popcount(e) == 1;

    bool complete_irr = true;
    for (std::size_t subset = 0; subset < (std::size_t{1} << carrier); ++subset) {
      Mask join = 0;
      for (Mask x = 0; x < carrier; ++x)
        if ((subset >> x) & 1) join |= x;
      if (!mask_leq(e, join)) continue;
      bool below_some = false;
      for (Mask x = 0; x < carrier && !below_some; ++x)
        if (((subset >> x) & 1) && mask_leq(e, x)) below_some = true;
      if (!below_some) {
        complete_irr = false;
        break;
      }
    }

    bool join_irr = true;
    for (Mask x = 0; x < carrier && join_irr; ++x)
      for (Mask y = 0; y < carrier; ++y)
        if (mask_leq(e, x | y) && !mask_leq(e, x) && !mask_leq(e, y)) {
          join_irr = false;
          break;
        }

    bool prime = true;
    for (Mask x = 0; x < carrier; ++x)
      if (!mask_leq(e, x) && !mask_leq(e, top & ~x)) {
        prime = false;
        break;
      }

    if (minimal != complete_irr || minimal != join_irr || minimal != prime)
      return false;
  }
  return true;
}

} // namespace dualkit
