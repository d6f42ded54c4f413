#include "dualkit/core_model.hpp"

#include <algorithm>

namespace dualkit {

AlgebraClass validate_algebra(const BoxAlgebra& a, Kappa kappa) {
  AlgebraClass c;
  const auto carrier = static_cast<Mask>(a.carrier_size());

  c.box_zero_is_zero = a.box(0) == 0;

  c.monotone = true;
  for (Mask x = 0; x < carrier && c.monotone; ++x)
    for (Mask y = 0; y < carrier; ++y) {
      if (!mask_leq(x, y)) continue;
      if (!mask_leq(a.box(x), a.box(y))) {
        c.monotone = false;
        c.monotone_witness = {x, y};
        break;
      }
    }

  c.binary_additive = true;
  for (Mask x = 0; x < carrier && c.binary_additive; ++x)
    for (Mask y = 0; y < carrier; ++y)
      if (a.box(x | y) != (a.box(x) | a.box(y))) {
        c.binary_additive = false;
        c.additivity_witness = {x, y};
        break;
      }

  // Subsets of size 0 force box(0)=0 and singletons are trivial; pairs settle
  // every larger finite subset, since finite joins decompose into binary ones.
  const std::size_t bound = kappa.size_bound(carrier);
  c.kappa_additive = c.box_zero_is_zero;
  if (c.kappa_additive && bound >= 2) c.kappa_additive = c.binary_additive;

  return c;
}

DirectednessReport check_kappa_dd(const MRFrame& m, Kappa kappa) {
  const auto& rels = m.rels();
  DirectednessReport report;

  // Size-0 subfamilies are bounded by any relation (the set is nonempty) and
  // singletons bound themselves; a lower bound for every pair extends to every
  // larger subfamily by iterating pairwise bounds inside the set.
  const std::size_t bound = kappa.size_bound(rels.size());
  if (bound >= 2) {
    for (std::size_t i = 0; i < rels.size() && report.ok; ++i)
      for (std::size_t j = i + 1; j < rels.size(); ++j) {
        const Rel inter = rels[i] & rels[j];
        bool bounded = false;
        for (Rel r : rels)
          if ((r & ~inter) == 0) {
            bounded = true;
            break;
          }
        if (!bounded) {
          report.ok = false;
          report.offending = {rels[i], rels[j]};
          break;
        }
      }
  }

  if (kappa.is_all()) {
    Rel inter = rels.front();
    for (Rel r : rels) inter &= r;
    const bool member = std::binary_search(rels.begin(), rels.end(), inter);
    if (member != report.ok)
      throw std::logic_error("directedness routes disagree"); // unreachable
  }
  return report;
}

namespace {

bool family_has(const std::vector<Mask>& family, Mask x) {
  return std::binary_search(family.begin(), family.end(), x);
}

} // namespace

NfrReport check_nfr(const NFrame& z, Kappa kappa) {
  const Mask full = z.worlds().full();
  NfrReport report;
  for (int c = 0; c < z.size(); ++c) {
    const auto& family = z.nbhd(c);
    if (!family_has(family, full)) {
      report.ok = false;
      report.witness = Witness{"whole-set", {c},
                               "whole set missing from the neighborhood family"};
      return report;
    }
    for (Mask x : family)
      for (Mask y = 0; y <= full; ++y) {
        if (!mask_leq(x, y) || family_has(family, y)) continue;
        report.ok = false;
        report.witness = Witness{"upward-closed", {c, x, y},
                                 "superset missing from the neighborhood family"};
        return report;
      }
    // Pairwise intersections settle every larger nonempty subfamily.
    const std::size_t bound = kappa.size_bound(family.size());
    if (bound >= 2)
      for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
          if (!family_has(family, family[i] & family[j])) {
            report.ok = false;
            report.witness =
                Witness{"meet-closed",
                        {c, family[i], family[j]},
                        "intersection missing from the neighborhood family"};
            return report;
          }
  }
  return report;
}

std::optional<Witness> find_upward_closure_violation(const NFrame& z) {
  const Mask full = z.worlds().full();
  for (int c = 0; c < z.size(); ++c)
    for (Mask x : z.nbhd(c))
      for (Mask y = 0; y <= full; ++y)
        if (mask_leq(x, y) && !family_has(z.nbhd(c), y))
          return Witness{"upward-closed", {c, x, y},
                         "superset missing from the neighborhood family"};
  return std::nullopt;
}

} // namespace dualkit
