#include "dualkit/model.hpp"

#include <algorithm>
#include <unordered_set>

namespace dualkit {

WorldSet::WorldSet(std::vector<std::string> labels, const Caps& caps)
    : labels_(std::move(labels)) {
  if (labels_.empty()) throw ValidationError("world set must be nonempty");
  if (static_cast<int>(labels_.size()) > caps.max_worlds)
    throw CapExceeded("world set size " + std::to_string(labels_.size()) +
                      " exceeds cap " + std::to_string(caps.max_worlds));
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second)
      throw ValidationError("duplicate world label '" + l + "'");
}

std::optional<int> WorldSet::index_of(std::string_view label) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[static_cast<std::size_t>(i)] == label) return i;
  return std::nullopt;
}

KripkeFrame::KripkeFrame(WorldSet w, Rel r) : worlds(std::move(w)), rel(r) {
  if (rel & ~rel_total(worlds.size()))
    throw ValidationError("relation references indices outside the world set");
}

MRFrame::MRFrame(WorldSet worlds, std::vector<Rel> rels, const Caps& caps)
    : worlds_(std::move(worlds)), rels_(std::move(rels)) {
  if (rels_.empty()) throw ValidationError("relation set must be nonempty");
  const Rel total = rel_total(worlds_.size());
  for (Rel r : rels_)
    if (r & ~total)
      throw ValidationError("relation references indices outside the world set");
  std::sort(rels_.begin(), rels_.end());
  rels_.erase(std::unique(rels_.begin(), rels_.end()), rels_.end());
  if (rels_.size() > caps.max_relations)
    throw CapExceeded("relation set size " + std::to_string(rels_.size()) +
                      " exceeds cap " + std::to_string(caps.max_relations));
}

NFrame::NFrame(WorldSet worlds, std::vector<std::vector<Mask>> nbhd)
    : worlds_(std::move(worlds)), nbhd_(std::move(nbhd)) {
  if (static_cast<int>(nbhd_.size()) != worlds_.size())
    throw ValidationError("neighborhood map must be total on the world set");
  const Mask full = worlds_.full();
  for (auto& family : nbhd_) {
    for (Mask x : family)
      if (!mask_leq(x, full))
        throw ValidationError("neighborhood references worlds outside the set");
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
  }
}

BoxAlgebra::BoxAlgebra(WorldSet atoms, std::vector<Mask> box, const Caps& caps)
    : atoms_(std::move(atoms)), box_(std::move(box)) {
  if (atoms_.size() > caps.max_atoms)
    throw CapExceeded("atom base size " + std::to_string(atoms_.size()) +
                      " exceeds cap " + std::to_string(caps.max_atoms));
  const std::size_t carrier = std::size_t{1} << atoms_.size();
  if (box_.size() != carrier)
    throw ValidationError("box table must be total on all " +
                          std::to_string(carrier) + " elements");
  for (Mask v : box_)
    if (!mask_leq(v, full()))
      throw ValidationError("box table value outside the carrier");
}

} // namespace dualkit
