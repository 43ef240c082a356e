#include "dm/ground.hpp"

#include <algorithm>
#include <unordered_set>

namespace dm {

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > 64) {
    throw CapacityError("ground set has " + std::to_string(labels_.size()) +
                        " elements; at most 64 supported");
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw ValidationError("empty element label");
    if (!seen.insert(l).second) {
      throw ValidationError("duplicate element label '" + l + "'");
    }
  }
}

GroundSet GroundSet::numbered(int n) {
  std::vector<std::string> ls;
  ls.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) ls.push_back(std::to_string(i));
  return GroundSet(std::move(ls));
}

bool GroundSet::has_label(const std::string& l) const {
  return std::find(labels_.begin(), labels_.end(), l) != labels_.end();
}

size_t GroundSet::index(const std::string& l) const {
  auto it = std::find(labels_.begin(), labels_.end(), l);
  if (it == labels_.end()) throw ValidationError("unknown element '" + l + "'");
  return static_cast<size_t>(it - labels_.begin());
}

Mask GroundSet::subset(const std::vector<std::string>& ls) const {
  Mask m = 0;
  for (const auto& l : ls) m |= bit(l);
  return m;
}

std::vector<std::string> GroundSet::labels_of(Mask m) const {
  std::vector<std::string> out;
  for_each_bit(m, [&](size_t i) { out.push_back(labels_[i]); });
  return out;
}

std::string GroundSet::subset_string(Mask m) const {
  std::string s = "{";
  bool first = true;
  for_each_bit(m, [&](size_t i) {
    if (!first) s += ' ';
    s += labels_[i];
    first = false;
  });
  s += '}';
  return s;
}

GroundSet GroundSet::restricted(Mask keep) const {
  std::vector<std::string> ls;
  for_each_bit(keep, [&](size_t i) { ls.push_back(labels_[i]); });
  return GroundSet(std::move(ls));
}

Mask GroundSet::project(Mask m, Mask keep) const {
  Mask out = 0;
  size_t j = 0;
  for_each_bit(keep, [&](size_t i) {
    if (m & (Mask{1} << i)) out |= Mask{1} << j;
    ++j;
  });
  return out;
}

}  // namespace dm
