#pragma once
// Ground sets: an ordered list of distinct element labels, at most 64 of
// them, so that subsets fit in one machine word.  Bit i of a Mask refers to
// the label at position i.  All set-indexed structures in the library share
// this addressing scheme.

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "dm/error.hpp"

namespace dm {

using Mask = uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }

// Canonical subset order: by cardinality, then by numeric mask value.
inline bool mask_less(Mask a, Mask b) {
  int pa = popcount(a), pb = popcount(b);
  return pa != pb ? pa < pb : a < b;
}

class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);

  // Convenience: labels "1".."n".
  static GroundSet numbered(int n);

  size_t size() const { return labels_.size(); }
  const std::string& label(size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool has_label(const std::string& l) const;
  size_t index(const std::string& l) const;  // throws on unknown label

  Mask full() const {
    return size() == 64 ? ~Mask{0} : (Mask{1} << size()) - 1;
  }
  Mask bit(const std::string& l) const { return Mask{1} << index(l); }

  Mask subset(const std::vector<std::string>& ls) const;
  std::vector<std::string> labels_of(Mask m) const;

  // "{2 4 6}", "{}" for the empty subset.
  std::string subset_string(Mask m) const;

  // Ground set of the labels in keep, preserving order.  remap maps each
  // old position in keep to its new position.
  GroundSet restricted(Mask keep) const;

  // Project a subset of this ground set onto restricted(keep) positions.
  Mask project(Mask m, Mask keep) const;

  friend bool operator==(const GroundSet& a, const GroundSet& b) {
    return a.labels_ == b.labels_;
  }
  friend bool operator!=(const GroundSet& a, const GroundSet& b) {
    return !(a == b);
  }

 private:
  std::vector<std::string> labels_;
};

// Iterate over the positions set in m, ascending.
template <typename F>
void for_each_bit(Mask m, F&& f) {
  while (m) {
    int i = std::countr_zero(m);
    f(static_cast<size_t>(i));
    m &= m - 1;
  }
}

}  // namespace dm
