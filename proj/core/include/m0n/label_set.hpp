#pragma once

#include <string>
#include <vector>

namespace m0n {

// Finite ordered set of distinct opaque tags. Trees, divisor classes and
// paired configurations all refer to labels by their position in this set,
// so the same machinery serves {1..n}, {0..n} and paired z/rho-z labels.
// A label set must carry at least 3 tags (stability of the one-vertex tree).
class LabelSet {
 public:
  LabelSet() = default;
  explicit LabelSet(std::vector<std::string> names);

  // labels "lo", "lo+1", ..., "hi"
  static LabelSet integer_range(int lo, int hi);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int index) const { return names_.at(index); }
  const std::vector<std::string>& names() const { return names_; }
  // -1 when absent
  int index_of(const std::string& name) const;
  bool contains(const std::string& name) const { return index_of(name) >= 0; }

  bool operator==(const LabelSet& o) const { return names_ == o.names_; }
  bool operator!=(const LabelSet& o) const { return !(*this == o); }

 private:
  std::vector<std::string> names_;
};

}  // namespace m0n
