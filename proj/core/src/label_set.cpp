#include "m0n/label_set.hpp"

#include <set>
#include <stdexcept>

namespace m0n {

LabelSet::LabelSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() < 3)
    throw std::invalid_argument("label set needs at least 3 labels");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("empty label");
    if (!seen.insert(n).second)
      throw std::invalid_argument("duplicate label: " + n);
  }
}

LabelSet LabelSet::integer_range(int lo, int hi) {
  std::vector<std::string> names;
  for (int i = lo; i <= hi; ++i) names.push_back(std::to_string(i));
  return LabelSet(std::move(names));
}

int LabelSet::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

}  // namespace m0n
