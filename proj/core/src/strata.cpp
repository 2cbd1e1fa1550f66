#include "m0n/strata.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace m0n {

std::vector<long long> StrataPoset::counts_by_codim() const {
  std::vector<long long> counts(labels.size() - 2, 0);
  for (const Stratum& s : strata) counts[s.codim]++;
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  return counts;
}

std::vector<int> StrataPoset::closure(int i) const {
  std::vector<std::vector<int>> up(strata.size());
  for (auto [a, b] : cover_relations) up[a].push_back(b);
  std::set<int> seen = {i};
  std::vector<int> stack = {i};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : up[v])
      if (seen.insert(w).second) stack.push_back(w);
  }
  return {seen.begin(), seen.end()};
}

StrataPoset strata_poset(const LabelSet& S) {
  StrataPoset poset;
  poset.labels = S;
  const int max_grade = S.size() - 3;

  std::map<std::string, int> index;
  auto add = [&](const StableTree& t) {
    int id = static_cast<int>(poset.strata.size());
    index[t.encode()] = id;
    poset.strata.push_back({t, t.num_edges(), max_grade - t.num_edges()});
  };

  std::vector<StableTree> current = {one_vertex_tree(S)};
  add(current[0]);
  for (int g = 1; g <= max_grade; ++g) {
    std::map<std::string, StableTree> level;
    std::set<std::pair<int, std::string>> covers;
    for (const StableTree& t : current) {
      const int from = index.at(t.encode());
      for (StableTree& c : all_splits(t)) {
        covers.insert({from, c.encode()});
        level.emplace(c.encode(), std::move(c));
      }
    }
    current.clear();
    for (auto& [key, t] : level) {
      add(t);
      current.push_back(std::move(t));
    }
    for (const auto& [from, key] : covers)
      poset.cover_relations.push_back({from, index.at(key)});
  }
  return poset;
}

std::vector<Stratum> maximal_degenerations(const LabelSet& S) {
  std::vector<Stratum> out;
  for (StableTree& t : enumerate_stable_trees(S, S.size() - 3))
    out.push_back({std::move(t), S.size() - 3, 0});
  return out;
}

IntPoly open_stratum_count_poly(int m) {
  if (m < 3) throw std::invalid_argument("need at least 3 marked points");
  IntPoly p = IntPoly::one();
  for (int j = 2; j <= m - 2; ++j) p = p * IntPoly::x_minus(j);
  return p;
}

IntPoly compactified_count_poly(const LabelSet& S) {
  IntPoly total = IntPoly::zero();
  for (const StableTree& t : enumerate_stable_trees(S)) {
    IntPoly term = IntPoly::one();
    for (int v = 0; v < t.num_vertices(); ++v)
      term = term * open_stratum_count_poly(t.valence(v));
    total = total + term;
  }
  return total;
}

std::vector<long long> betti_numbers(const LabelSet& S) {
  return compactified_count_poly(S).c;
}

void write_hasse_dot(std::ostream& out, const StrataPoset& poset) {
  out << "digraph strata {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < poset.strata.size(); ++i)
    out << "  s" << i << " [label=\"codim " << poset.strata[i].codim
        << "\"];\n";
  for (auto [a, b] : poset.cover_relations)
    out << "  s" << a << " -> s" << b << ";\n";
  out << "}\n";
}

Json strata_json(const LabelSet& S) {
  StrataPoset poset = strata_poset(S);
  Json j = Json::object();
  j.set("n", S.size());
  j.set("counts_by_codim", Json::array_of(poset.counts_by_codim()));
  j.set("betti", Json::array_of(betti_numbers(S)));
  j.set("count_poly", Json::array_of(compactified_count_poly(S).c));
  return j;
}

}  // namespace m0n
