#include "m0n/stable_tree.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace m0n {

namespace {

std::vector<std::vector<std::pair<int, int>>> adjacency(const StableTree& t) {
  std::vector<std::vector<std::pair<int, int>>> adj(t.num_vertices());
  for (int e = 0; e < t.num_edges(); ++e) {
    auto [a, b] = t.edges()[e];
    adj[a].push_back({b, e});
    adj[b].push_back({a, e});
  }
  return adj;
}

std::vector<std::vector<int>> leaves_per_vertex(const StableTree& t) {
  std::vector<std::vector<int>> out(t.num_vertices());
  for (int l = 0; l < t.labels().size(); ++l)
    out[t.leaf_vertex(l)].push_back(l);
  return out;
}

}  // namespace

StableTree::StableTree(LabelSet labels, int num_vertices,
                       std::vector<std::pair<int, int>> edges,
                       std::vector<int> leaf_at)
    : labels_(std::move(labels)),
      num_vertices_(num_vertices),
      edges_(std::move(edges)),
      leaf_at_(std::move(leaf_at)) {
  if (num_vertices_ < 1) throw std::invalid_argument("tree needs a vertex");
  if (static_cast<int>(leaf_at_.size()) != labels_.size())
    throw std::invalid_argument("leaf assignment must cover every label once");
  for (int v : leaf_at_)
    if (v < 0 || v >= num_vertices_)
      throw std::invalid_argument("leaf assigned to missing vertex");
  if (static_cast<int>(edges_.size()) != num_vertices_ - 1)
    throw std::invalid_argument("edge count must be vertices - 1");
  for (auto [a, b] : edges_) {
    if (a < 0 || a >= num_vertices_ || b < 0 || b >= num_vertices_)
      throw std::invalid_argument("edge endpoint out of range");
    if (a == b) throw std::invalid_argument("self-loop edge");
  }
  // connectivity (with V-1 edges this also rules out cycles)
  std::vector<int> seen(num_vertices_, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  std::vector<std::vector<int>> adj(num_vertices_);
  for (auto [a, b] : edges_) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  for (int v = 0; v < num_vertices_; ++v)
    if (!seen[v]) throw std::invalid_argument("tree is disconnected");
  for (int v = 0; v < num_vertices_; ++v)
    if (valence(v) < 3)
      throw std::invalid_argument("unstable vertex with fewer than 3 flags");
}

std::vector<Flag> StableTree::flags(int v) const {
  if (v < 0 || v >= num_vertices_)
    throw std::invalid_argument("vertex out of range");
  std::vector<Flag> out;
  for (int l = 0; l < labels_.size(); ++l)
    if (leaf_at_[l] == v) out.push_back(Flag::leaf(l));
  for (int e = 0; e < num_edges(); ++e)
    if (edges_[e].first == v || edges_[e].second == v)
      out.push_back(Flag::edge(e));
  return out;
}

int StableTree::valence(int v) const {
  int n = 0;
  for (int l : leaf_at_)
    if (l == v) ++n;
  for (auto [a, b] : edges_)
    if (a == v || b == v) ++n;
  return n;
}

bool StableTree::operator==(const StableTree& o) const {
  return labels_ == o.labels_ && num_vertices_ == o.num_vertices_ &&
         edges_ == o.edges_ && leaf_at_ == o.leaf_at_;
}

std::string StableTree::encode() const {
  std::ostringstream os;
  os << num_vertices_ << '|';
  for (auto [a, b] : edges_) os << a << '-' << b << ',';
  os << '|';
  for (int v : leaf_at_) os << v << ',';
  return os.str();
}

StableTree one_vertex_tree(const LabelSet& labels) {
  return StableTree(labels, 1, {}, std::vector<int>(labels.size(), 0));
}

StableTree canonical_form(const StableTree& t) {
  const int V = t.num_vertices();
  if (V == 1) return t;
  auto adj = adjacency(t);
  auto leaves = leaves_per_vertex(t);

  std::vector<int> min_leaf(V, -1);
  std::function<int(int, int)> fill_min = [&](int v, int parent) {
    int m = t.labels().size();
    for (int l : leaves[v]) m = std::min(m, l);
    for (auto [w, e] : adj[v])
      if (w != parent) m = std::min(m, fill_min(w, v));
    min_leaf[v] = m;
    return m;
  };
  const int root = t.leaf_vertex(0);
  fill_min(root, -1);

  std::vector<int> new_leaf(t.labels().size(), -1);
  std::vector<std::pair<int, int>> new_edges;
  std::vector<int> nid(V, -1);
  int counter = 0;
  std::function<void(int, int)> walk = [&](int v, int parent) {
    nid[v] = counter++;
    for (int l : leaves[v]) new_leaf[l] = nid[v];
    std::vector<std::pair<int, int>> children;  // (min leaf, vertex)
    for (auto [w, e] : adj[v])
      if (w != parent) children.push_back({min_leaf[w], w});
    std::sort(children.begin(), children.end());
    for (auto [m, w] : children) {
      new_edges.push_back({nid[v], counter});
      walk(w, v);
    }
  };
  walk(root, -1);
  return StableTree(t.labels(), V, std::move(new_edges), std::move(new_leaf));
}

bool is_canonical(const StableTree& t) { return canonical_form(t) == t; }

StableTree split(const StableTree& t, int vertex,
                 const std::vector<Flag>& first_side) {
  auto all = t.flags(vertex);
  // membership and duplicates
  std::vector<bool> picked(all.size(), false);
  for (const Flag& f : first_side) {
    bool found = false;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (all[i] == f) {
        if (picked[i]) throw std::invalid_argument("flag listed twice");
        picked[i] = true;
        found = true;
        break;
      }
    if (!found) throw std::invalid_argument("flag not incident to vertex");
  }
  const int total = static_cast<int>(all.size());
  const int first = static_cast<int>(first_side.size());
  if (first < 2 || total - first < 2)
    throw std::invalid_argument("split sides need >= 2 flags each");

  const int fresh = t.num_vertices();
  auto edges = t.edges();
  auto leaf_at = t.leaf_vertices();
  for (const Flag& f : first_side) {
    if (f.kind == Flag::Kind::Leaf) {
      leaf_at[f.id] = fresh;
    } else {
      auto& [a, b] = edges[f.id];
      (a == vertex ? a : b) = fresh;
    }
  }
  edges.push_back({vertex, fresh});
  return StableTree(t.labels(), fresh + 1, std::move(edges),
                    std::move(leaf_at));
}

StableTree contract(const StableTree& t, int edge_index) {
  if (edge_index < 0 || edge_index >= t.num_edges())
    throw std::invalid_argument("edge not in tree");
  auto [a, b] = t.edges()[edge_index];
  const int keep = std::min(a, b), drop = std::max(a, b);
  auto renum = [&](int v) {
    if (v == drop) v = keep;
    return v > drop ? v - 1 : v;
  };
  std::vector<std::pair<int, int>> edges;
  for (int e = 0; e < t.num_edges(); ++e) {
    if (e == edge_index) continue;
    edges.push_back({renum(t.edges()[e].first), renum(t.edges()[e].second)});
  }
  std::vector<int> leaf_at;
  for (int v : t.leaf_vertices()) leaf_at.push_back(renum(v));
  return StableTree(t.labels(), t.num_vertices() - 1, std::move(edges),
                    std::move(leaf_at));
}

StableTree graft(const StableTree& host, const std::string& leaf,
                 const StableTree& guest, const std::string& root) {
  const int li = host.labels().index_of(leaf);
  const int ri = guest.labels().index_of(root);
  if (li < 0) throw std::invalid_argument("graft leaf missing from host");
  if (ri < 0) throw std::invalid_argument("graft root missing from guest");

  std::vector<std::string> names;
  std::set<std::string> host_names;
  for (int i = 0; i < host.labels().size(); ++i)
    if (i != li) {
      names.push_back(host.labels().name(i));
      host_names.insert(host.labels().name(i));
    }
  for (int i = 0; i < guest.labels().size(); ++i)
    if (i != ri) {
      const auto& n = guest.labels().name(i);
      if (host_names.count(n))
        throw std::invalid_argument("graft label sets overlap: " + n);
      names.push_back(n);
    }
  LabelSet merged(names);

  const int shift = host.num_vertices();
  std::vector<std::pair<int, int>> edges = host.edges();
  for (auto [a, b] : guest.edges()) edges.push_back({a + shift, b + shift});
  edges.push_back({host.leaf_vertex(li), guest.leaf_vertex(ri) + shift});

  std::vector<int> leaf_at(merged.size());
  int k = 0;
  for (int i = 0; i < host.labels().size(); ++i)
    if (i != li) leaf_at[k++] = host.leaf_vertex(i);
  for (int i = 0; i < guest.labels().size(); ++i)
    if (i != ri) leaf_at[k++] = guest.leaf_vertex(i) + shift;

  return StableTree(std::move(merged), host.num_vertices() + guest.num_vertices(),
                    std::move(edges), std::move(leaf_at));
}

StableTree relabel(const StableTree& t, const std::vector<int>& perm) {
  const int m = t.labels().size();
  if (static_cast<int>(perm.size()) != m)
    throw std::invalid_argument("permutation size mismatch");
  std::vector<bool> hit(m, false);
  for (int p : perm) {
    if (p < 0 || p >= m || hit[p])
      throw std::invalid_argument("not a permutation");
    hit[p] = true;
  }
  std::vector<int> leaf_at(m);
  for (int i = 0; i < m; ++i) leaf_at[perm[i]] = t.leaf_vertex(i);
  return StableTree(t.labels(), t.num_vertices(), t.edges(),
                    std::move(leaf_at));
}

std::vector<StableTree> all_splits(const StableTree& t,
                                   const SplitFilter& filter) {
  std::vector<StableTree> out;
  for (int v = 0; v < t.num_vertices(); ++v) {
    auto fl = t.flags(v);
    const int k = static_cast<int>(fl.size());
    if (k < 4) continue;
    // fl[0] pinned to the remaining side, so each unordered partition shows
    // up once
    for (unsigned mask = 0; mask < (1u << (k - 1)); ++mask) {
      std::vector<Flag> side;
      for (int i = 0; i < k - 1; ++i)
        if (mask & (1u << i)) side.push_back(fl[i + 1]);
      const int s = static_cast<int>(side.size());
      if (s < 2 || k - s < 2) continue;
      if (filter && !filter(t, v, side)) continue;
      out.push_back(canonical_form(split(t, v, side)));
    }
  }
  return out;
}

std::vector<StableTree> enumerate_stable_trees(const LabelSet& S,
                                               std::optional<int> grade,
                                               const SplitFilter& filter) {
  const int max_grade = S.size() - 3;
  if (grade && (*grade < 0 || *grade > max_grade))
    throw std::invalid_argument("grade out of range");
  const int upto = grade ? *grade : max_grade;

  std::vector<StableTree> current = {one_vertex_tree(S)};
  std::vector<StableTree> result;
  if (!grade || *grade == 0) result = current;
  for (int g = 1; g <= upto; ++g) {
    std::map<std::string, StableTree> level;
    for (const StableTree& t : current)
      for (StableTree& c : all_splits(t, filter))
        level.emplace(c.encode(), std::move(c));
    current.clear();
    for (auto& [key, t] : level) current.push_back(std::move(t));
    if (!grade) {
      result.insert(result.end(), current.begin(), current.end());
    } else if (*grade == g) {
      result = current;
    }
  }
  return result;
}

void write_tree_dot(std::ostream& out, const StableTree& t,
                    const std::string& name) {
  out << "graph \"" << name << "\" {\n";
  for (int v = 0; v < t.num_vertices(); ++v)
    out << "  v" << v << " [shape=circle,label=\"\"];\n";
  for (int l = 0; l < t.labels().size(); ++l)
    out << "  \"" << t.labels().name(l) << "\" [shape=box];\n";
  for (auto [a, b] : t.edges()) out << "  v" << a << " -- v" << b << ";\n";
  for (int l = 0; l < t.labels().size(); ++l)
    out << "  v" << t.leaf_vertex(l) << " -- \"" << t.labels().name(l)
        << "\";\n";
  out << "}\n";
}

Json tree_json(const StableTree& t) {
  Json j = Json::object();
  j.set("labels", Json::array_of(t.labels().names()));
  Json verts = Json::array();
  for (int v = 0; v < t.num_vertices(); ++v) verts.push_back(v);
  j.set("vertices", std::move(verts));
  Json edges = Json::array();
  for (auto [a, b] : t.edges()) {
    Json e = Json::array();
    e.push_back(a);
    e.push_back(b);
    edges.push_back(std::move(e));
  }
  j.set("edges", std::move(edges));
  Json leaves = Json::object();
  for (int l = 0; l < t.labels().size(); ++l)
    leaves.set(t.labels().name(l), t.leaf_vertex(l));
  j.set("leaves", std::move(leaves));
  return j;
}

}  // namespace m0n
