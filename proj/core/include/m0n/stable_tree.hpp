#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "m0n/json_writer.hpp"
#include "m0n/label_set.hpp"

namespace m0n {

// A flag at a vertex: a labeled leaf or one half of an internal edge.
struct Flag {
  enum class Kind { Leaf, Edge };
  Kind kind;
  int id;  // Leaf: label index into the tree's label set; Edge: edge index

  static Flag leaf(int label_index) { return {Kind::Leaf, label_index}; }
  static Flag edge(int edge_index) { return {Kind::Edge, edge_index}; }
  bool operator==(const Flag& o) const { return kind == o.kind && id == o.id; }
};

// Dual graph of a genus-zero stable labeled curve: a tree whose vertices each
// carry at least 3 flags and whose leaves exhaust the label set. Edges are
// ordered vertex pairs (v, w); the two half-edges of edge e are its
// attachments at v and at w. Values are immutable after construction and
// every operation below returns a fresh tree.
class StableTree {
 public:
  // Validates connectivity, acyclicity, stability and the leaf partition;
  // throws std::invalid_argument on violation.
  StableTree(LabelSet labels, int num_vertices,
             std::vector<std::pair<int, int>> edges, std::vector<int> leaf_at);

  const LabelSet& labels() const { return labels_; }
  int num_vertices() const { return num_vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int codimension() const { return num_edges(); }
  int leaf_vertex(int label_index) const { return leaf_at_.at(label_index); }
  const std::vector<int>& leaf_vertices() const { return leaf_at_; }

  // Flags incident to v: leaves by ascending label index, then edges by
  // ascending edge index.
  std::vector<Flag> flags(int v) const;
  int valence(int v) const;

  bool operator==(const StableTree& o) const;
  bool operator!=(const StableTree& o) const { return !(*this == o); }

  // Compact deterministic encoding; equal strings iff equal structures.
  std::string encode() const;

 private:
  LabelSet labels_;
  int num_vertices_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> leaf_at_;
};

StableTree one_vertex_tree(const LabelSet& labels);

// Deterministic normal form: rooted at the vertex carrying the smallest
// label, children ordered by the minimal leaf label of their subtree,
// vertices renumbered in preorder. Two trees over the same label set are
// isomorphic iff their canonical forms compare equal.
StableTree canonical_form(const StableTree& t);
bool is_canonical(const StableTree& t);

// Accepts or rejects a candidate flag partition at `vertex`; `first_side`
// lists the flags moving to the new vertex. Splits are unconstrained by
// default; pass a filter to impose extra invariance (e.g. closure under a
// label involution).
using SplitFilter =
    std::function<bool(const StableTree&, int vertex,
                       const std::vector<Flag>& first_side)>;

// One canonical representative per isomorphism class; `grade` restricts to
// trees with that many edges. Deterministic order: by grade, then by
// encoding. Generated by iterated splitting from the one-vertex tree; a
// filter restricts which splits are taken at every step.
std::vector<StableTree> enumerate_stable_trees(const LabelSet& S,
                                               std::optional<int> grade = {},
                                               const SplitFilter& filter = {});

// Replace `vertex` by two vertices joined by a new edge, `first_side` flags
// on the far one. Both sides need >= 2 flags so stability is preserved.
StableTree split(const StableTree& t, int vertex,
                 const std::vector<Flag>& first_side);

// Canonical forms of every admissible one-vertex split of t, one entry per
// (vertex, unordered flag partition); duplicates possible across vertices.
std::vector<StableTree> all_splits(const StableTree& t,
                                   const SplitFilter& filter = {});

// Merge the endpoints of an internal edge; inverse of split up to canonical
// form.
StableTree contract(const StableTree& t, int edge_index);

// Fuse the leaf edge of `host` at `leaf` with the leaf edge of `guest` at
// `root` into one internal edge. Remaining labels must be disjoint.
StableTree graft(const StableTree& host, const std::string& leaf,
                 const StableTree& guest, const std::string& root);

// Move the leaf carrying label i to label perm[i]; perm must be a
// permutation of the label indices.
StableTree relabel(const StableTree& t, const std::vector<int>& perm);

// Graphviz export: leaves boxed, internal vertices circles, deterministic
// node ordering.
void write_tree_dot(std::ostream& out, const StableTree& t,
                    const std::string& name = "tree");

// {"labels": [...], "vertices": [...], "edges": [[v,w],...],
//  "leaves": {"label": vertex}}
Json tree_json(const StableTree& t);

}  // namespace m0n
