#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "m0n/arrangement.hpp"
#include "m0n/json_writer.hpp"
#include "m0n/rational.hpp"
#include "m0n/stable_tree.hpp"

namespace m0n {

// The holomorphic involution x -> 1-x, extended over the projective line
// (infinity is fixed). Unique finite fixed point 1/2.
ProjPoint rho_point(const ProjPoint& x);

// (x_1..x_p) -> (x_1..x_p, 1-x_1..1-x_p). The flag marks a collision with
// the fixed locus: some x_i = 1/2, or x_i + x_j = 1 for i != j.
struct Doubling {
  std::vector<Rational> points;
  bool meets_fix_locus = false;
};
Doubling doubling_map(const std::vector<Rational>& xs);

// Marked-point labels z1..zp, rz1..rzp, 0, 1, inf (in this order) with the
// pairing z_i <-> rz_i. Total size 2p + 3.
class PairedLabelSet {
 public:
  explicit PairedLabelSet(int pairs);

  int pairs() const { return pairs_; }
  const LabelSet& labels() const { return labels_; }
  int size() const { return labels_.size(); }

  int z_index(int pair) const;
  int rho_z_index(int pair) const;
  int zero_index() const { return 2 * pairs_; }
  int one_index() const { return 2 * pairs_ + 1; }
  int infinity_index() const { return 2 * pairs_ + 2; }
  bool is_z(int label_index) const {
    return label_index >= 0 && label_index < pairs_;
  }
  // image under the canonical involution: z_i <-> rz_i, 0 <-> 1, inf fixed
  int partner(int label_index) const;

  // recognizes a label set of the paired shape; empty when it is not one
  static std::optional<PairedLabelSet> recognize(const LabelSet& labels);

 private:
  int pairs_;
  LabelSet labels_;
};

// Order-2 permutation of a paired label set.
struct InvolutionOnLabels {
  std::vector<int> perm;

  bool is_identity() const;
  InvolutionOnLabels after(const InvolutionOnLabels& first) const;
};
InvolutionOnLabels label_involution(const PairedLabelSet& L);

// Relabel by the canonical involution and canonicalize. Requires the tree's
// label set to have the paired shape; preserves grade and stability, and
// applying it twice gives canonical_form(t).
StableTree induced_tree_action(const StableTree& t);

// Paired configuration: values for z_1..z_p; the mirrors rz_i = 1 - z_i and
// the frame 0, 1, inf are derived, so the pairing invariant holds by
// construction.
class PairedConfig {
 public:
  PairedConfig(PairedLabelSet labels, std::vector<ProjPoint> z_values);
  static PairedConfig from_z(std::vector<ProjPoint> z_values);

  int pairs() const { return labels_.pairs(); }
  const PairedLabelSet& labels() const { return labels_; }
  const std::vector<ProjPoint>& z_values() const { return z_values_; }
  ProjPoint value(int label_index) const;

 private:
  PairedLabelSet labels_;
  std::vector<ProjPoint> z_values_;
};

// Which stratum a configuration sits on: coincidence blocks among the 2p
// non-frame coordinates, the coordinates pinned at 1/2, incidences with the
// frame, and the resulting codimension in the p-dimensional parametrization.
struct NYStratumDescriptor {
  int codim = 0;
  std::vector<std::vector<std::string>> collision_blocks;
  std::vector<std::string> half_incidences;
  std::vector<std::pair<std::string, std::vector<std::string>>> frame_incidences;

  Json to_json() const;
};
NYStratumDescriptor classify_ny_config(const PairedConfig& c);

// True when some two of the 2p doubled coordinates coincide (this includes
// z_i = 1/2, where a coordinate meets its own mirror).
bool in_fat_diagonal(const PairedConfig& c);

// Largest j such that j mutually equal z-coordinates lie within eps of 1/2
// (their common value v satisfies |v - 1/2| < eps); 0 when no coordinate is
// near 1/2. Requires the configuration to lie in the fat diagonal.
int epsilon_stratify(const PairedConfig& c, const Rational& eps);

// True iff the flat contains a point of the coordinatewise fixed locus,
// i.e. the all-1/2 point satisfies its equations; exactly then the flat and
// its mirror image form a connected union.
bool flat_meets_fixed_locus(const Flat& f);

// Paired composition at a z-slot of `a`: arities add as p + p' + 1, matching
// the 1-pair x 2-pair -> 4-pair gluing (5 and 7 marked points to 11). The
// underlying tree operation grafts `b` at the slot and mirrors the graft of
// the involuted copy at the partner slot.
PairedLabelSet ny_compose(const PairedLabelSet& a, const std::string& slot,
                          const PairedLabelSet& b);

// The tree-level picture of the composition: the guest grafted at the slot
// (rooted at its 0) and the label-involuted copy grafted at the partner slot
// (rooted at its 1), guest labels prefixed "b:" and "b':". Two internal
// edges; both bubbles mirror each other across the host.
StableTree ny_compose_trees(const PairedLabelSet& a, const std::string& slot,
                            const PairedLabelSet& b);

// rho_point twice is the identity on a grid of exact rationals (plus inf),
// label_involution squares to the identity for p <= 4, and the induced tree
// action squares to canonical_form while preserving grade, over all trees of
// grade <= max_grade with p <= max_pairs.
bool monad_law_check(int max_pairs = 2, int max_grade = 2);

// The stratum table rows: a collision pattern (block sizes at generic
// values, block sizes pinned at 1/2) with its codimension.
struct NYTableRow {
  std::string name;
  int codim;
  std::vector<int> generic_blocks;
  std::vector<int> half_blocks;
};
const std::vector<NYTableRow>& ny_stratum_table();

// A generic witness configuration realizing exactly this row's pattern.
PairedConfig ny_table_witness(const NYTableRow& row, int pairs);

}  // namespace m0n
