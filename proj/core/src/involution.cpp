#include "m0n/involution.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace m0n {

ProjPoint rho_point(const ProjPoint& x) {
  if (x.infinite) return x;
  return ProjPoint(1 - x.value);
}

Doubling doubling_map(const std::vector<Rational>& xs) {
  Doubling out;
  out.points = xs;
  for (const Rational& x : xs) out.points.push_back(1 - x);
  const Rational half = make_rational(1, 2);
  for (std::size_t i = 0; i < xs.size() && !out.meets_fix_locus; ++i) {
    if (xs[i] == half) out.meets_fix_locus = true;
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (xs[i] + xs[j] == 1) {
        out.meets_fix_locus = true;
        break;
      }
  }
  return out;
}

PairedLabelSet::PairedLabelSet(int pairs) : pairs_(pairs) {
  if (pairs < 0) throw std::invalid_argument("negative pair count");
  std::vector<std::string> names;
  for (int i = 1; i <= pairs; ++i) names.push_back("z" + std::to_string(i));
  for (int i = 1; i <= pairs; ++i) names.push_back("rz" + std::to_string(i));
  names.push_back("0");
  names.push_back("1");
  names.push_back("inf");
  labels_ = LabelSet(std::move(names));
}

int PairedLabelSet::z_index(int pair) const {
  if (pair < 0 || pair >= pairs_) throw std::invalid_argument("pair out of range");
  return pair;
}

int PairedLabelSet::rho_z_index(int pair) const {
  if (pair < 0 || pair >= pairs_) throw std::invalid_argument("pair out of range");
  return pairs_ + pair;
}

int PairedLabelSet::partner(int label_index) const {
  if (label_index < 0 || label_index >= size())
    throw std::invalid_argument("label index out of range");
  if (label_index < pairs_) return label_index + pairs_;
  if (label_index < 2 * pairs_) return label_index - pairs_;
  if (label_index == zero_index()) return one_index();
  if (label_index == one_index()) return zero_index();
  return infinity_index();
}

std::optional<PairedLabelSet> PairedLabelSet::recognize(const LabelSet& labels) {
  if (labels.size() < 3 || (labels.size() - 3) % 2 != 0) return std::nullopt;
  PairedLabelSet candidate((labels.size() - 3) / 2);
  if (candidate.labels() == labels) return candidate;
  return std::nullopt;
}

bool InvolutionOnLabels::is_identity() const {
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != static_cast<int>(i)) return false;
  return true;
}

InvolutionOnLabels InvolutionOnLabels::after(const InvolutionOnLabels& first) const {
  if (perm.size() != first.perm.size())
    throw std::invalid_argument("permutation size mismatch");
  InvolutionOnLabels out;
  out.perm.resize(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i)
    out.perm[i] = perm[first.perm[i]];
  return out;
}

InvolutionOnLabels label_involution(const PairedLabelSet& L) {
  InvolutionOnLabels inv;
  inv.perm.resize(L.size());
  for (int i = 0; i < L.size(); ++i) inv.perm[i] = L.partner(i);
  return inv;
}

StableTree induced_tree_action(const StableTree& t) {
  auto paired = PairedLabelSet::recognize(t.labels());
  if (!paired)
    throw std::invalid_argument("tree labels are not a paired label set");
  return canonical_form(relabel(t, label_involution(*paired).perm));
}

PairedConfig::PairedConfig(PairedLabelSet labels, std::vector<ProjPoint> z_values)
    : labels_(std::move(labels)), z_values_(std::move(z_values)) {
  if (static_cast<int>(z_values_.size()) != labels_.pairs())
    throw std::invalid_argument("one value per pair required");
}

PairedConfig PairedConfig::from_z(std::vector<ProjPoint> z_values) {
  PairedLabelSet labels(static_cast<int>(z_values.size()));
  return PairedConfig(std::move(labels), std::move(z_values));
}

ProjPoint PairedConfig::value(int label_index) const {
  const int p = labels_.pairs();
  if (label_index < 0 || label_index >= labels_.size())
    throw std::invalid_argument("label index out of range");
  if (label_index < p) return z_values_[label_index];
  if (label_index < 2 * p) return rho_point(z_values_[label_index - p]);
  if (label_index == labels_.zero_index()) return ProjPoint(Rational(0));
  if (label_index == labels_.one_index()) return ProjPoint(Rational(1));
  return ProjPoint::infinity();
}

namespace {

struct PointKey {
  bool infinite;
  Rational v;
  bool operator<(const PointKey& o) const {
    if (infinite != o.infinite) return o.infinite;
    return v < o.v;
  }
};

PointKey key_of(const ProjPoint& p) { return {p.infinite, p.value}; }

}  // namespace

NYStratumDescriptor classify_ny_config(const PairedConfig& c) {
  const PairedLabelSet& L = c.labels();
  const int p = c.pairs();
  const Rational half = make_rational(1, 2);

  // coincidence blocks over all 2p+3 points
  std::map<PointKey, std::vector<int>> blocks;
  for (int i = 0; i < L.size(); ++i) blocks[key_of(c.value(i))].push_back(i);

  NYStratumDescriptor out;
  int free_blocks = 0;
  for (const auto& [key, members] : blocks) {
    const bool at_half = !key.infinite && key.v == half;
    const bool at_frame =
        key.infinite || key.v == 0 || key.v == 1;
    std::vector<int> coords;
    for (int i : members)
      if (i < 2 * p) coords.push_back(i);
    if (at_half)
      for (int i : coords) out.half_incidences.push_back(L.labels().name(i));
    if (coords.size() >= 2) {
      std::vector<std::string> names;
      for (int i : coords) names.push_back(L.labels().name(i));
      out.collision_blocks.push_back(std::move(names));
    }
    if (!at_half && !at_frame && !coords.empty()) ++free_blocks;
  }
  // frame incidences, in frame order 0, 1, inf
  for (int f : {L.zero_index(), L.one_index(), L.infinity_index()}) {
    std::vector<std::string> names;
    const auto& members = blocks.at(key_of(c.value(f)));
    for (int i : members)
      if (i < 2 * p) names.push_back(L.labels().name(i));
    if (!names.empty())
      out.frame_incidences.push_back({L.labels().name(f), std::move(names)});
  }
  // free value-orbits {v, 1-v} carry one modulus each; everything else is
  // pinned, so codim = p - (#free blocks)/2
  out.codim = p - free_blocks / 2;
  return out;
}

Json NYStratumDescriptor::to_json() const {
  Json j = Json::object();
  j.set("codim", codim);
  Json blocks = Json::array();
  for (const auto& b : collision_blocks) blocks.push_back(Json::array_of(b));
  j.set("collision_blocks", std::move(blocks));
  j.set("half_incidences", Json::array_of(half_incidences));
  Json frame = Json::object();
  for (const auto& [name, coords] : frame_incidences)
    frame.set(name, Json::array_of(coords));
  j.set("frame_incidences", std::move(frame));
  return j;
}

bool in_fat_diagonal(const PairedConfig& c) {
  const int p = c.pairs();
  std::vector<ProjPoint> doubled;
  for (int i = 0; i < 2 * p; ++i) doubled.push_back(c.value(i));
  for (int i = 0; i < 2 * p; ++i)
    for (int j = i + 1; j < 2 * p; ++j)
      if (doubled[i] == doubled[j]) return true;
  return false;
}

int epsilon_stratify(const PairedConfig& c, const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  if (!in_fat_diagonal(c))
    throw std::domain_error("configuration has no collision");
  const Rational half = make_rational(1, 2);
  std::map<PointKey, int> block_sizes;
  for (const ProjPoint& z : c.z_values()) block_sizes[key_of(z)]++;
  int best = 0;
  for (const auto& [key, size] : block_sizes) {
    if (key.infinite) continue;
    Rational dist = key.v - half;
    if (dist < 0) dist = -dist;
    if (dist < eps) best = std::max(best, size);
  }
  return best;
}

bool flat_meets_fixed_locus(const Flat& f) {
  const Rational half = make_rational(1, 2);
  std::vector<Rational> all_half(f.span.dim(), half);
  return f.span.contains_point(all_half);
}

PairedLabelSet ny_compose(const PairedLabelSet& a, const std::string& slot,
                          const PairedLabelSet& b) {
  const int idx = a.labels().index_of(slot);
  if (idx < 0 || !a.is_z(idx))
    throw std::invalid_argument("composition slot must be a z-label of the host");
  return PairedLabelSet(a.pairs() + b.pairs() + 1);
}

StableTree ny_compose_trees(const PairedLabelSet& a, const std::string& slot,
                            const PairedLabelSet& b) {
  const int idx = a.labels().index_of(slot);
  if (idx < 0 || !a.is_z(idx))
    throw std::invalid_argument("composition slot must be a z-label of the host");

  auto prefixed = [&](const std::string& prefix) {
    std::vector<std::string> names;
    for (const auto& n : b.labels().names()) names.push_back(prefix + n);
    return one_vertex_tree(LabelSet(names));
  };
  StableTree host = one_vertex_tree(a.labels());
  StableTree once = graft(host, slot, prefixed("b:"), "b:0");
  // the mirrored bubble attaches at the partner slot, rooted at rho(0) = 1
  const std::string partner = a.labels().name(a.partner(idx));
  return canonical_form(graft(once, partner, prefixed("b':"), "b':1"));
}

bool monad_law_check(int max_pairs, int max_grade) {
  // grid of exact rationals, plus infinity
  for (int num = -10; num <= 10; ++num)
    for (int den = 1; den <= 7; ++den) {
      ProjPoint x(make_rational(num, den));
      if (rho_point(rho_point(x)) != x) return false;
    }
  if (rho_point(rho_point(ProjPoint::infinity())) != ProjPoint::infinity())
    return false;

  for (int p = 0; p <= 4; ++p) {
    InvolutionOnLabels inv = label_involution(PairedLabelSet(p));
    if (!inv.after(inv).is_identity()) return false;
  }

  for (int p = 0; p <= max_pairs; ++p) {
    PairedLabelSet L(p);
    const int top = L.size() - 3;
    for (int g = 0; g <= std::min(max_grade, top); ++g) {
      for (const StableTree& t : enumerate_stable_trees(L.labels(), g)) {
        StableTree once = induced_tree_action(t);
        if (once.codimension() != t.codimension()) return false;
        if (induced_tree_action(once) != canonical_form(t)) return false;
      }
    }
  }
  return true;
}

const std::vector<NYTableRow>& ny_stratum_table() {
  // The pair-collision pattern is listed twice in the source table; both
  // occurrences carry its actual codimension 1 here.
  static const std::vector<NYTableRow> rows = {
      {"generic", 0, {}, {}},
      {"one coordinate at 1/2", 1, {}, {1}},
      {"one pair collided", 1, {2}, {}},
      {"one triple collided", 2, {3}, {}},
      {"pair collided at 1/2", 2, {}, {2}},
      {"quadruple collided", 3, {4}, {}},
      {"triple collided at 1/2", 3, {}, {3}},
      {"pair collided, off 1/2", 1, {2}, {}},
      {"quintuple collided", 4, {5}, {}},
  };
  return rows;
}

PairedConfig ny_table_witness(const NYTableRow& row, int pairs) {
  int needed = 0;
  for (int b : row.generic_blocks) needed += b;
  for (int b : row.half_blocks) needed += b;
  if (pairs < needed)
    throw std::invalid_argument("not enough pairs for this pattern");
  if (row.half_blocks.size() > 1)
    throw std::invalid_argument("at most one block can sit at 1/2");

  // distinct generic values: all below 1/2, no two summing to 1
  static const int denominators[] = {7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  int next = 0;
  auto fresh = [&]() {
    if (next >= static_cast<int>(std::size(denominators)))
      throw std::invalid_argument("pattern too large for the witness pool");
    return make_rational(1, denominators[next++]);
  };

  std::vector<ProjPoint> zs;
  for (int b : row.generic_blocks) {
    Rational v = fresh();
    for (int i = 0; i < b; ++i) zs.emplace_back(v);
  }
  for (int b : row.half_blocks)
    for (int i = 0; i < b; ++i) zs.emplace_back(make_rational(1, 2));
  while (static_cast<int>(zs.size()) < pairs) zs.emplace_back(fresh());
  return PairedConfig::from_z(std::move(zs));
}

}  // namespace m0n
