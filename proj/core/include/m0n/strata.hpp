#pragma once

#include <ostream>
#include <utility>
#include <vector>

#include "m0n/json_writer.hpp"
#include "m0n/poly.hpp"
#include "m0n/stable_tree.hpp"

namespace m0n {

// One stratum of the compactified space: indexed by a canonical stable tree,
// codimension = edge count.
struct Stratum {
  StableTree tree;
  int codim;
  int dim;
};

// Stratification poset stored by explicit cover relations: (i, j) means
// strata[j].tree arises from strata[i].tree by one split, so codim goes up
// by exactly 1. Unique minimum is the one-vertex (open) stratum.
struct StrataPoset {
  LabelSet labels;
  std::vector<Stratum> strata;  // grouped by codim ascending, deterministic
  std::vector<std::pair<int, int>> cover_relations;

  std::vector<long long> counts_by_codim() const;
  // indices of all strata in the closure of strata[i] (transitive ascent,
  // including i itself)
  std::vector<int> closure(int i) const;
};

StrataPoset strata_poset(const LabelSet& S);

// All dimension-zero strata; their trees are trivalent and there are
// (2|S|-5)!! of them.
std::vector<Stratum> maximal_degenerations(const LabelSet& S);

// Number of (m-3)-tuples of pairwise distinct points of P^1(F_q) avoiding
// {0,1,inf}: the product (q-2)(q-3)...(q-(m-2)).
IntPoly open_stratum_count_poly(int m);

// Point count of the whole compactified space: sum over strata of the
// product of open vertex counts. Palindromic of degree |S|-3.
IntPoly compactified_count_poly(const LabelSet& S);

// Even Betti numbers b_0, b_2, ... read off compactified_count_poly; the odd
// ones all vanish.
std::vector<long long> betti_numbers(const LabelSet& S);

// Hasse diagram of the cover relations.
void write_hasse_dot(std::ostream& out, const StrataPoset& poset);

// {"n":..., "counts_by_codim":[...], "betti":[...], "count_poly":[...]}
Json strata_json(const LabelSet& S);

}  // namespace m0n
