#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "m0n/json_writer.hpp"
#include "m0n/label_set.hpp"
#include "m0n/linalg.hpp"
#include "m0n/rational.hpp"

namespace m0n {

// Boundary divisor class D_S modulo the complement symmetry D_S = D_{S^c}:
// stored as the block of the 2-block partition not containing the smallest
// label. Both blocks must have >= 2 elements.
class DivisorClass {
 public:
  // Accepts either block of the partition and normalizes.
  DivisorClass(std::uint32_t block_mask, int ambient_size);

  std::uint32_t rep_mask() const { return rep_; }
  std::uint32_t complement_mask() const;
  int ambient_size() const { return ambient_; }
  std::vector<int> rep_indices() const;

  bool operator==(const DivisorClass& o) const {
    return rep_ == o.rep_ && ambient_ == o.ambient_;
  }
  bool operator<(const DivisorClass& o) const { return rep_ < o.rep_; }

 private:
  std::uint32_t rep_;
  int ambient_;
};

// True iff the two partitions cross: all four pairwise block intersections
// are nonempty. Crossing products vanish in the ring. The verdict does not
// depend on the representative chosen for either class.
bool is_crossing(const DivisorClass& a, const DivisorClass& b);

// Weakly increasing list of divisor-class indices (a monomial as multiset).
using Monomial = std::vector<int>;

// Homogeneous element of the boundary-divisor ring.
struct KeelElement {
  int degree = 0;
  std::map<Monomial, Rational> terms;  // zero coefficients pruned

  bool is_zero() const { return terms.empty(); }
  KeelElement operator+(const KeelElement& o) const;
  KeelElement operator-() const;
  KeelElement operator-(const KeelElement& o) const { return *this + (-o); }
  KeelElement scaled(const Rational& c) const;
  bool operator==(const KeelElement& o) const {
    return degree == o.degree && terms == o.terms;
  }
};

// The boundary-divisor presentation of the cohomology ring of the
// compactified space on a label set S (|S| >= 4): generators D_S, linear
// four-point relations and vanishing crossing products. Graded dimensions
// come from exact integer row reduction per degree; the pivot basis is
// deterministic (deg-lex monomial order).
class KeelRing {
 public:
  explicit KeelRing(LabelSet S);

  const LabelSet& labels() const { return labels_; }
  const std::vector<DivisorClass>& classes() const { return classes_; }
  int class_index(const DivisorClass& c) const;
  int top_degree() const { return labels_.size() - 3; }

  // sum over classes separating {i,j | k,l} minus sum separating {i,k | j,l};
  // arguments are label indices, pairwise distinct
  KeelElement four_point_relation(int i, int j, int k, int l) const;

  KeelElement element(std::vector<std::pair<Monomial, Rational>> terms) const;
  KeelElement monomial_element(Monomial m) const;

  // dimension of the degree-d piece of the quotient; equals b_{2d}
  long long graded_dimension(int degree);
  std::vector<long long> all_graded_dimensions();

  // canonical representative modulo the relation ideal; linear, idempotent,
  // kills the ideal
  KeelElement normal_form(const KeelElement& x);

  // monomials spanning the degree-d quotient (the non-pivot ones)
  std::vector<Monomial> quotient_basis(int degree);

  std::string class_str(int class_index) const;
  std::string monomial_str(const Monomial& m) const;

 private:
  struct DegreeData {
    std::vector<Monomial> monomials;  // crossing-free, deg-lex order
    std::map<Monomial, int> index;
    SparseEchelon echelon;  // finalized
  };

  std::vector<Monomial> crossing_free_monomials(int degree) const;
  DegreeData& degree_data(int degree);
  void check_degree(int degree) const;

  LabelSet labels_;
  std::vector<DivisorClass> classes_;
  std::vector<std::vector<bool>> crossing_;
  std::map<int, DegreeData> cache_;
};

}  // namespace m0n
