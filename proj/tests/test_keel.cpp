#include <doctest.h>

#include "m0n/keel.hpp"
#include "m0n/strata.hpp"

using namespace m0n;

namespace {

KeelRing ring_n(int n) { return KeelRing(LabelSet::integer_range(1, n)); }

DivisorClass of_labels(const KeelRing& r, std::vector<int> labels_1based) {
  std::uint32_t mask = 0;
  for (int l : labels_1based) mask |= 1u << (l - 1);
  return DivisorClass(mask, r.labels().size());
}

}  // namespace

TEST_SUITE("keel_ring") {

TEST_CASE("divisor class normalization and counts") {
  KeelRing r5 = ring_n(5);
  // D_{1,2} and D_{3,4,5} are the same class
  CHECK(of_labels(r5, {1, 2}) == of_labels(r5, {3, 4, 5}));
  CHECK(ring_n(4).classes().size() == 3);
  CHECK(r5.classes().size() == 10);
  CHECK(ring_n(6).classes().size() == 25);
  CHECK_THROWS_AS(ring_n(3), std::invalid_argument);
  // blocks of size 1 rejected
  CHECK_THROWS_AS(DivisorClass(1u << 1, 5), std::invalid_argument);
}

TEST_CASE("class count equals the codim-1 strata count") {
  for (int n = 4; n <= 7; ++n)
    CHECK(ring_n(n).classes().size() ==
          enumerate_stable_trees(LabelSet::integer_range(1, n), 1).size());
}

TEST_CASE("crossing predicate") {
  KeelRing r5 = ring_n(5);
  CHECK(is_crossing(of_labels(r5, {2, 3}), of_labels(r5, {3, 4})));
  CHECK_FALSE(is_crossing(of_labels(r5, {2, 3}), of_labels(r5, {2, 3})));
  CHECK_FALSE(is_crossing(of_labels(r5, {2, 3}), of_labels(r5, {4, 5})));
  // symmetric
  CHECK(is_crossing(of_labels(r5, {3, 4}), of_labels(r5, {2, 3})));
}

TEST_CASE("crossing is representative-independent") {
  KeelRing r6 = ring_n(6);
  const auto& cs = r6.classes();
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) {
      // all four literal readings S cap T notin {0,S,T}, S cup T != all
      auto crossing_literal = [&](std::uint32_t S, std::uint32_t T) {
        const std::uint32_t full = (1u << 6) - 1;
        std::uint32_t inter = S & T;
        return inter != 0 && inter != S && inter != T && (S | T) != full;
      };
      bool verdicts[4] = {
          crossing_literal(cs[i].rep_mask(), cs[j].rep_mask()),
          crossing_literal(cs[i].rep_mask(), cs[j].complement_mask()),
          crossing_literal(cs[i].complement_mask(), cs[j].rep_mask()),
          crossing_literal(cs[i].complement_mask(), cs[j].complement_mask())};
      for (bool v : verdicts) CHECK(v == is_crossing(cs[i], cs[j]));
    }
}

TEST_CASE("four-point relation on 4 labels: one term each side") {
  KeelRing r4 = ring_n(4);
  KeelElement rel = r4.four_point_relation(0, 1, 2, 3);
  // D separating {1,2}|{3,4} minus D separating {1,3}|{2,4}
  KeelElement expected =
      r4.element({{{r4.class_index(of_labels(r4, {3, 4}))}, Rational(1)},
                  {{r4.class_index(of_labels(r4, {2, 4}))}, Rational(-1)}});
  CHECK(rel == expected);
}

TEST_CASE("four-point relation symmetries") {
  KeelRing r5 = ring_n(5);
  KeelElement r = r5.four_point_relation(0, 1, 2, 3);
  CHECK(r5.four_point_relation(0, 2, 1, 3) == -r);   // swap j <-> k
  CHECK(r5.four_point_relation(2, 3, 0, 1) == r);    // swap (i,j) <-> (k,l)
  CHECK_THROWS_AS(r5.four_point_relation(0, 0, 1, 2), std::invalid_argument);
}

TEST_CASE("graded dimensions for n = 4, 5, 6") {
  CHECK(ring_n(4).all_graded_dimensions() == std::vector<long long>{1, 1});
  CHECK(ring_n(5).all_graded_dimensions() == std::vector<long long>{1, 5, 1});
  CHECK(ring_n(6).all_graded_dimensions() ==
        std::vector<long long>{1, 16, 16, 1});
  CHECK_THROWS_AS(ring_n(5).graded_dimension(3), std::domain_error);
}

TEST_CASE("degree-1 rank for n = 5 is 5") {
  KeelRing r5 = ring_n(5);
  CHECK(r5.classes().size() - r5.graded_dimension(1) == 5);
}

TEST_CASE("two-oracle agreement with point counting") {
  for (int n = 4; n <= 6; ++n) {
    LabelSet S = LabelSet::integer_range(1, n);
    CHECK(KeelRing(S).all_graded_dimensions() == betti_numbers(S));
  }
}

TEST_CASE("Poincare duality of graded dimensions") {
  for (int n = 4; n <= 6; ++n) {
    KeelRing r = ring_n(n);
    auto dims = r.all_graded_dimensions();
    for (int d = 0; d <= r.top_degree(); ++d)
      CHECK(dims[d] == dims[r.top_degree() - d]);
  }
}

TEST_CASE("normal form kills the ideal") {
  KeelRing r5 = ring_n(5);
  const int m = r5.labels().size();
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (int c = b + 1; c < m; ++c)
        for (int d = c + 1; d < m; ++d)
          CHECK(r5.normal_form(r5.four_point_relation(a, b, c, d)).is_zero());
  // crossing products
  const auto& cs = r5.classes();
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i; j < cs.size(); ++j)
      if (is_crossing(cs[i], cs[j])) {
        Monomial mono = {static_cast<int>(i), static_cast<int>(j)};
        CHECK(r5.normal_form(r5.monomial_element(mono)).is_zero());
      }
}

TEST_CASE("normal form is linear and idempotent") {
  KeelRing r5 = ring_n(5);
  // deterministic pseudo-random degree-1 elements
  for (int seed = 0; seed < 10; ++seed) {
    KeelElement x;
    x.degree = 1;
    for (int i = 0; i < 10; ++i) {
      Rational coeff = make_rational((seed * 7 + i * 3) % 11 - 5, i + 1);
      if (coeff != 0) x.terms[{i}] = coeff;
    }
    KeelElement once = r5.normal_form(x);
    CHECK(r5.normal_form(once) == once);
    // linearity: nf(x + x) = 2 nf(x)
    CHECK(r5.normal_form(x + x) == once + once);
  }
}

TEST_CASE("normal form of a product of non-crossing generators survives") {
  KeelRing r4 = ring_n(4);
  // top degree of the 4-label ring is 1-dimensional; any single class maps
  // to a nonzero normal form
  KeelElement d = r4.monomial_element({0});
  CHECK_FALSE(r4.normal_form(d).is_zero());
}

TEST_CASE("quotient basis sizes match dimensions") {
  KeelRing r6 = ring_n(6);
  for (int d = 0; d <= 3; ++d)
    CHECK(static_cast<long long>(r6.quotient_basis(d).size()) ==
          r6.graded_dimension(d));
}

TEST_CASE("degree bounds") {
  KeelRing r5 = ring_n(5);
  KeelElement too_deep;
  too_deep.degree = 7;
  too_deep.terms[{0, 0, 0, 0, 0, 0, 0}] = 1;
  CHECK_THROWS_AS(r5.normal_form(too_deep), std::domain_error);
}

}  // TEST_SUITE
