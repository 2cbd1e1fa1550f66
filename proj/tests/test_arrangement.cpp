#include <doctest.h>

#include "m0n/arrangement.hpp"
#include "m0n/strata.hpp"
#include "test_oracles.hpp"

using namespace m0n;

namespace {

IntPoly prod_one_plus(int lo, int hi) {
  IntPoly p = IntPoly::one();
  for (int j = lo; j <= hi; ++j) p = p * IntPoly::one_plus(j);
  return p;
}

}  // namespace

TEST_SUITE("arrangements") {

TEST_CASE("duplicate hyperplanes are rejected") {
  Arrangement A(2);
  A.add({Rational(1), Rational(0)}, 0);
  CHECK_THROWS_AS(A.add({Rational(2), Rational(0)}, 0), std::invalid_argument);
  CHECK_FALSE(A.add_if_absent({Rational(1), Rational(0)}, 0));
  CHECK_THROWS_AS(Hyperplane::make({Rational(0), Rational(0)}, 1),
                  std::invalid_argument);
}

TEST_CASE("poset of a single hyperplane in the plane") {
  Arrangement A(2);
  A.add({Rational(1), Rational(1)}, 1);
  auto poset = intersection_poset(A);
  CHECK(poset.flats.size() == 2);
  CHECK(poset.flat_counts_by_codim() == std::vector<long long>{1, 1});
}

TEST_CASE("poset of the 3-coordinate braid arrangement") {
  auto poset = intersection_poset(braid_arrangement(3));
  // ambient, three planes, one triple line
  CHECK(poset.flat_counts_by_codim() == std::vector<long long>{1, 3, 1});
}

TEST_CASE("poset of the 5-point moduli arrangement") {
  auto poset = intersection_poset(m0n_arrangement(5));
  CHECK(poset.flat_counts_by_codim()[1] == 5);
  // pairwise intersections with concurrences identified: the four points
  // (0,0), (0,1), (1,0), (1,1); the triple points carry Mobius value 2, so
  // the Mobius sum in codim 2 is 6
  CHECK(poset.flat_counts_by_codim()[2] == 4);
  long long mobius_sum = 0;
  for (std::size_t i = 0; i < poset.flats.size(); ++i)
    if (poset.flats[i].codim == 2) mobius_sum += poset.mobius[i];
  CHECK(mobius_sum == 6);
}

TEST_CASE("characteristic polynomial basics") {
  Arrangement empty(3);
  CHECK(characteristic_polynomial(empty) == IntPoly({0, 0, 0, 1}));

  Arrangement three_points(1);
  three_points.add({Rational(1)}, 0);
  three_points.add({Rational(1)}, 1);
  three_points.add({Rational(1)}, make_rational(5, 7));
  CHECK(characteristic_polynomial(three_points) == IntPoly({-3, 1}));
}

TEST_CASE("braid characteristic polynomial is falling factorial") {
  for (int n = 2; n <= 5; ++n) {
    IntPoly expect = IntPoly({0, 1});  // q
    for (int j = 1; j < n; ++j) expect = expect * IntPoly::x_minus(j);
    CHECK(characteristic_polynomial(braid_arrangement(n)) == expect);
  }
}

TEST_CASE("poincare polynomials of the builders") {
  CHECK(poincare_complement(braid_arrangement(3)).dims ==
        std::vector<long long>{1, 3, 2});
  for (int n = 2; n <= 6; ++n)
    CHECK(poincare_complement(braid_arrangement(n)).dims ==
          prod_one_plus(1, n - 1).c);
  for (int n = 4; n <= 8; ++n)
    CHECK(poincare_complement(m0n_arrangement(n)).dims ==
          prod_one_plus(2, n - 2).c);
}

TEST_CASE("complement Betti entries 0 and 1") {
  for (const Arrangement& A :
       {braid_arrangement(4), m0n_arrangement(6), ny_arrangement(3),
        grav_ny_factor_arrangement(5)}) {
    auto dims = poincare_complement(A).dims;
    CHECK(dims[0] == 1);
    CHECK(dims[1] == A.size());
  }
}

TEST_CASE("broken-circuit oracle agrees on central arrangements") {
  for (int n = 2; n <= 5; ++n)
    CHECK(poincare_complement(braid_arrangement(n)).dims ==
          oracle::nbc_betti(braid_arrangement(n)));
}

TEST_CASE("builder shapes") {
  CHECK(m0n_arrangement(4).size() == 2);
  CHECK(m0n_arrangement(5).size() == 5);
  CHECK(ny_arrangement(1).size() == 3);
  CHECK(ny_arrangement(2).size() == 8);
  CHECK(ny_arrangement(3).size() == 15);
  CHECK(grav_ny_factor_arrangement(4).size() == 3);
  CHECK_THROWS_AS(m0n_arrangement(3), std::invalid_argument);
  CHECK_THROWS_AS(ny_arrangement(0), std::invalid_argument);
  CHECK_THROWS_AS(braid_arrangement(1), std::invalid_argument);
}

TEST_CASE("paired builder complements factor as odd falling products") {
  // fibering off one coordinate at a time removes 3, 5, 7, ... points
  CHECK(poincare_complement(ny_arrangement(1)).dims ==
        std::vector<long long>{1, 3});
  CHECK(poincare_complement(ny_arrangement(2)).dims ==
        (IntPoly::one_plus(3) * IntPoly::one_plus(5)).c);
  CHECK(poincare_complement(ny_arrangement(3)).dims ==
        (IntPoly::one_plus(3) * IntPoly::one_plus(5) * IntPoly::one_plus(7)).c);
}

TEST_CASE("deletion-restriction identity") {
  Arrangement single(2);
  single.add({Rational(1), Rational(2)}, 3);
  CHECK(deletion_restriction_check(single, 0));
  for (int i = 0; i < braid_arrangement(4).size(); ++i)
    CHECK(deletion_restriction_check(braid_arrangement(4), i));
  for (int i = 0; i < ny_arrangement(2).size(); ++i)
    CHECK(deletion_restriction_check(ny_arrangement(2), i));
  CHECK_THROWS_AS(deletion_restriction_check(braid_arrangement(3), 9),
                  std::invalid_argument);
}

TEST_CASE("finite-field point counts pin the polynomial") {
  for (long long p : {101ll, 103ll}) {
    CHECK(characteristic_polynomial(braid_arrangement(3)).eval(p) ==
          complement_count_fp(braid_arrangement(3), p));
    CHECK(characteristic_polynomial(m0n_arrangement(5)).eval(p) ==
          complement_count_fp(m0n_arrangement(5), p));
    CHECK(characteristic_polynomial(ny_arrangement(2)).eval(p) ==
          complement_count_fp(ny_arrangement(2), p));
  }
  // denominators must be invertible
  Arrangement bad(1);
  bad.add({Rational(1)}, make_rational(1, 101));
  CHECK_THROWS_AS(complement_count_fp(bad, 101), std::domain_error);
}

TEST_CASE("gravity dimensions") {
  CHECK(grav_dims(3).dims == std::vector<long long>{1});
  CHECK(grav_dims(4).dims == std::vector<long long>{1, 2});
  CHECK(grav_dims(5).dims == std::vector<long long>{1, 5, 6});
  CHECK(grav_dims(3).suspension == 1);
  CHECK_THROWS_AS(grav_dims(2), std::invalid_argument);
}

TEST_CASE("paired gravity dimensions via the Kunneth square") {
  CHECK(grav_ny_factor_dims(4).dims == std::vector<long long>{1, 3});
  CHECK(grav_ny_dims(3).dims == std::vector<long long>{1});
  CHECK(grav_ny_dims(4).dims == std::vector<long long>{1, 6, 9});
  // the suspension convention flag moves the shift, not the dims
  CHECK(grav_ny_dims(5, true).dims == grav_ny_dims(5, false).dims);
  CHECK(grav_ny_dims(5, false).suspension == 1);
  CHECK(grav_ny_dims(5, true).suspension == 2);
}

TEST_CASE("Kunneth square against the product-arrangement oracle") {
  for (int n = 4; n <= 5; ++n) {
    Arrangement factor = grav_ny_factor_arrangement(n);
    Arrangement prod = oracle::product_arrangement(factor, factor);
    CHECK(grav_ny_dims(n).dims == poincare_complement(prod).dims);
  }
}

TEST_CASE("residue dimension bookkeeping on one-edge trees") {
  LabelSet S4 = LabelSet::integer_range(1, 4);
  StableTree t4(S4, 2, {{0, 1}}, {0, 0, 1, 1});
  ResidueCheck c4 = residue_dim_check(t4);
  CHECK(c4.ok);
  CHECK(c4.stratum_dims == std::vector<long long>{1});
  CHECK(c4.degree_shift == 1);
  CHECK(c4.tate_twist == 1);

  LabelSet S5 = LabelSet::integer_range(1, 5);
  StableTree t5(S5, 2, {{0, 1}}, {0, 0, 1, 1, 1});
  ResidueCheck c5 = residue_dim_check(t5);
  CHECK(c5.ok);
  CHECK(c5.stratum_dims == std::vector<long long>{1, 2});

  LabelSet S6 = LabelSet::integer_range(1, 6);
  StableTree t6(S6, 2, {{0, 1}}, {0, 0, 0, 1, 1, 1});
  ResidueCheck c6 = residue_dim_check(t6);
  CHECK(c6.ok);
  CHECK(c6.stratum_dims == std::vector<long long>{1, 4, 4});

  CHECK_THROWS_AS(residue_dim_check(one_vertex_tree(S4)),
                  std::invalid_argument);
}

TEST_CASE("random arrangements: chi pinned by two primes, dr identity") {
  // deterministic LCG; coefficients in {-2..2}, offsets in {0, 1, 1/2, -1}
  unsigned state = 12345;
  auto next = [&] { return state = state * 1664525u + 1013904223u; };
  const Rational offsets[] = {Rational(0), Rational(1), make_rational(1, 2),
                              Rational(-1)};
  for (int trial = 0; trial < 12; ++trial) {
    const int dim = 2 + static_cast<int>(next() % 2);
    Arrangement A(dim);
    const int wanted = 3 + static_cast<int>(next() % 3);
    while (A.size() < wanted) {
      std::vector<Rational> normal(dim);
      bool nonzero = false;
      for (int c = 0; c < dim; ++c) {
        normal[c] = static_cast<long>(next() % 5) - 2;
        if (normal[c] != 0) nonzero = true;
      }
      if (!nonzero) continue;
      A.add_if_absent(std::move(normal), offsets[next() % 4]);
    }
    IntPoly chi = characteristic_polynomial(A);
    for (long long p : {101ll, 103ll})
      CHECK(chi.eval(p) == complement_count_fp(A, p));
    for (int i = 0; i < A.size(); ++i) CHECK(deletion_restriction_check(A, i));
  }
}

TEST_CASE("restriction geometry") {
  // restricting x = y in the plane to x = 0 leaves the point y = 0
  Arrangement A(2);
  A.add({Rational(1), Rational(0)}, 0);       // x = 0
  A.add({Rational(1), Rational(-1)}, 0);      // x = y
  A.add({Rational(1), Rational(0)}, 1);       // x = 1, parallel to x = 0
  Arrangement R = A.restriction(0);
  CHECK(R.dim() == 1);
  CHECK(R.size() == 1);  // the parallel wall leaves no trace
}

}  // TEST_SUITE
