#include <doctest.h>

#include <set>
#include <sstream>
#include <thread>

#include "m0n/strata.hpp"
#include "test_oracles.hpp"

using namespace m0n;

TEST_SUITE("strata") {

TEST_CASE("poset shapes for small n") {
  StrataPoset p3 = strata_poset(LabelSet::integer_range(1, 3));
  CHECK(p3.strata.size() == 1);
  CHECK(p3.cover_relations.empty());

  StrataPoset p4 = strata_poset(LabelSet::integer_range(1, 4));
  CHECK(p4.counts_by_codim() == std::vector<long long>{1, 3});
  CHECK(p4.cover_relations.size() == 3);

  StrataPoset p5 = strata_poset(LabelSet::integer_range(1, 5));
  CHECK(p5.counts_by_codim() == std::vector<long long>{1, 10, 15});
}

TEST_CASE("poset: unique minimum and graded covers") {
  StrataPoset p = strata_poset(LabelSet::integer_range(1, 6));
  CHECK(p.strata[0].codim == 0);
  CHECK(p.strata[0].tree.num_vertices() == 1);
  int zero_codim = 0;
  for (const Stratum& s : p.strata) zero_codim += (s.codim == 0);
  CHECK(zero_codim == 1);
  for (auto [a, b] : p.cover_relations)
    CHECK(p.strata[b].codim == p.strata[a].codim + 1);
}

TEST_CASE("poset matches the plain enumeration") {
  LabelSet S = LabelSet::integer_range(1, 6);
  StrataPoset p = strata_poset(S);
  auto all = enumerate_stable_trees(S);
  REQUIRE(p.strata.size() == all.size());
  std::set<std::string> lhs, rhs;
  for (const Stratum& s : p.strata) lhs.insert(s.tree.encode());
  for (const StableTree& t : all) rhs.insert(t.encode());
  CHECK(lhs == rhs);
}

TEST_CASE("closure consistency: covers contract back") {
  StrataPoset p = strata_poset(LabelSet::integer_range(1, 6));
  for (auto [a, b] : p.cover_relations) {
    const StableTree& fine = p.strata[b].tree;
    bool found = false;
    for (int e = 0; e < fine.num_edges() && !found; ++e)
      found = canonical_form(contract(fine, e)) == p.strata[a].tree;
    CHECK(found);
  }
}

TEST_CASE("closure by transitive ascent") {
  StrataPoset p = strata_poset(LabelSet::integer_range(1, 5));
  auto cl = p.closure(0);
  CHECK(cl.size() == p.strata.size());  // everything degenerates the open stratum
  // a maximal stratum closes onto itself only
  int top = -1;
  for (std::size_t i = 0; i < p.strata.size(); ++i)
    if (p.strata[i].dim == 0) top = static_cast<int>(i);
  CHECK(p.closure(top) == std::vector<int>{top});
}

TEST_CASE("maximal degenerations are trivalent with double-factorial counts") {
  for (int n = 4; n <= 6; ++n) {
    auto points = maximal_degenerations(LabelSet::integer_range(1, n));
    CHECK(points.size() ==
          static_cast<std::size_t>(oracle::double_factorial_odd(2 * n - 5)));
    for (const Stratum& s : points) {
      CHECK(s.dim == 0);
      for (int v = 0; v < s.tree.num_vertices(); ++v)
        CHECK(s.tree.valence(v) == 3);
    }
  }
}

TEST_CASE("open stratum count polynomial") {
  CHECK(open_stratum_count_poly(3) == IntPoly::one());
  CHECK(open_stratum_count_poly(4) == IntPoly({-2, 1}));
  CHECK(open_stratum_count_poly(5) == IntPoly::x_minus(2) * IntPoly::x_minus(3));
  CHECK_THROWS_AS(open_stratum_count_poly(2), std::invalid_argument);
  // value at q: number of (m-3)-tuples of distinct points avoiding 0,1,inf
  // on a (q+1)-point projective line; brute count over F_11 for m = 5
  const int q = 11;
  long long brute = 0;
  for (int a = 0; a < q + 1; ++a)
    for (int b = 0; b < q + 1; ++b) {
      auto banned = [&](int x) { return x == 0 || x == 1 || x == q; };
      // model P^1(F_11) as {0..10, q=infinity}
      if (banned(a) || banned(b) || a == b) continue;
      ++brute;
    }
  CHECK(open_stratum_count_poly(5).eval(q) == brute);
}

TEST_CASE("compactified count polynomials and Betti numbers") {
  CHECK(compactified_count_poly(LabelSet::integer_range(1, 4)) ==
        IntPoly({1, 1}));
  CHECK(compactified_count_poly(LabelSet::integer_range(1, 5)) ==
        IntPoly({1, 5, 1}));
  CHECK(compactified_count_poly(LabelSet::integer_range(1, 6)) ==
        IntPoly({1, 16, 16, 1}));
  CHECK(betti_numbers(LabelSet::integer_range(1, 5)) ==
        std::vector<long long>{1, 5, 1});
}

TEST_CASE("palindromicity up to n = 7") {
  for (int n = 3; n <= 7; ++n)
    CHECK(compactified_count_poly(LabelSet::integer_range(1, n)).palindromic());
}

TEST_CASE("Euler characteristic at q = 1") {
  CHECK(compactified_count_poly(LabelSet::integer_range(1, 5)).eval(1) == 7);
  CHECK(compactified_count_poly(LabelSet::integer_range(1, 6)).eval(1) == 34);
}

TEST_CASE("grading sums match the total enumeration") {
  for (int n = 4; n <= 7; ++n) {
    LabelSet S = LabelSet::integer_range(1, n);
    StrataPoset p = strata_poset(S);
    auto counts = p.counts_by_codim();
    long long total = 0;
    for (long long c : counts) total += c;
    CHECK(total == static_cast<long long>(enumerate_stable_trees(S).size()));
    CHECK(counts[1] == (1ll << (n - 1)) - n - 1);
  }
}

TEST_CASE("concurrent enumeration returns identical results") {
  LabelSet S = LabelSet::integer_range(1, 6);
  auto reference = compactified_count_poly(S);
  std::vector<std::thread> workers;
  std::vector<IntPoly> results(4);
  for (int i = 0; i < 4; ++i)
    workers.emplace_back([&, i] { results[i] = compactified_count_poly(S); });
  for (auto& w : workers) w.join();
  for (const auto& r : results) CHECK(r == reference);
}

TEST_CASE("hasse dot and json report") {
  StrataPoset p = strata_poset(LabelSet::integer_range(1, 4));
  std::ostringstream os;
  write_hasse_dot(os, p);
  CHECK(os.str().find("digraph") != std::string::npos);
  CHECK(strata_json(LabelSet::integer_range(1, 5)).dump() ==
        R"({"n":5,"counts_by_codim":[1,10,15],"betti":[1,5,1],)"
        R"("count_poly":[1,5,1]})");
}

}  // TEST_SUITE
