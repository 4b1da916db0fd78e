#include <functional>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "posetforge/diag.hpp"
#include "oracles.hpp"
#include "posetforge/error.hpp"

using namespace pf;
using oracle::exists_conjugator;
using oracle::random_diagonal;
using oracle::random_matrix;

namespace {

PatternMatrix from_rows(const Field& f, const std::vector<std::vector<Scalar>>& rows) {
  FieldMatrix m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  return PatternMatrix(f, m);
}

// arrows (1,1),(1,2),(1,3),(2,2),(2,4),(3,1),(3,2),(3,3),(3,4),(4,2),(4,4)
// carrying the primes 2..31 in reading order
PatternMatrix four_by_four() {
  return from_rows(Field::rationals(), {{2, 3, 5, 0}, {0, 7, 0, 11}, {13, 17, 19, 23}, {0, 29, 0, 31}});
}

// literal rule: delete the least arrow whose endpoints stay connected without it
std::vector<IndexPair> eliminate_by_search(const Digraph& g) {
  std::vector<IndexPair> left = g.arrows, gone;
  auto connected_without = [&](std::size_t skip) {
    const auto [s, t] = left[skip];
    std::vector<std::uint8_t> seen(g.n, 0);
    std::vector<Index> stack{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      const Index v = stack.back();
      stack.pop_back();
      for (std::size_t k = 0; k < left.size(); ++k) {
        if (k == skip) continue;
        Index w = -1;
        if (left[k].first == v) w = left[k].second;
        else if (left[k].second == v) w = left[k].first;
        if (w >= 0 && !seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    return seen[static_cast<std::size_t>(t)] != 0;
  };
  for (bool again = true; again;) {
    again = false;
    for (std::size_t k = 0; k < left.size(); ++k)
      if (connected_without(k)) {
        gone.push_back(left[k]);
        left.erase(left.begin() + static_cast<long>(k));
        again = true;
        break;
      }
  }
  return gone;
}

}  // namespace

TEST_CASE("pattern graphs") {
  const Field q = Field::rationals();
  CHECK(pattern_graph(from_rows(q, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).arrows ==
        std::vector<IndexPair>{{0, 0}, {1, 1}, {2, 2}});
  CHECK(pattern_graph(PatternMatrix(q, FieldMatrix(3, 3))).arrows.empty());
  auto g = pattern_graph(four_by_four());
  CHECK(g.arrows.size() == 11);
  CHECK(std::count_if(g.arrows.begin(), g.arrows.end(), [](auto e) { return e.first == e.second; }) == 4);

  CHECK_THROWS_AS(PatternMatrix(q, FieldMatrix(2, 3)), Error);
  FieldMatrix bad(1, 1);
  bad(0, 0) = 7;
  CHECK_THROWS_AS(PatternMatrix(Field::finite(5), bad), Error);
}

TEST_CASE("spanning structures") {
  auto s = spanning_structure(pattern_graph(four_by_four()));
  REQUIRE(s.trees.size() == 1);
  CHECK(s.trees[0] == std::vector<IndexPair>{{2, 0}, {2, 3}, {3, 1}});
  CHECK(s.eliminated == std::vector<IndexPair>{{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 3}, {2, 1}, {2, 2}, {3, 3}});

  auto loop = spanning_structure(Digraph{1, {{0, 0}}});
  CHECK(loop.trees[0].empty());
  CHECK(loop.eliminated == std::vector<IndexPair>{{0, 0}});

  Digraph tree{4, {{0, 1}, {2, 1}, {2, 3}}};
  auto t = spanning_structure(tree);
  CHECK(t.trees[0] == tree.arrows);
  CHECK(t.eliminated.empty());

  auto split = spanning_structure(Digraph{5, {{0, 3}, {3, 0}, {4, 2}}});
  CHECK(split.components == std::vector<std::vector<Index>>{{0, 3}, {1}, {2, 4}});
  CHECK(split.trees == std::vector<std::vector<IndexPair>>{{{3, 0}}, {}, {{4, 2}}});
}

TEST_CASE("spanning structure matches the literal elimination rule") {
  std::mt19937_64 rng(11);
  const Field f = Field::finite(3);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const auto g = pattern_graph(random_matrix(rng, f, n, 0.45));
    const auto s = spanning_structure(g);
    CHECK(s.eliminated == eliminate_by_search(g));
    std::size_t kept = 0;
    for (const auto& t : s.trees) kept += t.size();
    CHECK(kept + s.components.size() == n);
  }
}

TEST_CASE("canonical form of the 4x4 example") {
  const auto a = four_by_four();
  const Field& q = a.field;
  auto [c, d] = canonical_form(a);
  CHECK(c(0, 1) == Scalar(39, 667));
  CHECK(c(0, 1) == q.div(q.mul(a(0, 1), a(2, 0)), q.mul(a(3, 1), a(2, 3))));
  CHECK(d == std::vector<Scalar>{1, Scalar(29 * 23, 13), Scalar(1, 13), Scalar(23, 13)});
  for (auto [i, j] : std::vector<IndexPair>{{2, 0}, {2, 3}, {3, 1}}) CHECK(c(i, j) == 1);
  for (std::size_t i = 0; i < 4; ++i) CHECK(c(i, i) == a(i, i));
  // D A = C D
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(q.mul(d[i], a(i, j)) == q.mul(c(i, j), d[j]));
  CHECK(canonical_form(c).c == c);

  auto inv = orbit_invariant(a);
  CHECK(inv.holonomy.size() == 8);
  CHECK(inv.holonomy[1] == Scalar(39, 667));
}

TEST_CASE("small canonical forms") {
  const Field q = Field::rationals();
  auto diag = from_rows(q, {{2, 0, 0}, {0, 3, 0}, {0, 0, 0}});
  auto cd = canonical_form(diag);
  CHECK(cd.c == diag);
  CHECK(cd.d == std::vector<Scalar>{1, 1, 1});

  auto full = from_rows(q, {{2, 3}, {5, 7}});
  auto inv = orbit_invariant(full);
  CHECK(inv.holonomy.size() == 3);
  // loops and the 2-cycle product survive
  CHECK(inv.holonomy == std::vector<Scalar>{2, 15, 7});

  auto tree = from_rows(q, {{0, 4, 0}, {0, 0, 0}, {0, Scalar(1, 9), 0}});
  CHECK(orbit_invariant(tree).holonomy.empty());
  auto ct = canonical_form(tree).c;
  CHECK(ct(0, 1) == 1);
  CHECK(ct(2, 1) == 1);
}

TEST_CASE("canonical forms are constant on orbits") {
  std::mt19937_64 rng(12);
  for (std::uint64_t q : {5, 7, 9}) {
    const Field f = Field::finite(q);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = 1 + rng() % 5;
      const auto a = random_matrix(rng, f, n, 0.5);
      const auto ca = canonical_form(a);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) CHECK(f.mul(ca.d[i], a(i, j)) == f.mul(ca.c(i, j), ca.d[j]));
      CHECK(canonical_form(ca.c).c == ca.c);
      const auto inv = orbit_invariant(a);
      CHECK(inv.holonomy.size() + n == inv.graph.arrows.size() + spanning_structure(inv.graph).components.size());
      for (int k = 0; k < 100; ++k) {
        const auto b = conjugate(a, random_diagonal(rng, f, n));
        CHECK(canonical_form(b).c == ca.c);
        CHECK(orbit_invariant(b) == inv);
        auto d = diag_conjugate_test(a, b);
        REQUIRE(d.has_value());
        CHECK(conjugate(a, *d) == b);
      }
    }
  }
}

TEST_CASE("conjugacy test") {
  const Field f5 = Field::finite(5);
  auto a = four_by_four();
  auto id = diag_conjugate_test(a, a);
  REQUIRE(id.has_value());
  CHECK(*id == std::vector<Scalar>{1, 1, 1, 1});

  // crown pattern 1,2 -> 3,4 with holonomy 1 and 2
  auto c1 = from_rows(f5, {{0, 0, 1, 1}, {0, 0, 1, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}});
  auto c2 = from_rows(f5, {{0, 0, 2, 1}, {0, 0, 1, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}});
  CHECK_FALSE(diag_conjugate_test(c1, c2).has_value());
  CHECK_FALSE(exists_conjugator(c1, c2));
  auto c3 = from_rows(f5, {{0, 0, 4, 2}, {0, 0, 2, 2}, {0, 0, 0, 0}, {0, 0, 0, 0}});
  CHECK(diag_conjugate_test(c2, c3).has_value());

  auto other = from_rows(f5, {{0, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}});
  CHECK_FALSE(diag_conjugate_test(c1, other).has_value());
  CHECK_THROWS_AS(diag_conjugate_test(c1, from_rows(f5, {{1}})), Error);
  CHECK_THROWS_AS(diag_conjugate_test(c1, from_rows(Field::finite(3), {{0, 0, 1, 1}, {0, 0, 1, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}})),
                  Error);
}

TEST_CASE("conjugacy agrees with exhaustive diagonal search") {
  // every 3x3 matrix over F_3: orbits by brute force vs canonical forms
  const Field f3 = Field::finite(3);
  std::map<std::vector<unsigned>, std::vector<unsigned>> orbit_key;  // matrix -> least orbit member
  std::map<std::vector<unsigned>, std::set<std::vector<unsigned>>> by_canon;
  auto encode = [](const PatternMatrix& m) {
    std::vector<unsigned> v;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j) v.push_back(static_cast<unsigned>(m(i, j).get_num().get_ui()));
    return v;
  };
  std::set<std::vector<unsigned>> orbits;
  std::size_t classes = 0;
  std::set<std::vector<unsigned>> canon_seen;
  for (unsigned code = 0; code < 19683; ++code) {
    FieldMatrix m(3, 3);
    unsigned t = code;
    for (std::size_t k = 0; k < 9; ++k) {
      m(k / 3, k % 3) = t % 3;
      t /= 3;
    }
    PatternMatrix a(f3, m);
    std::vector<unsigned> least;
    for (unsigned g = 0; g < 8; ++g) {
      auto img = encode(conjugate(a, {f3.exp(g & 1), f3.exp(g >> 1 & 1), f3.exp(g >> 2 & 1)}));
      if (least.empty() || img < least) least = img;
    }
    orbits.insert(least);
    by_canon[encode(canonical_form(a).c)].insert(least);
    if (canon_seen.insert(encode(canonical_form(a).c)).second) ++classes;
  }
  CHECK(classes == orbits.size());
  for (const auto& [c, os] : by_canon) CHECK(os.size() == 1);

  std::mt19937_64 rng(13);
  const Field f5 = Field::finite(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    const auto a = random_matrix(rng, f5, n, 0.6);
    FieldMatrix bm = a.entries;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (bm(i, j) != 0 && rng() % 3 == 0) bm(i, j) = f5.exp(rng() % 4);
    const PatternMatrix b(f5, bm);
    const auto d = diag_conjugate_test(a, b);
    CHECK(d.has_value() == exists_conjugator(a, b));
    CHECK(d.has_value() == (orbit_invariant(a) == orbit_invariant(b)));
  }
}

TEST_CASE("quiver quotient preorders") {
  const Field q = Field::rationals();
  auto upper = quiver_quotient_preorder(from_rows(q, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}));
  CHECK(upper.is_antisymmetric());
  CHECK(upper.leq(0, 2));
  CHECK_FALSE(upper.leq(2, 0));

  auto two_cycle = quiver_quotient_preorder(from_rows(q, {{0, 3}, {5, 0}}));
  CHECK(two_cycle.equivalent(0, 1));
  CHECK_FALSE(two_cycle.is_antisymmetric());
  CHECK(two_cycle.classes().size() == 1);

  auto id = quiver_quotient_preorder(from_rows(q, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(id.pairs().size() == 3);
  CHECK(id.labels() == std::vector<std::string>{"1", "2", "3"});
}
