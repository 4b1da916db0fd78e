#include <algorithm>
#include <random>

#include "catalogue.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "posetforge/error.hpp"
#include "posetforge/groth.hpp"

using namespace pf;

namespace {

// f_xy acting on m_z (x) n_z for z in both supports, read off the Kronecker
// product of the two action matrices
ThinRep tensor_by_matrices(const ThinRep& m, const ThinRep& n) {
  const auto tm = action_table(m), tn = action_table(n);
  const Field& f = m.field();
  ActionTable t{m.parent_ptr(), f, {}, {}};
  for (auto z : tm.basis)
    if (n.support().contains(z)) t.basis.push_back(z);
  const std::size_t d = t.basis.size();
  auto pos = [](const std::vector<Index>& b, Index z) {
    return static_cast<std::size_t>(std::find(b.begin(), b.end(), z) - b.begin());
  };
  for (const auto& [xy, am] : tm.action) {
    const auto& an = tn.action.at(xy);
    FieldMatrix a(d, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        const std::size_t mr = pos(tm.basis, t.basis[r]), mc = pos(tm.basis, t.basis[c]);
        const std::size_t nr = pos(tn.basis, t.basis[r]), nc = pos(tn.basis, t.basis[c]);
        a(r, c) = f.mul(am(mr, mc), an(nr, nc));
      }
    t.action.emplace(xy, std::move(a));
  }
  const auto s = annihilator_support(t);
  std::map<IndexPair, Scalar> alpha;
  for (const auto& [x, y] : s.strict_pairs()) {
    const auto& a = t.action.at({x, y});
    alpha[{x, y}] = a(pos(t.basis, x), pos(t.basis, y));
  }
  return ThinRep(s, f, alpha);
}

ThinRep rep_on(const PosetPtr& p, const std::vector<std::string>& names, const Field& f) {
  std::vector<Index> mem;
  for (const auto& s : names) mem.push_back(p->index_of(s));
  std::sort(mem.begin(), mem.end());
  std::vector<IndexPair> rel;
  for (auto x : mem)
    for (auto y : mem)
      if (p->lt(x, y)) rel.emplace_back(x, y);
  ClosedSubposet s(p, mem, rel);
  std::map<IndexPair, Scalar> a;
  for (const auto& xy : rel) a[xy] = 1;
  return ThinRep(s, f, a);
}

std::vector<int> dims_by_name(const ThinRep& m, const std::vector<std::string>& order) {
  std::vector<int> v;
  for (const auto& s : order) v.push_back(m.support().contains(m.parent().index_of(s)) ? 1 : 0);
  return v;
}

ThinRep crown_hol(const PosetPtr& crown, const Field& f, long h) {
  return ThinRep(ClosedSubposet::full(crown), f, {{{0, 2}, f.from_integer(h)}, {{0, 3}, 1}, {{1, 2}, 1}, {{1, 3}, 1}});
}

}  // namespace

TEST_CASE("tensor products of thin representations") {
  const Field f5 = Field::finite(5);
  auto a3 = fx::a3();
  auto m = rep_on(a3, {"a", "b"}, f5), n = rep_on(a3, {"b", "c"}, f5);
  CHECK(dims_by_name(m, {"a", "b", "c"}) == std::vector<int>{1, 1, 0});
  CHECK(dims_by_name(n, {"a", "b", "c"}) == std::vector<int>{0, 1, 1});
  CHECK(dims_by_name(tensor(m, n), {"a", "b", "c"}) == std::vector<int>{0, 1, 0});

  auto five = fx::five();
  auto pt = projective_rep(five, five->index_of("t"), f5), ps = projective_rep(five, five->index_of("s"), f5);
  CHECK(dims_by_name(tensor(pt, ps), {"x", "y", "z", "t", "s"}) == std::vector<int>{1, 1, 1, 0, 0});

  auto crown = fx::crown4();
  auto h2 = crown_hol(crown, f5, 2), h3 = crown_hol(crown, f5, 3);
  auto unit = defining_representation(crown, f5);
  CHECK(tensor(h2, unit) == h2);
  CHECK(tensor(unit, h2) == h2);
  // holonomies multiply
  CHECK(reps_isomorphic(tensor(h2, h3), unit).has_value());
  CHECK(reps_isomorphic(tensor(h2, h2), crown_hol(crown, f5, 4)).has_value());
  CHECK_FALSE(reps_isomorphic(tensor(h2, h2), h2).has_value());

  CHECK_THROWS_AS(tensor(h2, defining_representation(fx::chain(2), f5)), Error);
  CHECK_THROWS_AS(tensor(h2, defining_representation(crown, Field::finite(3))), Error);
}

TEST_CASE("tensor agrees with the matrix-level pointwise tensor") {
  const Field f3 = Field::finite(3);
  for (const auto& p : {fx::crown4(), fx::sphere(), fx::a3(), fx::chain(3)}) {
    const auto cat = classify_thin(p, f3);
    for (const auto& a : cat.entries)
      for (const auto& b : cat.entries) {
        const auto t = tensor(a.rep, b.rep);
        CHECK(t == tensor_by_matrices(a.rep, b.rep));
        CHECK(t.support() == wedge(a.rep.support(), b.rep.support()));
      }
  }
}

TEST_CASE("tensor is commutative, associative and unital up to isomorphism") {
  std::mt19937_64 rng(21);
  const Field f5 = Field::finite(5);
  for (int n = 1; n <= 4; ++n)
    for (const auto& p : cat::up_to_iso(n)) {
      const auto cat = classify_thin(p, f5);
      const auto& e = cat.entries;
      const auto unit = defining_representation(p, f5);
      for (std::size_t i = 0; i < e.size(); ++i) {
        CHECK(reps_isomorphic(tensor(e[i].rep, unit), e[i].rep).has_value());
        for (std::size_t j = i; j < e.size(); ++j)
          CHECK(reps_isomorphic(tensor(e[i].rep, e[j].rep), tensor(e[j].rep, e[i].rep)).has_value());
      }
      for (int k = 0; k < 200; ++k) {
        const auto& a = e[rng() % e.size()].rep;
        const auto& b = e[rng() % e.size()].rep;
        const auto& c = e[rng() % e.size()].rep;
        CHECK(reps_isomorphic(tensor(tensor(a, b), c), tensor(a, tensor(b, c))).has_value());
      }
    }
}

TEST_CASE("undeformed semigroup") {
  auto c2 = fx::chain(2);
  auto t = undeformed_semigroup(c2);
  const std::size_t n = t.elements.size();
  CHECK(n == 5);
  CHECK(t.elements[t.identity] == ClosedSubposet::full(c2));
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(t.product[i * n + i] == i);
    CHECK(t.product[i * n + t.identity] == i);
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(t.product[i * n + j] == t.product[j * n + i]);
      for (std::size_t k = 0; k < n; ++k)
        CHECK(t.product[t.product[i * n + j] * n + k] == t.product[i * n + t.product[j * n + k]]);
    }
  }

  auto anti = undeformed_semigroup(fx::antichain(2));
  const std::size_t m = anti.elements.size();
  CHECK(m == 4);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<Index> both;
      const auto& a = anti.elements[i].members();
      const auto& b = anti.elements[j].members();
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
      CHECK(anti.elements[anti.product[i * m + j]].members() == both);
    }

  // the table of trivial-cocycle reps is the same semigroup
  const Field f3 = Field::finite(3);
  for (const auto& p : {fx::crown4(), fx::five()}) {
    auto s = undeformed_semigroup(p);
    const std::size_t k = s.elements.size();
    std::vector<ThinRep> reps;
    for (const auto& e : s.elements) {
      std::map<IndexPair, Scalar> a;
      for (const auto& xy : e.strict_pairs()) a[xy] = 1;
      reps.emplace_back(e, f3, a);
    }
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) CHECK(tensor(reps[i], reps[j]) == reps[s.product[i * k + j]]);
  }
}

TEST_CASE("meet-semilattice detection") {
  for (int n = 1; n <= 5; ++n) CHECK(is_meet_semilattice(*fx::chain(n)).is_meet_semilattice);
  auto crown = fx::crown4();
  auto c = is_meet_semilattice(*crown);
  CHECK_FALSE(c.is_meet_semilattice);
  REQUIRE(c.witness.has_value());
  CHECK(*c.witness == IndexPair{crown->index_of("c"), crown->index_of("d")});
  CHECK(c.maximal_lower_bounds == std::vector<Index>{crown->index_of("a"), crown->index_of("b")});

  auto sphere = fx::sphere();
  auto s = is_meet_semilattice(*sphere);
  CHECK_FALSE(s.is_meet_semilattice);
  CHECK(*s.witness == IndexPair{sphere->index_of("5"), sphere->index_of("6")});

  CHECK_FALSE(is_meet_semilattice(*fx::antichain(2)).is_meet_semilattice);
  CHECK(is_meet_semilattice(*fx::antichain(1)).is_meet_semilattice);
}

TEST_CASE("K0 tables") {
  auto c3 = fx::chain(3);
  auto t = k0_table(c3);
  for (Index x = 0; x < 3; ++x)
    for (Index y = 0; y < 3; ++y) CHECK(t.meet[static_cast<std::size_t>(x * 3 + y)] == std::min(x, y));

  auto v = fx::from_text("elements: a b c\ncovers: a<b a<c\n");
  auto tv = k0_table(v);
  CHECK(tv.meet[static_cast<std::size_t>(v->index_of("b") * 3 + v->index_of("c"))] == v->index_of("a"));

  try {
    k0_table(fx::crown4());
    FAIL("expected NotMeetSemilattice");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotMeetSemilattice);
  }
}

TEST_CASE("K0 products of projectives over all small meet-semilattices") {
  const Field f5 = Field::finite(5);
  std::size_t checked = 0;
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : cat::up_to_iso(n)) {
      if (!is_meet_semilattice(*p).is_meet_semilattice) {
        CHECK_THROWS_AS(k0_table(p), Error);
        continue;
      }
      ++checked;
      const auto t = k0_table(p);
      const auto sz = static_cast<std::size_t>(n);
      for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y) {
          const Index m = t.meet[static_cast<std::size_t>(x) * sz + static_cast<std::size_t>(y)];
          CHECK(p->leq(m, x));
          CHECK(p->leq(m, y));
          CHECK(m == t.meet[static_cast<std::size_t>(y) * sz + static_cast<std::size_t>(x)]);
          CHECK(reps_isomorphic(tensor(projective_rep(p, x, f5), projective_rep(p, y, f5)), projective_rep(p, m, f5))
                    .has_value());
          CHECK(wedge(ClosedSubposet::lower_set(p, x), ClosedSubposet::lower_set(p, y)) ==
                ClosedSubposet::lower_set(p, m));
        }
    }
  CHECK(checked > 5);
}
