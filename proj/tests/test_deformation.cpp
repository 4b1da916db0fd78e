#include <algorithm>
#include <numeric>
#include <random>

#include "catalogue.hpp"
#include "doctest.h"
#include "f2.hpp"
#include "fixtures.hpp"
#include "posetforge/deformation.hpp"
#include "posetforge/error.hpp"
#include "random_cochains.hpp"

using namespace pf;

namespace {

MultCochain sphere_generator(const Field& f, long power = 1) {
  auto c = MultCochain::constant(fx::sphere(), f, 2, ChainDomain::Strict);
  c.set({0, 2, 4}, f.pow(f.generator(), power));
  return extend_to_weak(c);
}

SparseVec basis_vec(std::size_t i) { return {{i, Scalar(1)}}; }

StructureConstantAlgebra shuffled(const StructureConstantAlgebra& a, std::mt19937_64& rng) {
  const std::size_t n = a.dimension();
  std::vector<std::size_t> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  std::shuffle(pi.begin(), pi.end(), rng);
  StructureConstantAlgebra out{a.field, std::vector<std::string>(n), {},
                               std::vector<std::vector<Scalar>>(n * n, std::vector<Scalar>(n))};
  for (std::size_t i = 0; i < n; ++i) out.basis[pi[i]] = a.basis[i];
  for (auto e : a.idempotents) out.idempotents.push_back(pi[e]);
  std::shuffle(out.idempotents.begin(), out.idempotents.end(), rng);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t t = 0; t < n; ++t) out.table[pi[i] * n + pi[j]][pi[t]] = a.table[i * n + j][t];
  return out;
}

// the recognized poset relabelled back onto the original one
Permutation match_labels(const Poset& original, const Poset& recognized) {
  Permutation m(recognized.size());
  for (Index i = 0; i < static_cast<Index>(recognized.size()); ++i)
    m[static_cast<std::size_t>(i)] = original.index_of(recognized.label(i));
  return m;
}

bool is_order_iso(const Poset& from, const Poset& to, const Permutation& m) {
  if (from.size() != to.size()) return false;
  for (Index i = 0; i < static_cast<Index>(from.size()); ++i)
    for (Index j = 0; j < static_cast<Index>(from.size()); ++j)
      if (from.leq(i, j) != to.leq(m[static_cast<std::size_t>(i)], m[static_cast<std::size_t>(j)])) return false;
  return true;
}

MultCochain transport(const MultCochain& c, const PosetPtr& target, const Permutation& m) {
  MultCochain out(target, c.field(), c.degree(), c.domain());
  for (const auto& [ch, v] : c.values()) {
    Chain t;
    for (auto x : ch) t.push_back(m[static_cast<std::size_t>(x)]);
    out.set(t, v);
  }
  return out;
}

}  // namespace

TEST_CASE("the undeformed incidence algebra") {
  auto a = build_deformed(MultCochain::constant(fx::crown4(), Field::rationals(), 2, ChainDomain::Weak));
  CHECK(a.dimension() == 8);
  const auto ac = static_cast<std::size_t>(a.basis_index(0, 2));
  const auto cc = static_cast<std::size_t>(a.basis_index(2, 2));
  const auto aa = static_cast<std::size_t>(a.basis_index(0, 0));
  CHECK(a.multiply(basis_vec(aa), basis_vec(ac)) == basis_vec(ac));
  CHECK(a.multiply(basis_vec(ac), basis_vec(cc)) == basis_vec(ac));
  CHECK(a.multiply(basis_vec(cc), basis_vec(ac)).empty());
  CHECK(a.basis_index(2, 0) == -1);
  CHECK(a.basis_label(ac) == "f[a:c]");
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    CHECK(a.multiply(a.unit(), basis_vec(i)) == basis_vec(i));
    CHECK(a.multiply(basis_vec(i), a.unit()) == basis_vec(i));
  }
}

TEST_CASE("any deformation of the 2-chain has a square-zero radical") {
  std::mt19937_64 rng(1);
  const Field f7 = Field::finite(7);
  for (int i = 0; i < 20; ++i) {
    auto lam = rnd::cocycle(rng, fx::chain(2), f7, 2, ChainDomain::Weak);
    auto a = build_deformed(lam);
    CHECK(a.dimension() == 3);
    const auto ab = static_cast<std::size_t>(a.basis_index(0, 1));
    CHECK(a.multiply(basis_vec(ab), basis_vec(ab)).empty());
    for (std::size_t k = 0; k < 3; ++k) {
      CHECK(a.multiply(a.unit(), basis_vec(k)) == basis_vec(k));
      CHECK(a.multiply(basis_vec(k), a.unit()) == basis_vec(k));
    }
  }
}

TEST_CASE("build_deformed rejects non-cocycles") {
  const Field f5 = Field::finite(5);
  auto bad = MultCochain::constant(fx::chain(3), f5, 2, ChainDomain::Weak);
  bad.set({0, 0, 1}, 2);
  CHECK_THROWS_AS(build_deformed(bad), Error);
  try {
    build_deformed(bad);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotACocycle);
  }
  auto good = MultCochain::constant(fx::chain(3), f5, 2, ChainDomain::Weak);
  CHECK_THROWS_AS(build_deformed(fx::chain(2), good, f5), Error);
  CHECK_THROWS_AS(build_deformed(fx::chain(3), good, Field::finite(7)), Error);
}

TEST_CASE("deformations are associative and unital on random cocycles") {
  std::mt19937_64 rng(2);
  const Field f5 = Field::finite(5);
  for (const auto& p : {fx::sphere(), fx::crown4(), fx::five()}) {
    for (int i = 0; i < 5; ++i) {
      auto a = build_deformed(rnd::cocycle(rng, p, f5, 2, ChainDomain::Weak));
      for (std::size_t x = 0; x < a.dimension(); ++x) {
        CHECK(a.multiply(a.unit(), basis_vec(x)) == basis_vec(x));
        CHECK(a.multiply(basis_vec(x), a.unit()) == basis_vec(x));
      }
    }
  }
}

TEST_CASE("triviality of deformations") {
  std::mt19937_64 rng(3);
  const Field f5 = Field::finite(5);
  CHECK_FALSE(is_trivial_deformation(build_deformed(sphere_generator(f5))).trivial);
  for (int i = 0; i < 20; ++i) {
    auto beta = rnd::cochain(rng, fx::sphere(), f5, 1, ChainDomain::Weak);
    auto a = build_deformed(coboundary(beta));
    auto t = is_trivial_deformation(a);
    REQUIRE(t.trivial);
    const auto& r = *t.rescaling;
    for (std::size_t x = 0; x < a.dimension(); ++x)
      for (std::size_t y = 0; y < a.dimension(); ++y) {
        auto p = a.product(x, y);
        if (!p) continue;
        const auto [u, v] = a.basis()[x];
        const auto w = a.basis()[y].second;
        CHECK(f5.mul(f5.mul(r.at({u, v}), r.at({v, w})), p->second) == r.at({u, w}));
      }
  }
  // a unique minimum makes every deformation trivial
  auto cone = fx::from_text("elements: o a b c d\ncovers: o<a o<b a<c a<d b<c b<d\n");
  for (int i = 0; i < 10; ++i)
    CHECK(is_trivial_deformation(build_deformed(rnd::cocycle(rng, cone, f5, 2, ChainDomain::Weak))).trivial);
  // and over Q
  auto q = rnd::cochain(rng, fx::sphere(), Field::rationals(), 1, ChainDomain::Weak);
  CHECK(is_trivial_deformation(build_deformed(coboundary(q))).trivial);
}

TEST_CASE("isomorphism of deformations") {
  const Field f5 = Field::finite(5);
  auto a = build_deformed(sphere_generator(f5));
  auto same = deformations_isomorphic(a, a);
  REQUIRE(same.has_value());
  CHECK(same->sigma == Permutation{0, 1, 2, 3, 4, 5});
  CHECK(is_cocycle(same->alpha));

  for (const auto& sigma : automorphism_group(*fx::sphere())) {
    auto b = build_deformed(pullback(a.lambda(), sigma));
    auto iso = deformations_isomorphic(a, b);
    REQUIRE(iso.has_value());
    CHECK(coboundary(iso->alpha) == multiply(pullback(a.lambda(), iso->sigma), inverse(b.lambda())));
    // g_xy -> alpha_xy^-1 f_{sigma x, sigma y} is an algebra map B -> A
    BasisMap m;
    for (const auto& [x, y] : b.basis()) {
      m.image.push_back(static_cast<std::size_t>(
          a.basis_index(iso->sigma[static_cast<std::size_t>(x)], iso->sigma[static_cast<std::size_t>(y)])));
      m.coeff.push_back(f5.inv(iso->alpha.at({x, y})));
    }
    CHECK(is_homomorphism(b, a, m));
  }

  // g and g^2: Aut acts on Z/4 by +-1
  auto g2 = build_deformed(sphere_generator(f5, 2));
  CHECK_FALSE(deformations_isomorphic(a, g2).has_value());
  auto g3 = build_deformed(sphere_generator(f5, 3));
  CHECK(deformations_isomorphic(a, g3).has_value());
  CHECK_FALSE(deformations_isomorphic(g2, build_deformed(sphere_generator(f5, 0))).has_value());

  auto other = build_deformed(MultCochain::constant(fx::crown4(), f5, 2, ChainDomain::Weak));
  CHECK_THROWS_AS(deformations_isomorphic(a, other), Error);
}

TEST_CASE("deformation isomorphism is an equivalence") {
  std::mt19937_64 rng(4);
  const Field f3 = Field::finite(3);
  auto p = fx::sphere();
  std::vector<DeformedAlgebra> algs;
  for (int i = 0; i < 6; ++i) algs.push_back(build_deformed(rnd::cocycle(rng, p, f3, 2, ChainDomain::Weak)));
  for (const auto& a : algs)
    for (const auto& b : algs) {
      const bool ab = deformations_isomorphic(a, b).has_value();
      CHECK(ab == deformations_isomorphic(b, a).has_value());
      for (const auto& c : algs)
        if (ab && deformations_isomorphic(b, c)) CHECK(deformations_isomorphic(a, c).has_value());
    }
}

TEST_CASE("standard automorphisms") {
  const Field f5 = Field::finite(5);
  auto crown = fx::crown4();
  auto a = build_deformed(MultCochain::constant(crown, f5, 2, ChainDomain::Weak));
  const Permutation id{0, 1, 2, 3};

  auto m = standard_automorphism(a, id, MultCochain::constant(crown, f5, 1, ChainDomain::Weak));
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    CHECK(m.image[i] == i);
    CHECK(m.coeff[i] == 1);
  }

  auto swap = standard_automorphism(a, {1, 0, 3, 2}, MultCochain::constant(crown, f5, 1, ChainDomain::Strict));
  CHECK(is_multiplicative(a, swap));
  CHECK(swap.image[static_cast<std::size_t>(a.basis_index(0, 2))] == static_cast<std::size_t>(a.basis_index(1, 3)));

  // holonomy 2 around the circle: an automorphism, but no rescaling by
  // theta_x / theta_y realizes it
  auto hol = MultCochain::constant(crown, f5, 1, ChainDomain::Strict);
  hol.set({0, 2}, 2);
  auto outer = standard_automorphism(a, id, hol);
  CHECK(is_multiplicative(a, outer));
  CHECK(outer.coeff[static_cast<std::size_t>(a.basis_index(0, 2))] == 2);
  for (int t = 0; t < 256; ++t) {
    std::vector<Scalar> theta(4);
    for (int x = 0; x < 4; ++x) theta[static_cast<std::size_t>(x)] = 1 + ((t >> (2 * x)) & 3);
    bool equal = true;
    for (std::size_t i = 0; i < a.dimension() && equal; ++i) {
      const auto [x, y] = a.basis()[i];
      equal = outer.coeff[i] == f5.div(theta[static_cast<std::size_t>(x)], theta[static_cast<std::size_t>(y)]);
    }
    CHECK_FALSE(equal);
  }

  // the sphere: orientation-reversing automorphisms move the generator
  auto g = build_deformed(sphere_generator(f5));
  const auto one = MultCochain::constant(fx::sphere(), f5, 1, ChainDomain::Weak);
  try {
    standard_automorphism(g, {1, 0, 2, 3, 4, 5}, one);
    FAIL("expected ClassNotFixed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ClassNotFixed);
  }
  auto rot = standard_automorphism(g, {1, 0, 3, 2, 4, 5}, one);
  CHECK(is_multiplicative(g, rot));
  auto g2 = build_deformed(sphere_generator(f5, 2));
  for (const auto& s : automorphism_group(*fx::sphere())) CHECK(is_multiplicative(g2, standard_automorphism(g2, s, one)));

  auto bad = MultCochain::constant(fx::sphere(), f5, 1, ChainDomain::Strict);
  bad.set({0, 2}, 2);
  try {
    standard_automorphism(g, {0, 1, 2, 3, 4, 5}, bad);
    FAIL("expected NotMultiplicative");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotMultiplicative);
  }
}

TEST_CASE("recognition of incidence algebras from structure constants") {
  std::mt19937_64 rng(5);
  auto crown = fx::crown4();
  auto inc = build_deformed(MultCochain::constant(crown, Field::rationals(), 2, ChainDomain::Weak));
  auto table = shuffled(to_structure_constants(inc), rng);
  auto r = recognize_incidence(table);
  REQUIRE(r.recognized.has_value());
  CHECK(r.recognized->is_poset);
  const auto& rec = *r.recognized;
  const auto m = match_labels(*crown, **rec.poset);
  CHECK(is_order_iso(**rec.poset, *crown, m));
  for (const auto& [ch, v] : rec.lambda->values()) CHECK(v == 1);

  // two independent vectors in one block
  StructureConstantAlgebra kron{Field::rationals(), {"e1", "e2", "u", "v"}, {0, 1},
                                std::vector<std::vector<Scalar>>(16, std::vector<Scalar>(4))};
  auto put = [&](std::size_t i, std::size_t j, std::size_t k) { kron.table[i * 4 + j][k] = 1; };
  put(0, 0, 0);
  put(1, 1, 1);
  put(0, 2, 2);
  put(2, 1, 2);
  put(0, 3, 3);
  put(3, 1, 3);
  auto k2 = recognize_incidence(kron);
  CHECK_FALSE(k2.recognized.has_value());
  CHECK(k2.reason.find("dimension 2") != std::string::npos);

  // K x K with only one designated idempotent
  StructureConstantAlgebra kk{Field::rationals(), {"e1", "e2"}, {0}, std::vector<std::vector<Scalar>>(4, std::vector<Scalar>(2))};
  kk.table[0][0] = 1;
  kk.table[3][1] = 1;
  try {
    recognize_incidence(kk);
    FAIL("expected MalformedBasis");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MalformedBasis);
  }

  // a preorder: the full 2x2 matrix algebra
  StructureConstantAlgebra mat{Field::rationals(), {"e11", "e22", "e12", "e21"}, {0, 1},
                               std::vector<std::vector<Scalar>>(16, std::vector<Scalar>(4))};
  const std::size_t unit[2][2] = {{0, 2}, {3, 1}};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) mat.table[unit[i][j] * 4 + unit[j][k]][unit[i][k]] = 1;
  auto pm = recognize_incidence(mat);
  REQUIRE(pm.recognized.has_value());
  CHECK_FALSE(pm.recognized->is_poset);
  CHECK(pm.recognized->order.equivalent(0, 1));
  CHECK_FALSE(pm.recognized->lambda.has_value());
}

TEST_CASE("recognition round trip keeps the class") {
  std::mt19937_64 rng(6);
  const Field f5 = Field::finite(5);
  auto g = build_deformed(sphere_generator(f5));
  auto rec = recognize_incidence(shuffled(to_structure_constants(g), rng));
  REQUIRE(rec.recognized.has_value());
  const auto& r = *rec.recognized;
  auto sphere = fx::sphere();
  const auto m = match_labels(*sphere, **r.poset);
  auto back = transport(*r.lambda, sphere, m);
  CHECK_FALSE(reduce_modulo_coboundaries(back).trivial);
  CHECK(same_class(back, g.lambda()).same);

  for (const auto& p : cat::all_up_to_iso(5)) {
    auto lam = rnd::cocycle(rng, p, f5, 2, ChainDomain::Weak);
    auto a = build_deformed(lam);
    auto res = recognize_incidence(shuffled(to_structure_constants(a), rng));
    REQUIRE(res.recognized.has_value());
    REQUIRE(res.recognized->is_poset);
    const auto mm = match_labels(*p, **res.recognized->poset);
    CHECK(is_order_iso(**res.recognized->poset, *p, mm));
    CHECK(same_class(transport(*res.recognized->lambda, p, mm), lam).same);
  }
}

TEST_CASE("two-sided ideals") {
  CHECK(two_sided_ideals(fx::chain(2)).size() == 5);
  for (int n = 1; n <= 4; ++n) CHECK(two_sided_ideals(fx::antichain(n)).size() == (1u << n));
  CHECK(two_sided_ideals(fx::a3()).size() == 13);
  // span{f_ac} in the 3-chain: its complement is not transitive
  auto c3 = two_sided_ideals(fx::chain(3));
  CHECK(c3.size() == 14);
  CHECK(std::count_if(c3.begin(), c3.end(), [](const auto& i) { return !i.closed; }) == 1);
  CHECK(c3.front().span.empty());
  CHECK(c3.back().complement.empty());

  // Jacobson radical: complement of the discrete closed subposet on everything
  auto crown = fx::crown4();
  auto disc = ClosedSubposet::discrete(crown, {0, 1, 2, 3});
  int hits = 0;
  for (const auto& i : two_sided_ideals(crown))
    if (i.closed && *i.closed == disc) {
      ++hits;
      CHECK(i.span == std::vector<IndexPair>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    }
  CHECK(hits == 1);
}

TEST_CASE("transitive ideal complements are exactly the closed subposets") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : cat::up_to_iso(n)) {
      std::vector<ClosedSubposet> closed;
      for (const auto& i : two_sided_ideals(p))
        if (i.closed) closed.push_back(*i.closed);
      std::sort(closed.begin(), closed.end());
      CHECK(closed == closed_subposets(p));
    }
}

TEST_CASE("two-sided ideals match a brute-force search over F_2") {
  const Field f2 = Field::finite(2);
  for (int n = 1; n <= 3; ++n)
    for (const auto& p : cat::up_to_iso(n)) {
      auto a = build_deformed(MultCochain::constant(p, f2, 2, ChainDomain::Weak));
      const auto d = static_cast<unsigned>(a.dimension());
      auto to_sparse = [&](unsigned v) {
        SparseVec s;
        for (unsigned i = 0; i < d; ++i)
          if (v >> i & 1) s[i] = 1;
        return s;
      };
      auto to_mask = [](const SparseVec& s) {
        unsigned v = 0;
        for (const auto& [i, c] : s)
          if (c != 0) v |= 1u << i;
        return v;
      };
      std::set<std::uint64_t> brute;
      for (auto s : f2::all_subspaces(d)) {
        bool ideal = true;
        for (auto v : f2::members(s))
          for (unsigned i = 0; i < d && ideal; ++i) {
            const unsigned l = to_mask(a.multiply(basis_vec(i), to_sparse(v)));
            const unsigned r = to_mask(a.multiply(to_sparse(v), basis_vec(i)));
            ideal = (s >> l & 1) && (s >> r & 1);
          }
        if (ideal) brute.insert(s);
      }
      std::set<std::uint64_t> ours;
      for (const auto& i : two_sided_ideals(p)) {
        std::vector<unsigned> gens;
        for (auto [x, y] : i.span) gens.push_back(1u << a.basis_index(x, y));
        ours.insert(f2::span_of(gens));
      }
      CHECK(ours.size() == two_sided_ideals(p).size());
      CHECK(ours == brute);
    }
}
