#include "catalogue.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "posetforge/chain_complex.hpp"
#include "posetforge/error.hpp"

using namespace pf;

TEST_CASE("order complex examples") {
  auto c2 = order_complex(*fx::chain(2));
  CHECK(c2.chains(0) == std::vector<Chain>{{0}, {1}});
  CHECK(c2.chains(1) == std::vector<Chain>{{0, 1}});
  CHECK(c2.chains(2).empty());
  auto crown = order_complex(*fx::crown4());
  CHECK(crown.count(1) == 4);
  CHECK(crown.count(2) == 0);
  CHECK(order_complex(*fx::sphere()).count(2) == 8);
}

TEST_CASE("boundary matrices") {
  auto c2 = order_complex(*fx::chain(2));
  auto d = boundary_matrix(c2, 1);
  CHECK(d.rows() == 2);
  CHECK(d(0, 0) == -1);
  CHECK(d(1, 0) == 1);
  CHECK(smith_divisors(boundary_matrix(order_complex(*fx::crown4()), 1)).size() == 3);
  CHECK_THROWS_AS(boundary_matrix(c2, 2), Error);
  CHECK_THROWS_AS(boundary_matrix(c2, 0), Error);
  for (const auto& p : cat::all_up_to_iso(5)) {
    auto k = order_complex(*p);
    for (int n = 1; n < k.top_degree(); ++n) CHECK((boundary_matrix(k, n) * boundary_matrix(k, n + 1)).is_zero());
  }
  auto w = weak_complex(*fx::sphere(), 3);
  for (int n = 1; n < 3; ++n) CHECK((boundary_matrix(w, n) * boundary_matrix(w, n + 1)).is_zero());
}

TEST_CASE("homology of the standard examples") {
  CHECK(homology(*fx::crown4(), 1).to_string() == "Z");
  CHECK(homology(*fx::crown4(), 0).to_string() == "Z");
  CHECK(homology(*fx::sphere(), 2).to_string() == "Z");
  CHECK(homology(*fx::sphere(), 1).is_trivial());
  CHECK(homology(*fx::sphere(), 7).is_trivial());
  for (int n = 2; n <= 5; ++n) CHECK(homology(*fx::crown(n), 1).free_rank == static_cast<std::size_t>(n - 1));
}

TEST_CASE("homology invariants over all posets up to 5 points") {
  for (const auto& p : cat::all_up_to_iso(5)) {
    auto k = order_complex(*p);
    auto h0 = homology(k, 0);
    CHECK(h0.free_rank == components(*p).size());
    CHECK(h0.torsion.empty());
    long euler = 0, betti = 0;
    for (int n = 0; n <= k.top_degree(); ++n) {
      euler += (n % 2 ? -1 : 1) * static_cast<long>(k.count(n));
      betti += (n % 2 ? -1 : 1) * static_cast<long>(homology(k, n).free_rank);
    }
    CHECK(euler == betti);
    // a unique minimum makes the complex a cone
    Index bottom = -1;
    for (Index x = 0; x < static_cast<Index>(p->size()); ++x) {
      bool below_all = true;
      for (Index y = 0; y < static_cast<Index>(p->size()); ++y) below_all = below_all && p->leq(x, y);
      if (below_all) bottom = x;
    }
    if (bottom >= 0)
      for (int n = 1; n <= k.top_degree(); ++n) CHECK(homology(k, n).is_trivial());
  }
}

TEST_CASE("weak and strict chains give the same homology") {
  for (const auto& p : {fx::crown4(), fx::sphere(), fx::a3()}) {
    auto w = weak_complex(*p, 3);
    for (int n = 0; n <= 2; ++n) CHECK(homology(w, n) == homology(*p, n));
  }
}
