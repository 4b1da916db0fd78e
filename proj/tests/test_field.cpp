#include "doctest.h"
#include "posetforge/error.hpp"
#include "posetforge/field.hpp"

using namespace pf;

TEST_CASE("finite fields: least primitive roots and log tables") {
  CHECK(Field::finite(5).generator() == 2);
  CHECK(Field::finite(7).generator() == 3);
  CHECK(Field::finite(2).generator() == 1);
  for (std::uint64_t q : {2, 3, 4, 5, 8, 9, 25, 27, 101}) {
    const Field f = Field::finite(q);
    for (std::uint64_t a = 1; a < q; ++a) CHECK(f.exp(f.log(static_cast<unsigned long>(a))) == static_cast<unsigned long>(a));
  }
}

TEST_CASE("field axioms on small fields") {
  for (std::uint64_t q : {2, 4, 5, 8, 9}) {
    const Field f = Field::finite(q);
    for (std::uint64_t i = 0; i < q; ++i)
      for (std::uint64_t j = 0; j < q; ++j) {
        const Scalar a = static_cast<unsigned long>(i), b = static_cast<unsigned long>(j);
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        CHECK(f.sub(f.add(a, b), b) == a);
        if (b != 0) CHECK(f.mul(f.div(a, b), b) == a);
        for (std::uint64_t k = 0; k < q; ++k) {
          const Scalar c = static_cast<unsigned long>(k);
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
          CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
        }
      }
  }
}

TEST_CASE("field parsing and errors") {
  CHECK(Field::parse("Q").kind() == FieldKind::Rational);
  CHECK(Field::parse("5").order() == 5);
  CHECK(Field::parse("F_9").order() == 9);
  CHECK(Field::parse("closed:2").algebraically_closed());
  CHECK(Field::parse("C").characteristic() == 0);
  CHECK_THROWS_AS(Field::parse("6"), Error);
  CHECK_THROWS_AS(Field::finite(1u << 21), Error);
  const Field q = Field::rationals();
  CHECK(q.parse_element("-3/6") == Scalar(-1, 2));
  CHECK(Field::finite(5).parse_element("-1") == 4);
  CHECK_THROWS_AS(Field::symbolic(0, true).mul(1, 1), Error);
  CHECK_THROWS_AS(q.inv(0), Error);
}

TEST_CASE("linear algebra over fields") {
  const Field f = Field::finite(3);
  FieldMatrix m(2, 3);
  m(0, 0) = 1; m(0, 1) = 2;
  m(1, 0) = 2; m(1, 1) = 1;
  CHECK(rank(f, m) == 1);
  const auto ns = nullspace(f, m);
  CHECK(ns.size() == 2);
  for (const auto& v : ns) {
    FieldMatrix col(3, 1);
    for (int i = 0; i < 3; ++i) col(static_cast<std::size_t>(i), 0) = v[static_cast<std::size_t>(i)];
    CHECK(multiply(f, m, col).is_zero());
  }
}
