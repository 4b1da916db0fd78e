#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "posetforge/error.hpp"
#include "posetforge/io.hpp"

using namespace pf;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("cochain files") {
  const Field f5 = Field::finite(5);
  auto sphere = fx::sphere();
  std::string text = "poset: sphere.poset\n# generator\n";
  for (const char* c : {"1 3 5", "1 3 6", "1 4 5", "1 4 6", "2 3 5", "2 3 6", "2 4 5", "2 4 6"})
    text += std::string(c) + (std::string(c) == "1 3 5" ? " : 2\n" : " : 1\n");
  auto c = parse_cochain(text, sphere, f5);
  CHECK(c.degree() == 2);
  CHECK(c.domain() == ChainDomain::Strict);
  CHECK(c.at({0, 2, 4}) == 2);
  CHECK(poset_reference(text) == std::optional<std::string>("sphere.poset"));

  auto c2 = fx::chain(2);
  auto w = parse_cochain("a a a : 1\na a b : 1\na b b : 3\nb b b : 3\n", c2, f5);
  CHECK(w.domain() == ChainDomain::Weak);
  auto q = parse_cochain("a b: -2/3\n", c2, Field::rationals());
  CHECK(q.at({0, 1}) == Scalar(-2, 3));

  CHECK(code_of([&] { parse_cochain("a a b : 1\n", c2, f5); }) == ErrorCode::MissingValue);
  CHECK(code_of([&] { parse_cochain("a b : 1\na b : 2\n", c2, f5); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { parse_cochain("a b : 1\na a b : 2\n", c2, f5); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { parse_cochain("a b 1\n", c2, f5); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { parse_cochain("a z : 1\n", c2, f5); }) == ErrorCode::UnknownElement);
  CHECK(code_of([&] { parse_cochain("a b : 0\n", c2, f5); }) == ErrorCode::NotInvertible);
  CHECK(parse_cochain("a b : 7\n", c2, f5).at({0, 1}) == 2);
  CHECK(code_of([&] { parse_cochain("# nothing\n", c2, f5); }) == ErrorCode::ParseError);
}

TEST_CASE("rep files") {
  const Field f5 = Field::finite(5);
  const std::string crown = "elements: a b c d\ncovers: a<c a<d b<c b<d\n";
  auto m = parse_rep(crown + "support: a b c d\nalpha: a c 2\n", f5);
  CHECK(m.dimension() == 4);
  CHECK(m.alpha(0, 2) == 2);
  CHECK(m.alpha(1, 3) == 1);

  // longer intervals follow from the covers
  auto c3 = parse_rep("elements: a b c\ncovers: a<b b<c\nsupport: a b c\nalpha: a b 2\nalpha: b c 3\n", f5);
  CHECK(c3.alpha(0, 2) == 1);
  // an explicit rel drops a<c
  auto disc = parse_rep("elements: a b c\ncovers: a<b b<c\nsupport: a b c\nrel: a<b\n", f5);
  CHECK_FALSE(disc.support().rel(0, 2));
  CHECK(disc.support().rel(0, 1));
  // the induced order on a support
  auto tail = parse_rep("elements: a b c\ncovers: a<b b<c\nsupport: c a b\n", f5);
  CHECK(tail.support().rel(0, 2));

  CHECK(code_of([&] { parse_rep(crown + "alpha: a c 2\n", f5); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { parse_rep("support: a\n", f5); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { parse_rep(crown + "support: a c\nalpha: b c 2\n", f5); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { parse_rep(crown + "support: a b c\nrel: a<d\n", f5); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { parse_rep(crown + "support: a a\n", f5); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { parse_rep(crown + "support: a c\nbogus: 1\n", f5); }) == ErrorCode::ParseError);
  CHECK(code_of([&] {
          parse_rep("elements: a b c\ncovers: a<b b<c\nsupport: a b c\nalpha: a b 2\nalpha: b c 3\nalpha: a c 2\n", f5);
        }) == ErrorCode::NotMultiplicative);
  // a<c without b between them in the support order is not closed
  CHECK(code_of([&] { parse_rep("elements: a b c\ncovers: a<b b<c\nsupport: a b c\nrel: a<c\n", f5); }) ==
        ErrorCode::NotClosed);

  // a poset reference resolves against the rep file's directory
  const auto dir = std::filesystem::temp_directory_path() / "posetforge_io_test";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "crown.poset") << crown;
  std::ofstream(dir / "m.rep") << "poset: crown.poset\nsupport: a c\n";
  auto r = load_rep(dir / "m.rep", f5);
  CHECK(r.parent() == *fx::crown4());
  CHECK(r.support().strict_pairs() == std::vector<IndexPair>{{0, 2}});
  CHECK(code_of([&] { load_rep(dir / "missing.rep", f5); }) == ErrorCode::ParseError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("matrix files") {
  auto a = parse_matrix("# worked example\n2 3\n0 1/2\n", Field::rationals());
  CHECK(a.size() == 2);
  CHECK(a(1, 1) == Scalar(1, 2));
  auto b = parse_matrix("1 4\n0 2\n", Field::finite(5));
  CHECK(b(0, 1) == 4);
  CHECK(code_of([&] { parse_matrix("1 2\n3\n", Field::rationals()); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { parse_matrix("1 2\n", Field::rationals()); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { parse_matrix("1 x\n1 1\n", Field::rationals()); }) == ErrorCode::ParseError);
  CHECK(parse_matrix("", Field::rationals()).size() == 0);
}
