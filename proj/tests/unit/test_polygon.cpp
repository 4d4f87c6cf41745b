#include "helpers.hpp"

using namespace hnslope;
using testing::error_of;
using testing::sv;

TEST_CASE("dominance") {
  CHECK(dominance_compare(sv("[1, 1]"), sv("[2, 0]")) == Dominance::Less);
  CHECK(dominance_compare(sv("[3, -1]"), sv("[3, -1]")) == Dominance::Equal);
  CHECK(dominance_compare(sv("[2, 0]"), sv("[1, 0]")) == Dominance::DegMismatch);
  CHECK(dominance_compare(sv("[2, 0]"), sv("[1, 1]")) == Dominance::Greater);
}

TEST_CASE("involution and stats") {
  CHECK(involution(sv("[2, 1, 0]")) == sv("[0, -1, -2]"));
  CHECK(involution(SlopeVector()).empty());
  CHECK(involution(involution(sv("[3, -1]"))) == sv("[3, -1]"));

  auto st = stats(sv("[3, 1, -2]"));
  CHECK(st.deg == Rational(2));
  CHECK(*st.max == Rational(3));
  CHECK(*st.min == Rational(-2));
  CHECK(*stats(sv("[5]")).min == Rational(5));
  CHECK(error_of([] { (void)SlopeVector().max(); }) == ErrorKind::EmptyType);
}

TEST_CASE("convex sum and eval") {
  CHECK(convex_sum(sv("[2]"), sv("[1, 0]")) == sv("[2, 1, 0]"));
  CHECK(convex_sum(SlopeVector(), sv("[1, 0]")) == sv("[1, 0]"));
  CHECK(eval(convex_sum(sv("[2]"), sv("[1, 0]")), Rational(3, 2)) == Rational(5, 2));
  CHECK(eval(sv("[2, 1, 0]"), Rational(0)) == Rational(0));
  CHECK(eval(sv("[2, 1, 0]"), Rational(3)) == Rational(3));
  auto a = ConcavePolygon::from_type(sv("[2]"));
  auto b = ConcavePolygon::from_type(sv("[1, 0]"));
  CHECK(convex_sum(a, b) == ConcavePolygon::from_type(sv("[2, 1, 0]")));
}

TEST_CASE("products and twists") {
  CHECK(tensor_type(sv("[1, 0]"), sv("[1, 0]")) == sv("[2, 1, 1, 0]"));
  CHECK(ext_type(sv("[3, 1, 0]"), 2) == sv("[4, 3, 1]"));
  CHECK(sym_type(sv("[1, 0]"), 2) == sv("[2, 1, 0]"));
  CHECK(twist_shift(sv("[0, -1]"), Rational(1)) == sv("[1, 0]"));
  CHECK(twist_shift(sv("[0]"), Rational(1)) == sv("[1]"));
}

TEST_CASE("rescale") {
  auto r = rescale(sv("[2, 0]"), 2);
  REQUIRE(r.segments().size() == 2);
  CHECK(r.segments()[0].slope == Rational(2));
  CHECK(r.segments()[0].width == Rational(1, 2));
  CHECK(rescale(sv("[1, 1, 0, 0]"), 2) == ConcavePolygon::from_type(sv("[1, 0]")));
}

TEST_CASE("limit envelope") {
  auto one = ConcavePolygon::from_type(sv("[1, 0]"));
  auto rep = limit_envelope({{1, one}, {2, rescale(sv("[1, 1, 0, 0]"), 2)}});
  CHECK(rep.infimum == one);
  CHECK(rep.violations.empty());

  auto second = ConcavePolygon::parse("{3/2:1, 1/2:1}");
  rep = limit_envelope({{1, ConcavePolygon::from_type(sv("[2, 0]"))}, {2, second}});
  CHECK(rep.violations.empty());
  CHECK(rep.infimum == second);
}

TEST_CASE("parse errors") {
  CHECK(sv("[3, 1/2, -2]").size() == 3);
  CHECK(error_of([] { sv("[1/2, 3]"); }) == ErrorKind::SchemaError);
  CHECK(error_of([] { sv("1, 2"); }) == ErrorKind::ParseError);
}
