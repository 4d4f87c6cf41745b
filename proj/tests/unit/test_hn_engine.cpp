#include "helpers.hpp"
#include "hnslope/hn_engine.hpp"

using namespace hnslope;
using testing::error_of;
using testing::sv;

namespace {

RankedPoset two_lines(const char* deg_a, const char* deg_b) {
  std::string text = "0 0 0\na 1 ";
  text += deg_a;
  text += "\nb 1 ";
  text += deg_b;
  text += "\n1 2 1\n0 < a\n0 < b\na < 1\nb < 1\n";
  return RankedPoset::parse(text);
}

}  // namespace

TEST_CASE("filtration type from chain ranks") {
  auto p = RankedPoset::parse("z 0 0\nx 1 2\ny 3 2\nz < x\nx < y\n");
  CHECK(filtration_type(GammaFiltration{{0, 1, 2}, {Rational(2), Rational(0)}}, p) == sv("[2, 0, 0]"));

  auto q = RankedPoset::parse("z 0 0\nx 2 2\ny 3 1\nz < x\nx < y\n");
  CHECK(filtration_type(GammaFiltration{{0, 1, 2}, {Rational(1), Rational(-1)}}, q) == sv("[1, 1, -1]"));
  CHECK(filtration_type(GammaFiltration{{0, 2}, {Rational(1, 3)}}, q) == sv("[1/3, 1/3, 1/3]"));
}

TEST_CASE("hn filtration") {
  auto p = two_lines("1", "0");
  auto f = hn_filtration(p);
  REQUIRE(f.chain.size() == 3);
  CHECK(p.element(f.chain[1]).id == "a");
  CHECK(f.jumps == std::vector<Rational>{Rational(1), Rational(0)});
  CHECK_FALSE(semistable(p));

  CHECK(error_of([] { hn_filtration(two_lines("1", "1")); }) == ErrorKind::NotAdmissible);

  auto s = two_lines("0", "-1");
  auto g = hn_filtration(s);
  CHECK(g.chain.size() == 2);
  CHECK(g.jumps == std::vector<Rational>{Rational(1, 2)});
  CHECK(semistable(s));

  CHECK(semistable(RankedPoset::parse("0 0 0\n1 1 7\n0 < 1\n")));
}

TEST_CASE("poset validation") {
  CHECK(error_of([] { RankedPoset::parse("0 0 0\na 0 1\n0 < a\n"); }) == ErrorKind::InvalidPoset);
  CHECK(error_of([] { RankedPoset::parse("0 0 1\na 1 1\n0 < a\n"); }) == ErrorKind::InvalidPoset);
  CHECK(error_of([] { RankedPoset::parse("0 0 0\na one 1\n"); }) == ErrorKind::ParseError);
}

TEST_CASE("concat check") {
  CHECK(concat_check(sv("[1]"), sv("[0]"), sv("[1, 0]")) == ConcatResult::Equal);
  CHECK(concat_check(sv("[1]"), sv("[0]"), sv("[1/2, 1/2]")) == ConcatResult::DominatedBy);
  CHECK(concat_check(sv("[1]"), sv("[0]"), sv("[2, -1]")) == ConcatResult::Violation);
  CHECK(error_of([] { concat_check(sv("[1]"), sv("[0]"), sv("[0]")); }) == ErrorKind::LengthMismatch);
}
