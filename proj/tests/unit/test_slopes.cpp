#include "helpers.hpp"
#include "hnslope/slopes.hpp"

using namespace hnslope;
using testing::error_of;
using testing::sv;

namespace {

PadicMatrix pm(const PadicRing& r, std::vector<std::vector<std::string>> rows) {
  std::vector<std::vector<PadicNumber>> m;
  for (auto& row : rows) {
    m.emplace_back();
    for (auto& x : row) m.back().push_back(PadicNumber::parse(r, x));
  }
  return PadicMatrix::from_rows(r, m);
}

XiMatrix xm(const XiRing& r, std::vector<std::vector<std::string>> rows) {
  std::vector<std::vector<XiSeries>> m;
  for (auto& row : rows) {
    m.emplace_back();
    for (auto& x : row) m.back().push_back(XiSeries::parse(r, x));
  }
  return XiMatrix::from_rows(r, m);
}

RationalMatrix col(std::vector<long> v) {
  RationalMatrix m;
  for (long x : v) m.push_back({Rational(x)});
  return m;
}

}  // namespace

TEST_CASE("newton types") {
  auto r = make_padic_ring(2);
  Isocrystal a(pm(r, {{"p", "0"}, {"0", "1"}}));
  Isocrystal b(pm(r, {{"0", "p"}, {"1", "0"}}));
  Isocrystal c(pm(r, {{"1/p", "0"}, {"0", "1/p"}}));
  CHECK(newton_type(a) == sv("[1, 0]"));
  CHECK(newton_type(b) == sv("[1/2, 1/2]"));
  CHECK(newton_type(c) == sv("[-1, -1]"));
  CHECK(newton_iota_type(a) == sv("[0, -1]"));
  CHECK(newton_iota_type(b) == sv("[-1/2, -1/2]"));
  CHECK(newton_iota_type(Isocrystal(pm(r, {{"1/p"}}))) == sv("[1]"));
  CHECK(error_of([&] { Isocrystal(pm(r, {{"1", "1"}, {"1", "1"}})); }) == ErrorKind::Singular);
}

TEST_CASE("hodge types and mazur") {
  auto r = make_padic_ring(3);
  Isocrystal a(pm(r, {{"p", "0"}, {"0", "1"}}));
  Isocrystal b(pm(r, {{"0", "p"}, {"1", "0"}}));
  CHECK(hodge_type_crystal(a) == sv("[0, -1]"));
  CHECK(hodge_type_crystal(b) == sv("[0, -1]"));
  CHECK(hodge_type_crystal(Isocrystal(PadicMatrix::identity(r, 2))) == sv("[0, 0]"));
  CHECK(mazur_check(a) == MazurResult::HoldsWithEquality);
  CHECK(mazur_check(b) == MazurResult::Holds);
  CHECK(mazur_check(Isocrystal(pm(r, {{"1/p"}}))) == MazurResult::HoldsWithEquality);
}

TEST_CASE("isocrystal twists and slope data") {
  auto r = make_padic_ring(2);
  Isocrystal a(pm(r, {{"p", "0"}, {"0", "1"}}));
  CHECK(newton_type(slope_twist(a, 1)) == sv("[0, -1]"));
  CHECK(hodge_type_crystal(slope_twist(Isocrystal(PadicMatrix::identity(r, 3)), 1)) == sv("[1, 1, 1]"));

  auto d = Isocrystal::from_slopes(r, sv("[3/2, 3/2, 0, -1/3, -1/3, -1/3]"));
  CHECK(d.rank() == 6);
  CHECK(newton_type(d) == sv("[3/2, 3/2, 0, -1/3, -1/3, -1/3]"));
  CHECK(error_of([&] { Isocrystal::from_slopes(r, sv("[1/2]")); }) == ErrorKind::InvalidArgument);
  CHECK(newton_type(tensor(a, a)) == tensor_type(newton_type(a), newton_type(a)));
}

TEST_CASE("hodge-tate modules") {
  auto r = make_xi_ring(8);
  CHECK(ht_hodge_type(HTModule(xm(r, {{"xi^-1", "0"}, {"0", "1"}}))) == sv("[1, 0]"));
  CHECK(ht_hodge_type(HTModule(xm(r, {{"1", "xi^-1"}, {"0", "1"}}))) == sv("[1, -1]"));
  CHECK(ht_hodge_type(HTModule(XiMatrix::identity(r, 3))) == sv("[0, 0, 0]"));
  CHECK(ht_degree(HTModule(xm(r, {{"xi^-2", "0"}, {"0", "1"}}))) == Rational(2));
  CHECK(ht_degree(HTModule(xm(r, {{"xi", "0"}, {"0", "xi"}}))) == Rational(-2));
  HTModule h(xm(r, {{"xi", "1"}, {"0", "xi^-1"}}));
  CHECK(slope_twist(h, 0).xi() == h.xi());
  CHECK(ht_hodge_type(slope_twist(h, 2)) == twist_shift(ht_hodge_type(h), Rational(2)));
}

TEST_CASE("hodge-tate fargues bound") {
  auto r = make_xi_ring(8);
  HTModule h(xm(r, {{"xi^-2", "0"}, {"0", "1"}}));
  auto b = ht_fargues_bound(h, {col({1, 0}), col({0, 1}), col({1, 1})}, true);
  CHECK(b.type == sv("[2, 0]"));
  CHECK(b.certified);
  REQUIRE(b.candidates.size() == 3);
  CHECK(b.candidates[0].second == Rational(2));
  CHECK(b.candidates[1].second == Rational(0));
  CHECK(b.candidates[2].second == Rational(0));

  auto only_v = ht_fargues_bound(h, {RationalMatrix{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}}, false);
  CHECK(only_v.type == sv("[1, 1]"));
  CHECK_FALSE(only_v.certified);

  auto rank1 = ht_fargues_bound(HTModule(xm(r, {{"xi^-3 + 1"}})), {}, false);
  CHECK(rank1.type == sv("[3]"));
  CHECK(rank1.certified);

  CHECK(error_of([&] { ht_fargues_bound(h, {col({0, 0})}, false); }) == ErrorKind::RankMismatch);
}

TEST_CASE("mono-epi bound") {
  auto r = make_xi_ring(8);
  const std::vector<RationalMatrix> axes{col({1, 0}), col({0, 1}), col({1, 1})};
  HTModule h1(xm(r, {{"xi^-1", "0"}, {"0", "1"}}));
  auto same = ht_monoepi_check(h1, h1, axes, true);
  CHECK(same.length == Rational(0));
  CHECK(same.t1 == same.t2);

  auto tw = ht_monoepi_check(h1, slope_twist(h1, 1), axes, true);
  CHECK(tw.length == Rational(2));
  CHECK(tw.t2 == twist_shift(tw.t1, Rational(1)));
  CHECK((tw.checked && tw.lower_ok && tw.upper_ok));

  HTModule h2(xm(r, {{"xi^-1", "0"}, {"0", "xi^-1"}}));
  auto one = ht_monoepi_check(h1, h2, axes, true);
  CHECK(one.length == Rational(1));
  CHECK((one.checked && one.lower_ok && one.upper_ok));

  CHECK(error_of([&] { ht_monoepi_check(h2, h1, axes, true); }) == ErrorKind::NotContained);
}
