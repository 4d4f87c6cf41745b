#include "helpers.hpp"
#include "hnslope/finite_field.hpp"
#include "hnslope/padic.hpp"
#include "hnslope/series.hpp"

using namespace hnslope;
using testing::error_of;

TEST_CASE("finite fields") {
  FiniteField f4(2, {1, 1, 1});
  CHECK(f4.size() == 4);
  const auto a = f4.generator();
  CHECK(f4.mul(a, a) == f4.add(a, f4.one()));
  CHECK(f4.str(f4.mul(a, a)) == "a + 1");
  CHECK(f4.mul(a, f4.inv(a)) == f4.one());
  CHECK(error_of([] { FiniteField(2, {1, 0, 1}); }) == ErrorKind::InvalidArgument);
  CHECK(error_of([&] { (void)f4.inv(0); }) == ErrorKind::DivisionByZero);
}

TEST_CASE("valuations") {
  auto f2 = make_hahn_ring(FiniteField::prime(2));
  CHECK(HahnSeries::parse(f2, "t^(1/2) + t^2").valuation() == Valuation(Rational(1, 2)));
  auto q2 = make_padic_ring(2);
  CHECK(PadicNumber::from_int(q2, 12).valuation() == Valuation(2));
  auto xi = make_xi_ring();
  CHECK(XiSeries::parse(xi, "xi^-1 + 3").valuation() == Valuation(-1));
  CHECK(XiSeries::parse(xi, "0").valuation_bound().is_infinite());
}

TEST_CASE("series arithmetic") {
  auto f2 = make_hahn_ring(FiniteField::prime(2));
  const auto x = HahnSeries::parse(f2, "1 + t");
  const auto y = HahnSeries::parse(f2, "1 - t");
  CHECK((x * y).str() == "1 + t^2");

  auto f2p3 = make_hahn_ring(FiniteField::prime(2), Rational(3));
  const auto inv = HahnSeries::parse(f2p3, "1 + t").inverse();
  CHECK(inv.str() == "1 + t + t^2 + O(t^3)");
  CHECK(error_of([&] { (void)HahnSeries::zero(f2).inverse(); }) == ErrorKind::DivisionByZero);

  auto xi = make_xi_ring();
  CHECK((XiSeries::parse(xi, "xi - 2") * XiSeries::parse(xi, "xi + 2")).str() == "-4 + xi^2");
}

TEST_CASE("frobenius and residue") {
  auto f2 = make_hahn_ring(FiniteField::prime(2));
  CHECK(HahnSeries::parse(f2, "t^(1/2)").frobenius(2).str() == "t");
  CHECK(HahnSeries::one(f2).frobenius(2) == HahnSeries::one(f2));

  auto f4 = make_hahn_ring(FiniteField::make(2, {1, 1, 1}));
  CHECK(HahnSeries::parse(f4, "a*t").frobenius(2).str() == "(a + 1)*t^2");

  CHECK(HahnSeries::parse(f2, "1 + t^(1/3)").residue() == 1u);
  CHECK(HahnSeries::parse(f2, "t").residue() == 0u);
  CHECK(error_of([&] { (void)HahnSeries::parse(f2, "t^(-1)").residue(); }) == ErrorKind::NegativeValuation);
}

TEST_CASE("parse round trip") {
  auto f3 = make_hahn_ring(FiniteField::prime(3));
  const auto s = HahnSeries::parse(f3, "t^(1/2) + 2*t^3");
  REQUIRE(s.terms().size() == 2);
  CHECK(s.terms()[0].exp == Rational(1, 2));
  CHECK(s.terms()[1].coeff == 2u);
  CHECK(HahnSeries::parse(f3, s.str()) == s);
  CHECK(HahnSeries::parse(f3, "t^(-1) + O(t^4)").str() == "t^(-1) + O(t^4)");

  auto q3 = make_padic_ring(3);
  CHECK(PadicNumber::parse(q3, "p^2 + 1/p").value() == Rational(28, 3));
  CHECK(error_of([&] { HahnSeries::parse(f3, "t^^2"); }) == ErrorKind::ParseError);
}
