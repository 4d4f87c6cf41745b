#include "helpers.hpp"
#include "hnslope/finite_field.hpp"
#include "hnslope/lattice.hpp"

using namespace hnslope;
using testing::error_of;
using testing::sv;

namespace {

PadicRing q2() { return make_padic_ring(2); }

Matrix<PadicNumber> padic(const PadicRing& r, std::vector<std::vector<long>> rows) {
  std::vector<std::vector<PadicNumber>> m;
  for (auto& row : rows) {
    m.emplace_back();
    for (long x : row) m.back().push_back(PadicNumber::from_int(r, x));
  }
  return Matrix<PadicNumber>::from_rows(r, m);
}

template <class R>
Matrix<R> parsed(const typename R::Ring& ring, std::vector<std::vector<std::string>> rows) {
  std::vector<std::vector<R>> m;
  for (auto& row : rows) {
    m.emplace_back();
    for (auto& x : row) m.back().push_back(R::parse(ring, x));
  }
  return Matrix<R>::from_rows(ring, m);
}

}  // namespace

TEST_CASE("smith normal form") {
  auto r = q2();
  auto x = padic(r, {{2, 1}, {0, 2}});
  auto s = snf(x);
  CHECK(s.valuations == std::vector<Valuation>{Valuation(0), Valuation(2)});
  CHECK(s.rank == 2);

  auto d = snf(padic(r, {{2, 2}, {2, 2}}));
  CHECK(d.valuations[0] == Valuation(1));
  CHECK(d.valuations[1].is_infinite());
  CHECK(d.rank == 1);

  auto f2 = make_hahn_ring(FiniteField::prime(2));
  auto h = snf(parsed<HahnSeries>(f2, {{"t^(1/2)", "0"}, {"0", "1"}}));
  CHECK(h.valuations == std::vector<Valuation>{Valuation(0), Valuation(Rational(1, 2))});

  auto t = snf(padic(r, {{2, 1}, {0, 2}}), true);
  REQUIRE(t.left);
  CHECK(det_valuation(*t.left) == Valuation(0));
}

TEST_CASE("lattice distance and torsion") {
  auto r = q2();
  CHECK(lattice_distance(padic(r, {{1, 0}, {0, 1}})) == sv("[0, 0]"));
  CHECK(lattice_distance(padic(r, {{2, 1}, {0, 2}})) == sv("[0, -2]"));
  auto xi = make_xi_ring();
  CHECK(lattice_distance(parsed<XiSeries>(xi, {{"xi^-1", "0"}, {"0", "1"}})) == sv("[1, 0]"));
  CHECK(error_of([&] { lattice_distance(padic(r, {{1, 1}, {1, 1}})); }) == ErrorKind::Singular);

  CHECK(torsion_inv(padic(r, {{4, 0}, {0, 2}})) == PlusInfType::parse("[2, 1]"));
  CHECK(torsion_inv(padic(r, {{4, 0}, {0, 2}})).length() == Rational(3));
  CHECK(torsion_inv(padic(r, {{1, 0}, {0, 1}})).length() == Rational(0));
  CHECK(torsion_inv(padic(r, {{2, 1}, {0, 2}})) == PlusInfType::parse("[2]"));
  CHECK(error_of([&] { torsion_inv(padic(r, {{2, 2}, {2, 2}})); }) == ErrorKind::NotTorsion);
}

TEST_CASE("minors") {
  auto r = q2();
  auto x = padic(r, {{2, 1}, {0, 2}});
  CHECK(minors_min_valuation(x, 1) == Valuation(0));
  CHECK(minors_min_valuation(x, 2) == Valuation(2));
  CHECK(minors_min_valuation(padic(r, {{0, 0}, {0, 0}}), 1).is_infinite());
}

TEST_CASE("relative filtration") {
  auto r = q2();
  auto id = relative_filtration(padic(r, {{1, 0}, {0, 1}}));
  CHECK(id.jumps == std::vector<Rational>{Rational(0)});
  CHECK(id.bases[0].size() == 2);

  auto f2 = make_hahn_ring(FiniteField::prime(2));
  auto f = relative_filtration(parsed<HahnSeries>(f2, {{"t", "0"}, {"0", "1"}}));
  CHECK(f.jumps == std::vector<Rational>{Rational(0), Rational(-1)});
  REQUIRE(f.bases[0].size() == 1);
  CHECK(f.bases[0][0][0].is_exact_zero());
  CHECK(f.bases[0][0][1] == HahnSeries::one(f2));
  CHECK(f.bases[1].size() == 2);

  auto xi = make_xi_ring();
  auto s = relative_filtration(parsed<XiSeries>(xi, {{"xi^-1", "0"}, {"0", "xi^-1"}}));
  CHECK(s.jumps == std::vector<Rational>{Rational(1)});
  CHECK(s.bases[0].size() == 2);
}

TEST_CASE("exact sequence bounds") {
  auto a = exact_seq_bounds(PlusInfType::parse("[1]"), PlusInfType::parse("[1]"), PlusInfType::parse("[1, 1]"));
  CHECK(a.length_additive);
  CHECK(a.lower_ok);
  CHECK(a.upper_ok);
  CHECK(a.split_equal);
  auto b = exact_seq_bounds(PlusInfType::parse("[1]"), PlusInfType::parse("[1]"), PlusInfType::parse("[2]"));
  CHECK(b.lower_ok);
  CHECK(b.upper_ok);
  CHECK_FALSE(b.split_equal);
  auto c = exact_seq_bounds(PlusInfType::parse("[1]"), PlusInfType::parse("[1]"), PlusInfType::parse("[3]"));
  CHECK_FALSE(c.length_additive);
}

TEST_CASE("induced lattices") {
  auto r = q2();
  auto id = padic(r, {{1, 0}, {0, 1}});
  auto proj = padic(r, {{0, 1}});
  auto same = induced_lattices(id, id, proj);
  CHECK(same.d2 == sv("[0, 0]"));
  CHECK(same.inequality_holds);

  auto scalar = induced_lattices(id, padic(r, {{2, 0}, {0, 2}}), proj);
  CHECK(scalar.d2 == sv("[-1, -1]"));
  CHECK(scalar.d1 == sv("[-1]"));
  CHECK(scalar.d3 == sv("[-1]"));
  CHECK(scalar.inequality_holds);

  auto mixed = induced_lattices(id, padic(r, {{2, 1}, {0, 2}}), proj);
  CHECK(mixed.d2 == sv("[0, -2]"));
  CHECK(mixed.d1 == sv("[-1]"));
  CHECK(mixed.d3 == sv("[-1]"));
  CHECK(mixed.inequality_holds);
}

TEST_CASE("saturation") {
  auto r = q2();
  auto sat = saturate(padic(r, {{2}, {4}}));
  CHECK(sat.pivot_rows == std::vector<std::size_t>{0});
  CHECK(sat.basis(0, 0).value() == Rational(1));
  CHECK(sat.basis(1, 0).value() == Rational(2));
  CHECK(error_of([&] { saturate(padic(r, {{1, 2}, {1, 2}})); }) == ErrorKind::RankMismatch);
}
