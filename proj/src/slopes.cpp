#include "hnslope/slopes.hpp"

#include <algorithm>
#include <map>

#include "hnslope/error.hpp"

namespace hnslope {

namespace {

constexpr std::size_t kNewtonMaxRank = 16;

RationalMatrix transpose(const RationalMatrix& w) {
  if (w.empty()) return {};
  RationalMatrix t(w.front().size(), std::vector<Rational>(w.size()));
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j < w[i].size(); ++j) t[j][i] = w[i][j];
  }
  return t;
}

// In-place RREF over Q; returns the rank (nonzero rows first).
std::size_t rref(RationalMatrix& a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size(), cols = a.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Rational inv = Rational(1) / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

XiMatrix to_xi(const XiRing& ring, const RationalMatrix& w) {
  const std::size_t cols = w.empty() ? 0 : w.front().size();
  XiMatrix m(ring, w.size(), cols);
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = XiSeries::constant(ring, w[i][j]);
  }
  return m;
}

bool span_contains(const RationalMatrix& big_rows, const RationalMatrix& small_rows) {
  RationalMatrix both = big_rows;
  both.insert(both.end(), small_rows.begin(), small_rows.end());
  return rref(both) == big_rows.size();
}

}  // namespace

Isocrystal::Isocrystal(PadicMatrix phi) : phi_(std::move(phi)) {
  if (!phi_.square()) fail(ErrorKind::RankMismatch, "Frobenius matrix must be square");
  if (determinant(phi_).is_exact_zero()) fail(ErrorKind::Singular, "Frobenius matrix is not invertible");
}

Isocrystal Isocrystal::from_slopes(const PadicRing& ring, const SlopeVector& slopes) {
  std::map<Rational, std::size_t, std::greater<>> counts;
  for (const auto& s : slopes) ++counts[s];
  PadicMatrix m(ring, 0, 0);
  for (const auto& [slope, count] : counts) {
    const long h = slope.denominator().get_si();
    if (count % static_cast<std::size_t>(h) != 0) {
      fail(ErrorKind::InvalidArgument, "slope " + slope.str() + " must occur a multiple of " +
                                           std::to_string(h) + " times");
    }
    PadicMatrix block(ring, h, h);
    for (long i = 1; i < h; ++i) block(i, i - 1) = PadicNumber::one(ring);
    block(0, h - 1) = PadicNumber::uniformizer_power(ring, Rational(slope.numerator().get_si()));
    for (std::size_t c = 0; c < count / h; ++c) m = block_diagonal(m, block);
  }
  return Isocrystal(std::move(m));
}

SlopeVector newton_type(const Isocrystal& d) {
  const std::size_t n = d.rank();
  if (n > kNewtonMaxRank) fail(ErrorKind::TooLarge, "Newton polygon limited to rank 16");
  const auto c = charpoly(d.phi());
  // Coefficient of T^i is c[n - i].
  std::vector<std::pair<long, Rational>> pts;
  for (std::size_t i = 0; i <= n; ++i) {
    const auto& a = c[n - i];
    if (!a.is_exact_zero()) pts.emplace_back(static_cast<long>(i), a.valuation().value());
  }
  std::vector<std::pair<long, Rational>> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& [x1, y1] = hull[hull.size() - 2];
      const auto& [x2, y2] = hull.back();
      // Drop the middle point unless it lies strictly below the chord.
      if ((y2 - y1) * Rational(p.first - x1) >= (p.second - y1) * Rational(x2 - x1)) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(p);
  }
  std::vector<Rational> out;
  for (std::size_t s = 1; s < hull.size(); ++s) {
    const long w = hull[s].first - hull[s - 1].first;
    const Rational slope = (hull[s - 1].second - hull[s].second) / Rational(w);
    for (long k = 0; k < w; ++k) out.push_back(slope);
  }
  return SlopeVector::from_multiset(std::move(out));
}

SlopeVector newton_iota_type(const Isocrystal& d) { return involution(newton_type(d)); }

SlopeVector hodge_type_crystal(const CrystalLattice& x) { return lattice_distance(x.phi()); }

const char* to_string(MazurResult r) noexcept {
  switch (r) {
    case MazurResult::Holds: return "Holds";
    case MazurResult::HoldsWithEquality: return "HoldsWithEquality";
    case MazurResult::Violation: return "Violation";
  }
  return "?";
}

MazurResult mazur_check(const CrystalLattice& x) {
  switch (dominance_compare(newton_iota_type(x), hodge_type_crystal(x))) {
    case Dominance::Less: return MazurResult::Holds;
    case Dominance::Equal: return MazurResult::HoldsWithEquality;
    default: return MazurResult::Violation;
  }
}

Isocrystal slope_twist(const Isocrystal& d, long n) {
  return Isocrystal(d.phi().scaled(PadicNumber::uniformizer_power(d.phi().ring(), Rational(-n))));
}

Isocrystal tensor(const Isocrystal& a, const Isocrystal& b) {
  if (a.prime() != b.prime()) fail(ErrorKind::FieldMismatch, "isocrystals over different primes");
  return Isocrystal(kronecker(a.phi(), b.phi()));
}

HTModule::HTModule(XiMatrix xi) : xi_(std::move(xi)) {
  if (!xi_.square()) fail(ErrorKind::RankMismatch, "Ξ-basis matrix must be square");
  if (xi_.rows() > 0 && det_valuation(xi_).is_infinite()) {
    fail(ErrorKind::Singular, "Ξ-basis matrix is not invertible");
  }
}

SlopeVector ht_hodge_type(const HTModule& h) { return lattice_distance(h.xi()); }

Rational ht_degree(const HTModule& h) { return -det_valuation(h.xi()).value(); }

HTModule slope_twist(const HTModule& h, long n) {
  return HTModule(h.xi().scaled(XiSeries::uniformizer_power(h.ring(), Rational(-n))));
}

RationalMatrix column_span_rref(const RationalMatrix& w) {
  RationalMatrix t = transpose(w);
  t.resize(rref(t));
  return t;
}

std::size_t rational_rank(const RationalMatrix& w) {
  RationalMatrix t = w;
  return rref(t);
}

Rational ht_subspace_degree(const HTModule& h, const RationalMatrix& w) {
  const std::size_t n = h.rank();
  if (w.size() != n) fail(ErrorKind::RankMismatch, "candidate lives in a space of the wrong dimension");
  const std::size_t k = w.empty() ? 0 : w.front().size();
  if (rational_rank(w) != k) fail(ErrorKind::RankMismatch, "candidate columns are dependent");
  if (k == 0) return Rational(0);
  // Ξ^{-1}W up to the scalar det Ξ: saturate, then read the change of basis on the pivot rows.
  const Rational vdet = det_valuation(h.xi()).value();
  const XiMatrix g = adjugate(h.xi()) * to_xi(h.ring(), w);
  const auto sat = saturate(g);
  std::vector<std::size_t> cols(k);
  for (std::size_t j = 0; j < k; ++j) cols[j] = j;
  const Valuation v = det_valuation(g.submatrix(sat.pivot_rows, cols));
  return v.value() - Rational(static_cast<long>(k)) * vdet;
}

HTFarguesBound ht_fargues_bound(const HTModule& h, const std::vector<RationalMatrix>& candidates,
                                bool exhaustive) {
  const std::size_t n = h.rank();
  HTFarguesBound out;
  std::vector<RationalMatrix> spans;
  for (const auto& w : candidates) {
    if (w.size() != n) fail(ErrorKind::RankMismatch, "candidate lives in a space of the wrong dimension");
    const std::size_t k = w.empty() ? 0 : w.front().size();
    if (rational_rank(w) != k) fail(ErrorKind::RankMismatch, "candidate columns are dependent");
    RationalMatrix span = column_span_rref(w);
    if (span.empty() || span.size() == n) continue;
    if (std::find(spans.begin(), spans.end(), span) != spans.end()) continue;
    spans.push_back(span);
    out.candidates.emplace_back(transpose(span), ht_subspace_degree(h, w));
  }

  std::vector<PosetElement> elements{{"0", 0, Rational(0)}};
  for (std::size_t i = 0; i < spans.size(); ++i) {
    elements.push_back({"W" + std::to_string(i), static_cast<long>(spans[i].size()), out.candidates[i].second});
  }
  elements.push_back({"V", static_cast<long>(n), ht_degree(h)});
  std::vector<std::pair<std::size_t, std::size_t>> relations;
  const std::size_t top = elements.size() - 1;
  for (std::size_t i = 0; i < spans.size(); ++i) {
    relations.emplace_back(0, i + 1);
    relations.emplace_back(i + 1, top);
    for (std::size_t j = 0; j < spans.size(); ++j) {
      if (spans[i].size() < spans[j].size() && span_contains(spans[j], spans[i])) relations.emplace_back(i + 1, j + 1);
    }
  }
  if (spans.empty()) relations.emplace_back(0, top);
  const RankedPoset poset(elements, relations, 0, top);
  out.type = filtration_type(hn_filtration(poset), poset);
  out.certified = exhaustive || n == 1;
  return out;
}

MonoEpiReport ht_monoepi_check(const HTModule& h1, const HTModule& h2,
                               const std::vector<RationalMatrix>& candidates, bool exhaustive) {
  if (h1.rank() != h2.rank()) fail(ErrorKind::RankMismatch, "Hodge-Tate modules of different rank");
  const Rational v1 = det_valuation(h1.xi()).value();
  const Rational v2 = det_valuation(h2.xi()).value();
  const XiMatrix change = adjugate(h2.xi()) * h1.xi();
  for (std::size_t i = 0; i < change.rows(); ++i) {
    for (std::size_t j = 0; j < change.cols(); ++j) {
      if (change(i, j).valuation_bound() < Valuation(v2)) {
        fail(ErrorKind::NotContained, "Ξ1 is not contained in Ξ2");
      }
    }
  }
  MonoEpiReport report;
  report.length = v1 - v2;
  const auto b1 = ht_fargues_bound(h1, candidates, exhaustive);
  const auto b2 = ht_fargues_bound(h2, candidates, exhaustive);
  report.t1 = b1.type;
  report.t2 = b2.type;
  report.checked = b1.certified && b2.certified;
  if (report.checked) {
    report.lower_ok = report.upper_ok = true;
    // Both polygons have integer breakpoints, so checking s = 0..r suffices.
    for (std::size_t s = 0; s <= h1.rank(); ++s) {
      const Rational delta = report.t2.partial_sum(s) - report.t1.partial_sum(s);
      if (delta.sign() < 0) report.lower_ok = false;
      if (delta > report.length) report.upper_ok = false;
    }
  }
  return report;
}

}  // namespace hnslope
