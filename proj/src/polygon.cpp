#include "hnslope/polygon.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "hnslope/error.hpp"

namespace hnslope {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits the inside of a bracketed list; returns an empty vector for an empty list.
std::vector<std::string_view> bracket_items(std::string_view text, char open, char close,
                                             const char* what) {
  std::string_view s = trim(text);
  if (s.size() < 2 || s.front() != open || s.back() != close) {
    fail(ErrorKind::ParseError, std::string("expected ") + what + " enclosed in '" + open +
                                    close + "', got '" + std::string(text) + "'");
  }
  s = trim(s.substr(1, s.size() - 2));
  std::vector<std::string_view> items;
  if (s.empty()) return items;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    items.push_back(trim(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  for (auto item : items) {
    if (item.empty()) fail(ErrorKind::ParseError, std::string("empty item in ") + what);
  }
  return items;
}

std::string join(const std::vector<Rational>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].str();
  }
  return out + "]";
}

bool non_increasing(const std::vector<Rational>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i - 1] < v[i]) return false;
  }
  return true;
}

void sort_desc(std::vector<Rational>& v) { std::sort(v.begin(), v.end(), std::greater<>()); }

Dominance classify(const std::vector<int>& signs, bool totals_equal) {
  bool any_less = false;
  bool any_greater = false;
  for (int s : signs) {
    any_less |= s < 0;
    any_greater |= s > 0;
  }
  if (any_less && any_greater) return Dominance::Incomparable;
  if (!totals_equal) return Dominance::DegMismatch;
  if (any_greater) return Dominance::Greater;
  if (any_less) return Dominance::Less;
  return Dominance::Equal;
}

// Union of the breakpoints of several polygons of the same width.
std::vector<Rational> merged_breakpoints(const std::vector<const ConcavePolygon*>& polys) {
  std::vector<Rational> xs;
  for (const auto* p : polys) {
    auto b = p->breakpoints();
    xs.insert(xs.end(), b.begin(), b.end());
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

// Slope of p on the open interval starting at x (x < width).
Rational slope_after(const ConcavePolygon& p, const Rational& x) {
  Rational left = 0;
  for (const auto& seg : p.segments()) {
    const Rational right = left + seg.width;
    if (x < right) return seg.slope;
    left = right;
  }
  fail(ErrorKind::OutOfDomain, "no segment after " + x.str());
}

// Polygon through (x_i, y_i), x strictly increasing, x_0 = 0, y_0 = 0.
std::vector<ConcavePolygon::Segment> segments_through(const std::vector<Rational>& xs,
                                                      const std::vector<Rational>& ys) {
  std::vector<ConcavePolygon::Segment> segs;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const Rational w = xs[i] - xs[i - 1];
    segs.push_back({(ys[i] - ys[i - 1]) / w, w});
  }
  return segs;
}

}  // namespace

// ---------------------------------------------------------------- SlopeVector

SlopeVector::SlopeVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
  if (!non_increasing(entries_)) {
    fail(ErrorKind::SchemaError, "slope vector " + join(entries_) + " is not non-increasing");
  }
}

SlopeVector SlopeVector::from_multiset(std::vector<Rational> entries) {
  sort_desc(entries);
  return SlopeVector(std::move(entries));
}

SlopeVector SlopeVector::constant(const Rational& value, std::size_t count) {
  return SlopeVector(std::vector<Rational>(count, value));
}

SlopeVector SlopeVector::parse(std::string_view text) {
  std::vector<Rational> values;
  for (auto item : bracket_items(text, '[', ']', "slope vector")) {
    values.push_back(Rational::parse(item));
  }
  return SlopeVector(std::move(values));
}

std::string SlopeVector::str() const { return join(entries_); }

Rational SlopeVector::deg() const { return partial_sum(entries_.size()); }

const Rational& SlopeVector::max() const {
  if (entries_.empty()) fail(ErrorKind::EmptyType, "max of the empty type");
  return entries_.front();
}

const Rational& SlopeVector::min() const {
  if (entries_.empty()) fail(ErrorKind::EmptyType, "min of the empty type");
  return entries_.back();
}

Rational SlopeVector::partial_sum(std::size_t k) const {
  Rational sum = 0;
  for (std::size_t i = 0; i < k && i < entries_.size(); ++i) sum += entries_[i];
  return sum;
}

TypeStats stats(const SlopeVector& f) {
  TypeStats s{f.deg(), std::nullopt, std::nullopt};
  if (!f.empty()) {
    s.max = f.max();
    s.min = f.min();
  }
  return s;
}

// ------------------------------------------------------------- ConcavePolygon

ConcavePolygon::ConcavePolygon(std::vector<Segment> segments) : segments_(std::move(segments)) {
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (segments_[i].width.sign() <= 0) {
      fail(ErrorKind::SchemaError, "polygon segment with non-positive width");
    }
    if (i > 0 && !(segments_[i].slope < segments_[i - 1].slope)) {
      fail(ErrorKind::SchemaError, "polygon slopes must strictly decrease");
    }
  }
}

ConcavePolygon ConcavePolygon::normalized(std::vector<Segment> segments) {
  std::stable_sort(segments.begin(), segments.end(),
                   [](const Segment& a, const Segment& b) { return b.slope < a.slope; });
  std::vector<Segment> merged;
  for (auto& seg : segments) {
    if (seg.width.sign() < 0) fail(ErrorKind::SchemaError, "negative segment width");
    if (seg.width.is_zero()) continue;
    if (!merged.empty() && merged.back().slope == seg.slope) {
      merged.back().width += seg.width;
    } else {
      merged.push_back(std::move(seg));
    }
  }
  return ConcavePolygon(std::move(merged));
}

ConcavePolygon ConcavePolygon::from_type(const SlopeVector& f) {
  std::vector<Segment> segs;
  for (const auto& g : f) segs.push_back({g, 1});
  return normalized(std::move(segs));
}

ConcavePolygon ConcavePolygon::parse(std::string_view text) {
  std::vector<Segment> segs;
  for (auto item : bracket_items(text, '{', '}', "polygon")) {
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) {
      fail(ErrorKind::ParseError, "polygon segment '" + std::string(item) + "' lacks ':'");
    }
    segs.push_back({Rational::parse(item.substr(0, colon)), Rational::parse(item.substr(colon + 1))});
  }
  return ConcavePolygon(std::move(segs));
}

std::string ConcavePolygon::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (i) out += ", ";
    out += segments_[i].slope.str() + ":" + segments_[i].width.str();
  }
  return out + "}";
}

Rational ConcavePolygon::width() const {
  Rational w = 0;
  for (const auto& seg : segments_) w += seg.width;
  return w;
}

std::vector<Rational> ConcavePolygon::breakpoints() const {
  std::vector<Rational> xs{Rational(0)};
  for (const auto& seg : segments_) xs.push_back(xs.back() + seg.width);
  return xs;
}

Rational ConcavePolygon::value_at(const Rational& s) const {
  if (s.sign() < 0 || width() < s) {
    fail(ErrorKind::OutOfDomain, s.str() + " outside [0, " + width().str() + "]");
  }
  Rational x = 0;
  Rational y = 0;
  for (const auto& seg : segments_) {
    if (s <= x + seg.width) return y + seg.slope * (s - x);
    x += seg.width;
    y += seg.slope * seg.width;
  }
  return y;
}

Rational ConcavePolygon::end_value() const {
  Rational y = 0;
  for (const auto& seg : segments_) y += seg.slope * seg.width;
  return y;
}

// ---------------------------------------------------------------- PlusInfType

PlusInfType::PlusInfType(std::vector<Rational> entries) {
  for (const auto& e : entries) {
    if (e.sign() < 0) fail(ErrorKind::SchemaError, "negative entry in a torsion invariant");
  }
  if (!non_increasing(entries)) {
    fail(ErrorKind::SchemaError, "torsion invariant " + join(entries) + " is not non-increasing");
  }
  while (!entries.empty() && entries.back().is_zero()) entries.pop_back();
  entries_ = std::move(entries);
}

PlusInfType PlusInfType::from_multiset(std::vector<Rational> entries) {
  sort_desc(entries);
  return PlusInfType(std::move(entries));
}

PlusInfType PlusInfType::parse(std::string_view text) {
  std::vector<Rational> values;
  for (auto item : bracket_items(text, '[', ']', "torsion invariant")) {
    values.push_back(Rational::parse(item));
  }
  return PlusInfType(std::move(values));
}

std::string PlusInfType::str() const { return join(entries_); }

Rational PlusInfType::entry(std::size_t i) const {
  return i >= 1 && i <= entries_.size() ? entries_[i - 1] : Rational(0);
}

Rational PlusInfType::length() const { return partial_sum(entries_.size()); }

Rational PlusInfType::partial_sum(std::size_t k) const {
  Rational sum = 0;
  for (std::size_t i = 0; i < k && i < entries_.size(); ++i) sum += entries_[i];
  return sum;
}

// ------------------------------------------------------------------ Operations

const char* to_string(Dominance d) noexcept {
  switch (d) {
    case Dominance::Less: return "Less";
    case Dominance::Greater: return "Greater";
    case Dominance::Equal: return "Equal";
    case Dominance::Incomparable: return "Incomparable";
    case Dominance::DegMismatch: return "DegMismatch";
  }
  return "?";
}

Dominance dominance_compare(const SlopeVector& f, const SlopeVector& g) {
  if (f.size() != g.size()) {
    fail(ErrorKind::LengthMismatch,
         "types of length " + std::to_string(f.size()) + " and " + std::to_string(g.size()));
  }
  std::vector<int> signs;
  Rational sf = 0;
  Rational sg = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    sf += f[i];
    sg += g[i];
    signs.push_back((sf - sg).sign());
  }
  return classify(signs, sf == sg);
}

Dominance dominance_compare(const PlusInfType& f, const PlusInfType& g) {
  const std::size_t n = std::max(f.support_size(), g.support_size());
  std::vector<int> signs;
  Rational sf = 0;
  Rational sg = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    sf += f.entry(i);
    sg += g.entry(i);
    signs.push_back((sf - sg).sign());
  }
  return classify(signs, sf == sg);
}

bool dominated_by(const SlopeVector& f, const SlopeVector& g) {
  const auto d = dominance_compare(f, g);
  return d == Dominance::Less || d == Dominance::Equal;
}

bool dominated_by(const PlusInfType& f, const PlusInfType& g) {
  const auto d = dominance_compare(f, g);
  return d == Dominance::Less || d == Dominance::Equal;
}

SlopeVector involution(const SlopeVector& f) {
  std::vector<Rational> out;
  out.reserve(f.size());
  for (auto it = f.entries().rbegin(); it != f.entries().rend(); ++it) out.push_back(-*it);
  return SlopeVector(std::move(out));
}

SlopeVector convex_sum(const SlopeVector& f, const SlopeVector& g) {
  std::vector<Rational> out;
  out.reserve(f.size() + g.size());
  std::merge(f.begin(), f.end(), g.begin(), g.end(), std::back_inserter(out), std::greater<>());
  return SlopeVector(std::move(out));
}

ConcavePolygon convex_sum(const ConcavePolygon& f, const ConcavePolygon& g) {
  auto segs = f.segments();
  segs.insert(segs.end(), g.segments().begin(), g.segments().end());
  return ConcavePolygon::normalized(std::move(segs));
}

PlusInfType convex_sum(const PlusInfType& f, const PlusInfType& g) {
  std::vector<Rational> out;
  std::merge(f.entries().begin(), f.entries().end(), g.entries().begin(), g.entries().end(),
             std::back_inserter(out), std::greater<>());
  return PlusInfType(std::move(out));
}

SlopeVector entrywise_sum(const SlopeVector& f, const SlopeVector& g) {
  if (f.size() != g.size()) fail(ErrorKind::LengthMismatch, "entrywise sum of unequal lengths");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < f.size(); ++i) out.push_back(f[i] + g[i]);
  return SlopeVector(std::move(out));
}

PlusInfType entrywise_sum(const PlusInfType& f, const PlusInfType& g) {
  const std::size_t n = std::max(f.support_size(), g.support_size());
  std::vector<Rational> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(f.entry(i) + g.entry(i));
  return PlusInfType(std::move(out));
}

Rational eval(const SlopeVector& f, const Rational& s) {
  if (s.sign() < 0 || Rational(static_cast<long>(f.size())) < s) {
    fail(ErrorKind::OutOfDomain, s.str() + " outside [0, " + std::to_string(f.size()) + "]");
  }
  const long k = Rational(s.floor()).to_long();
  Rational value = f.partial_sum(static_cast<std::size_t>(k));
  if (static_cast<std::size_t>(k) < f.size()) value += (s - Rational(k)) * f[k];
  return value;
}

Rational eval(const ConcavePolygon& f, const Rational& s) { return f.value_at(s); }

SlopeVector tensor_type(const SlopeVector& f, const SlopeVector& g) {
  std::vector<Rational> out;
  out.reserve(f.size() * g.size());
  for (const auto& a : f) {
    for (const auto& b : g) out.push_back(a + b);
  }
  return SlopeVector::from_multiset(std::move(out));
}

SlopeVector ext_type(const SlopeVector& f, std::size_t k) {
  if (k == 0 || k > f.size()) {
    fail(ErrorKind::BadArity, "exterior power " + std::to_string(k) + " of a rank " +
                                  std::to_string(f.size()) + " type");
  }
  std::vector<Rational> out;
  std::function<void(std::size_t, std::size_t, Rational)> rec = [&](std::size_t start,
                                                                   std::size_t left,
                                                                   Rational acc) {
    if (left == 0) {
      out.push_back(acc);
      return;
    }
    for (std::size_t i = start; i + left <= f.size(); ++i) rec(i + 1, left - 1, acc + f[i]);
  };
  rec(0, k, Rational(0));
  return SlopeVector::from_multiset(std::move(out));
}

SlopeVector sym_type(const SlopeVector& f, std::size_t k) {
  if (k == 0) fail(ErrorKind::BadArity, "symmetric power 0");
  std::vector<Rational> out;
  std::function<void(std::size_t, std::size_t, Rational)> rec = [&](std::size_t start,
                                                                   std::size_t left,
                                                                   Rational acc) {
    if (left == 0) {
      out.push_back(acc);
      return;
    }
    for (std::size_t i = start; i < f.size(); ++i) rec(i, left - 1, acc + f[i]);
  };
  rec(0, k, Rational(0));
  return SlopeVector::from_multiset(std::move(out));
}

SlopeVector twist_shift(const SlopeVector& f, const Rational& n) {
  std::vector<Rational> out;
  out.reserve(f.size());
  for (const auto& g : f) out.push_back(g + n);
  return SlopeVector(std::move(out));
}

ConcavePolygon rescale(const SlopeVector& f, long n) {
  if (n <= 0 || f.size() % static_cast<std::size_t>(n) != 0) {
    fail(ErrorKind::BadArity, "cannot rescale a length " + std::to_string(f.size()) +
                                  " type by " + std::to_string(n));
  }
  std::vector<ConcavePolygon::Segment> segs;
  for (const auto& g : f) segs.push_back({g, Rational(1, n)});
  return ConcavePolygon::normalized(std::move(segs));
}

bool pointwise_leq(const ConcavePolygon& f, const ConcavePolygon& g) {
  if (f.width() != g.width()) fail(ErrorKind::DomainMismatch, "polygons on different domains");
  for (const auto& x : merged_breakpoints({&f, &g})) {
    if (g.value_at(x) < f.value_at(x)) return false;
  }
  return true;
}

EnvelopeReport limit_envelope(const std::vector<std::pair<long, ConcavePolygon>>& sequence) {
  if (sequence.empty()) fail(ErrorKind::InvalidArgument, "empty polygon sequence");
  const Rational width = sequence.front().second.width();
  const Rational end = sequence.front().second.end_value();
  std::vector<const ConcavePolygon*> polys;
  for (const auto& [n, p] : sequence) {
    if (n <= 0) fail(ErrorKind::InvalidArgument, "sequence index must be positive");
    if (p.width() != width) fail(ErrorKind::DomainMismatch, "polygons on different domains");
    if (p.end_value() != end) fail(ErrorKind::EndpointMismatch, "polygons with different endpoints");
    polys.push_back(&p);
  }

  EnvelopeReport report;
  for (const auto& [n, pn] : sequence) {
    for (const auto& [m, pm] : sequence) {
      if (m > n && m % n == 0 && !pointwise_leq(pm, pn)) report.violations.emplace_back(n, m);
    }
  }
  std::sort(report.violations.begin(), report.violations.end());
  report.violations.erase(std::unique(report.violations.begin(), report.violations.end()),
                          report.violations.end());

  if (width.is_zero()) return report;

  // On each interval between consecutive breakpoints every polygon is affine, so
  // the minimum only bends where two of them cross.
  auto xs = merged_breakpoints(polys);
  std::vector<Rational> refined = xs;
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    const Rational& a = xs[k];
    const Rational& b = xs[k + 1];
    for (std::size_t i = 0; i < polys.size(); ++i) {
      for (std::size_t j = i + 1; j < polys.size(); ++j) {
        const Rational si = slope_after(*polys[i], a);
        const Rational sj = slope_after(*polys[j], a);
        if (si == sj) continue;
        const Rational x = a + (polys[j]->value_at(a) - polys[i]->value_at(a)) / (si - sj);
        if (a < x && x < b) refined.push_back(x);
      }
    }
  }
  std::sort(refined.begin(), refined.end());
  refined.erase(std::unique(refined.begin(), refined.end()), refined.end());

  std::vector<Rational> ys;
  for (const auto& x : refined) {
    Rational y = polys.front()->value_at(x);
    for (const auto* p : polys) y = min(y, p->value_at(x));
    ys.push_back(y);
  }
  auto segs = segments_through(refined, ys);
  bool concave = true;
  for (std::size_t i = 1; i < segs.size(); ++i) concave &= !(segs[i - 1].slope < segs[i].slope);
  if (!concave) {
    // Upper concave hull of the sampled points.
    report.repaired = true;
    std::vector<std::size_t> hull;
    for (std::size_t i = 0; i < refined.size(); ++i) {
      while (hull.size() >= 2) {
        const auto a = hull[hull.size() - 2];
        const auto b = hull.back();
        const Rational cross = (refined[b] - refined[a]) * (ys[i] - ys[a]) -
                               (ys[b] - ys[a]) * (refined[i] - refined[a]);
        if (cross.sign() >= 0) hull.pop_back();
        else break;
      }
      hull.push_back(i);
    }
    std::vector<Rational> hx, hy;
    for (auto i : hull) {
      hx.push_back(refined[i]);
      hy.push_back(ys[i]);
    }
    segs = segments_through(hx, hy);
  }
  report.infimum = ConcavePolygon::normalized(std::move(segs));
  return report;
}

}  // namespace hnslope
