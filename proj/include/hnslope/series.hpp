#pragma once

// Truncated series with finitely many terms and an optional absolute precision:
// HahnSeries (coefficients in F_{p^m}, rational exponents, symbol t) and XiSeries
// (rational coefficients, integer exponents, symbol xi). A missing precision means
// the value is exact; otherwise terms at exponents >= precision are unknown.

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "hnslope/error.hpp"
#include "hnslope/expr_parser.hpp"
#include "hnslope/finite_field.hpp"
#include "hnslope/rational.hpp"

namespace hnslope {

struct HahnContext {
  FieldPtr field;
  /// Relative precision used when an exact value must be expanded (inverses) and the
  /// truncation margin used by elimination.
  Rational default_precision;
};

struct XiContext {
  Rational default_precision;
};

struct HahnTraits {
  using Context = HahnContext;
  using Coeff = FiniteField::Element;
  static constexpr const char* symbol = "t";
  static constexpr bool integral_exponents = false;

  static Coeff zero(const Context&) { return 0; }
  static Coeff one(const Context&) { return 1; }
  static Coeff from_rational(const Context& c, const Rational& r) {
    const auto& f = *c.field;
    const long p = static_cast<long>(f.p());
    const mpz_class num = r.numerator() % p;
    const mpz_class den = r.denominator() % p;
    if (den == 0) fail(ErrorKind::DivisionByZero, "denominator divisible by the characteristic");
    return f.mul(f.from_int(num.get_si()), f.inv(f.from_int(den.get_si())));
  }
  static bool is_zero(const Coeff& x) { return x == 0; }
  static Coeff add(const Context& c, Coeff x, Coeff y) { return c.field->add(x, y); }
  static Coeff sub(const Context& c, Coeff x, Coeff y) { return c.field->sub(x, y); }
  static Coeff neg(const Context& c, Coeff x) { return c.field->neg(x); }
  static Coeff mul(const Context& c, Coeff x, Coeff y) { return c.field->mul(x, y); }
  static Coeff inv(const Context& c, Coeff x) { return c.field->inv(x); }
  static bool is_negative(const Context&, Coeff) { return false; }
  static std::string str(const Context& c, Coeff x) { return c.field->str(x); }
  static bool compound(const Context& c, Coeff x) { return c.field->term_count(x) > 1; }
  static bool same(const Context& a, const Context& b) {
    return a.field->same_as(*b.field) && a.default_precision == b.default_precision;
  }
};

struct XiTraits {
  using Context = XiContext;
  using Coeff = Rational;
  static constexpr const char* symbol = "xi";
  static constexpr bool integral_exponents = true;

  static Coeff zero(const Context&) { return Rational(0); }
  static Coeff one(const Context&) { return Rational(1); }
  static Coeff from_rational(const Context&, const Rational& r) { return r; }
  static bool is_zero(const Coeff& x) { return x.is_zero(); }
  static Coeff add(const Context&, const Coeff& x, const Coeff& y) { return x + y; }
  static Coeff sub(const Context&, const Coeff& x, const Coeff& y) { return x - y; }
  static Coeff neg(const Context&, const Coeff& x) { return -x; }
  static Coeff mul(const Context&, const Coeff& x, const Coeff& y) { return x * y; }
  static Coeff inv(const Context&, const Coeff& x) { return Rational(1) / x; }
  static bool is_negative(const Context&, const Coeff& x) { return x.sign() < 0; }
  static std::string str(const Context&, const Coeff& x) { return x.str(); }
  static bool compound(const Context&, const Coeff&) { return false; }
  static bool same(const Context& a, const Context& b) {
    return a.default_precision == b.default_precision;
  }
};

template <class Traits>
class Series {
 public:
  using Context = typename Traits::Context;
  using Ring = std::shared_ptr<const Context>;
  using Coeff = typename Traits::Coeff;
  struct Term {
    Rational exp;
    Coeff coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Series() = default;
  explicit Series(Ring ring) : ring_(std::move(ring)) {}

  /// Sorts and combines the terms; drops zero coefficients and exponents >= precision.
  static Series from_terms(Ring ring, std::vector<Term> terms,
                           std::optional<Rational> precision = std::nullopt) {
    Series s(std::move(ring));
    s.prec_ = std::move(precision);
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
    for (auto& t : terms) {
      if constexpr (Traits::integral_exponents) {
        if (!t.exp.is_integer()) {
          fail(ErrorKind::InvalidArgument, std::string("non-integral exponent for ") + Traits::symbol);
        }
      }
      if (!s.terms_.empty() && s.terms_.back().exp == t.exp) {
        s.terms_.back().coeff = Traits::add(*s.ring_, s.terms_.back().coeff, t.coeff);
        if (Traits::is_zero(s.terms_.back().coeff)) s.terms_.pop_back();
      } else if (!Traits::is_zero(t.coeff)) {
        s.terms_.push_back(std::move(t));
      }
    }
    s.drop_unknown();
    return s;
  }

  static Series zero(const Ring& ring) { return Series(ring); }
  static Series one(const Ring& ring) { return monomial(ring, Traits::one(*ring), Rational(0)); }
  static Series from_int(const Ring& ring, long n) { return constant(ring, Rational(n)); }
  static Series constant(const Ring& ring, const Rational& r) {
    return monomial(ring, Traits::from_rational(*ring, r), Rational(0));
  }
  static Series monomial(const Ring& ring, Coeff c, const Rational& exp) {
    return from_terms(ring, {Term{exp, std::move(c)}});
  }
  static Series uniformizer_power(const Ring& ring, const Rational& exp) {
    return monomial(ring, Traits::one(*ring), exp);
  }
  /// Zero known only below `precision`.
  static Series big_o(const Ring& ring, const Rational& precision) {
    Series s(ring);
    s.prec_ = precision;
    return s;
  }

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  const std::optional<Rational>& precision() const noexcept { return prec_; }
  bool is_exact() const noexcept { return !prec_.has_value(); }
  bool is_exact_zero() const noexcept { return terms_.empty() && !prec_; }
  /// Has a known nonzero term.
  bool is_known_nonzero() const noexcept { return !terms_.empty(); }

  /// Lowest exponent; +∞ for exact zero; throws PrecisionExhausted for an unknown zero.
  Valuation valuation() const {
    if (!terms_.empty()) return Valuation(terms_.front().exp);
    if (!prec_) return Valuation::infinity();
    fail(ErrorKind::PrecisionExhausted,
         "value is zero to precision " + prec_->str() + "; valuation unknown");
  }

  /// Lower bound for the valuation; exact when a term is known.
  Valuation valuation_bound() const {
    if (!terms_.empty()) return Valuation(terms_.front().exp);
    if (!prec_) return Valuation::infinity();
    return Valuation(*prec_);
  }

  const Term& leading_term() const {
    if (terms_.empty()) fail(ErrorKind::PrecisionExhausted, "no known leading term");
    return terms_.front();
  }

  Coeff coefficient(const Rational& exp) const {
    for (const auto& t : terms_) {
      if (t.exp == exp) return t.coeff;
    }
    return Traits::zero(*ring_);
  }

  /// Forgets everything at exponents >= cutoff. Exact values whose support lies
  /// below the cutoff stay exact.
  Series truncated(const Rational& cutoff) const {
    Series s = *this;
    if (!s.terms_.empty() && !(s.terms_.back().exp < cutoff)) {
      s.prec_ = s.prec_ ? min(*s.prec_, cutoff) : cutoff;
    } else if (s.prec_ && cutoff < *s.prec_) {
      s.prec_ = cutoff;
    }
    s.drop_unknown();
    return s;
  }

  /// Same value with the precision lowered to at most `cutoff`.
  Series with_precision(const Rational& cutoff) const {
    Series s = *this;
    s.prec_ = s.prec_ ? min(*s.prec_, cutoff) : cutoff;
    s.drop_unknown();
    return s;
  }

  Series operator-() const {
    Series s = *this;
    for (auto& t : s.terms_) t.coeff = Traits::neg(*ring_, t.coeff);
    return s;
  }

  friend Series operator+(const Series& x, const Series& y) { return combine(x, y, false); }
  friend Series operator-(const Series& x, const Series& y) { return combine(x, y, true); }

  friend Series operator*(const Series& x, const Series& y) {
    const Ring& ring = x.ring_ ? x.ring_ : y.ring_;
    if (x.is_exact_zero() || y.is_exact_zero()) return Series(ring);
    const Rational vx = x.valuation_bound().value();
    const Rational vy = y.valuation_bound().value();
    std::optional<Rational> prec;
    auto lower = [&](const Rational& candidate) {
      prec = prec ? min(*prec, candidate) : candidate;
    };
    if (x.prec_) lower(*x.prec_ + vy);
    if (y.prec_) lower(*y.prec_ + vx);
    if (prec && x.is_known_nonzero() && y.is_known_nonzero() && !(vx + vy < *prec)) {
      fail(ErrorKind::PrecisionExhausted, "product precision below its valuation");
    }
    std::vector<Term> terms;
    terms.reserve(x.terms_.size() * y.terms_.size());
    for (const auto& a : x.terms_) {
      for (const auto& b : y.terms_) {
        Rational e = a.exp + b.exp;
        if (prec && !(e < *prec)) continue;
        terms.push_back(Term{std::move(e), Traits::mul(*ring, a.coeff, b.coeff)});
      }
    }
    return from_terms(ring, std::move(terms), std::move(prec));
  }

  Series& operator+=(const Series& y) { return *this = *this + y; }
  Series& operator-=(const Series& y) { return *this = *this - y; }
  Series& operator*=(const Series& y) { return *this = *this * y; }

  /// Exact division by the monomial c·t^e.
  Series divided_by_monomial(const Coeff& c, const Rational& e) const {
    const Coeff ci = Traits::inv(*ring_, c);
    Series s(ring_);
    for (const auto& t : terms_) s.terms_.push_back(Term{t.exp - e, Traits::mul(*ring_, t.coeff, ci)});
    if (prec_) s.prec_ = *prec_ - e;
    return s;
  }

  Series scaled(const Coeff& c) const {
    if (Traits::is_zero(c)) return prec_ ? big_o(ring_, *prec_) : Series(ring_);
    Series s = *this;
    for (auto& t : s.terms_) t.coeff = Traits::mul(*ring_, t.coeff, c);
    return s;
  }

  /// Geometric-series inverse. Output precision is prec − 2v, where an exact input
  /// counts as having precision v + default_precision.
  Series inverse() const {
    if (is_exact_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
    if (terms_.empty()) fail(ErrorKind::PrecisionExhausted, "inverse of an unknown zero");
    const Term& lead = terms_.front();
    const Coeff ci = Traits::inv(*ring_, lead.coeff);
    if (terms_.size() == 1 && !prec_) return monomial(ring_, ci, -lead.exp);
    const Rational& v = lead.exp;
    const Rational p = prec_ ? *prec_ : v + ring_->default_precision;
    const Rational unit_prec = p - v;
    const Series unit = divided_by_monomial(lead.coeff, v).with_precision(unit_prec);
    const Series y = unit - one(ring_);
    Series sum = one(ring_).with_precision(unit_prec);
    Series power = one(ring_);
    while (true) {
      power = (power * -y).truncated(unit_prec);
      if (!power.is_known_nonzero()) break;
      sum += power;
    }
    return (sum * monomial(ring_, ci, -v)).with_precision(p - 2 * v);
  }

  /// Coefficient at exponent 0; throws NegativeValuation when v < 0.
  Coeff residue() const {
    if (!terms_.empty() && terms_.front().exp.sign() < 0) {
      fail(ErrorKind::NegativeValuation, "residue of an element of negative valuation");
    }
    if (prec_ && prec_->sign() <= 0) fail(ErrorKind::PrecisionExhausted, "residue beyond precision");
    return coefficient(Rational(0));
  }

  /// Residue as a constant series.
  Series residue_element() const {
    return monomial(ring_, residue(), Rational(0));
  }

  /// a·t^γ ↦ a^q·t^{qγ}; precision multiplied by q.
  Series frobenius(unsigned long q) const {
    Series s(ring_);
    for (const auto& t : terms_) {
      s.terms_.push_back(Term{t.exp * Rational(static_cast<long>(q)), frob_coeff(t.coeff, q)});
    }
    if (prec_) s.prec_ = *prec_ * Rational(static_cast<long>(q));
    return s;
  }

  std::string str() const {
    std::string out;
    for (const auto& t : terms_) {
      Coeff c = t.coeff;
      const bool negative = Traits::is_negative(*ring_, c);
      if (negative) c = Traits::neg(*ring_, c);
      if (out.empty()) out = negative ? "-" : "";
      else out += negative ? " - " : " + ";
      out += term_str(c, t.exp);
    }
    if (prec_) {
      if (!out.empty()) out += " + ";
      out += "O(" + power_str(*prec_) + ")";
    }
    return out.empty() ? "0" : out;
  }

  static Series parse(const Ring& ring, std::string_view text) {
    struct Algebra {
      const Ring& ring;
      Series constant(const Rational& r) const { return Series::constant(ring, r); }
      std::optional<Series> symbol(const std::string& name, const Rational& e) const {
        if (name == Traits::symbol) {
          if (Traits::integral_exponents && !e.is_integer()) {
            fail(ErrorKind::ParseError, std::string("non-integral power of ") + Traits::symbol);
          }
          return uniformizer_power(ring, e);
        }
        if constexpr (std::is_same_v<Traits, HahnTraits>) {
          if (name == "a") {
            if (!e.is_integer()) fail(ErrorKind::ParseError, "non-integral power of a");
            const auto& f = *ring->field;
            Coeff g = f.generator();
            const long n = e.to_long();
            Coeff c = n >= 0 ? f.pow(g, static_cast<std::uint64_t>(n))
                             : f.inv(f.pow(g, static_cast<std::uint64_t>(-n)));
            return monomial(ring, c, Rational(0));
          }
        }
        return std::nullopt;
      }
      std::optional<Series> big_o(const std::string& name, const Rational& e) const {
        if (name != Traits::symbol) return std::nullopt;
        return Series::big_o(ring, e);
      }
      Series add(const Series& a, const Series& b) const { return a + b; }
      Series sub(const Series& a, const Series& b) const { return a - b; }
      Series mul(const Series& a, const Series& b) const { return a * b; }
      Series div(const Series& a, const Series& b) const { return a * b.inverse(); }
      Series neg(const Series& a) const { return -a; }
    };
    return parse_expression<Series>(text, Algebra{ring});
  }

  friend bool operator==(const Series& x, const Series& y) {
    return x.terms_ == y.terms_ && x.prec_ == y.prec_;
  }

 private:
  static Series combine(const Series& x, const Series& y, bool subtract) {
    const Ring& ring = x.ring_ ? x.ring_ : y.ring_;
    Series s(ring);
    if (x.prec_ && y.prec_) s.prec_ = min(*x.prec_, *y.prec_);
    else if (x.prec_) s.prec_ = x.prec_;
    else if (y.prec_) s.prec_ = y.prec_;
    auto i = x.terms_.begin();
    auto j = y.terms_.begin();
    auto push = [&](Rational e, Coeff c) {
      if (Traits::is_zero(c)) return;
      if (s.prec_ && !(e < *s.prec_)) return;
      s.terms_.push_back(Term{std::move(e), std::move(c)});
    };
    while (i != x.terms_.end() || j != y.terms_.end()) {
      if (j == y.terms_.end() || (i != x.terms_.end() && i->exp < j->exp)) {
        push(i->exp, i->coeff);
        ++i;
      } else if (i == x.terms_.end() || j->exp < i->exp) {
        push(j->exp, subtract ? Traits::neg(*ring, j->coeff) : j->coeff);
        ++j;
      } else {
        push(i->exp, subtract ? Traits::sub(*ring, i->coeff, j->coeff)
                              : Traits::add(*ring, i->coeff, j->coeff));
        ++i;
        ++j;
      }
    }
    return s;
  }

  void drop_unknown() {
    if (!prec_) return;
    while (!terms_.empty() && !(terms_.back().exp < *prec_)) terms_.pop_back();
  }

  Coeff frob_coeff(const Coeff& c, unsigned long q) const {
    if constexpr (std::is_same_v<Traits, HahnTraits>) {
      return ring_->field->pow(c, q);
    } else {
      (void)q;
      return c;
    }
  }

  static std::string power_str(const Rational& e) {
    const std::string sym = Traits::symbol;
    if (e == Rational(1)) return sym;
    if (e.is_integer() && e.sign() > 0) return sym + "^" + e.str();
    return sym + "^(" + e.str() + ")";
  }

  std::string term_str(const Coeff& c, const Rational& e) const {
    const bool unit = c == Traits::one(*ring_);
    if (e.is_zero()) return Traits::str(*ring_, c);
    if (unit) return power_str(e);
    std::string cs = Traits::str(*ring_, c);
    if (Traits::compound(*ring_, c)) cs = "(" + cs + ")";
    return cs + "*" + power_str(e);
  }

  Ring ring_;
  std::vector<Term> terms_;
  std::optional<Rational> prec_;
};

using HahnSeries = Series<HahnTraits>;
using XiSeries = Series<XiTraits>;
using HahnRing = HahnSeries::Ring;
using XiRing = XiSeries::Ring;

HahnRing make_hahn_ring(FieldPtr field, const Rational& default_precision = Rational(32));
XiRing make_xi_ring(const Rational& default_precision = Rational(32));

/// Pair (u, β) with u a unit and u·a − β·pivot = 0, for v(a) >= v(pivot).
template <class Traits>
std::pair<Series<Traits>, Series<Traits>> elimination_pair(const Series<Traits>& pivot,
                                                           const Series<Traits>& a) {
  const auto& lead = pivot.leading_term();
  return {pivot.divided_by_monomial(lead.coeff, lead.exp), a.divided_by_monomial(lead.coeff, lead.exp)};
}

}  // namespace hnslope
