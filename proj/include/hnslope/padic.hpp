#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "hnslope/rational.hpp"

namespace hnslope {

struct PadicContext {
  unsigned long p;
};

/// Exact rational number viewed in Q_p: v(p) = 1, residue field F_p.
class PadicNumber {
 public:
  using Ring = std::shared_ptr<const PadicContext>;

  PadicNumber() = default;
  PadicNumber(Ring ring, Rational value) : ring_(std::move(ring)), value_(std::move(value)) {}

  static PadicNumber zero(const Ring& ring) { return {ring, Rational(0)}; }
  static PadicNumber one(const Ring& ring) { return {ring, Rational(1)}; }
  static PadicNumber from_int(const Ring& ring, long n) { return {ring, Rational(n)}; }
  static PadicNumber constant(const Ring& ring, const Rational& r) { return {ring, r}; }
  /// p^e; throws InvalidArgument for non-integral e.
  static PadicNumber uniformizer_power(const Ring& ring, const Rational& e);
  /// Rationals in the symbol `p`, e.g. `p^2 + 3`, `1/p`, `5/3`.
  static PadicNumber parse(const Ring& ring, std::string_view text);

  const Ring& ring() const noexcept { return ring_; }
  unsigned long prime() const noexcept { return ring_->p; }
  const Rational& value() const noexcept { return value_; }
  const std::optional<Rational>& precision() const noexcept { return no_precision_; }
  bool is_exact() const noexcept { return true; }
  bool is_exact_zero() const noexcept { return value_.is_zero(); }
  bool is_known_nonzero() const noexcept { return !value_.is_zero(); }

  Valuation valuation() const;
  Valuation valuation_bound() const { return valuation(); }
  /// Exact values need no truncation.
  PadicNumber truncated(const Rational&) const { return *this; }

  PadicNumber operator-() const { return {ring_, -value_}; }
  friend PadicNumber operator+(const PadicNumber& x, const PadicNumber& y) {
    return {x.ring_ ? x.ring_ : y.ring_, x.value_ + y.value_};
  }
  friend PadicNumber operator-(const PadicNumber& x, const PadicNumber& y) {
    return {x.ring_ ? x.ring_ : y.ring_, x.value_ - y.value_};
  }
  friend PadicNumber operator*(const PadicNumber& x, const PadicNumber& y) {
    return {x.ring_ ? x.ring_ : y.ring_, x.value_ * y.value_};
  }
  PadicNumber& operator+=(const PadicNumber& y) { return *this = *this + y; }
  PadicNumber& operator-=(const PadicNumber& y) { return *this = *this - y; }
  PadicNumber& operator*=(const PadicNumber& y) { return *this = *this * y; }

  /// Throws DivisionByZero.
  PadicNumber inverse() const;
  /// Image in F_p as an integer in [0, p); throws NegativeValuation.
  unsigned long residue() const;
  PadicNumber residue_element() const { return {ring_, Rational(static_cast<long>(residue()))}; }

  std::string str() const { return value_.str(); }

  friend bool operator==(const PadicNumber& x, const PadicNumber& y) { return x.value_ == y.value_; }

 private:
  Ring ring_;
  Rational value_;
  static inline const std::optional<Rational> no_precision_{};
};

using PadicRing = PadicNumber::Ring;

PadicRing make_padic_ring(unsigned long p);

/// (1, a / pivot): exact division.
std::pair<PadicNumber, PadicNumber> elimination_pair(const PadicNumber& pivot, const PadicNumber& a);

}  // namespace hnslope
