#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace hnslope {

/// Exact rational number in reduced form (denominator positive).
class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  explicit Rational(const mpz_class& integer) : value_(integer) {}
  explicit Rational(mpq_class value);

  /// Accepts `n`, `-n`, `n/d` (whitespace around the tokens is ignored).
  static Rational parse(std::string_view text);

  const mpq_class& get() const noexcept { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  int sign() const noexcept { return sgn(value_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_integer() const noexcept;
  Rational abs() const;

  /// Largest integer <= value.
  mpz_class floor() const;
  /// Value as a machine integer; throws InvalidArgument unless integral and in range.
  long to_long() const;

  std::string str() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::size_t hash() const noexcept;

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// p-adic valuation of a nonzero integer / rational.
long padic_valuation(const mpz_class& value, unsigned long p);
Rational padic_valuation(const Rational& value, unsigned long p);

/// Element of Q ∪ {+∞}, the codomain of every valuation in this library.
class Valuation {
 public:
  Valuation(const Rational& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  Valuation(I value) : value_(value) {}  // NOLINT(google-explicit-constructor)

  static Valuation infinity() {
    Valuation v(0);
    v.infinite_ = true;
    return v;
  }

  bool is_infinite() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }
  /// Throws InvalidArgument for +∞.
  const Rational& value() const;

  std::string str() const;

  friend Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return Valuation(a.value_ + b.value_);
  }
  friend bool operator==(const Valuation& a, const Valuation& b) noexcept {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) noexcept {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    if (a.infinite_) return std::strong_ordering::greater;
    if (b.infinite_) return std::strong_ordering::less;
    return a.value_ <=> b.value_;
  }

 private:
  Rational value_;
  bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const Valuation& v);

}  // namespace hnslope

template <>
struct std::hash<hnslope::Rational> {
  std::size_t operator()(const hnslope::Rational& r) const noexcept { return r.hash(); }
};
