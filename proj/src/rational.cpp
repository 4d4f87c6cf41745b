#include "hnslope/rational.hpp"

#include <cctype>
#include <limits>

#include "hnslope/error.hpp"

namespace hnslope {

namespace {

bool valid_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class to_mpz(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) fail(ErrorKind::DivisionByZero, "rational with zero denominator");
  value_ = mpq_class(numerator, 1) / mpq_class(denominator, 1);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!valid_integer_literal(s)) {
      fail(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
    }
    return Rational(to_mpz(s));
  }
  std::string_view num = trim(s.substr(0, slash));
  std::string_view den = trim(s.substr(slash + 1));
  if (!valid_integer_literal(num) || !valid_integer_literal(den) || den.front() == '-' ||
      den.front() == '+') {
    fail(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
  }
  mpz_class d = to_mpz(den);
  if (d == 0) fail(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  mpq_class q(to_mpz(num), d);
  return Rational(std::move(q));
}

bool Rational::is_integer() const noexcept { return value_.get_den() == 1; }

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

mpz_class Rational::floor() const {
  mpz_class result;
  mpz_fdiv_q(result.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return result;
}

long Rational::to_long() const {
  if (!is_integer() || !value_.get_num().fits_slong_p()) {
    fail(ErrorKind::InvalidArgument, "rational " + str() + " is not a machine integer");
  }
  return value_.get_num().get_si();
}

std::string Rational::str() const { return value_.get_str(); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) fail(ErrorKind::DivisionByZero, "rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::size_t Rational::hash() const noexcept {
  const std::size_t a = mpz_get_ui(value_.get_num_mpz_t());
  const std::size_t b = mpz_get_ui(value_.get_den_mpz_t());
  return a * 1000003u ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2)) ^
         static_cast<std::size_t>(sign() + 1);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

long padic_valuation(const mpz_class& value, unsigned long p) {
  if (value == 0) fail(ErrorKind::InvalidArgument, "valuation of zero");
  mpz_class v = value;
  long count = 0;
  while (mpz_divisible_ui_p(v.get_mpz_t(), p)) {
    mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p);
    ++count;
  }
  return count;
}

Rational padic_valuation(const Rational& value, unsigned long p) {
  return Rational(padic_valuation(value.numerator(), p) - padic_valuation(value.denominator(), p));
}

const Rational& Valuation::value() const {
  if (infinite_) fail(ErrorKind::InvalidArgument, "valuation is infinite");
  return value_;
}

std::string Valuation::str() const { return infinite_ ? "inf" : value_.str(); }

std::ostream& operator<<(std::ostream& os, const Valuation& v) { return os << v.str(); }

}  // namespace hnslope
