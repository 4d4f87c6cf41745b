#include "hnslope/padic.hpp"

#include "hnslope/error.hpp"
#include "hnslope/expr_parser.hpp"

namespace hnslope {

PadicRing make_padic_ring(unsigned long p) {
  if (p < 2) fail(ErrorKind::InvalidArgument, "p must be a prime");
  for (unsigned long d = 2; d * d <= p; ++d) {
    if (p % d == 0) fail(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
  }
  return std::make_shared<const PadicContext>(PadicContext{p});
}

PadicNumber PadicNumber::uniformizer_power(const Ring& ring, const Rational& e) {
  if (!e.is_integer()) fail(ErrorKind::InvalidArgument, "non-integral power of p");
  const long n = e.to_long();
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), ring->p, static_cast<unsigned long>(n < 0 ? -n : n));
  Rational value(power);
  return {ring, n < 0 ? Rational(1) / value : value};
}

PadicNumber PadicNumber::parse(const Ring& ring, std::string_view text) {
  struct Algebra {
    const Ring& ring;
    PadicNumber constant(const Rational& r) const { return {ring, r}; }
    std::optional<PadicNumber> symbol(const std::string& name, const Rational& e) const {
      if (name != "p") return std::nullopt;
      if (!e.is_integer()) fail(ErrorKind::ParseError, "non-integral power of p");
      return uniformizer_power(ring, e);
    }
    std::optional<PadicNumber> big_o(const std::string&, const Rational&) const { return std::nullopt; }
    PadicNumber add(const PadicNumber& a, const PadicNumber& b) const { return a + b; }
    PadicNumber sub(const PadicNumber& a, const PadicNumber& b) const { return a - b; }
    PadicNumber mul(const PadicNumber& a, const PadicNumber& b) const { return a * b; }
    PadicNumber div(const PadicNumber& a, const PadicNumber& b) const { return a * b.inverse(); }
    PadicNumber neg(const PadicNumber& a) const { return -a; }
  };
  return parse_expression<PadicNumber>(text, Algebra{ring});
}

Valuation PadicNumber::valuation() const {
  if (value_.is_zero()) return Valuation::infinity();
  return Valuation(padic_valuation(value_, ring_->p));
}

PadicNumber PadicNumber::inverse() const {
  if (value_.is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
  return {ring_, Rational(1) / value_};
}

unsigned long PadicNumber::residue() const {
  if (value_.is_zero()) return 0;
  if (valuation().value().sign() < 0) {
    fail(ErrorKind::NegativeValuation, "residue of " + value_.str() + " at p = " + std::to_string(ring_->p));
  }
  const mpz_class p(ring_->p);
  mpz_class num = value_.numerator() % p;
  mpz_class den = value_.denominator() % p;
  mpz_class den_inv;
  mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  mpz_class r = num * den_inv % p;
  if (r < 0) r += p;
  return r.get_ui();
}

std::pair<PadicNumber, PadicNumber> elimination_pair(const PadicNumber& pivot, const PadicNumber& a) {
  return {PadicNumber::one(pivot.ring()), a * pivot.inverse()};
}

}  // namespace hnslope
