#include "hnslope/finite_field.hpp"

#include <functional>

#include "hnslope/error.hpp"

namespace hnslope {

namespace {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

unsigned mod(long x, unsigned p) {
  const long r = x % static_cast<long>(p);
  return static_cast<unsigned>(r < 0 ? r + static_cast<long>(p) : r);
}

unsigned inv_mod(unsigned x, unsigned p) {
  // p is prime, so x^(p-2) is the inverse.
  unsigned long result = 1;
  unsigned long base = x % p;
  unsigned e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<unsigned>(result);
}

// Dense polynomials over F_p, constant term first, no trailing zeros.
using Poly = std::vector<unsigned>;

void strip(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo the monic polynomial g.
Poly poly_rem(Poly f, const Poly& g, unsigned p) {
  strip(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const unsigned lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = static_cast<unsigned>((f[shift + i] + static_cast<unsigned long>(p - lead) * g[i]) % p);
    }
    strip(f);
  }
  return f;
}

bool is_irreducible(const Poly& f, unsigned p) {
  const std::size_t m = f.size() - 1;
  if (m <= 1) return true;
  // Trial division by every monic polynomial of degree 1..m/2.
  for (std::size_t d = 1; d <= m / 2; ++d) {
    Poly g(d + 1, 0);
    g[d] = 1;
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
      if (i == d) return poly_rem(f, g, p).empty();
      for (unsigned c = 0; c < p; ++c) {
        g[i] = c;
        if (rec(i + 1)) return true;
      }
      return false;
    };
    if (rec(0)) return false;
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(unsigned p, std::vector<long> modulus) : p_(p) {
  if (!is_prime(p)) fail(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
  Poly f;
  for (long c : modulus) f.push_back(mod(c, p));
  strip(f);
  if (f.size() < 2) fail(ErrorKind::InvalidArgument, "field modulus must have degree >= 1");
  const unsigned lead_inv = inv_mod(f.back(), p);
  for (auto& c : f) c = static_cast<unsigned>(static_cast<unsigned long>(c) * lead_inv % p);
  m_ = static_cast<unsigned>(f.size() - 1);
  size_ = 1;
  for (unsigned i = 0; i < m_; ++i) {
    size_ *= p;
    if (size_ > (1ull << 31)) fail(ErrorKind::InvalidArgument, "finite field too large");
  }
  if (!is_irreducible(f, p)) fail(ErrorKind::InvalidArgument, "field modulus is reducible");
  modulus_ = std::move(f);
  if (size_ <= 256) {
    mul_table_.resize(size_ * size_);
    for (Element x = 0; x < size_; ++x) {
      for (Element y = 0; y < size_; ++y) mul_table_[x * size_ + y] = poly_mul(x, y);
    }
  }
}

std::shared_ptr<const FiniteField> FiniteField::prime(unsigned p) {
  return std::make_shared<const FiniteField>(p, std::vector<long>{0, 1});
}

std::shared_ptr<const FiniteField> FiniteField::make(unsigned p, std::vector<long> modulus) {
  return std::make_shared<const FiniteField>(p, std::move(modulus));
}

FiniteField::Element FiniteField::generator() const {
  if (m_ == 1) return neg(modulus_[0]);
  return p_;
}

FiniteField::Element FiniteField::from_int(long n) const { return mod(n, p_); }

FiniteField::Element FiniteField::from_coeffs(const std::vector<long>& coeffs) const {
  // Reduce the polynomial modulo the modulus.
  Poly f;
  for (long c : coeffs) f.push_back(mod(c, p_));
  f = poly_rem(std::move(f), modulus_, p_);
  Element x = 0;
  for (std::size_t i = f.size(); i-- > 0;) x = x * p_ + f[i];
  return x;
}

std::vector<unsigned> FiniteField::coeffs(Element x) const {
  std::vector<unsigned> out(m_, 0);
  for (unsigned i = 0; i < m_; ++i) {
    out[i] = x % p_;
    x /= p_;
  }
  return out;
}

FiniteField::Element FiniteField::add(Element x, Element y) const {
  if (m_ == 1) return (x + y) % p_;
  Element out = 0;
  Element scale = 1;
  for (unsigned i = 0; i < m_; ++i) {
    out += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return out;
}

FiniteField::Element FiniteField::neg(Element x) const {
  Element out = 0;
  Element scale = 1;
  for (unsigned i = 0; i < m_; ++i) {
    out += ((p_ - x % p_) % p_) * scale;
    x /= p_;
    scale *= p_;
  }
  return out;
}

FiniteField::Element FiniteField::sub(Element x, Element y) const { return add(x, neg(y)); }

FiniteField::Element FiniteField::poly_mul(Element x, Element y) const {
  const auto a = coeffs(x);
  const auto b = coeffs(y);
  Poly prod(2 * m_ - 1, 0);
  for (unsigned i = 0; i < m_; ++i) {
    for (unsigned j = 0; j < m_; ++j) {
      prod[i + j] = static_cast<unsigned>((prod[i + j] + static_cast<unsigned long>(a[i]) * b[j]) % p_);
    }
  }
  prod = poly_rem(std::move(prod), modulus_, p_);
  Element out = 0;
  for (std::size_t i = prod.size(); i-- > 0;) out = out * p_ + prod[i];
  return out;
}

FiniteField::Element FiniteField::mul(Element x, Element y) const {
  if (!mul_table_.empty()) return mul_table_[x * size_ + y];
  if (m_ == 1) return static_cast<Element>(static_cast<std::uint64_t>(x) * y % p_);
  return poly_mul(x, y);
}

FiniteField::Element FiniteField::pow(Element x, std::uint64_t e) const {
  Element result = one();
  Element base = x;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FiniteField::Element FiniteField::inv(Element x) const {
  if (x == 0) fail(ErrorKind::DivisionByZero, "inverse of 0 in F_" + std::to_string(size_));
  return pow(x, size_ - 2);
}

std::string FiniteField::str(Element x) const {
  const auto c = coeffs(x);
  std::string out;
  for (std::size_t i = m_; i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += " + ";
    std::string mono;
    if (i == 0) mono = std::to_string(c[i]);
    else {
      if (c[i] != 1) mono = std::to_string(c[i]) + "*";
      mono += i == 1 ? "a" : "a^" + std::to_string(i);
    }
    out += mono;
  }
  return out.empty() ? "0" : out;
}

std::size_t FiniteField::term_count(Element x) const {
  std::size_t n = 0;
  for (auto c : coeffs(x)) n += c != 0;
  return n;
}

bool FiniteField::same_as(const FiniteField& other) const noexcept {
  return p_ == other.p_ && modulus_ == other.modulus_;
}

std::vector<long> default_modulus(unsigned p, unsigned m) {
  if (m == 1) return {0, 1};
  // Enumerate monic polynomials x^m + c_{m-1}x^{m-1} + ... + c_0, smallest first.
  std::vector<long> coeffs(m + 1, 0);
  coeffs[m] = 1;
  unsigned long total = 1;
  for (unsigned i = 0; i < m; ++i) total *= p;
  for (unsigned long code = 0; code < total; ++code) {
    unsigned long c = code;
    for (unsigned i = 0; i < m; ++i) {
      coeffs[i] = static_cast<long>(c % p);
      c /= p;
    }
    try {
      FiniteField f(p, coeffs);
      return coeffs;
    } catch (const Error&) {
    }
  }
  fail(ErrorKind::InvalidArgument, "no irreducible polynomial found");
}

}  // namespace hnslope
