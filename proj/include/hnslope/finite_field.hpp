#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace hnslope {

/// F_{p^m} = F_p[a]/(modulus). Elements are encoded as integers whose base-p digits
/// are the coefficients of 1, a, a^2, ...
class FiniteField {
 public:
  using Element = std::uint32_t;

  /// `modulus` lists the coefficients of a degree-m polynomial from the constant term
  /// upwards. It is normalized to be monic. Throws InvalidArgument when p is not prime,
  /// the field is too large for 32-bit encoding, or the modulus is reducible.
  FiniteField(unsigned p, std::vector<long> modulus);
  /// The prime field F_p (modulus `a`, so the generator is 0).
  static std::shared_ptr<const FiniteField> prime(unsigned p);
  static std::shared_ptr<const FiniteField> make(unsigned p, std::vector<long> modulus);

  unsigned p() const noexcept { return p_; }
  unsigned m() const noexcept { return m_; }
  std::uint64_t size() const noexcept { return size_; }
  /// Monic modulus, constant term first.
  const std::vector<unsigned>& modulus() const noexcept { return modulus_; }

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }
  /// Class of the formal generator `a` (for m = 1 the root of the modulus).
  Element generator() const;
  Element from_int(long n) const;
  Element from_coeffs(const std::vector<long>& coeffs) const;
  std::vector<unsigned> coeffs(Element x) const;

  Element add(Element x, Element y) const;
  Element sub(Element x, Element y) const;
  Element neg(Element x) const;
  Element mul(Element x, Element y) const;
  /// Throws DivisionByZero for 0.
  Element inv(Element x) const;
  Element pow(Element x, std::uint64_t e) const;

  /// Polynomial in `a`, highest degree first, e.g. `a^2 + 2*a + 1`.
  std::string str(Element x) const;
  /// Number of monomials in str(x); callers use it to decide on parentheses.
  std::size_t term_count(Element x) const;

  /// Same p and modulus.
  bool same_as(const FiniteField& other) const noexcept;

 private:
  Element poly_mul(Element x, Element y) const;

  unsigned p_;
  unsigned m_;
  std::uint64_t size_;
  std::vector<unsigned> modulus_;
  std::vector<Element> mul_table_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

/// Smallest monic irreducible of degree m over F_p (constant term first), in
/// lexicographic order of the coefficient list read from the top.
std::vector<long> default_modulus(unsigned p, unsigned m);

}  // namespace hnslope
