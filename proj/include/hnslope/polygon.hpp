#pragma once

// Types in the sense of HN theory: non-increasing rational r-tuples, identified
// with concave piecewise-linear polygons on [0, r] that start at the origin.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hnslope/rational.hpp"

namespace hnslope {

/// A non-increasing finite sequence of rationals (an element of Γ_≥^r).
class SlopeVector {
 public:
  SlopeVector() = default;
  /// Throws SchemaError when `entries` is not non-increasing.
  explicit SlopeVector(std::vector<Rational> entries);
  SlopeVector(std::initializer_list<Rational> entries)
      : SlopeVector(std::vector<Rational>(entries)) {}

  /// Accepts any multiset and sorts it.
  static SlopeVector from_multiset(std::vector<Rational> entries);
  static SlopeVector constant(const Rational& value, std::size_t count);

  /// Text form `[3, 1/2, -2]`.
  static SlopeVector parse(std::string_view text);
  std::string str() const;

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const std::vector<Rational>& entries() const noexcept { return entries_; }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  Rational deg() const;
  /// First entry; throws EmptyType on ().
  const Rational& max() const;
  /// Last entry; throws EmptyType on ().
  const Rational& min() const;
  /// Sum of the first k entries.
  Rational partial_sum(std::size_t k) const;

  friend bool operator==(const SlopeVector&, const SlopeVector&) = default;

 private:
  std::vector<Rational> entries_;
};

struct TypeStats {
  Rational deg;
  std::optional<Rational> max;
  std::optional<Rational> min;
};

TypeStats stats(const SlopeVector& f);

/// Concave polygon given by its segments, slopes strictly decreasing.
class ConcavePolygon {
 public:
  struct Segment {
    Rational slope;
    Rational width;
    friend bool operator==(const Segment&, const Segment&) = default;
  };

  ConcavePolygon() = default;
  /// Throws SchemaError unless slopes strictly decrease and widths are positive.
  explicit ConcavePolygon(std::vector<Segment> segments);
  /// Sorts by slope and merges equal slopes; drops empty widths.
  static ConcavePolygon normalized(std::vector<Segment> segments);
  static ConcavePolygon from_type(const SlopeVector& f);

  /// Text form `{2:1/2, 0:1/2}`.
  static ConcavePolygon parse(std::string_view text);
  std::string str() const;

  const std::vector<Segment>& segments() const noexcept { return segments_; }
  bool empty() const noexcept { return segments_.empty(); }
  Rational width() const;
  /// Abscissae of all vertices including both endpoints.
  std::vector<Rational> breakpoints() const;
  /// Value at s; throws OutOfDomain outside [0, width].
  Rational value_at(const Rational& s) const;
  Rational end_value() const;

  friend bool operator==(const ConcavePolygon&, const ConcavePolygon&) = default;

 private:
  std::vector<Segment> segments_;
};

/// Finitely supported element of Γ^∞_{+,≥}: non-increasing, non-negative,
/// trailing zeros dropped.
class PlusInfType {
 public:
  PlusInfType() = default;
  /// Throws SchemaError on negative entries or increasing steps. Zeros are dropped.
  explicit PlusInfType(std::vector<Rational> entries);
  PlusInfType(std::initializer_list<Rational> entries)
      : PlusInfType(std::vector<Rational>(entries)) {}
  static PlusInfType from_multiset(std::vector<Rational> entries);

  static PlusInfType parse(std::string_view text);
  std::string str() const;

  const std::vector<Rational>& entries() const noexcept { return entries_; }
  std::size_t support_size() const noexcept { return entries_.size(); }
  /// inv_i for i >= 1 (zero past the support).
  Rational entry(std::size_t i) const;
  /// Sum of all entries (the length of a torsion module).
  Rational length() const;
  Rational partial_sum(std::size_t k) const;

  friend bool operator==(const PlusInfType&, const PlusInfType&) = default;

 private:
  std::vector<Rational> entries_;
};

enum class Dominance { Less, Greater, Equal, Incomparable, DegMismatch };

const char* to_string(Dominance d) noexcept;

/// Partial-sum dominance. Throws LengthMismatch for vectors of different length.
Dominance dominance_compare(const SlopeVector& f, const SlopeVector& g);
/// Same order on Γ^∞_{+,≥}; shorter arguments are padded with zeros.
Dominance dominance_compare(const PlusInfType& f, const PlusInfType& g);

/// f <= g in dominance order (Less or Equal).
bool dominated_by(const SlopeVector& f, const SlopeVector& g);
bool dominated_by(const PlusInfType& f, const PlusInfType& g);

/// (γ_1,...,γ_r)^ι = (-γ_r,...,-γ_1).
SlopeVector involution(const SlopeVector& f);

SlopeVector convex_sum(const SlopeVector& f, const SlopeVector& g);
ConcavePolygon convex_sum(const ConcavePolygon& f, const ConcavePolygon& g);
PlusInfType convex_sum(const PlusInfType& f, const PlusInfType& g);

/// Entrywise sum of sorted vectors (equal lengths) / of zero-padded sequences.
SlopeVector entrywise_sum(const SlopeVector& f, const SlopeVector& g);
PlusInfType entrywise_sum(const PlusInfType& f, const PlusInfType& g);

Rational eval(const SlopeVector& f, const Rational& s);
Rational eval(const ConcavePolygon& f, const Rational& s);

enum class ProductKind { Tensor, Sym, Ext };

SlopeVector tensor_type(const SlopeVector& f, const SlopeVector& g);
/// k-subset sums; throws BadArity unless 1 <= k <= r.
SlopeVector ext_type(const SlopeVector& f, std::size_t k);
/// Size-k multiset sums; throws BadArity for k = 0.
SlopeVector sym_type(const SlopeVector& f, std::size_t k);

SlopeVector twist_shift(const SlopeVector& f, const Rational& n);

/// s ↦ (1/n)·f(n s) as a polygon on [0, len(f)/n]. Throws BadArity unless n divides len(f).
ConcavePolygon rescale(const SlopeVector& f, long n);

/// Pointwise f <= g on a common domain (both endpoints included).
/// Throws DomainMismatch for different widths.
bool pointwise_leq(const ConcavePolygon& f, const ConcavePolygon& g);

struct EnvelopeReport {
  ConcavePolygon infimum;
  /// Pairs (n, m) with n | m, m > n, where p_m <= p_n fails somewhere.
  std::vector<std::pair<long, long>> violations;
  /// Set when the pointwise minimum was not concave and was replaced by its concave hull.
  bool repaired = false;
};

/// Pointwise infimum of a family of polygons on a common [0, r] and the list of
/// failures of the monotonicity p_{nk} <= p_n.
EnvelopeReport limit_envelope(const std::vector<std::pair<long, ConcavePolygon>>& sequence);

}  // namespace hnslope
