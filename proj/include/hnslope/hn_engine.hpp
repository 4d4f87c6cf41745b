#pragma once

// Filtrations on finite bounded posets decorated with rank and degree, and the
// Harder-Narasimhan filtration read off the upper concave envelope of the
// (rank, deg) cloud.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hnslope/polygon.hpp"
#include "hnslope/rational.hpp"

namespace hnslope {

struct PosetElement {
  std::string id;
  long rank = 0;
  Rational deg;
};

/// Finite bounded poset with rank and degree functions. Modularity is not checked.
class RankedPoset {
 public:
  /// `relations` are pairs (a, b) meaning a < b (indices into `elements`); the order
  /// is their reflexive-transitive closure. When bottom/top are not given they are
  /// inferred as the unique element of rank 0 / maximal rank.
  /// Throws InvalidPoset on cycles, rank not increasing along a relation, missing or
  /// ambiguous bounds, bounds that are not comparable to everything, or deg(bottom) != 0.
  RankedPoset(std::vector<PosetElement> elements,
              const std::vector<std::pair<std::size_t, std::size_t>>& relations,
              std::optional<std::size_t> bottom = std::nullopt,
              std::optional<std::size_t> top = std::nullopt);

  /// Line format: `id rank deg`, `id < id`, optional `bottom=id` / `top=id`; `#` comments.
  static RankedPoset parse(std::string_view text);
  std::string str() const;

  std::size_t size() const noexcept { return elements_.size(); }
  const PosetElement& element(std::size_t i) const { return elements_.at(i); }
  const std::vector<PosetElement>& elements() const noexcept { return elements_; }
  std::size_t bottom() const noexcept { return bottom_; }
  std::size_t top() const noexcept { return top_; }
  long total_rank() const { return elements_[top_].rank; }
  bool leq(std::size_t a, std::size_t b) const { return leq_.at(a * size() + b); }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  /// Index of the element with the given id; throws InvalidArgument.
  std::size_t index_of(std::string_view id) const;

 private:
  std::vector<PosetElement> elements_;
  std::vector<char> leq_;
  std::vector<std::pair<std::size_t, std::size_t>> relations_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

struct GammaFiltration {
  /// Element indices c_0 = bottom < ... < c_s = top.
  std::vector<std::size_t> chain;
  /// γ_1 > ... > γ_s; jumps[i] belongs to the graded piece c_{i+1} / c_i.
  std::vector<Rational> jumps;
};

/// Type of F: γ_i repeated rank(c_i) - rank(c_{i-1}) times. Throws InvalidChain.
SlopeVector filtration_type(const GammaFiltration& filtration, const RankedPoset& poset);

/// Throws NotAdmissible when an envelope vertex has no unique realizer or the realizers
/// do not form a chain; throws InvalidPoset when rank(top) = 0.
GammaFiltration hn_filtration(const RankedPoset& poset);

/// deg(x)·rank(top) <= deg(top)·rank(x) for every element x.
bool semistable(const RankedPoset& poset);

/// Strict vertices of the upper concave envelope of the (rank, deg) cloud, from (0, 0)
/// to (rank(top), deg(top)).
std::vector<std::pair<Rational, Rational>> upper_envelope(const RankedPoset& poset);

enum class ConcatResult { Equal, DominatedBy, Violation };
const char* to_string(ConcatResult r) noexcept;

/// Compares t_total with t_sub ∗ t_quot. Throws LengthMismatch unless the lengths add up.
ConcatResult concat_check(const SlopeVector& t_sub, const SlopeVector& t_quot,
                          const SlopeVector& t_total);

}  // namespace hnslope
