#pragma once

// φ-modules over the Hahn model of O_K^♭. Coordinates of φ(m) are Φ·σ(coords(m)),
// σ the q-power Frobenius. With v(t) = 1, effective modules have non-positive Hodge
// types and the Tate twist multiplies Φ by t^{-1}.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hnslope/hn_engine.hpp"
#include "hnslope/lattice.hpp"
#include "hnslope/matrix.hpp"
#include "hnslope/polygon.hpp"
#include "hnslope/series.hpp"

namespace hnslope {

using HahnMatrix = Matrix<HahnSeries>;

class PhiModule {
 public:
  /// Throws RankMismatch for a non-square Φ, Singular when det Φ = 0, FieldMismatch
  /// unless q is a power of p with F_q inside the coefficient field.
  PhiModule(HahnMatrix phi, unsigned long q);

  std::size_t rank() const noexcept { return phi_.rows(); }
  const HahnMatrix& phi() const noexcept { return phi_; }
  unsigned long q() const noexcept { return q_; }
  const HahnRing& ring() const noexcept { return phi_.ring(); }

  /// φ applied to the columns of `x` (coordinates in the standard basis).
  HahnMatrix apply(const HahnMatrix& x) const;

 private:
  HahnMatrix phi_;
  unsigned long q_;
};

struct Trivialization {
  HahnMatrix vectors;
  /// Required valuation of Φσ(x) − x for every column x. Missing: must vanish exactly.
  std::optional<Rational> tolerance;
};

struct TrivializationReport {
  bool ok = false;
  bool independent = false;
  /// v(Φσ(x) − x) per column (a lower bound when the difference is an unknown zero).
  std::vector<Valuation> residuals;
};

SlopeVector hodge_type(const PhiModule& m);

/// −v(det Φ), or n·r − Σ SNF valuations of t^n·Φ when n is given (NotEffectiveAtN
/// unless t^n·Φ is integral).
Rational degree_t(const PhiModule& m, std::optional<long> n = std::nullopt);

/// Φ ↦ t^{-n}·Φ.
PhiModule twist(const PhiModule& m, long n);
/// Trivialization of twist(m, n): columns multiplied by t^{n/(q−1)}.
Trivialization twist(const Trivialization& t, const PhiModule& m, long n);

/// Kronecker product. Throws FieldMismatch for different coefficient fields or q.
PhiModule tensor(const PhiModule& a, const PhiModule& b);
/// Inverse transpose of Φ.
PhiModule dual(const PhiModule& m);
/// k-th compound matrix of Φ. Throws BadArity unless 1 <= k <= r.
PhiModule exterior_power(const PhiModule& m, std::size_t k);
PhiModule direct_sum(const PhiModule& a, const PhiModule& b);

TrivializationReport verify_trivialization(const PhiModule& m, const Trivialization& t);

struct FarguesResult {
  SlopeVector type;
  /// (γ_i, saturated basis of the i-th filtration step), for i = 1..s.
  std::vector<std::pair<Rational, HahnMatrix>> filtration;
  /// Decorated poset of strict subobjects fed to the HN engine.
  RankedPoset poset;
};

/// Enumerates the F_q-subspaces of the span of the trivialization. Throws TooLarge
/// (r > 4 or q > 3), BadTrivialization, NotAdmissible, PrecisionExhausted.
FarguesResult fargues_type(const PhiModule& m, const Trivialization& t);

/// Degree of the saturation of the K^♭-span of `columns` (a φ-stable subspace).
Rational sub_degree(const PhiModule& m, const HahnMatrix& columns);

/// All elements of F_q inside the coefficient field.
std::vector<FiniteField::Element> subfield_elements(const FiniteField& field, unsigned long q);

/// Reduced row echelon bases of all subspaces of F_q^r (F_q given by its elements),
/// grouped by dimension 0..r.
std::vector<std::vector<std::vector<std::vector<FiniteField::Element>>>> enumerate_subspaces(
    const FiniteField& field, const std::vector<FiniteField::Element>& fq, std::size_t r);

}  // namespace hnslope
