#pragma once

// Smith normal form over the valuation rings, relative position of lattices,
// torsion invariants and residue filtrations. Lattices are always given by
// explicit bases; X expresses a basis of L2 in a basis of L1 (columns).

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hnslope/matrix.hpp"
#include "hnslope/padic.hpp"
#include "hnslope/polygon.hpp"
#include "hnslope/rational.hpp"
#include "hnslope/series.hpp"

namespace hnslope {

template <class R>
struct SnfResult {
  /// Valuations of the diagonal entries, ascending; +∞ entries last.
  std::vector<Valuation> valuations;
  std::size_t rank = 0;
  /// Left transform U (unimodular) with U·X·W diagonal for some unimodular W.
  std::optional<Matrix<R>> left;
};

/// Min-valuation pivoting. Throws PrecisionExhausted when an unknown entry could
/// undercut the chosen pivot. `trace` (optional) receives one line per pivot.
template <class R>
SnfResult<R> snf(const Matrix<R>& x, bool with_transform = false,
                 std::vector<std::string>* trace = nullptr);

/// d(L1, L2): negated SNF valuations, non-increasing. Throws Singular.
template <class R>
SlopeVector lattice_distance(const Matrix<R>& x);

/// inv(coker X). Throws NotTorsion or NotIntegral.
template <class R>
PlusInfType torsion_inv(const Matrix<R>& x);

template <class R>
struct ResidueFiltration {
  /// Distinct entries of d(L1, L2), strictly decreasing.
  std::vector<Rational> jumps;
  /// bases[j]: vectors (over the residue field) spanning F^{jumps[j]}.
  std::vector<std::vector<std::vector<R>>> bases;
  SlopeVector type;
};

/// F^γ(L1, L2) = span of the residues of the adapted basis vectors e_i with γ_i >= γ.
template <class R>
ResidueFiltration<R> relative_filtration(const Matrix<R>& x);

struct InducedDistances {
  SlopeVector d1, d2, d3;
  bool inequality_holds = false;
};

/// L1 = L2 ∩ ker(P), L3 = P(L2), likewise for L2'; returns the three distances and
/// whether d2 >= d1 ∗ d3. Throws Singular or RankMismatch.
template <class R>
InducedDistances induced_lattices(const Matrix<R>& basis_l2, const Matrix<R>& basis_l2prime,
                                  const Matrix<R>& projection);

template <class R>
struct Saturation {
  /// Integral basis of (K-span of the input columns) ∩ O^n.
  Matrix<R> basis;
  /// Rows where `basis` restricts to a diagonal matrix of units (one per column).
  std::vector<std::size_t> pivot_rows;
  /// Valuation of each pivot before normalization.
  std::vector<Rational> pivot_valuations;
};

/// Throws RankMismatch unless the columns are independent.
template <class R>
Saturation<R> saturate(const Matrix<R>& a);

/// Unimodular W with A·W = [H | 0], H lower triangular with k = rows(A) columns.
/// Throws RankMismatch unless A has full row rank.
template <class R>
Matrix<R> column_reduction_transform(const Matrix<R>& a);

template <class R>
Valuation det_valuation(const Matrix<R>& a);

/// Minimum valuation over all k×k minors (+∞ when all vanish or k exceeds a dimension).
template <class R>
Valuation minors_min_valuation(const Matrix<R>& x, std::size_t k) {
  Valuation best = Valuation::infinity();
  if (k == 0) return Valuation(0);
  if (k > x.rows() || k > x.cols()) return best;
  std::vector<std::size_t> rows(k), cols(k);
  auto first = [k](std::vector<std::size_t>& v) {
    for (std::size_t i = 0; i < k; ++i) v[i] = i;
  };
  auto next = [k](std::vector<std::size_t>& v, std::size_t n) {
    for (std::size_t i = k; i-- > 0;) {
      if (v[i] < n - k + i) {
        ++v[i];
        for (std::size_t j = i + 1; j < k; ++j) v[j] = v[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  first(rows);
  do {
    first(cols);
    do {
      const R m = determinant(x.submatrix(rows, cols));
      if (!m.is_exact_zero()) best = std::min(best, m.valuation());
    } while (next(cols, x.cols()));
  } while (next(rows, x.rows()));
  return best;
}

struct ExactSeqReport {
  bool length_additive = false;
  bool lower_ok = false;
  bool upper_ok = false;
  bool split_equal = false;
};

/// For 0 → M1 → M2 → M3 → 0 with the given invariants (sub, quotient, middle).
ExactSeqReport exact_seq_bounds(const PlusInfType& sub, const PlusInfType& quot,
                                const PlusInfType& middle);

#define HNSLOPE_LATTICE_EXTERN(R)                                                          \
  extern template SnfResult<R> snf(const Matrix<R>&, bool, std::vector<std::string>*);    \
  extern template SlopeVector lattice_distance(const Matrix<R>&);                          \
  extern template PlusInfType torsion_inv(const Matrix<R>&);                               \
  extern template ResidueFiltration<R> relative_filtration(const Matrix<R>&);              \
  extern template InducedDistances induced_lattices(const Matrix<R>&, const Matrix<R>&,    \
                                                    const Matrix<R>&);                     \
  extern template Saturation<R> saturate(const Matrix<R>&);                                \
  extern template Matrix<R> column_reduction_transform(const Matrix<R>&);                  \
  extern template Valuation det_valuation(const Matrix<R>&);

HNSLOPE_LATTICE_EXTERN(HahnSeries)
HNSLOPE_LATTICE_EXTERN(PadicNumber)
HNSLOPE_LATTICE_EXTERN(XiSeries)

#undef HNSLOPE_LATTICE_EXTERN

}  // namespace hnslope
