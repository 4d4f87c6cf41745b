#pragma once

// Isocrystals with trivial σ over the exact p-adic model, and Hodge-Tate modules
// over truncated ξ-adic series.

#include <cstddef>
#include <vector>

#include "hnslope/hn_engine.hpp"
#include "hnslope/lattice.hpp"
#include "hnslope/matrix.hpp"
#include "hnslope/padic.hpp"
#include "hnslope/polygon.hpp"
#include "hnslope/series.hpp"

namespace hnslope {

using PadicMatrix = Matrix<PadicNumber>;
using XiMatrix = Matrix<XiSeries>;
/// Row-major matrix of exact rationals (subspaces of V are spanned by its columns).
using RationalMatrix = std::vector<std::vector<Rational>>;

class Isocrystal {
 public:
  /// Throws RankMismatch (non-square) or Singular.
  explicit Isocrystal(PadicMatrix phi);

  /// Block sum of companion matrices of T^h − p^d, one per slope d/h (in lowest
  /// terms). Throws InvalidArgument unless each slope occurs a multiple of h times.
  static Isocrystal from_slopes(const PadicRing& ring, const SlopeVector& slopes);

  std::size_t rank() const noexcept { return phi_.rows(); }
  unsigned long prime() const noexcept { return phi_.ring()->p; }
  const PadicMatrix& phi() const noexcept { return phi_; }

 private:
  PadicMatrix phi_;
};

/// The matrix of φ on a chosen lattice basis.
using CrystalLattice = Isocrystal;

/// Root valuations of the characteristic polynomial (rank <= 16).
SlopeVector newton_type(const Isocrystal& d);
SlopeVector newton_iota_type(const Isocrystal& d);
SlopeVector hodge_type_crystal(const CrystalLattice& x);

enum class MazurResult { Holds, HoldsWithEquality, Violation };
const char* to_string(MazurResult r) noexcept;

MazurResult mazur_check(const CrystalLattice& x);

/// Multiplies the matrix by p^{-n}.
Isocrystal slope_twist(const Isocrystal& d, long n);
/// Throws FieldMismatch for different primes.
Isocrystal tensor(const Isocrystal& a, const Isocrystal& b);

class HTModule {
 public:
  /// Columns of `xi` are a basis of Ξ. Throws RankMismatch, Singular or PrecisionExhausted.
  explicit HTModule(XiMatrix xi);

  std::size_t rank() const noexcept { return xi_.rows(); }
  const XiMatrix& xi() const noexcept { return xi_; }
  const XiRing& ring() const noexcept { return xi_.ring(); }

 private:
  XiMatrix xi_;
};

SlopeVector ht_hodge_type(const HTModule& h);
Rational ht_degree(const HTModule& h);
/// Multiplies Ξ by ξ^{-n}.
HTModule slope_twist(const HTModule& h, long n);

/// deg(W, Ξ ∩ W_dR) for the subspace spanned by the columns of `w`.
Rational ht_subspace_degree(const HTModule& h, const RationalMatrix& w);

struct HTFarguesBound {
  SlopeVector type;
  bool certified = false;
  /// Distinct proper nonzero candidates (reduced echelon form of the column span)
  /// with their degrees.
  std::vector<std::pair<RationalMatrix, Rational>> candidates;
};

/// HN type of the candidate cloud. A lower bound for t_F; certified only when the
/// caller asserts the candidates are exhaustive (or r = 1). Throws RankMismatch,
/// NotAdmissible.
HTFarguesBound ht_fargues_bound(const HTModule& h, const std::vector<RationalMatrix>& candidates,
                                bool exhaustive);

struct MonoEpiReport {
  Rational length;
  SlopeVector t1, t2;
  /// True when both bounds were certified and 0 <= t2 − t1 <= length was checked.
  bool checked = false;
  bool lower_ok = false;
  bool upper_ok = false;
};

/// Throws NotContained unless Ξ1 ⊆ Ξ2, RankMismatch for different ranks.
MonoEpiReport ht_monoepi_check(const HTModule& h1, const HTModule& h2,
                               const std::vector<RationalMatrix>& candidates, bool exhaustive);

/// Reduced row echelon form of the transpose: a canonical basis (as rows) of the column span.
RationalMatrix column_span_rref(const RationalMatrix& w);
std::size_t rational_rank(const RationalMatrix& w);

}  // namespace hnslope
