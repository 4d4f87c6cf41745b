#include "hnslope/lattice.hpp"

#include <algorithm>

#include "hnslope/error.hpp"

namespace hnslope {

namespace {

// Entries of the remaining submatrix are cut at (pivot valuation + margin) so that
// supports stay bounded; the exact p-adic model needs no cut.
template <class Ring>
std::optional<Rational> truncation_margin(const Ring& ring) {
  if constexpr (requires { ring->default_precision; }) {
    return ring->default_precision;
  } else {
    (void)ring;
    return std::nullopt;
  }
}

template <class R>
R cut(const R& x, const std::optional<Rational>& cutoff) {
  return cutoff ? x.truncated(*cutoff) : x;
}

template <class R>
R res(const R& x) {
  return x.residue_element();
}

// Inverse of a square matrix over the residue field (entries are residues).
template <class R>
Matrix<R> residue_inverse(Matrix<R> a) {
  const std::size_t n = a.rows();
  const auto& ring = a.ring();
  Matrix<R> inv = Matrix<R>::identity(ring, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_exact_zero()) ++p;
    if (p == n) fail(ErrorKind::Singular, "transform is singular modulo the maximal ideal");
    a.swap_rows(p, c);
    inv.swap_rows(p, c);
    const R scale = res(a(c, c).inverse());
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) = res(a(c, j) * scale);
      inv(c, j) = res(inv(c, j) * scale);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c).is_exact_zero()) continue;
      const R f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) = res(a(i, j) - f * a(c, j));
        inv(i, j) = res(inv(i, j) - f * inv(c, j));
      }
    }
  }
  return inv;
}

std::string entry_name(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

template <class R>
SnfResult<R> snf(const Matrix<R>& x, bool with_transform, std::vector<std::string>* trace) {
  Matrix<R> a = x;
  const std::size_t n = a.rows();
  const std::size_t m = a.cols();
  const auto& ring = a.ring();
  const auto margin = truncation_margin(ring);
  SnfResult<R> result;
  if (with_transform) result.left = Matrix<R>::identity(ring, n);
  const std::size_t steps = std::min(n, m);

  for (std::size_t k = 0; k < steps; ++k) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Rational best_v;
    std::optional<Rational> unknown;
    for (std::size_t i = k; i < n; ++i) {
      for (std::size_t j = k; j < m; ++j) {
        const R& e = a(i, j);
        if (e.is_known_nonzero()) {
          const Rational v = e.valuation().value();
          if (!best || v < best_v) {
            best = {i, j};
            best_v = v;
          }
        } else if (!e.is_exact_zero()) {
          const Rational b = e.valuation_bound().value();
          unknown = unknown ? min(*unknown, b) : b;
        }
      }
    }
    if (!best) {
      if (unknown) {
        fail(ErrorKind::PrecisionExhausted,
             "remaining block is zero only to precision " + unknown->str());
      }
      break;
    }
    if (unknown && !(best_v < *unknown)) {
      fail(ErrorKind::PrecisionExhausted, "pivot valuation " + best_v.str() +
                                              " not below unknown precision " + unknown->str());
    }
    const auto [pi, pj] = *best;
    a.swap_rows(k, pi);
    a.swap_cols(k, pj);
    if (result.left) result.left->swap_rows(k, pi);
    if (trace) {
      trace->push_back("pivot " + std::to_string(k) + ": entry " + entry_name(pi, pj) +
                       " valuation " + best_v.str());
    }

    const R pivot = a(k, k);
    const std::optional<Rational> cutoff =
        margin ? std::optional<Rational>(best_v + *margin) : std::nullopt;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_exact_zero()) continue;
      const auto [u, beta] = elimination_pair(pivot, a(i, k));
      for (std::size_t j = k + 1; j < m; ++j) {
        a(i, j) = cut(u * a(i, j) - beta * a(k, j), cutoff);
      }
      a(i, k) = R::zero(ring);
      if (result.left) {
        auto& left = *result.left;
        for (std::size_t j = 0; j < n; ++j) left(i, j) = cut(u * left(i, j) - beta * left(k, j), margin);
      }
    }
    // Clearing row k only rescales later columns by units, which W absorbs.
    for (std::size_t j = k + 1; j < m; ++j) a(k, j) = R::zero(ring);
    result.valuations.emplace_back(best_v);
  }
  result.rank = result.valuations.size();
  while (result.valuations.size() < steps) result.valuations.push_back(Valuation::infinity());
  return result;
}

template <class R>
SlopeVector lattice_distance(const Matrix<R>& x) {
  if (!x.square()) fail(ErrorKind::RankMismatch, "lattice distance needs a square matrix");
  const auto s = snf(x);
  if (s.rank < x.rows()) fail(ErrorKind::Singular, "basis matrix is singular");
  std::vector<Rational> d;
  for (const auto& v : s.valuations) d.push_back(-v.value());
  return SlopeVector(std::move(d));
}

template <class R>
PlusInfType torsion_inv(const Matrix<R>& x) {
  const auto s = snf(x);
  if (s.rank < x.rows()) fail(ErrorKind::NotTorsion, "cokernel has a free part");
  std::vector<Rational> inv;
  for (const auto& v : s.valuations) {
    if (v.value().sign() < 0) fail(ErrorKind::NotIntegral, "presentation has non-integral entries");
    inv.push_back(v.value());
  }
  return PlusInfType::from_multiset(std::move(inv));
}

template <class R>
ResidueFiltration<R> relative_filtration(const Matrix<R>& x) {
  if (!x.square()) fail(ErrorKind::RankMismatch, "relative filtration needs a square matrix");
  const std::size_t n = x.rows();
  const auto s = snf(x, true);
  if (s.rank < n) fail(ErrorKind::Singular, "basis matrix is singular");
  // Adapted basis of L1: the columns of U^{-1}; only their residues are needed.
  const Matrix<R> ubar = s.left->map([](const R& e) { return res(e); });
  const Matrix<R> e = residue_inverse(ubar);

  ResidueFiltration<R> out;
  std::vector<Rational> gamma;
  for (const auto& v : s.valuations) gamma.push_back(-v.value());
  out.type = SlopeVector(gamma);
  for (std::size_t i = 0; i < n; ++i) {
    if (out.jumps.empty() || out.jumps.back() != gamma[i]) out.jumps.push_back(gamma[i]);
  }
  for (const auto& g : out.jumps) {
    std::vector<std::vector<R>> basis;
    for (std::size_t i = 0; i < n && !(gamma[i] < g); ++i) {
      std::vector<R> col;
      for (std::size_t r = 0; r < n; ++r) col.push_back(e(r, i));
      basis.push_back(std::move(col));
    }
    out.bases.push_back(std::move(basis));
  }
  return out;
}

template <class R>
Matrix<R> column_reduction_transform(const Matrix<R>& input) {
  Matrix<R> a = input;
  const std::size_t k = a.rows();
  const std::size_t n = a.cols();
  const auto& ring = a.ring();
  if (k > n) fail(ErrorKind::RankMismatch, "more rows than columns");
  Matrix<R> w = Matrix<R>::identity(ring, n);
  for (std::size_t r = 0; r < k; ++r) {
    std::optional<std::size_t> best;
    Rational best_v;
    bool unknown = false;
    for (std::size_t c = r; c < n; ++c) {
      if (a(r, c).is_known_nonzero()) {
        const Rational v = a(r, c).valuation().value();
        if (!best || v < best_v) {
          best = c;
          best_v = v;
        }
      } else if (!a(r, c).is_exact_zero()) {
        unknown = true;
      }
    }
    if (!best) {
      if (unknown) fail(ErrorKind::PrecisionExhausted, "row is zero only to finite precision");
      fail(ErrorKind::RankMismatch, "map is not surjective");
    }
    a.swap_cols(r, *best);
    w.swap_cols(r, *best);
    const R pivot = a(r, r);
    for (std::size_t c = r + 1; c < n; ++c) {
      if (a(r, c).is_exact_zero()) continue;
      const auto [u, beta] = elimination_pair(pivot, a(r, c));
      for (std::size_t i = 0; i < k; ++i) a(i, c) = u * a(i, c) - beta * a(i, r);
      for (std::size_t i = 0; i < n; ++i) w(i, c) = u * w(i, c) - beta * w(i, r);
      a(r, c) = R::zero(ring);
    }
  }
  return w;
}

template <class R>
Saturation<R> saturate(const Matrix<R>& input) {
  Matrix<R> a = input;
  const std::size_t n = a.rows();
  const std::size_t k = a.cols();
  const auto& ring = a.ring();
  std::vector<char> used(n, 0);
  Saturation<R> out;
  for (std::size_t c = 0; c < k; ++c) {
    std::optional<std::size_t> best;
    Rational best_v;
    std::optional<Rational> unknown;
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      const R& e = a(i, c);
      if (e.is_known_nonzero()) {
        const Rational v = e.valuation().value();
        if (!best || v < best_v) {
          best = i;
          best_v = v;
        }
      } else if (!e.is_exact_zero()) {
        const Rational b = e.valuation_bound().value();
        unknown = unknown ? min(*unknown, b) : b;
      }
    }
    if (!best) {
      if (unknown) fail(ErrorKind::PrecisionExhausted, "column is zero only to finite precision");
      fail(ErrorKind::RankMismatch, "columns are linearly dependent");
    }
    if (unknown && !(best_v < *unknown)) {
      fail(ErrorKind::PrecisionExhausted, "saturation pivot not below the known precision");
    }
    const std::size_t i = *best;
    const R scale = R::uniformizer_power(ring, -best_v);
    for (std::size_t r = 0; r < n; ++r) a(r, c) = a(r, c) * scale;
    const R pivot = a(i, c);
    for (std::size_t c2 = 0; c2 < k; ++c2) {
      if (c2 == c || a(i, c2).is_exact_zero()) continue;
      const auto [u, beta] = elimination_pair(pivot, a(i, c2));
      for (std::size_t r = 0; r < n; ++r) a(r, c2) = u * a(r, c2) - beta * a(r, c);
      a(i, c2) = R::zero(ring);
    }
    used[i] = 1;
    out.pivot_rows.push_back(i);
    out.pivot_valuations.push_back(best_v);
  }
  out.basis = std::move(a);
  return out;
}

template <class R>
Valuation det_valuation(const Matrix<R>& a) {
  return determinant(a).valuation();
}

namespace {

// d(A^{-1} B) computed as d(adj(A)·B) shifted by v(det A).
template <class R>
SlopeVector relative_distance(const Matrix<R>& a, const Matrix<R>& b) {
  const Valuation va = det_valuation(a);
  if (va.is_infinite()) fail(ErrorKind::Singular, "basis matrix is singular");
  const auto d = lattice_distance(adjugate(a) * b);
  return twist_shift(d, va.value());
}

}  // namespace

template <class R>
InducedDistances induced_lattices(const Matrix<R>& b2, const Matrix<R>& b2p, const Matrix<R>& proj) {
  const std::size_t n = b2.rows();
  if (!b2.square() || !b2p.square() || b2p.rows() != n || proj.cols() != n) {
    fail(ErrorKind::RankMismatch, "lattice bases and projection have incompatible shapes");
  }
  const std::size_t k = proj.rows();
  InducedDistances out;
  out.d2 = relative_distance(b2, b2p);

  const Matrix<R> w = column_reduction_transform(proj * b2);
  const Matrix<R> wp = column_reduction_transform(proj * b2p);
  const Matrix<R> basis = b2 * w;
  const Matrix<R> basis_p = b2p * wp;
  const Matrix<R> h = (proj * basis).columns(0, k);
  const Matrix<R> hp = (proj * basis_p).columns(0, k);

  // L1' in the adapted basis of L2: only the last n - k coordinates survive.
  if (k < n) {
    const Valuation vb = det_valuation(basis);
    if (vb.is_infinite()) fail(ErrorKind::Singular, "basis matrix is singular");
    const Matrix<R> coords = adjugate(basis) * basis_p.columns(k, n);
    out.d1 = twist_shift(lattice_distance(coords.row_range(k, n)), vb.value());
  }
  if (k > 0) out.d3 = relative_distance(h, hp);
  out.inequality_holds = dominated_by(convex_sum(out.d1, out.d3), out.d2);
  return out;
}

ExactSeqReport exact_seq_bounds(const PlusInfType& sub, const PlusInfType& quot,
                                const PlusInfType& middle) {
  ExactSeqReport r;
  r.length_additive = sub.length() + quot.length() == middle.length();
  if (!r.length_additive) return r;
  const auto merged = convex_sum(sub, quot);
  r.lower_ok = dominated_by(merged, middle);
  r.upper_ok = dominated_by(middle, entrywise_sum(sub, quot));
  r.split_equal = middle == merged;
  return r;
}

#define HNSLOPE_LATTICE_INSTANTIATE(R)                                                     \
  template SnfResult<R> snf(const Matrix<R>&, bool, std::vector<std::string>*);           \
  template SlopeVector lattice_distance(const Matrix<R>&);                                 \
  template PlusInfType torsion_inv(const Matrix<R>&);                                      \
  template ResidueFiltration<R> relative_filtration(const Matrix<R>&);                     \
  template InducedDistances induced_lattices(const Matrix<R>&, const Matrix<R>&,           \
                                             const Matrix<R>&);                            \
  template Saturation<R> saturate(const Matrix<R>&);                                       \
  template Matrix<R> column_reduction_transform(const Matrix<R>&);                         \
  template Valuation det_valuation(const Matrix<R>&);

HNSLOPE_LATTICE_INSTANTIATE(HahnSeries)
HNSLOPE_LATTICE_INSTANTIATE(PadicNumber)
HNSLOPE_LATTICE_INSTANTIATE(XiSeries)

}  // namespace hnslope
