#include "hnslope/phimod.hpp"

#include <algorithm>
#include <functional>

#include "hnslope/error.hpp"

namespace hnslope {

namespace {

using Element = FiniteField::Element;
using Vec = std::vector<Element>;

HahnSeries t_power(const HahnRing& ring, const Rational& e) { return HahnSeries::uniformizer_power(ring, e); }

HahnSeries field_constant(const HahnRing& ring, Element c) {
  return HahnSeries::monomial(ring, c, Rational(0));
}

void check_compatible(const PhiModule& a, const PhiModule& b) {
  if (!a.ring()->field->same_as(*b.ring()->field) || a.q() != b.q()) {
    fail(ErrorKind::FieldMismatch, "φ-modules over different coefficient fields or Frobenius powers");
  }
}

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

// Is every row of `a` in the row span of the echelon basis `b`?
bool contained(const FiniteField& f, const std::vector<Vec>& a, const std::vector<Vec>& b) {
  for (Vec v : a) {
    for (const auto& row : b) {
      std::size_t p = 0;
      while (row[p] == 0) ++p;
      const Element c = v[p];
      if (c == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = f.sub(v[j], f.mul(c, row[j]));
    }
    for (Element x : v) {
      if (x != 0) return false;
    }
  }
  return true;
}

struct SubDegree {
  Rational deg;
  Rational max_pivot;
};

SubDegree sub_degree_impl(const PhiModule& m, const HahnMatrix& columns) {
  const auto sat = saturate(columns);
  const auto image = m.apply(sat.basis);
  std::vector<std::size_t> all(image.cols());
  for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
  const Valuation v = det_valuation(image.submatrix(sat.pivot_rows, all));
  if (v.is_infinite()) fail(ErrorKind::Singular, "Frobenius is singular on a subobject");
  SubDegree out{-v.value(), Rational(0)};
  for (const auto& pv : sat.pivot_valuations) out.max_pivot = max(out.max_pivot, pv);
  return out;
}

}  // namespace

PhiModule::PhiModule(HahnMatrix phi, unsigned long q) : phi_(std::move(phi)), q_(q) {
  if (!phi_.square()) fail(ErrorKind::RankMismatch, "Frobenius matrix must be square");
  const auto& field = *phi_.ring()->field;
  unsigned long power = field.p();
  unsigned f = 1;
  while (power < q) {
    power *= field.p();
    ++f;
  }
  if (power != q || field.m() % f != 0) {
    fail(ErrorKind::FieldMismatch, "q = " + std::to_string(q) + " is not a power of p with F_q inside F_" +
                                       std::to_string(field.size()));
  }
  if (phi_.rows() > 0 && det_valuation(phi_).is_infinite()) {
    fail(ErrorKind::Singular, "Frobenius matrix is not invertible");
  }
}

HahnMatrix PhiModule::apply(const HahnMatrix& x) const {
  const unsigned long q = q_;
  return phi_ * x.map([q](const HahnSeries& e) { return e.frobenius(q); });
}

SlopeVector hodge_type(const PhiModule& m) { return lattice_distance(m.phi()); }

Rational degree_t(const PhiModule& m, std::optional<long> n) {
  if (!n) return -det_valuation(m.phi()).value();
  const HahnMatrix shifted = m.phi().scaled(t_power(m.ring(), Rational(*n)));
  for (std::size_t i = 0; i < shifted.rows(); ++i) {
    for (std::size_t j = 0; j < shifted.cols(); ++j) {
      if (shifted(i, j).valuation_bound() < Valuation(0)) {
        fail(ErrorKind::NotEffectiveAtN, "t^" + std::to_string(*n) + "·Φ is not integral");
      }
    }
  }
  Rational length = 0;
  for (const auto& v : snf(shifted).valuations) length += v.value();
  return Rational(*n) * Rational(static_cast<long>(m.rank())) - length;
}

PhiModule twist(const PhiModule& m, long n) {
  return PhiModule(m.phi().scaled(t_power(m.ring(), Rational(-n))), m.q());
}

Trivialization twist(const Trivialization& t, const PhiModule& m, long n) {
  const Rational shift(n, static_cast<long>(m.q()) - 1);
  Trivialization out{t.vectors.scaled(t_power(m.ring(), shift)), t.tolerance};
  if (out.tolerance) out.tolerance = *out.tolerance + shift;
  return out;
}

PhiModule tensor(const PhiModule& a, const PhiModule& b) {
  check_compatible(a, b);
  return PhiModule(kronecker(a.phi(), b.phi()), a.q());
}

PhiModule dual(const PhiModule& m) {
  const HahnSeries det_inv = determinant(m.phi()).inverse();
  return PhiModule(adjugate(m.phi()).transpose().scaled(det_inv), m.q());
}

PhiModule exterior_power(const PhiModule& m, std::size_t k) {
  const std::size_t r = m.rank();
  if (k == 0 || k > r) fail(ErrorKind::BadArity, "exterior power " + std::to_string(k) + " of rank " + std::to_string(r));
  const auto sets = subsets(r, k);
  HahnMatrix c(m.ring(), sets.size(), sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) c(i, j) = determinant(m.phi().submatrix(sets[i], sets[j]));
  }
  return PhiModule(std::move(c), m.q());
}

PhiModule direct_sum(const PhiModule& a, const PhiModule& b) {
  check_compatible(a, b);
  return PhiModule(block_diagonal(a.phi(), b.phi()), a.q());
}

TrivializationReport verify_trivialization(const PhiModule& m, const Trivialization& t) {
  const auto& x = t.vectors;
  if (x.rows() != m.rank() || x.cols() != m.rank()) {
    fail(ErrorKind::RankMismatch, "trivialization must have r columns of length r");
  }
  TrivializationReport report;
  const HahnMatrix diff = m.apply(x) - x;
  report.ok = true;
  for (std::size_t j = 0; j < x.cols(); ++j) {
    Valuation v = Valuation::infinity();
    for (std::size_t i = 0; i < x.rows(); ++i) v = std::min(v, diff(i, j).valuation_bound());
    report.residuals.push_back(v);
    const bool fine = t.tolerance ? !(v < Valuation(*t.tolerance)) : v.is_infinite();
    report.ok = report.ok && fine;
  }
  const HahnSeries det = determinant(x);
  report.independent = det.is_known_nonzero();
  report.ok = report.ok && report.independent;
  return report;
}

Rational sub_degree(const PhiModule& m, const HahnMatrix& columns) {
  return sub_degree_impl(m, columns).deg;
}

std::vector<Element> subfield_elements(const FiniteField& field, unsigned long q) {
  if (field.size() > (1u << 16)) fail(ErrorKind::TooLarge, "coefficient field too large to enumerate");
  std::vector<Element> out;
  for (Element a = 0; a < field.size(); ++a) {
    if (field.pow(a, q) == a) out.push_back(a);
  }
  if (out.size() != q) fail(ErrorKind::FieldMismatch, "F_q is not contained in the coefficient field");
  return out;
}

std::vector<std::vector<std::vector<Vec>>> enumerate_subspaces(const FiniteField& field,
                                                                const std::vector<Element>& fq,
                                                                std::size_t r) {
  std::vector<std::vector<std::vector<Vec>>> by_dim(r + 1);
  for (std::size_t k = 0; k <= r; ++k) {
    for (const auto& pivots : subsets(r, k)) {
      std::vector<Vec> rows(k, Vec(r, field.zero()));
      std::vector<std::pair<std::size_t, std::size_t>> free;
      for (std::size_t s = 0; s < k; ++s) {
        rows[s][pivots[s]] = field.one();
        for (std::size_t j = pivots[s] + 1; j < r; ++j) {
          if (std::find(pivots.begin(), pivots.end(), j) == pivots.end()) free.emplace_back(s, j);
        }
      }
      std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == free.size()) {
          by_dim[k].push_back(rows);
          return;
        }
        for (Element c : fq) {
          rows[free[idx].first][free[idx].second] = c;
          rec(idx + 1);
        }
      };
      rec(0);
    }
  }
  return by_dim;
}

FarguesResult fargues_type(const PhiModule& m, const Trivialization& t) {
  const std::size_t r = m.rank();
  if (r > 4 || m.q() > 3) {
    fail(ErrorKind::TooLarge, "subspace enumeration limited to r <= 4 and q <= 3");
  }
  const auto report = verify_trivialization(m, t);
  if (!report.ok) {
    std::string res;
    for (const auto& v : report.residuals) res += (res.empty() ? "" : ", ") + v.str();
    fail(ErrorKind::BadTrivialization,
         "trivialization residuals [" + res + "]" + (report.independent ? "" : ", columns dependent"));
  }
  const auto& ring = m.ring();
  const auto& field = *ring->field;
  const auto fq = subfield_elements(field, m.q());
  const auto spaces = enumerate_subspaces(field, fq, r);

  std::vector<PosetElement> elements{{"0", 0, Rational(0)}};
  std::vector<HahnMatrix> bases{HahnMatrix(ring, r, 0)};
  std::vector<std::vector<Vec>> coords{{}};
  std::vector<std::size_t> dims{0};
  for (std::size_t k = 1; k < r; ++k) {
    for (std::size_t idx = 0; idx < spaces[k].size(); ++idx) {
      const auto& rows = spaces[k][idx];
      HahnMatrix cols(ring, r, k);
      for (std::size_t s = 0; s < k; ++s) {
        for (std::size_t i = 0; i < r; ++i) {
          HahnSeries acc(ring);
          for (std::size_t j = 0; j < r; ++j) {
            if (rows[s][j] != 0) acc += t.vectors(i, j) * field_constant(ring, rows[s][j]);
          }
          cols(i, s) = acc;
        }
      }
      const auto sd = sub_degree_impl(m, cols);
      if (t.tolerance && !(sd.max_pivot < *t.tolerance)) {
        fail(ErrorKind::PrecisionExhausted, "saturation consumes valuations beyond the trivialization tolerance");
      }
      elements.push_back({"W" + std::to_string(k) + "." + std::to_string(idx), static_cast<long>(k), sd.deg});
      bases.push_back(saturate(cols).basis);
      coords.push_back(rows);
      dims.push_back(k);
    }
  }
  elements.push_back({"M", static_cast<long>(r), degree_t(m)});
  bases.push_back(HahnMatrix::identity(ring, r));
  coords.push_back(spaces[r].front());
  dims.push_back(r);

  std::vector<std::pair<std::size_t, std::size_t>> relations;
  for (std::size_t a = 0; a < elements.size(); ++a) {
    for (std::size_t b = 0; b < elements.size(); ++b) {
      if (dims[b] != dims[a] + 1) continue;
      if (contained(field, coords[a], coords[b])) relations.emplace_back(a, b);
    }
  }
  RankedPoset poset(elements, relations, 0, elements.size() - 1);
  const auto hn = hn_filtration(poset);
  FarguesResult out{filtration_type(hn, poset), {}, poset};
  for (std::size_t i = 1; i < hn.chain.size(); ++i) out.filtration.emplace_back(hn.jumps[i - 1], bases[hn.chain[i]]);
  return out;
}

}  // namespace hnslope
