#include "hnslope/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hnslope/error.hpp"

namespace hnslope {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t case_seed(std::uint64_t seed, std::string_view suite, std::size_t index) {
  // FNV-1a of the suite name keeps suites independent of their order.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : suite) h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
  std::uint64_t state = seed ^ h;
  splitmix64(state);
  state ^= index;
  return splitmix64(state);
}

SlopeVector random_slope_vector(Rng& rng, std::size_t max_rank, long lo, long hi, bool allow_empty) {
  const long n = rng.uniform(allow_empty ? 0 : 1, static_cast<long>(max_rank));
  std::vector<Rational> v;
  for (long i = 0; i < n; ++i) v.emplace_back(rng.uniform(2 * lo, 2 * hi), 2);
  return SlopeVector::from_multiset(std::move(v));
}

namespace {

long small_unit(Rng& rng, unsigned long p) {
  while (true) {
    const long u = rng.uniform(-7, 7);
    if (u != 0 && u % static_cast<long>(p) != 0) return u;
  }
}

template <class R, class Gen>
Matrix<R> fill(const typename R::Ring& ring, std::size_t rows, std::size_t cols, Gen&& gen) {
  Matrix<R> m(ring, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = gen();
  }
  return m;
}

template <class M, class Gen>
M until_invertible(Gen&& gen) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    M m = gen();
    if (!determinant(m).is_exact_zero()) return m;
  }
  fail(ErrorKind::InvalidArgument, "could not draw an invertible matrix");
}

}  // namespace

PadicMatrix random_padic_matrix(Rng& rng, const PadicRing& ring, std::size_t rows, std::size_t cols, long min_exp,
                                long max_exp) {
  return fill<PadicNumber>(ring, rows, cols, [&] {
    if (rng.uniform(0, 3) == 0) return PadicNumber::zero(ring);
    const auto pa = PadicNumber::uniformizer_power(ring, Rational(rng.uniform(min_exp, max_exp)));
    return pa * PadicNumber::from_int(ring, small_unit(rng, ring->p));
  });
}

HahnMatrix random_hahn_matrix(Rng& rng, const HahnRing& ring, std::size_t rows, std::size_t cols, long min_half,
                              long max_half) {
  const auto size = static_cast<long>(ring->field->size());
  return fill<HahnSeries>(ring, rows, cols, [&] {
    HahnSeries s = HahnSeries::zero(ring);
    const long terms = rng.uniform(0, 3);
    for (long k = 0; k < terms; ++k) {
      const auto c = static_cast<FiniteField::Element>(rng.uniform(1, size - 1));
      s += HahnSeries::monomial(ring, c, Rational(rng.uniform(min_half, max_half), 2));
    }
    return s;
  });
}

XiMatrix random_xi_matrix(Rng& rng, const XiRing& ring, std::size_t rows, std::size_t cols, long min_exp,
                          long max_exp) {
  return fill<XiSeries>(ring, rows, cols, [&] {
    XiSeries s = XiSeries::zero(ring);
    const long terms = rng.uniform(0, 2);
    for (long k = 0; k < terms; ++k) {
      long c = 0;
      while (c == 0) c = rng.uniform(-3, 3);
      s += XiSeries::monomial(ring, Rational(c, rng.uniform(1, 2)), Rational(rng.uniform(min_exp, max_exp)));
    }
    return s;
  });
}

PadicMatrix random_invertible_padic(Rng& rng, const PadicRing& ring, std::size_t n, long min_exp, long max_exp) {
  return until_invertible<PadicMatrix>([&] { return random_padic_matrix(rng, ring, n, n, min_exp, max_exp); });
}

HahnMatrix random_invertible_hahn(Rng& rng, const HahnRing& ring, std::size_t n, long min_half, long max_half) {
  return until_invertible<HahnMatrix>([&] { return random_hahn_matrix(rng, ring, n, n, min_half, max_half); });
}

XiMatrix random_invertible_xi(Rng& rng, const XiRing& ring, std::size_t n, long min_exp, long max_exp) {
  return until_invertible<XiMatrix>([&] { return random_xi_matrix(rng, ring, n, n, min_exp, max_exp); });
}

PadicMatrix random_unimodular_padic(Rng& rng, const PadicRing& ring, std::size_t n) {
  PadicMatrix m = PadicMatrix::identity(ring, n);
  if (n < 2) return m;
  for (int step = 0; step < 6; ++step) {
    const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    PadicMatrix e = PadicMatrix::identity(ring, n);
    e(i, j) = PadicNumber::from_int(ring, rng.uniform(-3, 3));
    m = e * m;
  }
  return m;
}

namespace {

std::vector<FiniteField::Element> fq_basis(const FiniteField& field, unsigned q, unsigned long qpow) {
  const auto fq = subfield_elements(field, q);
  std::set<FiniteField::Element> span{field.zero()};
  std::vector<FiniteField::Element> basis;
  for (auto c : subfield_elements(field, qpow)) {
    if (span.count(c)) continue;
    basis.push_back(c);
    std::set<FiniteField::Element> next;
    for (auto s : span) {
      for (auto k : fq) next.insert(field.add(s, field.mul(k, c)));
    }
    span = std::move(next);
  }
  return basis;
}

std::string list_str(const std::vector<long>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "]";
}

}  // namespace

PhiFixture monomial_fixture(unsigned q, const std::vector<std::size_t>& perm, const std::vector<long>& a) {
  const std::size_t r = perm.size();
  if (a.size() != r) fail(ErrorKind::InvalidArgument, "one exponent per basis vector");
  {
    auto sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < r; ++i) {
      if (sorted[i] != i) fail(ErrorKind::InvalidArgument, "not a permutation");
    }
  }
  std::vector<std::vector<std::size_t>> cycles;
  std::vector<char> seen(r, 0);
  unsigned lcm = 1;
  for (std::size_t j = 0; j < r; ++j) {
    if (seen[j]) continue;
    std::vector<std::size_t> cyc;
    for (std::size_t k = j; !seen[k]; k = perm[k]) {
      seen[k] = 1;
      cyc.push_back(k);
    }
    lcm = std::lcm(lcm, static_cast<unsigned>(cyc.size()));
    cycles.push_back(std::move(cyc));
  }
  const auto field = FiniteField::make(q, default_modulus(q, lcm));
  const auto ring = make_hahn_ring(field);

  HahnMatrix phi(ring, r, r);
  for (std::size_t j = 0; j < r; ++j) phi(perm[j], j) = HahnSeries::uniformizer_power(ring, Rational(-a[j]));

  HahnMatrix triv(ring, r, r);
  std::size_t column = 0;
  for (const auto& cyc : cycles) {
    const std::size_t len = cyc.size();
    unsigned long qpow = 1;
    for (std::size_t i = 0; i < len; ++i) qpow *= q;
    Rational big_a = 0;
    for (std::size_t i = 0; i < len; ++i) {
      Rational w = 1;
      for (std::size_t k = i + 1; k < len; ++k) w *= Rational(static_cast<long>(q));
      big_a += Rational(a[cyc[i]]) * w;
    }
    const Rational e0 = big_a / Rational(static_cast<long>(qpow) - 1);
    for (auto b : fq_basis(*field, q, qpow)) {
      auto c = b;
      Rational e = e0;
      std::size_t cur = cyc.front();
      for (std::size_t i = 0; i < len; ++i) {
        triv(cur, column) = HahnSeries::monomial(ring, c, e);
        c = field->pow(c, q);
        e = Rational(static_cast<long>(q)) * e - Rational(a[cur]);
        cur = perm[cur];
      }
      ++column;
    }
  }
  std::vector<long> p(perm.begin(), perm.end());
  return PhiFixture{"q=" + std::to_string(q) + " perm=" + list_str(p) + " a=" + list_str(a),
                    PhiModule(std::move(phi), q), Trivialization{std::move(triv), std::nullopt}};
}

std::vector<PhiFixture> monomial_fixtures(std::size_t max_rank) {
  std::vector<PhiFixture> out;
  for (unsigned q : {2u, 3u}) {
    for (std::size_t r = 1; r <= max_rank; ++r) {
      std::vector<std::size_t> perm(r);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        for (unsigned mask = 0; mask < (1u << r); ++mask) {
          std::vector<long> a(r);
          for (std::size_t j = 0; j < r; ++j) a[j] = (mask >> j) & 1u;
          out.push_back(monomial_fixture(q, perm, a));
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    out.push_back(monomial_fixture(q, {0, 1}, {2, 0}));
    out.push_back(monomial_fixture(q, {1, 0}, {-1, 2}));
    if (max_rank >= 3) {
      out.push_back(monomial_fixture(q, {0, 1, 2}, {2, 1, 0}));
      out.push_back(monomial_fixture(q, {1, 2, 0}, {3, 0, -1}));
    }
  }
  return out;
}

RankedPoset random_subspace_poset(Rng& rng) {
  // Subspaces of F_2^3 as bitmasks over the 8 vectors they contain.
  std::vector<unsigned> spaces;
  for (unsigned mask = 1; mask < 256; mask += 2) {
    bool closed = true;
    for (unsigned x = 0; x < 8 && closed; ++x) {
      for (unsigned y = 0; y < 8 && closed; ++y) {
        if ((mask >> x & 1u) && (mask >> y & 1u) && !(mask >> (x ^ y) & 1u)) closed = false;
      }
    }
    if (closed) spaces.push_back(mask);
  }
  std::sort(spaces.begin(), spaces.end(), [](unsigned x, unsigned y) {
    const int cx = __builtin_popcount(x), cy = __builtin_popcount(y);
    return cx != cy ? cx < cy : x < y;
  });
  std::vector<PosetElement> elements;
  for (unsigned s : spaces) {
    const long rank = __builtin_ctz(static_cast<unsigned>(__builtin_popcount(s)));
    Rational deg = 0;
    if (rank > 0) deg = Rational(rng.uniform(-2 * rank - 2, 2 * rank + 2), rng.coin() ? 1 : 2);
    elements.push_back({"S" + std::to_string(s), rank, deg});
  }
  std::vector<std::pair<std::size_t, std::size_t>> relations;
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    for (std::size_t j = 0; j < spaces.size(); ++j) {
      if (i != j && (spaces[i] & spaces[j]) == spaces[i]) relations.emplace_back(i, j);
    }
  }
  return RankedPoset(std::move(elements), relations, 0, spaces.size() - 1);
}

}  // namespace hnslope
