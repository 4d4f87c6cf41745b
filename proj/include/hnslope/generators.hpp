#pragma once

// Seeded random inputs for the property suites, and the monomial φ-module fixtures.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "hnslope/finite_field.hpp"
#include "hnslope/hn_engine.hpp"
#include "hnslope/matrix.hpp"
#include "hnslope/padic.hpp"
#include "hnslope/phimod.hpp"
#include "hnslope/polygon.hpp"
#include "hnslope/series.hpp"
#include "hnslope/slopes.hpp"

namespace hnslope {

std::uint64_t splitmix64(std::uint64_t& state);

/// Seed of case `index` of `suite`, derived from the run seed by SplitMix64.
std::uint64_t case_seed(std::uint64_t seed, std::string_view suite, std::size_t index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }
  bool coin() { return uniform(0, 1) == 1; }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform(0, static_cast<long>(v.size()) - 1))];
  }
  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Length 1..max_rank (0..max_rank when allow_empty), entries k/2 with k in [2·lo, 2·hi].
SlopeVector random_slope_vector(Rng& rng, std::size_t max_rank, long lo, long hi, bool allow_empty = false);

/// Entries 0 (probability 1/4) or p^a·u, a in [min_exp, max_exp], u a small unit.
PadicMatrix random_padic_matrix(Rng& rng, const PadicRing& ring, std::size_t rows, std::size_t cols,
                                long min_exp = 0, long max_exp = 3);
/// Exact entries with up to three terms, exponents in {min_half/2, ..., max_half/2}.
HahnMatrix random_hahn_matrix(Rng& rng, const HahnRing& ring, std::size_t rows, std::size_t cols,
                              long min_half = 0, long max_half = 4);
XiMatrix random_xi_matrix(Rng& rng, const XiRing& ring, std::size_t rows, std::size_t cols, long min_exp = -2,
                          long max_exp = 2);

/// Retries until the determinant is nonzero.
PadicMatrix random_invertible_padic(Rng& rng, const PadicRing& ring, std::size_t n, long min_exp = 0,
                                    long max_exp = 3);
HahnMatrix random_invertible_hahn(Rng& rng, const HahnRing& ring, std::size_t n, long min_half = 0,
                                  long max_half = 4);
XiMatrix random_invertible_xi(Rng& rng, const XiRing& ring, std::size_t n, long min_exp = -2, long max_exp = 2);

/// Product of random integral elementary matrices (so the determinant is ±1).
PadicMatrix random_unimodular_padic(Rng& rng, const PadicRing& ring, std::size_t n);

struct PhiFixture {
  std::string name;
  PhiModule module;
  Trivialization trivialization;
};

/// Φ e_j = t^{-a_j} e_{π(j)} over the smallest F_{q^m} carrying an exact trivialization
/// (m = lcm of the cycle lengths). Throws InvalidArgument for a non-permutation.
PhiFixture monomial_fixture(unsigned q, const std::vector<std::size_t>& perm, const std::vector<long>& a);

/// Every permutation of rank 1..3 with exponents in {0, 1} (plus a few larger ones),
/// for q = 2 and 3.
std::vector<PhiFixture> monomial_fixtures(std::size_t max_rank = 3);

/// All 16 subspaces of F_2^3 ordered by inclusion. Degrees are integers in
/// [−2·rank − 2, 2·rank + 2], halved on a coin flip; the bottom has degree 0.
RankedPoset random_subspace_poset(Rng& rng);

}  // namespace hnslope
