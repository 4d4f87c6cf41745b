// Acceptance run: one PASS/FAIL line per criterion. Every comparison is exact
// (rational arithmetic, tolerance 0). Usage: acceptance <hnslope-cli> <golden-dir>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <unistd.h>

#include "hnslope/error.hpp"
#include "hnslope/generators.hpp"
#include "hnslope/hn_engine.hpp"
#include "hnslope/lattice.hpp"
#include "hnslope/phimod.hpp"
#include "hnslope/polygon.hpp"
#include "hnslope/slopes.hpp"
#include "../oracles/oracles.hpp"

using namespace hnslope;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    if (!ok && pass) first_failure = what;
    pass = pass && ok;
  }
};

Rng rng_for(const char* criterion, std::size_t i) { return Rng(case_seed(kSeed, criterion, i)); }

// f ≤ g: partial sums (zero-padded) never exceed and the totals agree.
bool oracle_dominated(const std::vector<Rational>& f, const std::vector<Rational>& g) {
  const std::size_t n = std::max(f.size(), g.size());
  Rational sf(0), sg(0);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < f.size()) sf += f[i];
    if (i < g.size()) sg += g[i];
    if (sg < sf) return false;
  }
  return sf == sg;
}

std::vector<Rational> concat_sorted(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> v = a;
  v.insert(v.end(), b.begin(), b.end());
  return oracle::sorted_desc(v);
}

// ---- 1 ----------------------------------------------------------------------

Outcome ac1() {
  Outcome o;
  const std::size_t n = 1000;
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng = rng_for("ac1", i);
    const auto f = random_slope_vector(rng, 6, -5, 5, true);
    const auto g = random_slope_vector(rng, 6, -5, 5, true);
    const auto h = random_slope_vector(rng, 6, -5, 5, true);
    const std::string tag = "f=" + f.str() + " g=" + g.str() + " h=" + h.str();
    const auto fg = convex_sum(f, g);
    o.check(fg == convex_sum(g, f), tag + ": commutativity");
    o.check(convex_sum(fg, h) == convex_sum(f, convex_sum(g, h)), tag + ": associativity");
    o.check(convex_sum(f, SlopeVector()) == f && convex_sum(SlopeVector(), f) == f, tag + ": neutral element");
    o.check(involution(involution(f)) == f, tag + ": involution");
    o.check(fg.entries() == concat_sorted(f.entries(), g.entries()), tag + ": concatenation");
    // every breakpoint of f*g (integers) and the midpoints in between
    for (long k = 0; k <= 2 * static_cast<long>(fg.size()); ++k) {
      const Rational s(k, 2);
      o.check(eval(fg, s) == oracle::sup_convolution(f.entries(), g.entries(), s), tag + " s=" + s.str());
    }
  }
  o.detail = std::to_string(n) + " triples, r<=6, half-integers in [-5,5]";
  return o;
}

// ---- 2 ----------------------------------------------------------------------

template <class M>
void snf_case(Outcome& o, const M& x) {
  const auto s = snf(x);
  Valuation acc(0);
  for (std::size_t k = 1; k <= std::min(x.rows(), x.cols()); ++k) {
    acc = acc + s.valuations[k - 1];
    o.check(acc == oracle::min_minor_valuation(x, k), x.str() + " k=" + std::to_string(k));
  }
}

Outcome ac2() {
  Outcome o;
  const std::size_t n = 200;
  const std::vector<HahnRing> hahn{make_hahn_ring(FiniteField::prime(2)), make_hahn_ring(FiniteField::prime(3)),
                                   make_hahn_ring(FiniteField::make(2, {1, 1, 1}))};
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng = rng_for("ac2", i);
    auto dim = [&] { return static_cast<std::size_t>(rng.uniform(1, 4)); };
    snf_case(o, random_padic_matrix(rng, make_padic_ring(rng.coin() ? 2 : 3), dim(), dim()));
    snf_case(o, random_hahn_matrix(rng, rng.pick(hahn), dim(), dim()));
    snf_case(o, random_xi_matrix(rng, make_xi_ring(), dim(), dim()));
  }
  o.detail = std::to_string(n) + " matrices per ring, dims<=4, Leibniz minors";
  return o;
}

// ---- 3 ----------------------------------------------------------------------

template <class M>
void triangle_case(Outcome& o, const M& x, const M& y) {
  const auto dx = lattice_distance(x), dy = lattice_distance(y), dxy = lattice_distance(x * y);
  o.check(dx == oracle::elementary_type(x) && dy == oracle::elementary_type(y), "distance vs minors: " + x.str());
  const auto bound = oracle::sorted_desc([&] {
    std::vector<Rational> s;
    for (std::size_t i = 0; i < dx.size(); ++i) s.push_back(dx[i] + dy[i]);
    return s;
  }());
  o.check(oracle_dominated(dxy.entries(), bound), "X=" + x.str() + " Y=" + y.str());
}

Outcome ac3() {
  Outcome o;
  const std::size_t n = 200;
  const std::vector<HahnRing> hahn{make_hahn_ring(FiniteField::prime(2)), make_hahn_ring(FiniteField::prime(3))};
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng = rng_for("ac3", i);
    const auto r = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto pr = make_padic_ring(rng.coin() ? 2 : 3);
    triangle_case(o, random_invertible_padic(rng, pr, r, -1, 2), random_invertible_padic(rng, pr, r, -1, 2));
    const auto hr = rng.pick(hahn);
    triangle_case(o, random_invertible_hahn(rng, hr, r, -2, 3), random_invertible_hahn(rng, hr, r, -2, 3));
    const auto xr = make_xi_ring();
    triangle_case(o, random_invertible_xi(rng, xr, r), random_invertible_xi(rng, xr, r));
  }
  o.detail = std::to_string(n) + " pairs per ring, rank<=4";
  return o;
}

// ---- 4 ----------------------------------------------------------------------

std::vector<Rational> oracle_inv(const PadicMatrix& x) {
  std::vector<Rational> out;
  for (const auto& d : oracle::elementary_type(x)) {
    if (!(-d).is_zero()) out.push_back(-d);
  }
  return oracle::sorted_desc(out);
}

Outcome ac4() {
  Outcome o;
  const std::size_t n = 200, n_split = 50;
  for (std::size_t i = 0; i < n + n_split; ++i) {
    Rng rng = rng_for("ac4", i);
    const bool split = i >= n;
    const auto pr = make_padic_ring(rng.coin() ? 2 : 3);
    const auto k1 = static_cast<std::size_t>(rng.uniform(1, 2));
    const auto k2 = static_cast<std::size_t>(rng.uniform(1, 2));
    const auto a = random_invertible_padic(rng, pr, k1);
    const auto b = random_invertible_padic(rng, pr, k2);
    PadicMatrix x = block_diagonal(a, b);
    if (!split) {
      const auto c = random_padic_matrix(rng, pr, k1, k2);
      for (std::size_t r = 0; r < k1; ++r)
        for (std::size_t s = 0; s < k2; ++s) x(r, k1 + s) = c(r, s);
    } else {
      x = random_unimodular_padic(rng, pr, k1 + k2) * x * random_unimodular_padic(rng, pr, k1 + k2);
    }
    const auto i1 = torsion_inv(a), i3 = torsion_inv(b), i2 = torsion_inv(x);
    const auto o1 = oracle_inv(a), o3 = oracle_inv(b), o2 = oracle_inv(x);
    const std::string tag = x.str();
    o.check(i1.entries() == o1 && i3.entries() == o3 && i2.entries() == o2, "inv vs minors: " + tag);
    std::vector<Rational> upper(std::max(o1.size(), o3.size()), Rational(0));
    for (std::size_t j = 0; j < o1.size(); ++j) upper[j] += o1[j];
    for (std::size_t j = 0; j < o3.size(); ++j) upper[j] += o3[j];
    const auto lower = concat_sorted(o1, o3);
    const bool lo = oracle_dominated(lower, o2), up = oracle_dominated(o2, upper);
    const auto rep = exact_seq_bounds(i1, i3, i2);
    o.check(lo && up && rep.lower_ok && rep.upper_ok && rep.length_additive, "bounds: " + tag);
    if (split) o.check(rep.split_equal && o2 == lower, "split: " + tag);
  }
  o.detail = std::to_string(n) + " block-triangular + " + std::to_string(n_split) + " split, p in {2,3}";
  return o;
}

// ---- 5 ----------------------------------------------------------------------

Outcome ac5() {
  Outcome o;
  std::size_t count = 0;
  for (long a = 1; a <= 3; ++a) {
    std::vector<std::vector<long>> mods{{a}};
    for (long b = 1; b <= a; ++b) {
      mods.push_back({a, b});
      for (long c = 1; c <= b; ++c) mods.push_back({a, b, c});
    }
    for (const auto& ks : mods) {
      ++count;
      std::vector<Rational> e(ks.begin(), ks.end());
      const PlusInfType inv(e);
      for (std::size_t r = 1; r <= 2; ++r) {
        std::string tag = "k=(";
        for (long k : ks) tag += std::to_string(k) + ",";
        tag += ") r=" + std::to_string(r);
        o.check(Rational(oracle::max_generated_length(ks, r)) == inv.partial_sum(r), tag);
      }
    }
  }
  o.detail = std::to_string(count) + " modules (+)Z/2^k, k<=3, rank<=3, r in {1,2}, exhaustive";
  return o;
}

// ---- 6 ----------------------------------------------------------------------

std::vector<std::vector<Rational>> rational_entries(const PadicMatrix& x) {
  std::vector<std::vector<Rational>> out(x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) out[i].push_back(x(i, j).value());
  return out;
}

Outcome ac6() {
  Outcome o;
  const std::size_t n = 500;
  std::size_t diagonal = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng = rng_for("ac6", i);
    const unsigned long p = rng.coin() ? 2 : 3;
    const auto pr = make_padic_ring(p);
    const auto r = static_cast<std::size_t>(rng.uniform(1, 4));
    const bool diag = i % 5 == 0;
    PadicMatrix x = random_invertible_padic(rng, pr, r);
    if (diag) {
      ++diagonal;
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) {
          x(a, b) = a == b ? PadicNumber::uniformizer_power(pr, Rational(rng.uniform(0, 3))) *
                                 PadicNumber::from_int(pr, rng.coin() ? 1 : -1)
                           : PadicNumber::zero(pr);
        }
    }
    const CrystalLattice lat(x);
    const auto newton = oracle::newton_from_charpoly(oracle::faddeev_leverrier(rational_entries(x)), p);
    const auto hodge = oracle::elementary_type(x);
    const std::string tag = "p=" + std::to_string(p) + " " + x.str();
    o.check(newton_type(lat) == newton, "newton vs Faddeev-LeVerrier: " + tag);
    o.check(hodge_type_crystal(lat) == hodge, "hodge vs minors: " + tag);
    const auto iota = involution(newton);
    o.check(oracle_dominated(iota.entries(), hodge.entries()), "oracle inequality: " + tag);
    const auto res = mazur_check(lat);
    o.check(res != MazurResult::Violation, "violation: " + tag);
    if (diag) o.check(res == MazurResult::HoldsWithEquality && iota == hodge, "diagonal equality: " + tag);
  }
  o.detail = std::to_string(n) + " lattices (" + std::to_string(diagonal) + " diagonal), rank<=4, p in {2,3}";
  return o;
}

// ---- 7 ----------------------------------------------------------------------

Outcome ac7() {
  Outcome o;
  const auto fixtures = monomial_fixtures(3);
  for (const auto& f : fixtures) {
    const auto tf = fargues_type(f.module, f.trivialization).type;
    const auto th = hodge_type(f.module);
    o.check(dominated_by(tf, th) && tf.deg() == th.deg(), f.name + ": t_F<=t_H");
    o.check(oracle_dominated(tf.entries(), oracle::elementary_type(f.module.phi()).entries()), f.name + ": oracle t_H");
    const auto cloud = oracle::fixture_cloud(f.module, f.trivialization.vectors);
    o.check(tf == oracle::cloud_hn_type(cloud), f.name + ": t_F vs subspace oracle");
  }
  const auto diag = monomial_fixture(2, {0, 1}, {0, 1});
  const auto t = fargues_type(diag.module, diag.trivialization).type;
  const auto cloud_t = oracle::cloud_hn_type(oracle::fixture_cloud(diag.module, diag.trivialization.vectors));
  o.check(t == SlopeVector{1, 0} && cloud_t == SlopeVector{1, 0}, "diag(1, t^-1), q=2: t_F=" + t.str());
  o.detail = std::to_string(fixtures.size()) + " monomial fixtures, rank<=3, q in {2,3}; diag(1,t^-1) -> " + t.str();
  return o;
}

// ---- 8 ----------------------------------------------------------------------

Outcome ac8() {
  Outcome o;
  const auto fixtures = monomial_fixtures(3);
  std::size_t checks = 0;
  for (const auto& f : fixtures) {
    const auto tf = fargues_type(f.module, f.trivialization).type;
    const auto th = hodge_type(f.module);
    for (long n = -2; n <= 2; ++n) {
      const std::string tag = f.name + " n=" + std::to_string(n);
      const auto m = twist(f.module, n);
      const auto tr = twist(f.trivialization, f.module, n);
      o.check(hodge_type(m) == twist_shift(th, Rational(n)), tag + ": t_H");
      o.check(fargues_type(m, tr).type == twist_shift(tf, Rational(n)), tag + ": t_F");
      o.check(oracle::cloud_hn_type(oracle::fixture_cloud(m, tr.vectors)) == twist_shift(tf, Rational(n)),
              tag + ": t_F oracle");
      checks += 3;
    }
  }
  for (std::size_t i = 0; i < 100; ++i) {
    Rng rng = rng_for("ac8", i);
    const Isocrystal d(random_invertible_padic(rng, make_padic_ring(rng.coin() ? 2 : 3),
                                               static_cast<std::size_t>(rng.uniform(1, 3)), -1, 2));
    const HTModule h(random_invertible_xi(rng, make_xi_ring(), static_cast<std::size_t>(rng.uniform(1, 3))));
    for (long n = -2; n <= 2; ++n) {
      const Rational nr(n);
      const auto dn = slope_twist(d, n);
      const std::string tag = d.phi().str() + " n=" + std::to_string(n);
      o.check(newton_type(dn) == twist_shift(newton_type(d), -nr), tag + ": t_N");
      o.check(newton_iota_type(dn) == twist_shift(newton_iota_type(d), nr), tag + ": t_N^iota");
      o.check(hodge_type_crystal(dn) == twist_shift(hodge_type_crystal(d), nr), tag + ": crystal t_H");
      o.check(ht_hodge_type(slope_twist(h, n)) == twist_shift(ht_hodge_type(h), nr), h.xi().str() + ": HT t_H");
      checks += 4;
    }
  }
  o.detail = std::to_string(checks) + " identities, n in -2..2 (fixtures + 100 crystals + 100 HT modules)";
  return o;
}

// ---- 9 ----------------------------------------------------------------------

Outcome ac9() {
  Outcome o;
  const std::size_t n = 100;
  std::size_t admissible = 0, tied = 0, no_chain = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng = rng_for("ac9", i);
    const auto p = random_subspace_poset(rng);
    const auto brute = oracle::brute_hn(p);
    tied += brute.status == oracle::HNStatus::Tied;
    no_chain += brute.status == oracle::HNStatus::NoChain;
    std::optional<GammaFiltration> hn;
    try {
      hn = hn_filtration(p);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotAdmissible) throw;
    }
    const std::string tag = "poset #" + std::to_string(i);
    o.check(hn.has_value() == (brute.status == oracle::HNStatus::Unique), tag + ": admissibility");
    if (!hn) continue;
    ++admissible;
    const auto t = filtration_type(*hn, p);
    o.check(t == brute.type && hn->chain == brute.chain, tag + ": envelope");
    for (const auto& other : oracle::all_filtration_types(p)) {
      o.check(oracle_dominated(other.entries(), t.entries()), tag + ": " + other.str() + " vs " + t.str());
    }
  }
  o.detail = std::to_string(n) + " posets of F_2^3 subspaces, " + std::to_string(admissible) + " admissible, " +
             std::to_string(tied) + " tied, " + std::to_string(no_chain) + " non-chain realizers";
  return o;
}

// ---- 10 ---------------------------------------------------------------------

Outcome ac10() {
  Outcome o;
  const std::size_t n = 100;
  const std::vector<HahnRing> hahn{make_hahn_ring(FiniteField::prime(2)), make_hahn_ring(FiniteField::prime(3)),
                                   make_hahn_ring(FiniteField::make(2, {1, 1, 1}))};
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng = rng_for("ac10", i);
    const auto hr = rng.pick(hahn);
    const PhiModule m1(random_invertible_hahn(rng, hr, static_cast<std::size_t>(rng.uniform(1, 3)), -1, 2), hr->field->p());
    const PhiModule m2(random_invertible_hahn(rng, hr, static_cast<std::size_t>(rng.uniform(1, 3)), -1, 2), hr->field->p());
    o.check(hodge_type(tensor(m1, m2)) == tensor_type(hodge_type(m1), hodge_type(m2)), "hahn: " + m1.phi().str() + m2.phi().str());
    const auto pr = make_padic_ring(rng.coin() ? 2 : 3);
    const Isocrystal d1(random_invertible_padic(rng, pr, static_cast<std::size_t>(rng.uniform(1, 3)), -1, 2));
    const Isocrystal d2(random_invertible_padic(rng, pr, static_cast<std::size_t>(rng.uniform(1, 3)), -1, 2));
    const auto nt = newton_type(tensor(d1, d2));
    const auto oracle_nt =
        oracle::newton_from_charpoly(oracle::faddeev_leverrier(rational_entries(kronecker(d1.phi(), d2.phi()))), pr->p);
    o.check(nt == tensor_type(newton_type(d1), newton_type(d2)) && nt == oracle_nt,
            "padic: " + d1.phi().str() + d2.phi().str());
  }
  o.detail = std::to_string(n) + " Hahn pairs + " + std::to_string(n) + " p-adic pairs, rank<=3";
  return o;
}

// ---- 11 ---------------------------------------------------------------------

Outcome ac11() {
  Outcome o;
  const std::size_t n_seq = 200;
  const std::vector<long> ns{1, 2, 3, 4, 6, 8, 12};
  for (std::size_t i = 0; i < n_seq; ++i) {
    Rng rng = rng_for("ac11", i);
    const auto f = random_slope_vector(rng, 3, -3, 3);
    // h dominates f: move mass from the last entry to an earlier one
    std::vector<Rational> he = f.entries();
    if (he.size() >= 2) {
      const Rational delta(rng.uniform(0, 4), 2);
      he[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(he.size()) - 2))] += delta;
      he.back() -= delta;
    }
    const auto h = SlopeVector::from_multiset(he);
    std::vector<std::pair<long, ConcavePolygon>> seq;
    std::map<long, std::vector<Rational>> raw;
    for (long n : ns) {
      std::vector<Rational> g = h.entries();
      for (long k = 1; k < n; ++k) g = concat_sorted(g, f.entries());
      raw[n] = g;
      SlopeVector sg(g);
      seq.emplace_back(n, rescale(sg, n));
    }
    const std::string tag = "f=" + f.str() + " h=" + h.str();
    o.check(limit_envelope(seq).violations.empty(), tag + ": limit_envelope");
    // p_n(s) = f_n(n s)/n on [0, len f]; compare on the 1/24 grid, which contains every breakpoint
    const long len = static_cast<long>(f.size());
    for (long n : ns) {
      for (long m : ns) {
        if (m <= n || m % n != 0) continue;
        for (long j = 0; j <= 24 * len; ++j) {
          const Rational s(j, 24);
          const Rational pn = oracle::eval(raw[n], Rational(n) * s) / Rational(n);
          const Rational pm = oracle::eval(raw[m], Rational(m) * s) / Rational(m);
          o.check(pm <= pn, tag + " n=" + std::to_string(n) + " m=" + std::to_string(m) + " s=" + s.str());
        }
      }
    }
  }
  o.detail = std::to_string(n_seq) + " sequences, n in {1,2,3,4,6,8,12}, zero violations required";
  return o;
}

// ---- 12 ---------------------------------------------------------------------

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

Outcome ac12(const std::string& cli, const std::filesystem::path& golden) {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / ("hnslope_acc_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const std::string plot_args = "plot 'Hodge=[1,0,-1]' 'Newton=[1/2,1/2,-1]' 'P={3/2:1, -1/2:2}'";
  const std::string check_args = "check --seed 42";
  struct Job {
    std::string args, golden;
  };
  for (const Job& job : {Job{plot_args, "plot.svg"}, Job{check_args, "check_seed42.json"}}) {
    std::string outs[2];
    for (int run = 0; run < 2; ++run) {
      const auto out = dir / ("run" + std::to_string(run));
      const std::string cmd = "'" + cli + "' --out '" + out.string() + "' " + job.args;
      const int rc = std::system(cmd.c_str());
      o.check(rc == 0, job.args + ": exit status " + std::to_string(rc));
      outs[run] = slurp(out);
    }
    o.check(!outs[0].empty() && outs[0] == outs[1], job.args + ": runs differ");
    o.check(outs[0] == slurp(golden / job.golden), job.args + ": differs from golden " + job.golden);
  }
  std::filesystem::remove_all(dir);
  o.detail = "plot and check --seed 42, two runs each, byte-identical to goldens";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <hnslope-cli> <golden-dir>\n";
    return 2;
  }
  struct Criterion {
    const char* id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::string cli = argv[1];
  const std::filesystem::path golden = argv[2];
  const std::vector<Criterion> criteria{
      {"AC1", "polygon laws", ac1},
      {"AC2", "SNF = minimal minors", ac2},
      {"AC3", "triangle inequality", ac3},
      {"AC4", "torsion exact-sequence bounds", ac4},
      {"AC5", "max-length formula", ac5},
      {"AC6", "Mazur inequality", ac6},
      {"AC7", "Fargues vs Hodge", ac7},
      {"AC8", "twist identities", ac8},
      {"AC9", "HN engine vs brute force", ac9},
      {"AC10", "tensor compatibility", ac10},
      {"AC11", "t_F,n monotonicity", ac11},
      {"AC12", "CLI determinism", [&] { return ac12(cli, golden); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.first_failure = std::string("exception: ") + e.what();
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "PASS " : "FAIL ") << c.id << " " << c.name << ": " << o.detail
              << "; exact, tolerance 0 (" << ms << " ms)";
    if (!o.pass) std::cout << " -- first failure: " << o.first_failure;
    std::cout << std::endl;
    failed += !o.pass;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << criteria.size() - static_cast<std::size_t>(failed) << "/"
            << criteria.size() << std::endl;
  return failed ? 1 : 0;
}
