#include "hnslope/check_suite.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "hnslope/error.hpp"
#include "hnslope/generators.hpp"
#include "hnslope/hn_engine.hpp"
#include "hnslope/lattice.hpp"
#include "hnslope/phimod.hpp"
#include "hnslope/polygon.hpp"
#include "hnslope/slopes.hpp"
#include "json.hpp"

namespace hnslope {

namespace {

struct Case {
  std::uint64_t seed;
  Rng rng;
  std::vector<CheckFailure>& out;
  bool break_oracle;

  void expect(bool ok, const std::string& input, const std::string& expected, const std::string& got) {
    if (!ok) out.push_back({seed, input, expected, got});
  }
  template <class T>
  void expect_eq(const T& got, const T& expected, const std::string& input) {
    expect(got == expected, input, expected.str(), got.str());
  }
};

std::string valuations_str(const std::vector<Valuation>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].str();
  return out + "]";
}

// ---- polygons -------------------------------------------------------------

// max over s1 + s2 = s of f(s1) + g(s2); the maximum of a concave function on an
// interval is attained at an endpoint or a breakpoint of either summand.
Rational sup_convolution(const SlopeVector& f, const SlopeVector& g, const Rational& s) {
  const Rational nf(static_cast<long>(f.size())), ng(static_cast<long>(g.size()));
  const Rational lo = max(Rational(0), s - ng), hi = min(s, nf);
  std::vector<Rational> cand{lo, hi};
  for (long k = 0; k <= static_cast<long>(f.size() + g.size()); ++k) {
    cand.emplace_back(k);
    cand.push_back(s - Rational(k));
  }
  std::optional<Rational> best;
  for (const auto& s1 : cand) {
    if (s1 < lo || s1 > hi) continue;
    const Rational v = eval(f, s1) + eval(g, s - s1);
    if (!best || v > *best) best = v;
  }
  return *best;
}

void polygon_laws(Case& c, std::size_t) {
  const auto f = random_slope_vector(c.rng, 6, -5, 5, true);
  const auto g = random_slope_vector(c.rng, 6, -5, 5, true);
  const auto h = random_slope_vector(c.rng, 6, -5, 5, true);
  const std::string in = "f=" + f.str() + " g=" + g.str() + " h=" + h.str();
  c.expect_eq(convex_sum(f, g), convex_sum(g, f), in + " (commutativity)");
  c.expect_eq(convex_sum(convex_sum(f, g), h), convex_sum(f, convex_sum(g, h)), in + " (associativity)");
  c.expect_eq(convex_sum(f, SlopeVector()), f, in + " (neutral)");
  c.expect_eq(involution(involution(f)), f, in + " (involution)");
  const auto fg = convex_sum(f, g);
  for (long k = 0; k <= 2 * static_cast<long>(fg.size()); ++k) {
    const Rational s(k, 2);
    Rational expected = sup_convolution(f, g, s);
    if (c.break_oracle) expected += Rational(1);
    const Rational got = eval(fg, s);
    c.expect(got == expected, in + " s=" + s.str(), expected.str(), got.str());
  }
}

// ---- lattices -------------------------------------------------------------

template <class R>
void check_snf_minors(Case& c, const Matrix<R>& x) {
  const auto s = snf(x);
  Valuation partial(0);
  const std::size_t k_max = std::min(x.rows(), x.cols());
  std::vector<Valuation> sums, minors;
  for (std::size_t k = 1; k <= k_max; ++k) {
    partial = partial + s.valuations[k - 1];
    sums.push_back(partial);
    minors.push_back(minors_min_valuation(x, k));
  }
  c.expect(sums == minors, x.str(), valuations_str(minors), valuations_str(sums));
}

HahnRing random_hahn_ring(Rng& rng) {
  static const std::vector<HahnRing> rings{make_hahn_ring(FiniteField::prime(2)), make_hahn_ring(FiniteField::prime(3)),
                                           make_hahn_ring(FiniteField::make(2, {1, 1, 1}))};
  return rng.pick(rings);
}

void snf_minors(Case& c, std::size_t index) {
  const auto rows = static_cast<std::size_t>(c.rng.uniform(1, 4));
  const auto cols = static_cast<std::size_t>(c.rng.uniform(1, 4));
  switch (index % 3) {
    case 0:
      check_snf_minors(c, random_padic_matrix(c.rng, make_padic_ring(c.rng.coin() ? 2 : 3), rows, cols));
      break;
    case 1:
      check_snf_minors(c, random_hahn_matrix(c.rng, random_hahn_ring(c.rng), rows, cols));
      break;
    default:
      check_snf_minors(c, random_xi_matrix(c.rng, make_xi_ring(), rows, cols));
  }
}

template <class M>
void check_triangle(Case& c, const M& x, const M& y) {
  const auto dxy = lattice_distance(x * y);
  const auto bound = entrywise_sum(lattice_distance(x), lattice_distance(y));
  c.expect(dominated_by(dxy, bound), "X=\n" + x.str() + "Y=\n" + y.str(), "<= " + bound.str(), dxy.str());
}

void triangle_inequality(Case& c, std::size_t index) {
  const auto n = static_cast<std::size_t>(c.rng.uniform(1, 4));
  switch (index % 3) {
    case 0: {
      const auto r = make_padic_ring(c.rng.coin() ? 2 : 3);
      check_triangle(c, random_invertible_padic(c.rng, r, n, -1, 2), random_invertible_padic(c.rng, r, n, -1, 2));
      break;
    }
    case 1: {
      const auto r = random_hahn_ring(c.rng);
      check_triangle(c, random_invertible_hahn(c.rng, r, n, -2, 3), random_invertible_hahn(c.rng, r, n, -2, 3));
      break;
    }
    default: {
      const auto r = make_xi_ring();
      check_triangle(c, random_invertible_xi(c.rng, r, n), random_invertible_xi(c.rng, r, n));
    }
  }
}

PadicMatrix block_upper(const PadicMatrix& a, const PadicMatrix& cmat, const PadicMatrix& b) {
  PadicMatrix x = block_diagonal(a, b);
  for (std::size_t i = 0; i < cmat.rows(); ++i) {
    for (std::size_t j = 0; j < cmat.cols(); ++j) x(i, a.cols() + j) = cmat(i, j);
  }
  return x;
}

void torsion_exact_sequence(Case& c, std::size_t index) {
  const auto r = make_padic_ring(c.rng.coin() ? 2 : 3);
  const auto k1 = static_cast<std::size_t>(c.rng.uniform(1, 2));
  const auto k2 = static_cast<std::size_t>(c.rng.uniform(1, 2));
  const auto a = random_invertible_padic(c.rng, r, k1);
  const auto b = random_invertible_padic(c.rng, r, k2);
  const bool split = index % 4 == 0;
  const auto cm = split ? PadicMatrix(r, k1, k2) : random_padic_matrix(c.rng, r, k1, k2);
  PadicMatrix x = block_upper(a, cm, b);
  if (split) x = random_unimodular_padic(c.rng, r, k1 + k2) * x * random_unimodular_padic(c.rng, r, k1 + k2);
  const auto i1 = torsion_inv(a), i3 = torsion_inv(b), i2 = torsion_inv(x);
  const auto rep = exact_seq_bounds(i1, i3, i2);
  const std::string in = "sub=" + i1.str() + " quot=" + i3.str() + " middle=" + i2.str();
  c.expect(rep.length_additive && rep.lower_ok && rep.upper_ok, in, "bounds hold",
           std::string(rep.lower_ok ? "" : "lower fails ") + (rep.upper_ok ? "" : "upper fails ") +
               (rep.length_additive ? "" : "length not additive"));
  if (split) c.expect(rep.split_equal, in, "split_equal", "not equal");
}

// ⊕ O/2^{k_i}: brute-force the longest submodule generated by r elements.
void max_length(Case& c, std::size_t index) {
  std::vector<std::vector<long>> modules;
  for (long a = 1; a <= 3; ++a) {
    modules.push_back({a});
    for (long b = 1; b <= a; ++b) {
      modules.push_back({a, b});
      for (long d = 1; d <= b; ++d) modules.push_back({a, b, d});
    }
  }
  const auto& ks = modules[index % modules.size()];
  std::vector<long> mods;
  for (long k : ks) mods.push_back(1L << k);
  // Elements encoded as digit vectors in mixed radix.
  long total = 1;
  for (long m : mods) total *= m;
  auto decode = [&](long code) {
    std::vector<long> v;
    for (long m : mods) {
      v.push_back(code % m);
      code /= m;
    }
    return v;
  };
  auto encode = [&](const std::vector<long>& v) {
    long code = 0, w = 1;
    for (std::size_t i = 0; i < mods.size(); ++i) {
      code += (((v[i] % mods[i]) + mods[i]) % mods[i]) * w;
      w *= mods[i];
    }
    return code;
  };
  auto log2_size = [](std::size_t n) { return static_cast<long>(__builtin_ctzll(n)); };
  // Elements sorted by decreasing order, so pairs whose orders cannot beat the best stop the scan.
  std::vector<std::pair<long, long>> by_order;
  for (long x = 0; x < total; ++x) {
    const auto v = decode(x);
    long ord = 1;
    for (std::size_t i = 0; i < mods.size(); ++i) {
      long o = mods[i];
      for (long e = v[i]; e % 2 == 0 && o > 1; e /= 2) o /= 2;
      if (v[i] == 0) o = 1;
      ord = std::max(ord, o);
    }
    by_order.emplace_back(ord, x);
  }
  std::sort(by_order.begin(), by_order.end(), std::greater<>());
  for (std::size_t r = 1; r <= 2; ++r) {
    long best = 0;
    for (std::size_t ix = 0; ix < by_order.size(); ++ix) {
      const auto [ox, x] = by_order[ix];
      if (log2_size(static_cast<std::size_t>(ox)) * static_cast<long>(r) <= best) break;
      const auto vx = decode(x);
      const std::size_t ylimit = r == 1 ? 1 : by_order.size();
      for (std::size_t iy = r == 1 ? 0 : ix; iy < ylimit; ++iy) {
        const auto [oy, y] = r == 1 ? std::pair<long, long>{1, 0} : by_order[iy];
        if (log2_size(static_cast<std::size_t>(ox)) + log2_size(static_cast<std::size_t>(oy)) <= best) break;
        const auto vy = decode(y);
        std::set<long> span;
        for (long s = 0; s < ox; ++s) {
          for (long t = 0; t < oy; ++t) {
            std::vector<long> z(mods.size());
            for (std::size_t i = 0; i < mods.size(); ++i) z[i] = s * vx[i] + t * vy[i];
            span.insert(encode(z));
          }
        }
        best = std::max(best, log2_size(span.size()));
      }
    }
    std::vector<Rational> entries;
    for (long k : ks) entries.emplace_back(k);
    const PlusInfType inv(entries);
    const Rational expected = inv.partial_sum(r);
    std::string in = "k=[";
    for (std::size_t i = 0; i < ks.size(); ++i) in += (i ? "," : "") + std::to_string(ks[i]);
    in += "] r=" + std::to_string(r);
    c.expect(Rational(best) == expected, in, expected.str(), std::to_string(best));
  }
}

// ---- slopes ---------------------------------------------------------------

void mazur(Case& c, std::size_t index) {
  const auto r = make_padic_ring(c.rng.coin() ? 2 : 3);
  const auto n = static_cast<std::size_t>(c.rng.uniform(1, 4));
  const bool diagonal = index % 5 == 0;
  PadicMatrix x = random_invertible_padic(c.rng, r, n);
  if (diagonal) {
    std::vector<PadicNumber> d;
    for (std::size_t i = 0; i < n; ++i) {
      d.push_back(PadicNumber::uniformizer_power(r, Rational(c.rng.uniform(0, 3))) *
                  PadicNumber::from_int(r, c.rng.coin() ? 1 : -1));
    }
    x = PadicMatrix::diagonal(r, d);
  }
  const CrystalLattice lat(x);
  const auto res = mazur_check(lat);
  const std::string in = "p=" + std::to_string(r->p) + "\n" + x.str();
  const std::string got = newton_iota_type(lat).str() + " vs " + hodge_type_crystal(lat).str();
  if (diagonal) {
    c.expect(res == MazurResult::HoldsWithEquality, in, "HoldsWithEquality", got);
  } else {
    c.expect(res != MazurResult::Violation, in, "Holds", got);
  }
}

const std::vector<PhiFixture>& fixtures() {
  static const std::vector<PhiFixture> all = monomial_fixtures(3);
  return all;
}

void fargues_hodge(Case& c, std::size_t index) {
  const auto& f = fixtures()[index % fixtures().size()];
  const auto tf = fargues_type(f.module, f.trivialization).type;
  const auto th = hodge_type(f.module);
  c.expect(dominated_by(tf, th), f.name, "t_F <= " + th.str(), tf.str());
}

void twist_identities(Case& c, std::size_t index) {
  const long n = c.rng.uniform(-2, 2);
  const Rational nr(n);
  const auto& f = fixtures()[index % fixtures().size()];
  const std::string tag = f.name + " n=" + std::to_string(n);
  const auto tw = twist(f.module, n);
  c.expect_eq(hodge_type(tw), twist_shift(hodge_type(f.module), nr), tag + " (t_H)");
  c.expect_eq(fargues_type(tw, twist(f.trivialization, f.module, n)).type,
              twist_shift(fargues_type(f.module, f.trivialization).type, nr), tag + " (t_F)");
  const Rational dexp = degree_t(f.module) + nr * Rational(static_cast<long>(f.module.rank()));
  const Rational dgot = degree_t(tw);
  c.expect(dgot == dexp, tag + " (deg_t)", dexp.str(), dgot.str());

  const auto r = make_padic_ring(c.rng.coin() ? 2 : 3);
  const Isocrystal d(random_invertible_padic(c.rng, r, static_cast<std::size_t>(c.rng.uniform(1, 3))));
  const auto dn = slope_twist(d, n);
  const std::string din = d.phi().str() + " n=" + std::to_string(n);
  c.expect_eq(newton_type(dn), twist_shift(newton_type(d), -nr), din + " (t_N)");
  c.expect_eq(newton_iota_type(dn), twist_shift(newton_iota_type(d), nr), din + " (t_N^iota)");
  c.expect_eq(hodge_type_crystal(dn), twist_shift(hodge_type_crystal(d), nr), din + " (t_H crystal)");

  const HTModule h(random_invertible_xi(c.rng, make_xi_ring(), static_cast<std::size_t>(c.rng.uniform(1, 3))));
  c.expect_eq(ht_hodge_type(slope_twist(h, n)), twist_shift(ht_hodge_type(h), nr), h.xi().str() + " (t_H ht)");
}

// Chains bottom < c_1 < ... < top with strictly decreasing slopes.
void for_each_filtration(const RankedPoset& p, const std::function<void(const GammaFiltration&)>& fn) {
  GammaFiltration cur{{p.bottom()}, {}};
  std::function<void()> rec = [&] {
    const std::size_t last = cur.chain.back();
    for (std::size_t next = 0; next < p.size(); ++next) {
      if (!p.less(last, next)) continue;
      const auto& a = p.element(last);
      const auto& b = p.element(next);
      const Rational slope = (b.deg - a.deg) / Rational(b.rank - a.rank);
      if (!cur.jumps.empty() && !(slope < cur.jumps.back())) continue;
      cur.chain.push_back(next);
      cur.jumps.push_back(slope);
      if (next == p.top()) fn(cur);
      else rec();
      cur.chain.pop_back();
      cur.jumps.pop_back();
    }
  };
  rec();
}

void hn_engine(Case& c, std::size_t) {
  const auto p = random_subspace_poset(c.rng);
  GammaFiltration hn;
  try {
    hn = hn_filtration(p);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotAdmissible) return;
    throw;
  }
  const auto top_type = filtration_type(hn, p);
  for_each_filtration(p, [&](const GammaFiltration& f) {
    const auto t = filtration_type(f, p);
    c.expect(dominated_by(t, top_type), p.str(), "<= " + top_type.str(), t.str());
  });
}

void tensor_compatibility(Case& c, std::size_t) {
  const auto hr = random_hahn_ring(c.rng);
  const unsigned long q = hr->field->p();
  const auto n1 = static_cast<std::size_t>(c.rng.uniform(1, 3));
  const auto n2 = static_cast<std::size_t>(c.rng.uniform(1, 3));
  const PhiModule m1(random_invertible_hahn(c.rng, hr, n1, -1, 2), q);
  const PhiModule m2(random_invertible_hahn(c.rng, hr, n2, -1, 2), q);
  c.expect_eq(hodge_type(tensor(m1, m2)), tensor_type(hodge_type(m1), hodge_type(m2)),
              "M1=\n" + m1.phi().str() + "M2=\n" + m2.phi().str());

  const auto pr = make_padic_ring(c.rng.coin() ? 2 : 3);
  const Isocrystal d1(random_invertible_padic(c.rng, pr, static_cast<std::size_t>(c.rng.uniform(1, 3)), -1, 2));
  const Isocrystal d2(random_invertible_padic(c.rng, pr, static_cast<std::size_t>(c.rng.uniform(1, 3)), -1, 2));
  c.expect_eq(newton_type(tensor(d1, d2)), tensor_type(newton_type(d1), newton_type(d2)),
              "D1=\n" + d1.phi().str() + "D2=\n" + d2.phi().str());
}

// p_n = rescale(f^{∗(n−1)} ∗ h, n) with f ≤ h; these satisfy p_{nk} <= p_n.
void envelope_monotonicity(Case& c, std::size_t) {
  const auto f = random_slope_vector(c.rng, 3, -3, 3);
  std::vector<Rational> he = f.entries();
  if (he.size() >= 2) {
    const auto i = static_cast<std::size_t>(c.rng.uniform(0, static_cast<long>(he.size()) - 2));
    const Rational delta(c.rng.uniform(0, 4), 2);
    he[i] += delta;
    he.back() -= delta;
  }
  const auto h = SlopeVector::from_multiset(he);
  std::vector<std::pair<long, ConcavePolygon>> seq;
  for (long n : {1L, 2L, 3L, 4L, 6L, 8L, 12L}) {
    SlopeVector g = h;
    for (long k = 1; k < n; ++k) g = convex_sum(g, f);
    seq.emplace_back(n, rescale(g, n));
  }
  const auto rep = limit_envelope(seq);
  c.expect(rep.violations.empty(), "f=" + f.str() + " h=" + h.str(), "no violations",
           std::to_string(rep.violations.size()) + " violations");
}

struct SuiteDef {
  const char* name;
  std::size_t default_cases;
  void (*fn)(Case&, std::size_t);
};

const std::vector<SuiteDef>& suites() {
  static const std::vector<SuiteDef> all{
      {"polygon_laws", 50, polygon_laws},
      {"snf_minors", 30, snf_minors},
      {"triangle_inequality", 30, triangle_inequality},
      {"torsion_exact_sequence", 30, torsion_exact_sequence},
      {"max_length", 19, max_length},
      {"mazur", 50, mazur},
      {"fargues_hodge", 124, fargues_hodge},
      {"twist_identities", 124, twist_identities},
      {"hn_engine", 20, hn_engine},
      {"tensor_compatibility", 10, tensor_compatibility},
      {"envelope_monotonicity", 30, envelope_monotonicity},
  };
  return all;
}

}  // namespace

const std::vector<std::string>& check_suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : suites()) out.emplace_back(s.name);
    return out;
  }();
  return names;
}

std::vector<SuiteReport> run_check_suite(const CheckConfig& config) {
  for (const auto& name : config.suites) {
    const auto& names = check_suite_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      fail(ErrorKind::InvalidArgument, "unknown suite '" + name + "'");
    }
  }
  std::vector<SuiteReport> reports;
  for (const auto& def : suites()) {
    if (!config.suites.empty() &&
        std::find(config.suites.begin(), config.suites.end(), def.name) == config.suites.end()) {
      continue;
    }
    SuiteReport rep{def.name, config.cases.value_or(def.default_cases), {}};
    for (std::size_t i = 0; i < rep.cases; ++i) {
      const std::uint64_t seed = case_seed(config.seed, def.name, i);
      Case c{seed, Rng(seed), rep.failures, config.break_oracle};
      try {
        def.fn(c, i);
      } catch (const Error& e) {
        rep.failures.push_back({seed, "case " + std::to_string(i), "no error", e.what()});
      }
    }
    reports.push_back(std::move(rep));
  }
  return reports;
}

std::string report_json(const CheckConfig& config, const std::vector<SuiteReport>& reports) {
  nlohmann::ordered_json doc;
  doc["seed"] = config.seed;
  doc["suites"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json s;
    s["suite"] = r.suite;
    s["cases"] = r.cases;
    s["failures"] = nlohmann::ordered_json::array();
    for (const auto& f : r.failures) {
      s["failures"].push_back({{"seed", f.seed}, {"input", f.input}, {"expected", f.expected}, {"got", f.got}});
    }
    doc["suites"].push_back(std::move(s));
  }
  return doc.dump(2) + "\n";
}

}  // namespace hnslope
