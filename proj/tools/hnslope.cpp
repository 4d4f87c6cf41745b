// hnslope: command-line front end.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hnslope/check_suite.hpp"
#include "hnslope/error.hpp"
#include "hnslope/hn_engine.hpp"
#include "hnslope/lattice.hpp"
#include "hnslope/phimod.hpp"
#include "hnslope/polygon.hpp"
#include "hnslope/slopes.hpp"
#include "hnslope/svg.hpp"
#include "hnslope/text_format.hpp"

using namespace hnslope;

namespace {

struct Globals {
  std::uint64_t seed = 42;
  std::string prec;
  std::string out;
  bool verbose = false;

  std::optional<Rational> precision() const {
    if (prec.empty()) return std::nullopt;
    return Rational::parse(prec);
  }
};

Globals g;

std::ostream& output() {
  static std::ofstream file;
  if (g.out.empty()) return std::cout;
  if (!file.is_open()) {
    file.open(g.out, std::ios::binary);
    if (!file) fail(ErrorKind::IoError, "cannot open " + g.out + " for writing");
  }
  return file;
}

std::string valuations_str(const std::vector<Valuation>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].str();
  return out + "]";
}

Document load(const std::string& path) { return Document::parse(read_file(path)); }

// The matrix under `matrix=`, or `phi=` for φ-module files.
template <class Fn>
void with_matrix(const Document& doc, Fn&& fn) {
  const std::string key = doc.block("matrix") ? "matrix" : "phi";
  const auto ring = read_ring(doc, g.precision());
  if (const auto* r = std::get_if<HahnRing>(&ring)) fn(read_matrix<HahnSeries>(doc, *r, key));
  else if (const auto* r = std::get_if<PadicRing>(&ring)) fn(read_matrix<PadicNumber>(doc, *r, key));
  else fn(read_matrix<XiSeries>(doc, std::get<XiRing>(ring), key));
}

// ---- poly -----------------------------------------------------------------

int cmd_poly(const std::vector<std::string>& args) {
  if (args.empty()) fail(ErrorKind::InvalidArgument, "poly: missing operation");
  const std::string& op = args[0];
  auto need = [&](std::size_t n) {
    if (args.size() != n + 1) fail(ErrorKind::InvalidArgument, "poly " + op + ": expected " + std::to_string(n) + " arguments");
  };
  auto sv = [&](std::size_t i) { return SlopeVector::parse(args[i]); };
  auto integer = [&](std::size_t i) {
    const Rational r = Rational::parse(args[i]);
    if (!r.is_integer()) fail(ErrorKind::InvalidArgument, "expected an integer, got " + args[i]);
    return r.numerator().get_si();
  };
  auto& out = output();
  if (op == "sum") {
    need(2);
    out << convex_sum(sv(1), sv(2)).str() << "\n";
  } else if (op == "entrywise") {
    need(2);
    out << entrywise_sum(sv(1), sv(2)).str() << "\n";
  } else if (op == "cmp") {
    need(2);
    out << to_string(dominance_compare(sv(1), sv(2))) << "\n";
  } else if (op == "iota") {
    need(1);
    out << involution(sv(1)).str() << "\n";
  } else if (op == "eval") {
    need(2);
    out << eval(sv(1), Rational::parse(args[2])).str() << "\n";
  } else if (op == "stats") {
    need(1);
    const auto s = stats(sv(1));
    out << "deg: " << s.deg.str() << "\n";
    out << "max: " << (s.max ? s.max->str() : "none") << "\n";
    out << "min: " << (s.min ? s.min->str() : "none") << "\n";
  } else if (op == "tensor") {
    need(2);
    out << tensor_type(sv(1), sv(2)).str() << "\n";
  } else if (op == "ext" || op == "sym") {
    need(2);
    const auto k = static_cast<std::size_t>(integer(2));
    out << (op == "ext" ? ext_type(sv(1), k) : sym_type(sv(1), k)).str() << "\n";
  } else if (op == "shift") {
    need(2);
    out << twist_shift(sv(1), Rational::parse(args[2])).str() << "\n";
  } else if (op == "rescale") {
    need(2);
    out << rescale(sv(1), integer(2)).str() << "\n";
  } else if (op == "polygon") {
    need(1);
    out << ConcavePolygon::from_type(sv(1)).str() << "\n";
  } else if (op == "inv-sum") {
    need(2);
    out << convex_sum(PlusInfType::parse(args[1]), PlusInfType::parse(args[2])).str() << "\n";
  } else {
    fail(ErrorKind::InvalidArgument, "poly: unknown operation '" + op + "'");
  }
  return 0;
}

// ---- lattices -------------------------------------------------------------

int cmd_snf(const std::string& path) {
  with_matrix(load(path), [](const auto& x) {
    std::vector<std::string> trace;
    const auto r = snf(x, false, g.verbose ? &trace : nullptr);
    for (const auto& line : trace) std::cerr << line << "\n";
    output() << "valuations: " << valuations_str(r.valuations) << "\n" << "rank: " << r.rank << "\n";
  });
  return 0;
}

int cmd_dist(const std::string& path) {
  with_matrix(load(path), [](const auto& x) { output() << lattice_distance(x).str() << "\n"; });
  return 0;
}

int cmd_inv(const std::string& path) {
  with_matrix(load(path), [](const auto& x) {
    const auto inv = torsion_inv(x);
    output() << "inv: " << inv.str() << "\n" << "length: " << inv.length().str() << "\n";
  });
  return 0;
}

int cmd_filt(const std::string& path) {
  with_matrix(load(path), [](const auto& x) {
    const auto f = relative_filtration(x);
    auto& out = output();
    out << "type: " << f.type.str() << "\n";
    for (std::size_t j = 0; j < f.jumps.size(); ++j) {
      out << "F^" << f.jumps[j].str() << ":";
      for (const auto& v : f.bases[j]) {
        out << " (";
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i].str();
        out << ")";
      }
      out << "\n";
    }
  });
  return 0;
}

// ---- slopes ---------------------------------------------------------------

int cmd_hodge(const std::string& path) {
  const auto doc = load(path);
  auto& out = output();
  switch (ring_kind(read_ring(doc, g.precision()))) {
    case RingKind::Hahn: {
      const auto m = read_phi_module(doc, g.precision());
      out << "hodge: " << hodge_type(m).str() << "\n" << "deg: " << degree_t(m).str() << "\n";
      break;
    }
    case RingKind::Padic:
      out << "hodge: " << hodge_type_crystal(read_isocrystal(doc)).str() << "\n";
      break;
    case RingKind::Xi: {
      const auto h = read_ht_module(doc, g.precision());
      out << "hodge: " << ht_hodge_type(h).str() << "\n" << "deg: " << ht_degree(h).str() << "\n";
      break;
    }
  }
  return 0;
}

int cmd_newton(const std::string& path) {
  const auto d = read_isocrystal(load(path));
  if (g.verbose) std::cerr << format_matrix(d.phi());
  output() << "newton: " << newton_type(d).str() << "\n" << "newton_iota: " << newton_iota_type(d).str() << "\n";
  return 0;
}

int cmd_mazur(const std::string& path) {
  const auto d = read_isocrystal(load(path));
  const auto res = mazur_check(d);
  auto& out = output();
  out << "newton_iota: " << newton_iota_type(d).str() << "\n";
  out << "hodge: " << hodge_type_crystal(d).str() << "\n";
  out << "result: " << to_string(res) << "\n";
  return res == MazurResult::Violation ? 1 : 0;
}

int cmd_fargues(const std::string& path) {
  const auto doc = load(path);
  const auto m = read_phi_module(doc, g.precision());
  const auto t = read_trivialization(doc, m);
  if (!t) fail(ErrorKind::SchemaError, "fargues needs a triv= block");
  const auto res = fargues_type(m, *t);
  if (g.verbose) std::cerr << res.poset.str();
  auto& out = output();
  out << "fargues: " << res.type.str() << "\n";
  out << "hodge: " << hodge_type(m).str() << "\n";
  out << "dominated: " << (dominated_by(res.type, hodge_type(m)) ? "yes" : "no") << "\n";
  for (const auto& [gamma, basis] : res.filtration) out << "step " << gamma.str() << ":\n" << format_matrix(basis);
  return 0;
}

int cmd_ht(const std::string& path) {
  const auto doc = load(path);
  const auto h = read_ht_module(doc, g.precision());
  const auto candidates = read_candidates(doc);
  const bool exhaustive = doc.value_or("exhaustive").value_or("false") == "true";
  auto& out = output();
  out << "hodge: " << ht_hodge_type(h).str() << "\n" << "deg: " << ht_degree(h).str() << "\n";
  const auto b = ht_fargues_bound(h, candidates, exhaustive);
  out << "fargues_bound: " << b.type.str() << "\n";
  out << "certified: " << (b.certified ? "yes" : "no") << "\n";
  for (const auto& [w, deg] : b.candidates) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : w) {
      rows.emplace_back();
      for (const auto& e : row) rows.back().push_back(e.str());
    }
    out << "candidate deg " << deg.str() << ":\n" << format_matrix_rows(rows);
  }
  return 0;
}

int cmd_hn(const std::string& path) {
  const auto p = RankedPoset::parse(read_file(path));
  if (g.verbose) {
    for (const auto& e : p.elements()) std::cerr << e.id << " (" << e.rank << ", " << e.deg.str() << ")\n";
    for (const auto& [x, y] : upper_envelope(p)) std::cerr << "vertex (" << x.str() << ", " << y.str() << ")\n";
  }
  const auto f = hn_filtration(p);
  auto& out = output();
  out << "type: " << filtration_type(f, p).str() << "\n";
  out << "chain:";
  for (auto i : f.chain) out << " " << p.element(i).id;
  out << "\n" << "jumps:";
  for (const auto& j : f.jumps) out << " " << j.str();
  out << "\n" << "semistable: " << (semistable(p) ? "yes" : "no") << "\n";
  return 0;
}

int cmd_twist(const std::string& path, long n) {
  const auto doc = load(path);
  auto& out = output();
  switch (ring_kind(read_ring(doc, g.precision()))) {
    case RingKind::Hahn:
      out << format(twist(read_phi_module(doc, g.precision()), n));
      break;
    case RingKind::Padic:
      out << format(slope_twist(read_isocrystal(doc), n));
      break;
    case RingKind::Xi:
      out << format(slope_twist(read_ht_module(doc, g.precision()), n));
      break;
  }
  return 0;
}

// ---- check / plot ---------------------------------------------------------

int cmd_check(CheckConfig config) {
  config.seed = g.seed;
  const auto reports = run_check_suite(config);
  output() << report_json(config, reports);
  for (const auto& r : reports) {
    if (!r.failures.empty()) return 1;
  }
  return 0;
}

// `label=POLY` or `POLY`; POLY is a type `[..]` or a polygon `{slope:width, ..}`.
int cmd_plot(const std::vector<std::string>& args) {
  std::vector<LabeledPolygon> polys;
  for (const auto& a : args) {
    std::string label = "P" + std::to_string(polys.size() + 1), body = a;
    const auto eq = a.find('=');
    if (eq != std::string::npos) {
      label = a.substr(0, eq);
      body = a.substr(eq + 1);
    }
    const auto first = body.find_first_not_of(' ');
    const bool braces = first != std::string::npos && body[first] == '{';
    polys.emplace_back(label, braces ? ConcavePolygon::parse(body) : ConcavePolygon::from_type(SlopeVector::parse(body)));
  }
  if (polys.empty()) fail(ErrorKind::InvalidArgument, "plot: at least one polygon is required");
  output() << plot_polygons(polys);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Slope filtrations, Newton/Hodge types and HN polygons"};
  app.require_subcommand(1);
  app.fallthrough();
  app.allow_extras();
  app.add_option("--seed", g.seed, "seed for `check`");
  app.add_option("--prec", g.prec, "default precision of series rings");
  app.add_option("--out", g.out, "write output to this file");
  app.add_flag("--verbose", g.verbose, "print intermediate steps to stderr");

  std::function<int()> action;
  std::string file;
  auto file_verb = [&](const char* name, const char* help, int (*fn)(const std::string&)) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "input file")->required();
    sub->callback([&, fn] { action = [&, fn] { return fn(file); }; });
  };

  std::vector<std::string> poly_args;
  auto* poly = app.add_subcommand("poly", "type arithmetic: sum, entrywise, cmp, iota, eval, stats, tensor, ext, sym, shift, rescale, polygon, inv-sum");
  // Raw tokens: CLI11 would split bracketed values like [1,0] into vectors.
  poly->allow_extras();
  poly->callback([&] { action = [&] { poly_args = app.remaining(); return cmd_poly(poly_args); }; });

  file_verb("snf", "Smith normal form valuations", cmd_snf);
  file_verb("dist", "relative position d(L1, L2)", cmd_dist);
  file_verb("inv", "torsion invariants of the cokernel", cmd_inv);
  file_verb("filt", "residue filtration", cmd_filt);
  file_verb("hodge", "Hodge type", cmd_hodge);
  file_verb("newton", "Newton type", cmd_newton);
  file_verb("mazur", "compare Newton and Hodge types", cmd_mazur);
  file_verb("fargues", "Fargues filtration of a trivialized phi-module", cmd_fargues);
  file_verb("ht", "Hodge-Tate module types", cmd_ht);
  file_verb("hn", "HN filtration of a poset file", cmd_hn);

  long twist_n = 0;
  auto* tw = app.add_subcommand("twist", "Tate twist");
  tw->add_option("file", file)->required();
  tw->add_option("-n,--n", twist_n, "twist amount")->required();
  tw->callback([&] { action = [&] { return cmd_twist(file, twist_n); }; });

  CheckConfig config;
  std::size_t cases = 0;
  auto* check = app.add_subcommand("check", "seeded property suites (JSON report)");
  auto* cases_opt = check->add_option("--cases", cases, "cases per suite");
  check->add_option("--suite", config.suites, "run only these suites");
  check->add_flag("--break-oracle", config.break_oracle)->group("");
  check->callback([&] {
    if (*cases_opt) config.cases = cases;
    action = [&] { return cmd_check(config); };
  });

  std::vector<std::string> plot_args;
  auto* plot = app.add_subcommand("plot", "SVG of one or more polygons");
  plot->allow_extras();
  plot->footer("Polygons: label=[slopes] or label={slope:width,...}");
  plot->callback([&] { action = [&] { plot_args = app.remaining(); return cmd_plot(plot_args); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    if (!poly->parsed() && !plot->parsed() && !app.remaining().empty()) {
      std::cerr << "hnslope: unexpected argument '" << app.remaining().front() << "'\n";
      return 2;
    }
    return action();
  } catch (const Error& e) {
    std::cerr << "hnslope: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "hnslope: " << e.what() << "\n";
    return 1;
  }
}
