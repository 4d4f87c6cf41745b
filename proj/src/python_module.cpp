#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hnslope/check_suite.hpp"
#include "hnslope/error.hpp"
#include "hnslope/hn_engine.hpp"
#include "hnslope/lattice.hpp"
#include "hnslope/phimod.hpp"
#include "hnslope/polygon.hpp"
#include "hnslope/slopes.hpp"
#include "hnslope/svg.hpp"
#include "hnslope/text_format.hpp"

namespace py = pybind11;
using namespace hnslope;

namespace {

py::object to_fraction(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(r.str());
}

Rational to_rational(const py::handle& x) { return Rational::parse(py::str(x).cast<std::string>()); }

py::list to_list(const std::vector<Rational>& v) {
  py::list out;
  for (const auto& x : v) out.append(to_fraction(x));
  return out;
}

SlopeVector to_type(const py::handle& x) {
  if (py::isinstance<py::str>(x)) return SlopeVector::parse(x.cast<std::string>());
  std::vector<Rational> v;
  for (auto e : x) v.push_back(to_rational(e));
  return SlopeVector(std::move(v));
}

py::list to_list(const SlopeVector& f) { return to_list(f.entries()); }

template <class Fn>
auto with_matrix(const std::string& text, Fn&& fn) {
  const auto doc = Document::parse(text);
  const std::string key = doc.block("matrix") ? "matrix" : "phi";
  const auto ring = read_ring(doc);
  if (const auto* r = std::get_if<HahnRing>(&ring)) return fn(read_matrix<HahnSeries>(doc, *r, key));
  if (const auto* r = std::get_if<PadicRing>(&ring)) return fn(read_matrix<PadicNumber>(doc, *r, key));
  return fn(read_matrix<XiSeries>(doc, std::get<XiRing>(ring), key));
}

}  // namespace

PYBIND11_MODULE(_hnslope, m) {
  m.doc() = "Exact slope filtrations: types, lattices, phi-modules, isocrystals, HN polygons";

  // Kept alive by the module; `kind` names the ErrorKind.
  static PyObject* error_type = py::exception<Error>(m, "HnslopeError").ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("kind") = py::str(to_string(e.kind()));
      PyErr_SetObject(error_type, exc.ptr());
    }
  });

  // polygons
  m.def("convex_sum", [](py::object f, py::object g) { return to_list(convex_sum(to_type(f), to_type(g))); });
  m.def("entrywise_sum", [](py::object f, py::object g) { return to_list(entrywise_sum(to_type(f), to_type(g))); });
  m.def("involution", [](py::object f) { return to_list(involution(to_type(f))); });
  m.def("dominance", [](py::object f, py::object g) { return std::string(to_string(dominance_compare(to_type(f), to_type(g)))); },
        "Less, Greater, Equal, Incomparable or DegMismatch");
  m.def("evaluate", [](py::object f, py::object s) { return to_fraction(eval(to_type(f), to_rational(s))); });
  m.def("tensor_type", [](py::object f, py::object g) { return to_list(tensor_type(to_type(f), to_type(g))); });
  m.def("ext_type", [](py::object f, std::size_t k) { return to_list(ext_type(to_type(f), k)); });
  m.def("sym_type", [](py::object f, std::size_t k) { return to_list(sym_type(to_type(f), k)); });
  m.def("twist_shift", [](py::object f, py::object n) { return to_list(twist_shift(to_type(f), to_rational(n))); });

  // lattices (documents in the text format)
  m.def("snf_valuations", [](const std::string& text) {
    return with_matrix(text, [](const auto& x) {
      std::vector<std::string> out;
      for (const auto& v : snf(x).valuations) out.push_back(v.str());
      return out;
    });
  });
  m.def("lattice_distance", [](const std::string& text) {
    return with_matrix(text, [](const auto& x) { return to_list(lattice_distance(x)); });
  });
  m.def("torsion_inv", [](const std::string& text) {
    return with_matrix(text, [](const auto& x) { return to_list(torsion_inv(x).entries()); });
  });

  // slopes
  m.def("hodge_type", [](const std::string& text) {
    const auto doc = Document::parse(text);
    switch (ring_kind(read_ring(doc))) {
      case RingKind::Hahn: return to_list(hodge_type(read_phi_module(doc)));
      case RingKind::Padic: return to_list(hodge_type_crystal(read_isocrystal(doc)));
      case RingKind::Xi: break;
    }
    return to_list(ht_hodge_type(read_ht_module(doc)));
  });
  m.def("newton_type", [](const std::string& text) { return to_list(newton_type(read_isocrystal(Document::parse(text)))); });
  m.def("mazur_check", [](const std::string& text) {
    return std::string(to_string(mazur_check(read_isocrystal(Document::parse(text)))));
  });
  m.def("fargues_type", [](const std::string& text) {
    const auto doc = Document::parse(text);
    const auto mod = read_phi_module(doc);
    const auto t = read_trivialization(doc, mod);
    if (!t) fail(ErrorKind::SchemaError, "missing triv= block");
    return to_list(fargues_type(mod, *t).type);
  });
  m.def("ht_fargues_bound", [](const std::string& text) {
    const auto doc = Document::parse(text);
    const auto b = ht_fargues_bound(read_ht_module(doc), read_candidates(doc),
                                    doc.value_or("exhaustive").value_or("false") == "true");
    return py::make_tuple(to_list(b.type), b.certified);
  }, "(type, certified)");

  m.def("hn_filtration", [](const std::string& poset_text) {
    const auto p = RankedPoset::parse(poset_text);
    const auto f = hn_filtration(p);
    std::vector<std::string> chain;
    for (auto i : f.chain) chain.push_back(p.element(i).id);
    return py::make_tuple(to_list(filtration_type(f, p)), chain, to_list(f.jumps));
  }, "(type, chain ids, jumps); raises HnslopeError(kind='NotAdmissible')");

  m.def("run_check", [](std::uint64_t seed, std::optional<std::size_t> cases, std::vector<std::string> suites) {
    CheckConfig config;
    config.seed = seed;
    config.cases = cases;
    config.suites = std::move(suites);
    return report_json(config, run_check_suite(config));
  }, py::arg("seed") = 42, py::arg("cases") = py::none(), py::arg("suites") = std::vector<std::string>{});
  m.def("check_suite_names", &check_suite_names);

  m.def("plot", [](const std::vector<std::pair<std::string, py::object>>& items) {
    std::vector<LabeledPolygon> polys;
    for (const auto& [label, f] : items) polys.emplace_back(label, ConcavePolygon::from_type(to_type(f)));
    return plot_polygons(polys);
  }, "SVG text for [(label, type), ...]");
}
