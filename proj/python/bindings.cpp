#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "crosscap/audit.hpp"
#include "crosscap/characterize.hpp"
#include "crosscap/config.hpp"
#include "crosscap/curveconfig.hpp"
#include "crosscap/errors.hpp"
#include "crosscap/search.hpp"
#include "crosscap/topology.hpp"

namespace py = pybind11;
namespace cc = crosscap;

namespace {

// Reports travel as JSON text; the Python side decodes them.
std::string report(const cc::LemmaReport& r) { return r.to_json().dump(); }

cc::SearchBudget budget_of(const std::string& text) {
  return text.empty() ? cc::SearchBudget::from_env() : cc::SearchBudget::parse(text, cc::SearchBudget::from_env());
}

}  // namespace

PYBIND11_MODULE(_crosscap, m) {
  m.doc() = "Curve configurations on punctured surfaces";

  static py::exception<cc::Error> error(m, "CrosscapError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const cc::Error& e) {
      py::set_error(error, (e.kind() + ": " + e.what()).c_str());
    }
  });

  py::class_<cc::SurfaceInvariants>(m, "Surface")
      .def(py::init([](const std::string& literal) { return cc::parse_surface_literal(literal); }))
      .def_readonly("orientable", &cc::SurfaceInvariants::orientable)
      .def_readonly("genus", &cc::SurfaceInvariants::genus)
      .def_readonly("punctures", &cc::SurfaceInvariants::punctures)
      .def_readonly("boundary", &cc::SurfaceInvariants::boundary)
      .def_property_readonly("chi", [](const cc::SurfaceInvariants& s) { return cc::euler_characteristic(s); })
      .def("double_cover", &cc::orientation_double_cover)
      .def("__eq__", [](const cc::SurfaceInvariants& a, const cc::SurfaceInvariants& b) { return a == b; })
      .def("__hash__", [](const cc::SurfaceInvariants& s) { return py::hash(py::str(cc::to_literal(s))); })
      .def("__str__", &cc::to_literal)
      .def("__repr__", [](const cc::SurfaceInvariants& s) { return "Surface('" + cc::to_literal(s) + "')"; });

  m.def("nonorientable_surface", &cc::nonorientable_surface, py::arg("genus"), py::arg("punctures") = 0,
        py::arg("boundary") = 0);
  m.def("orientable_surface", &cc::orientable_surface, py::arg("genus"), py::arg("punctures") = 0,
        py::arg("boundary") = 0);

  py::class_<cc::CurveConfiguration>(m, "Configuration")
      .def_readonly("ambient", &cc::CurveConfiguration::ambient)
      .def_readonly("curves", &cc::CurveConfiguration::curves)
      .def_property_readonly("crossings", &cc::CurveConfiguration::crossing_count)
      .def("curve_index", [](const cc::CurveConfiguration& c, const std::string& n) { return c.curve_index(n); })
      .def("__str__", [](const cc::CurveConfiguration& c) { return cc::serialize(c); });

  m.def("parse_config", [](const std::string& text) { return cc::parse_config(text); });
  m.def("load_config", &cc::load_config);
  m.def("serialize", &cc::serialize);
  m.def("anonymous_key", &cc::anonymous_key, py::arg("config"), py::arg("fixed") = std::vector<std::string>{});
  m.def("validate", [](const cc::CurveConfiguration& c) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& v : cc::validate_config(c)) out.emplace_back(v.kind, v.detail);
    return out;
  });

  m.def("intersection_number",
        [](const cc::CurveConfiguration& c, const std::string& a, const std::string& b) {
          return cc::intersection_number(c, a, b);
        });
  m.def("classify_curve", [](const cc::CurveConfiguration& c, const std::string& name) {
    const cc::CurveClass k = cc::classify_curve(c, name);
    py::dict d;
    d["sidedness"] = cc::to_string(k.sidedness);
    d["trivial"] = cc::to_string(k.trivial);
    d["separating"] = k.separating;
    d["characteristic"] = k.characteristic;
    d["components"] = k.components;
    return d;
  });
  m.def("cut_along", [](const cc::CurveConfiguration& c, const std::vector<std::string>& names) {
    std::vector<int> idx;
    for (const auto& n : names) idx.push_back(c.curve_index(n));
    const cc::CutResult r = cc::cut_along(c, idx);
    return py::make_tuple(r.components, r.neighborhood_chi);
  });
  m.def("certificate", [](const cc::CurveConfiguration& c, const std::string& name) {
    return cc::to_string(cc::certificate_kind(c, c.curve_index(name)).kind);
  });

  m.def("verify_max_abelian_system",
        [](const cc::CurveConfiguration& c, const std::vector<std::string>& names, int s) {
          std::vector<int> idx;
          for (const auto& n : names) idx.push_back(c.curve_index(n));
          return report(cc::verify_max_abelian_system(c, idx, s));
        });
  m.def(
      "separating_pair",
      [](const cc::CurveConfiguration& c, const std::string& a, const std::string& b, const std::string& budget) {
        return report(cc::separating_pair_algebraic(c, c.curve_index(a), c.curve_index(b), budget_of(budget)));
      },
      py::arg("config"), py::arg("a"), py::arg("b"), py::arg("budget") = "");
  m.def(
      "small_genus",
      [](const cc::CurveConfiguration& c, const std::string& curve, const std::string& budget) {
        return report(cc::small_genus_classify(c, c.curve_index(curve), budget_of(budget)));
      },
      py::arg("config"), py::arg("curve"), py::arg("budget") = "");

  m.def(
      "enumerate",
      [](const std::string& surface, int curves, int crossings, int jobs) {
        cc::SearchBudget b = cc::SearchBudget::from_env();
        b.max_crossings = crossings;
        std::vector<cc::CurveConfiguration> out;
        for (auto& e : cc::build_corpus(cc::parse_surface_literal(surface), curves, b, jobs)) out.push_back(e.config);
        return out;
      },
      py::arg("surface"), py::arg("curves"), py::arg("crossings"), py::arg("jobs") = 1,
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "audit",
      [](const std::string& lemma, const std::string& surface, int curves, int crossings, int jobs) {
        cc::AuditOptions o;
        o.max_curves = curves;
        o.corpus_crossings = crossings;
        o.budget = cc::SearchBudget::from_env();
        o.jobs = jobs;
        return cc::equivalence_audit(cc::parse_surface_literal(surface), lemma, o).dump();
      },
      py::arg("lemma"), py::arg("surface"), py::arg("curves") = 2, py::arg("crossings") = 2, py::arg("jobs") = 1,
      py::call_guard<py::gil_scoped_release>());
}
