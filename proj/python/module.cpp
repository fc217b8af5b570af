// Results cross the boundary as JSON text; the Python side decodes them.

#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "entaxiom/axioms.hpp"
#include "entaxiom/classifier.hpp"
#include "entaxiom/entropy.hpp"
#include "entaxiom/error.hpp"
#include "entaxiom/report.hpp"

namespace py = pybind11;
using namespace entaxiom;

namespace {

EntropySpec spec_of(const std::string& family, std::optional<double> param,
                    double scale, const std::string& variant) {
  EntropySpec spec = make_spec(parse_family(family), param, scale, parse_variant(variant));
  spec.validate();
  return spec;
}

CheckConfig config_of(const py::dict& kw) {
  CheckConfig cfg;
  for (const auto& [key, value] : kw) {
    const auto name = key.cast<std::string>();
    if (name == "trials") cfg.trials = value.cast<std::size_t>();
    else if (name == "max_n") cfg.max_n = value.cast<std::size_t>();
    else if (name == "seed") cfg.seed = value.cast<std::uint64_t>();
    else if (name == "tol_eq") cfg.tol_eq = value.cast<double>();
    else if (name == "tol_violation") cfg.tol_violation = value.cast<double>();
    else if (name == "hill_climb_steps") cfg.hill_climb_steps = value.cast<std::size_t>();
    else if (name == "max_n_uniform") cfg.max_n_uniform = value.cast<std::size_t>();
    else if (name == "threads") cfg.threads = value.cast<std::size_t>();
    else throw Error(ErrorCode::bad_config, "unknown config key '" + name + "'");
  }
  cfg.validate();
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Generalized entropies and axiom conformance checks";

  static py::exception<Error> error_type(m, "EntaxiomError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      error_type(e.what());
    }
  });

  m.def("families", [] {
    std::vector<std::string> out;
    for (Family f : kAllFamilies) out.emplace_back(to_string(f));
    return out;
  });

  m.def(
      "entropy",
      [](const std::vector<double>& p, const std::string& family,
         std::optional<double> param, double scale, const std::string& variant) {
        return evaluate(spec_of(family, param, scale, variant), make_dist(p)).value;
      },
      py::arg("p"), py::arg("family") = "shannon", py::arg("param") = py::none(),
      py::arg("scale") = 1.0, py::arg("variant") = "corrected");

  m.def(
      "conditional_entropy",
      [](const std::vector<double>& p, const std::vector<std::vector<double>>& rows,
         const std::string& family, std::optional<double> param, double scale,
         const std::string& variant) {
        return conditional_entropy(spec_of(family, param, scale, variant), make_dist(p),
                                   make_cond_dist(rows));
      },
      py::arg("p"), py::arg("rows"), py::arg("family") = "shannon",
      py::arg("param") = py::none(), py::arg("scale") = 1.0,
      py::arg("variant") = "corrected");

  m.def(
      "check_json",
      [](const std::string& family, const std::string& axiom, std::optional<double> param,
         double scale, const std::string& variant, const py::dict& cfg) {
        const EntropySpec spec = spec_of(family, param, scale, variant);
        const AxiomId id = parse_axiom(axiom);
        const CheckConfig c = config_of(cfg);
        py::gil_scoped_release release;
        return to_json(check(spec, id, c)).dump();
      },
      py::arg("family"), py::arg("axiom"), py::arg("param") = py::none(),
      py::arg("scale") = 1.0, py::arg("variant") = "corrected", py::arg("cfg") = py::dict());

  m.def(
      "suite_json",
      [](const std::string& family, const std::string& suite, std::optional<double> param,
         double scale, const std::string& variant, const py::dict& cfg) {
        const EntropySpec spec = spec_of(family, param, scale, variant);
        const Suite s = parse_suite(suite);
        const CheckConfig c = config_of(cfg);
        py::gil_scoped_release release;
        return to_json(run_suite(spec, s, c)).dump();
      },
      py::arg("family"), py::arg("suite"), py::arg("param") = py::none(),
      py::arg("scale") = 1.0, py::arg("variant") = "corrected", py::arg("cfg") = py::dict());

  m.def(
      "classify_json",
      [](const std::string& family, std::optional<double> param, double scale,
         const std::string& variant, const py::dict& cfg) {
        const EntropySpec spec = spec_of(family, param, scale, variant);
        const CheckConfig c = config_of(cfg);
        py::gil_scoped_release release;
        return to_json(classify(spec, c)).dump();
      },
      py::arg("family"), py::arg("param") = py::none(), py::arg("scale") = 1.0,
      py::arg("variant") = "corrected", py::arg("cfg") = py::dict());

  m.def(
      "reverify_json",
      [](const std::string& verdict) {
        return to_json(reverify(verdict_from_json(Json::parse(verdict)))).dump();
      },
      py::arg("verdict"));
}
