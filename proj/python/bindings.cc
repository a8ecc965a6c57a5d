// Copyright 2026 The Inspection Game Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "inspection/best_response.h"
#include "inspection/cli.h"
#include "inspection/entropy_projection.h"
#include "inspection/equilibrium.h"
#include "inspection/errors.h"
#include "inspection/instance.h"
#include "inspection/instance_io.h"

namespace py = pybind11;

namespace inspection {
namespace {

BestResponseMode ModeFromName(const std::string& name) {
  if (name == "exact") return BestResponseMode::kExact;
  if (name == "fg") return BestResponseMode::kForwardGreedy;
  if (name == "rg") return BestResponseMode::kReverseGreedy;
  throw ValidationError("unknown best-response algorithm " + name +
                        " (expected exact, fg or rg)");
}

std::string Solve(const Instance& instance, const std::string& method,
                  std::optional<double> epsilon,
                  std::optional<int> max_iterations,
                  std::uint64_t enumeration_cap) {
  SolveOptions options;
  options.method = method;
  options.epsilon = epsilon;
  options.max_iterations = max_iterations;
  options.enumeration_cap = enumeration_cap;
  EquilibriumResult result;
  {
    py::gil_scoped_release release;
    result = RunMethod(instance, options);
  }
  return SerializeResult(instance, result);
}

std::vector<double> Project(const std::vector<double>& rho_tilde, int r_a,
                            const std::string& algo) {
  if (algo == "sorted") return ProjectSorted(rho_tilde, r_a).rho;
  if (algo == "linear") return ProjectLinear(rho_tilde, r_a).rho;
  throw ValidationError("unknown projection algorithm " + algo +
                        " (expected sorted or linear)");
}

std::tuple<std::vector<std::string>, double> BestResponseNames(
    const Instance& instance, const std::vector<double>& rho,
    const std::string& algo, std::uint64_t enumeration_cap) {
  if (static_cast<int>(rho.size()) != instance.num_components()) {
    throw ValidationError("marginal has " + std::to_string(rho.size()) +
                          " entries, expected " +
                          std::to_string(instance.num_components()));
  }
  const BestResponse response =
      ComputeBestResponse(instance, rho, ModeFromName(algo), enumeration_cap);
  std::vector<std::string> names;
  for (int v : response.set.members) {
    names.push_back(instance.location_names()[v]);
  }
  return {names, response.value};
}

std::tuple<double, std::optional<double>, bool> CertifyStrategy(
    const Instance& instance, const std::string& strategy_json,
    std::uint64_t enumeration_cap) {
  const EquilibriumResult strategy = ParseResult(strategy_json, instance);
  const std::vector<double>* rho =
      strategy.rho_a.empty() ? nullptr : &strategy.rho_a;
  const Certificates c =
      Certify(instance, strategy.sigma_d, rho, enumeration_cap);
  return {c.attacker_best_response, c.defender_best_response, c.defender_exact};
}

Instance Generate(int n, int m, double radius, double p_low, double p_high,
                  double r_a_fraction, std::optional<int> r_d,
                  std::uint64_t seed, int max_retries) {
  GeneratorParams params;
  params.num_locations = n;
  params.num_components = m;
  params.radius = radius;
  params.p_low = p_low;
  params.p_high = p_high;
  params.r_a_fraction = r_a_fraction;
  params.r_d = r_d;
  params.seed = seed;
  params.max_retries = max_retries;
  return GenerateGeometric(params);
}

std::tuple<int, std::string, std::string> RunCli(
    const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = Dispatch(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace
}  // namespace inspection

PYBIND11_MODULE(_core, m) {
  using namespace inspection;
  m.doc() = "Zero-sum inspection game solvers";

  static py::exception<InspectionError> error(m, "InspectionError",
                                              PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr pointer) {
    try {
      if (pointer) std::rethrow_exception(pointer);
    } catch (const InspectionError& e) {
      py::object instance = py::handle(error.ptr())(py::str(e.what()));
      instance.attr("code") = ErrorCodeName(e.code());
      PyErr_SetObject(error.ptr(), instance.ptr());
    }
  });

  py::class_<Instance>(m, "Instance")
      .def_property_readonly("num_locations", &Instance::num_locations)
      .def_property_readonly("num_components", &Instance::num_components)
      .def_property_readonly("r_d", &Instance::r_d)
      .def_property_readonly("r_a", &Instance::r_a)
      .def_property_readonly("location_names", &Instance::location_names)
      .def_property_readonly("component_names", &Instance::component_names)
      .def_property_readonly("detection_probs", &Instance::detection_probs)
      .def("with_defender_budget", &Instance::WithDefenderBudget,
           py::arg("r_d"))
      .def("to_json", &SerializeInstance)
      .def("__repr__", [](const Instance& instance) {
        return "<Instance n=" + std::to_string(instance.num_locations()) +
               " m=" + std::to_string(instance.num_components()) +
               " r_D=" + std::to_string(instance.r_d()) +
               " r_A=" + std::to_string(instance.r_a()) + ">";
      });

  m.def("parse_instance", [](const std::string& text) { return ParseInstance(text); },
        py::arg("text"));
  m.def("generate", &Generate, py::arg("n") = 20, py::arg("m") = 60,
        py::arg("radius") = 0.15, py::arg("p_low") = 0.5,
        py::arg("p_high") = 1.0, py::arg("r_a_fraction") = 0.02,
        py::arg("r_d") = std::nullopt, py::arg("seed") = 1,
        py::arg("max_retries") = 1000);
  m.def("solve_json", &Solve, py::arg("instance"),
        py::arg("method") = "cg-exact", py::arg("epsilon") = std::nullopt,
        py::arg("max_iterations") = std::nullopt,
        py::arg("enumeration_cap") = kDefaultEnumerationCap);
  m.def("project", &Project, py::arg("rho_tilde"), py::arg("r_a"),
        py::arg("algo") = "sorted");
  m.def("best_response", &BestResponseNames, py::arg("instance"),
        py::arg("rho"), py::arg("algo") = "exact",
        py::arg("enumeration_cap") = kDefaultEnumerationCap);
  m.def("certify", &CertifyStrategy, py::arg("instance"),
        py::arg("strategy_json"),
        py::arg("enumeration_cap") = kDefaultEnumerationCap);
  m.def("run_cli", &RunCli, py::arg("args"));
  m.attr("DEFAULT_ENUMERATION_CAP") = kDefaultEnumerationCap;
}
