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

#include "inspection/cli.h"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "inspection/colgen.h"
#include "inspection/entropy_projection.h"
#include "inspection/errors.h"
#include "inspection/game.h"
#include "inspection/instance_io.h"
#include "inspection/marginal.h"
#include "inspection/mwu.h"
#include "inspection/simplex_lp.h"
#include "json.hpp"

namespace inspection {
namespace {

using Json = nlohmann::ordered_json;

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void Emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ValidationError("cannot write " + path);
  file << text;
}

std::string Number(double x) { return Json(x).dump(); }

BestResponseMode ParseMode(const std::string& code) {
  static const std::map<std::string, BestResponseMode> kModes = {
      {"exact", BestResponseMode::kExact},
      {"fg", BestResponseMode::kForwardGreedy},
      {"rg", BestResponseMode::kReverseGreedy},
  };
  const auto it = kModes.find(code);
  if (it == kModes.end()) {
    throw ValidationError("unknown best-response algorithm " + code);
  }
  return it->second;
}

std::string TraceText(const EquilibriumResult& result) {
  const bool mwu = result.method.rfind("mwu-", 0) == 0;
  std::string text = mwu ? "iteration,average_payoff,average_regret\n"
                         : "iteration,master_value,reduced_cost\n";
  for (const TraceRow& row : result.trace) {
    text += std::to_string(row.iteration) + "," + Number(row.incumbent) + "," +
            Number(row.signal) + "\n";
  }
  return text;
}

Instance LoadInstance(const std::string& path) {
  return ParseInstance(ReadFile(path));
}

int ExitFor(const InspectionError& error) {
  switch (error.code()) {
    case ErrorCode::kNonconvergence:
      return kExitNonconvergence;
    case ErrorCode::kSizeLimit:
      return kExitSizeLimit;
    case ErrorCode::kSolverFailure:
    case ErrorCode::kNumericalInconsistency:
      return kExitSolverFailure;
    case ErrorCode::kValidation:
    case ErrorCode::kInfeasibleMarginal:
    case ErrorCode::kDomain:
    case ErrorCode::kGeneration:
      return kExitInvalid;
  }
  return kExitInvalid;
}

struct SolveArgs {
  std::string instance;
  std::string out;
  std::string trace;
  bool timing = false;
  SolveOptions options;
};

struct GenerateArgs {
  GeneratorParams params;
  int r_d = 0;
  std::string out;
};

struct CertifyArgs {
  std::string instance;
  std::string strategy;
  std::string out;
  std::uint64_t cap = kDefaultEnumerationCap;
};

struct ProjectArgs {
  std::string rho_tilde;
  int r_a = 1;
  std::string algo = "linear";
  std::string out;
};

struct BestResponseArgs {
  std::string instance;
  std::string rho;
  std::string algo = "exact";
  std::string out;
  std::uint64_t cap = kDefaultEnumerationCap;
};

struct SweepArgs {
  std::string instance;
  std::vector<int> r_d;
  std::string out;
  SolveOptions options;
};

int RunSolve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  const Instance instance = LoadInstance(args.instance);
  SolveOptions options = args.options;
  options.record_trace = !args.trace.empty();
  try {
    const EquilibriumResult result = RunMethod(instance, options);
    if (options.record_trace) Emit(args.trace, TraceText(result), out);
    Emit(args.out, SerializeResult(instance, result, args.timing), out);
    return kExitOk;
  } catch (const NonconvergenceError& error) {
    // The incumbent is still worth keeping.
    Emit(args.out, SerializeResult(instance, error.incumbent(), args.timing),
         out);
    err << "error: " << error.what() << "\n";
    return kExitNonconvergence;
  }
}

int RunGenerate(GenerateArgs args, std::ostream& out) {
  if (args.r_d > 0) args.params.r_d = args.r_d;
  Emit(args.out, SerializeInstance(GenerateGeometric(args.params)), out);
  return kExitOk;
}

int RunCertify(const CertifyArgs& args, std::ostream& out) {
  const Instance instance = LoadInstance(args.instance);
  const EquilibriumResult strategy =
      ParseResult(ReadFile(args.strategy), instance);
  ValidateDefenderStrategy(instance, strategy.sigma_d);
  const std::vector<double>* rho = nullptr;
  if (!strategy.rho_a.empty()) {
    if (static_cast<int>(strategy.rho_a.size()) != instance.num_components() ||
        !IsFeasibleMarginal(strategy.rho_a, instance.r_a())) {
      throw ValidationError("rho_A is not a feasible marginal attack vector");
    }
    rho = &strategy.rho_a;
  }
  const Certificates c = Certify(instance, strategy.sigma_d, rho, args.cap);
  Json doc = Json::object();
  doc["attacker_best_response"] = c.attacker_best_response;
  if (c.defender_best_response) {
    doc["defender_best_response"] = *c.defender_best_response;
    doc["defender_best_response_kind"] = c.defender_exact ? "exact" : "bound";
    doc["gap"] = c.attacker_best_response - *c.defender_best_response;
  }
  Emit(args.out, doc.dump(2) + "\n", out);
  return kExitOk;
}

int RunProject(const ProjectArgs& args, std::ostream& out) {
  const std::vector<double> rho_tilde = ParseVector(ReadFile(args.rho_tilde));
  const Projection projection = args.algo == "sorted"
                                    ? ProjectSorted(rho_tilde, args.r_a)
                                    : ProjectLinear(rho_tilde, args.r_a);
  Emit(args.out, SerializeVector(projection.rho), out);
  return kExitOk;
}

int RunBestResponse(const BestResponseArgs& args, std::ostream& out) {
  const Instance instance = LoadInstance(args.instance);
  const std::vector<double> rho = ParseVector(ReadFile(args.rho));
  if (static_cast<int>(rho.size()) != instance.num_components()) {
    throw ValidationError("rho has " + std::to_string(rho.size()) +
                          " entries, instance has " +
                          std::to_string(instance.num_components()) +
                          " components");
  }
  const BestResponse response =
      ComputeBestResponse(instance, rho, ParseMode(args.algo), args.cap);
  Json set = Json::array();
  for (int v : response.set.members) {
    set.push_back(instance.location_names()[v]);
  }
  Json doc = Json::object();
  doc["set"] = std::move(set);
  doc["value"] = response.value;
  Emit(args.out, doc.dump(2) + "\n", out);
  return kExitOk;
}

int RunSweep(const SweepArgs& args, std::ostream& out) {
  const Instance base = LoadInstance(args.instance);
  std::string csv = "method,r_D,value_estimate,worst_case_attacker,wall_ms\n";
  for (int r_d : args.r_d) {
    const Instance instance = base.WithDefenderBudget(r_d);
    const EquilibriumResult result = RunMethod(instance, args.options);
    csv += result.method + "," + std::to_string(r_d) + "," +
           Number(result.value) + "," +
           Number(result.certificates.attacker_best_response) + "," +
           Number(result.wall_ms) + "\n";
  }
  Emit(args.out, csv, out);
  return kExitOk;
}

}  // namespace

EquilibriumResult RunMethod(const Instance& instance,
                            const SolveOptions& options) {
  const std::string& method = options.method;
  const auto dash = method.find('-');
  if (dash == std::string::npos) {
    throw ValidationError("unknown method " + method);
  }
  const std::string family = method.substr(0, dash);
  const BestResponseMode mode = ParseMode(method.substr(dash + 1));
  const double epsilon =
      options.epsilon.value_or(0.001 * instance.num_components());
  if (family == "cg") {
    ColGenConfig config;
    config.pricing = mode;
    config.epsilon = epsilon;
    if (options.max_iterations) config.max_iterations = *options.max_iterations;
    config.enumeration_cap = options.enumeration_cap;
    config.record_trace = options.record_trace;
    return SolveColGen(instance, config);
  }
  if (family == "mwu") {
    MWUConfig config;
    config.epsilon = epsilon;
    config.tau = options.max_iterations;
    config.mode = mode;
    config.enumeration_cap = options.enumeration_cap;
    config.record_trace = options.record_trace;
    return SolveMWU(instance, config);
  }
  throw ValidationError("unknown method " + method);
}

int Dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Equilibria of the zero-sum inspection game", "inspection"};
  app.require_subcommand(1);

  const std::vector<std::string> kMethods = {"cg-exact", "cg-fg",    "cg-rg",
                                             "mwu-exact", "mwu-fg", "mwu-rg"};

  SolveArgs solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Compute an equilibrium");
  solve_cmd->add_option("--instance", solve.instance, "Instance JSON")
      ->required();
  solve_cmd->add_option("--method", solve.options.method)
      ->check(CLI::IsMember(kMethods));
  solve_cmd->add_option("--epsilon", solve.options.epsilon,
                        "Additive error target (default 0.001 m)");
  solve_cmd->add_option("--max-iter", solve.options.max_iterations,
                        "CG iteration cap or MWU round count")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--exact-br-cap", solve.options.enumeration_cap,
                        "Largest detector-set count the exact oracle enumerates");
  solve_cmd->add_option("--out", solve.out, "Result path (default stdout)");
  solve_cmd->add_option("--trace", solve.trace, "Per-iteration CSV path");
  solve_cmd->add_flag("--timing", solve.timing,
                      "Include wall-clock time in the result");

  GenerateArgs generate;
  CLI::App* generate_cmd =
      app.add_subcommand("generate", "Generate a geometric instance");
  generate_cmd->add_option("--n", generate.params.num_locations)
      ->check(CLI::PositiveNumber);
  generate_cmd->add_option("--m", generate.params.num_components)
      ->check(CLI::PositiveNumber);
  generate_cmd->add_option("--radius", generate.params.radius);
  generate_cmd->add_option("--p-low", generate.params.p_low);
  generate_cmd->add_option("--p-high", generate.params.p_high);
  generate_cmd->add_option("--r-a-fraction", generate.params.r_a_fraction);
  generate_cmd->add_option("--r-d", generate.r_d)->check(CLI::PositiveNumber);
  generate_cmd->add_option("--seed", generate.params.seed);
  generate_cmd->add_option("--max-retries", generate.params.max_retries);
  generate_cmd->add_option("--out", generate.out);

  CertifyArgs certify;
  CLI::App* certify_cmd =
      app.add_subcommand("certify", "Certificates for a given strategy");
  certify_cmd->add_option("--instance", certify.instance)->required();
  certify_cmd->add_option("--strategy", certify.strategy,
                          "Document with sigma_D and optionally rho_A")
      ->required();
  certify_cmd->add_option("--exact-br-cap", certify.cap,
                          "Largest detector-set count the exact oracle enumerates");
  certify_cmd->add_option("--out", certify.out);

  ProjectArgs project;
  CLI::App* project_cmd =
      app.add_subcommand("project", "Relative entropy projection");
  project_cmd->add_option("--rho-tilde", project.rho_tilde)->required();
  project_cmd->add_option("--r-a", project.r_a)->required();
  project_cmd->add_option("--algo", project.algo)
      ->check(CLI::IsMember({"sorted", "linear"}));
  project_cmd->add_option("--out", project.out);

  BestResponseArgs best;
  CLI::App* best_cmd =
      app.add_subcommand("best-response", "Defender pure best response");
  best_cmd->add_option("--instance", best.instance)->required();
  best_cmd->add_option("--rho", best.rho)->required();
  best_cmd->add_option("--algo", best.algo)
      ->check(CLI::IsMember({"exact", "fg", "rg"}));
  best_cmd->add_option("--exact-br-cap", best.cap,
                       "Largest detector-set count the exact oracle enumerates");
  best_cmd->add_option("--out", best.out);

  SweepArgs sweep;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Run a method across defender budgets");
  sweep_cmd->add_option("--instance", sweep.instance)->required();
  sweep_cmd->add_option("--method", sweep.options.method)
      ->check(CLI::IsMember(kMethods));
  sweep_cmd->add_option("--r-d", sweep.r_d, "Comma separated budgets")
      ->required()
      ->delimiter(',');
  sweep_cmd->add_option("--epsilon", sweep.options.epsilon);
  sweep_cmd->add_option("--max-iter", sweep.options.max_iterations)
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--exact-br-cap", sweep.options.enumeration_cap,
                        "Largest detector-set count the exact oracle enumerates");
  sweep_cmd->add_option("--out", sweep.out);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& error) {
    const int status = app.exit(error, out, err);
    if (status == 0) return kExitOk;
    err << app.help();
    return kExitInvalid;
  }

  try {
    if (*solve_cmd) return RunSolve(solve, out, err);
    if (*generate_cmd) return RunGenerate(generate, out);
    if (*certify_cmd) return RunCertify(certify, out);
    if (*project_cmd) return RunProject(project, out);
    if (*best_cmd) return RunBestResponse(best, out);
    if (*sweep_cmd) return RunSweep(sweep, out);
  } catch (const SizeLimitError& error) {
    err << "error: " << error.what() << " (--exact-br-cap "
        << static_cast<std::uint64_t>(error.cap()) << ")\n";
    return kExitSizeLimit;
  } catch (const InspectionError& error) {
    err << "error [" << ErrorCodeName(error.code()) << "]: " << error.what()
        << "\n";
    return ExitFor(error);
  }
  return kExitInvalid;
}

}  // namespace inspection
