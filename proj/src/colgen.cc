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

#include "inspection/colgen.h"

#include <algorithm>
#include <chrono>
#include <set>
#include <string>

#include "inspection/game.h"
#include "inspection/marginal.h"

namespace inspection {
namespace {

// Reduced costs within this distance of -epsilon count as converged; it
// matches the simplex optimality tolerance.
constexpr double kPricingTol = 1e-9;
constexpr double kDualTol = 1e-7;

std::vector<double> AttackerDuals(const LPSolution& solution, int m,
                                  int r_a) {
  std::vector<double> rho(solution.duals.begin(), solution.duals.begin() + m);
  if (!IsFeasibleMarginal(rho, r_a)) {
    double total = 0.0;
    for (double x : rho) total += x;
    bool near = total <= r_a + kDualTol;
    for (double x : rho) near = near && x >= -kDualTol && x <= 1.0 + kDualTol;
    if (!near) {
      throw NumericalInconsistencyError(
          "master duals left the marginal polytope (mass " +
          std::to_string(total) + ")");
    }
  }
  for (double& x : rho) x = std::clamp(x, 0.0, 1.0);
  return rho;
}

EquilibriumResult Assemble(const std::vector<DetectorSet>& columns,
                           const LPSolution& solution,
                           std::vector<double> rho) {
  EquilibriumResult result;
  double mass = 0.0;
  for (std::size_t k = 0; k < columns.size(); ++k) {
    const double prob = solution.primal[k];
    if (prob > 1e-12) {
      result.sigma_d.support.push_back({columns[k], prob});
      mass += prob;
    }
  }
  for (auto& atom : result.sigma_d.support) atom.prob /= mass;
  result.rho_a = std::move(rho);
  result.value = std::max(0.0, solution.objective);
  result.columns = static_cast<int>(columns.size());
  return result;
}

}  // namespace

DenseLP BuildRestrictedMaster(const Instance& instance,
                              std::span<const DetectorSet> columns) {
  if (columns.empty()) {
    throw ValidationError("restricted master needs at least one column");
  }
  const int m = instance.num_components();
  MasterLayout layout{static_cast<int>(columns.size()), m};
  const int num_vars = layout.gamma() + 1;

  DenseLP lp;
  lp.objective.assign(num_vars, 0.0);
  lp.lower.assign(num_vars, 0.0);
  lp.upper.assign(num_vars, kInfinity);
  for (int e = 0; e < m; ++e) lp.objective[layout.lambda(e)] = 1.0;
  lp.objective[layout.gamma()] = instance.r_a();

  std::vector<std::vector<double>> coverage(m,
                                            std::vector<double>(num_vars, 0.0));
  for (int k = 0; k < layout.num_columns; ++k) {
    if (columns[k].size() > instance.r_d()) {
      throw ValidationError("master column exceeds the defender budget");
    }
    const std::vector<double> u = UndetectionByComponent(instance, columns[k]);
    for (int e = 0; e < m; ++e) coverage[e][k] = -u[e];
  }
  for (int e = 0; e < m; ++e) {
    coverage[e][layout.lambda(e)] = 1.0;
    coverage[e][layout.gamma()] = 1.0;
    lp.AddRow(std::move(coverage[e]), RowSense::kGreaterEqual, 0.0);
  }
  std::vector<double> convexity(num_vars, 0.0);
  for (int k = 0; k < layout.num_columns; ++k) convexity[k] = 1.0;
  lp.AddRow(std::move(convexity), RowSense::kEqual, 1.0);
  return lp;
}

double ReducedCost(const Instance& instance, const DetectorSet& set,
                   std::span<const double> rho, double nu) {
  return -nu + SetValue(instance, set, rho);
}

EquilibriumResult SolveColGen(const Instance& instance,
                              const ColGenConfig& config) {
  if (!(config.epsilon >= 0.0)) {
    throw ValidationError("column generation needs epsilon >= 0");
  }
  if (config.max_iterations < 1) {
    throw ValidationError("column generation needs max_iterations >= 1");
  }
  const auto start = std::chrono::steady_clock::now();
  const int m = instance.num_components();

  std::vector<DetectorSet> columns;
  std::set<DetectorSet> known;
  auto add_column = [&](DetectorSet set) {
    if (known.insert(set).second) columns.push_back(std::move(set));
  };
  add_column(DetectorSet{});
  if (config.initial_columns == InitialColumns::kEmptyAndGreedy) {
    const std::vector<double> uniform(
        m, static_cast<double>(instance.r_a()) / m);
    add_column(ForwardGreedy(instance, uniform));
  }

  std::vector<TraceRow> trace;
  EquilibriumResult result;
  bool converged = false;
  int iteration = 0;
  while (iteration < config.max_iterations) {
    ++iteration;
    const DenseLP lp = BuildRestrictedMaster(instance, columns);
    const LPSolution solution = SolveLP(lp);
    if (solution.status != LPStatus::kOptimal) {
      throw SolverFailureError(std::string("restricted master is ") +
                               LPStatusName(solution.status));
    }
    std::vector<double> rho = AttackerDuals(solution, m, instance.r_a());
    const double nu = solution.duals[m];
    const BestResponse priced = ComputeBestResponse(
        instance, rho, config.pricing, config.enumeration_cap);
    const double reduced_cost = priced.value - nu;
    if (config.record_trace) {
      trace.push_back({iteration, solution.objective, reduced_cost});
    }
    result = Assemble(columns, solution, std::move(rho));
    if (reduced_cost >= -config.epsilon - kPricingTol) {
      converged = true;
      break;
    }
    if (known.contains(priced.set)) {
      throw NumericalInconsistencyError(
          "pricing returned a column already in the master with reduced "
          "cost " +
          std::to_string(reduced_cost));
    }
    add_column(priced.set);
  }

  result.method = std::string("cg-") + BestResponseModeCode(config.pricing);
  result.alpha = ApproximationFactor(instance, config.pricing);
  result.epsilon = config.epsilon;
  result.iterations = iteration;
  result.trace = std::move(trace);
  result.certificates =
      Certify(instance, result.sigma_d, &result.rho_a, config.enumeration_cap);
  result.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  if (!converged) {
    throw NonconvergenceError("column generation did not converge within " +
                                  std::to_string(config.max_iterations) +
                                  " iterations",
                              std::move(result));
  }
  return result;
}

}  // namespace inspection
