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

#include "inspection/mwu.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "inspection/errors.h"
#include "inspection/game.h"

namespace inspection {

double EntropyRadius(int num_components, int r_a) {
  return std::max(
      std::log(static_cast<double>(num_components) / static_cast<double>(r_a)),
      1.0);
}

int ScheduledIterations(int num_components, int r_a, double epsilon) {
  if (!(epsilon > 0.0)) throw ValidationError("epsilon must be positive");
  const double tau = std::ceil(4.0 * r_a * r_a *
                               EntropyRadius(num_components, r_a) /
                               (epsilon * epsilon));
  if (tau > 1e9) {
    throw ValidationError("epsilon " + std::to_string(epsilon) +
                          " needs more than 1e9 iterations");
  }
  return static_cast<int>(tau);
}

double ScheduledStepSize(int num_components, int r_a, int tau) {
  if (tau < 1) throw ValidationError("tau must be at least 1");
  return std::sqrt(EntropyRadius(num_components, r_a) / tau);
}

MWUStep MwuStep(const Instance& instance, std::span<const double> rho_t,
                double eta, BestResponseMode mode,
                std::uint64_t enumeration_cap) {
  const int m = instance.num_components();
  if (static_cast<int>(rho_t.size()) != m) {
    throw DomainError("iterate has the wrong length");
  }
  for (int e = 0; e < m; ++e) {
    if (!(rho_t[e] > 0.0)) {
      throw DomainError("iterate entry " + std::to_string(e) +
                        " must be strictly positive");
    }
  }
  MWUStep step;
  step.response = ComputeBestResponse(instance, rho_t, mode, enumeration_cap);
  const std::vector<double> u =
      UndetectionByComponent(instance, step.response.set);
  std::vector<double> weights(m);
  for (int e = 0; e < m; ++e) weights[e] = rho_t[e] * std::exp(eta * u[e]);
  step.next = ProjectLinear(weights, instance.r_a());
  return step;
}

EquilibriumResult SolveMWU(const Instance& instance, const MWUConfig& config) {
  const int m = instance.num_components();
  const int r_a = instance.r_a();
  if (!config.epsilon && !config.tau) {
    throw ValidationError("MWU needs epsilon or tau");
  }
  const int tau = config.tau ? *config.tau
                             : ScheduledIterations(m, r_a, *config.epsilon);
  if (tau < 1) throw ValidationError("tau must be at least 1");
  const double radius = EntropyRadius(m, r_a);
  // Without a target, report the error the run length supports.
  const double epsilon =
      config.epsilon ? *config.epsilon
                     : std::sqrt(4.0 * r_a * r_a * radius / tau);
  const double scheduled_eta = ScheduledStepSize(m, r_a, tau);
  const double eta = config.eta ? *config.eta : scheduled_eta;
  if (!(eta >= 0.0) || eta > 1.0) {
    throw ValidationError("step size must lie in [0, 1], got " +
                          std::to_string(eta));
  }

  const auto start = std::chrono::steady_clock::now();
  std::vector<double> rho(m, static_cast<double>(r_a) / m);
  std::vector<double> rho_sum(m, 0.0);
  std::vector<double> coefficient_sum(m, 0.0);
  double payoff_sum = 0.0;

  std::vector<DetectorSet> played;
  std::vector<int> counts;
  std::map<DetectorSet, std::size_t> index;
  std::vector<TraceRow> trace;

  for (int t = 1; t <= tau; ++t) {
    MWUStep step = MwuStep(instance, rho, eta, config.mode,
                           config.enumeration_cap);
    const std::vector<double> u =
        UndetectionByComponent(instance, step.response.set);
    for (int e = 0; e < m; ++e) {
      rho_sum[e] += rho[e];
      coefficient_sum[e] += u[e];
    }
    payoff_sum += step.response.value;

    auto [it, inserted] = index.try_emplace(step.response.set, played.size());
    if (inserted) {
      played.push_back(step.response.set);
      counts.push_back(0);
    }
    ++counts[it->second];

    if (config.record_trace) {
      const double best_fixed = TopKSum(coefficient_sum, std::min(r_a, m));
      trace.push_back({t, payoff_sum / t, (best_fixed - payoff_sum) / t});
    }
    rho = std::move(step.next.rho);
  }

  EquilibriumResult result;
  result.method = std::string("mwu-") + BestResponseModeCode(config.mode);
  for (std::size_t k = 0; k < played.size(); ++k) {
    result.sigma_d.support.push_back(
        {played[k], static_cast<double>(counts[k]) / tau});
  }
  result.rho_a.resize(m);
  for (int e = 0; e < m; ++e) result.rho_a[e] = rho_sum[e] / tau;
  result.value = ExpectedUndetection(instance, result.sigma_d, result.rho_a);
  result.alpha = ApproximationFactor(instance, config.mode);
  result.epsilon = epsilon;
  result.iterations = tau;
  result.columns = static_cast<int>(played.size());
  result.guaranteed =
      (!config.epsilon || tau >= ScheduledIterations(m, r_a, epsilon)) &&
      (!config.eta || *config.eta == scheduled_eta);
  result.regret = TopKSum(coefficient_sum, std::min(r_a, m)) - payoff_sum;
  result.regret_bound =
      eta > 0.0 ? r_a * radius / eta + eta * tau * r_a
                : std::numeric_limits<double>::infinity();
  result.trace = std::move(trace);
  result.certificates = Certify(instance, result.sigma_d, &result.rho_a,
                                config.enumeration_cap);
  result.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return result;
}

}  // namespace inspection
