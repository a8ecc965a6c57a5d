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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit status if
// any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>

#include "fixtures.h"
#include "inspection/best_response.h"
#include "inspection/colgen.h"
#include "inspection/entropy_projection.h"
#include "inspection/game.h"
#include "inspection/instance_io.h"
#include "inspection/marginal.h"
#include "inspection/mwu.h"
#include "inspection/simplex_lp.h"
#include "oracles.h"

namespace inspection {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Small instances shared by the equilibrium criteria: n <= 8, m <= 10,
// r_D <= 3, r_A <= 2.
std::vector<Instance> SmallPool(std::uint64_t seed, int count,
                                const fixtures::RandomSpec& spec) {
  std::mt19937_64 rng(seed);
  std::vector<Instance> pool;
  for (int i = 0; i < count; ++i) pool.push_back(fixtures::RandomInstance(rng, spec));
  return pool;
}

std::string Format(const char* fmt, double a, double b = 0, double c = 0,
                   double d = 0) {
  char buffer[256];
  std::snprintf(buffer, sizeof buffer, fmt, a, b, c, d);
  return buffer;
}

Outcome OracleEquivalence() {
  const auto start = Clock::now();
  const auto pool = SmallPool(1001, 50, {});
  double worst_value = 0.0;
  double worst_gap = 0.0;
  for (const Instance& instance : pool) {
    const EquilibriumResult result = SolveColGen(instance, {});
    std::vector<DetectorSet> all;
    for (const auto& s :
         oracle::Subsets(instance.num_locations(), 0, instance.r_d())) {
      all.emplace_back(s);
    }
    const double lp_value =
        SolveLP(BuildRestrictedMaster(instance, all)).objective;
    const double matrix_value = oracle::FullGame(instance).value;
    worst_value = std::max({worst_value, std::abs(result.value - lp_value),
                            std::abs(result.value - matrix_value)});
    const double minmax = oracle::WorstCase(instance, result.sigma_d);
    const double maxmin = oracle::BestResponseValue(instance, result.rho_a);
    worst_gap = std::max(worst_gap, std::abs(minmax - maxmin));
  }
  const double seconds = Seconds(start);
  return {worst_value <= 1e-6 && worst_gap <= 1e-6 && seconds < 60,
          Format("50 instances, max |value - oracle| %.2e, max |minmax - "
                 "maxmin| %.2e, %.1f s",
                 worst_value, worst_gap, seconds)};
}

Outcome KnownValues() {
  const double single = SolveColGen(fixtures::SingleLocation(0.6), {}).value;
  const double pennies = SolveColGen(fixtures::MatchingPennies(), {}).value;
  const double e1 = std::abs(single - 0.4);
  const double e2 = std::abs(pennies - 0.5);
  return {e1 <= 1e-9 && e2 <= 1e-9,
          Format("single location %.12f, matching pennies %.12f", single,
                 pennies)};
}

std::vector<double> ProjectionInput(std::mt19937_64& rng, int trial) {
  const int m = fixtures::UniformInt(rng, 1, 50);
  std::vector<double> x(m);
  switch (trial % 3) {
    case 0:
      for (double& v : x) v = std::exp(fixtures::Uniform(rng, -6.0, 2.0));
      break;
    case 1: {  // heavy ties
      const int levels = fixtures::UniformInt(rng, 1, 4);
      for (double& v : x) v = 0.3 * fixtures::UniformInt(rng, 1, levels);
      break;
    }
    default:
      for (double& v : x) v = fixtures::Uniform(rng, 0.01, 1.5);
  }
  return x;
}

Outcome ProjectionCorrectness() {
  const auto start = Clock::now();
  std::mt19937_64 rng(3003);
  double max_diff = 0.0;
  double max_budget_err = 0.0;
  int boundary = 0;
  for (int trial = 0; trial < 100000; ++trial) {
    std::vector<double> x = ProjectionInput(rng, trial);
    const int m = static_cast<int>(x.size());
    int r_a = fixtures::UniformInt(rng, 1, m);
    if (trial % 10 == 9) {
      // Move the clamped mass to r_A +- 1e-9 through entries below one.
      for (double& v : x) v = std::min(v, 0.999);
      double clamped = std::accumulate(x.begin(), x.end(), 0.0);
      r_a = std::max(1, static_cast<int>(std::floor(clamped)));
      const double target = r_a + (trial % 20 == 9 ? 1e-9 : -1e-9);
      const double scale = target / clamped;
      if (scale * 0.999 < 1.0) {
        for (double& v : x) v *= scale;
        ++boundary;
      }
    }
    const Projection a = ProjectSorted(x, r_a);
    const Projection b = ProjectLinear(x, r_a);
    for (int e = 0; e < m; ++e) {
      max_diff = std::max(max_diff, std::abs(a.rho[e] - b.rho[e]));
    }
    double clamped = 0.0;
    for (double v : x) clamped += std::min(v, 1.0);
    if (clamped > r_a) {
      for (const auto* p : {&a, &b}) {
        const double sum = std::accumulate(p->rho.begin(), p->rho.end(), 0.0);
        max_budget_err = std::max(max_budget_err, std::abs(sum - r_a));
      }
    }
  }
  double max_oracle = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const int m = fixtures::UniformInt(rng, 1, 12);
    const int r_a = fixtures::UniformInt(rng, 1, m);
    std::vector<double> x(m);
    for (double& v : x) v = fixtures::Uniform(rng, 0.05, 3.0);
    const double reference =
        oracle::Divergence(oracle::ProjectByGradient(x, r_a), x);
    for (const Projection& p : {ProjectSorted(x, r_a), ProjectLinear(x, r_a)}) {
      max_oracle =
          std::max(max_oracle, std::abs(Divergence(p.rho, x) - reference));
    }
  }
  const double seconds = Seconds(start);
  return {max_diff <= 1e-12 && max_oracle <= 1e-6 && max_budget_err <= 1e-9 &&
              seconds < 120,
          Format("1e5 vectors (%.0f near the clamp boundary), max |sorted - "
                 "linear| %.2e, max divergence gap to gradient oracle %.2e, "
                 "max budget error %.2e",
                 boundary, max_diff, max_oracle, max_budget_err) +
              Format(", %.1f s", seconds)};
}

Outcome LinearScaling() {
  constexpr double kC = 60.0;
  std::mt19937_64 rng(4004);
  double worst = 0.0;
  std::string ratios;
  for (int m : {1000, 10000, 100000, 1000000}) {
    std::vector<double> x(m);
    for (double& v : x) v = std::exp(fixtures::Uniform(rng, -5.0, 1.0));
    VisitCounter counter;
    ProjectLinear(x, std::max(1, m / 50), &counter);
    const double ratio = static_cast<double>(counter.visits) / m;
    worst = std::max(worst, ratio);
    ratios += Format("%.2f ", ratio);
  }
  return {worst <= kC, "visits per element " + ratios + Format("(C = %.0f)", kC)};
}

Outcome GreedyGuarantees() {
  std::mt19937_64 rng(5005);
  double rg_curv = -1e9;
  double rg_cor = -1e9;
  double fg_affine = -1e9;
  for (int trial = 0; trial < 100; ++trial) {
    const Instance instance = fixtures::RandomInstance(
        rng, {.max_r_d = 6, .max_r_a = 4, .p_low = 0.05, .p_high = 0.9});
    for (int draw = 0; draw < 5; ++draw) {
      const auto rho = fixtures::RandomMarginal(rng, instance.num_components(),
                                                instance.r_a());
      const double exact = ExactBestResponse(instance, rho).value;
      const CurvatureReport curvature = Curvature(instance, rho);
      const double rg = SetValue(instance, ReverseGreedy(instance, rho), rho);
      const double fg = SetValue(instance, ForwardGreedy(instance, rho), rho);
      rg_curv = std::max(rg_curv, rg - exact / (1.0 - curvature.c));
      rg_cor = std::max(rg_cor, rg - exact * GreedyApproximationFactor(instance));
      const double multiplier = curvature.c < 1e-12 ? 1.0 : curvature.forward_multiplier;
      fg_affine = std::max(fg_affine, fg - (multiplier * exact +
                                            (1.0 - multiplier) * instance.r_a()));
    }
  }
  return {rg_curv <= 1e-9 && rg_cor <= 1e-9 && fg_affine <= 1e-9,
          Format("100 instances x 5 marginals, max excess: reverse/curvature "
                 "%.2e, reverse/detection %.2e, forward/affine %.2e",
                 rg_curv, rg_cor, fg_affine)};
}

Outcome Supermodularity() {
  std::mt19937_64 rng(6006);
  std::vector<Instance> pool = {fixtures::SampleNetwork(), fixtures::SampleNetwork(0.9),
                                fixtures::MatchingPennies(),
                                fixtures::SingleLocation(0.6)};
  for (const Instance& i : SmallPool(6006, 40, {.max_locations = 6})) {
    pool.push_back(i);
  }
  long checks = 0;
  double worst = 0.0;
  for (const Instance& instance : pool) {
    const int n = instance.num_locations();
    for (int draw = 0; draw < 3; ++draw) {
      const auto rho = fixtures::RandomMarginal(rng, instance.num_components(),
                                                instance.r_a());
      std::vector<double> value(1u << n);
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> set;
        for (int v = 0; v < n; ++v) {
          if (mask & (1u << v)) set.push_back(v);
        }
        value[mask] = SetValue(instance, DetectorSet(set), rho);
      }
      for (std::uint32_t big = 0; big < (1u << n); ++big) {
        for (std::uint32_t small = big;; small = (small - 1) & big) {
          for (int v = 0; v < n; ++v) {
            if (big & (1u << v)) continue;
            const double gain_small = value[small] - value[small | (1u << v)];
            const double gain_big = value[big] - value[big | (1u << v)];
            worst = std::max(worst, gain_big - gain_small);
            ++checks;
          }
          if (small == 0) break;
        }
      }
    }
  }
  return {worst <= 1e-12,
          Format("%.0f instances, %.0f (S, S', v) triples, max violation %.2e",
                 static_cast<double>(pool.size()), static_cast<double>(checks),
                 worst)};
}

Outcome ApproximateColGen() {
  const auto pool = SmallPool(7007, 50, {.p_low = 0.05, .p_high = 0.95});
  double upper = -1e9;
  double lower = -1e9;
  int runs = 0;
  for (const Instance& instance : pool) {
    const double v_star = oracle::FullGame(instance).value;
    for (BestResponseMode mode :
         {BestResponseMode::kForwardGreedy, BestResponseMode::kReverseGreedy}) {
      ColGenConfig config;
      config.pricing = mode;
      config.epsilon = 0.05;
      const EquilibriumResult result = SolveColGen(instance, config);
      const double alpha = result.alpha;
      if (!std::isfinite(alpha)) continue;
      ++runs;
      upper = std::max(upper, oracle::WorstCase(instance, result.sigma_d) -
                                  (alpha * v_star + 0.05));
      lower = std::max(lower, (v_star - 0.05) / alpha -
                                  oracle::BestResponseValue(instance, result.rho_a));
    }
  }
  return {upper <= 1e-6 && lower <= 1e-6,
          Format("%.0f greedy-priced runs, max excess over alpha V* + eps "
                 "%.2e, max shortfall below (V* - eps) / alpha %.2e",
                 runs, upper, lower)};
}

Outcome MwuCertificates() {
  const auto start = Clock::now();
  const auto pool = SmallPool(8008, 30, {});
  double upper = -1e9;
  double regret = -1e9;
  int schedule_errors = 0;
  for (const Instance& instance : pool) {
    const double v_star = oracle::FullGame(instance).value;
    MWUConfig config;
    config.epsilon = 0.1;
    config.mode = BestResponseMode::kExact;
    const EquilibriumResult result = SolveMWU(instance, config);
    const int m = instance.num_components();
    const int r_a = instance.r_a();
    const double radius = std::max(std::log(static_cast<double>(m) / r_a), 1.0);
    const int tau = static_cast<int>(std::ceil(4.0 * r_a * r_a * radius / 0.01));
    if (result.iterations != tau || !result.guaranteed) ++schedule_errors;
    upper = std::max(upper, oracle::WorstCase(instance, result.sigma_d) -
                                (v_star + 0.1));
    regret = std::max(regret, *result.regret - *result.regret_bound);
  }
  const double seconds = Seconds(start);
  return {upper <= 1e-6 && regret <= 1e-9 && schedule_errors == 0 &&
              seconds < 300,
          Format("30 instances, max excess over V* + eps %.2e, max regret "
                 "excess %.2e, schedule mismatches %.0f, %.1f s",
                 upper, regret, schedule_errors, seconds)};
}

Outcome DecompositionRoundTrip() {
  std::mt19937_64 rng(9009);
  double worst = 0.0;
  int oversized = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const int m = fixtures::UniformInt(rng, 1, 30);
    const int r_a = fixtures::UniformInt(rng, 1, m);
    const auto rho = fixtures::RandomMarginal(rng, m, r_a);
    const MixedAttackStrategy sigma = Decompose(rho, r_a);
    if (static_cast<int>(sigma.support.size()) > m + 1) ++oversized;
    for (const auto& atom : sigma.support) {
      if (static_cast<int>(atom.targets.size()) > r_a) ++oversized;
    }
    const auto back = MarginalsOf(sigma, m);
    for (int e = 0; e < m; ++e) worst = std::max(worst, std::abs(back[e] - rho[e]));
  }
  return {worst <= 1e-9 && oversized == 0,
          Format("1e4 marginals, max reconstruction error %.2e, oversized "
                 "supports %.0f",
                 worst, oversized)};
}

Outcome Scalability() {
  const auto start = Clock::now();
  GeneratorParams params;
  params.num_locations = 200;
  params.num_components = 1500;
  params.r_a_fraction = 0.02;
  params.r_d = 20;
  params.seed = 2024;
  const Instance instance = GenerateGeometric(params);
  if (instance.r_a() != 30 || instance.r_d() != 20) {
    return {false, "generated instance has the wrong budgets"};
  }
  MWUConfig config;
  config.epsilon = 0.1 * instance.r_a();
  config.mode = BestResponseMode::kForwardGreedy;
  const EquilibriumResult result = SolveMWU(instance, config);
  const double seconds = Seconds(start);
  const int m = instance.num_components();
  const int scheduled = ScheduledIterations(m, instance.r_a(), *config.epsilon);
  const std::vector<double> uniform(m, static_cast<double>(instance.r_a()) / m);
  const double baseline =
      WorstCaseAttackValue(instance, MixedDefenderStrategy::PointMass(
                                         ForwardGreedy(instance, uniform)))
          .value;
  const double certificate = result.certificates.attacker_best_response;
  return {result.iterations == scheduled && seconds < 600 &&
              certificate <= baseline,
          Format("n = 200, m = 1500, tau = %.0f, worst case %.4f vs greedy "
                 "placement %.4f, %.1f s",
                 result.iterations, certificate, baseline, seconds)};
}

}  // namespace
}  // namespace inspection

int main() {
  using namespace inspection;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"exact equilibrium matches full-matrix oracle", OracleEquivalence},
      {"known-value fixtures", KnownValues},
      {"entropy projection correctness", ProjectionCorrectness},
      {"linear-time projection", LinearScaling},
      {"greedy approximation guarantees", GreedyGuarantees},
      {"supermodularity", Supermodularity},
      {"greedy column generation certificates", ApproximateColGen},
      {"multiplicative weights certificates", MwuCertificates},
      {"decomposition round trip", DecompositionRoundTrip},
      {"scalability smoke test", Scalability},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& error) {
      outcome = {false, std::string("threw: ") + error.what()};
    }
    if (!outcome.pass) ++failures;
    std::printf("[%s] criterion %zu: %s: %s\n", outcome.pass ? "PASS" : "FAIL",
                i + 1, criteria[i].first, outcome.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
