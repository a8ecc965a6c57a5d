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

#include "inspection/game.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "inspection/errors.h"

namespace inspection {
namespace {

void CheckSetIndices(const Instance& instance, const DetectorSet& set) {
  for (int v : set.members) {
    if (v < 0 || v >= instance.num_locations()) {
      throw ValidationError("unknown location index " + std::to_string(v));
    }
  }
}

void CheckRhoLength(const Instance& instance, std::span<const double> rho) {
  if (static_cast<int>(rho.size()) != instance.num_components()) {
    throw ValidationError("attack vector has length " +
                          std::to_string(rho.size()) + ", expected " +
                          std::to_string(instance.num_components()));
  }
}

}  // namespace

std::vector<double> UndetectionByComponent(const Instance& instance,
                                           const DetectorSet& set) {
  CheckSetIndices(instance, set);
  std::vector<double> u(instance.num_components(), 1.0);
  for (int v : set.members) {
    const double miss = 1.0 - instance.p(v);
    for (int e : instance.monitoring(v)) u[e] *= miss;
  }
  return u;
}

double Undetection(const Instance& instance, const DetectorSet& set,
                   std::span<const int> targets) {
  const std::vector<double> u = UndetectionByComponent(instance, set);
  double total = 0.0;
  for (int e : targets) {
    if (e < 0 || e >= instance.num_components()) {
      throw ValidationError("unknown component index " + std::to_string(e));
    }
    total += u[e];
  }
  return total;
}

double SetValue(const Instance& instance, const DetectorSet& set,
                std::span<const double> rho) {
  CheckRhoLength(instance, rho);
  const std::vector<double> u = UndetectionByComponent(instance, set);
  return std::inner_product(u.begin(), u.end(), rho.begin(), 0.0);
}

std::vector<double> ComponentUndetection(const Instance& instance,
                                         const MixedDefenderStrategy& sigma) {
  ValidateDefenderStrategy(instance, sigma);
  std::vector<double> coefficients(instance.num_components(), 0.0);
  for (const auto& atom : sigma.support) {
    if (atom.prob == 0.0) continue;
    const std::vector<double> u = UndetectionByComponent(instance, atom.set);
    for (int e = 0; e < instance.num_components(); ++e) {
      coefficients[e] += atom.prob * u[e];
    }
  }
  return coefficients;
}

double ExpectedUndetection(const Instance& instance,
                           const MixedDefenderStrategy& sigma,
                           std::span<const double> rho) {
  CheckRhoLength(instance, rho);
  const std::vector<double> c = ComponentUndetection(instance, sigma);
  return std::inner_product(c.begin(), c.end(), rho.begin(), 0.0);
}

double ExpectedUndetectionMixed(const Instance& instance,
                                const MixedDefenderStrategy& sigma_d,
                                const MixedAttackStrategy& sigma_a) {
  ValidateDefenderStrategy(instance, sigma_d);
  ValidateAttackStrategy(instance, sigma_a);
  double total = 0.0;
  for (const auto& d : sigma_d.support) {
    for (const auto& a : sigma_a.support) {
      total += d.prob * a.prob * Undetection(instance, d.set, a.targets);
    }
  }
  return total;
}

double TopKSum(std::span<const double> values, int k,
               std::vector<int>* chosen) {
  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  k = std::clamp(k, 0, static_cast<int>(values.size()));
  std::partial_sort(order.begin(), order.begin() + k, order.end(),
                    [&](int a, int b) {
                      if (values[a] != values[b]) return values[a] > values[b];
                      return a < b;
                    });
  double total = 0.0;
  for (int i = 0; i < k; ++i) total += values[order[i]];
  if (chosen != nullptr) {
    chosen->assign(order.begin(), order.begin() + k);
    std::sort(chosen->begin(), chosen->end());
  }
  return total;
}

AttackResponse WorstCaseAttackValue(const Instance& instance,
                                    const MixedDefenderStrategy& sigma) {
  const std::vector<double> c = ComponentUndetection(instance, sigma);
  std::vector<int> chosen;
  AttackResponse response;
  response.value = TopKSum(c, instance.r_a(), &chosen);
  response.rho.assign(instance.num_components(), 0.0);
  for (int e : chosen) response.rho[e] = 1.0;
  return response;
}

}  // namespace inspection
