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

#include "inspection/equilibrium.h"

#include "inspection/game.h"

namespace inspection {

const char* BestResponseModeName(BestResponseMode mode) {
  switch (mode) {
    case BestResponseMode::kExact:
      return "exact";
    case BestResponseMode::kForwardGreedy:
      return "forward_greedy";
    case BestResponseMode::kReverseGreedy:
      return "reverse_greedy";
  }
  return "unknown";
}

const char* BestResponseModeCode(BestResponseMode mode) {
  switch (mode) {
    case BestResponseMode::kExact:
      return "exact";
    case BestResponseMode::kForwardGreedy:
      return "fg";
    case BestResponseMode::kReverseGreedy:
      return "rg";
  }
  return "unknown";
}

BestResponse ComputeBestResponse(const Instance& instance,
                                 std::span<const double> rho,
                                 BestResponseMode mode,
                                 std::uint64_t enumeration_cap) {
  switch (mode) {
    case BestResponseMode::kExact:
      return ExactBestResponse(instance, rho, enumeration_cap);
    case BestResponseMode::kForwardGreedy: {
      DetectorSet set = ForwardGreedy(instance, rho);
      const double value = SetValue(instance, set, rho);
      return {std::move(set), value};
    }
    case BestResponseMode::kReverseGreedy: {
      DetectorSet set = ReverseGreedy(instance, rho);
      const double value = SetValue(instance, set, rho);
      return {std::move(set), value};
    }
  }
  return {};
}

double ApproximationFactor(const Instance& instance, BestResponseMode mode) {
  return mode == BestResponseMode::kExact ? 1.0
                                          : GreedyApproximationFactor(instance);
}

Certificates Certify(const Instance& instance,
                     const MixedDefenderStrategy& sigma_d,
                     const std::vector<double>* rho_a, std::uint64_t cap) {
  Certificates certificates;
  certificates.attacker_best_response =
      WorstCaseAttackValue(instance, sigma_d).value;
  if (rho_a == nullptr) return certificates;
  if (ExactBestResponseAffordable(instance, cap)) {
    certificates.defender_best_response =
        ExactBestResponse(instance, *rho_a, cap).value;
    certificates.defender_exact = true;
  } else {
    const DetectorSet set = ReverseGreedy(instance, *rho_a);
    const CurvatureReport curvature = Curvature(instance, *rho_a);
    certificates.defender_best_response =
        SetValue(instance, set, *rho_a) * (1.0 - curvature.c);
    certificates.defender_exact = false;
  }
  return certificates;
}

}  // namespace inspection
