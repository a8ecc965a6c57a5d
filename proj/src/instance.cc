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

#include "inspection/instance.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <utility>

#include "inspection/errors.h"

namespace inspection {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kValidation:
      return "validation";
    case ErrorCode::kInfeasibleMarginal:
      return "infeasible-marginal";
    case ErrorCode::kDomain:
      return "domain";
    case ErrorCode::kSizeLimit:
      return "size-limit";
    case ErrorCode::kNonconvergence:
      return "nonconvergence";
    case ErrorCode::kSolverFailure:
      return "solver-failure";
    case ErrorCode::kNumericalInconsistency:
      return "numerical-inconsistency";
    case ErrorCode::kGeneration:
      return "generation";
  }
  return "unknown";
}

Instance Instance::Create(std::vector<std::string> location_names,
                          std::vector<std::string> component_names,
                          std::vector<std::vector<int>> monitoring,
                          std::vector<double> detection_probs, int r_d,
                          int r_a, std::optional<Geometry> geometry) {
  const int n = static_cast<int>(location_names.size());
  const int m = static_cast<int>(component_names.size());
  if (n < 1) throw ValidationError("instance needs at least one location");
  if (m < 1) throw ValidationError("instance needs at least one component");
  if (static_cast<int>(monitoring.size()) != n ||
      static_cast<int>(detection_probs.size()) != n) {
    throw ValidationError(
        "monitoring sets and detection probabilities must be given for every "
        "location");
  }
  {
    std::set<std::string> seen;
    for (const auto& name : location_names) {
      if (!seen.insert(name).second) {
        throw ValidationError("duplicate location name " + name);
      }
    }
    seen.clear();
    for (const auto& name : component_names) {
      if (!seen.insert(name).second) {
        throw ValidationError("duplicate component name " + name);
      }
    }
  }

  Instance instance;
  instance.monitors_.assign(m, {});
  for (int v = 0; v < n; ++v) {
    auto& set = monitoring[v];
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (set.empty()) {
      throw ValidationError("empty monitoring set " + location_names[v]);
    }
    for (int e : set) {
      if (e < 0 || e >= m) {
        throw ValidationError("monitoring set " + location_names[v] +
                              " references unknown component index " +
                              std::to_string(e));
      }
      instance.monitors_[e].push_back(v);
    }
    const double p = detection_probs[v];
    if (!(p > 0.0 && p <= 1.0)) {
      throw ValidationError(
          "detection probability must be in (0,1]: location " +
          location_names[v]);
    }
  }
  for (int e = 0; e < m; ++e) {
    if (instance.monitors_[e].empty()) {
      throw ValidationError("unmonitored component " + component_names[e]);
    }
    instance.max_monitor_count_ = std::max(
        instance.max_monitor_count_,
        static_cast<int>(instance.monitors_[e].size()));
  }
  if (r_d < 1 || r_d > n) {
    throw ValidationError("defender budget r_D must be in [1, " +
                          std::to_string(n) + "], got " + std::to_string(r_d));
  }
  if (r_a < 1 || r_a > m) {
    throw ValidationError("attacker budget r_A must be in [1, " +
                          std::to_string(m) + "], got " + std::to_string(r_a));
  }

  instance.location_names_ = std::move(location_names);
  instance.component_names_ = std::move(component_names);
  instance.monitoring_ = std::move(monitoring);
  instance.p_ = std::move(detection_probs);
  instance.max_p_ = *std::max_element(instance.p_.begin(), instance.p_.end());
  instance.r_d_ = r_d;
  instance.r_a_ = r_a;
  instance.geometry_ = std::move(geometry);
  return instance;
}

Instance Instance::WithDefenderBudget(int r_d) const {
  if (r_d < 1 || r_d > num_locations()) {
    throw ValidationError("defender budget r_D must be in [1, " +
                          std::to_string(num_locations()) + "], got " +
                          std::to_string(r_d));
  }
  Instance copy = *this;
  copy.r_d_ = r_d;
  return copy;
}

DetectorSet::DetectorSet(std::vector<int> locations)
    : members(std::move(locations)) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
}

bool DetectorSet::contains(int v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

namespace {

constexpr double kProbabilitySumTol = 1e-9;

}  // namespace

void ValidateDefenderStrategy(const Instance& instance,
                              const MixedDefenderStrategy& strategy) {
  if (strategy.support.empty()) {
    throw ValidationError("defender strategy has empty support");
  }
  std::set<DetectorSet> seen;
  double total = 0.0;
  for (const auto& atom : strategy.support) {
    if (!(atom.prob >= 0.0)) {
      throw ValidationError("defender strategy has a negative probability");
    }
    if (atom.set.size() > instance.r_d()) {
      throw ValidationError("detector set exceeds the defender budget r_D");
    }
    for (int v : atom.set.members) {
      if (v < 0 || v >= instance.num_locations()) {
        throw ValidationError("unknown location index " + std::to_string(v));
      }
    }
    if (!seen.insert(atom.set).second) {
      throw ValidationError("defender strategy repeats a detector set");
    }
    total += atom.prob;
  }
  if (std::abs(total - 1.0) > kProbabilitySumTol) {
    throw ValidationError("defender strategy probabilities sum to " +
                          std::to_string(total));
  }
}

void ValidateAttackStrategy(const Instance& instance,
                            const MixedAttackStrategy& strategy) {
  if (strategy.support.empty()) {
    throw ValidationError("attack strategy has empty support");
  }
  double total = 0.0;
  for (const auto& atom : strategy.support) {
    if (!(atom.prob >= 0.0)) {
      throw ValidationError("attack strategy has a negative probability");
    }
    if (static_cast<int>(atom.targets.size()) > instance.r_a()) {
      throw ValidationError("attack set exceeds the attacker budget r_A");
    }
    for (int e : atom.targets) {
      if (e < 0 || e >= instance.num_components()) {
        throw ValidationError("unknown component index " + std::to_string(e));
      }
    }
    total += atom.prob;
  }
  if (std::abs(total - 1.0) > kProbabilitySumTol) {
    throw ValidationError("attack strategy probabilities sum to " +
                          std::to_string(total));
  }
}

}  // namespace inspection
