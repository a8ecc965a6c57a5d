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

#ifndef INSPECTION_INSTANCE_H_
#define INSPECTION_INSTANCE_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace inspection {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct Segment {
  Point a;
  Point b;
};

// Provenance of a synthetically generated instance. Kept so that fixtures
// can be regenerated bit-for-bit.
struct Geometry {
  double radius = 0.0;
  std::uint64_t seed = 0;
  std::string rng;
  std::vector<Point> locations;
  std::vector<Segment> components;
};

// Immutable description of the inspection game: n locations, m components,
// the monitoring set C_v and detection probability p_v of every location and
// the two resource budgets. Names map to dense 0-based indices.
class Instance {
 public:
  // Validates every model invariant and throws ValidationError with a
  // diagnostic naming the offending location or component.
  static Instance Create(std::vector<std::string> location_names,
                         std::vector<std::string> component_names,
                         std::vector<std::vector<int>> monitoring,
                         std::vector<double> detection_probs, int r_d,
                         int r_a, std::optional<Geometry> geometry = {});

  int num_locations() const { return static_cast<int>(p_.size()); }
  int num_components() const {
    return static_cast<int>(component_names_.size());
  }
  int r_d() const { return r_d_; }
  int r_a() const { return r_a_; }

  // Sorted component indices monitored from location v.
  const std::vector<int>& monitoring(int v) const { return monitoring_[v]; }
  // Sorted location indices that monitor component e.
  const std::vector<int>& monitors(int e) const { return monitors_[e]; }
  double p(int v) const { return p_[v]; }
  const std::vector<double>& detection_probs() const { return p_; }

  const std::vector<std::string>& location_names() const {
    return location_names_;
  }
  const std::vector<std::string>& component_names() const {
    return component_names_;
  }
  const std::optional<Geometry>& geometry() const { return geometry_; }

  // Maximum number of locations able to monitor a single component.
  int max_monitor_count() const { return max_monitor_count_; }
  double max_detection_prob() const { return max_p_; }

  // Same instance with a different defender budget.
  Instance WithDefenderBudget(int r_d) const;

 private:
  Instance() = default;

  std::vector<std::string> location_names_;
  std::vector<std::string> component_names_;
  std::vector<std::vector<int>> monitoring_;
  std::vector<std::vector<int>> monitors_;
  std::vector<double> p_;
  int r_d_ = 1;
  int r_a_ = 1;
  int max_monitor_count_ = 0;
  double max_p_ = 0.0;
  std::optional<Geometry> geometry_;
};

// A pure defender action: a set of location indices, kept sorted so that the
// member list doubles as a canonical key.
struct DetectorSet {
  std::vector<int> members;

  DetectorSet() = default;
  explicit DetectorSet(std::vector<int> locations);

  int size() const { return static_cast<int>(members.size()); }
  bool contains(int v) const;

  friend auto operator<=>(const DetectorSet&, const DetectorSet&) = default;
  friend bool operator==(const DetectorSet&, const DetectorSet&) = default;
};

struct DefenderAtom {
  DetectorSet set;
  double prob = 0.0;
};

struct MixedDefenderStrategy {
  std::vector<DefenderAtom> support;

  static MixedDefenderStrategy PointMass(DetectorSet set) {
    return {{DefenderAtom{std::move(set), 1.0}}};
  }
};

struct AttackAtom {
  std::vector<int> targets;  // sorted component indices
  double prob = 0.0;
};

struct MixedAttackStrategy {
  std::vector<AttackAtom> support;
};

// Throws ValidationError unless every set respects |S| <= r_D, sets are
// pairwise distinct, and probabilities are nonnegative summing to one.
void ValidateDefenderStrategy(const Instance& instance,
                              const MixedDefenderStrategy& strategy);
void ValidateAttackStrategy(const Instance& instance,
                            const MixedAttackStrategy& strategy);

}  // namespace inspection

#endif  // INSPECTION_INSTANCE_H_
