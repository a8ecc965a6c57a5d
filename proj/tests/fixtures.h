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

#ifndef INSPECTION_TESTS_FIXTURES_H_
#define INSPECTION_TESTS_FIXTURES_H_

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "inspection/instance.h"

namespace fixtures {

inline std::vector<std::string> Names(const std::string& prefix, int count) {
  std::vector<std::string> names;
  for (int i = 1; i <= count; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

// Four locations and seven components with overlapping monitoring sets:
// v1 {e1,e2}, v2 {e2,e3}, v3 {e3..e7}, v4 {e5}.
inline inspection::Instance SampleNetwork(double p = 0.5, int r_d = 2, int r_a = 2) {
  return inspection::Instance::Create(
      Names("v", 4), Names("e", 7), {{0, 1}, {1, 2}, {2, 3, 4, 5, 6}, {4}},
      std::vector<double>(4, p), r_d, r_a);
}

inline inspection::Instance SingleLocation(double p) {
  return inspection::Instance::Create({"v1"}, {"e1"}, {{0}}, {p}, 1, 1);
}

// Two locations each seeing one of two components, perfect detection.
inline inspection::Instance MatchingPennies() {
  return inspection::Instance::Create(Names("v", 2), Names("e", 2), {{0}, {1}},
                                      {1.0, 1.0}, 1, 1);
}

struct RandomSpec {
  int max_locations = 8;
  int max_components = 10;
  int max_r_d = 3;
  int max_r_a = 2;
  double p_low = 0.05;
  double p_high = 1.0;
  // Chance that a location gets perfect detection (only if p_high == 1).
  double perfect_share = 0.1;
  int min_locations = 1;
};

inline double Uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int UniformInt(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline inspection::Instance RandomInstance(std::mt19937_64& rng,
                                           const RandomSpec& spec) {
  const int n = UniformInt(rng, spec.min_locations, spec.max_locations);
  const int m = UniformInt(rng, 1, spec.max_components);
  const double density = Uniform(rng, 0.15, 0.6);
  std::vector<std::vector<int>> monitoring(n);
  std::vector<bool> seen(m, false);
  for (int v = 0; v < n; ++v) {
    for (int e = 0; e < m; ++e) {
      if (Uniform(rng, 0, 1) < density) {
        monitoring[v].push_back(e);
        seen[e] = true;
      }
    }
    if (monitoring[v].empty()) {
      const int e = UniformInt(rng, 0, m - 1);
      monitoring[v].push_back(e);
      seen[e] = true;
    }
  }
  for (int e = 0; e < m; ++e) {
    if (!seen[e]) monitoring[UniformInt(rng, 0, n - 1)].push_back(e);
  }
  std::vector<double> p(n);
  for (int v = 0; v < n; ++v) {
    p[v] = (spec.p_high == 1.0 && Uniform(rng, 0, 1) < spec.perfect_share)
               ? 1.0
               : Uniform(rng, spec.p_low, spec.p_high);
  }
  const int r_d = UniformInt(rng, 1, std::min(n, spec.max_r_d));
  const int r_a = UniformInt(rng, 1, std::min(m, spec.max_r_a));
  return inspection::Instance::Create(Names("v", n), Names("e", m),
                                      std::move(monitoring), std::move(p), r_d,
                                      r_a);
}

// A point of the capped simplex, with some entries pinned at 0 or 1 and
// some draws pushed onto the budget face.
inline std::vector<double> RandomMarginal(std::mt19937_64& rng, int m,
                                          int r_a) {
  std::vector<double> rho(m);
  for (double& x : rho) {
    const double u = Uniform(rng, 0, 1);
    x = u < 0.1 ? 0.0 : (u < 0.2 ? 1.0 : Uniform(rng, 0, 1));
  }
  double total = 0.0;
  for (double x : rho) total += x;
  if (total > r_a || Uniform(rng, 0, 1) < 0.3) {
    const double scale = total > 0 ? std::min(1.0, r_a / total) : 1.0;
    for (double& x : rho) x *= scale;
  }
  return rho;
}

}  // namespace fixtures

#endif  // INSPECTION_TESTS_FIXTURES_H_
