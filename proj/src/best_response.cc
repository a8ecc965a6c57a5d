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

#include "inspection/best_response.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "inspection/errors.h"
#include "inspection/game.h"

namespace inspection {
namespace {

// Gains closer than this are treated as ties and resolved by index.
constexpr double kTieTol = 1e-12;

void CheckRho(const Instance& instance, std::span<const double> rho) {
  if (static_cast<int>(rho.size()) != instance.num_components()) {
    throw ValidationError("attack vector has length " +
                          std::to_string(rho.size()) + ", expected " +
                          std::to_string(instance.num_components()));
  }
}

// Depth-first enumeration of r-subsets in lexicographic order, keeping the
// per-component undetection products up to date along the path.
class Enumerator {
 public:
  Enumerator(const Instance& instance, std::span<const double> rho)
      : instance_(instance),
        rho_(rho),
        product_(instance.num_components(), 1.0) {
    double total = 0.0;
    for (double x : rho) total += x;
    value_ = total;
  }

  void Run() {
    path_.clear();
    Recurse(0, instance_.r_d());
  }

  const std::vector<int>& best() const { return best_; }

 private:
  void Recurse(int first, int left) {
    if (left == 0) {
      if (best_.empty() || value_ < best_value_ - kTieTol) {
        best_value_ = value_;
        best_ = path_;
      }
      return;
    }
    const int n = instance_.num_locations();
    for (int v = first; v <= n - left; ++v) {
      const double miss = 1.0 - instance_.p(v);
      const auto& cover = instance_.monitoring(v);
      const std::size_t mark = saved_.size();
      const double saved_value = value_;
      double gain = 0.0;
      for (int e : cover) {
        saved_.push_back(product_[e]);
        gain += rho_[e] * product_[e];
        product_[e] *= miss;
      }
      value_ -= instance_.p(v) * gain;
      path_.push_back(v);
      Recurse(v + 1, left - 1);
      path_.pop_back();
      value_ = saved_value;
      for (std::size_t i = 0; i < cover.size(); ++i) {
        product_[cover[i]] = saved_[mark + i];
      }
      saved_.resize(mark);
    }
  }

  const Instance& instance_;
  std::span<const double> rho_;
  std::vector<double> product_;
  std::vector<double> saved_;
  std::vector<int> path_;
  std::vector<int> best_;
  double value_ = 0.0;
  double best_value_ = 0.0;
};

}  // namespace

std::uint64_t Binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (int i = 0; i < r; ++i) {
    // result * (n - i) is divisible by i + 1; cancel the common factor first
    // so the product stays exact.
    const std::uint64_t divisor = static_cast<std::uint64_t>(i) + 1;
    const std::uint64_t g = std::gcd(result, divisor);
    const std::uint64_t factor =
        static_cast<std::uint64_t>(n - i) / (divisor / g);
    result /= g;
    if (factor != 0 && result > kMax / factor) return kMax;
    result *= factor;
  }
  return result;
}

bool ExactBestResponseAffordable(const Instance& instance, std::uint64_t cap) {
  return Binomial(instance.num_locations(), instance.r_d()) <= cap;
}

BestResponse ExactBestResponse(const Instance& instance,
                               std::span<const double> rho,
                               std::uint64_t cap) {
  CheckRho(instance, rho);
  const std::uint64_t count =
      Binomial(instance.num_locations(), instance.r_d());
  if (count > cap) {
    throw SizeLimitError(
        "exact best response needs C(" +
            std::to_string(instance.num_locations()) + ", " +
            std::to_string(instance.r_d()) + ") = " + std::to_string(count) +
            " evaluations, above the enumeration cap " + std::to_string(cap),
        static_cast<double>(cap));
  }
  // U(., rho) is nonincreasing, so full-budget sets suffice.
  Enumerator enumerator(instance, rho);
  enumerator.Run();
  BestResponse response;
  response.set = DetectorSet(enumerator.best());
  response.value = SetValue(instance, response.set, rho);
  return response;
}

DetectorSet ForwardGreedy(const Instance& instance,
                          std::span<const double> rho) {
  CheckRho(instance, rho);
  const int n = instance.num_locations();
  std::vector<double> product(instance.num_components(), 1.0);
  std::vector<bool> chosen(n, false);
  std::vector<int> members;
  while (static_cast<int>(members.size()) < instance.r_d()) {
    int best = -1;
    double best_gain = 0.0;
    for (int v = 0; v < n; ++v) {
      if (chosen[v]) continue;
      double gain = 0.0;
      for (int e : instance.monitoring(v)) gain += rho[e] * product[e];
      gain *= instance.p(v);
      if (best < 0 || gain > best_gain + kTieTol) {
        best = v;
        best_gain = gain;
      }
    }
    chosen[best] = true;
    members.push_back(best);
    const double miss = 1.0 - instance.p(best);
    for (int e : instance.monitoring(best)) product[e] *= miss;
  }
  return DetectorSet(std::move(members));
}

DetectorSet ReverseGreedy(const Instance& instance,
                          std::span<const double> rho) {
  CheckRho(instance, rho);
  const int n = instance.num_locations();
  const int m = instance.num_components();
  std::vector<bool> in_set(n, true);

  // Perfect detectors (p = 1) are counted rather than multiplied in, so a
  // product that excludes one of them can still be recovered.
  std::vector<int> perfect(m, 0);
  std::vector<double> partial(m, 1.0);
  auto refresh = [&](int e) {
    perfect[e] = 0;
    partial[e] = 1.0;
    for (int w : instance.monitors(e)) {
      if (!in_set[w]) continue;
      if (instance.p(w) >= 1.0) {
        ++perfect[e];
      } else {
        partial[e] *= 1.0 - instance.p(w);
      }
    }
  };
  for (int e = 0; e < m; ++e) refresh(e);

  for (int size = n; size > instance.r_d(); --size) {
    int best = -1;
    double best_loss = 0.0;
    for (int v = 0; v < n; ++v) {
      if (!in_set[v]) continue;
      const double p = instance.p(v);
      double loss = 0.0;
      for (int e : instance.monitoring(v)) {
        double without;
        if (p >= 1.0) {
          without = perfect[e] == 1 ? partial[e] : 0.0;
        } else {
          without = perfect[e] > 0 ? 0.0 : partial[e] / (1.0 - p);
        }
        loss += rho[e] * without;
      }
      loss *= p;
      if (best < 0 || loss < best_loss - kTieTol) {
        best = v;
        best_loss = loss;
      }
    }
    in_set[best] = false;
    for (int e : instance.monitoring(best)) refresh(e);
  }

  std::vector<int> members;
  for (int v = 0; v < n; ++v) {
    if (in_set[v]) members.push_back(v);
  }
  return DetectorSet(std::move(members));
}

double ForwardGreedyMultiplier(double c) {
  if (c < 1e-12) return 1.0;
  return -std::expm1(-c) / c;
}

double GreedyApproximationFactor(const Instance& instance) {
  const double miss = 1.0 - instance.max_detection_prob();
  if (miss <= 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / std::pow(miss, instance.max_monitor_count());
}

CurvatureReport Curvature(const Instance& instance,
                          std::span<const double> rho) {
  CheckRho(instance, rho);
  CurvatureReport report;
  report.d = instance.max_monitor_count();
  report.bound =
      1.0 - std::pow(1.0 - instance.max_detection_prob(), report.d);

  double min_ratio = 1.0;
  bool any_positive = false;
  for (int v = 0; v < instance.num_locations(); ++v) {
    double alone = 0.0;
    double last = 0.0;
    for (int e : instance.monitoring(v)) {
      alone += rho[e];
      double others = 1.0;
      for (int w : instance.monitors(e)) {
        if (w != v) others *= 1.0 - instance.p(w);
      }
      last += rho[e] * others;
    }
    // Both marginal decreases carry the common factor p_v, which cancels.
    if (instance.p(v) * alone > 0.0) {
      any_positive = true;
      min_ratio = std::min(min_ratio, last / alone);
    }
  }
  report.c = any_positive ? std::clamp(1.0 - min_ratio, 0.0, 1.0) : 0.0;
  report.alpha_reverse = report.c >= 1.0
                             ? std::numeric_limits<double>::infinity()
                             : 1.0 / (1.0 - report.c);
  report.forward_multiplier = ForwardGreedyMultiplier(report.c);
  report.forward_additive =
      (1.0 - report.forward_multiplier) * instance.r_a();
  return report;
}

}  // namespace inspection
