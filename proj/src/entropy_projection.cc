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

#include "inspection/entropy_projection.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "inspection/errors.h"

namespace inspection {
namespace {

constexpr double kCaseOneSlack = 1e-12;

void CheckInput(std::span<const double> rho_tilde, int r_a) {
  if (r_a < 1) {
    throw DomainError("projection budget must be at least 1");
  }
  for (std::size_t e = 0; e < rho_tilde.size(); ++e) {
    const double x = rho_tilde[e];
    if (!(x > 0.0) || !std::isfinite(x)) {
      throw DomainError("entry " + std::to_string(e) +
                        " must be finite and strictly positive");
    }
  }
}

double ClampedSum(std::span<const double> rho_tilde) {
  double sum = 0.0;
  for (double x : rho_tilde) sum += std::min(x, 1.0);
  return sum;
}

Projection Scale(std::span<const double> rho_tilde, double mu, int k_star,
                 bool scaled) {
  Projection out;
  out.mu = mu;
  out.k_star = k_star;
  out.scaled = scaled;
  out.rho.reserve(rho_tilde.size());
  for (double x : rho_tilde) out.rho.push_back(std::min(mu * x, 1.0));
  return out;
}

}  // namespace

double Divergence(std::span<const double> rho,
                  std::span<const double> rho_tilde) {
  if (rho.size() != rho_tilde.size()) {
    throw DomainError("divergence arguments differ in length");
  }
  double total = 0.0;
  for (std::size_t e = 0; e < rho.size(); ++e) {
    const double a = rho[e];
    const double b = rho_tilde[e];
    if (!(b > 0.0) || !std::isfinite(b)) {
      throw DomainError("reference entry " + std::to_string(e) +
                        " must be finite and strictly positive");
    }
    if (!(a >= 0.0) || !std::isfinite(a)) {
      throw DomainError("entry " + std::to_string(e) +
                        " must be finite and nonnegative");
    }
    if (a > 0.0) total += a * std::log(a / b);
    total += b - a;
  }
  return total;
}

Projection ProjectSorted(std::span<const double> rho_tilde, int r_a) {
  CheckInput(rho_tilde, r_a);
  if (ClampedSum(rho_tilde) <= r_a + kCaseOneSlack) {
    return Scale(rho_tilde, 1.0, 0, false);
  }

  std::vector<double> sorted(rho_tilde.begin(), rho_tilde.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  const std::size_t m = sorted.size();
  // tail[k] = sum of sorted[k..m-1], i.e. the entries after the k-th largest.
  std::vector<double> tail(m + 1, 0.0);
  for (std::size_t j = m; j-- > 0;) tail[j] = tail[j + 1] + sorted[j];

  // g(0) <= r_A always; g is nondecreasing, so the last passing k wins.
  std::size_t k_star = 0;
  const std::size_t k_max = std::min<std::size_t>(r_a, m);
  for (std::size_t k = 1; k <= k_max; ++k) {
    const double g = static_cast<double>(k) + tail[k] / sorted[k - 1];
    if (g <= r_a) k_star = k;
  }
  const double mu = (r_a - static_cast<double>(k_star)) / tail[k_star];
  return Scale(rho_tilde, mu, static_cast<int>(k_star), true);
}

Projection ProjectLinear(std::span<const double> rho_tilde, int r_a,
                         VisitCounter* counter) {
  CheckInput(rho_tilde, r_a);
  const std::size_t m = rho_tilde.size();
  if (counter != nullptr) counter->visits += m;
  if (ClampedSum(rho_tilde) <= r_a + kCaseOneSlack) {
    return Scale(rho_tilde, 1.0, 0, false);
  }

  std::vector<double> scratch(rho_tilde.begin(), rho_tilde.end());
  std::span<double> active(scratch);
  std::size_t k = 0;
  double s = 0.0;
  while (!active.empty()) {
    const std::size_t size = active.size();
    const double pivot =
        SelectKthLargest(active, (size + 1) / 2, counter);

    // Partition into greater | equal | smaller and sum the smaller class.
    if (counter != nullptr) counter->visits += size;
    std::size_t high = 0;
    std::size_t cursor = 0;
    std::size_t low = size;
    while (cursor < low) {
      if (active[cursor] > pivot) {
        std::swap(active[cursor++], active[high++]);
      } else if (active[cursor] < pivot) {
        std::swap(active[cursor], active[--low]);
      } else {
        ++cursor;
      }
    }
    double low_sum = 0.0;
    for (std::size_t j = low; j < size; ++j) low_sum += active[j];
    if (counter != nullptr) counter->visits += size - low;

    const double g = static_cast<double>(k + low) + (low_sum + s) / pivot;
    if (g <= r_a) {
      k += low;
      active = active.subspan(low);
    } else {
      s += pivot * static_cast<double>(low - high) + low_sum;
      active = active.subspan(0, high);
    }
  }
  const double mu = (r_a - static_cast<double>(k)) / s;
  return Scale(rho_tilde, mu, static_cast<int>(k), true);
}

}  // namespace inspection
