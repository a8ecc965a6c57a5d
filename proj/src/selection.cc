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

#include "inspection/selection.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace inspection {
namespace {

void Count(VisitCounter* counter, std::size_t n) {
  if (counter != nullptr) counter->visits += n;
}

void InsertionSortDescending(std::span<double> values) {
  for (std::size_t i = 1; i < values.size(); ++i) {
    const double x = values[i];
    std::size_t j = i;
    while (j > 0 && values[j - 1] < x) {
      values[j] = values[j - 1];
      --j;
    }
    values[j] = x;
  }
}

// `rank` is 0-based in descending order.
double Select(std::span<double> values, std::size_t rank,
              VisitCounter* counter) {
  while (true) {
    const std::size_t n = values.size();
    if (n <= 5) {
      Count(counter, n);
      InsertionSortDescending(values);
      return values[rank];
    }

    // Gather the median of every group of five at the front.
    std::size_t groups = 0;
    for (std::size_t i = 0; i < n; i += 5) {
      const std::size_t len = std::min<std::size_t>(5, n - i);
      Count(counter, len);
      auto group = values.subspan(i, len);
      InsertionSortDescending(group);
      std::swap(values[groups++], group[(len - 1) / 2]);
    }
    const double pivot =
        Select(values.subspan(0, groups), (groups - 1) / 2, counter);

    // Three-way partition: greater | equal | smaller.
    Count(counter, n);
    std::size_t high = 0;
    std::size_t cursor = 0;
    std::size_t low = n;
    while (cursor < low) {
      if (values[cursor] > pivot) {
        std::swap(values[cursor++], values[high++]);
      } else if (values[cursor] < pivot) {
        std::swap(values[cursor], values[--low]);
      } else {
        ++cursor;
      }
    }
    if (rank < high) {
      values = values.subspan(0, high);
    } else if (rank < low) {
      return pivot;
    } else {
      rank -= low;
      values = values.subspan(low);
    }
  }
}

}  // namespace

double SelectKthLargest(std::span<double> values, std::size_t k,
                        VisitCounter* counter) {
  if (k < 1 || k > values.size()) {
    throw std::out_of_range("selection rank outside [1, size]");
  }
  return Select(values, k - 1, counter);
}

}  // namespace inspection
