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

#ifndef INSPECTION_SELECTION_H_
#define INSPECTION_SELECTION_H_

#include <cstddef>
#include <cstdint>
#include <span>

namespace inspection {

// Running count of element visits, used to check linear-time behavior.
struct VisitCounter {
  std::uint64_t visits = 0;
};

// Returns the k-th largest value (k is 1-based) of `values` using the
// deterministic median-of-medians algorithm with groups of five. The span is
// reordered in place. Every element touched by a scan adds one to `counter`.
double SelectKthLargest(std::span<double> values, std::size_t k,
                        VisitCounter* counter = nullptr);

}  // namespace inspection

#endif  // INSPECTION_SELECTION_H_
