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

#ifndef INSPECTION_INSTANCE_IO_H_
#define INSPECTION_INSTANCE_IO_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "inspection/equilibrium.h"
#include "inspection/errors.h"
#include "inspection/instance.h"

namespace inspection {

class GenerationError : public InspectionError {
 public:
  explicit GenerationError(const std::string& message)
      : InspectionError(ErrorCode::kGeneration, message) {}
};

// Instance document:
//   {"locations": [names], "components": [names],
//    "monitoring": {location: [component names]}, "p": {location: real},
//    "r_D": int, "r_A": int, "geometry": {...}?}
// Schema problems raise ValidationError with a JSON-pointer style location,
// e.g. "/p/v2: expected a number".
Instance ParseInstance(std::string_view text);
std::string SerializeInstance(const Instance& instance);

// Result document:
//   {"method", "value", "sigma_D": [{"set": [names], "prob"}], "rho_A",
//    "certificates": {"attacker_best_response", "defender_best_response"?,
//                     "defender_best_response_kind", "alpha", "epsilon",
//                     "guaranteed"},
//    "diagnostics": {"iterations", "columns", "regret"?, "regret_bound"?,
//                    "wall_ms"?}}
// An infinite alpha is written as null. Timing is omitted unless asked for,
// so that repeated runs produce identical bytes.
std::string SerializeResult(const Instance& instance,
                            const EquilibriumResult& result,
                            bool include_timing = false);

// Inverse of SerializeResult. Only sigma_D is required, which lets a bare
// strategy file be read through the same path.
EquilibriumResult ParseResult(std::string_view text, const Instance& instance);

// A vector of reals given either as a JSON array or as the "rho_A" member of
// an object (so result documents can be fed back in).
std::vector<double> ParseVector(std::string_view text);
std::string SerializeVector(const std::vector<double>& values);

struct GeneratorParams {
  int num_locations = 20;
  int num_components = 60;
  // Monitoring radius in unit-square coordinates.
  double radius = 0.15;
  double p_low = 0.5;
  double p_high = 1.0;
  double r_a_fraction = 0.02;
  // Defaults to max(1, ceil(0.1 n)).
  std::optional<int> r_d;
  std::uint64_t seed = 1;
  int max_retries = 1000;
};

inline constexpr std::string_view kGeneratorRng = "mt19937_64/u53";

// Places locations and straight components uniformly in the unit square; a
// location monitors every component within `radius` of it. Components no
// location can see are redrawn, and so are locations that see nothing.
// Throws GenerationError when a redraw budget runs out.
Instance GenerateGeometric(const GeneratorParams& params);

}  // namespace inspection

#endif  // INSPECTION_INSTANCE_IO_H_
