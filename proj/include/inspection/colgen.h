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

#ifndef INSPECTION_COLGEN_H_
#define INSPECTION_COLGEN_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "inspection/equilibrium.h"
#include "inspection/errors.h"
#include "inspection/instance.h"
#include "inspection/simplex_lp.h"

namespace inspection {

enum class InitialColumns {
  // The empty set plus forward greedy against the uniform marginal r_A / m.
  kEmptyAndGreedy,
  kEmptyOnly,
};

struct ColGenConfig {
  BestResponseMode pricing = BestResponseMode::kExact;
  double epsilon = 0.0;
  int max_iterations = 10000;
  InitialColumns initial_columns = InitialColumns::kEmptyAndGreedy;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
  bool record_trace = false;
};

class NonconvergenceError : public InspectionError {
 public:
  NonconvergenceError(const std::string& message, EquilibriumResult incumbent)
      : InspectionError(ErrorCode::kNonconvergence, message),
        incumbent_(std::move(incumbent)) {}

  const EquilibriumResult& incumbent() const { return incumbent_; }

 private:
  EquilibriumResult incumbent_;
};

class NumericalInconsistencyError : public InspectionError {
 public:
  explicit NumericalInconsistencyError(const std::string& message)
      : InspectionError(ErrorCode::kNumericalInconsistency, message) {}
};

// Layout of the restricted master problem produced by BuildRestrictedMaster:
// variables are sigma_S for each column, then lambda_e, then gamma; rows are
// the m coverage rows followed by the convexity row.
struct MasterLayout {
  int num_columns = 0;
  int num_components = 0;
  int lambda(int e) const { return num_columns + e; }
  int gamma() const { return num_columns + num_components; }
  int convexity_row() const { return num_components; }
};

// minimize r_A gamma + sum_e lambda_e
// s.t.     gamma + lambda_e - sum_S sigma_S u(S, e) >= 0   for every e
//          sum_S sigma_S = 1,  all variables >= 0.
// The coverage-row duals are the attacker marginals, the convexity-row dual
// is nu.
DenseLP BuildRestrictedMaster(const Instance& instance,
                              std::span<const DetectorSet> columns);

// -nu + U(S, rho): the reduced cost of sigma_S in the master problem.
double ReducedCost(const Instance& instance, const DetectorSet& set,
                   std::span<const double> rho, double nu);

// Column generation on the master problem with the pricing oracle chosen in
// `config`; stops once the priced column has reduced cost >= -epsilon.
EquilibriumResult SolveColGen(const Instance& instance,
                              const ColGenConfig& config);

}  // namespace inspection

#endif  // INSPECTION_COLGEN_H_
