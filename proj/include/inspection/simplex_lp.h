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

#ifndef INSPECTION_SIMPLEX_LP_H_
#define INSPECTION_SIMPLEX_LP_H_

#include <limits>
#include <string>
#include <vector>

#include "inspection/errors.h"

namespace inspection {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class RowSense { kLessEqual, kEqual, kGreaterEqual };

// minimize objective . x
// subject to rows[i] . x (sense_i) rhs_i, lower <= x <= upper.
// Lower bounds must be finite; upper bounds may be +infinity.
struct DenseLP {
  std::vector<double> objective;
  std::vector<std::vector<double>> rows;
  std::vector<RowSense> senses;
  std::vector<double> rhs;
  std::vector<double> lower;
  std::vector<double> upper;

  int num_rows() const { return static_cast<int>(rows.size()); }
  int num_cols() const { return static_cast<int>(objective.size()); }

  // Appends a variable with the given bounds and objective coefficient and
  // returns its index. Existing rows get a zero coefficient.
  int AddVariable(double cost, double lower_bound = 0.0,
                  double upper_bound = kInfinity);
  int AddRow(std::vector<double> coefficients, RowSense sense, double rhs);
};

enum class LPStatus { kOptimal, kInfeasible, kUnbounded };

const char* LPStatusName(LPStatus status);

struct LPSolution {
  LPStatus status = LPStatus::kInfeasible;
  std::vector<double> primal;
  // One multiplier per row for the row as written: nonnegative on >= rows
  // and nonpositive on <= rows of this minimization.
  std::vector<double> duals;
  std::vector<double> reduced_costs;
  double objective = 0.0;
  double dual_objective = 0.0;
  double primal_infeasibility = 0.0;
  double dual_infeasibility = 0.0;
  int iterations = 0;
};

class SolverFailureError : public InspectionError {
 public:
  explicit SolverFailureError(const std::string& message)
      : InspectionError(ErrorCode::kSolverFailure, message) {}
};

struct SimplexOptions {
  double pivot_tolerance = 1e-10;
  double feasibility_tolerance = 1e-7;
  double optimality_tolerance = 1e-9;
  int refactor_interval = 64;
  // 0 selects max(20000, 50 * (rows + cols)).
  int max_pivots = 0;
};

// Bounded-variable primal revised simplex with an explicit dense basis
// inverse. Dantzig pricing switches to Bland's rule once degenerate pivots
// exceed 5 * (rows + cols). Throws ValidationError on malformed input and
// SolverFailureError when the pivot cap is hit or the basis goes singular.
LPSolution SolveLP(const DenseLP& lp, const SimplexOptions& options = {});

}  // namespace inspection

#endif  // INSPECTION_SIMPLEX_LP_H_
