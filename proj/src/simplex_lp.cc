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

#include "inspection/simplex_lp.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace inspection {

int DenseLP::AddVariable(double cost, double lower_bound,
                         double upper_bound) {
  objective.push_back(cost);
  lower.push_back(lower_bound);
  upper.push_back(upper_bound);
  for (auto& row : rows) row.push_back(0.0);
  return num_cols() - 1;
}

int DenseLP::AddRow(std::vector<double> coefficients, RowSense sense,
                    double value) {
  coefficients.resize(objective.size(), 0.0);
  rows.push_back(std::move(coefficients));
  senses.push_back(sense);
  rhs.push_back(value);
  return num_rows() - 1;
}

const char* LPStatusName(LPStatus status) {
  switch (status) {
    case LPStatus::kOptimal:
      return "optimal";
    case LPStatus::kInfeasible:
      return "infeasible";
    case LPStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

namespace {

void ValidateLP(const DenseLP& lp) {
  const int m = lp.num_rows();
  const int n = lp.num_cols();
  if (static_cast<int>(lp.senses.size()) != m ||
      static_cast<int>(lp.rhs.size()) != m ||
      static_cast<int>(lp.lower.size()) != n ||
      static_cast<int>(lp.upper.size()) != n) {
    throw ValidationError("LP dimensions are inconsistent");
  }
  for (int j = 0; j < n; ++j) {
    if (std::isnan(lp.objective[j]) || std::isnan(lp.lower[j]) ||
        std::isnan(lp.upper[j])) {
      throw ValidationError("LP contains NaN in column " + std::to_string(j));
    }
    if (!std::isfinite(lp.lower[j])) {
      throw ValidationError("LP column " + std::to_string(j) +
                            " needs a finite lower bound");
    }
    if (lp.upper[j] < lp.lower[j]) {
      throw ValidationError("LP column " + std::to_string(j) +
                            " has upper bound below lower bound");
    }
  }
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(lp.rows[i].size()) != n) {
      throw ValidationError("LP row " + std::to_string(i) +
                            " has the wrong length");
    }
    if (!std::isfinite(lp.rhs[i])) {
      throw ValidationError("LP row " + std::to_string(i) +
                            " has a non-finite right-hand side");
    }
    for (double a : lp.rows[i]) {
      if (!std::isfinite(a)) {
        throw ValidationError("LP row " + std::to_string(i) +
                              " has a non-finite coefficient");
      }
    }
  }
}

enum class VarStatus { kBasic, kAtLower, kAtUpper };

// Equality form A x + (+-1) s + (+-1) a = b over structural variables x,
// one logical s per row, and artificials a added only where the all-slack
// start is infeasible.
class RevisedSimplex {
 public:
  RevisedSimplex(const DenseLP& lp, const SimplexOptions& options)
      : lp_(lp),
        options_(options),
        m_(lp.num_rows()),
        n_(lp.num_cols()) {
    max_pivots_ = options.max_pivots > 0
                      ? options.max_pivots
                      : std::max(20000, 50 * (m_ + n_ + m_));
  }

  LPSolution Solve() {
    Initialize();
    LPSolution solution;
    if (num_artificials() > 0) {
      SetPhaseOneCosts();
      Iterate(/*phase_one=*/true);
      double infeasibility = 0.0;
      for (int k = 0; k < num_artificials(); ++k) {
        infeasibility += x_[first_artificial() + k];
      }
      double scale = 1.0;
      for (double b : lp_.rhs) scale = std::max(scale, std::abs(b));
      if (infeasibility > options_.feasibility_tolerance * scale) {
        solution.status = LPStatus::kInfeasible;
        solution.iterations = pivots_;
        return solution;
      }
      for (int k = 0; k < num_artificials(); ++k) {
        const int j = first_artificial() + k;
        upper_[j] = 0.0;
        if (status_[j] != VarStatus::kBasic) {
          status_[j] = VarStatus::kAtLower;
          x_[j] = 0.0;
        }
      }
      Refactor();
    }
    SetPhaseTwoCosts();
    if (!Iterate(/*phase_one=*/false)) {
      solution.status = LPStatus::kUnbounded;
      solution.iterations = pivots_;
      return solution;
    }
    Refactor();
    return Extract();
  }

 private:
  int num_artificials() const {
    return static_cast<int>(artificial_rows_.size());
  }
  int first_artificial() const { return n_ + m_; }
  int total() const { return n_ + m_ + num_artificials(); }

  // Column j of the equality-form matrix, dotted with y.
  double ColumnDot(const std::vector<double>& y, int j) const {
    if (j < n_) {
      double s = 0.0;
      for (int i = 0; i < m_; ++i) s += y[i] * lp_.rows[i][j];
      return s;
    }
    if (j < n_ + m_) return y[j - n_] * slack_sign_[j - n_];
    const int k = j - first_artificial();
    return y[artificial_rows_[k]] * artificial_sign_[k];
  }

  // Adds scale * column j to v.
  void ColumnAxpy(double scale, int j, std::vector<double>& v) const {
    if (j < n_) {
      for (int i = 0; i < m_; ++i) v[i] += scale * lp_.rows[i][j];
    } else if (j < n_ + m_) {
      v[j - n_] += scale * slack_sign_[j - n_];
    } else {
      const int k = j - first_artificial();
      v[artificial_rows_[k]] += scale * artificial_sign_[k];
    }
  }

  void Initialize() {
    slack_sign_.assign(m_, 1.0);
    lower_ = lp_.lower;
    upper_ = lp_.upper;
    for (int i = 0; i < m_; ++i) {
      slack_sign_[i] = lp_.senses[i] == RowSense::kGreaterEqual ? -1.0 : 1.0;
      lower_.push_back(0.0);
      upper_.push_back(lp_.senses[i] == RowSense::kEqual ? 0.0 : kInfinity);
    }
    x_.assign(n_ + m_, 0.0);
    status_.assign(n_ + m_, VarStatus::kAtLower);
    for (int j = 0; j < n_; ++j) x_[j] = lower_[j];

    basis_.assign(m_, -1);
    for (int i = 0; i < m_; ++i) {
      double residual = lp_.rhs[i];
      for (int j = 0; j < n_; ++j) residual -= lp_.rows[i][j] * x_[j];
      const int slack = n_ + i;
      const double value = residual / slack_sign_[i];
      if (value >= -options_.feasibility_tolerance &&
          value <= upper_[slack] + options_.feasibility_tolerance) {
        basis_[i] = slack;
        status_[slack] = VarStatus::kBasic;
        x_[slack] = value;
      } else {
        artificial_rows_.push_back(i);
        artificial_sign_.push_back(residual >= 0.0 ? 1.0 : -1.0);
      }
    }
    for (int k = 0; k < num_artificials(); ++k) {
      const int row = artificial_rows_[k];
      const int j = first_artificial() + k;
      lower_.push_back(0.0);
      upper_.push_back(kInfinity);
      status_.push_back(VarStatus::kBasic);
      x_.push_back(0.0);
      basis_[row] = j;
    }
    Refactor();
  }

  void SetPhaseOneCosts() {
    cost_.assign(total(), 0.0);
    for (int k = 0; k < num_artificials(); ++k) {
      cost_[first_artificial() + k] = 1.0;
    }
  }

  void SetPhaseTwoCosts() {
    cost_.assign(total(), 0.0);
    for (int j = 0; j < n_; ++j) cost_[j] = lp_.objective[j];
  }

  // Rebuilds the basis inverse by Gauss-Jordan elimination with partial
  // pivoting and recomputes the basic values from the nonbasic ones.
  void Refactor() {
    std::vector<double> work(static_cast<std::size_t>(m_) * 2 * m_, 0.0);
    const int width = 2 * m_;
    for (int c = 0; c < m_; ++c) {
      std::vector<double> column(m_, 0.0);
      ColumnAxpy(1.0, basis_[c], column);
      for (int i = 0; i < m_; ++i) work[i * width + c] = column[i];
    }
    for (int i = 0; i < m_; ++i) work[i * width + m_ + i] = 1.0;
    for (int c = 0; c < m_; ++c) {
      int pivot = c;
      for (int i = c + 1; i < m_; ++i) {
        if (std::abs(work[i * width + c]) > std::abs(work[pivot * width + c])) {
          pivot = i;
        }
      }
      const double value = work[pivot * width + c];
      if (std::abs(value) < 1e-13) {
        throw SolverFailureError("singular basis during refactorization after " +
                                 std::to_string(pivots_) + " pivots");
      }
      if (pivot != c) {
        for (int k = 0; k < width; ++k) {
          std::swap(work[c * width + k], work[pivot * width + k]);
        }
      }
      for (int k = 0; k < width; ++k) work[c * width + k] /= value;
      for (int i = 0; i < m_; ++i) {
        if (i == c) continue;
        const double factor = work[i * width + c];
        if (factor == 0.0) continue;
        for (int k = 0; k < width; ++k) {
          work[i * width + k] -= factor * work[c * width + k];
        }
      }
    }
    binv_.assign(static_cast<std::size_t>(m_) * m_, 0.0);
    for (int i = 0; i < m_; ++i) {
      for (int k = 0; k < m_; ++k) binv_[i * m_ + k] = work[i * width + m_ + k];
    }

    std::vector<double> rhs = lp_.rhs;
    for (int j = 0; j < total(); ++j) {
      if (status_[j] != VarStatus::kBasic && x_[j] != 0.0) {
        ColumnAxpy(-x_[j], j, rhs);
      }
    }
    for (int i = 0; i < m_; ++i) {
      double s = 0.0;
      for (int k = 0; k < m_; ++k) s += binv_[i * m_ + k] * rhs[k];
      x_[basis_[i]] = s;
    }
    since_refactor_ = 0;
  }

  std::vector<double> Duals() const {
    std::vector<double> y(m_, 0.0);
    for (int r = 0; r < m_; ++r) {
      const double cb = cost_[basis_[r]];
      if (cb == 0.0) continue;
      for (int i = 0; i < m_; ++i) y[i] += cb * binv_[r * m_ + i];
    }
    return y;
  }

  // Returns false when the problem is unbounded.
  bool Iterate(bool phase_one) {
    const int degenerate_limit = 5 * (m_ + total());
    int degenerate = 0;
    bool bland = false;
    std::vector<double> alpha(m_);
    std::vector<double> column(m_);
    while (true) {
      if (pivots_ >= max_pivots_) {
        throw SolverFailureError(
            std::string("pivot cap of ") + std::to_string(max_pivots_) +
            " reached in phase " + (phase_one ? "1" : "2") + " (" +
            std::to_string(degenerate) + " degenerate pivots, Bland " +
            (bland ? "on" : "off") + ")");
      }
      const std::vector<double> y = Duals();
      int entering = -1;
      double best_score = 0.0;
      for (int j = 0; j < total(); ++j) {
        if (status_[j] == VarStatus::kBasic) continue;
        if (upper_[j] - lower_[j] <= 0.0) continue;
        const double d = cost_[j] - ColumnDot(y, j);
        double score = 0.0;
        if (status_[j] == VarStatus::kAtLower &&
            d < -options_.optimality_tolerance) {
          score = -d;
        } else if (status_[j] == VarStatus::kAtUpper &&
                   d > options_.optimality_tolerance) {
          score = d;
        }
        if (score <= 0.0) continue;
        if (bland) {
          entering = j;
          break;
        }
        if (score > best_score) {
          best_score = score;
          entering = j;
        }
      }
      if (entering < 0) return true;

      const double dir =
          status_[entering] == VarStatus::kAtLower ? 1.0 : -1.0;
      std::fill(column.begin(), column.end(), 0.0);
      ColumnAxpy(1.0, entering, column);
      for (int i = 0; i < m_; ++i) {
        double s = 0.0;
        for (int k = 0; k < m_; ++k) s += binv_[i * m_ + k] * column[k];
        alpha[i] = dir * s;
      }

      // Ratio test: basic i moves by -t * alpha[i].
      int leave = -1;
      double step = kInfinity;
      double leave_pivot = 0.0;
      for (int i = 0; i < m_; ++i) {
        const double a = alpha[i];
        const int b = basis_[i];
        double limit;
        if (a > options_.pivot_tolerance) {
          limit = (x_[b] - lower_[b]) / a;
        } else if (a < -options_.pivot_tolerance && std::isfinite(upper_[b])) {
          limit = (upper_[b] - x_[b]) / -a;
        } else {
          continue;
        }
        limit = std::max(limit, 0.0);
        bool take = false;
        if (leave < 0 || limit < step - 1e-12) {
          take = true;
        } else if (limit <= step + 1e-12) {
          take = bland ? b < basis_[leave] : std::abs(a) > leave_pivot;
        }
        if (take) {
          leave = i;
          step = limit;
          leave_pivot = std::abs(a);
        }
      }
      const double flip = upper_[entering] - lower_[entering];
      if (leave < 0 && !std::isfinite(flip)) {
        if (phase_one) {
          throw SolverFailureError("phase 1 reported an unbounded ray");
        }
        return false;
      }

      ++pivots_;
      if (leave < 0 || flip <= step) {
        for (int i = 0; i < m_; ++i) x_[basis_[i]] -= flip * alpha[i];
        if (status_[entering] == VarStatus::kAtLower) {
          status_[entering] = VarStatus::kAtUpper;
          x_[entering] = upper_[entering];
        } else {
          status_[entering] = VarStatus::kAtLower;
          x_[entering] = lower_[entering];
        }
        continue;
      }

      if (step < 1e-12) {
        if (++degenerate > degenerate_limit) bland = true;
      }
      for (int i = 0; i < m_; ++i) x_[basis_[i]] -= step * alpha[i];
      x_[entering] += dir * step;
      const int leaving = basis_[leave];
      if (alpha[leave] > 0.0) {
        status_[leaving] = VarStatus::kAtLower;
        x_[leaving] = lower_[leaving];
      } else {
        status_[leaving] = VarStatus::kAtUpper;
        x_[leaving] = upper_[leaving];
      }
      status_[entering] = VarStatus::kBasic;
      basis_[leave] = entering;

      // Product-form update of the inverse; alpha was scaled by dir.
      const double pivot = alpha[leave] * dir;
      for (int k = 0; k < m_; ++k) binv_[leave * m_ + k] /= pivot;
      for (int i = 0; i < m_; ++i) {
        if (i == leave) continue;
        const double factor = alpha[i] * dir;
        if (factor == 0.0) continue;
        for (int k = 0; k < m_; ++k) {
          binv_[i * m_ + k] -= factor * binv_[leave * m_ + k];
        }
      }
      if (++since_refactor_ >= options_.refactor_interval) Refactor();
    }
  }

  LPSolution Extract() const {
    LPSolution solution;
    solution.status = LPStatus::kOptimal;
    solution.iterations = pivots_;
    solution.primal.assign(x_.begin(), x_.begin() + n_);
    solution.duals = Duals();

    for (int j = 0; j < n_; ++j) solution.objective += lp_.objective[j] * x_[j];

    double dual_objective = 0.0;
    for (int i = 0; i < m_; ++i) dual_objective += lp_.rhs[i] * solution.duals[i];
    double dual_infeasibility = 0.0;
    solution.reduced_costs.assign(n_, 0.0);
    for (int j = 0; j < total(); ++j) {
      const double d = cost_[j] - ColumnDot(solution.duals, j);
      if (j < n_) solution.reduced_costs[j] = d;
      if (status_[j] == VarStatus::kBasic) {
        dual_infeasibility = std::max(dual_infeasibility, std::abs(d));
        continue;
      }
      // Bounded variables contribute d * bound to the dual objective; a
      // sign mismatch on an unbounded side is dual infeasibility.
      if (d >= 0.0) {
        dual_objective += d * lower_[j];
        if (status_[j] == VarStatus::kAtUpper && upper_[j] > lower_[j]) {
          dual_infeasibility = std::max(dual_infeasibility, d);
        }
      } else {
        if (std::isfinite(upper_[j])) {
          dual_objective += d * upper_[j];
        } else {
          dual_infeasibility = std::max(dual_infeasibility, -d);
        }
      }
    }
    solution.dual_objective = dual_objective;
    solution.dual_infeasibility = dual_infeasibility;

    double primal_infeasibility = 0.0;
    for (int i = 0; i < m_; ++i) {
      double activity = 0.0;
      for (int j = 0; j < n_; ++j) activity += lp_.rows[i][j] * x_[j];
      const double gap = activity - lp_.rhs[i];
      double violation = 0.0;
      switch (lp_.senses[i]) {
        case RowSense::kLessEqual:
          violation = std::max(gap, 0.0);
          break;
        case RowSense::kGreaterEqual:
          violation = std::max(-gap, 0.0);
          break;
        case RowSense::kEqual:
          violation = std::abs(gap);
          break;
      }
      primal_infeasibility = std::max(primal_infeasibility, violation);
    }
    for (int j = 0; j < n_; ++j) {
      primal_infeasibility =
          std::max({primal_infeasibility, lower_[j] - x_[j], x_[j] - upper_[j]});
    }
    solution.primal_infeasibility = primal_infeasibility;

    if (primal_infeasibility > options_.feasibility_tolerance ||
        dual_infeasibility > options_.feasibility_tolerance ||
        std::abs(solution.objective - solution.dual_objective) >
            1e-6 * std::max(1.0, std::abs(solution.objective))) {
      throw SolverFailureError(
          "optimality certificate failed: primal infeasibility " +
          std::to_string(primal_infeasibility) + ", dual infeasibility " +
          std::to_string(dual_infeasibility) + ", duality gap " +
          std::to_string(solution.objective - solution.dual_objective));
    }
    return solution;
  }

  const DenseLP& lp_;
  SimplexOptions options_;
  int m_;
  int n_;
  int max_pivots_ = 0;
  int pivots_ = 0;
  int since_refactor_ = 0;
  std::vector<double> slack_sign_;
  std::vector<int> artificial_rows_;
  std::vector<double> artificial_sign_;
  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<double> cost_;
  std::vector<double> x_;
  std::vector<VarStatus> status_;
  std::vector<int> basis_;
  std::vector<double> binv_;  // row-major m x m
};

}  // namespace

LPSolution SolveLP(const DenseLP& lp, const SimplexOptions& options) {
  ValidateLP(lp);
  if (lp.num_rows() == 0) {
    // Without rows every variable sits at its cheapest bound.
    LPSolution solution;
    solution.status = LPStatus::kOptimal;
    solution.primal.resize(lp.num_cols());
    solution.reduced_costs = lp.objective;
    for (int j = 0; j < lp.num_cols(); ++j) {
      if (lp.objective[j] >= 0.0) {
        solution.primal[j] = lp.lower[j];
      } else if (std::isfinite(lp.upper[j])) {
        solution.primal[j] = lp.upper[j];
      } else {
        solution.status = LPStatus::kUnbounded;
        return solution;
      }
      solution.objective += lp.objective[j] * solution.primal[j];
    }
    solution.dual_objective = solution.objective;
    return solution;
  }
  RevisedSimplex simplex(lp, options);
  return simplex.Solve();
}

}  // namespace inspection
