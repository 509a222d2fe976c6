#pragma once

#include <optional>
#include <vector>

#include "pdegreedy/greedy_state.hpp"
#include "pdegreedy/problem.hpp"

namespace pdegreedy {

/// s_n = sum_j alpha_j v_{lambda_j} in the standard (Riesz representer) basis.
struct CollocationModel {
  Kernel kernel;
  OperatorSpec op;
  std::vector<Functional> selected;
  Eigen::VectorXd alpha;
  /// Data the model interpolates at each selected functional.
  Eigen::VectorXd targets;

  Index size() const { return static_cast<Index>(selected.size()); }
};

/// alpha = T^T c over the first n selections (all of them by default).
CollocationModel to_standard_coefficients(const GreedyState& state, const CandidateSet& candidates,
                                          std::optional<Index> n = std::nullopt);

/// s_n(x), or (L s_n)(x) when apply_L is set.
double evaluate(const CollocationModel& model, const Eigen::Ref<const Eigen::VectorXd>& x, bool apply_L);
Eigen::VectorXd evaluate_points(const CollocationModel& model, const PointCloud& points, bool apply_L);

struct ErrorReport {
  /// sup |f - L s_n| over the interior test cloud.
  double interior_residual = 0.0;
  /// sup |g - s_n| over the boundary test cloud.
  double boundary_residual = 0.0;
  /// Maximum-principle constant; unknown, reported as 1.
  double max_principle_constant = 1.0;
  double max_principle_bound = 0.0;
  std::optional<double> solution_error;
  std::optional<double> relative_solution_error;
};

ErrorReport error_report(const CollocationModel& model, const Problem& problem, const PointCloud& test_interior,
                         const PointCloud& test_boundary);

/// sup_x |u(x) - s_n(x)| over points for n = 1..state.n(), reusing one representer matrix.
std::vector<double> solution_error_history(const GreedyState& state, const CandidateSet& candidates,
                                           const PointCloud& points, const ScalarField& truth);

}  // namespace pdegreedy
