#pragma once

#include <Eigen/Core>

#include <vector>

#include "pdegreedy/functional.hpp"

namespace pdegreedy {

/// Incremental Newton-basis data over a fixed candidate set of size M.
///
/// newton(i, j) = lambda_i(N_j) for candidate i and Newton function j, and
/// N_j = sum_{l <= j} transform(j, l) * v_{lambda_selected[l]}. Only the first n() columns of
/// newton and the leading n() x n() block of transform are meaningful; the rest is capacity.
struct GreedyState {
  std::vector<Index> selected;
  Eigen::MatrixXd newton;
  Eigen::MatrixXd transform;
  Eigen::VectorXd coeffs;
  /// Squared power values P_n(lambda_i)^2.
  Eigen::ArrayXd p2;
  /// lambda_i(u - s_n); starts at rhs since s_0 = 0.
  Eigen::ArrayXd res;
  Eigen::ArrayXd weights;
  Eigen::VectorXd rhs;
  std::vector<char> is_selected;
  double initial_max_p2 = 0.0;
  double initial_max_abs_rhs = 0.0;

  Index n() const { return static_cast<Index>(selected.size()); }
  Index size() const { return p2.size(); }

  auto newton_block() const { return newton.leftCols(n()); }
  auto transform_block() const { return transform.topLeftCorner(n(), n()); }
  auto coeff_block() const { return coeffs.head(n()); }
};

}  // namespace pdegreedy
