#include "pdegreedy/model.hpp"

#include <algorithm>
#include <cmath>

namespace pdegreedy {

CollocationModel to_standard_coefficients(const GreedyState& state, const CandidateSet& candidates,
                                          std::optional<Index> n) {
  const Index count = n.value_or(state.n());
  if (count < 0 || count > state.n()) throw UsageError("to_standard_coefficients: n out of range");
  CollocationModel model{candidates.kernel(), candidates.op(), {}, Eigen::VectorXd::Zero(count),
                         Eigen::VectorXd(count)};
  model.selected.reserve(static_cast<std::size_t>(count));
  for (Index j = 0; j < count; ++j) {
    const Index idx = state.selected[static_cast<std::size_t>(j)];
    model.selected.push_back(candidates[idx]);
    model.targets(j) = state.rhs(idx);
  }
  if (count > 0) {
    model.alpha.noalias() =
        state.transform.topLeftCorner(count, count).transpose() * state.coeffs.head(count);
  }
  return model;
}

double evaluate(const CollocationModel& model, const Eigen::Ref<const Eigen::VectorXd>& x, bool apply_L) {
  double acc = 0.0;
  for (Index j = 0; j < model.size(); ++j) {
    acc += model.alpha(j) * representer_eval(model.kernel, model.op, model.selected[static_cast<std::size_t>(j)], x,
                                             apply_L);
  }
  return acc;
}

Eigen::VectorXd evaluate_points(const CollocationModel& model, const PointCloud& points, bool apply_L) {
  Eigen::VectorXd out(points.cols());
  for (Index t = 0; t < points.cols(); ++t) out(t) = evaluate(model, points.col(t), apply_L);
  return out;
}

ErrorReport error_report(const CollocationModel& model, const Problem& problem, const PointCloud& test_interior,
                         const PointCloud& test_boundary) {
  ErrorReport rep;
  double sol_err = 0.0, sol_max = 0.0;
  const bool has_truth = problem.true_solution.has_value();
  auto track_truth = [&](const Eigen::Ref<const Eigen::VectorXd>& x, double s) {
    if (!has_truth) return;
    const double u = (*problem.true_solution)(x);
    sol_err = std::max(sol_err, std::abs(u - s));
    sol_max = std::max(sol_max, std::abs(u));
  };
  for (Index t = 0; t < test_interior.cols(); ++t) {
    const auto x = test_interior.col(t);
    rep.interior_residual = std::max(rep.interior_residual, std::abs(problem.f(x) - evaluate(model, x, true)));
    if (has_truth) track_truth(x, evaluate(model, x, false));
  }
  for (Index t = 0; t < test_boundary.cols(); ++t) {
    const auto x = test_boundary.col(t);
    const double s = evaluate(model, x, false);
    rep.boundary_residual = std::max(rep.boundary_residual, std::abs(problem.g(x) - s));
    track_truth(x, s);
  }
  rep.max_principle_bound = rep.max_principle_constant * (rep.interior_residual + rep.boundary_residual);
  if (has_truth) {
    rep.solution_error = sol_err;
    rep.relative_solution_error = sol_max > 0.0 ? sol_err / sol_max : sol_err;
  }
  return rep;
}

std::vector<double> solution_error_history(const GreedyState& state, const CandidateSet& candidates,
                                           const PointCloud& points, const ScalarField& truth) {
  const Index n = state.n(), t = points.cols();
  Eigen::MatrixXd rep(t, n);
  for (Index j = 0; j < n; ++j) {
    const auto& lambda = candidates[state.selected[static_cast<std::size_t>(j)]];
    for (Index i = 0; i < t; ++i) rep(i, j) = representer_eval(candidates.kernel(), candidates.op(), lambda,
                                                              points.col(i), false);
  }
  Eigen::VectorXd u(t);
  for (Index i = 0; i < t; ++i) u(i) = truth(points.col(i));

  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  Eigen::VectorXd s = Eigen::VectorXd::Zero(t);
  for (Index j = 0; j < n; ++j) {
    // N_j at the points, then s_{j+1} = s_j + c_j N_j
    s.noalias() += state.coeffs(j) * (rep.leftCols(j + 1) * state.transform.row(j).head(j + 1).transpose());
    out.push_back((u - s).cwiseAbs().maxCoeff());
  }
  return out;
}

}  // namespace pdegreedy
