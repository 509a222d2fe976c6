#include "pdegreedy/functional.hpp"

#include <string>
#include <utility>

namespace pdegreedy {

CandidateSet::CandidateSet(std::vector<Functional> functionals, Kernel kernel, OperatorSpec op)
    : functionals_(std::move(functionals)), kernel_(std::move(kernel)), op_(op) {
  op_.validate();
  if (functionals_.empty()) throw UsageError("candidate set is empty");
  for (std::size_t i = 0; i < functionals_.size(); ++i) {
    auto& f = functionals_[i];
    if (f.point.size() != kernel_.dim()) {
      throw UsageError("candidate " + std::to_string(i) + " has dimension " + std::to_string(f.point.size()));
    }
    f.index = static_cast<Index>(i);
  }
}

CandidateSet CandidateSet::from_clouds(const PointCloud& interior, const PointCloud& boundary, Kernel kernel,
                                       OperatorSpec op) {
  std::vector<Functional> fs;
  fs.reserve(static_cast<std::size_t>(interior.cols() + boundary.cols()));
  for (Index j = 0; j < interior.cols(); ++j) fs.push_back({FunctionalKind::InteriorL, interior.col(j), 0});
  for (Index j = 0; j < boundary.cols(); ++j) fs.push_back({FunctionalKind::BoundaryDirichlet, boundary.col(j), 0});
  return CandidateSet(std::move(fs), std::move(kernel), op);
}

double gram(const Kernel& kernel, const OperatorSpec& op, const Functional& lambda, const Functional& mu) {
  const double r = kernel.distance(lambda.point, mu.point);
  return apply_operator(kernel.radial(r), op, lambda.operator_order() + mu.operator_order());
}

double representer_eval(const Kernel& kernel, const OperatorSpec& op, const Functional& lambda,
                        const Eigen::Ref<const Eigen::VectorXd>& x, bool apply_L) {
  const double r = kernel.distance(x, lambda.point);
  return apply_operator(kernel.radial(r), op, lambda.operator_order() + (apply_L ? 1 : 0));
}

Eigen::VectorXd gram_column(const CandidateSet& candidates, const Functional& mu) {
  Eigen::VectorXd col(candidates.size());
  for (Index i = 0; i < candidates.size(); ++i) col(i) = gram(candidates.kernel(), candidates.op(), candidates[i], mu);
  return col;
}

Eigen::MatrixXd gram_matrix(const CandidateSet& candidates, const std::vector<Index>& subset) {
  const auto n = static_cast<Index>(subset.size());
  Eigen::MatrixXd g(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j <= i; ++j) {
      g(i, j) = gram(candidates.kernel(), candidates.op(), candidates[subset[static_cast<std::size_t>(i)]],
                     candidates[subset[static_cast<std::size_t>(j)]]);
      g(j, i) = g(i, j);
    }
  }
  return g;
}

}  // namespace pdegreedy
