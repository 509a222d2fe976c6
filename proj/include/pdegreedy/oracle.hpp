#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "pdegreedy/functional.hpp"

namespace pdegreedy {

/// Pivot < singular_pivot_ratio * max diag(G) declares the Gram system singular.
inline constexpr double singular_pivot_ratio = 1e-13;

/// Standard coefficients from a dense LDL^T solve of the symmetric collocation system
/// over the selected candidates. rhs holds one entry per candidate.
Eigen::VectorXd direct_solve(const CandidateSet& candidates, const std::vector<Index>& selected,
                             const Eigen::VectorXd& rhs);

/// P(lambda) = sqrt(gram(lambda, lambda) - g^T G^{-1} g); exactly 0 on the selected set.
double direct_power(const CandidateSet& candidates, const std::vector<Index>& selected, const Functional& lambda);

using PointPair = std::pair<Eigen::VectorXd, Eigen::VectorXd>;

struct FdCheckResult {
  double lk = 0.0;
  double llk = 0.0;
  double worst() const { return std::max(lk, llk); }
};

/// Compares lk_eval with a central-difference Laplacian of k_eval in y, and llk_eval with a
/// central-difference Laplacian in x of lk_eval. Errors are relative to
/// max(|exact|, 1e-3 * |exact at x = y|).
FdCheckResult fd_check_derivatives(const Kernel& kernel, const OperatorSpec& op, const std::vector<PointPair>& samples,
                                   double step);

/// Random pairs with x in [0,1]^dim and |x - y| uniform in [min_dist, max_dist].
std::vector<PointPair> random_point_pairs(int dim, Index count, double min_dist, double max_dist, std::uint64_t seed);

/// Composite Simpson rule for the integral of f*h over [a, b] with an even number of panels.
double l2_inner_product(const std::function<double(double)>& f, const std::function<double(double)>& h, double a,
                        double b, int n_quad);

}  // namespace pdegreedy
