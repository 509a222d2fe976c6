#include "pdegreedy/oracle.hpp"

#include <Eigen/Cholesky>

#include <cmath>
#include <numbers>
#include <string>

#include "pdegreedy/geometry.hpp"

namespace pdegreedy {

namespace {

Eigen::LDLT<Eigen::MatrixXd> factorize(const Eigen::MatrixXd& g) {
  Eigen::LDLT<Eigen::MatrixXd> ldlt(g);
  const double max_diag = g.diagonal().cwiseAbs().maxCoeff();
  const double min_pivot = ldlt.vectorD().minCoeff();
  if (ldlt.info() != Eigen::Success || !(min_pivot >= singular_pivot_ratio * max_diag)) {
    throw SingularSystem(min_pivot, "Gram matrix is singular: smallest pivot " + std::to_string(min_pivot) +
                                        " vs max diagonal " + std::to_string(max_diag));
  }
  return ldlt;
}

}  // namespace

Eigen::VectorXd direct_solve(const CandidateSet& candidates, const std::vector<Index>& selected,
                             const Eigen::VectorXd& rhs) {
  if (rhs.size() != candidates.size()) throw UsageError("direct_solve: rhs must have one entry per candidate");
  if (selected.empty()) return Eigen::VectorXd();
  const Eigen::MatrixXd g = gram_matrix(candidates, selected);
  Eigen::VectorXd b(static_cast<Index>(selected.size()));
  for (std::size_t j = 0; j < selected.size(); ++j) b(static_cast<Index>(j)) = rhs(selected[j]);
  return factorize(g).solve(b);
}

double direct_power(const CandidateSet& candidates, const std::vector<Index>& selected, const Functional& lambda) {
  const auto& kernel = candidates.kernel();
  const auto& op = candidates.op();
  const double self = gram(kernel, op, lambda, lambda);
  if (selected.empty()) return std::sqrt(std::max(0.0, self));
  for (Index idx : selected) {
    const auto& mu = candidates[idx];
    if (mu.kind == lambda.kind && mu.point == lambda.point) return 0.0;
  }
  const Eigen::MatrixXd g = gram_matrix(candidates, selected);
  Eigen::VectorXd cross(static_cast<Index>(selected.size()));
  for (std::size_t j = 0; j < selected.size(); ++j) {
    cross(static_cast<Index>(j)) = gram(kernel, op, lambda, candidates[selected[j]]);
  }
  const double p2 = self - cross.dot(factorize(g).solve(cross));
  return std::sqrt(std::max(0.0, p2));
}

namespace {

/// Central second-difference Laplacian of f around z.
template <typename F>
double fd_laplacian(const F& f, const Eigen::VectorXd& z, double h) {
  const double center = f(z);
  double acc = 0.0;
  Eigen::VectorXd zp = z, zm = z;
  for (Index k = 0; k < z.size(); ++k) {
    zp(k) += h;
    zm(k) -= h;
    acc += f(zp) - 2.0 * center + f(zm);
    zp(k) = z(k);
    zm(k) = z(k);
  }
  return acc / (h * h);
}

double relative(double approx, double exact, double scale) {
  return std::abs(approx - exact) / std::max(std::abs(exact), 1e-3 * std::abs(scale));
}

}  // namespace

FdCheckResult fd_check_derivatives(const Kernel& kernel, const OperatorSpec& op, const std::vector<PointPair>& samples,
                                   double step) {
  if (!(step > 0.0)) throw UsageError("fd_check_derivatives: step must be positive");
  const double a = op.laplace_coeff, c = op.id_coeff;
  const auto diag = kernel.radial(0.0);
  const double lk_scale = apply_operator(diag, op, 1);
  const double llk_scale = apply_operator(diag, op, 2);
  FdCheckResult out;
  for (const auto& [x, y] : samples) {
    const auto k_of_y = [&](const Eigen::VectorXd& z) { return k_eval(kernel, x, z); };
    const auto lk_of_x = [&](const Eigen::VectorXd& z) { return lk_eval(kernel, op, z, y); };

    const double lk = lk_eval(kernel, op, x, y);
    const double lk_fd = (a == 0.0 ? 0.0 : -a * fd_laplacian(k_of_y, y, step)) + c * k_eval(kernel, x, y);
    out.lk = std::max(out.lk, relative(lk_fd, lk, lk_scale));

    const double llk = llk_eval(kernel, op, x, y);
    const double llk_fd = (a == 0.0 ? 0.0 : -a * fd_laplacian(lk_of_x, x, step)) + c * lk;
    out.llk = std::max(out.llk, relative(llk_fd, llk, llk_scale));
  }
  return out;
}

std::vector<PointPair> random_point_pairs(int dim, Index count, double min_dist, double max_dist,
                                          std::uint64_t seed) {
  if (dim < 1 || count < 0 || !(min_dist >= 0.0) || !(max_dist >= min_dist)) {
    throw UsageError("random_point_pairs: invalid arguments");
  }
  SplitMix64 rng(seed);
  std::vector<PointPair> out;
  out.reserve(static_cast<std::size_t>(count));
  for (Index s = 0; s < count; ++s) {
    Eigen::VectorXd x(dim), dir(dim);
    for (int k = 0; k < dim; ++k) x(k) = rng.uniform();
    do {
      // Box-Muller normals give a uniform direction
      for (int k = 0; k < dim; ++k) {
        const double u1 = 1.0 - rng.uniform(), u2 = rng.uniform();
        dir(k) = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
      }
    } while (dir.norm() == 0.0);
    const double dist = rng.uniform(min_dist, max_dist);
    out.emplace_back(x, x + dist * dir.normalized());
  }
  return out;
}

double l2_inner_product(const std::function<double(double)>& f, const std::function<double(double)>& h, double a,
                        double b, int n_quad) {
  if (n_quad < 2 || n_quad % 2 != 0) throw UsageError("Simpson rule needs an even panel count >= 2");
  const double width = (b - a) / n_quad;
  double acc = f(a) * h(a) + f(b) * h(b);
  for (int i = 1; i < n_quad; ++i) {
    const double x = a + i * width;
    acc += (i % 2 == 1 ? 4.0 : 2.0) * f(x) * h(x);
  }
  return acc * (b - a) / (3.0 * n_quad);
}

}  // namespace pdegreedy
