#include "pdegreedy/problem.hpp"

#include <cmath>
#include <numbers>

namespace pdegreedy {

ProblemId parse_problem_id(std::string_view name) {
  if (name == "pgreedy-square") return ProblemId::PGreedySquare;
  if (name == "pacman") return ProblemId::PacmanLaplace;
  if (name == "beta-scale") return ProblemId::BetaScale1D;
  if (name == "failure") return ProblemId::NoSolution1D;
  throw ConfigError("unknown problem '" + std::string(name) + "'");
}

std::string_view problem_name(ProblemId id) {
  switch (id) {
    case ProblemId::PGreedySquare: return "pgreedy-square";
    case ProblemId::PacmanLaplace: return "pacman";
    case ProblemId::BetaScale1D: return "beta-scale";
    case ProblemId::NoSolution1D: return "failure";
  }
  throw ConfigError("unknown problem id");
}

Problem builtin_problem(ProblemId id) {
  Problem p;
  p.name = std::string(problem_name(id));
  const auto zero = [](const Eigen::Ref<const Eigen::VectorXd>&) { return 0.0; };
  switch (id) {
    case ProblemId::PGreedySquare:
      p.geometry = Geometry::unit_square();
      p.op = {1.0, 0.0};
      p.f = zero;
      p.g = zero;
      break;
    case ProblemId::PacmanLaplace: {
      p.geometry = Geometry::pacman();
      p.op = {1.0, 0.0};
      const auto u = [](const Eigen::Ref<const Eigen::VectorXd>& x) { return x(0) * x(1) + 1.0; };
      p.f = zero;
      p.g = u;
      p.true_solution = u;
      break;
    }
    case ProblemId::BetaScale1D: {
      p.geometry = Geometry::interval01();
      p.op = {1.0, 0.0};
      constexpr double scale = 2.51 * 1.51;
      const auto u = [](const Eigen::Ref<const Eigen::VectorXd>& x) { return std::pow(x(0), 2.51) / scale; };
      p.f = [](const Eigen::Ref<const Eigen::VectorXd>& x) { return -std::pow(x(0), 0.51); };
      p.g = u;
      p.true_solution = u;
      break;
    }
    case ProblemId::NoSolution1D:
      p.geometry = Geometry::interval01();
      p.op = {1.0, -std::numbers::pi * std::numbers::pi};
      p.f = [](const Eigen::Ref<const Eigen::VectorXd>& x) { return std::sin(std::numbers::pi * x(0)); };
      p.g = zero;
      p.grid_size = 1001;
      break;
  }
  return p;
}

void discretize(Problem& problem, Index interior_n, Index boundary_n, std::uint64_t seed) {
  problem.seed = seed;
  if (problem.geometry.kind == GeometryKind::Custom) {
    problem.interior_cloud = problem.geometry.custom_interior;
    problem.boundary_cloud = problem.geometry.custom_boundary;
    return;
  }
  if (problem.grid_size) {
    if (problem.geometry.kind != GeometryKind::Interval01) throw ConfigError("grid discretization is 1D only");
    const PointCloud grid = equispaced_interval(*problem.grid_size);
    problem.interior_cloud = grid.middleCols(1, grid.cols() - 2);
    problem.boundary_cloud.resize(1, 2);
    problem.boundary_cloud << grid(0, 0), grid(0, grid.cols() - 1);
    return;
  }
  problem.interior_cloud = sample_interior(problem.geometry, interior_n, seed);
  problem.boundary_cloud = sample_boundary(problem.geometry, boundary_n, seed + 1);
}

void check_membership(const Problem& problem, double tol) {
  for (Index j = 0; j < problem.interior_cloud.cols(); ++j) {
    if (!problem.geometry.contains_interior(problem.interior_cloud.col(j))) {
      throw UsageError("interior point " + std::to_string(j) + " lies outside the domain");
    }
  }
  for (Index j = 0; j < problem.boundary_cloud.cols(); ++j) {
    if (!problem.geometry.on_boundary(problem.boundary_cloud.col(j), tol)) {
      throw UsageError("boundary point " + std::to_string(j) + " is off the boundary");
    }
  }
}

double rhs_value(const Problem& problem, const Functional& lambda) {
  return lambda.kind == FunctionalKind::InteriorL ? problem.f(lambda.point) : problem.g(lambda.point);
}

CandidateSet make_candidates(const Problem& problem, const Kernel& kernel) {
  if (kernel.dim() != problem.dim()) throw UsageError("kernel dimension does not match the problem");
  return CandidateSet::from_clouds(problem.interior_cloud, problem.boundary_cloud, kernel, problem.op);
}

Eigen::VectorXd candidate_rhs(const Problem& problem, const CandidateSet& candidates) {
  Eigen::VectorXd rhs(candidates.size());
  for (Index i = 0; i < candidates.size(); ++i) rhs(i) = rhs_value(problem, candidates[i]);
  return rhs;
}

}  // namespace pdegreedy
