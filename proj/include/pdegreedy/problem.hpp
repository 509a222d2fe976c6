#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "pdegreedy/functional.hpp"
#include "pdegreedy/geometry.hpp"

namespace pdegreedy {

using ScalarField = std::function<double(const Eigen::Ref<const Eigen::VectorXd>&)>;

enum class ProblemId { PGreedySquare, PacmanLaplace, BetaScale1D, NoSolution1D };

/// Accepts the experiment names "pgreedy-square", "pacman", "beta-scale", "failure".
ProblemId parse_problem_id(std::string_view name);
std::string_view problem_name(ProblemId id);

/// L u = f in the interior, u = g on the boundary.
struct Problem {
  std::string name;
  Geometry geometry;
  OperatorSpec op;
  ScalarField f;
  ScalarField g;
  std::optional<ScalarField> true_solution;
  /// When set (1D only), the candidate cloud is this many equispaced points on [0,1]
  /// instead of random samples.
  std::optional<Index> grid_size;
  PointCloud interior_cloud;
  PointCloud boundary_cloud;
  std::uint64_t seed = 0;

  int dim() const { return geometry.dim(); }
};

/// Built-in problem with empty candidate clouds; see discretize().
Problem builtin_problem(ProblemId id);

/// Fills the candidate clouds. Interior samples use SplitMix64(seed), boundary samples
/// SplitMix64(seed + 1). With grid_size set, the interior cloud is the strictly interior part of
/// the grid and interior_n is ignored.
void discretize(Problem& problem, Index interior_n, Index boundary_n, std::uint64_t seed);

/// Throws UsageError if a cloud point violates the geometry's membership predicates.
void check_membership(const Problem& problem, double tol = 1e-12);

double rhs_value(const Problem& problem, const Functional& lambda);

CandidateSet make_candidates(const Problem& problem, const Kernel& kernel);
Eigen::VectorXd candidate_rhs(const Problem& problem, const CandidateSet& candidates);

}  // namespace pdegreedy
