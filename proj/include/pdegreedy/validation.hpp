#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "pdegreedy/greedy.hpp"
#include "pdegreedy/oracle.hpp"

namespace pdegreedy {

/// One randomized Newton-vs-dense comparison on the unit interval or square.
/// Candidates are jittered grid points (interior) plus jittered points on the boundary edges,
/// so no two candidates are closer than a quarter cell.
struct EquivalenceCase {
  Profile profile = Profile::MaternQuadratic;
  int dim = 2;
  OperatorSpec op;
  double beta = 1.0;
  double eps = 1.0;
  /// Total count; interior_candidates of them are interior.
  Index candidates = 100;
  Index interior_candidates = 80;
  Index selections = 20;
  std::uint64_t seed = 1;

  std::string describe() const;
};

struct EquivalenceOutcome {
  /// ||alpha_newton - alpha_direct||_inf / ||alpha_direct||_inf.
  double alpha_rel_error = 0.0;
  /// max_i |sqrt(p2_i) - direct_power(lambda_i)|.
  double power_abs_error = 0.0;
  Index selected = 0;
  Termination termination = Termination::MaxIterations;
};

EquivalenceCase random_equivalence_case(std::uint64_t seed);
EquivalenceOutcome check_oracle_equivalence(const EquivalenceCase& c);

/// Shape parameter used by random_equivalence_case: a per-profile factor times
/// selections^(1/dim), the inverse spacing of the selected points.
double equivalence_shape(Profile profile, int dim, Index selections);

/// The jittered candidate clouds of a case, as (interior, boundary).
std::pair<PointCloud, PointCloud> equivalence_clouds(const EquivalenceCase& c);

}  // namespace pdegreedy
