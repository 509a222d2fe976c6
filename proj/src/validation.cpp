#include "pdegreedy/validation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "pdegreedy/geometry.hpp"
#include "pdegreedy/report.hpp"

namespace pdegreedy {

std::string EquivalenceCase::describe() const {
  char buf[200];
  std::snprintf(buf, sizeof buf, "%s d=%d op=(%g,%g) beta=%s eps=%g M=%ld n=%ld seed=%llu",
                std::string(profile_name(profile)).c_str(), dim, op.laplace_coeff, op.id_coeff,
                format_beta(beta).c_str(), eps, static_cast<long>(candidates), static_cast<long>(selections),
                static_cast<unsigned long long>(seed));
  return buf;
}

double equivalence_shape(Profile profile, int dim, Index selections) {
  double factor = 1.0;
  switch (profile) {
    case Profile::Gaussian: factor = 4.0; break;
    case Profile::Wendland32:
    case Profile::Wendland33: factor = 0.5; break;
    case Profile::MaternQuadratic:
    case Profile::MaternCubic: factor = 2.0; break;
  }
  return factor * std::pow(static_cast<double>(selections), 1.0 / dim);
}

EquivalenceCase random_equivalence_case(std::uint64_t seed) {
  SplitMix64 rng(seed);
  constexpr std::array profiles{Profile::Gaussian, Profile::Wendland32, Profile::Wendland33, Profile::MaternQuadratic,
                                Profile::MaternCubic};
  constexpr std::array betas{0.0, 0.5, 1.0, beta_infinity};
  EquivalenceCase c;
  c.profile = profiles[rng.next() % profiles.size()];
  c.dim = 1 + static_cast<int>(rng.next() % 2);
  c.op = (rng.next() % 2 == 0) ? OperatorSpec{1.0, 0.0} : OperatorSpec{1.0, -std::numbers::pi * std::numbers::pi};
  c.beta = betas[rng.next() % betas.size()];
  const Index requested = 50 + static_cast<Index>(rng.next() % 151);
  if (c.dim == 1) {
    c.interior_candidates = requested - 2;
    c.candidates = requested;
  } else {
    const auto side = static_cast<Index>(std::sqrt(0.8 * static_cast<double>(requested)));
    const Index per_edge = std::max<Index>(1, (requested - side * side) / 4);
    c.interior_candidates = side * side;
    c.candidates = side * side + 4 * per_edge;
  }
  c.selections = 5 + static_cast<Index>(rng.next() % 26);
  c.eps = equivalence_shape(c.profile, c.dim, c.selections);
  c.seed = rng.next();
  return c;
}

std::pair<PointCloud, PointCloud> equivalence_clouds(const EquivalenceCase& c) {
  SplitMix64 rng(c.seed);
  // cell offset in [0.25, 0.75)
  auto jitter = [&rng] { return 0.25 + 0.5 * rng.uniform(); };
  if (c.dim == 1) {
    const Index m = c.interior_candidates;
    PointCloud interior(1, m);
    for (Index i = 0; i < m; ++i) interior(0, i) = (static_cast<double>(i) + jitter()) / static_cast<double>(m);
    PointCloud boundary(1, 2);
    boundary << 0.0, 1.0;
    return {interior, boundary};
  }
  const auto side = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(c.interior_candidates))));
  if (side * side != c.interior_candidates) throw UsageError("equivalence case: interior count must be a square");
  const Index per_edge = (c.candidates - c.interior_candidates) / 4;
  if (per_edge < 1 || c.interior_candidates + 4 * per_edge != c.candidates) {
    throw UsageError("equivalence case: boundary count must be a positive multiple of 4");
  }
  PointCloud interior(2, side * side);
  for (Index i = 0; i < side; ++i) {
    for (Index j = 0; j < side; ++j) {
      interior(0, i * side + j) = (static_cast<double>(i) + jitter()) / static_cast<double>(side);
      interior(1, i * side + j) = (static_cast<double>(j) + jitter()) / static_cast<double>(side);
    }
  }
  PointCloud boundary(2, 4 * per_edge);
  for (Index e = 0; e < 4; ++e) {
    for (Index j = 0; j < per_edge; ++j) {
      const double t = (static_cast<double>(j) + jitter()) / static_cast<double>(per_edge);
      auto col = boundary.col(e * per_edge + j);
      switch (e) {
        case 0: col << t, 0.0; break;
        case 1: col << 1.0, t; break;
        case 2: col << 1.0 - t, 1.0; break;
        default: col << 0.0, 1.0 - t; break;
      }
    }
  }
  return {interior, boundary};
}

namespace {

Kernel normalized_kernel(Profile profile, double eps, int dim, const OperatorSpec& op) {
  const Kernel unit(profile, eps, 1.0, dim);
  return unit.with_amplitude(normalized_amplitude(unit, op));
}

}  // namespace

EquivalenceOutcome check_oracle_equivalence(const EquivalenceCase& c) {
  const auto [interior, boundary] = equivalence_clouds(c);
  const CandidateSet candidates =
      CandidateSet::from_clouds(interior, boundary, normalized_kernel(c.profile, c.eps, c.dim, c.op), c.op);

  SplitMix64 rng(c.seed + 2);
  Eigen::VectorXd rhs(candidates.size());
  for (Index i = 0; i < rhs.size(); ++i) rhs(i) = rng.uniform(-1.0, 1.0);

  GreedyOptions options;
  options.beta = c.beta;
  options.n_max = c.selections;
  const GreedyResult run = run_greedy(candidates, rhs, options);

  EquivalenceOutcome out;
  out.selected = run.state.n();
  out.termination = run.report.termination;
  if (out.selected > 0) {
    const Eigen::VectorXd direct = direct_solve(candidates, run.state.selected, rhs);
    out.alpha_rel_error = (run.model.alpha - direct).cwiseAbs().maxCoeff() / direct.cwiseAbs().maxCoeff();
  }
  for (Index i = 0; i < candidates.size(); ++i) {
    const double p = direct_power(candidates, run.state.selected, candidates[i]);
    out.power_abs_error = std::max(out.power_abs_error, std::abs(std::sqrt(run.state.p2(i)) - p));
  }
  return out;
}

}  // namespace pdegreedy
