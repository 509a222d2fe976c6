#include "pdegreedy/greedy.hpp"

#include <cmath>
#include <string>

namespace pdegreedy {

std::string_view termination_name(Termination t) {
  switch (t) {
    case Termination::MaxIterations: return "maximum iterations reached";
    case Termination::ResidualBelowTolerance: return "residual below tolerance";
    case Termination::PowerExhausted: return "power function exhausted";
  }
  return "unknown";
}

Eigen::ArrayXd selection_weights(const CandidateSet& candidates, bool reweight) {
  Eigen::ArrayXd w = Eigen::ArrayXd::Ones(candidates.size());
  if (!reweight) return w;
  const double llk0 = apply_operator(candidates.kernel().radial(0.0), candidates.op(), 2);
  if (!(std::abs(llk0) > 0.0)) throw ConfigError("reweighting needs (LLk)(x, x) != 0");
  for (Index i = 0; i < candidates.size(); ++i) {
    if (candidates[i].kind == FunctionalKind::InteriorL) w(i) = 1.0 / std::abs(llk0);
  }
  return w;
}

GreedyState init_state(const CandidateSet& candidates, const Eigen::VectorXd& rhs, bool reweight, Index capacity) {
  const Index m = candidates.size();
  if (m == 0) throw UsageError("init_state: empty candidate set");
  if (rhs.size() != m) {
    throw UsageError("init_state: rhs has " + std::to_string(rhs.size()) + " entries for " + std::to_string(m) +
                     " candidates");
  }
  if (capacity <= 0) capacity = std::min<Index>(m, 64);
  GreedyState s;
  s.newton.resize(m, capacity);
  s.transform = Eigen::MatrixXd::Zero(capacity, capacity);
  s.coeffs = Eigen::VectorXd::Zero(capacity);
  s.p2.resize(m);
  for (Index i = 0; i < m; ++i) s.p2(i) = gram(candidates.kernel(), candidates.op(), candidates[i], candidates[i]);
  s.res = rhs.array();
  s.rhs = rhs;
  s.weights = selection_weights(candidates, reweight);
  s.is_selected.assign(static_cast<std::size_t>(m), 0);
  s.initial_max_p2 = s.p2.maxCoeff();
  s.initial_max_abs_rhs = rhs.cwiseAbs().maxCoeff();
  return s;
}

double selection_score(double beta, double res, double p, double w) {
  const double r = std::abs(res);
  if (std::isinf(beta)) return r / (w * p);
  if (beta == 0.0) return w * p;
  if (beta == 1.0) return r;
  return std::pow(r, beta) * std::pow(w * p, 1.0 - beta);
}

std::optional<Index> select_next(const GreedyState& state, double beta, double tol_power) {
  const double floor = tol_power * tol_power;
  std::optional<Index> best;
  double best_score = -1.0;
  for (Index i = 0; i < state.size(); ++i) {
    if (state.is_selected[static_cast<std::size_t>(i)] || !(state.p2(i) > floor)) continue;
    const double score = selection_score(beta, state.res(i), std::sqrt(state.p2(i)), state.weights(i));
    // strict comparison keeps the lowest index on ties
    if (score > best_score) {
      best_score = score;
      best = i;
    }
  }
  return best;
}

namespace {

void grow(GreedyState& state, Index needed) {
  const Index cap = state.newton.cols();
  if (needed <= cap) return;
  const Index new_cap = std::max(needed, 2 * cap);
  state.newton.conservativeResize(Eigen::NoChange, new_cap);
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(new_cap, new_cap);
  t.topLeftCorner(cap, cap) = state.transform;
  state.transform.swap(t);
  state.coeffs.conservativeResize(new_cap);
  state.coeffs.tail(new_cap - cap).setZero();
}

}  // namespace

void newton_update(GreedyState& state, const CandidateSet& candidates, Index chosen, double tol_power) {
  if (chosen < 0 || chosen >= state.size()) throw UsageError("newton_update: index out of range");
  const double p2c = state.p2(chosen);
  if (!(p2c > tol_power * tol_power)) {
    throw NumericalBreakdown(chosen, "power value of candidate " + std::to_string(chosen) +
                                         " is below tolerance (P^2 = " + std::to_string(p2c) + ")");
  }
  const Index n = state.n();
  grow(state, n + 1);
  const double pstar = std::sqrt(p2c);

  Eigen::VectorXd column = gram_column(candidates, candidates[chosen]);
  const Eigen::RowVectorXd chosen_row = state.newton.row(chosen).head(n);
  if (n > 0) column.noalias() -= state.newton.leftCols(n) * chosen_row.transpose();
  column /= pstar;
  // Exact value lambda_chosen(N_n) = P; keeps the tracked p2 and the transform consistent.
  column(chosen) = pstar;

  auto t_row = state.transform.row(n);
  t_row.setZero();
  if (n > 0) t_row.head(n).noalias() = -chosen_row * state.transform.topLeftCorner(n, n);
  t_row(n) = 1.0;
  t_row /= pstar;

  const double c = state.res(chosen) / pstar;
  state.coeffs(n) = c;
  state.newton.col(n) = column;
  state.p2 = (state.p2 - column.array().square()).cwiseMax(0.0);
  state.res -= c * column.array();
  // p2c - pstar^2 is zero up to one rounding of p2c
  state.p2(chosen) = 0.0;
  state.selected.push_back(chosen);
  state.is_selected[static_cast<std::size_t>(chosen)] = 1;
}

GreedyResult run_greedy(const CandidateSet& candidates, const Eigen::VectorXd& rhs, const GreedyOptions& options) {
  if (options.n_max < 1) throw UsageError("run_greedy: n_max must be >= 1");
  if (!(options.beta >= 0.0)) throw ConfigError("beta must be >= 0");
  GreedyState state = init_state(candidates, rhs, options.reweight, std::min(options.n_max, candidates.size()));
  RunReport report;
  report.initial_max_power = std::sqrt(state.initial_max_p2);
  report.initial_max_residual = state.res.abs().maxCoeff();
  const double tol_f = options.tol_residual_rel * state.initial_max_abs_rhs;

  Index interior = 0, boundary = 0;
  report.termination = Termination::MaxIterations;
  while (state.n() < options.n_max) {
    if (options.beta > 0.0 && state.res.abs().maxCoeff() <= tol_f) {
      report.termination = Termination::ResidualBelowTolerance;
      break;
    }
    const auto next = select_next(state, options.beta, options.tol_power);
    if (!next) {
      report.termination = Termination::PowerExhausted;
      break;
    }
    const Index i = *next;
    IterationRecord rec;
    rec.index = i;
    rec.kind = candidates[i].kind;
    rec.point = candidates[i].point;
    rec.chosen_power = std::sqrt(state.p2(i));
    rec.score = selection_score(options.beta, state.res(i), rec.chosen_power, state.weights(i));
    try {
      newton_update(state, candidates, i, options.tol_power);
    } catch (const NumericalBreakdown& e) {
      throw GreedyBreakdown(e, std::move(report));
    }
    (rec.kind == FunctionalKind::InteriorL ? interior : boundary) += 1;
    rec.n = state.n();
    rec.max_power = std::sqrt(state.p2.maxCoeff());
    rec.max_residual = state.res.abs().maxCoeff();
    rec.interior_count = interior;
    rec.boundary_count = boundary;
    report.iterations.push_back(std::move(rec));
  }
  CollocationModel model = to_standard_coefficients(state, candidates);
  return {std::move(state), std::move(model), std::move(report)};
}

GreedyResult run_greedy(const Problem& problem, const Kernel& kernel, const GreedyOptions& options) {
  const CandidateSet candidates = make_candidates(problem, kernel);
  return run_greedy(candidates, candidate_rhs(problem, candidates), options);
}

}  // namespace pdegreedy
