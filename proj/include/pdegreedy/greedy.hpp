#pragma once

#include <limits>
#include <optional>
#include <string_view>
#include <vector>

#include "pdegreedy/greedy_state.hpp"
#include "pdegreedy/model.hpp"
#include "pdegreedy/problem.hpp"

namespace pdegreedy {

inline constexpr double beta_infinity = std::numeric_limits<double>::infinity();

struct GreedyOptions {
  /// 0 = P-greedy, 1 = f-greedy, infinity = f/P-greedy.
  double beta = 1.0;
  Index n_max = 200;
  /// Floor on the power value P; candidates with P <= tol_power are inadmissible.
  double tol_power = 1e-7;
  /// Residual stop (beta > 0 only): max |res| <= tol_residual_rel * max |rhs|.
  double tol_residual_rel = 1e-12;
  /// Divide the power factor of interior scores by (LLk)(x, x).
  bool reweight = false;
};

enum class Termination { MaxIterations, ResidualBelowTolerance, PowerExhausted };
std::string_view termination_name(Termination t);

struct IterationRecord {
  Index n = 0;
  Index index = 0;
  FunctionalKind kind = FunctionalKind::InteriorL;
  Point point;
  double score = 0.0;
  /// Power value of the chosen functional just before it was added.
  double chosen_power = 0.0;
  /// max_i P_n(lambda_i) and max_i |lambda_i(u - s_n)| after the update.
  double max_power = 0.0;
  double max_residual = 0.0;
  Index interior_count = 0;
  Index boundary_count = 0;
};

struct RunReport {
  std::vector<IterationRecord> iterations;
  Termination termination = Termination::MaxIterations;
  double initial_max_power = 0.0;
  double initial_max_residual = 0.0;
};

struct GreedyResult {
  GreedyState state;
  CollocationModel model;
  RunReport report;
};

/// Newton breakdown inside run_greedy, carrying the iterations completed so far.
class GreedyBreakdown : public NumericalBreakdown {
 public:
  GreedyBreakdown(const NumericalBreakdown& cause, RunReport partial)
      : NumericalBreakdown(cause), partial_(std::move(partial)) {}
  const RunReport& partial_report() const { return partial_; }

 private:
  RunReport partial_;
};

/// Selection weights: 1, or 1 / (LLk)(x, x) for interior functionals when reweighting.
Eigen::ArrayXd selection_weights(const CandidateSet& candidates, bool reweight);

GreedyState init_state(const CandidateSet& candidates, const Eigen::VectorXd& rhs, bool reweight,
                       Index capacity = 0);

/// |res|^beta * (w p)^(1 - beta) with 0^0 = 1; |res| / (w p) for beta = infinity.
double selection_score(double beta, double res, double p, double w);

/// Admissible: not yet selected and P > tol_power. Ties go to the lowest index.
std::optional<Index> select_next(const GreedyState& state, double beta, double tol_power = 1e-7);

/// Appends lambda_chosen to the Newton basis and updates p2 / res over all candidates.
void newton_update(GreedyState& state, const CandidateSet& candidates, Index chosen, double tol_power = 1e-7);

GreedyResult run_greedy(const CandidateSet& candidates, const Eigen::VectorXd& rhs, const GreedyOptions& options);
GreedyResult run_greedy(const Problem& problem, const Kernel& kernel, const GreedyOptions& options);

}  // namespace pdegreedy
