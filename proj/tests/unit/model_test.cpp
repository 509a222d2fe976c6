#include <doctest.h>

#include <cmath>

#include "pdegreedy/greedy.hpp"
#include "pdegreedy/oracle.hpp"
#include "support.hpp"

using namespace pdegreedy;
using testing::pt;

TEST_SUITE("model_eval") {

TEST_CASE("single boundary functional") {
  const Kernel k(Profile::Gaussian, 1.0, 1.0, 2);
  const CandidateSet cs({{FunctionalKind::BoundaryDirichlet, pt({1.0, 0.5}), 0}}, k, {1.0, 0.0});
  Eigen::VectorXd rhs(1);
  rhs << -0.75;
  GreedyState s = init_state(cs, rhs, false);
  newton_update(s, cs, 0);
  const CollocationModel m = to_standard_coefficients(s, cs);
  REQUIRE(m.size() == 1);
  CHECK(m.alpha(0) == doctest::Approx(-0.75));
  CHECK(m.targets(0) == -0.75);
}

TEST_CASE("zero Newton coefficients give the zero model") {
  const Geometry sq = Geometry::unit_square();
  const CandidateSet cs = CandidateSet::from_clouds(sample_interior(sq, 30, 1), sample_boundary(sq, 10, 2),
                                                    Kernel(Profile::MaternCubic, 2.0, 1.0, 2), {1.0, 0.0});
  GreedyState s = init_state(cs, Eigen::VectorXd::Zero(cs.size()), false);
  for (int j = 0; j < 6; ++j) newton_update(s, cs, *select_next(s, 0.0));
  const CollocationModel m = to_standard_coefficients(s, cs);
  CHECK(m.alpha.cwiseAbs().maxCoeff() == 0.0);
  CHECK(evaluate(m, pt({0.3, 0.3}), false) == 0.0);
  CHECK(evaluate(m, pt({0.3, 0.3}), true) == 0.0);
}

TEST_CASE("empty model evaluates to zero") {
  const Geometry sq = Geometry::unit_square();
  const CandidateSet cs = CandidateSet::from_clouds(sample_interior(sq, 5, 1), sample_boundary(sq, 5, 2),
                                                    Kernel(Profile::Gaussian, 1.0, 1.0, 2), {1.0, 0.0});
  const GreedyState s = init_state(cs, Eigen::VectorXd::Ones(cs.size()), false);
  const CollocationModel m = to_standard_coefficients(s, cs);
  CHECK(m.size() == 0);
  CHECK(evaluate(m, pt({0.5, 0.5}), false) == 0.0);
  CHECK(evaluate_points(m, sample_interior(sq, 4, 3), true).cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(to_standard_coefficients(s, cs, 1), UsageError);
}

TEST_CASE("pacman model interpolates its selected data") {
  Problem p = builtin_problem(ProblemId::PacmanLaplace);
  discretize(p, 400, 120, 1);
  const Kernel k(Profile::MaternCubic, 1.0, 1.0, 2);
  GreedyOptions opt;
  opt.n_max = 40;
  const GreedyResult r = run_greedy(p, k, opt);
  REQUIRE(r.model.size() == 40);
  int boundary_seen = 0;
  for (const auto& f : r.model.selected) {
    if (f.kind == FunctionalKind::BoundaryDirichlet) {
      ++boundary_seen;
      CHECK(evaluate(r.model, f.point, false) == doctest::Approx(f.point(0) * f.point(1) + 1.0).epsilon(1e-8));
    } else {
      CHECK(std::abs(evaluate(r.model, f.point, true) - p.f(f.point)) <= 1e-8);
    }
  }
  CHECK(boundary_seen > 0);

  // prefix models: n = 10 equals a fresh 10-step run
  GreedyOptions ten = opt;
  ten.n_max = 10;
  const GreedyResult r10 = run_greedy(p, k, ten);
  const CandidateSet cs = make_candidates(p, k);
  const CollocationModel prefix = to_standard_coefficients(r.state, cs, 10);
  CHECK((prefix.alpha - r10.model.alpha).cwiseAbs().maxCoeff() <= 1e-12 * r10.model.alpha.cwiseAbs().maxCoeff());
}

TEST_CASE("alpha agrees with the dense solve") {
  Problem p = builtin_problem(ProblemId::BetaScale1D);
  discretize(p, 100, 2, 4);
  const Kernel k(Profile::MaternQuadratic, 8.0, 1.0, 1);
  GreedyOptions opt;
  opt.beta = 0.5;
  opt.n_max = 20;
  const GreedyResult r = run_greedy(p, k, opt);
  const CandidateSet cs = make_candidates(p, k);
  const Eigen::VectorXd direct = direct_solve(cs, r.state.selected, candidate_rhs(p, cs));
  CHECK((r.model.alpha - direct).cwiseAbs().maxCoeff() <= 1e-8 * direct.cwiseAbs().maxCoeff());
}

TEST_CASE("error report") {
  Problem p = builtin_problem(ProblemId::BetaScale1D);
  discretize(p, 50, 2, 1);
  const Kernel k(Profile::MaternQuadratic, 1.0, 1.0, 1);
  const CandidateSet cs = make_candidates(p, k);
  const GreedyState s = init_state(cs, candidate_rhs(p, cs), false);
  const CollocationModel zero = to_standard_coefficients(s, cs);
  PointCloud ends(1, 2);
  ends << 0.0, 1.0;
  const ErrorReport rep = error_report(zero, p, equispaced_interval(101), ends);
  CHECK(rep.interior_residual == doctest::Approx(1.0));
  CHECK(rep.boundary_residual == doctest::Approx(1.0 / (2.51 * 1.51)));
  CHECK(rep.max_principle_constant == 1.0);
  CHECK(rep.max_principle_bound == doctest::Approx(rep.interior_residual + rep.boundary_residual));
  REQUIRE(rep.solution_error);
  CHECK(*rep.relative_solution_error == doctest::Approx(1.0));

  const Problem sq = builtin_problem(ProblemId::PGreedySquare);
  const CollocationModel empty2d{Kernel(Profile::Gaussian, 1.0, 1.0, 2), {1.0, 0.0}, {}, {}, {}};
  const ErrorReport none =
      error_report(empty2d, sq, sample_interior(sq.geometry, 10, 1), sample_boundary(sq.geometry, 10, 2));
  CHECK(none.interior_residual == 0.0);
  CHECK_FALSE(none.solution_error);
}

TEST_CASE("solution error history matches per-prefix evaluation") {
  Problem p = builtin_problem(ProblemId::BetaScale1D);
  discretize(p, 80, 2, 2);
  const Kernel k(Profile::MaternQuadratic, 2.0, 1.0, 1);
  GreedyOptions opt;
  opt.n_max = 12;
  const GreedyResult r = run_greedy(p, k, opt);
  const CandidateSet cs = make_candidates(p, k);
  const PointCloud test = equispaced_interval(57);
  const auto hist = solution_error_history(r.state, cs, test, *p.true_solution);
  REQUIRE(hist.size() == 12);
  for (Index n : {1, 5, 12}) {
    const CollocationModel m = to_standard_coefficients(r.state, cs, n);
    double worst = 0.0;
    for (Index t = 0; t < test.cols(); ++t) {
      worst = std::max(worst, std::abs((*p.true_solution)(test.col(t)) - evaluate(m, test.col(t), false)));
    }
    CHECK(hist[static_cast<std::size_t>(n - 1)] == doctest::Approx(worst).epsilon(1e-10));
  }
}

}
