// Command line front end: solve, validate, experiment.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "pdegreedy/report.hpp"
#include "pdegreedy/validation.hpp"

namespace {

using namespace pdegreedy;

constexpr int exit_ok = 0;
constexpr int exit_validation = 1;
constexpr int exit_breakdown = 2;

struct Overrides {
  std::optional<std::string> kernel;
  std::optional<double> eps;
  std::optional<double> amplitude;
  bool normalize_amplitude = false;
  std::optional<std::string> beta;
  std::optional<Index> n_max;
  std::optional<std::uint64_t> seed;
  std::optional<Index> interior_n;
  std::optional<Index> boundary_n;
  std::optional<Index> test_interior_n;
  std::optional<Index> test_boundary_n;
  std::optional<double> tol_power;
  std::optional<bool> reweight;
  std::optional<std::string> out;

  void attach(CLI::App* app) {
    app->add_option("--kernel", kernel, "gaussian | wendland32 | wendland33 | matern2 | matern3");
    app->add_option("--eps", eps, "kernel shape parameter");
    app->add_option("--amplitude", amplitude, "kernel amplitude");
    app->add_flag("--normalize-amplitude", normalize_amplitude, "scale the kernel so max(k(x,x), LLk(x,x)) = 1");
    app->add_option("--beta", beta, "beta value or comma separated list; 'inf' for f/P-greedy");
    app->add_option("--n-max", n_max, "maximum number of selected functionals");
    app->add_option("--seed", seed, "64-bit seed of the point samplers");
    app->add_option("--interior-n", interior_n, "interior candidate count");
    app->add_option("--boundary-n", boundary_n, "boundary candidate count");
    app->add_option("--test-interior-n", test_interior_n, "interior test cloud size");
    app->add_option("--test-boundary-n", test_boundary_n, "boundary test cloud size");
    app->add_option("--tol-power", tol_power, "power value floor");
    app->add_option("--reweight", reweight, "divide interior power values by LLk(x,x) during selection (true|false)");
    app->add_option("--out", out, "output directory");
  }

  void apply(RunConfig& c) const {
    if (kernel) c.kernel = *kernel;
    if (eps) c.eps = *eps;
    if (amplitude) c.amplitude = *amplitude;
    if (normalize_amplitude) c.normalize_amplitude = true;
    if (beta) c.betas = parse_betas(*beta);
    if (n_max) c.n_max = *n_max;
    if (seed) c.seed = *seed;
    if (interior_n) c.interior_n = *interior_n;
    if (boundary_n) c.boundary_n = *boundary_n;
    if (test_interior_n) c.test_interior_n = *test_interior_n;
    if (test_boundary_n) c.test_boundary_n = *test_boundary_n;
    if (tol_power) c.tol_power = *tol_power;
    if (reweight) c.reweight = *reweight;
    if (out) c.out_dir = *out;
  }
};

void print_summary(const ExperimentResult& result) {
  std::cout << "experiment " << result.config.experiment << ", kernel " << result.config.kernel << " (eps "
            << result.config.eps << ")\n";
  for (const auto& run : result.runs) {
    const auto& rep = run.greedy.report;
    std::cout << "  beta=" << format_beta(run.beta) << ": " << rep.iterations.size() << " selected ("
              << (rep.iterations.empty() ? 0 : rep.iterations.back().interior_count) << " interior / "
              << (rep.iterations.empty() ? 0 : rep.iterations.back().boundary_count) << " boundary), "
              << termination_name(rep.termination);
    if (run.errors.relative_solution_error) std::cout << ", relative sup error " << *run.errors.relative_solution_error;
    std::cout << ", residual sups " << run.errors.interior_residual << " / " << run.errors.boundary_residual;
    if (run.rhs_inner_product) std::cout << ", <f, Ls_n> = " << *run.rhs_inner_product;
    std::cout << "\n    " << run.csv_path.string() << "\n";
  }
  std::cout << "  summary: " << result.summary_path.string() << "\n";
}

int run_validate(std::uint64_t seed, int cases) {
  bool ok = true;
  const std::array profiles{Profile::Gaussian, Profile::Wendland32, Profile::Wendland33, Profile::MaternQuadratic,
                            Profile::MaternCubic};
  for (auto profile : profiles) {
    for (int dim : {1, 2}) {
      const Kernel kernel(profile, 1.0, 1.0, dim);
      const auto pairs = random_point_pairs(dim, 100, 0.05, 0.9, seed + static_cast<std::uint64_t>(dim));
      const auto res = fd_check_derivatives(kernel, {1.0, 0.0}, pairs, 1e-4);
      const double limit = profile == Profile::Wendland32 ? 1e-3 : 1e-5;
      const bool pass = res.worst() <= limit;
      ok = ok && pass;
      std::printf("%s fd-derivatives %-10s d=%d  lk %.2e  llk %.2e  (limit %.0e)\n", pass ? "PASS" : "FAIL",
                  std::string(profile_name(profile)).c_str(), dim, res.lk, res.llk, limit);
    }
  }
  for (int i = 0; i < cases; ++i) {
    const auto c = random_equivalence_case(seed + 1000 + static_cast<std::uint64_t>(i));
    const auto out = check_oracle_equivalence(c);
    const bool pass = out.alpha_rel_error <= 1e-8 && out.power_abs_error <= 1e-7;
    ok = ok && pass;
    std::printf("%s oracle-equivalence %s  alpha %.2e  power %.2e\n", pass ? "PASS" : "FAIL", c.describe().c_str(),
                out.alpha_rel_error, out.power_abs_error);
  }
  return ok ? exit_ok : exit_validation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Greedy symmetric kernel collocation for linear elliptic PDEs"};
  app.require_subcommand(1);

  Overrides solve_over, exp_over;
  std::optional<std::string> config_path, problem, interior_csv, boundary_csv;
  auto* solve = app.add_subcommand("solve", "run the greedy solver on a configured problem");
  solve->add_option("--config", config_path, "JSON run configuration");
  solve->add_option("--problem", problem, "pgreedy-square | pacman | beta-scale | failure");
  solve->add_option("--interior-csv", interior_csv, "interior candidate points (CSV)");
  solve->add_option("--boundary-csv", boundary_csv, "boundary candidate points (CSV)");
  solve_over.attach(solve);

  std::uint64_t validate_seed = 20240101;
  int validate_cases = 20;
  auto* val = app.add_subcommand("validate", "run the derivative and dense-oracle checks");
  val->add_option("--seed", validate_seed, "seed for the randomized checks");
  val->add_option("--cases", validate_cases, "number of randomized oracle comparisons");

  std::string experiment_name;
  auto* exp = app.add_subcommand("experiment", "run a canned numerical study");
  exp->add_option("name", experiment_name, "pgreedy-square | pacman | beta-scale | failure")
      ->required()
      ->check(CLI::IsMember({"pgreedy-square", "pacman", "beta-scale", "failure"}));
  exp_over.attach(exp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? exit_ok : exit_validation;
  }

  try {
    if (*val) return run_validate(validate_seed, validate_cases);

    RunConfig config;
    if (*solve) {
      config = default_config("solve");
      if (config_path) {
        std::ifstream in(*config_path);
        if (!in) throw ConfigError("config: cannot open " + *config_path);
        Json j;
        try {
          j = Json::parse(in);
        } catch (const nlohmann::json::parse_error& e) {
          throw ConfigError(std::string("config: ") + e.what());
        }
        config = config_from_json(j, config);
      }
      if (problem) config.problem = parse_problem_id(*problem);
      if (interior_csv) config.interior_csv = *interior_csv;
      if (boundary_csv) config.boundary_csv = *boundary_csv;
      solve_over.apply(config);
    } else {
      config = default_config(experiment_name);
      exp_over.apply(config);
    }
    print_summary(run_experiment(config));
    return exit_ok;
  } catch (const NumericalBreakdown& e) {
    std::cerr << "numerical breakdown: " << e.what() << "\n";
    return exit_breakdown;
  } catch (const SingularSystem& e) {
    std::cerr << "numerical breakdown: " << e.what() << "\n";
    return exit_breakdown;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_validation;
  }
}
