#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pdegreedy/greedy.hpp"

namespace pdegreedy {

using Json = nlohmann::ordered_json;

/// Everything a run needs. Experiment defaults come from default_config().
struct RunConfig {
  /// "pgreedy-square", "pacman", "beta-scale", "failure", or "solve" for a plain run.
  std::string experiment = "solve";
  ProblemId problem = ProblemId::PacmanLaplace;
  std::string kernel = "matern3";
  double eps = 1.0;
  double amplitude = 1.0;
  /// Replace the amplitude by 1 / max(k(x,x), LLk(x,x)).
  bool normalize_amplitude = false;
  std::vector<double> betas{1.0};
  Index n_max = 200;
  std::uint64_t seed = 1;
  Index interior_n = 5000;
  Index boundary_n = 1000;
  Index test_interior_n = 4096;
  Index test_boundary_n = 512;
  double tol_power = 1e-7;
  double tol_residual_rel = 1e-12;
  bool reweight = false;
  /// Optional CSV clouds replacing the sampled candidate sets.
  std::optional<std::filesystem::path> interior_csv;
  std::optional<std::filesystem::path> boundary_csv;
  std::filesystem::path out_dir = "out";
};

RunConfig default_config(const std::string& experiment);

/// Throws ConfigError naming the offending field.
void validate(const RunConfig& config);

Json to_json(const RunConfig& config);
/// Keys as in to_json; missing keys keep the values of `base`.
RunConfig config_from_json(const Json& j, RunConfig base);

/// Parses "0.5", "inf", or a comma separated list of those.
std::vector<double> parse_betas(const std::string& text);
std::string format_beta(double beta);

/// Least-squares slope of log(value) against log(n) over the last tail_fraction of the series,
/// skipping non-positive values. Needs at least 5 usable points.
double fit_decay_rate(const std::vector<std::pair<double, double>>& series, double tail_fraction = 0.5);

/// min over i in [floor(n/2)+1, n] of max_residual_i, per iteration.
std::vector<double> window_min_residuals(const RunReport& report);

/// Per-iteration CSV; extra_columns are appended with the given header names.
void emit_csv(const RunReport& report, int dim, const std::filesystem::path& path,
              const std::vector<std::pair<std::string, std::vector<double>>>& extra_columns = {});
void emit_json(const Json& summary, const std::filesystem::path& path);

/// 17 significant digits, "nan"/"inf" spelled out.
std::string format_double(double v);

struct SeriesResult {
  SeriesResult(double b, GreedyResult g) : beta(b), greedy(std::move(g)) {}

  double beta = 0.0;
  GreedyResult greedy;
  ErrorReport errors;
  std::vector<double> solution_errors;
  std::optional<double> power_slope;
  std::optional<double> residual_slope;
  std::optional<double> error_slope;
  /// <f, L s_n>_{L2(0,1)} for the 1D failure study.
  std::optional<double> rhs_inner_product;
  /// max over selected functionals of the power value after the final step.
  double max_power_at_selected = 0.0;
  /// max over selected functionals of |lambda(u - s_n)|.
  double max_residual_at_selected = 0.0;
  std::filesystem::path csv_path;
};

struct ExperimentResult {
  RunConfig config;
  std::vector<SeriesResult> runs;
  Json summary;
  std::filesystem::path summary_path;
};

/// Runs one greedy series per beta, writes iterations_beta_<b>.csv and summary.json into out_dir.
ExperimentResult run_experiment(const RunConfig& config);

}  // namespace pdegreedy
