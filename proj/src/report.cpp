#include "pdegreedy/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "pdegreedy/oracle.hpp"

namespace pdegreedy {

RunConfig default_config(const std::string& experiment) {
  RunConfig c;
  c.experiment = experiment;
  if (experiment == "pgreedy-square") {
    c.problem = ProblemId::PGreedySquare;
    c.kernel = "matern2";
    c.betas = {0.0};
    c.n_max = 1000;
    c.interior_n = 10000;
    c.boundary_n = 1000;
    c.reweight = true;
  } else if (experiment == "pacman") {
    c.problem = ProblemId::PacmanLaplace;
    c.kernel = "matern3";
    c.eps = 0.5;
    c.betas = {1.0, 0.0};
    c.n_max = 200;
    c.interior_n = 50000;
    c.boundary_n = 2000;
  } else if (experiment == "beta-scale") {
    c.problem = ProblemId::BetaScale1D;
    c.kernel = "matern2";
    c.betas = {0.0, 0.2, 0.4, 0.6, 0.8, 1.0};
    c.n_max = 120;
    c.interior_n = 498;
    c.boundary_n = 2;
  } else if (experiment == "failure") {
    c.problem = ProblemId::NoSolution1D;
    c.kernel = "wendland33";
    c.normalize_amplitude = true;
    c.betas = {1.0};
    c.n_max = 200;
    c.interior_n = 999;
    c.boundary_n = 2;
  } else if (experiment != "solve") {
    throw ConfigError("experiment: unknown experiment '" + experiment + "'");
  }
  return c;
}

void validate(const RunConfig& c) {
  static const std::vector<std::string> known{"solve", "pgreedy-square", "pacman", "beta-scale", "failure"};
  if (std::find(known.begin(), known.end(), c.experiment) == known.end()) {
    throw ConfigError("experiment: unknown experiment '" + c.experiment + "'");
  }
  try {
    parse_profile(c.kernel);
  } catch (const ConfigError& e) {
    throw ConfigError(std::string("kernel: ") + e.what());
  }
  if (!(c.eps > 0.0) || !std::isfinite(c.eps)) throw ConfigError("eps: must be a positive number");
  if (!(c.amplitude > 0.0) || !std::isfinite(c.amplitude)) throw ConfigError("amplitude: must be a positive number");
  if (c.betas.empty()) throw ConfigError("beta: at least one value required");
  for (double b : c.betas) {
    if (!(b >= 0.0)) throw ConfigError("beta: values must be >= 0 or 'inf'");
  }
  if (c.n_max < 1) throw ConfigError("n_max: must be >= 1");
  if (c.interior_n < 1) throw ConfigError("interior_n: must be >= 1");
  if (c.boundary_n < 1) throw ConfigError("boundary_n: must be >= 1");
  if (c.test_interior_n < 1) throw ConfigError("test_interior_n: must be >= 1");
  if (c.test_boundary_n < 1) throw ConfigError("test_boundary_n: must be >= 1");
  if (!(c.tol_power > 0.0)) throw ConfigError("tol_power: must be positive");
  if (!(c.tol_residual_rel >= 0.0)) throw ConfigError("tol_residual_rel: must be >= 0");
}

std::vector<double> parse_betas(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item == "inf" || item == "infinity") {
      out.push_back(beta_infinity);
      continue;
    }
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw ConfigError("beta: cannot parse '" + item + "'");
    }
    if (used != item.size() || !(v >= 0.0) || !std::isfinite(v)) throw ConfigError("beta: invalid value '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw ConfigError("beta: empty list");
  return out;
}

std::string format_beta(double beta) {
  if (std::isinf(beta)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", beta);
  return buf;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json to_json(const RunConfig& c) {
  Json j;
  j["experiment"] = c.experiment;
  j["problem"] = std::string(problem_name(c.problem));
  j["kernel"] = c.kernel;
  j["eps"] = c.eps;
  j["amplitude"] = c.amplitude;
  j["normalize_amplitude"] = c.normalize_amplitude;
  Json betas = Json::array();
  for (double b : c.betas) betas.push_back(format_beta(b));
  j["betas"] = betas;
  j["n_max"] = c.n_max;
  j["seed"] = c.seed;
  j["interior_n"] = c.interior_n;
  j["boundary_n"] = c.boundary_n;
  j["test_interior_n"] = c.test_interior_n;
  j["test_boundary_n"] = c.test_boundary_n;
  j["tol_power"] = c.tol_power;
  j["tol_residual_rel"] = c.tol_residual_rel;
  j["reweight"] = c.reweight;
  j["interior_csv"] = c.interior_csv ? Json(c.interior_csv->string()) : Json();
  j["boundary_csv"] = c.boundary_csv ? Json(c.boundary_csv->string()) : Json();
  return j;
}

RunConfig config_from_json(const Json& j, RunConfig c) {
  if (!j.is_object()) throw ConfigError("config: expected a JSON object");
  auto field = [&](const char* key, auto& target) {
    if (!j.contains(key) || j.at(key).is_null()) return;
    try {
      j.at(key).get_to(target);
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(std::string(key) + ": " + e.what());
    }
  };
  if (j.contains("experiment")) {
    std::string exp;
    field("experiment", exp);
    const RunConfig defaults = default_config(exp);
    c = defaults;
  }
  if (j.contains("problem") && !j.at("problem").is_null()) {
    std::string name;
    field("problem", name);
    try {
      c.problem = parse_problem_id(name);
    } catch (const ConfigError& e) {
      throw ConfigError(std::string("problem: ") + e.what());
    }
  }
  field("kernel", c.kernel);
  field("eps", c.eps);
  field("amplitude", c.amplitude);
  field("normalize_amplitude", c.normalize_amplitude);
  if (j.contains("betas")) {
    const auto& b = j.at("betas");
    std::vector<double> betas;
    for (const auto& item : b.is_array() ? b : Json::array({b})) {
      if (item.is_number()) {
        betas.push_back(item.get<double>());
      } else if (item.is_string()) {
        const auto parsed = parse_betas(item.get<std::string>());
        betas.insert(betas.end(), parsed.begin(), parsed.end());
      } else {
        throw ConfigError("betas: expected numbers or strings");
      }
    }
    c.betas = betas;
  }
  field("n_max", c.n_max);
  field("seed", c.seed);
  field("interior_n", c.interior_n);
  field("boundary_n", c.boundary_n);
  field("test_interior_n", c.test_interior_n);
  field("test_boundary_n", c.test_boundary_n);
  field("tol_power", c.tol_power);
  field("tol_residual_rel", c.tol_residual_rel);
  field("reweight", c.reweight);
  if (j.contains("interior_csv") && !j.at("interior_csv").is_null()) c.interior_csv = j.at("interior_csv").get<std::string>();
  if (j.contains("boundary_csv") && !j.at("boundary_csv").is_null()) c.boundary_csv = j.at("boundary_csv").get<std::string>();
  if (j.contains("out_dir")) c.out_dir = j.at("out_dir").get<std::string>();
  return c;
}

double fit_decay_rate(const std::vector<std::pair<double, double>>& series, double tail_fraction) {
  if (!(tail_fraction > 0.0 && tail_fraction <= 1.0)) throw UsageError("fit_decay_rate: tail_fraction must be in (0, 1]");
  const auto total = series.size();
  const auto count = std::min(total, static_cast<std::size_t>(std::ceil(tail_fraction * static_cast<double>(total))));
  std::vector<double> xs, ys;
  for (std::size_t i = total - count; i < total; ++i) {
    const auto [n, v] = series[i];
    if (n > 0.0 && v > 0.0 && std::isfinite(v)) {
      xs.push_back(std::log(n));
      ys.push_back(std::log(v));
    }
  }
  if (xs.size() < 5) {
    throw Error("fit_decay_rate: only " + std::to_string(xs.size()) + " usable points in the tail window (need 5)");
  }
  const auto m = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= m;
  my /= m;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (!(sxx > 0.0)) throw Error("fit_decay_rate: degenerate abscissae");
  return sxy / sxx;
}

std::vector<double> window_min_residuals(const RunReport& report) {
  const auto& it = report.iterations;
  std::vector<double> out(it.size());
  for (std::size_t n = 1; n <= it.size(); ++n) {
    double m = it[n - 1].max_residual;
    for (std::size_t i = n / 2 + 1; i <= n; ++i) m = std::min(m, it[i - 1].max_residual);
    out[n - 1] = m;
  }
  return out;
}

void emit_csv(const RunReport& report, int dim, const std::filesystem::path& path,
              const std::vector<std::pair<std::string, std::vector<double>>>& extra_columns) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << "n,chosen_kind";
  for (int k = 1; k <= dim; ++k) out << ",x" << k;
  out << ",score,max_power,max_residual,interior_count,boundary_count,chosen_index,chosen_power";
  for (const auto& [name, values] : extra_columns) out << ',' << name;
  out << '\n';
  for (std::size_t r = 0; r < report.iterations.size(); ++r) {
    const auto& rec = report.iterations[r];
    out << rec.n << ',' << (rec.kind == FunctionalKind::InteriorL ? "interior" : "boundary");
    for (int k = 0; k < dim; ++k) out << ',' << format_double(rec.point(k));
    out << ',' << format_double(rec.score) << ',' << format_double(rec.max_power) << ','
        << format_double(rec.max_residual) << ',' << rec.interior_count << ',' << rec.boundary_count << ','
        << rec.index << ',' << format_double(rec.chosen_power);
    for (const auto& [name, values] : extra_columns) {
      out << ',' << (r < values.size() ? format_double(values[r]) : std::string());
    }
    out << '\n';
  }
  if (!out) throw Error("write failed for " + path.string());
}

void emit_json(const Json& summary, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << summary.dump(2) << '\n';
  if (!out) throw Error("write failed for " + path.string());
}

namespace {

std::optional<double> try_slope(const std::vector<std::pair<double, double>>& series) {
  try {
    return fit_decay_rate(series);
  } catch (const Error&) {
    return std::nullopt;
  }
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(); }

PointCloud concat(const PointCloud& a, const PointCloud& b) {
  PointCloud out(std::max(a.rows(), b.rows()), a.cols() + b.cols());
  if (a.cols() > 0) out.leftCols(a.cols()) = a;
  if (b.cols() > 0) out.rightCols(b.cols()) = b;
  return out;
}

Json point_json(const Point& x) {
  Json arr = Json::array();
  for (Index k = 0; k < x.size(); ++k) arr.push_back(x(k));
  return arr;
}

}  // namespace

ExperimentResult run_experiment(const RunConfig& config) {
  validate(config);
  Problem problem = builtin_problem(config.problem);
  discretize(problem, config.interior_n, config.boundary_n, config.seed);
  if (config.interior_csv) problem.interior_cloud = load_points_csv(*config.interior_csv, problem.dim());
  if (config.boundary_csv) problem.boundary_cloud = load_points_csv(*config.boundary_csv, problem.dim());
  check_membership(problem);

  Kernel kernel(parse_profile(config.kernel), config.eps, config.amplitude, problem.dim());
  if (config.normalize_amplitude) kernel = kernel.with_amplitude(normalized_amplitude(kernel, problem.op));

  const CandidateSet candidates = make_candidates(problem, kernel);
  const Eigen::VectorXd rhs = candidate_rhs(problem, candidates);
  const PointCloud test_interior = sample_interior(problem.geometry, config.test_interior_n, config.seed + 2);
  const PointCloud test_boundary = sample_boundary(problem.geometry, config.test_boundary_n, config.seed + 3);

  std::filesystem::create_directories(config.out_dir);

  ExperimentResult result;
  result.config = config;
  Json& summary = result.summary;
  summary["experiment"] = config.experiment;
  summary["config"] = to_json(config);
  summary["kernel"] = {{"profile", std::string(profile_name(kernel.profile()))},
                       {"eps", kernel.shape()},
                       {"amplitude", kernel.amplitude()},
                       {"dim", kernel.dim()}};
  summary["operator"] = {{"laplace_coeff", problem.op.laplace_coeff}, {"id_coeff", problem.op.id_coeff}};
  summary["candidates"] = {{"interior", problem.interior_cloud.cols()}, {"boundary", problem.boundary_cloud.cols()}};
  summary["test_cloud"] = {{"interior", test_interior.cols()}, {"boundary", test_boundary.cols()}};
  if (config.experiment == "pgreedy-square") {
    const double tau = sobolev_smoothness(kernel.profile(), kernel.dim());
    // P-greedy power decay n^(1/2 - (tau - 2)/d) for finitely smooth kernels
    summary["expected_power_slope"] =
        std::isnan(tau) ? Json() : Json(0.5 - (tau - 2.0) / static_cast<double>(kernel.dim()));
  }

  Json runs = Json::array();
  for (double beta : config.betas) {
    GreedyOptions options;
    options.beta = beta;
    options.n_max = config.n_max;
    options.tol_power = config.tol_power;
    options.tol_residual_rel = config.tol_residual_rel;
    options.reweight = config.reweight;

    SeriesResult series{beta, run_greedy(candidates, rhs, options)};
    const auto& report = series.greedy.report;
    const auto& state = series.greedy.state;
    const auto& model = series.greedy.model;
    series.errors = error_report(model, problem, test_interior, test_boundary);

    std::vector<std::pair<double, double>> power_series, residual_series;
    for (const auto& rec : report.iterations) {
      power_series.emplace_back(static_cast<double>(rec.n), rec.max_power);
      residual_series.emplace_back(static_cast<double>(rec.n), rec.max_residual);
    }
    series.power_slope = try_slope(power_series);
    series.residual_slope = try_slope(residual_series);
    // recomputed from the Newton rows rather than read from the clamped p2 array
    for (Index idx : state.selected) {
      const double p2 = gram(kernel, problem.op, candidates[idx], candidates[idx]) -
                        state.newton_block().row(idx).squaredNorm();
      series.max_power_at_selected = std::max(series.max_power_at_selected, std::sqrt(std::max(0.0, p2)));
      series.max_residual_at_selected = std::max(series.max_residual_at_selected, std::abs(state.res(idx)));
    }

    std::vector<std::pair<std::string, std::vector<double>>> extra{{"window_min_residual", window_min_residuals(report)}};
    if (config.experiment == "beta-scale" && problem.true_solution) {
      series.solution_errors =
          solution_error_history(state, candidates, concat(test_interior, test_boundary), *problem.true_solution);
      std::vector<std::pair<double, double>> err_series;
      for (std::size_t i = 0; i < series.solution_errors.size(); ++i) {
        err_series.emplace_back(static_cast<double>(i + 1), series.solution_errors[i]);
      }
      series.error_slope = try_slope(err_series);
      extra.emplace_back("solution_error", series.solution_errors);
    }
    if (config.experiment == "failure") {
      series.rhs_inner_product = l2_inner_product(
          [&](double x) { return problem.f(Eigen::Matrix<double, 1, 1>(x)); },
          [&](double x) { return evaluate(model, Eigen::Matrix<double, 1, 1>(x), true); }, 0.0, 1.0, 1000);
    }

    const std::string csv_name = "iterations_beta_" + format_beta(beta) + ".csv";
    series.csv_path = config.out_dir / csv_name;
    emit_csv(report, problem.dim(), series.csv_path, extra);

    Json run;
    run["beta"] = format_beta(beta);
    run["termination"] = std::string(termination_name(report.termination));
    run["iterations"] = report.iterations.size();
    run["interior_selected"] = report.iterations.empty() ? 0 : report.iterations.back().interior_count;
    run["boundary_selected"] = report.iterations.empty() ? 0 : report.iterations.back().boundary_count;
    run["initial_max_power"] = report.initial_max_power;
    run["final_max_power"] = report.iterations.empty() ? report.initial_max_power : report.iterations.back().max_power;
    run["final_max_residual"] =
        report.iterations.empty() ? report.initial_max_residual : report.iterations.back().max_residual;
    run["max_power_at_selected"] = series.max_power_at_selected;
    run["max_residual_at_selected"] = series.max_residual_at_selected;
    run["errors"] = {{"interior_residual_sup", series.errors.interior_residual},
                     {"boundary_residual_sup", series.errors.boundary_residual},
                     {"max_principle_constant", series.errors.max_principle_constant},
                     {"max_principle_bound", series.errors.max_principle_bound},
                     {"solution_error_sup", optional_number(series.errors.solution_error)},
                     {"relative_solution_error", optional_number(series.errors.relative_solution_error)}};
    run["slopes"] = {{"max_power", optional_number(series.power_slope)},
                     {"max_residual", optional_number(series.residual_slope)},
                     {"solution_error", optional_number(series.error_slope)}};
    if (series.rhs_inner_product) run["rhs_inner_product"] = *series.rhs_inner_product;
    if (config.experiment == "pgreedy-square" && !model.selected.empty()) {
      PointCloud sel(problem.dim(), model.size());
      for (Index j = 0; j < model.size(); ++j) sel.col(j) = model.selected[static_cast<std::size_t>(j)].point;
      run["fill_distance_selected"] = fill_distance(sel, test_interior);
    }
    run["csv"] = csv_name;
    Json selected = Json::array();
    for (Index j = 0; j < model.size(); ++j) {
      const auto& f = model.selected[static_cast<std::size_t>(j)];
      selected.push_back({{"index", f.index},
                          {"kind", f.kind == FunctionalKind::InteriorL ? "interior" : "boundary"},
                          {"x", point_json(f.point)},
                          {"alpha", model.alpha(j)}});
    }
    run["selected"] = selected;
    runs.push_back(run);
    result.runs.push_back(std::move(series));
  }
  summary["runs"] = runs;
  result.summary_path = config.out_dir / "summary.json";
  emit_json(summary, result.summary_path);
  return result;
}

}  // namespace pdegreedy
