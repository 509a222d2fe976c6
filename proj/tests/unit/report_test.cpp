#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pdegreedy/report.hpp"

using namespace pdegreedy;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("pdegreedy_report_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

std::vector<std::pair<double, double>> power_law(double exponent, int n) {
  std::vector<std::pair<double, double>> s;
  for (int i = 1; i <= n; ++i) s.emplace_back(i, std::pow(static_cast<double>(i), exponent));
  return s;
}

}  // namespace

TEST_SUITE("cli_reporting") {

TEST_CASE("decay rate fits") {
  CHECK(std::abs(fit_decay_rate(power_law(-2.0, 100)) + 2.0) < 1e-10);
  CHECK(std::abs(fit_decay_rate(power_law(0.0, 40))) < 1e-12);
  CHECK(std::abs(fit_decay_rate(power_law(0.5 - 3.5 / 2.0, 64)) + 1.25) < 1e-10);
  // non-positive entries are skipped, too few points is an error
  auto s = power_law(-1.0, 20);
  s[15].second = 0.0;
  CHECK(std::abs(fit_decay_rate(s) + 1.0) < 1e-10);
  CHECK_THROWS_AS(fit_decay_rate(power_law(-1.0, 6)), Error);
}

TEST_CASE("windowed minimum of the residual column") {
  RunReport rep;
  for (double v : {5.0, 1.0, 4.0, 3.0, 2.0, 6.0}) {
    IterationRecord r;
    r.max_residual = v;
    rep.iterations.push_back(r);
  }
  // n = 3: min over i in [2, 3]; n = 4: [3, 4]; n = 6: [4, 6]
  const auto w = window_min_residuals(rep);
  CHECK(w == std::vector<double>{5.0, 1.0, 1.0, 3.0, 2.0, 2.0});
}

TEST_CASE("beta parsing and formatting") {
  CHECK(parse_betas("0.5") == std::vector<double>{0.5});
  const auto b = parse_betas("0, 0.2,inf");
  REQUIRE(b.size() == 3);
  CHECK(std::isinf(b[2]));
  CHECK(format_beta(b[2]) == "inf");
  CHECK(format_beta(0.2) == "0.2");
  CHECK_THROWS_AS(parse_betas("-1"), ConfigError);
  CHECK_THROWS_AS(parse_betas("abc"), ConfigError);
  CHECK_THROWS_AS(parse_betas(""), ConfigError);
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(std::nan("")) == "nan");
}

TEST_CASE("config validation names the offending field") {
  RunConfig c = default_config("pacman");
  CHECK_NOTHROW(validate(c));
  auto message = [](RunConfig bad) {
    try {
      validate(bad);
    } catch (const ConfigError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  RunConfig k = c;
  k.kernel = "thin-plate";
  CHECK(message(k).rfind("kernel", 0) == 0);
  RunConfig e = c;
  e.eps = -1.0;
  CHECK(message(e).rfind("eps", 0) == 0);
  RunConfig n = c;
  n.n_max = 0;
  CHECK(message(n).rfind("n_max", 0) == 0);
  CHECK_THROWS_AS(default_config("heat"), ConfigError);
}

TEST_CASE("config JSON round trip") {
  RunConfig c = default_config("beta-scale");
  c.betas = {0.0, beta_infinity};
  c.seed = 12345678901234ULL;
  const Json j = to_json(c);
  const RunConfig back = config_from_json(Json::parse(j.dump()), default_config("solve"));
  CHECK(to_json(back) == j);
  CHECK(back.problem == ProblemId::BetaScale1D);
  CHECK(std::isinf(back.betas[1]));

  const RunConfig partial = config_from_json(Json::parse(R"({"eps": 2.5, "betas": [1, "inf"]})"), c);
  CHECK(partial.eps == 2.5);
  CHECK(partial.seed == c.seed);
  CHECK(partial.betas.size() == 2);
  CHECK_THROWS_AS(config_from_json(Json::parse(R"({"eps": "big"})"), c), ConfigError);
  CHECK_THROWS_AS(config_from_json(Json::parse("[1]"), c), ConfigError);
}

TEST_CASE("CSV and JSON emitters") {
  const auto dir = scratch_dir("emit");
  std::filesystem::create_directories(dir);
  RunReport empty;
  emit_csv(empty, 2, dir / "empty.csv");
  CHECK(slurp(dir / "empty.csv") ==
        "n,chosen_kind,x1,x2,score,max_power,max_residual,interior_count,boundary_count,chosen_index,chosen_power\n");

  RunReport rep;
  IterationRecord r;
  r.n = 1;
  r.index = 4;
  r.kind = FunctionalKind::BoundaryDirichlet;
  r.point = Eigen::Vector2d(0.5, 1.0);
  r.score = 0.25;
  r.max_power = 0.125;
  r.max_residual = 2.0;
  r.boundary_count = 1;
  r.chosen_power = 1.0;
  rep.iterations.push_back(r);
  emit_csv(rep, 2, dir / "a.csv", {{"extra", {7.0}}});
  emit_csv(rep, 2, dir / "b.csv", {{"extra", {7.0}}});
  CHECK(slurp(dir / "a.csv") == slurp(dir / "b.csv"));
  CHECK(slurp(dir / "a.csv").find("\n1,boundary,0.5,1,0.25,0.125,2,0,1,4,1,7\n") != std::string::npos);

  Json j = {{"name", "x"}, {"values", {1.5, 2.5}}, {"nested", {{"a", 1}}}};
  emit_json(j, dir / "s.json");
  emit_json(j, dir / "t.json");
  CHECK(slurp(dir / "s.json") == slurp(dir / "t.json"));
  const Json back = Json::parse(slurp(dir / "s.json"));
  CHECK(back == j);
  CHECK(back.begin().key() == "name");
}

TEST_CASE("small experiment runs are reproducible byte for byte") {
  RunConfig c = default_config("pacman");
  c.interior_n = 300;
  c.boundary_n = 60;
  c.n_max = 25;
  c.test_interior_n = 200;
  c.test_boundary_n = 50;
  c.out_dir = scratch_dir("det1");
  const ExperimentResult a = run_experiment(c);
  c.out_dir = scratch_dir("det2");
  const ExperimentResult b = run_experiment(c);
  CHECK(slurp(a.summary_path) == slurp(b.summary_path));
  REQUIRE(a.runs.size() == 2);
  for (std::size_t i = 0; i < a.runs.size(); ++i) CHECK(slurp(a.runs[i].csv_path) == slurp(b.runs[i].csv_path));
  const Json s = Json::parse(slurp(a.summary_path));
  CHECK(s["runs"][0]["beta"] == "1");
  CHECK(s["runs"][0]["selected"].size() == 25);
  CHECK(s["config"]["kernel"] == "matern3");
}

TEST_CASE("custom candidate clouds from CSV") {
  const auto dir = scratch_dir("csv");
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "in.csv") << "x1\n0.25\n0.5\n0.75\n";
  std::ofstream(dir / "bd.csv") << "0\n1\n";
  RunConfig c = default_config("beta-scale");
  c.betas = {1.0};
  c.n_max = 5;
  c.interior_csv = dir / "in.csv";
  c.boundary_csv = dir / "bd.csv";
  c.out_dir = dir / "out";
  const ExperimentResult r = run_experiment(c);
  const Json s = Json::parse(slurp(r.summary_path));
  CHECK(s["candidates"]["interior"] == 3);
  CHECK(s["candidates"]["boundary"] == 2);
  CHECK(r.runs[0].greedy.state.n() == 5);

  std::ofstream(dir / "outside.csv") << "1.5\n";
  c.interior_csv = dir / "outside.csv";
  CHECK_THROWS_AS(run_experiment(c), UsageError);
}

}
