// Acceptance gate: one PASS/FAIL line per criterion, tolerances pinned below.
// Usage: pdegreedy_acceptance <scratch dir>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "pdegreedy/report.hpp"
#include "pdegreedy/validation.hpp"

namespace {

using namespace pdegreedy;
namespace fs = std::filesystem;

// criterion 1
constexpr int oracle_cases = 20;
constexpr std::uint64_t oracle_seed = 20240101;
constexpr double oracle_alpha_rel = 1e-8;
constexpr double oracle_power_abs = 1e-7;
constexpr double oracle_seconds = 30.0;
// criterion 2
constexpr int fd_pairs = 100;
constexpr double fd_step = 1e-4;
constexpr double fd_limit = 1e-5;
constexpr double fd_limit_wendland32 = 1e-3;
constexpr double fd_seconds = 5.0;
// criterion 3
constexpr double boundary_share_max = 0.10;
constexpr double table_seconds = 120.0;
// criterion 4
constexpr double pacman_rel_error_max = 1e-4;
constexpr double pacman_seconds = 300.0;
// criterion 5
constexpr double slope_lo = -2.6, slope_hi = -1.4;
constexpr double residual_slope_gap = 0.2;
constexpr double rates_seconds = 120.0;
// criterion 6
constexpr Index failure_after_n = 20;
constexpr double failure_residual_floor = 0.5;
constexpr double failure_power_max = 1e-7;
constexpr double failure_inner_product_max = 1e-2;
constexpr double failure_seconds = 60.0;
// soft property
constexpr double wendland_slope_target = -0.25, wendland_slope_band = 0.15;

int failures = 0;

void line(bool pass, const std::string& name, const std::string& detail) {
  if (!pass) ++failures;
  std::printf("%s  %-28s %s\n", pass ? "PASS" : "FAIL", name.c_str(), detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Runs f and reports an exception as a failed criterion.
void guarded(const std::string& name, const std::function<void()>& f) {
  try {
    f();
  } catch (const std::exception& e) {
    line(false, name, std::string("exception: ") + e.what());
  }
}

RunConfig table_config(const fs::path& out) {
  RunConfig c = default_config("pgreedy-square");
  c.interior_n = 2000;
  c.boundary_n = 500;
  c.n_max = 400;
  c.out_dir = out / "table";
  return c;
}

RunConfig pacman_config(const fs::path& out) {
  RunConfig c = default_config("pacman");
  c.interior_n = 5000;
  c.boundary_n = 1000;
  c.n_max = 200;
  c.out_dir = out / "pacman";
  return c;
}

RunConfig rates_config(const fs::path& out) {
  RunConfig c = default_config("beta-scale");
  c.interior_n = 498;
  c.boundary_n = 2;
  c.n_max = 120;
  c.out_dir = out / "rates";
  return c;
}

RunConfig failure_config(const fs::path& out) {
  RunConfig c = default_config("failure");
  c.n_max = 200;
  c.out_dir = out / "failure";
  return c;
}

void oracle_equivalence() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst_alpha = 0.0, worst_power = 0.0;
  int bad = 0;
  for (int i = 0; i < oracle_cases; ++i) {
    const auto c = random_equivalence_case(oracle_seed + 1000 + static_cast<std::uint64_t>(i));
    const auto o = check_oracle_equivalence(c);
    worst_alpha = std::max(worst_alpha, o.alpha_rel_error);
    worst_power = std::max(worst_power, o.power_abs_error);
    if (!(o.alpha_rel_error <= oracle_alpha_rel && o.power_abs_error <= oracle_power_abs)) {
      ++bad;
      std::printf("      case %s: alpha %.2e power %.2e\n", c.describe().c_str(), o.alpha_rel_error, o.power_abs_error);
    }
  }
  const double t = seconds_since(t0);
  line(bad == 0 && t < oracle_seconds, "1 oracle equivalence",
       fmt("%d cases, %d mismatched; max alpha rel %.2e (<= %.0e), max power abs %.2e (<= %.0e); %.2fs (< %.0fs)",
           oracle_cases, bad, worst_alpha, oracle_alpha_rel, worst_power, oracle_power_abs, t, oracle_seconds));
}

void kernel_derivatives() {
  const auto t0 = std::chrono::steady_clock::now();
  constexpr std::array profiles{Profile::Gaussian, Profile::Wendland32, Profile::Wendland33, Profile::MaternQuadratic,
                                Profile::MaternCubic};
  bool ok = true;
  std::string detail;
  for (auto p : profiles) {
    for (int d : {1, 2}) {
      const auto pairs = random_point_pairs(d, fd_pairs, 0.02, 0.99, 7 + static_cast<std::uint64_t>(d));
      const double err = fd_check_derivatives(Kernel(p, 1.0, 1.0, d), {1.0, 0.0}, pairs, fd_step).worst();
      const double limit = p == Profile::Wendland32 ? fd_limit_wendland32 : fd_limit;
      ok = ok && err <= limit;
      detail += fmt("%s/d%d %.1e  ", std::string(profile_name(p)).c_str(), d, err);
    }
  }
  const double t = seconds_since(t0);
  line(ok && t < fd_seconds, "2 kernel derivatives",
       detail + fmt("(<= %.0e, wendland32 <= %.0e); %.2fs (< %.0fs)", fd_limit, fd_limit_wendland32, t, fd_seconds));
}

void table_regime(const fs::path& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = run_experiment(table_config(out));
  const double t = seconds_since(t0);
  const auto& last = r.runs.at(0).greedy.report.iterations.back();
  const double share = static_cast<double>(last.boundary_count) / static_cast<double>(last.n);
  line(last.n == 400 && share <= boundary_share_max && t < table_seconds, "3 P-greedy boundary share",
       fmt("%ld interior / %ld boundary of %ld, share %.3f (<= %.2f); %.1fs (< %.0fs)", static_cast<long>(last.interior_count),
           static_cast<long>(last.boundary_count), static_cast<long>(last.n), share, boundary_share_max, t, table_seconds));
}

void pacman_ordering(const fs::path& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = run_experiment(pacman_config(out));
  const double t = seconds_since(t0);
  double e1 = NAN, e0 = NAN;
  for (const auto& s : r.runs) (s.beta == 1.0 ? e1 : e0) = s.errors.relative_solution_error.value();
  line(e1 <= pacman_rel_error_max && e1 < e0 && t < pacman_seconds, "4 pacman f- vs P-greedy",
       fmt("relative sup error beta=1 %.3e (<= %.0e), beta=0 %.3e; %.1fs (< %.0fs)", e1, pacman_rel_error_max, e0, t,
           pacman_seconds));
}

void convergence_rates(const fs::path& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = run_experiment(rates_config(out));
  const double t = seconds_since(t0);
  bool ok = true;
  std::string detail = "error slopes";
  double res0 = NAN, res1 = NAN;
  for (const auto& s : r.runs) {
    const double slope = s.error_slope.value_or(NAN);
    ok = ok && slope >= slope_lo && slope <= slope_hi;
    detail += fmt(" %s:%.2f", format_beta(s.beta).c_str(), slope);
    if (s.beta == 0.0) res0 = s.residual_slope.value_or(NAN);
    if (s.beta == 1.0) res1 = s.residual_slope.value_or(NAN);
  }
  ok = ok && res1 <= res0 - residual_slope_gap;
  line(ok && t < rates_seconds, "5 convergence rates",
       detail + fmt(" (in [%.1f, %.1f]); residual slope beta=1 %.2f vs beta=0 %.2f (gap >= %.1f); %.1fs (< %.0fs)",
                    slope_lo, slope_hi, res1, res0, residual_slope_gap, t, rates_seconds));
}

void failure_case(const fs::path& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = run_experiment(failure_config(out));
  const double t = seconds_since(t0);
  const auto& s = r.runs.at(0);
  double floor = INFINITY;
  for (const auto& it : s.greedy.report.iterations) {
    if (it.n >= failure_after_n) floor = std::min(floor, it.max_residual);
  }
  const double ip = s.rhs_inner_product.value_or(NAN);
  const bool ok = s.greedy.state.n() == 200 && floor >= failure_residual_floor &&
                  s.max_power_at_selected <= failure_power_max && std::abs(ip) <= failure_inner_product_max;
  line(ok && t < failure_seconds, "6 no-solution failure",
       fmt("min max-residual for n >= %ld: %.3f (>= %.1f); power at selected %.2e (<= %.0e); <f, Ls_200> = %.2e "
           "(|.| <= %.0e); %.1fs (< %.0fs)",
           static_cast<long>(failure_after_n), floor, failure_residual_floor, s.max_power_at_selected, failure_power_max,
           ip, failure_inner_product_max, t, failure_seconds));
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void determinism(const fs::path& out) {
  const fs::path again = out / "rerun";
  run_experiment(table_config(again));
  run_experiment(pacman_config(again));
  run_experiment(rates_config(again));
  run_experiment(failure_config(again));
  int files = 0, differing = 0;
  for (const char* sub : {"table", "pacman", "rates", "failure"}) {
    for (const auto& entry : fs::directory_iterator(out / sub)) {
      ++files;
      const fs::path twin = again / sub / entry.path().filename();
      if (!fs::exists(twin) || slurp(entry.path()) != slurp(twin)) {
        ++differing;
        std::printf("      differs: %s\n", entry.path().string().c_str());
      }
    }
  }
  line(files > 0 && differing == 0, "7 determinism", fmt("%d report files compared, %d differ", files, differing));
}

void wendland_slope(const fs::path& out) {
  RunConfig c = default_config("pgreedy-square");
  c.kernel = "wendland32";
  c.reweight = false;
  c.interior_n = 1600;
  c.boundary_n = 400;
  c.n_max = 400;
  c.out_dir = out / "wendland_slope";
  const auto r = run_experiment(c);
  const double slope = r.runs.at(0).power_slope.value_or(NAN);
  line(std::abs(slope - wendland_slope_target) <= wendland_slope_band, "soft wendland32 P-greedy",
       fmt("max power slope %.3f (target %.2f +- %.2f, 2000 candidates)", slope, wendland_slope_target,
           wendland_slope_band));
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path out = argc > 1 ? fs::path(argv[1]) : fs::temp_directory_path() / "pdegreedy_acceptance";
  fs::remove_all(out);
  fs::create_directories(out);

  guarded("1 oracle equivalence", oracle_equivalence);
  guarded("2 kernel derivatives", kernel_derivatives);
  guarded("3 P-greedy boundary share", [&] { table_regime(out); });
  guarded("4 pacman f- vs P-greedy", [&] { pacman_ordering(out); });
  guarded("5 convergence rates", [&] { convergence_rates(out); });
  guarded("6 no-solution failure", [&] { failure_case(out); });
  guarded("7 determinism", [&] { determinism(out); });
  guarded("soft wendland32 P-greedy", [&] { wendland_slope(out); });

  std::printf("%s: %d failing\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
