#include "pdegreedy/geometry.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <string>
#include <vector>

namespace pdegreedy {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr Index max_consecutive_rejections = 1'000'000;

/// Polar angle in [0, 2pi).
double polar_angle(double x, double y) {
  double theta = std::atan2(y, x);
  if (theta < 0.0) theta += two_pi;
  return theta;
}

/// Exactly "x1,...,xd", whitespace tolerant.
bool is_header(const std::string& line, int dim) {
  std::string expected, compact;
  for (int k = 1; k <= dim; ++k) expected += (k > 1 ? ",x" : "x") + std::to_string(k);
  for (char c : line) {
    if (c != ' ' && c != '\t') compact += c;
  }
  return compact == expected;
}

}  // namespace

Geometry Geometry::custom(PointCloud interior, PointCloud boundary) {
  Geometry g;
  g.kind = GeometryKind::Custom;
  g.custom_interior = std::move(interior);
  g.custom_boundary = std::move(boundary);
  return g;
}

int Geometry::dim() const {
  switch (kind) {
    case GeometryKind::Interval01: return 1;
    case GeometryKind::UnitSquare:
    case GeometryKind::PacmanDisk: return 2;
    case GeometryKind::Custom:
      return static_cast<int>(custom_interior.size() > 0 ? custom_interior.rows() : custom_boundary.rows());
  }
  return 0;
}

bool Geometry::contains_interior(const Eigen::Ref<const Eigen::VectorXd>& x) const {
  if (x.size() != dim()) return false;
  switch (kind) {
    case GeometryKind::Interval01: return x(0) > 0.0 && x(0) < 1.0;
    case GeometryKind::UnitSquare: return (x.array() > 0.0).all() && (x.array() < 1.0).all();
    case GeometryKind::PacmanDisk: {
      const double r = x.norm();
      if (!(r < radius) || r == 0.0) return false;
      const double theta = polar_angle(x(0), x(1));
      return theta > half_angle && theta < two_pi - half_angle;
    }
    case GeometryKind::Custom: return true;
  }
  return false;
}

bool Geometry::on_boundary(const Eigen::Ref<const Eigen::VectorXd>& x, double tol) const {
  if (x.size() != dim()) return false;
  switch (kind) {
    case GeometryKind::Interval01: return std::abs(x(0)) <= tol || std::abs(x(0) - 1.0) <= tol;
    case GeometryKind::UnitSquare: {
      if ((x.array() < -tol).any() || (x.array() > 1.0 + tol).any()) return false;
      const double m = std::min({x(0), x(1), 1.0 - x(0), 1.0 - x(1)});
      return std::abs(m) <= tol;
    }
    case GeometryKind::PacmanDisk: {
      const double r = x.norm();
      if (r > radius + tol) return false;
      if (r <= tol) return true;
      const double theta = polar_angle(x(0), x(1));
      const bool on_arc = std::abs(r - radius) <= tol && theta >= half_angle - tol / radius &&
                          theta <= two_pi - half_angle + tol / radius;
      // distance to the two radial segments
      auto seg_dist = [&](double angle) {
        const Eigen::Vector2d u(std::cos(angle), std::sin(angle));
        const double t = std::clamp(x.dot(u), 0.0, radius);
        return (x - t * u).norm();
      };
      return on_arc || seg_dist(half_angle) <= tol || seg_dist(-half_angle) <= tol;
    }
    case GeometryKind::Custom: return true;
  }
  return false;
}

PointCloud sample_interior(const Geometry& geometry, Index n, std::uint64_t seed) {
  if (n < 1) throw UsageError("sample_interior needs n >= 1");
  if (geometry.kind == GeometryKind::Custom) throw ConfigError("custom geometry has no interior sampler");
  if (geometry.kind == GeometryKind::PacmanDisk &&
      (!(geometry.radius > 0.0) || !(geometry.half_angle >= 0.0) || !(geometry.half_angle < std::numbers::pi))) {
    throw ConfigError("degenerate pacman geometry");
  }
  const int d = geometry.dim();
  Eigen::VectorXd lo = Eigen::VectorXd::Zero(d), hi = Eigen::VectorXd::Ones(d);
  if (geometry.kind == GeometryKind::PacmanDisk) {
    lo.setConstant(-geometry.radius);
    hi.setConstant(geometry.radius);
  }
  SplitMix64 rng(seed);
  PointCloud out(d, n);
  Eigen::VectorXd x(d);
  for (Index j = 0; j < n; ++j) {
    Index rejections = 0;
    for (;;) {
      for (int k = 0; k < d; ++k) x(k) = rng.uniform(lo(k), hi(k));
      if (geometry.contains_interior(x)) break;
      if (++rejections >= max_consecutive_rejections) throw ConfigError("interior sampler: acceptance ratio is zero");
    }
    out.col(j) = x;
  }
  return out;
}

PointCloud sample_boundary(const Geometry& geometry, Index n, std::uint64_t seed) {
  if (n < 1) throw UsageError("sample_boundary needs n >= 1");
  SplitMix64 rng(seed);
  switch (geometry.kind) {
    case GeometryKind::Interval01: {
      PointCloud out(1, 2);
      out << 0.0, 1.0;
      return out;
    }
    case GeometryKind::UnitSquare: {
      PointCloud out(2, n);
      for (Index j = 0; j < n; ++j) {
        const double u = rng.uniform() * 4.0;
        const int edge = std::min(3, static_cast<int>(u));
        const double t = u - edge;
        switch (edge) {
          case 0: out.col(j) << t, 0.0; break;
          case 1: out.col(j) << 1.0, t; break;
          case 2: out.col(j) << 1.0 - t, 1.0; break;
          default: out.col(j) << 0.0, 1.0 - t; break;
        }
      }
      return out;
    }
    case GeometryKind::PacmanDisk: {
      const double R = geometry.radius, a = geometry.half_angle;
      if (!(R > 0.0) || !(a >= 0.0) || !(a < std::numbers::pi)) throw ConfigError("degenerate pacman geometry");
      const double arc = R * (two_pi - 2.0 * a);
      const double total = arc + 2.0 * R;
      PointCloud out(2, n);
      for (Index j = 0; j < n; ++j) {
        const double s = rng.uniform() * total;
        if (s < arc) {
          const double theta = a + s / R;
          out.col(j) << R * std::cos(theta), R * std::sin(theta);
        } else {
          const double t = s - arc;
          const double angle = t < R ? a : -a;
          const double rho = t < R ? t : t - R;
          out.col(j) << rho * std::cos(angle), rho * std::sin(angle);
        }
      }
      return out;
    }
    case GeometryKind::Custom: throw ConfigError("custom geometry has no boundary sampler");
  }
  throw ConfigError("unknown geometry");
}

PointCloud equispaced_interval(Index n) {
  if (n < 2) throw UsageError("equispaced grid needs n >= 2");
  PointCloud out(1, n);
  for (Index j = 0; j < n; ++j) out(0, j) = static_cast<double>(j) / static_cast<double>(n - 1);
  return out;
}

double fill_distance(const PointCloud& X, const PointCloud& test) {
  if (X.cols() == 0) throw UsageError("fill_distance: empty point set");
  if (test.cols() > 0 && X.rows() != test.rows()) throw UsageError("fill_distance: dimension mismatch");
  double worst = 0.0;
  for (Index t = 0; t < test.cols(); ++t) {
    const double nearest = (X.colwise() - test.col(t)).colwise().squaredNorm().minCoeff();
    worst = std::max(worst, nearest);
  }
  return std::sqrt(worst);
}

PointCloud load_points_csv(const std::filesystem::path& path, int dim) {
  if (dim < 1) throw UsageError("load_points_csv: dim must be >= 1");
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path.string());
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1 && line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<double> row;
    bool ok = true;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      const auto comma = line.find(',', pos);
      const auto end = comma == std::string::npos ? line.size() : comma;
      auto b = line.find_first_not_of(" \t", pos);
      auto e = line.find_last_not_of(" \t", end == 0 ? 0 : end - 1);
      double v = 0.0;
      if (b == std::string::npos || b >= end || e == std::string::npos || e < b) {
        ok = false;
      } else {
        const char* first = line.data() + b;
        const char* last = line.data() + e + 1;
        if (*first == '+') ++first;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr != last) ok = false;
      }
      row.push_back(v);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (line_no == 1 && is_header(line, dim)) continue;
    if (!ok) throw ParseError(line_no, "non-numeric field in '" + line + "'");
    if (static_cast<int>(row.size()) != dim) {
      throw ParseError(line_no, "expected " + std::to_string(dim) + " fields, got " + std::to_string(row.size()));
    }
    values.insert(values.end(), row.begin(), row.end());
  }
  const auto n = static_cast<Index>(values.size()) / dim;
  return Eigen::Map<const PointCloud>(values.data(), dim, n);
}

}  // namespace pdegreedy
