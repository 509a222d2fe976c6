#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <filesystem>
#include <numbers>

#include "pdegreedy/functional.hpp"

namespace pdegreedy {

/// SplitMix64 (Steele, Lea, Flood 2014). Point clouds are part of the report
/// contract, so the generator is fixed rather than taken from <random>.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Independent child stream seeded from this one.
  SplitMix64 split() { return SplitMix64(next()); }

 private:
  std::uint64_t state_;
};

enum class GeometryKind { Interval01, UnitSquare, PacmanDisk, Custom };

/// Pacman: disk of radius R with the open sector |theta| < half_angle removed, tip at the origin.
struct Geometry {
  GeometryKind kind = GeometryKind::UnitSquare;
  double radius = 1.0;
  double half_angle = std::numbers::pi / 8.0;
  PointCloud custom_interior;
  PointCloud custom_boundary;

  static Geometry interval01() { return with_kind(GeometryKind::Interval01); }
  static Geometry unit_square() { return with_kind(GeometryKind::UnitSquare); }
  static Geometry pacman(double radius = 1.0, double half_angle = std::numbers::pi / 8.0) {
    Geometry g = with_kind(GeometryKind::PacmanDisk);
    g.radius = radius;
    g.half_angle = half_angle;
    return g;
  }
  static Geometry custom(PointCloud interior, PointCloud boundary);

  int dim() const;
  bool contains_interior(const Eigen::Ref<const Eigen::VectorXd>& x) const;
  bool on_boundary(const Eigen::Ref<const Eigen::VectorXd>& x, double tol = 1e-12) const;

 private:
  static Geometry with_kind(GeometryKind k) {
    Geometry g;
    g.kind = k;
    return g;
  }
};

/// Rejection sampling from the bounding box, stream SplitMix64(seed).
PointCloud sample_interior(const Geometry& geometry, Index n, std::uint64_t seed);

/// Uniform in arc length: component picked proportionally to its length, then uniform along it.
/// Interval01 always yields exactly {0, 1}.
PointCloud sample_boundary(const Geometry& geometry, Index n, std::uint64_t seed);

/// n equispaced points on [0,1] including both ends.
PointCloud equispaced_interval(Index n);

/// max over test points of the distance to the nearest point of X.
double fill_distance(const PointCloud& X, const PointCloud& test);

/// One point per line, comma separated; an optional non-numeric header line is skipped.
PointCloud load_points_csv(const std::filesystem::path& path, int dim);

}  // namespace pdegreedy
