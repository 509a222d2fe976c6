#pragma once

#include <array>
#include <cmath>
#include <string_view>
#include <vector>

namespace pdegreedy {

enum class Profile { Gaussian, Wendland32, Wendland33, MaternQuadratic, MaternCubic };

/// Accepts "gaussian", "wendland32", "wendland33", "matern2", "matern3" (any case).
Profile parse_profile(std::string_view name);
std::string_view profile_name(Profile profile);

/// Sobolev smoothness tau of the native space on R^dim; NaN for the (analytic) Gaussian.
double sobolev_smoothness(Profile profile, int dim);

namespace detail {

/// sum_k coeffs[k] * r^(low + k). Negative exponents appear transiently while
/// applying (1/r) d/dr and cancel exactly for the catalogue profiles.
struct LaurentPolynomial {
  int low = 0;
  std::vector<double> coeffs;

  LaurentPolynomial derivative() const;
  LaurentPolynomial shifted(int k) const;  // times r^k
  LaurentPolynomial operator+(const LaurentPolynomial& other) const;
  LaurentPolynomial operator*(double s) const;
  LaurentPolynomial times_one_minus_r() const;
  void trim();
  bool empty() const { return coeffs.empty(); }
};

enum class Envelope { Exponential, Gaussian, Truncated };

/// poly(r) * envelope(r), with envelope e^{-r}, e^{-r^2} or (1-r)_+^power.
struct RadialExpression {
  LaurentPolynomial poly;
  Envelope envelope = Envelope::Exponential;
  int power = 0;

  RadialExpression derivative() const;
  RadialExpression over_r() const { return {poly.shifted(-1), envelope, power}; }
  RadialExpression times_r_pow(int k) const { return {poly.shifted(k), envelope, power}; }

  template <typename Scalar>
  Scalar operator()(Scalar r) const {
    using std::exp;
    using std::pow;
    if (envelope == Envelope::Truncated && r >= Scalar(1)) return Scalar(0);
    Scalar acc(0);
    for (auto it = poly.coeffs.rbegin(); it != poly.coeffs.rend(); ++it) acc = acc * r + Scalar(*it);
    if (poly.low > 0) acc *= pow(r, poly.low);
    switch (envelope) {
      case Envelope::Exponential:
        return acc * exp(-r);
      case Envelope::Gaussian:
        return acc * exp(-r * r);
      case Envelope::Truncated: {
        Scalar t = Scalar(1) - r, e(1);
        for (int i = 0; i < power; ++i) e *= t;
        return acc * e;
      }
    }
    return acc;
  }
};

}  // namespace detail

/// Closed-form radial quantities of a profile, all in the scaled argument rho = eps*r.
/// With D = (1/rho) d/drho:
///   laplacian    = dim * d1 + rho^2 * d2
///   bilaplacian  = dim(dim+2) * d2 + 2(dim+2) * e3 + e4
/// where d1 = D phi, d2 = D^2 phi, e3 = rho^2 D^3 phi, e4 = rho^4 D^4 phi. Every one of these is
/// a finite expression at rho = 0, so no special casing of the origin is needed.
struct ProfileLadder {
  detail::RadialExpression value;
  std::array<detail::RadialExpression, 4> derivatives;  // phi' .. phi''''
  detail::RadialExpression d1;
  detail::RadialExpression d2;
  detail::RadialExpression e3;
  detail::RadialExpression e4;
};

const ProfileLadder& ladder(Profile profile);

}  // namespace pdegreedy
