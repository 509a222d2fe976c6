#include "pdegreedy/radial_profile.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>
#include <string>

#include "pdegreedy/errors.hpp"

namespace pdegreedy {

Profile parse_profile(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "gaussian") return Profile::Gaussian;
  if (lower == "wendland32") return Profile::Wendland32;
  if (lower == "wendland33") return Profile::Wendland33;
  if (lower == "matern2") return Profile::MaternQuadratic;
  if (lower == "matern3") return Profile::MaternCubic;
  throw ConfigError("unknown kernel profile '" + std::string(name) + "'");
}

std::string_view profile_name(Profile profile) {
  switch (profile) {
    case Profile::Gaussian: return "gaussian";
    case Profile::Wendland32: return "wendland32";
    case Profile::Wendland33: return "wendland33";
    case Profile::MaternQuadratic: return "matern2";
    case Profile::MaternCubic: return "matern3";
  }
  throw ConfigError("unknown kernel profile");
}

double sobolev_smoothness(Profile profile, int dim) {
  const double half_d = 0.5 * dim;
  switch (profile) {
    case Profile::Gaussian: return std::numeric_limits<double>::quiet_NaN();
    // phi_{3,k} has native space H^{d/2 + k + 1/2}
    case Profile::Wendland32: return half_d + 2.5;
    case Profile::Wendland33: return half_d + 3.5;
    // Matern with nu = 5/2, 7/2: H^{nu + d/2}
    case Profile::MaternQuadratic: return half_d + 2.5;
    case Profile::MaternCubic: return half_d + 3.5;
  }
  throw ConfigError("unknown kernel profile");
}

namespace detail {

void LaurentPolynomial::trim() {
  auto first = std::find_if(coeffs.begin(), coeffs.end(), [](double c) { return c != 0.0; });
  if (first == coeffs.end()) {
    coeffs.clear();
    low = 0;
    return;
  }
  low += static_cast<int>(first - coeffs.begin());
  coeffs.erase(coeffs.begin(), first);
  while (!coeffs.empty() && coeffs.back() == 0.0) coeffs.pop_back();
}

LaurentPolynomial LaurentPolynomial::derivative() const {
  LaurentPolynomial out{low - 1, std::vector<double>(coeffs.size())};
  for (std::size_t k = 0; k < coeffs.size(); ++k) out.coeffs[k] = coeffs[k] * (low + static_cast<int>(k));
  out.trim();
  return out;
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
  LaurentPolynomial out = *this;
  if (!out.coeffs.empty()) out.low += k;
  return out;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& other) const {
  if (coeffs.empty()) return other;
  if (other.coeffs.empty()) return *this;
  const int lo = std::min(low, other.low);
  const int hi = std::max(low + static_cast<int>(coeffs.size()),
                          other.low + static_cast<int>(other.coeffs.size()));
  LaurentPolynomial out{lo, std::vector<double>(static_cast<std::size_t>(hi - lo), 0.0)};
  for (std::size_t k = 0; k < coeffs.size(); ++k) out.coeffs[k + (low - lo)] += coeffs[k];
  for (std::size_t k = 0; k < other.coeffs.size(); ++k) out.coeffs[k + (other.low - lo)] += other.coeffs[k];
  out.trim();
  return out;
}

LaurentPolynomial LaurentPolynomial::operator*(double s) const {
  LaurentPolynomial out = *this;
  for (double& c : out.coeffs) c *= s;
  out.trim();
  return out;
}

LaurentPolynomial LaurentPolynomial::times_one_minus_r() const {
  return *this + shifted(1) * -1.0;
}

RadialExpression RadialExpression::derivative() const {
  const LaurentPolynomial dp = poly.derivative();
  switch (envelope) {
    case Envelope::Exponential:
      return {dp + poly * -1.0, envelope, power};
    case Envelope::Gaussian:
      return {dp + poly.shifted(1) * -2.0, envelope, power};
    case Envelope::Truncated:
      if (power == 0) throw std::logic_error("truncated power exhausted");
      return {dp.times_one_minus_r() + poly * -static_cast<double>(power), envelope, power - 1};
  }
  throw std::logic_error("unknown envelope");
}

}  // namespace detail

namespace {

ProfileLadder build_ladder(detail::RadialExpression phi) {
  ProfileLadder out;
  out.value = phi;
  auto d = phi;
  for (auto& slot : out.derivatives) {
    d = d.derivative();
    slot = d;
  }
  out.d1 = phi.derivative().over_r();
  out.d2 = out.d1.derivative().over_r();
  auto d3 = out.d2.derivative().over_r();
  out.e3 = d3.times_r_pow(2);
  out.e4 = d3.derivative().over_r().times_r_pow(4);
  for (const auto* e : {&out.d1, &out.d2, &out.e3, &out.e4}) {
    if (e->poly.low < 0) throw std::logic_error("radial ladder has a pole at the origin");
  }
  return out;
}

detail::RadialExpression expression_for(Profile profile) {
  using detail::Envelope;
  switch (profile) {
    case Profile::Gaussian: return {{0, {1.0}}, Envelope::Gaussian, 0};
    case Profile::Wendland32: return {{0, {3.0, 18.0, 35.0}}, Envelope::Truncated, 6};
    case Profile::Wendland33: return {{0, {1.0, 8.0, 25.0, 32.0}}, Envelope::Truncated, 8};
    case Profile::MaternQuadratic: return {{0, {3.0, 3.0, 1.0}}, Envelope::Exponential, 0};
    case Profile::MaternCubic: return {{0, {15.0, 15.0, 6.0, 1.0}}, Envelope::Exponential, 0};
  }
  throw ConfigError("unknown kernel profile");
}

}  // namespace

const ProfileLadder& ladder(Profile profile) {
  static const std::array<ProfileLadder, 5> table = {
      build_ladder(expression_for(Profile::Gaussian)),
      build_ladder(expression_for(Profile::Wendland32)),
      build_ladder(expression_for(Profile::Wendland33)),
      build_ladder(expression_for(Profile::MaternQuadratic)),
      build_ladder(expression_for(Profile::MaternCubic)),
  };
  const auto idx = static_cast<std::size_t>(profile);
  if (idx >= table.size()) throw ConfigError("unknown kernel profile");
  return table[idx];
}

}  // namespace pdegreedy
