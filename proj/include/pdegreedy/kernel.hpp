#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "pdegreedy/errors.hpp"
#include "pdegreedy/radial_profile.hpp"

namespace pdegreedy {

/// L = laplace_coeff * (-Delta) + id_coeff * id.
struct OperatorSpec {
  double laplace_coeff = 1.0;
  double id_coeff = 0.0;

  void validate() const {
    if (laplace_coeff == 0.0 && id_coeff == 0.0) throw ConfigError("operator has (a, c) = (0, 0)");
  }
};

/// Value, Laplacian and bilaplacian of x -> s * phi(eps * |x|) at |x| = r.
template <typename Scalar>
struct RadialValues {
  Scalar value;
  Scalar laplacian;
  Scalar bilaplacian;
};

/// k(x, y) = amplitude * phi(shape * |x - y|) on R^dim.
template <typename Scalar = double>
class RadialKernel {
 public:
  RadialKernel(Profile profile, Scalar shape, Scalar amplitude, int dim)
      : profile_(profile), shape_(shape), amplitude_(amplitude), dim_(dim), ladder_(&ladder(profile)) {
    if (!(shape > Scalar(0))) throw ConfigError("kernel shape parameter must be positive");
    if (!(amplitude > Scalar(0))) throw ConfigError("kernel amplitude must be positive");
    if (dim < 1) throw ConfigError("kernel dimension must be >= 1");
  }

  Profile profile() const { return profile_; }
  Scalar shape() const { return shape_; }
  Scalar amplitude() const { return amplitude_; }
  int dim() const { return dim_; }

  RadialKernel with_amplitude(Scalar amplitude) const { return {profile_, shape_, amplitude, dim_}; }

  /// Derivatives carry the eps chain-rule factors: eps^2 per Laplacian.
  RadialValues<Scalar> radial(Scalar r) const {
    const Scalar rho = shape_ * r;
    const Scalar rho2 = rho * rho;
    const Scalar d = Scalar(dim_);
    const Scalar d2 = ladder_->d2(rho);
    const Scalar eps2 = shape_ * shape_;
    RadialValues<Scalar> out;
    out.value = amplitude_ * ladder_->value(rho);
    out.laplacian = amplitude_ * eps2 * (d * ladder_->d1(rho) + rho2 * d2);
    out.bilaplacian = amplitude_ * eps2 * eps2 *
                      (d * (d + Scalar(2)) * d2 + Scalar(2) * (d + Scalar(2)) * ladder_->e3(rho) + ladder_->e4(rho));
    return out;
  }

  Scalar value(Scalar r) const { return amplitude_ * ladder_->value(shape_ * r); }

  template <typename DX, typename DY>
  Scalar distance(const Eigen::MatrixBase<DX>& x, const Eigen::MatrixBase<DY>& y) const {
    if (x.size() != dim_ || y.size() != dim_) {
      throw UsageError("point dimension mismatch: kernel dim " + std::to_string(dim_) + ", got " +
                       std::to_string(x.size()) + " and " + std::to_string(y.size()));
    }
    return (x.template cast<Scalar>() - y.template cast<Scalar>()).norm();
  }

 private:
  Profile profile_;
  Scalar shape_;
  Scalar amplitude_;
  int dim_;
  const ProfileLadder* ladder_;
};

using Kernel = RadialKernel<double>;

/// (phi, phi', phi'', phi''', phi'''') of r -> phi(eps * r), derivatives in r.
template <typename Scalar>
std::array<Scalar, 5> phi_derivatives(Profile profile, Scalar eps, Scalar r) {
  if (r < Scalar(0)) throw UsageError("phi_derivatives needs r >= 0");
  const auto& lad = ladder(profile);
  const Scalar rho = eps * r;
  std::array<Scalar, 5> out{lad.value(rho)};
  Scalar factor(1);
  for (std::size_t k = 0; k < 4; ++k) {
    factor *= eps;
    out[k + 1] = factor * lad.derivatives[k](rho);
  }
  return out;
}

/// Number of operator applications folded into a kernel entry: 0 -> k, 1 -> L k, 2 -> L L k.
template <typename Scalar>
Scalar apply_operator(const RadialValues<Scalar>& v, const OperatorSpec& op, int order) {
  const Scalar a(op.laplace_coeff), c(op.id_coeff);
  switch (order) {
    case 0: return v.value;
    case 1: return -a * v.laplacian + c * v.value;
    case 2: return a * a * v.bilaplacian - Scalar(2) * a * c * v.laplacian + c * c * v.value;
    default: throw UsageError("operator order must be 0, 1 or 2");
  }
}

template <typename Scalar, typename DX, typename DY>
Scalar k_eval(const RadialKernel<Scalar>& kernel, const Eigen::MatrixBase<DX>& x, const Eigen::MatrixBase<DY>& y) {
  return kernel.value(kernel.distance(x, y));
}

/// (L^(2) k)(x, y). The kernel is even and translation invariant, so this also equals (L^(1) k)(x, y).
template <typename Scalar, typename DX, typename DY>
Scalar lk_eval(const RadialKernel<Scalar>& kernel, const OperatorSpec& op, const Eigen::MatrixBase<DX>& x,
               const Eigen::MatrixBase<DY>& y) {
  return apply_operator(kernel.radial(kernel.distance(x, y)), op, 1);
}

/// (L^(1) L^(2) k)(x, y).
template <typename Scalar, typename DX, typename DY>
Scalar llk_eval(const RadialKernel<Scalar>& kernel, const OperatorSpec& op, const Eigen::MatrixBase<DX>& x,
                const Eigen::MatrixBase<DY>& y) {
  return apply_operator(kernel.radial(kernel.distance(x, y)), op, 2);
}

/// Amplitude s making max(k(x,x), LLk(x,x)) = 1, so every representer has native norm <= 1.
template <typename Scalar>
Scalar normalized_amplitude(const RadialKernel<Scalar>& kernel, const OperatorSpec& op) {
  const auto unit = kernel.with_amplitude(Scalar(1)).radial(Scalar(0));
  using std::abs;
  return Scalar(1) / std::max(abs(apply_operator(unit, op, 2)), abs(unit.value));
}

}  // namespace pdegreedy
