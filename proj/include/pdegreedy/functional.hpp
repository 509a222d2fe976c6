#pragma once

#include <Eigen/Core>

#include <vector>

#include "pdegreedy/kernel.hpp"

namespace pdegreedy {

using Index = Eigen::Index;
using Point = Eigen::VectorXd;
/// Point clouds are stored column-wise: one point per column, dim rows.
using PointCloud = Eigen::MatrixXd;

enum class FunctionalKind { InteriorL, BoundaryDirichlet };

/// delta_x o L (interior) or delta_x (Dirichlet boundary).
struct Functional {
  FunctionalKind kind;
  Point point;
  Index index = 0;

  /// How many times L hits the kernel when this functional acts on one argument.
  int operator_order() const { return kind == FunctionalKind::InteriorL ? 1 : 0; }
};

/// Immutable candidate set Lambda = Lambda_L u Lambda_B with contiguous indices 0..M-1.
class CandidateSet {
 public:
  CandidateSet(std::vector<Functional> functionals, Kernel kernel, OperatorSpec op);

  /// Interior functionals first (indices 0..n_i-1), then boundary ones.
  static CandidateSet from_clouds(const PointCloud& interior, const PointCloud& boundary, Kernel kernel,
                                  OperatorSpec op);

  Index size() const { return static_cast<Index>(functionals_.size()); }
  const Functional& operator[](Index i) const { return functionals_[static_cast<std::size_t>(i)]; }
  const std::vector<Functional>& functionals() const { return functionals_; }
  const Kernel& kernel() const { return kernel_; }
  const OperatorSpec& op() const { return op_; }
  int dim() const { return kernel_.dim(); }

 private:
  std::vector<Functional> functionals_;
  Kernel kernel_;
  OperatorSpec op_;
};

/// <v_lambda, v_mu> in the native space, i.e. lambda^(1) mu^(2) k.
double gram(const Kernel& kernel, const OperatorSpec& op, const Functional& lambda, const Functional& mu);

/// v_lambda(x), or (L v_lambda)(x) when apply_L is set.
double representer_eval(const Kernel& kernel, const OperatorSpec& op, const Functional& lambda,
                        const Eigen::Ref<const Eigen::VectorXd>& x, bool apply_L);

/// Column of gram(lambda_i, mu) over the whole candidate set.
Eigen::VectorXd gram_column(const CandidateSet& candidates, const Functional& mu);

/// Dense Gram matrix over a subset of candidates, in the given order.
Eigen::MatrixXd gram_matrix(const CandidateSet& candidates, const std::vector<Index>& subset);

}  // namespace pdegreedy
