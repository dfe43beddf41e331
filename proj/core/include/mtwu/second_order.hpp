#pragma once

#include <cstdint>
#include <optional>

#include <Eigen/Dense>

#include "mtwu/covariance.hpp"
#include "mtwu/hyper_params.hpp"
#include "mtwu/labels.hpp"
#include "mtwu/learner_kind.hpp"
#include "mtwu/sparse_vector.hpp"
#include "mtwu/update_info.hpp"

namespace mtwu {

/// Second-order perceptron accumulators: v (sum of y x over mistakes) and the
/// correlation S (sum of x x^T), regularized by a.
///
/// The implied weight (S + a I)^{-1} v is recomputed after every update: by
/// Cholesky for d <= kSopCholeskyMaxDim, otherwise from an inverse kept
/// current with Sherman-Morrison.
struct SopAccumulator {
  Eigen::VectorXd v;
  Eigen::MatrixXd S;        // full mode
  Eigen::VectorXd S_diag;   // diagonal mode
  Eigen::MatrixXd inverse;  // (S + aI)^{-1}, only when d > kSopCholeskyMaxDim in full mode
  double a = 1.0;
  bool full = true;
};

inline constexpr std::size_t kSopCholeskyMaxDim = 64;

struct SecondOrderState {
  SecondOrderState(BinaryKind kind, std::size_t d, const HyperParams& hp);

  Eigen::VectorXd mu;  // for SOP, the implied weight vector
  Covariance sigma;    // empty for SOP
  std::uint64_t t = 0;
  double iellip_c = 0.0;  // current IELLIP step/shrink factor, decays by b per update
  std::optional<SopAccumulator> sop;

  std::size_t dim() const noexcept { return static_cast<std::size_t>(mu.size()); }
};

/// Predict with mu, then apply the kind's closed-form update if it triggers.
///
/// Throws NumericalDegeneracy (state untouched) when the covariance would
/// lose positive definiteness, DimensionMismatch on size errors and
/// InvalidArgument for a first-order kind.
UpdateInfo update_second_order(BinaryKind kind, SecondOrderState& state, const SparseVector& x,
                               BinaryLabel y, const HyperParams& hp);

}  // namespace mtwu
