#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "mtwu/hyper_params.hpp"
#include "mtwu/labels.hpp"
#include "mtwu/learner_kind.hpp"
#include "mtwu/sparse_vector.hpp"
#include "mtwu/update_info.hpp"

namespace mtwu {

/// Dense weight vector plus the counters the first-order rules need.
struct FirstOrderState {
  explicit FirstOrderState(std::size_t d);

  Eigen::VectorXd w;
  std::uint64_t t = 0;            // outer instances seen, drives OGD's rate
  std::uint64_t corrections = 0;  // ALMA's k - 1

  std::size_t dim() const noexcept { return static_cast<std::size_t>(w.size()); }
};

/// Predict, then apply the kind's update rule if its trigger fires.
///
/// Perceptron/ROMMA are mistake driven; PA, PA1, PA2, OGD and aROMMA fire on
/// positive hinge loss; ALMA fires when the normalized margin is below
/// (1 - alpha) * B / sqrt(k). A zero-norm instance is always passive.
/// Throws DimensionMismatch, or InvalidArgument for a second-order kind.
UpdateInfo update_first_order(BinaryKind kind, FirstOrderState& state, const SparseVector& x,
                              BinaryLabel y, const HyperParams& hp);

}  // namespace mtwu
