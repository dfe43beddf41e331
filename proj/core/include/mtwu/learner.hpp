#pragma once

#include <cstddef>
#include <variant>

#include "mtwu/first_order.hpp"
#include "mtwu/hyper_params.hpp"
#include "mtwu/learner_kind.hpp"
#include "mtwu/multiclass.hpp"
#include "mtwu/second_order.hpp"
#include "mtwu/sparse_vector.hpp"
#include "mtwu/update_info.hpp"

namespace mtwu {

using LearnerState = std::variant<FirstOrderState, SecondOrderState, MulticlassState>;

/// A learner kind together with its hyperparameters and mutable state.
///
/// Labels are plain ints at this level: -1/+1 for binary kinds, 0..K-1 for
/// multiclass kinds. The outer instance clock (begin_instance) is separate
/// from step() so repeated inner updates see the same clock value.
class Learner {
 public:
  /// num_classes is ignored for binary kinds. Throws InvalidArgument on d == 0,
  /// K < 2 for multiclass kinds, or out-of-range hyperparameters.
  Learner(LearnerKind kind, std::size_t d, const HyperParams& hp, std::size_t num_classes = 2);

  /// Advance the outer instance counter.
  void begin_instance();

  /// One predict -> loss -> conditional update cycle.
  UpdateInfo step(const SparseVector& x, int label);

  /// Score-based check of the current prediction, without updating.
  bool mistaken(const SparseVector& x, int label) const;

  /// Norm of the predictive weights (w, mu, the implied SOP weight, or the
  /// Frobenius norm of W).
  double weight_norm() const;

  const LearnerKind& kind() const noexcept { return kind_; }
  const HyperParams& params() const noexcept { return hp_; }
  const LearnerState& state() const noexcept { return state_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t num_classes() const noexcept { return num_classes_; }

 private:
  LearnerKind kind_;
  HyperParams hp_;
  std::size_t dim_;
  std::size_t num_classes_;
  LearnerState state_;
};

/// Predictive weight vector of a binary state (w, mu, or implied SOP weight).
const Eigen::VectorXd& binary_weights(const LearnerState& state);

}  // namespace mtwu
