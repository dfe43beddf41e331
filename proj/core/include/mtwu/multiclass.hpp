#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "mtwu/covariance.hpp"
#include "mtwu/hyper_params.hpp"
#include "mtwu/labels.hpp"
#include "mtwu/learner_kind.hpp"
#include "mtwu/sparse_vector.hpp"
#include "mtwu/update_info.hpp"

namespace mtwu {

/// Per-class prototype rows W (K x d). Second-order kinds also carry either
/// one covariance shared by all classes (full mode) or one diagonal per class.
struct MulticlassState {
  MulticlassState(MulticlassKind kind, std::size_t d, std::size_t num_classes,
                  const HyperParams& hp);

  Eigen::MatrixXd W;
  std::vector<Covariance> sigma;  // empty, {shared full}, or K diagonals
  std::uint64_t t = 0;

  std::size_t num_classes() const noexcept { return static_cast<std::size_t>(W.rows()); }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(W.cols()); }
  bool shared_covariance() const noexcept { return sigma.size() == 1; }
};

struct MulticlassPrediction {
  std::size_t predicted;
  Eigen::VectorXd scores;
};

/// argmax of W x, ties toward the lowest class index.
MulticlassPrediction predict_multiclass(const MulticlassState& state, const SparseVector& x);

/// Index of the highest-scoring class other than `y` (lowest index on ties).
std::size_t top_rival(const Eigen::VectorXd& scores, std::size_t y);

/// Predict, then update per the kind's rule. delta_sq_norm is the squared
/// Frobenius norm of the change to W.
UpdateInfo update_multiclass(MulticlassKind kind, MulticlassState& state, const SparseVector& x,
                             ClassLabel y, const HyperParams& hp);

}  // namespace mtwu
