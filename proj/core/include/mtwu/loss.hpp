#pragma once

#include <span>

#include "mtwu/labels.hpp"
#include "mtwu/sparse_vector.hpp"

namespace mtwu {

/// Sparse dot product <w, x>. Throws DimensionMismatch if x reaches past w.
double predict_linear(std::span<const double> w, const SparseVector& x);

/// A prediction is correct only when y * score is strictly positive; a zero
/// score counts as a mistake.
inline bool is_mistake(BinaryLabel y, double score) noexcept { return y.sign() * score <= 0.0; }

/// max(0, 1 - y * score)
double hinge_loss(BinaryLabel y, double score) noexcept;

/// Mean of squared differences. Throws InvalidArgument on empty or unequal input.
double squared_loss(std::span<const double> targets, std::span<const double> predictions);

/// log(1 + exp(-y * score)); switches to the asymptotic branch when
/// |y * score| > 30 so exp never overflows.
double logistic_loss(BinaryLabel y, double score) noexcept;

}  // namespace mtwu
