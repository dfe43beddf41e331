#include "mtwu/loss.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mtwu/error.hpp"

namespace mtwu {

double predict_linear(std::span<const double> w, const SparseVector& x) {
  if (x.min_dim() > w.size()) {
    throw DimensionMismatch("feature index " + std::to_string(x.min_dim()) +
                            " exceeds weight dimension " + std::to_string(w.size()));
  }
  double score = 0.0;
  for (const auto& e : x.entries()) score += w[e.index] * e.value;
  return score;
}

double hinge_loss(BinaryLabel y, double score) noexcept {
  return std::max(0.0, 1.0 - y.sign() * score);
}

double squared_loss(std::span<const double> targets, std::span<const double> predictions) {
  if (targets.empty()) throw InvalidArgument("squared_loss needs at least one value");
  if (targets.size() != predictions.size()) {
    throw InvalidArgument("squared_loss inputs differ in length");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const double diff = targets[i] - predictions[i];
    sum += diff * diff;
  }
  return sum / static_cast<double>(targets.size());
}

double logistic_loss(BinaryLabel y, double score) noexcept {
  constexpr double kCutoff = 30.0;
  const double z = y.sign() * score;
  if (z > kCutoff) {
    // log(1 + e^-z) ~ e^-z; the true value is positive even where e^-z underflows.
    return std::max(std::exp(-z), std::numeric_limits<double>::denorm_min());
  }
  if (z < -kCutoff) return -z + std::exp(z);
  return std::log1p(std::exp(-z));
}

}  // namespace mtwu
