#include "mtwu/first_order.hpp"

#include <algorithm>
#include <cmath>

#include "mtwu/error.hpp"
#include "mtwu/loss.hpp"

namespace mtwu {
namespace {

// Below this |denominator| the ROMMA closed form is replaced by a perceptron step.
constexpr double kRommaDenominatorGuard = 1e-12;

/// w += scale * x, returning the squared norm of the change.
double add_scaled(Eigen::VectorXd& w, const SparseVector& x, double scale) {
  double delta = 0.0;
  for (const auto& e : x.entries()) {
    const double before = w[e.index];
    w[e.index] = before + scale * e.value;
    const double diff = w[e.index] - before;
    delta += diff * diff;
  }
  return delta;
}

double dense_delta(const Eigen::VectorXd& before, const Eigen::VectorXd& after) {
  return (after - before).squaredNorm();
}

UpdateInfo triggered(double loss, bool mistake, double delta, double tau) {
  return UpdateInfo{loss, true, mistake, delta, tau};
}

UpdateInfo romma_step(FirstOrderState& s, const SparseVector& x, double y, double score,
                      double loss, bool mistake) {
  const double x_sq = x.squared_norm();
  const double w_sq = s.w.squaredNorm();
  const double den = x_sq * w_sq - score * score;
  if (w_sq == 0.0 || std::abs(den) < kRommaDenominatorGuard) {
    return triggered(loss, mistake, add_scaled(s.w, x, y), 1.0);
  }
  const double c = (x_sq * w_sq - y * score) / den;
  const double g = w_sq * (1.0 - y * score) / den;
  const Eigen::VectorXd before = s.w;
  s.w *= c;
  add_scaled(s.w, x, g * y);
  return triggered(loss, mistake, dense_delta(before, s.w), g);
}

UpdateInfo alma_step(FirstOrderState& s, const SparseVector& x, double y, double score,
                     double loss, bool mistake, const HyperParams& hp) {
  const double x_norm = std::sqrt(x.squared_norm());
  const double k = static_cast<double>(s.corrections + 1);
  const double theta = hp.alma_B / std::sqrt(k);
  if (y * score / x_norm > (1.0 - hp.alma_alpha) * theta) {
    return UpdateInfo::passive(loss, mistake);
  }
  const double eta = hp.alma_C / std::sqrt(k);
  const Eigen::VectorXd before = s.w;
  add_scaled(s.w, x, eta * y / x_norm);
  const double norm = s.w.norm();
  if (norm > 1.0) s.w /= norm;
  ++s.corrections;
  return triggered(loss, mistake, dense_delta(before, s.w), eta / x_norm);
}

}  // namespace

FirstOrderState::FirstOrderState(std::size_t d) : w(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(d))) {
  if (d == 0) throw InvalidArgument("learner dimension must be >= 1");
}

UpdateInfo update_first_order(BinaryKind kind, FirstOrderState& state, const SparseVector& x,
                              BinaryLabel label, const HyperParams& hp) {
  if (!is_first_order(kind)) {
    throw InvalidArgument(to_string(kind) + " is not a first-order learner");
  }
  const double score = predict_linear({state.w.data(), state.dim()}, x);
  const double y = label.sign();
  const double loss = hinge_loss(label, score);
  const bool mistake = is_mistake(label, score);
  const double x_sq = x.squared_norm();

  if (x_sq == 0.0) return UpdateInfo::passive(loss, mistake);

  switch (kind) {
    case BinaryKind::Perceptron:
      if (!mistake) return UpdateInfo::passive(loss, mistake);
      return triggered(loss, mistake, add_scaled(state.w, x, y), 1.0);

    case BinaryKind::PA:
    case BinaryKind::PA1:
    case BinaryKind::PA2: {
      if (loss <= 0.0) return UpdateInfo::passive(loss, mistake);
      double tau = loss / x_sq;
      if (kind == BinaryKind::PA1) tau = std::min(hp.C, tau);
      if (kind == BinaryKind::PA2) tau = loss / (x_sq + 1.0 / (2.0 * hp.C));
      return triggered(loss, mistake, add_scaled(state.w, x, tau * y), tau);
    }

    case BinaryKind::OGD: {
      if (loss <= 0.0) return UpdateInfo::passive(loss, mistake);
      const double t = static_cast<double>(std::max<std::uint64_t>(state.t, 1));
      const double eta = hp.eta0 / std::sqrt(t);
      return triggered(loss, mistake, add_scaled(state.w, x, eta * y), eta);
    }

    case BinaryKind::ALMA:
      return alma_step(state, x, y, score, loss, mistake, hp);

    case BinaryKind::ROMMA:
      if (!mistake) return UpdateInfo::passive(loss, mistake);
      return romma_step(state, x, y, score, loss, mistake);

    case BinaryKind::aROMMA:
      if (loss <= 0.0) return UpdateInfo::passive(loss, mistake);
      return romma_step(state, x, y, score, loss, mistake);

    default:
      break;
  }
  throw InvalidArgument("unhandled first-order kind");
}

}  // namespace mtwu
