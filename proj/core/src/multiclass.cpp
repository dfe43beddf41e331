#include "mtwu/multiclass.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "confidence_rules.hpp"
#include "mtwu/error.hpp"

namespace mtwu {
namespace {

constexpr double kRommaDenominatorGuard = 1e-12;

BinaryKind binary_counterpart(MulticlassKind kind) {
  switch (kind) {
    case MulticlassKind::CW: return BinaryKind::CW;
    case MulticlassKind::SCW1: return BinaryKind::SCW1;
    case MulticlassKind::SCW2: return BinaryKind::SCW2;
    case MulticlassKind::AROW: return BinaryKind::AROW;
    default: break;
  }
  throw InvalidArgument(to_string(kind) + " has no second-order binary counterpart");
}

/// W.row(c) += scale * x, returning the squared norm of the change.
double add_row(Eigen::MatrixXd& W, std::size_t c, const SparseVector& x, double scale) {
  const auto row = static_cast<Eigen::Index>(c);
  double delta = 0.0;
  for (const auto& e : x.entries()) {
    const double before = W(row, e.index);
    W(row, e.index) = before + scale * e.value;
    const double diff = W(row, e.index) - before;
    delta += diff * diff;
  }
  return delta;
}

/// W.row(c) += scale * dense, returning the squared norm of the change.
double add_row_dense(Eigen::MatrixXd& W, std::size_t c, const Eigen::VectorXd& dense, double scale) {
  const auto row = static_cast<Eigen::Index>(c);
  const Eigen::RowVectorXd before = W.row(row);
  W.row(row).noalias() += scale * dense.transpose();
  return (W.row(row) - before).squaredNorm();
}

UpdateInfo done(double loss, bool mistake, double delta, double tau) {
  return UpdateInfo{loss, true, mistake, delta, tau};
}

/// Additive ultraconservative update: +x on the true row, -x split evenly over `rivals`.
UpdateInfo perceptron_spread(MulticlassState& s, const SparseVector& x, std::size_t y,
                             const std::vector<std::size_t>& rivals, double loss) {
  double delta = add_row(s.W, y, x, 1.0);
  const double share = 1.0 / static_cast<double>(rivals.size());
  for (auto c : rivals) delta += add_row(s.W, c, x, -share);
  return done(loss, true, delta, 1.0);
}

UpdateInfo romma_step(MulticlassState& s, const SparseVector& x, std::size_t y, std::size_t r,
                      double margin, double loss, bool mistake) {
  // Binary ROMMA on the class-block difference vector z = phi(x, y) - phi(x, r),
  // label +1, so <W, z> = margin and ||z||^2 = 2 ||x||^2.
  const double z_sq = 2.0 * x.squared_norm();
  const double w_sq = s.W.squaredNorm();
  const double den = z_sq * w_sq - margin * margin;
  if (w_sq == 0.0 || std::abs(den) < kRommaDenominatorGuard) {
    const double delta = add_row(s.W, y, x, 1.0) + add_row(s.W, r, x, -1.0);
    return done(loss, mistake, delta, 1.0);
  }
  const double c = (z_sq * w_sq - margin) / den;
  const double g = w_sq * (1.0 - margin) / den;
  const Eigen::MatrixXd before = s.W;
  s.W *= c;
  add_row(s.W, y, x, g);
  add_row(s.W, r, x, -g);
  return done(loss, mistake, (s.W - before).squaredNorm(), g);
}

UpdateInfo confidence_update(MulticlassKind kind, MulticlassState& s, const SparseVector& x,
                             std::size_t y, std::size_t r, double margin, double loss, bool mistake,
                             const HyperParams& hp) {
  if (s.shared_covariance()) {
    // Block-diagonal Sigma with one shared block: z^T Sigma z = 2 x^T Sigma x.
    Covariance& sigma = s.sigma.front();
    const Eigen::VectorXd sx = sigma.times(x);
    const double v = Covariance::quadratic(x, sx);
    const auto step = detail::confidence_step(binary_counterpart(kind), margin, 2.0 * v, hp);
    if (!step) return UpdateInfo::passive(loss, mistake);
    if (!sigma.downdate_keeps_pd(x, sx, v, step->coef)) {
      throw NumericalDegeneracy(to_string(kind) + " update would make the covariance indefinite");
    }
    double delta = add_row_dense(s.W, y, sx, step->alpha);
    delta += add_row_dense(s.W, r, sx, -step->alpha);
    sigma.downdate(x, sx, step->coef);
    return done(loss, mistake, delta, step->alpha);
  }

  Covariance& sy = s.sigma[y];
  Covariance& sr = s.sigma[r];
  const Eigen::VectorXd sxy = sy.times(x);
  const Eigen::VectorXd sxr = sr.times(x);
  const double vy = Covariance::quadratic(x, sxy);
  const double vr = Covariance::quadratic(x, sxr);
  const auto step = detail::confidence_step(binary_counterpart(kind), margin, vy + vr, hp);
  if (!step) return UpdateInfo::passive(loss, mistake);
  if (!sy.downdate_keeps_pd(x, sxy, vy, step->coef) || !sr.downdate_keeps_pd(x, sxr, vr, step->coef)) {
    throw NumericalDegeneracy(to_string(kind) + " update would make the covariance indefinite");
  }
  double delta = add_row_dense(s.W, y, sxy, step->alpha);
  delta += add_row_dense(s.W, r, sxr, -step->alpha);
  sy.downdate(x, sxy, step->coef);
  sr.downdate(x, sxr, step->coef);
  return done(loss, mistake, delta, step->alpha);
}

}  // namespace

MulticlassState::MulticlassState(MulticlassKind kind, std::size_t d, std::size_t num_classes,
                                 const HyperParams& hp) {
  if (d == 0) throw InvalidArgument("learner dimension must be >= 1");
  if (num_classes < 2) throw InvalidArgument("multiclass learner needs K >= 2");
  W = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(num_classes), static_cast<Eigen::Index>(d));
  if (is_second_order(kind)) {
    if (use_full_covariance(hp.covariance, d)) {
      sigma.emplace_back(d, true, 1.0);
    } else {
      sigma.assign(num_classes, Covariance(d, false, 1.0));
    }
  }
}

MulticlassPrediction predict_multiclass(const MulticlassState& state, const SparseVector& x) {
  if (x.min_dim() > state.dim()) {
    throw DimensionMismatch("feature index " + std::to_string(x.min_dim()) +
                            " exceeds weight dimension " + std::to_string(state.dim()));
  }
  Eigen::VectorXd scores = Eigen::VectorXd::Zero(state.W.rows());
  for (const auto& e : x.entries()) scores.noalias() += state.W.col(e.index) * e.value;
  std::size_t best = 0;
  for (Eigen::Index c = 1; c < scores.size(); ++c) {
    if (scores[c] > scores[static_cast<Eigen::Index>(best)]) best = static_cast<std::size_t>(c);
  }
  return {best, std::move(scores)};
}

std::size_t top_rival(const Eigen::VectorXd& scores, std::size_t y) {
  std::size_t best = (y == 0) ? 1 : 0;
  for (std::size_t c = best + 1; c < static_cast<std::size_t>(scores.size()); ++c) {
    if (c == y) continue;
    if (scores[static_cast<Eigen::Index>(c)] > scores[static_cast<Eigen::Index>(best)]) best = c;
  }
  return best;
}

UpdateInfo update_multiclass(MulticlassKind kind, MulticlassState& state, const SparseVector& x,
                             ClassLabel label, const HyperParams& hp) {
  if (label.num_classes() != state.num_classes()) {
    throw InvalidArgument("label space does not match the learner's class count");
  }
  const auto prediction = predict_multiclass(state, x);
  const auto& scores = prediction.scores;
  const std::size_t y = label.value();
  const std::size_t r = top_rival(scores, y);
  const double margin = scores[static_cast<Eigen::Index>(y)] - scores[static_cast<Eigen::Index>(r)];
  const double loss = std::max(0.0, 1.0 - margin);
  const bool mistake = prediction.predicted != y;
  const double x_sq = x.squared_norm();

  if (x_sq == 0.0) return UpdateInfo::passive(loss, mistake);

  switch (kind) {
    case MulticlassKind::PA:
    case MulticlassKind::PA1:
    case MulticlassKind::PA2:
    case MulticlassKind::OGD: {
      if (loss <= 0.0) return UpdateInfo::passive(loss, mistake);
      double tau = loss / (2.0 * x_sq);
      if (kind == MulticlassKind::PA1) tau = std::min(hp.C, tau);
      if (kind == MulticlassKind::PA2) tau = loss / (2.0 * x_sq + 1.0 / (2.0 * hp.C));
      if (kind == MulticlassKind::OGD) {
        tau = hp.eta0 / std::sqrt(static_cast<double>(std::max<std::uint64_t>(state.t, 1)));
      }
      const double delta = add_row(state.W, y, x, tau) + add_row(state.W, r, x, -tau);
      return done(loss, mistake, delta, tau);
    }

    case MulticlassKind::PerceptronM:
      if (!mistake) return UpdateInfo::passive(loss, mistake);
      return perceptron_spread(state, x, y, {r}, loss);

    case MulticlassKind::PerceptronU:
    case MulticlassKind::PerceptronS: {
      if (!mistake) return UpdateInfo::passive(loss, mistake);
      const double sy = scores[static_cast<Eigen::Index>(y)];
      std::vector<std::size_t> rivals;
      for (std::size_t c = 0; c < state.num_classes(); ++c) {
        if (c == y) continue;
        const double sc = scores[static_cast<Eigen::Index>(c)];
        if (kind == MulticlassKind::PerceptronU ? sc >= sy : sc > sy) rivals.push_back(c);
      }
      // A mistake through a tie with a lower-index class has no strict violator.
      if (rivals.empty()) rivals.push_back(r);
      return perceptron_spread(state, x, y, rivals, loss);
    }

    case MulticlassKind::ROMMA:
      if (margin > 0.0) return UpdateInfo::passive(loss, mistake);
      return romma_step(state, x, y, r, margin, loss, mistake);

    case MulticlassKind::aROMMA:
      if (loss <= 0.0) return UpdateInfo::passive(loss, mistake);
      return romma_step(state, x, y, r, margin, loss, mistake);

    case MulticlassKind::CW:
    case MulticlassKind::SCW1:
    case MulticlassKind::SCW2:
    case MulticlassKind::AROW:
      return confidence_update(kind, state, x, y, r, margin, loss, mistake, hp);
  }
  throw InvalidArgument("unhandled multiclass kind");
}

}  // namespace mtwu
