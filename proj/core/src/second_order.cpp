#include "mtwu/second_order.hpp"

#include <algorithm>
#include <cmath>

#include "confidence_rules.hpp"
#include "mtwu/error.hpp"
#include "mtwu/inverse_normal.hpp"
#include "mtwu/loss.hpp"

namespace mtwu {
namespace detail {
namespace {

double scw_beta(double alpha, double v, double phi) {
  const double avp = alpha * v * phi;
  const double root = -avp + std::sqrt(avp * avp + 4.0 * v);
  const double u = 0.25 * root * root;
  return alpha * phi / (std::sqrt(u) + avp);
}

}  // namespace

double confidence_phi(double cw_eta) {
  thread_local double cached_eta = -1.0;
  thread_local double cached_phi = 0.0;
  if (cw_eta != cached_eta) {
    cached_phi = inverse_normal_cdf(cw_eta);
    cached_eta = cw_eta;
  }
  return cached_phi;
}

std::optional<ConfidenceStep> confidence_step(BinaryKind kind, double m, double v,
                                              const HyperParams& hp) {
  if (!(v > 0.0)) return std::nullopt;
  ConfidenceStep step;
  switch (kind) {
    case BinaryKind::CW: {
      const double phi = confidence_phi(hp.cw_eta);
      if (phi * std::sqrt(v) - m <= 0.0) return std::nullopt;
      const double b = 1.0 + 2.0 * phi * m;
      const double disc = b * b - 8.0 * phi * (m - phi * v);
      step.alpha = std::max(0.0, (-b + std::sqrt(std::max(0.0, disc))) / (4.0 * phi * v));
      step.coef = 2.0 * step.alpha * phi / (1.0 + 2.0 * step.alpha * phi * v);
      break;
    }
    case BinaryKind::SCW1: {
      const double phi = confidence_phi(hp.cw_eta);
      if (phi * std::sqrt(v) - m <= 0.0) return std::nullopt;
      const double phi2 = phi * phi;
      const double psi = 1.0 + phi2 / 2.0;
      const double zeta = 1.0 + phi2;
      const double raw = (-m * psi + std::sqrt(m * m * phi2 * phi2 / 4.0 + v * phi2 * zeta)) / (v * zeta);
      step.alpha = std::min(hp.scw_C, std::max(0.0, raw));
      step.coef = scw_beta(step.alpha, v, phi);
      break;
    }
    case BinaryKind::SCW2: {
      const double phi = confidence_phi(hp.cw_eta);
      if (phi * std::sqrt(v) - m <= 0.0) return std::nullopt;
      const double phi2 = phi * phi;
      const double n = v + 1.0 / (2.0 * hp.scw_C);
      const double gamma = phi * std::sqrt(phi2 * m * m * v * v + 4.0 * n * v * (n + v * phi2));
      step.alpha =
          std::max(0.0, (-(2.0 * m * n + phi2 * m * v) + gamma) / (2.0 * (n * n + n * v * phi2)));
      step.coef = scw_beta(step.alpha, v, phi);
      break;
    }
    case BinaryKind::AROW: {
      const double loss = 1.0 - m;
      if (loss <= 0.0) return std::nullopt;
      const double beta = 1.0 / (v + hp.arow_r);
      step = {loss * beta, beta};
      break;
    }
    case BinaryKind::NAROW: {
      const double loss = 1.0 - m;
      if (loss <= 0.0) return std::nullopt;
      // r_t = v / (b v - 1) while v > 1/b; otherwise r_t is infinite and the
      // instance leaves the state untouched.
      if (!(v > 1.0 / hp.narow_b)) return std::nullopt;
      const double r = v / (hp.narow_b * v - 1.0);
      const double beta = 1.0 / (v + r);
      step = {loss * beta, beta};
      break;
    }
    case BinaryKind::NHERD: {
      const double loss = 1.0 - m;
      if (loss <= 0.0) return std::nullopt;
      const double beta = 1.0 / (v + 1.0 / hp.C);
      step = {loss * beta, beta * beta * (v + 2.0 / hp.C)};
      break;
    }
    default:
      throw InvalidArgument(to_string(kind) + " has no confidence-weighted closed form");
  }
  if (!(step.alpha > 0.0)) return std::nullopt;
  return step;
}

}  // namespace detail

namespace {

double dense_delta(const Eigen::VectorXd& before, const Eigen::VectorXd& after) {
  return (after - before).squaredNorm();
}

void sop_refresh_weight(SecondOrderState& s) {
  auto& acc = *s.sop;
  const auto d = s.mu.size();
  if (!acc.full) {
    s.mu = acc.v.array() / (acc.S_diag.array() + acc.a);
  } else if (static_cast<std::size_t>(d) <= kSopCholeskyMaxDim) {
    Eigen::MatrixXd A = acc.S;
    A.diagonal().array() += acc.a;
    s.mu = A.llt().solve(acc.v);
  } else {
    s.mu.noalias() = acc.inverse * acc.v;
  }
}

UpdateInfo sop_update(SecondOrderState& s, const SparseVector& x, BinaryLabel label,
                      double loss, bool mistake) {
  if (!mistake || x.squared_norm() == 0.0) return UpdateInfo::passive(loss, mistake);
  auto& acc = *s.sop;
  const double y = label.sign();
  for (const auto& e : x.entries()) acc.v[e.index] += y * e.value;
  if (!acc.full) {
    for (const auto& e : x.entries()) acc.S_diag[e.index] += e.value * e.value;
  } else {
    for (const auto& ej : x.entries()) {
      for (const auto& ei : x.entries()) acc.S(ei.index, ej.index) += ei.value * ej.value;
    }
    if (acc.inverse.size() != 0) {
      // Sherman-Morrison: (A + x x^T)^{-1} = A^{-1} - A^{-1} x x^T A^{-1} / (1 + x^T A^{-1} x)
      Eigen::VectorXd ax = Eigen::VectorXd::Zero(acc.inverse.rows());
      for (const auto& e : x.entries()) ax.noalias() += acc.inverse.col(e.index) * e.value;
      double xax = 0.0;
      for (const auto& e : x.entries()) xax += e.value * ax[e.index];
      const double coef = 1.0 / (1.0 + xax);
      for (Eigen::Index j = 0; j < ax.size(); ++j) {
        for (Eigen::Index i = j; i < ax.size(); ++i) {
          const double value = acc.inverse(i, j) - coef * ax[j] * ax[i];
          acc.inverse(i, j) = value;
          acc.inverse(j, i) = value;
        }
      }
    }
  }
  const Eigen::VectorXd before = s.mu;
  sop_refresh_weight(s);
  return UpdateInfo{loss, true, mistake, dense_delta(before, s.mu), 1.0};
}

UpdateInfo iellip_update(SecondOrderState& s, const SparseVector& x, double y, double margin,
                         double loss, bool mistake) {
  if (!mistake) return UpdateInfo::passive(loss, mistake);
  const Eigen::VectorXd sx = s.sigma.times(x);
  const double v = Covariance::quadratic(x, sx);
  if (!(v > 0.0)) return UpdateInfo::passive(loss, mistake);
  const double c = s.iellip_c;
  // Move the center so the instance reaches margin 1 along the Sigma-metric
  // normal, then cut the ellipsoid: Sigma <- (Sigma - (c/v) sx sx^T) / (1 - c).
  const double coef = c / v;
  if (!s.sigma.downdate_keeps_pd(x, sx, v, coef)) {
    throw NumericalDegeneracy("IELLIP update would make the covariance indefinite");
  }
  const double alpha = (1.0 - margin) / v;
  const Eigen::VectorXd before = s.mu;
  s.mu.noalias() += (alpha * y) * sx;
  s.sigma.downdate(x, sx, coef);
  s.sigma.scale(1.0 / (1.0 - c));
  return UpdateInfo{loss, true, mistake, dense_delta(before, s.mu), alpha};
}

}  // namespace

SecondOrderState::SecondOrderState(BinaryKind kind, std::size_t d, const HyperParams& hp) {
  if (d == 0) throw InvalidArgument("learner dimension must be >= 1");
  if (is_first_order(kind)) {
    throw InvalidArgument(to_string(kind) + " is not a second-order learner");
  }
  const auto n = static_cast<Eigen::Index>(d);
  mu = Eigen::VectorXd::Zero(n);
  const bool full = use_full_covariance(hp.covariance, d);
  if (kind == BinaryKind::SOP) {
    SopAccumulator acc;
    acc.a = hp.sop_a;
    acc.full = full;
    acc.v = Eigen::VectorXd::Zero(n);
    if (full) {
      acc.S = Eigen::MatrixXd::Zero(n, n);
      if (d > kSopCholeskyMaxDim) acc.inverse = Eigen::MatrixXd::Identity(n, n) / hp.sop_a;
    } else {
      acc.S_diag = Eigen::VectorXd::Zero(n);
    }
    sop = std::move(acc);
  } else {
    sigma = Covariance(d, full, 1.0);
  }
  iellip_c = hp.iellip_c;
}

UpdateInfo update_second_order(BinaryKind kind, SecondOrderState& state, const SparseVector& x,
                               BinaryLabel label, const HyperParams& hp) {
  if (is_first_order(kind)) {
    throw InvalidArgument(to_string(kind) + " is not a second-order learner");
  }
  const double score = predict_linear({state.mu.data(), state.dim()}, x);
  const double y = label.sign();
  const double margin = y * score;
  const double loss = hinge_loss(label, score);
  const bool mistake = is_mistake(label, score);

  if (kind == BinaryKind::SOP) {
    if (!state.sop) throw InvalidArgument("state was not initialized for SOP");
    return sop_update(state, x, label, loss, mistake);
  }
  if (x.squared_norm() == 0.0) return UpdateInfo::passive(loss, mistake);
  if (kind == BinaryKind::IELLIP) {
    const auto info = iellip_update(state, x, y, margin, loss, mistake);
    if (info.triggered) state.iellip_c *= hp.iellip_b;
    return info;
  }

  const Eigen::VectorXd sx = state.sigma.times(x);
  const double v = Covariance::quadratic(x, sx);
  const auto step = detail::confidence_step(kind, margin, v, hp);
  if (!step) return UpdateInfo::passive(loss, mistake);
  if (!state.sigma.downdate_keeps_pd(x, sx, v, step->coef)) {
    throw NumericalDegeneracy(to_string(kind) + " update would make the covariance indefinite");
  }
  const Eigen::VectorXd before = state.mu;
  state.mu.noalias() += (step->alpha * y) * sx;
  state.sigma.downdate(x, sx, step->coef);
  return UpdateInfo{loss, true, mistake, dense_delta(before, state.mu), step->alpha};
}

}  // namespace mtwu
