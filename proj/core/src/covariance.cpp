#include "mtwu/covariance.hpp"

#include <cmath>

#include "mtwu/error.hpp"

namespace mtwu {

Covariance::Covariance(std::size_t d, bool full, double scale) : full_(full) {
  const auto n = static_cast<Eigen::Index>(d);
  if (full_) {
    full_mat_ = Eigen::MatrixXd::Identity(n, n) * scale;
  } else {
    diag_ = Eigen::VectorXd::Constant(n, scale);
  }
}

Eigen::VectorXd Covariance::times(const SparseVector& x) const {
  const Eigen::Index n = diag_or_zero_size();
  if (x.min_dim() > static_cast<std::size_t>(n)) {
    throw DimensionMismatch("instance dimension exceeds covariance dimension");
  }
  Eigen::VectorXd sx = Eigen::VectorXd::Zero(n);
  if (full_) {
    for (const auto& e : x.entries()) sx.noalias() += full_mat_.col(e.index) * e.value;
  } else {
    for (const auto& e : x.entries()) sx[e.index] = diag_[e.index] * e.value;
  }
  return sx;
}

double Covariance::quadratic(const SparseVector& x, const Eigen::VectorXd& sx) {
  double v = 0.0;
  for (const auto& e : x.entries()) v += e.value * sx[e.index];
  return v;
}

bool Covariance::downdate_keeps_pd(const SparseVector& x, const Eigen::VectorXd& sx, double v,
                                   double coef) const {
  if (!std::isfinite(coef)) return false;
  if (full_) {
    if (!(1.0 - coef * v > 0.0)) return false;
    for (Eigen::Index i = 0; i < full_mat_.rows(); ++i) {
      if (!(full_mat_(i, i) - coef * sx[i] * sx[i] > 0.0)) return false;
    }
    return true;
  }
  for (const auto& e : x.entries()) {
    const double s = sx[e.index];
    if (!(diag_[e.index] - coef * s * s > 0.0)) return false;
  }
  return true;
}

void Covariance::downdate(const SparseVector& x, const Eigen::VectorXd& sx, double coef) {
  if (full_) {
    // Lower triangle computed once and mirrored, so symmetry is exact.
    const Eigen::Index n = full_mat_.rows();
    for (Eigen::Index j = 0; j < n; ++j) {
      const double cj = coef * sx[j];
      if (cj == 0.0) continue;
      for (Eigen::Index i = j; i < n; ++i) {
        const double value = full_mat_(i, j) - cj * sx[i];
        full_mat_(i, j) = value;
        full_mat_(j, i) = value;
      }
    }
    return;
  }
  for (const auto& e : x.entries()) {
    const double s = sx[e.index];
    diag_[e.index] -= coef * s * s;
  }
}

void Covariance::scale(double s) {
  if (full_) {
    full_mat_ *= s;
  } else {
    diag_ *= s;
  }
}

bool Covariance::is_positive_definite() const {
  if (!full_) return (diag_.array() > 0.0).all();
  Eigen::LLT<Eigen::MatrixXd> llt(full_mat_);
  return llt.info() == Eigen::Success;
}

bool Covariance::is_symmetric(double tol) const {
  if (!full_) return true;
  return ((full_mat_ - full_mat_.transpose()).array().abs() <= tol).all();
}

Eigen::MatrixXd Covariance::to_dense() const {
  if (full_) return full_mat_;
  return diag_.asDiagonal();
}

}  // namespace mtwu
