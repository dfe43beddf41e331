#pragma once

#include <Eigen/Dense>

#include "mtwu/sparse_vector.hpp"

namespace mtwu {

/// Symmetric positive definite matrix stored either in full or as its diagonal.
class Covariance {
 public:
  Covariance() = default;
  Covariance(std::size_t d, bool full, double scale = 1.0);

  bool is_full() const noexcept { return full_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(diag_or_zero_size()); }

  /// Sigma * x as a dense vector.
  Eigen::VectorXd times(const SparseVector& x) const;

  /// x^T Sigma x given sx = Sigma * x.
  static double quadratic(const SparseVector& x, const Eigen::VectorXd& sx);

  /// Checks that Sigma - coef * sx sx^T stays positive definite, where
  /// sx = Sigma x and v = x^T Sigma x. Full mode uses the determinant lemma
  /// (1 - coef * v > 0); both modes require every updated diagonal entry > 0.
  bool downdate_keeps_pd(const SparseVector& x, const Eigen::VectorXd& sx, double v,
                         double coef) const;

  /// Sigma -= coef * sx sx^T (diagonal mode keeps only the diagonal of the
  /// rank-one term). Callers check downdate_keeps_pd first.
  void downdate(const SparseVector& x, const Eigen::VectorXd& sx, double coef);

  void scale(double s);

  /// Full mode: Cholesky succeeds. Diagonal mode: every entry > 0.
  bool is_positive_definite() const;
  bool is_symmetric(double tol = 1e-12) const;

  /// Dense copy of the matrix, for inspection and tests.
  Eigen::MatrixXd to_dense() const;

 private:
  Eigen::Index diag_or_zero_size() const noexcept { return full_ ? full_mat_.rows() : diag_.size(); }

  bool full_ = true;
  Eigen::MatrixXd full_mat_;
  Eigen::VectorXd diag_;
};

}  // namespace mtwu
