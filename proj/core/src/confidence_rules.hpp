#pragma once

#include <optional>

#include "mtwu/hyper_params.hpp"
#include "mtwu/learner_kind.hpp"

namespace mtwu::detail {

/// Mean step alpha (along y * Sigma x) and covariance contraction coef
/// (Sigma -= coef * Sigma x x^T Sigma) of one confidence-weighted update.
struct ConfidenceStep {
  double alpha = 0.0;
  double coef = 0.0;
};

/// Closed forms for CW, AROW, NAROW, NHERD, SCW1 and SCW2 given the signed
/// margin y * <mu, x> and variance x^T Sigma x. Returns nullopt when the
/// kind's trigger does not fire or the step would be zero.
std::optional<ConfidenceStep> confidence_step(BinaryKind kind, double margin, double variance,
                                              const HyperParams& hp);

/// Phi^{-1}(cw_eta), cached per distinct eta.
double confidence_phi(double cw_eta);

}  // namespace mtwu::detail
