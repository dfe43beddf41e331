#pragma once

namespace mtwu {

/// Inverse of the standard normal CDF (Acklam's rational approximation with
/// one Halley refinement step). p must lie in (0, 1).
double inverse_normal_cdf(double p);

}  // namespace mtwu
