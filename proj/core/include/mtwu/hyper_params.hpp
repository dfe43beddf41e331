#pragma once

#include <cmath>
#include <string>
#include <string_view>
#include <vector>

namespace mtwu {

/// How second-order learners store their covariance.
enum class CovarianceMode {
  Auto,      // full for d <= kFullCovarianceMaxDim, diagonal above
  Full,
  Diagonal,
};

inline constexpr std::size_t kFullCovarianceMaxDim = 1024;

/// Hyperparameters shared by the learner catalog. Defaults follow the
/// reference toolkit the published experiments were run with.
struct HyperParams {
  double C = 1.0;             // PA1/PA2 aggressiveness, also NHERD and SCW
  double eta0 = 1.0;          // OGD base rate, eta_t = eta0 / sqrt(t)
  double alma_alpha = 0.9;
  double alma_B = 1.0 / 0.9;  // kept at 1/alma_alpha unless set explicitly
  double alma_C = std::sqrt(2.0);
  double cw_eta = 0.7;        // confidence level for CW/SCW, in (0.5, 1)
  double arow_r = 1.0;
  double narow_b = 1.0;
  double scw_C = 1.0;
  double sop_a = 1.0;
  double iellip_b = 0.3;
  double iellip_c = 0.1;
  CovarianceMode covariance = CovarianceMode::Auto;

  /// Throws InvalidArgument naming the first parameter out of range.
  void validate() const;

  /// Applies one "name=value" assignment. Setting alma_alpha without
  /// alma_B keeps alma_B = 1/alma_alpha. Throws ConfigError on unknown names
  /// or unparsable values.
  void set(std::string_view assignment);

  static HyperParams from_assignments(const std::vector<std::string>& assignments);

 private:
  bool alma_B_explicit_ = false;
};

CovarianceMode parse_covariance_mode(std::string_view s);
bool use_full_covariance(CovarianceMode mode, std::size_t d) noexcept;

}  // namespace mtwu
