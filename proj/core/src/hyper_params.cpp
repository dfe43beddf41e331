#include "mtwu/hyper_params.hpp"

#include <charconv>
#include <string>

#include "mtwu/error.hpp"

namespace mtwu {
namespace {

void require(bool ok, const char* name, const char* range) {
  if (!ok) throw InvalidArgument(std::string("hyperparameter ") + name + " must be " + range);
}

double parse_real(std::string_view name, std::string_view text) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ConfigError("cannot parse value '" + std::string(text) + "' for " + std::string(name));
  }
  return value;
}

}  // namespace

void HyperParams::validate() const {
  require(C > 0, "C", "> 0");
  require(eta0 > 0, "eta0", "> 0");
  require(alma_alpha > 0 && alma_alpha <= 1, "alma_alpha", "in (0, 1]");
  require(alma_B > 0, "alma_B", "> 0");
  require(alma_C > 0, "alma_C", "> 0");
  require(cw_eta > 0.5 && cw_eta < 1, "cw_eta", "in (0.5, 1)");
  require(arow_r > 0, "arow_r", "> 0");
  require(narow_b > 0, "narow_b", "> 0");
  require(scw_C > 0, "scw_C", "> 0");
  require(sop_a > 0, "sop_a", "> 0");
  require(iellip_b > 0 && iellip_b <= 1, "iellip_b", "in (0, 1]");
  // c = 1 would divide by zero in the shape update.
  require(iellip_c > 0 && iellip_c < 1, "iellip_c", "in (0, 1)");
}

void HyperParams::set(std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) {
    throw ConfigError("expected name=value, got '" + std::string(assignment) + "'");
  }
  const auto name = assignment.substr(0, eq);
  const auto text = assignment.substr(eq + 1);

  if (name == "covariance") {
    covariance = parse_covariance_mode(text);
    return;
  }
  const double value = parse_real(name, text);
  if (name == "C") {
    C = value;
  } else if (name == "eta0") {
    eta0 = value;
  } else if (name == "alma_alpha") {
    alma_alpha = value;
    if (!alma_B_explicit_ && value > 0) alma_B = 1.0 / value;
  } else if (name == "alma_B") {
    alma_B = value;
    alma_B_explicit_ = true;
  } else if (name == "alma_C") {
    alma_C = value;
  } else if (name == "cw_eta") {
    cw_eta = value;
  } else if (name == "arow_r") {
    arow_r = value;
  } else if (name == "narow_b") {
    narow_b = value;
  } else if (name == "scw_C") {
    scw_C = value;
  } else if (name == "sop_a") {
    sop_a = value;
  } else if (name == "iellip_b") {
    iellip_b = value;
  } else if (name == "iellip_c") {
    iellip_c = value;
  } else {
    throw ConfigError("unknown hyperparameter '" + std::string(name) + "'");
  }
}

HyperParams HyperParams::from_assignments(const std::vector<std::string>& assignments) {
  HyperParams hp;
  for (const auto& a : assignments) hp.set(a);
  hp.validate();
  return hp;
}

CovarianceMode parse_covariance_mode(std::string_view s) {
  if (s == "auto") return CovarianceMode::Auto;
  if (s == "full") return CovarianceMode::Full;
  if (s == "diag" || s == "diagonal") return CovarianceMode::Diagonal;
  throw ConfigError("covariance must be auto, full or diag, got '" + std::string(s) + "'");
}

bool use_full_covariance(CovarianceMode mode, std::size_t d) noexcept {
  switch (mode) {
    case CovarianceMode::Full:
      return true;
    case CovarianceMode::Diagonal:
      return false;
    case CovarianceMode::Auto:
      break;
  }
  return d <= kFullCovarianceMaxDim;
}

}  // namespace mtwu
