#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mtwu/engine.hpp"
#include "mtwu/error.hpp"

namespace mtwu {

BoundReport check_theorem1(const Trace& trace, std::size_t M) {
  if (M < 1) throw InvalidTrace("bound constant M must be >= 1");
  BoundReport report;
  report.slack.reserve(trace.instances.size());
  report.rhs.reserve(trace.instances.size());
  report.min_slack = trace.instances.empty() ? 0.0 : std::numeric_limits<double>::infinity();
  const double root_m = std::sqrt(static_cast<double>(M));

  for (std::size_t i = 0; i < trace.instances.size(); ++i) {
    const auto& inst = trace.instances[i];
    if (inst.deltas.empty()) {
      throw InvalidTrace("instance " + std::to_string(i) + " has no update records");
    }
    if (inst.deltas.size() > M) {
      throw InvalidTrace("instance " + std::to_string(i) + " ran more inner cycles than M");
    }
    const double rhs = inst.initial_norm + root_m * std::sqrt(inst.delta_sq_sum());
    const double slack = rhs - inst.w_star_norm;
    report.rhs.push_back(rhs);
    report.slack.push_back(slack);
    report.min_slack = std::min(report.min_slack, slack);
    if (slack < -1e-9 * (1.0 + rhs)) ++report.violations;
  }
  report.pass = report.violations == 0;
  return report;
}

}  // namespace mtwu
