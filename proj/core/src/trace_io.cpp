#include "mtwu/trace_io.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "mtwu/error.hpp"

namespace mtwu {

void write_trace_header(std::ostream& out) { out << kTraceHeader << '\n'; }

void write_trace(std::ostream& out, const Trace& trace, const std::string& algo, std::size_t run) {
  const auto precision = out.precision(17);
  for (std::size_t i = 0; i < trace.instances.size(); ++i) {
    const auto& inst = trace.instances[i];
    out << algo << '\t' << trace.m << '\t' << run << '\t' << i << '\t' << inst.mistake << '\t'
        << inst.updates << '\t' << inst.delta_sq_sum() << '\t' << inst.w_star_norm << '\t'
        << inst.initial_norm << '\n';
  }
  out.precision(precision);
}

std::vector<TraceRecord> read_trace(std::istream& in) {
  std::vector<TraceRecord> records;
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line) || line != kTraceHeader) {
    throw InvalidTrace("missing or unexpected trace header");
  }
  ++line_no;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    TraceRecord r;
    if (!(fields >> r.algo >> r.m >> r.run >> r.instance >> r.mistake >> r.updates >>
          r.delta_sq_sum >> r.w_star_norm >> r.initial_norm)) {
      throw InvalidTrace("malformed trace record at line " + std::to_string(line_no));
    }
    records.push_back(std::move(r));
  }
  return records;
}

TraceAudit audit_trace(const std::vector<TraceRecord>& records) {
  TraceAudit audit;
  audit.min_slack = records.empty() ? 0.0 : std::numeric_limits<double>::infinity();
  for (const auto& r : records) {
    const double rhs =
        r.initial_norm + std::sqrt(static_cast<double>(r.m)) * std::sqrt(r.delta_sq_sum);
    const double slack = rhs - r.w_star_norm;
    audit.min_slack = std::min(audit.min_slack, slack);
    if (slack < -1e-9 * (1.0 + rhs)) ++audit.violations;
    ++audit.records;
  }
  return audit;
}

}  // namespace mtwu
