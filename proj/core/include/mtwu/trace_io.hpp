#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "mtwu/engine.hpp"

namespace mtwu {

/// One line of an exported trace.
///
/// Text form (tab separated, one record per line, after a header line):
///   algo  m  run  instance  mistake  updates  delta_sq_sum  w_star_norm  initial_norm
/// Reals are written with 17 significant digits so a re-read audit sees the
/// exact values the engine produced.
struct TraceRecord {
  std::string algo;
  std::size_t m = 1;
  std::size_t run = 0;
  std::size_t instance = 0;
  double mistake = 0.0;
  std::size_t updates = 0;
  double delta_sq_sum = 0.0;
  double w_star_norm = 0.0;
  double initial_norm = 0.0;
};

inline constexpr const char* kTraceHeader =
    "algo\tm\trun\tinstance\tmistake\tupdates\tdelta_sq_sum\tw_star_norm\tinitial_norm";

void write_trace_header(std::ostream& out);
void write_trace(std::ostream& out, const Trace& trace, const std::string& algo, std::size_t run);
std::vector<TraceRecord> read_trace(std::istream& in);

/// Offline form of check_theorem1 over exported records (M = record.m).
struct TraceAudit {
  std::size_t records = 0;
  std::size_t violations = 0;
  double min_slack = 0.0;
};
TraceAudit audit_trace(const std::vector<TraceRecord>& records);

}  // namespace mtwu
