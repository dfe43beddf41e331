#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "mtwu/dataset.hpp"
#include "mtwu/engine.hpp"
#include "mtwu/hyper_params.hpp"
#include "mtwu/learner_kind.hpp"

namespace mtwu {

/// Sample mean and standard deviation (n - 1 denominator; 0 when n == 1).
struct MeanStd {
  double mean = 0.0;
  double std = 0.0;
};
MeanStd mean_std(const std::vector<double>& values);

struct CellSummary {
  LearnerKind kind;
  std::size_t m = 1;
  std::size_t runs = 0;
  MeanStd mistake_rate;
  MeanStd updates;
  MeanStd cpu_seconds;
};

struct BenchmarkSpec {
  std::vector<LearnerKind> algorithms;
  std::vector<std::size_t> m_values{1, 2, 4, 8, 16, 32};
  std::size_t runs = 20;
  std::uint64_t base_seed = 0;
  MtwuConfig engine;  // m is overridden per cell
  HyperParams params;
  std::size_t threads = 1;
  bool audit_theorem1 = false;
  bool record_traces = false;  // keep per-run traces for export
};

struct RunRecord {
  std::size_t algo_index = 0;
  std::size_t m = 1;
  std::size_t run = 0;
  std::uint64_t permutation_fingerprint = 0;
  RunStats stats;
  BoundReport bound;  // filled only when auditing
  Trace trace;        // filled only when recording traces
};

struct BenchmarkResult {
  std::string dataset_name;
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t num_classes = 0;
  std::size_t runs = 0;
  std::vector<std::size_t> m_values;
  std::vector<CellSummary> cells;  // algorithm-major, then ascending m
  std::vector<RunRecord> records;  // same order, runs innermost
  std::size_t audited_instances = 0;
  std::size_t audit_violations = 0;

  const CellSummary& cell(std::size_t algo_index, std::size_t m_index) const;
};

/// Checks that every kind fits the dataset's label space. Throws ConfigError.
void validate_algorithms(const Dataset& dataset, const std::vector<LearnerKind>& algorithms);

/// Every (algorithm, m) cell aggregates `runs` runs; run r of every cell uses
/// permute(n, base_seed + r). Runs execute on up to spec.threads workers and
/// are aggregated by run index, so results do not depend on scheduling.
/// The dataset's labels must be normalized.
BenchmarkResult run_benchmark(const Dataset& dataset, const BenchmarkSpec& spec);

enum class EmitFormat { Table, Csv };

struct EmitOptions {
  EmitFormat format = EmitFormat::Table;
  bool csv_cpu_time = false;  // CPU time varies between runs, so CSV omits it by default
};

/// Table: one row group per algorithm (Mistake Rate / NB of Updates / Cpu Time),
/// "mean +/- std" cells, 4 decimals for rates and 2 for counts and time.
/// CSV: header then one record per (algorithm, m, metric) in algorithm order
/// then ascending m.
void emit(std::ostream& out, const BenchmarkResult& result, const EmitOptions& options);
std::string emit(const BenchmarkResult& result, const EmitOptions& options);

/// "0.5000 +/- 0.0000" with the given number of decimals.
std::string format_cell(const MeanStd& value, int decimals);

}  // namespace mtwu
