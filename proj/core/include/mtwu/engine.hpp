#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "mtwu/dataset.hpp"
#include "mtwu/hyper_params.hpp"
#include "mtwu/learner.hpp"
#include "mtwu/update_info.hpp"

namespace mtwu {

/// How an instance's mistake is judged when the inner loop runs m cycles.
enum class CountingMode {
  FirstPrediction,  // the first inner prediction only
  PerIteration,     // fraction of the m inner predictions that were wrong
  LastIteration,    // the prediction made on the final inner cycle
};

CountingMode parse_counting_mode(std::string_view s);
std::string_view to_string(CountingMode mode) noexcept;

/// Which triggered inner updates RunStats.updates adds up.
enum class UpdateCounting {
  AllCycles,  // every triggered inner cycle
  LastCycle,  // only an update made on the m-th cycle
};

UpdateCounting parse_update_counting(std::string_view s);
std::string_view to_string(UpdateCounting counting) noexcept;

struct MtwuConfig {
  std::size_t m = 1;
  CountingMode counting_mode = CountingMode::FirstPrediction;
  bool stop_early = true;  // leave the inner loop once a cycle is passive
  UpdateCounting update_counting = UpdateCounting::AllCycles;

  void validate() const;
};

struct InstanceOutcome {
  double mistake = 0.0;      // 0/1 except in PerIteration mode
  std::size_t updates = 0;   // triggered inner cycles
  std::vector<UpdateInfo> deltas;  // one per executed inner cycle
  double initial_norm = 0.0;       // ||w|| before the inner loop
  double w_star_norm = 0.0;        // ||w|| after it

  double delta_sq_sum() const noexcept;

  /// True when all m cycles ran and the last one changed the state. With
  /// stop_early off, a passive cycle makes every later one passive too, so
  /// both settings agree.
  bool last_cycle_triggered(std::size_t m) const noexcept;
};

struct Trace {
  std::size_t m = 1;
  std::vector<InstanceOutcome> instances;
};

struct RunStats {
  double mistake_rate = 0.0;
  double updates = 0.0;
  double cpu_seconds = 0.0;
};

/// Up to cfg.m predict/update cycles on the same (x, label). The learner's
/// outer clock advances once, before the first cycle. On a learner error the
/// state is left as it was after the last successful cycle.
InstanceOutcome process_instance(Learner& learner, const SparseVector& x, int label,
                                 const MtwuConfig& cfg);

struct RunOptions {
  bool record_trace = true;
};

struct RunResult {
  Learner learner;
  Trace trace;
  RunStats stats;
};

/// Runs the MTWU loop over `order` (indices into dataset.instances), or over
/// the dataset in file order when `order` is empty. cpu_seconds is thread CPU
/// time of the learning loop only. Throws InvalidArgument on an empty dataset
/// and ConfigError when the kind does not match the dataset's label space.
RunResult run_sequence(LearnerKind kind, const HyperParams& hp, const Dataset& dataset,
                       std::span<const std::size_t> order, const MtwuConfig& cfg,
                       const RunOptions& options = {});

/// Per-instance check of ||w*|| <= ||w0|| + sqrt(M) * sqrt(sum ||dw||^2).
struct BoundReport {
  std::vector<double> slack;  // rhs - ||w*|| per instance
  std::vector<double> rhs;
  std::size_t violations = 0;
  double min_slack = 0.0;
  bool pass = true;
};

/// M must be >= the realized number of inner cycles of every instance.
/// Tolerance per instance is 1e-9 * (1 + rhs). Throws InvalidTrace when an
/// instance has no delta records or more cycles than M.
BoundReport check_theorem1(const Trace& trace, std::size_t M);

/// Thread CPU time in seconds.
double thread_cpu_seconds() noexcept;

}  // namespace mtwu
