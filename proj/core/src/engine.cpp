#include "mtwu/engine.hpp"

#include <ctime>
#include <numeric>
#include <string>

#include "mtwu/error.hpp"

namespace mtwu {

CountingMode parse_counting_mode(std::string_view s) {
  if (s == "first") return CountingMode::FirstPrediction;
  if (s == "periter") return CountingMode::PerIteration;
  if (s == "last") return CountingMode::LastIteration;
  throw ConfigError("counting mode must be first, periter or last, got '" + std::string(s) + "'");
}

std::string_view to_string(CountingMode mode) noexcept {
  switch (mode) {
    case CountingMode::FirstPrediction: return "first";
    case CountingMode::PerIteration: return "periter";
    case CountingMode::LastIteration: return "last";
  }
  return "?";
}

UpdateCounting parse_update_counting(std::string_view s) {
  if (s == "all") return UpdateCounting::AllCycles;
  if (s == "last") return UpdateCounting::LastCycle;
  throw ConfigError("update counting must be all or last, got '" + std::string(s) + "'");
}

std::string_view to_string(UpdateCounting counting) noexcept {
  return counting == UpdateCounting::AllCycles ? "all" : "last";
}

void MtwuConfig::validate() const {
  if (m < 1) throw ConfigError("m must be >= 1");
}

double InstanceOutcome::delta_sq_sum() const noexcept {
  double sum = 0.0;
  for (const auto& d : deltas) sum += d.delta_sq_norm;
  return sum;
}

bool InstanceOutcome::last_cycle_triggered(std::size_t m) const noexcept {
  return deltas.size() == m && !deltas.empty() && deltas.back().triggered;
}

InstanceOutcome process_instance(Learner& learner, const SparseVector& x, int label,
                                 const MtwuConfig& cfg) {
  cfg.validate();
  InstanceOutcome out;
  out.deltas.reserve(cfg.stop_early ? 2 : cfg.m);
  learner.begin_instance();
  out.initial_norm = learner.weight_norm();

  bool first_mistake = false;
  bool last_mistake = false;
  std::size_t wrong = 0;
  for (std::size_t k = 0; k < cfg.m; ++k) {
    const UpdateInfo info = learner.step(x, label);
    out.deltas.push_back(info);
    if (k == 0) first_mistake = info.mistake;
    last_mistake = info.mistake;
    wrong += info.mistake ? 1 : 0;
    if (info.triggered) {
      ++out.updates;
    } else if (cfg.stop_early) {
      // The state is unchanged, so every remaining cycle repeats this one.
      wrong += (info.mistake ? 1 : 0) * (cfg.m - k - 1);
      break;
    }
  }

  switch (cfg.counting_mode) {
    case CountingMode::FirstPrediction:
      out.mistake = first_mistake ? 1.0 : 0.0;
      break;
    case CountingMode::PerIteration:
      out.mistake = static_cast<double>(wrong) / static_cast<double>(cfg.m);
      break;
    case CountingMode::LastIteration:
      out.mistake = last_mistake ? 1.0 : 0.0;
      break;
  }
  out.w_star_norm = learner.weight_norm();
  return out;
}

RunResult run_sequence(LearnerKind kind, const HyperParams& hp, const Dataset& dataset,
                       std::span<const std::size_t> order, const MtwuConfig& cfg,
                       const RunOptions& options) {
  cfg.validate();
  if (dataset.instances.empty()) throw InvalidArgument("empty dataset: mistake rate undefined");
  const bool multiclass = is_multiclass(kind);
  if (multiclass && dataset.label_space != LabelSpace::Multiclass) {
    throw ConfigError(to_string(kind) + " needs a multiclass dataset");
  }
  if (!multiclass && dataset.label_space != LabelSpace::Binary) {
    throw ConfigError(to_string(kind) + " needs a binary dataset with -1/+1 labels");
  }
  const std::size_t n = order.empty() ? dataset.size() : order.size();
  for (auto i : order) {
    if (i >= dataset.size()) throw InvalidArgument("instance order index out of range");
  }

  RunResult result{Learner(kind, dataset.d, hp, dataset.num_classes), Trace{cfg.m, {}}, RunStats{}};
  if (options.record_trace) result.trace.instances.reserve(n);

  double mistakes = 0.0;
  std::size_t updates = 0;
  const double start = thread_cpu_seconds();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& inst = dataset.instances[order.empty() ? i : order[i]];
    InstanceOutcome outcome =
        process_instance(result.learner, inst.x, static_cast<int>(inst.label), cfg);
    mistakes += outcome.mistake;
    updates += cfg.update_counting == UpdateCounting::AllCycles
                   ? outcome.updates
                   : (outcome.last_cycle_triggered(cfg.m) ? 1 : 0);
    if (options.record_trace) result.trace.instances.push_back(std::move(outcome));
  }
  result.stats.cpu_seconds = thread_cpu_seconds() - start;
  result.stats.mistake_rate = mistakes / static_cast<double>(n);
  result.stats.updates = static_cast<double>(updates);
  return result;
}

double thread_cpu_seconds() noexcept {
  timespec ts{};
  clock_gettime(CLOCK_THREAD_CPUTIME_ID, &ts);
  return static_cast<double>(ts.tv_sec) + 1e-9 * static_cast<double>(ts.tv_nsec);
}

}  // namespace mtwu
