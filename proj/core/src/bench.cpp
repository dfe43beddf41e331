#include "mtwu/bench.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "mtwu/error.hpp"

namespace mtwu {

MeanStd mean_std(const std::vector<double>& values) {
  MeanStd out;
  if (values.empty()) return out;
  const double n = static_cast<double>(values.size());
  out.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - out.mean) * (v - out.mean);
    out.std = std::sqrt(ss / (n - 1.0));
  }
  return out;
}

const CellSummary& BenchmarkResult::cell(std::size_t algo_index, std::size_t m_index) const {
  return cells.at(algo_index * m_values.size() + m_index);
}

void validate_algorithms(const Dataset& dataset, const std::vector<LearnerKind>& algorithms) {
  if (algorithms.empty()) throw ConfigError("no algorithms selected");
  if (dataset.label_space == LabelSpace::Raw) throw ConfigError("dataset labels are not normalized");
  for (const auto& kind : algorithms) {
    const bool multiclass = is_multiclass(kind);
    if (multiclass && dataset.label_space != LabelSpace::Multiclass) {
      throw ConfigError(to_string(kind) + " cannot run on binary dataset '" + dataset.name + "'");
    }
    if (!multiclass && dataset.label_space != LabelSpace::Binary) {
      throw ConfigError(to_string(kind) + " cannot run on multiclass dataset '" + dataset.name + "'");
    }
  }
}

BenchmarkResult run_benchmark(const Dataset& dataset, const BenchmarkSpec& spec) {
  validate_algorithms(dataset, spec.algorithms);
  if (spec.m_values.empty()) throw ConfigError("no m values selected");
  for (auto m : spec.m_values) {
    if (m < 1) throw ConfigError("m values must be >= 1");
  }
  if (spec.runs < 1) throw ConfigError("runs must be >= 1");
  if (dataset.instances.empty()) throw DataError("dataset '" + dataset.name + "' is empty");
  spec.params.validate();

  std::vector<std::vector<std::size_t>> permutations;
  std::vector<std::uint64_t> fingerprints;
  permutations.reserve(spec.runs);
  for (std::size_t r = 0; r < spec.runs; ++r) {
    permutations.push_back(permute(dataset.size(), spec.base_seed + r));
    fingerprints.push_back(permutation_fingerprint(permutations.back()));
  }

  const std::size_t num_m = spec.m_values.size();
  const std::size_t total = spec.algorithms.size() * num_m * spec.runs;
  std::vector<RunRecord> records(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    auto& rec = records[idx];
    rec.run = idx % spec.runs;
    rec.m = spec.m_values[(idx / spec.runs) % num_m];
    rec.algo_index = idx / (spec.runs * num_m);
    rec.permutation_fingerprint = fingerprints[rec.run];
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= total) return;
      {
        std::lock_guard lock(failure_mutex);
        if (failure) return;
      }
      auto& rec = records[idx];
      try {
        MtwuConfig cfg = spec.engine;
        cfg.m = rec.m;
        RunOptions options;
        options.record_trace = spec.audit_theorem1 || spec.record_traces;
        auto result = run_sequence(spec.algorithms[rec.algo_index], spec.params, dataset,
                                   permutations[rec.run], cfg, options);
        rec.stats = result.stats;
        if (spec.audit_theorem1) rec.bound = check_theorem1(result.trace, rec.m);
        if (spec.record_traces) rec.trace = std::move(result.trace);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  const std::size_t threads = std::max<std::size_t>(1, std::min(spec.threads, total));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  BenchmarkResult result;
  result.dataset_name = dataset.name;
  result.n = dataset.size();
  result.d = dataset.d;
  result.num_classes = dataset.num_classes;
  result.runs = spec.runs;
  result.m_values = spec.m_values;
  for (std::size_t a = 0; a < spec.algorithms.size(); ++a) {
    for (std::size_t mi = 0; mi < num_m; ++mi) {
      std::vector<double> rates, updates, cpu;
      for (std::size_t r = 0; r < spec.runs; ++r) {
        const auto& rec = records[(a * num_m + mi) * spec.runs + r];
        rates.push_back(rec.stats.mistake_rate);
        updates.push_back(rec.stats.updates);
        cpu.push_back(rec.stats.cpu_seconds);
        if (spec.audit_theorem1) {
          result.audited_instances += rec.bound.slack.size();
          result.audit_violations += rec.bound.violations;
        }
      }
      result.cells.push_back(CellSummary{spec.algorithms[a], spec.m_values[mi], spec.runs,
                                         mean_std(rates), mean_std(updates), mean_std(cpu)});
    }
  }
  result.records = std::move(records);
  return result;
}

}  // namespace mtwu
