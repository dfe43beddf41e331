// bench: sweep learners x m over seeded permutations and print the summary.
//
// Exit codes: 0 ok, 1 configuration error, 2 data error, 3 norm-bound audit failure.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "mtwu/bench.hpp"
#include "mtwu/dataset.hpp"
#include "mtwu/error.hpp"
#include "mtwu/trace_io.hpp"

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitData = 2;
constexpr int kExitAudit = 3;

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<mtwu::LearnerKind> resolve_algorithms(const std::vector<std::string>& names,
                                                  const mtwu::Dataset& ds) {
  std::vector<mtwu::LearnerKind> out;
  for (const auto& name : names) {
    std::string lower = name;
    std::transform(lower.begin(), lower.end(), lower.begin(), ::tolower);
    if (lower == "all") {
      if (ds.label_space == mtwu::LabelSpace::Multiclass) {
        for (auto k : mtwu::all_multiclass_kinds()) out.emplace_back(k);
      } else {
        for (auto k : mtwu::all_binary_kinds()) out.emplace_back(k);
      }
      continue;
    }
    auto kind = mtwu::parse_learner_kind(name);
    if (!kind) throw mtwu::ConfigError("unknown algorithm '" + name + "'");
    out.push_back(*kind);
  }
  return out;
}

std::vector<std::size_t> parse_m_values(const std::string& text) {
  std::vector<std::size_t> out;
  for (const auto& item : split_list(text)) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size() || v < 1) throw mtwu::ConfigError("bad m value '" + item + "'");
    out.push_back(static_cast<std::size_t>(v));
  }
  if (out.empty()) throw mtwu::ConfigError("--m needs at least one value");
  return out;
}

std::size_t thread_budget() {
  std::size_t n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("BENCH_THREADS")) {
    char* end = nullptr;
    const unsigned long cap = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || cap == 0) {
      throw mtwu::ConfigError("BENCH_THREADS must be a positive integer");
    }
    n = std::min<std::size_t>(n, cap);
  }
  return n;
}

int audit_trace_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw mtwu::DataError("cannot open trace '" + path + "'");
  const auto records = mtwu::read_trace(in);
  const auto audit = mtwu::audit_trace(records);
  std::cout << "records " << audit.records << " violations " << audit.violations << " min_slack "
            << audit.min_slack << '\n';
  return audit.violations == 0 ? 0 : kExitAudit;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sweep online learners over seeded permutations with multiple weight updates per instance"};
  app.option_defaults()->always_capture_default();

  std::string data_path;
  std::string data_format = "libsvm";
  std::string algos = "all";
  std::string m_text = "1,2,4,8,16,32";
  std::size_t runs = 20;
  std::uint64_t seed = 0;
  std::string mode = "first";
  bool no_early_stop = false;
  std::string count_updates = "all";
  std::string out_path;
  std::string format = "table";
  bool csv_cpu = false;
  std::size_t subsample_k = 0;
  std::uint64_t subsample_seed = 7;
  std::vector<std::string> assignments;
  bool audit = false;
  std::string trace_path;
  std::string check_trace;
  bool verbose = false;

  app.set_config("--config", "", "TOML/INI file with option values; command-line flags win");
  app.add_option("--data", data_path, "Dataset in LIBSVM/SVM-light text format, optionally gzipped");
  app.add_option("--data-format", data_format, "Input format")->check(CLI::IsMember({"libsvm"}));
  app.add_option("--algos", algos, "Comma-separated algorithm names, or 'all'");
  app.add_option("--m", m_text, "Comma-separated inner iteration counts");
  app.add_option("--runs", runs, "Permutation runs per cell")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Base permutation seed; run r uses seed + r");
  app.add_option("--mode", mode, "Mistake counting: first, periter or last")
      ->check(CLI::IsMember({"first", "periter", "last"}));
  app.add_flag("--no-early-stop", no_early_stop, "Always run all m inner cycles");
  app.add_option("--count-updates", count_updates, "Updates to count: all inner cycles, or the last cycle only")
      ->check(CLI::IsMember({"all", "last"}));
  app.add_option("--out", out_path, "Write the summary here instead of stdout");
  app.add_option("--format", format, "Summary format")->check(CLI::IsMember({"table", "csv"}));
  app.add_flag("--csv-cpu", csv_cpu, "Include cpu_seconds rows in CSV output");
  app.add_option("--subsample", subsample_k, "Use a seeded K-row subsample of the data");
  app.add_option("--subsample-seed", subsample_seed, "Seed for --subsample");
  app.add_option("--set", assignments, "Hyperparameter override name=value (repeatable)");
  app.add_flag("--audit-theorem1", audit, "Check the per-instance norm bound on every run");
  app.add_option("--trace", trace_path, "Export per-instance trace records to this file");
  app.add_option("--check-trace", check_trace, "Audit a previously exported trace file and exit");
  app.add_flag("-v,--verbose", verbose, "Log permutation fingerprints to stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (!check_trace.empty()) return audit_trace_file(check_trace);
    if (data_path.empty()) throw mtwu::ConfigError("--data is required");

    mtwu::BenchmarkSpec spec;
    spec.params = mtwu::HyperParams::from_assignments(assignments);
    spec.params.validate();
    spec.m_values = parse_m_values(m_text);
    spec.runs = runs;
    spec.base_seed = seed;
    spec.engine.counting_mode = mtwu::parse_counting_mode(mode);
    spec.engine.stop_early = !no_early_stop;
    spec.engine.update_counting = mtwu::parse_update_counting(count_updates);
    spec.audit_theorem1 = audit;
    spec.record_traces = !trace_path.empty();
    spec.threads = thread_budget();
    const auto algo_names = split_list(algos);
    if (algo_names.empty()) throw mtwu::ConfigError("--algos is empty");

    mtwu::Dataset ds = mtwu::normalize_labels(mtwu::read_dataset(data_path));
    if (subsample_k > 0) {
      if (subsample_k > ds.size()) {
        throw mtwu::ConfigError("--subsample " + std::to_string(subsample_k) + " exceeds the " +
                                std::to_string(ds.size()) + " rows available");
      }
      ds = mtwu::subsample(ds, subsample_k, subsample_seed);
    }
    spec.algorithms = resolve_algorithms(algo_names, ds);
    mtwu::validate_algorithms(ds, spec.algorithms);

    const auto result = mtwu::run_benchmark(ds, spec);

    if (verbose) {
      for (const auto& rec : result.records) {
        std::cerr << mtwu::to_string(spec.algorithms[rec.algo_index]) << " m=" << rec.m
                  << " run=" << rec.run << " perm=" << std::hex << rec.permutation_fingerprint
                  << std::dec << '\n';
      }
    }

    mtwu::EmitOptions options;
    options.format = format == "csv" ? mtwu::EmitFormat::Csv : mtwu::EmitFormat::Table;
    options.csv_cpu_time = csv_cpu;
    if (out_path.empty()) {
      mtwu::emit(std::cout, result, options);
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw mtwu::ConfigError("cannot write '" + out_path + "'");
      mtwu::emit(out, result, options);
    }

    if (!trace_path.empty()) {
      std::ofstream tr(trace_path);
      if (!tr) throw mtwu::ConfigError("cannot write '" + trace_path + "'");
      mtwu::write_trace_header(tr);
      for (const auto& rec : result.records) {
        mtwu::write_trace(tr, rec.trace, mtwu::to_string(spec.algorithms[rec.algo_index]), rec.run);
      }
    }

    if (audit) {
      std::cerr << "theorem1 audit: " << result.audited_instances << " instances, "
                << result.audit_violations << " violations\n";
      if (result.audit_violations > 0) return kExitAudit;
    }
    return 0;
  } catch (const mtwu::DataError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const mtwu::InvalidTrace& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const mtwu::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const mtwu::InvalidArgument& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const mtwu::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
}
