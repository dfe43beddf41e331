#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "mtwu/bench.hpp"

namespace mtwu {
namespace {

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void emit_table(std::ostream& out, const BenchmarkResult& result) {
  out << "Dataset name: " << result.dataset_name << " (n=" << result.n << ",d=" << result.d
      << ",No. of classes=" << result.num_classes << ")    nb of runs (permutations): "
      << result.runs << '\n';

  constexpr int kAlgoWidth = 16;
  constexpr int kMetricWidth = 15;
  constexpr int kCellWidth = 20;
  out << std::left << std::setw(kAlgoWidth) << "Algorithm" << std::setw(kMetricWidth) << "";
  for (auto m : result.m_values) out << std::setw(kCellWidth) << ("m=" + std::to_string(m));
  out << '\n';

  const std::size_t algos = result.m_values.empty() ? 0 : result.cells.size() / result.m_values.size();
  for (std::size_t a = 0; a < algos; ++a) {
    const std::string name = to_string(result.cell(a, 0).kind);
    struct Row {
      const char* label;
      MeanStd CellSummary::*field;
      int decimals;
    };
    const Row rows[] = {{"Mistake Rate", &CellSummary::mistake_rate, 4},
                        {"NB of Updates", &CellSummary::updates, 2},
                        {"Cpu Time", &CellSummary::cpu_seconds, 2}};
    bool first = true;
    for (const auto& row : rows) {
      out << std::setw(kAlgoWidth) << (first ? name : "") << std::setw(kMetricWidth) << row.label;
      for (std::size_t mi = 0; mi < result.m_values.size(); ++mi) {
        out << std::setw(kCellWidth) << format_cell(result.cell(a, mi).*(row.field), row.decimals);
      }
      out << '\n';
      first = false;
    }
  }
  out << std::right;
}

void emit_csv(std::ostream& out, const BenchmarkResult& result, bool cpu_time) {
  out << "algorithm,m,metric,mean,std\n";
  for (const auto& cell : result.cells) {
    const std::string prefix = to_string(cell.kind) + "," + std::to_string(cell.m) + ",";
    out << prefix << "mistake_rate," << format_real(cell.mistake_rate.mean) << ','
        << format_real(cell.mistake_rate.std) << '\n';
    out << prefix << "updates," << format_real(cell.updates.mean) << ','
        << format_real(cell.updates.std) << '\n';
    if (cpu_time) {
      out << prefix << "cpu_seconds," << format_real(cell.cpu_seconds.mean) << ','
          << format_real(cell.cpu_seconds.std) << '\n';
    }
  }
}

}  // namespace

std::string format_cell(const MeanStd& value, int decimals) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.*f +/- %.*f", decimals, value.mean, decimals, value.std);
  return buf;
}

void emit(std::ostream& out, const BenchmarkResult& result, const EmitOptions& options) {
  if (options.format == EmitFormat::Csv) {
    emit_csv(out, result, options.csv_cpu_time);
  } else {
    emit_table(out, result);
  }
}

std::string emit(const BenchmarkResult& result, const EmitOptions& options) {
  std::ostringstream out;
  emit(out, result, options);
  return out.str();
}

}  // namespace mtwu
