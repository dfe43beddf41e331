#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "mtwu/bench.hpp"
#include "mtwu/error.hpp"
#include "support.hpp"

using namespace mtwu;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(MeanStd, SampleDenominator) {
  auto ms = mean_std({1.0, 2.0, 3.0, 4.0});
  EXPECT_DOUBLE_EQ(ms.mean, 2.5);
  EXPECT_NEAR(ms.std, std::sqrt(5.0 / 3.0), 1e-15);
  auto one = mean_std({0.7});
  EXPECT_EQ(one.mean, 0.7);
  EXPECT_EQ(one.std, 0.0);
}

TEST(FormatCell, Example) {
  EXPECT_EQ(format_cell({0.5, 0.0}, 4), "0.5000 +/- 0.0000");
  EXPECT_EQ(format_cell({0.2369, 0.0016}, 4), "0.2369 +/- 0.0016");
  EXPECT_EQ(format_cell({768.0, 13.594}, 2), "768.00 +/- 13.59");
}

TEST(Benchmark, CsvOrderingAlgorithmThenM) {
  auto ds = fixtures::synthetic_binary(60, 4, 1);
  BenchmarkSpec spec;
  spec.algorithms = {BinaryKind::PA, BinaryKind::OGD};
  spec.m_values = {1, 2};
  spec.runs = 3;
  auto res = run_benchmark(ds, spec);
  auto lines = lines_of(emit(res, {EmitFormat::Csv, false}));
  ASSERT_EQ(lines.size(), 1u + 4u * 2u);
  EXPECT_EQ(lines[0], "algorithm,m,metric,mean,std");
  const char* expect[] = {"PA,1,mistake_rate", "PA,1,updates",  "PA,2,mistake_rate",
                          "PA,2,updates",      "OGD,1,mistake_rate", "OGD,1,updates",
                          "OGD,2,mistake_rate", "OGD,2,updates"};
  for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(lines[i + 1].rfind(expect[i], 0), 0u) << lines[i + 1];
}

TEST(Benchmark, SingleRunHasZeroStd) {
  auto ds = fixtures::synthetic_binary(80, 4, 2);
  BenchmarkSpec spec;
  spec.algorithms = {BinaryKind::PA1, BinaryKind::AROW};
  spec.m_values = {1, 4};
  spec.runs = 1;
  auto res = run_benchmark(ds, spec);
  for (const auto& c : res.cells) {
    EXPECT_EQ(c.mistake_rate.std, 0.0);
    EXPECT_EQ(c.updates.std, 0.0);
    EXPECT_EQ(c.cpu_seconds.std, 0.0);
  }
}

TEST(Benchmark, DeterministicAndThreadIndependent) {
  auto ds = fixtures::synthetic_binary(150, 6, 3);
  BenchmarkSpec spec;
  spec.algorithms = {BinaryKind::PA1, BinaryKind::CW, BinaryKind::SOP};
  spec.m_values = {1, 2, 8};
  spec.runs = 5;
  spec.base_seed = 11;
  auto serial = emit(run_benchmark(ds, spec), {EmitFormat::Csv, false});
  spec.threads = 4;
  auto parallel = emit(run_benchmark(ds, spec), {EmitFormat::Csv, false});
  EXPECT_EQ(serial, parallel);
  EXPECT_EQ(serial, emit(run_benchmark(ds, spec), {EmitFormat::Csv, false}));
}

TEST(Benchmark, RunsSharePermutationsAcrossCells) {
  auto ds = fixtures::synthetic_binary(40, 3, 4);
  BenchmarkSpec spec;
  spec.algorithms = {BinaryKind::PA, BinaryKind::Perceptron};
  spec.m_values = {1, 2};
  spec.runs = 4;
  spec.base_seed = 100;
  auto res = run_benchmark(ds, spec);
  ASSERT_EQ(res.records.size(), 2u * 2u * 4u);
  for (const auto& r : res.records) {
    EXPECT_EQ(r.permutation_fingerprint, permutation_fingerprint(permute(40, 100 + r.run)));
  }
}

TEST(Benchmark, AuditCountsInstances) {
  auto ds = fixtures::synthetic_binary(50, 3, 5);
  BenchmarkSpec spec;
  spec.algorithms = {BinaryKind::ALMA, BinaryKind::ROMMA};
  spec.m_values = {1, 4};
  spec.runs = 2;
  spec.audit_theorem1 = true;
  auto res = run_benchmark(ds, spec);
  EXPECT_EQ(res.audited_instances, 2u * 2u * 2u * 50u);
  EXPECT_EQ(res.audit_violations, 0u);
}

TEST(Benchmark, LabelSpaceMismatchRejectedUpFront) {
  auto ds = fixtures::synthetic_binary(20, 3, 6);
  BenchmarkSpec spec;
  spec.algorithms = {BinaryKind::PA, MulticlassKind::PA};
  EXPECT_THROW(run_benchmark(ds, spec), ConfigError);
}

TEST(Benchmark, TableLayout) {
  auto ds = fixtures::synthetic_multiclass(30, 3, 3, 7);
  ds.name = "toy";
  BenchmarkSpec spec;
  spec.algorithms = {MulticlassKind::PA};
  spec.m_values = {1, 2};
  spec.runs = 2;
  auto text = emit(run_benchmark(ds, spec), {});
  auto lines = lines_of(text);
  ASSERT_EQ(lines.size(), 5u);
  EXPECT_EQ(lines[0], "Dataset name: toy (n=30,d=3,No. of classes=3)    nb of runs (permutations): 2");
  EXPECT_NE(lines[2].find("M_PA"), std::string::npos);
  EXPECT_NE(lines[2].find("Mistake Rate"), std::string::npos);
  EXPECT_NE(lines[3].find("NB of Updates"), std::string::npos);
  EXPECT_NE(lines[4].find("Cpu Time"), std::string::npos);
  EXPECT_NE(lines[2].find(" +/- "), std::string::npos);
}
