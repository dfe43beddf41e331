#include <unistd.h>
#include <zlib.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <string>

#include <gtest/gtest.h>

#include "mtwu/dataset.hpp"
#include "mtwu/error.hpp"
#include "mtwu/rng.hpp"
#include "support.hpp"

using namespace mtwu;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / ("mtwu_test_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST(Parse, BasicLine) {
  auto ds = parse_sparse_text("+1 1:0.5 3:2\n");
  ASSERT_EQ(ds.size(), 1u);
  EXPECT_EQ(ds.instances[0].label, 1.0);
  EXPECT_EQ(ds.instances[0].x, SparseVector::of({{0, 0.5}, {2, 2.0}}));
  EXPECT_GE(ds.d, 3u);
  EXPECT_EQ(ds.label_space, LabelSpace::Raw);
}

TEST(Parse, MulticlassRawLabel) {
  auto ds = parse_sparse_text("3 2:1");
  EXPECT_EQ(ds.instances[0].label, 3.0);
  EXPECT_EQ(ds.instances[0].x, SparseVector::of({{1, 1.0}}));
}

TEST(Parse, CommentsBlankLinesAndResorting) {
  auto ds = parse_sparse_text("# header\n\n-1 4:1 2:3   # trailing\n  \n1 1:1\n");
  ASSERT_EQ(ds.size(), 2u);
  EXPECT_EQ(ds.instances[0].x, SparseVector::of({{1, 3.0}, {3, 1.0}}));
  EXPECT_EQ(ds.d, 4u);
}

TEST(Parse, ErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_sparse_text(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("1 2:1 2:3"), 1u);
  EXPECT_EQ(line_of("1 1:1\n-1 0:2"), 2u);
  EXPECT_EQ(line_of("1 1:1\n1 1:1\nabc 1:1"), 3u);
  EXPECT_EQ(line_of("1 1:x"), 1u);
  EXPECT_EQ(line_of("1 1-2"), 1u);
  EXPECT_EQ(line_of("1 1:nan"), 1u);
  EXPECT_EQ(line_of("1 -3:1"), 1u);
}

TEST(Normalize, BinaryConventions) {
  for (const char* text : {"0 1:1\n1 1:2\n", "1 1:1\n2 1:2\n", "-1 1:1\n1 1:2\n"}) {
    auto ds = normalize_labels(parse_sparse_text(text));
    EXPECT_EQ(ds.label_space, LabelSpace::Binary);
    EXPECT_EQ(ds.num_classes, 2u);
    EXPECT_EQ(ds.instances[0].label, -1.0);
    EXPECT_EQ(ds.instances[1].label, 1.0);
  }
}

TEST(Normalize, MulticlassBySortedValue) {
  std::string text;
  for (int c : {7, 1, 3, 2, 5, 4, 6}) text += std::to_string(c) + " 1:1\n";
  auto ds = normalize_labels(parse_sparse_text(text));
  EXPECT_EQ(ds.label_space, LabelSpace::Multiclass);
  EXPECT_EQ(ds.num_classes, 7u);
  EXPECT_EQ(ds.instances[0].label, 6.0);
  EXPECT_EQ(ds.instances[1].label, 0.0);
}

TEST(Normalize, SingleLabelRejected) {
  EXPECT_THROW(normalize_labels(parse_sparse_text("5 1:1\n5 2:1\n")), DataError);
}

TEST(Normalize, Idempotent) {
  for (const char* text : {"0 1:1\n1 1:2\n0 2:1\n", "3 1:1\n9 1:2\n4 2:1\n3 1:5\n"}) {
    auto once = normalize_labels(parse_sparse_text(text));
    auto twice = normalize_labels(once);
    EXPECT_EQ(once.label_space, twice.label_space);
    EXPECT_EQ(once.num_classes, twice.num_classes);
    for (std::size_t i = 0; i < once.size(); ++i) {
      EXPECT_EQ(once.instances[i].label, twice.instances[i].label);
    }
  }
}

// Reference outputs from the published xoshiro256**/splitmix64 algorithms.
TEST(Rng, ReferenceVectors) {
  SplitMix64 sm(0);
  EXPECT_EQ(sm.next(), 0xe220a8397b1dcdafULL);
  Xoshiro256ss x(42);
  EXPECT_EQ(x.next(), 0x15780b2e0c2ec716ULL);
  EXPECT_EQ(x.next(), 0x6104d9866d113a7eULL);
  EXPECT_EQ(x.next(), 0xae17533239e499a1ULL);
}

TEST(Permute, GoldenValues) {
  EXPECT_EQ(permute(5, 42), (std::vector<std::size_t>{0, 1, 3, 4, 2}));
  EXPECT_EQ(permute(10, 0), (std::vector<std::size_t>{4, 2, 1, 7, 5, 6, 3, 9, 8, 0}));
  EXPECT_EQ(permute(1, 7), (std::vector<std::size_t>{0}));
}

TEST(Permute, DeterministicBijection) {
  for (std::size_t n : {1u, 2u, 3u, 17u, 1000u}) {
    for (std::uint64_t seed : {0ULL, 1ULL, 42ULL, 0xffffffffffffffffULL}) {
      auto p = permute(n, seed);
      EXPECT_EQ(p, permute(n, seed));
      std::vector<std::size_t> sorted = p;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(sorted[i], i);
    }
  }
  EXPECT_NE(permutation_fingerprint(permute(50, 1)), permutation_fingerprint(permute(50, 2)));
}

TEST(Subsample, SizesAndErrors) {
  auto ds = fixtures::synthetic_binary(300, 5, 3);
  auto full = subsample(ds, 300, 7);
  EXPECT_EQ(full.size(), 300u);
  const auto order = permute(300, 7);
  for (std::size_t i = 0; i < 300; ++i) {
    EXPECT_EQ(full.instances[i].x, ds.instances[order[i]].x);
  }
  EXPECT_EQ(subsample(ds, 120, 7).size(), 120u);
  EXPECT_THROW(subsample(ds, 301, 7), InvalidArgument);
  EXPECT_THROW(subsample(ds, 0, 7), InvalidArgument);
}

TEST(Subsample, StratifiedFallbackKeepsEveryClass) {
  Dataset ds;
  ds.label_space = LabelSpace::Multiclass;
  ds.num_classes = 3;
  ds.d = 1;
  for (int i = 0; i < 200; ++i) ds.instances.push_back({SparseVector::of({{0, 1.0}}), 0.0});
  ds.instances.push_back({SparseVector::of({{0, 2.0}}), 1.0});
  ds.instances.push_back({SparseVector::of({{0, 3.0}}), 2.0});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto sub = subsample(ds, 10, seed);
    ASSERT_EQ(sub.size(), 10u);
    std::set<double> labels;
    for (const auto& inst : sub.instances) labels.insert(inst.label);
    EXPECT_EQ(labels.size(), 3u);
  }
}

TEST(Serialize, RoundTrip) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  Dataset ds;
  for (int i = 0; i < 100; ++i) {
    auto x = fixtures::random_instance(rng, 30, 0.3);
    std::vector<SparseEntry> e(x.entries().begin(), x.entries().end());
    for (auto& v : e) v.value = u(rng) * (rng() % 2 ? 1e-7 : 1.0);
    ds.instances.push_back({SparseVector(std::move(e)), static_cast<double>(rng() % 5)});
  }
  ds.instances.push_back({SparseVector{}, 1.0});
  auto back = parse_sparse_text(serialize(ds));
  ASSERT_EQ(back.size(), ds.size());
  for (std::size_t i = 0; i < ds.size(); ++i) {
    EXPECT_EQ(back.instances[i].label, ds.instances[i].label);
    EXPECT_EQ(back.instances[i].x, ds.instances[i].x);
  }
}

TEST(ReadDataset, PlainAndGzip) {
  const std::string text = "1 1:0.25 4:1\n-1 2:3\n";
  auto plain = temp_file("plain.txt");
  std::ofstream(plain) << text;
  auto gz = temp_file("data.gz");
  gzFile f = gzopen(gz.c_str(), "wb");
  ASSERT_NE(f, nullptr);
  gzwrite(f, text.data(), static_cast<unsigned>(text.size()));
  gzclose(f);

  auto a = read_dataset(plain);
  auto b = read_dataset(gz);
  ASSERT_EQ(a.size(), 2u);
  ASSERT_EQ(b.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(a.instances[i].x, b.instances[i].x);
    EXPECT_EQ(a.instances[i].label, b.instances[i].label);
  }
  EXPECT_EQ(a.d, 4u);
  EXPECT_THROW(read_dataset(temp_file("missing")), DataError);
  fs::remove(plain);
  fs::remove(gz);
}
