#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mtwu/dataset.hpp"
#include "mtwu/sparse_vector.hpp"

namespace mtwu::fixtures {

// Dense-ish random instance in d dimensions; about `density` of the
// coordinates are nonzero, never all of them zero.
inline SparseVector random_instance(std::mt19937_64& rng, std::size_t d, double density = 0.6) {
  std::uniform_real_distribution<double> val(-1.0, 1.0);
  std::bernoulli_distribution keep(density);
  std::vector<SparseEntry> entries;
  for (std::uint32_t i = 0; i < d; ++i) {
    if (keep(rng)) entries.push_back({i, val(rng)});
  }
  if (entries.empty()) entries.push_back({0, 0.5});
  return SparseVector(std::move(entries), d);
}

// Labels from a random hyperplane with a fraction of flips.
inline Dataset synthetic_binary(std::size_t n, std::size_t d, std::uint64_t seed,
                                double flip = 0.1) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<double> u(d);
  for (auto& v : u) v = g(rng);
  std::bernoulli_distribution flipper(flip);
  Dataset ds;
  ds.name = "synthetic";
  ds.d = d;
  ds.label_space = LabelSpace::Binary;
  ds.num_classes = 2;
  for (std::size_t i = 0; i < n; ++i) {
    SparseVector x = random_instance(rng, d);
    double s = 0.0;
    for (const auto& e : x.entries()) s += u[e.index] * e.value;
    double y = s >= 0.0 ? 1.0 : -1.0;
    if (flipper(rng)) y = -y;
    ds.instances.push_back({std::move(x), y});
  }
  return ds;
}

// Nearest-prototype labels among k random centers.
inline Dataset synthetic_multiclass(std::size_t n, std::size_t d, std::size_t k,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<std::vector<double>> protos(k, std::vector<double>(d));
  for (auto& p : protos)
    for (auto& v : p) v = g(rng);
  Dataset ds;
  ds.name = "synthetic-mc";
  ds.d = d;
  ds.label_space = LabelSpace::Multiclass;
  ds.num_classes = k;
  for (std::size_t i = 0; i < n; ++i) {
    SparseVector x = random_instance(rng, d);
    std::size_t best = 0;
    double best_s = -1e300;
    for (std::size_t c = 0; c < k; ++c) {
      double s = 0.0;
      for (const auto& e : x.entries()) s += protos[c][e.index] * e.value;
      if (s > best_s) {
        best_s = s;
        best = c;
      }
    }
    ds.instances.push_back({std::move(x), static_cast<double>(best)});
  }
  return ds;
}

}  // namespace mtwu::fixtures
