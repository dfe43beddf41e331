#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mtwu/sparse_vector.hpp"

namespace mtwu {

enum class LabelSpace {
  Raw,         // labels as read from the file
  Binary,      // -1 / +1
  Multiclass,  // 0 .. K-1
};

struct Instance {
  SparseVector x;
  double label = 0.0;
};

struct Dataset {
  std::string name;
  std::vector<Instance> instances;
  std::size_t d = 0;  // largest feature index seen (1-based count)
  LabelSpace label_space = LabelSpace::Raw;
  std::size_t num_classes = 0;  // 2 for binary, K for multiclass, 0 while raw

  std::size_t size() const noexcept { return instances.size(); }
  int label_at(std::size_t i) const { return static_cast<int>(instances[i].label); }
};

/// Parses "<label> <idx>:<val> ..." lines with 1-based indices. Blank lines are
/// skipped and '#' starts a comment. Pairs are re-sorted; duplicates, bad
/// pairs, zero/negative indices and non-numeric fields raise ParseError.
Dataset parse_sparse_text(std::istream& in, std::string name = {});
Dataset parse_sparse_text(std::string_view text, std::string name = {});

/// Reads a file, gunzipping it when it starts with the gzip magic bytes.
/// The dataset is named after the file, minus .gz and a .libsvm/.svm/.txt
/// suffix. Throws DataError when unreadable.
Dataset read_dataset(const std::filesystem::path& path);

/// Canonical text form: label then 1-based "idx:val" pairs, values with 17
/// significant digits.
void serialize(std::ostream& out, const Dataset& dataset);
std::string serialize(const Dataset& dataset);

/// Two distinct labels map to -1/+1 (larger raw -> +1); three or more map to
/// 0..K-1 by sorted raw value. Idempotent. Throws DataError for a single label.
Dataset normalize_labels(Dataset dataset);

/// Fisher-Yates over [0, n) driven by xoshiro256** seeded through splitmix64.
std::vector<std::size_t> permute(std::size_t n, std::uint64_t seed);

/// First k rows of permute(n, seed), falling back to proportional per-class
/// sampling when a class would vanish. Labels must already be normalized.
/// Throws InvalidArgument for k == 0 or k > n, or k < number of classes.
Dataset subsample(const Dataset& dataset, std::size_t k, std::uint64_t seed);

/// 64-bit FNV-1a over the index sequence, for logging permutation identity.
std::uint64_t permutation_fingerprint(const std::vector<std::size_t>& order);

}  // namespace mtwu
