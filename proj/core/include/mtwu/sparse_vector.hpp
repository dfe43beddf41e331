#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace mtwu {

struct SparseEntry {
  std::uint32_t index;  // 0-based
  double value;

  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Instance features as sorted (index, value) pairs.
///
/// Indices are 0-based inside the library; the text format is 1-based and the
/// parser converts. Entries are strictly increasing by index and explicit zeros
/// are dropped on construction.
class SparseVector {
 public:
  SparseVector() = default;

  /// Entries must already be strictly increasing; zeros are dropped.
  /// Throws InvalidArgument on unsorted or duplicate indices.
  explicit SparseVector(std::vector<SparseEntry> entries,
                        std::optional<std::size_t> dim_hint = std::nullopt);

  /// Sorts first; duplicate indices are rejected.
  static SparseVector from_unsorted(std::vector<SparseEntry> entries,
                                    std::optional<std::size_t> dim_hint = std::nullopt);

  /// Convenience for tests and examples: (0-based index, value) pairs.
  static SparseVector of(std::initializer_list<std::pair<std::uint32_t, double>> pairs);

  std::span<const SparseEntry> entries() const noexcept { return entries_; }
  std::size_t nnz() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  /// One past the largest stored index (0 when empty).
  std::size_t min_dim() const noexcept {
    return entries_.empty() ? 0 : static_cast<std::size_t>(entries_.back().index) + 1;
  }
  std::optional<std::size_t> dim_hint() const noexcept { return dim_hint_; }

  /// Sum of squared values, cached at construction.
  double squared_norm() const noexcept { return squared_norm_; }

  friend bool operator==(const SparseVector& a, const SparseVector& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<SparseEntry> entries_;
  std::optional<std::size_t> dim_hint_;
  double squared_norm_ = 0.0;
};

}  // namespace mtwu
