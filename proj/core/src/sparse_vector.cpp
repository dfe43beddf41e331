#include "mtwu/sparse_vector.hpp"

#include <algorithm>
#include <string>

#include "mtwu/error.hpp"

namespace mtwu {

SparseVector::SparseVector(std::vector<SparseEntry> entries, std::optional<std::size_t> dim_hint)
    : dim_hint_(dim_hint) {
  std::erase_if(entries, [](const SparseEntry& e) { return e.value == 0.0; });
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i].index <= entries[i - 1].index) {
      throw InvalidArgument("sparse vector indices must be strictly increasing (index " +
                            std::to_string(entries[i].index) + ")");
    }
  }
  entries_ = std::move(entries);
  for (const auto& e : entries_) squared_norm_ += e.value * e.value;
  if (dim_hint_ && *dim_hint_ < min_dim()) {
    throw InvalidArgument("dim_hint smaller than the largest stored index");
  }
}

SparseVector SparseVector::from_unsorted(std::vector<SparseEntry> entries,
                                         std::optional<std::size_t> dim_hint) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
  auto dup = std::adjacent_find(entries.begin(), entries.end(),
                                [](const SparseEntry& a, const SparseEntry& b) {
                                  return a.index == b.index;
                                });
  if (dup != entries.end()) {
    throw InvalidArgument("duplicate feature index " + std::to_string(dup->index + 1));
  }
  return SparseVector(std::move(entries), dim_hint);
}

SparseVector SparseVector::of(std::initializer_list<std::pair<std::uint32_t, double>> pairs) {
  std::vector<SparseEntry> entries;
  entries.reserve(pairs.size());
  for (const auto& [i, v] : pairs) entries.push_back({i, v});
  return from_unsorted(std::move(entries));
}

}  // namespace mtwu
