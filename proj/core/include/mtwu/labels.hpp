#pragma once

#include <cstddef>

#include "mtwu/error.hpp"

namespace mtwu {

class BinaryLabel {
 public:
  explicit BinaryLabel(int v) : value_(v) {
    if (v != 1 && v != -1) throw InvalidArgument("binary label must be -1 or +1");
  }
  int value() const noexcept { return value_; }
  double sign() const noexcept { return static_cast<double>(value_); }

  friend bool operator==(BinaryLabel, BinaryLabel) = default;

 private:
  int value_;
};

class ClassLabel {
 public:
  ClassLabel(std::size_t value, std::size_t num_classes)
      : value_(value), num_classes_(num_classes) {
    if (num_classes < 2) throw InvalidArgument("multiclass label space needs K >= 2");
    if (value >= num_classes) throw InvalidArgument("class label out of range [0, K)");
  }
  std::size_t value() const noexcept { return value_; }
  std::size_t num_classes() const noexcept { return num_classes_; }

  friend bool operator==(ClassLabel, ClassLabel) = default;

 private:
  std::size_t value_;
  std::size_t num_classes_;
};

}  // namespace mtwu
