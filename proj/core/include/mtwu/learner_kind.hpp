#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>

namespace mtwu {

enum class BinaryKind {
  Perceptron,
  PA,
  PA1,
  PA2,
  OGD,
  ALMA,
  ROMMA,
  aROMMA,
  SOP,
  CW,
  AROW,
  NAROW,
  NHERD,
  SCW1,
  SCW2,
  IELLIP,
};

enum class MulticlassKind {
  PA,
  PA1,
  PA2,
  OGD,
  ROMMA,
  aROMMA,
  PerceptronM,
  PerceptronS,
  PerceptronU,
  CW,
  SCW1,
  SCW2,
  AROW,
};

/// Either catalog. Multiclass tags print with an "M_" prefix.
using LearnerKind = std::variant<BinaryKind, MulticlassKind>;

bool is_first_order(BinaryKind kind) noexcept;
bool is_second_order(MulticlassKind kind) noexcept;
bool is_multiclass(const LearnerKind& kind) noexcept;

std::string to_string(BinaryKind kind);
std::string to_string(MulticlassKind kind);
std::string to_string(const LearnerKind& kind);

/// Accepts the printed names ("PA1", "M_PerceptronU", ...) case-insensitively,
/// and "SCW" as an alias of SCW1 / "M_SCW" of M_SCW1.
std::optional<LearnerKind> parse_learner_kind(std::string_view name);

/// Binary catalog in table order.
std::span<const BinaryKind> all_binary_kinds() noexcept;
std::span<const MulticlassKind> all_multiclass_kinds() noexcept;

}  // namespace mtwu
