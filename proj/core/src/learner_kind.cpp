#include "mtwu/learner_kind.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace mtwu {
namespace {

// Row order of the published binary and multiclass result tables.
constexpr std::array kBinaryOrder = {
    BinaryKind::SOP,  BinaryKind::SCW1,  BinaryKind::ROMMA, BinaryKind::Perceptron,
    BinaryKind::PA2,  BinaryKind::PA1,   BinaryKind::PA,    BinaryKind::OGD,
    BinaryKind::NHERD, BinaryKind::NAROW, BinaryKind::CW,   BinaryKind::AROW,
    BinaryKind::SCW2, BinaryKind::ALMA,  BinaryKind::aROMMA, BinaryKind::IELLIP,
};

constexpr std::array kMulticlassOrder = {
    MulticlassKind::PA,          MulticlassKind::PA1,         MulticlassKind::PA2,
    MulticlassKind::OGD,         MulticlassKind::ROMMA,       MulticlassKind::aROMMA,
    MulticlassKind::PerceptronM, MulticlassKind::PerceptronS, MulticlassKind::PerceptronU,
    MulticlassKind::CW,          MulticlassKind::SCW1,        MulticlassKind::SCW2,
    MulticlassKind::AROW,
};

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  return out;
}

}  // namespace

bool is_first_order(BinaryKind kind) noexcept {
  switch (kind) {
    case BinaryKind::Perceptron:
    case BinaryKind::PA:
    case BinaryKind::PA1:
    case BinaryKind::PA2:
    case BinaryKind::OGD:
    case BinaryKind::ALMA:
    case BinaryKind::ROMMA:
    case BinaryKind::aROMMA:
      return true;
    default:
      return false;
  }
}

bool is_second_order(MulticlassKind kind) noexcept {
  return kind == MulticlassKind::CW || kind == MulticlassKind::SCW1 ||
         kind == MulticlassKind::SCW2 || kind == MulticlassKind::AROW;
}

bool is_multiclass(const LearnerKind& kind) noexcept {
  return std::holds_alternative<MulticlassKind>(kind);
}

std::string to_string(BinaryKind kind) {
  switch (kind) {
    case BinaryKind::Perceptron: return "Perceptron";
    case BinaryKind::PA: return "PA";
    case BinaryKind::PA1: return "PA1";
    case BinaryKind::PA2: return "PA2";
    case BinaryKind::OGD: return "OGD";
    case BinaryKind::ALMA: return "ALMA";
    case BinaryKind::ROMMA: return "ROMMA";
    case BinaryKind::aROMMA: return "aROMMA";
    case BinaryKind::SOP: return "SOP";
    case BinaryKind::CW: return "CW";
    case BinaryKind::AROW: return "AROW";
    case BinaryKind::NAROW: return "NAROW";
    case BinaryKind::NHERD: return "NHERD";
    case BinaryKind::SCW1: return "SCW1";
    case BinaryKind::SCW2: return "SCW2";
    case BinaryKind::IELLIP: return "IELLIP";
  }
  return "?";
}

std::string to_string(MulticlassKind kind) {
  switch (kind) {
    case MulticlassKind::PA: return "M_PA";
    case MulticlassKind::PA1: return "M_PA1";
    case MulticlassKind::PA2: return "M_PA2";
    case MulticlassKind::OGD: return "M_OGD";
    case MulticlassKind::ROMMA: return "M_ROMMA";
    case MulticlassKind::aROMMA: return "M_aROMMA";
    case MulticlassKind::PerceptronM: return "M_PerceptronM";
    case MulticlassKind::PerceptronS: return "M_PerceptronS";
    case MulticlassKind::PerceptronU: return "M_PerceptronU";
    case MulticlassKind::CW: return "M_CW";
    case MulticlassKind::SCW1: return "M_SCW1";
    case MulticlassKind::SCW2: return "M_SCW2";
    case MulticlassKind::AROW: return "M_AROW";
  }
  return "?";
}

std::string to_string(const LearnerKind& kind) {
  return std::visit([](auto k) { return to_string(k); }, kind);
}

std::optional<LearnerKind> parse_learner_kind(std::string_view name) {
  const std::string key = lower(name);
  if (key == "scw") return BinaryKind::SCW1;
  if (key == "m_scw") return MulticlassKind::SCW1;
  for (auto k : kBinaryOrder) {
    if (lower(to_string(k)) == key) return k;
  }
  for (auto k : kMulticlassOrder) {
    if (lower(to_string(k)) == key) return k;
  }
  return std::nullopt;
}

std::span<const BinaryKind> all_binary_kinds() noexcept { return kBinaryOrder; }
std::span<const MulticlassKind> all_multiclass_kinds() noexcept { return kMulticlassOrder; }

}  // namespace mtwu
