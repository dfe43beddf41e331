#include "mtwu/learner.hpp"

#include "mtwu/error.hpp"
#include "mtwu/loss.hpp"

namespace mtwu {
namespace {

LearnerState make_state(const LearnerKind& kind, std::size_t d, const HyperParams& hp,
                        std::size_t num_classes) {
  if (d == 0) throw InvalidArgument("learner dimension must be >= 1");
  if (const auto* mk = std::get_if<MulticlassKind>(&kind)) {
    return MulticlassState(*mk, d, num_classes, hp);
  }
  const auto bk = std::get<BinaryKind>(kind);
  if (is_first_order(bk)) return FirstOrderState(d);
  return SecondOrderState(bk, d, hp);
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

Learner::Learner(LearnerKind kind, std::size_t d, const HyperParams& hp, std::size_t num_classes)
    : kind_(kind),
      hp_((hp.validate(), hp)),
      dim_(d),
      num_classes_(is_multiclass(kind) ? num_classes : 2),
      state_(make_state(kind, d, hp, num_classes)) {}

void Learner::begin_instance() {
  std::visit([](auto& s) { ++s.t; }, state_);
}

UpdateInfo Learner::step(const SparseVector& x, int label) {
  return std::visit(
      overloaded{
          [&](FirstOrderState& s) {
            return update_first_order(std::get<BinaryKind>(kind_), s, x, BinaryLabel(label), hp_);
          },
          [&](SecondOrderState& s) {
            return update_second_order(std::get<BinaryKind>(kind_), s, x, BinaryLabel(label), hp_);
          },
          [&](MulticlassState& s) {
            if (label < 0) throw InvalidArgument("class label must be non-negative");
            return update_multiclass(std::get<MulticlassKind>(kind_), s, x,
                                     ClassLabel(static_cast<std::size_t>(label), num_classes_), hp_);
          },
      },
      state_);
}

bool Learner::mistaken(const SparseVector& x, int label) const {
  if (const auto* mc = std::get_if<MulticlassState>(&state_)) {
    return predict_multiclass(*mc, x).predicted != static_cast<std::size_t>(label);
  }
  const auto& w = binary_weights(state_);
  return is_mistake(BinaryLabel(label), predict_linear({w.data(), static_cast<std::size_t>(w.size())}, x));
}

double Learner::weight_norm() const {
  if (const auto* mc = std::get_if<MulticlassState>(&state_)) return mc->W.norm();
  return binary_weights(state_).norm();
}

const Eigen::VectorXd& binary_weights(const LearnerState& state) {
  if (const auto* fo = std::get_if<FirstOrderState>(&state)) return fo->w;
  if (const auto* so = std::get_if<SecondOrderState>(&state)) return so->mu;
  throw InvalidArgument("multiclass state has no single weight vector");
}

}  // namespace mtwu
