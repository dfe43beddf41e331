#include <cmath>
#include <random>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "mtwu/first_order.hpp"
#include "mtwu/loss.hpp"
#include "mtwu/multiclass.hpp"
#include "support.hpp"

using namespace mtwu;

namespace {

std::size_t random_class(std::mt19937_64& rng, std::size_t k) { return rng() % k; }

}  // namespace

TEST(PredictMulticlass, Examples) {
  MulticlassState s(MulticlassKind::PA, 2, 2, {});
  auto p = predict_multiclass(s, SparseVector::of({{0, 1.0}}));
  EXPECT_EQ(p.predicted, 0u);
  EXPECT_EQ(p.scores, Eigen::VectorXd::Zero(2));

  s.W << 1, 0, 0, 1;
  p = predict_multiclass(s, SparseVector::of({{1, 2.0}}));
  EXPECT_EQ(p.scores[0], 0.0);
  EXPECT_EQ(p.scores[1], 2.0);
  EXPECT_EQ(p.predicted, 1u);

  MulticlassState t(MulticlassKind::PA, 1, 3, {});
  t.W << 5, 5, 1;
  EXPECT_EQ(predict_multiclass(t, SparseVector::of({{0, 1.0}})).predicted, 0u);
}

TEST(TopRival, LowestIndexOnTies) {
  Eigen::VectorXd s(4);
  s << 1, 3, 3, 0;
  EXPECT_EQ(top_rival(s, 0), 1u);
  EXPECT_EQ(top_rival(s, 1), 2u);
  s << 0, 0, 0, 0;
  EXPECT_EQ(top_rival(s, 0), 1u);
  EXPECT_EQ(top_rival(s, 2), 0u);
}

TEST(UpdateMulticlass, PaExample) {
  MulticlassState s(MulticlassKind::PA, 1, 3, {});
  auto x = SparseVector::of({{0, 1.0}});
  auto info = update_multiclass(MulticlassKind::PA, s, x, ClassLabel(2, 3), {});
  EXPECT_TRUE(info.triggered);
  EXPECT_EQ(info.loss, 1.0);
  EXPECT_EQ(info.tau, 0.5);
  EXPECT_EQ(s.W(2, 0), 0.5);
  EXPECT_EQ(s.W(0, 0), -0.5);
  EXPECT_EQ(s.W(1, 0), 0.0);
  const auto p = predict_multiclass(s, x);
  EXPECT_DOUBLE_EQ(p.scores[2] - p.scores[0], 1.0);  // margin against the rival that was updated
}

TEST(UpdateMulticlass, PerceptronMPassiveWhenCorrect) {
  MulticlassState s(MulticlassKind::PerceptronM, 2, 3, {});
  s.W(1, 0) = 2.0;
  const Eigen::MatrixXd before = s.W;
  auto info = update_multiclass(MulticlassKind::PerceptronM, s, SparseVector::of({{0, 1.0}}),
                                ClassLabel(1, 3), {});
  EXPECT_FALSE(info.triggered);
  EXPECT_EQ(s.W, before);
}

TEST(UpdateMulticlass, PerceptronUSplitsUniformly) {
  MulticlassState s(MulticlassKind::PerceptronU, 1, 4, {});
  update_multiclass(MulticlassKind::PerceptronU, s, SparseVector::of({{0, 1.0}}), ClassLabel(1, 4), {});
  EXPECT_DOUBLE_EQ(s.W(1, 0), 1.0);
  for (int c : {0, 2, 3}) EXPECT_DOUBLE_EQ(s.W(c, 0), -1.0 / 3.0);
}

TEST(UpdateMulticlass, PerceptronSOnlyStrictViolators) {
  MulticlassState s(MulticlassKind::PerceptronS, 1, 4, {});
  s.W << 2, 0, 2, 0;  // y = 1 scores 0; classes 0 and 2 are strictly higher, 3 ties
  update_multiclass(MulticlassKind::PerceptronS, s, SparseVector::of({{0, 1.0}}), ClassLabel(1, 4), {});
  EXPECT_DOUBLE_EQ(s.W(0, 0), 1.5);
  EXPECT_DOUBLE_EQ(s.W(2, 0), 1.5);
  EXPECT_DOUBLE_EQ(s.W(3, 0), 0.0);
  EXPECT_DOUBLE_EQ(s.W(1, 0), 1.0);
}

TEST(UpdateMulticlass, LabelSpaceMismatch) {
  MulticlassState s(MulticlassKind::PA, 2, 3, {});
  EXPECT_THROW(update_multiclass(MulticlassKind::PA, s, SparseVector::of({{0, 1.0}}), ClassLabel(1, 4), {}),
               InvalidArgument);
}

TEST(MulticlassProperties, RowSumConservation) {
  std::mt19937_64 rng(1);
  const std::size_t K = 5, d = 8;
  for (MulticlassKind k : {MulticlassKind::PA, MulticlassKind::PA1, MulticlassKind::PA2,
                           MulticlassKind::PerceptronM, MulticlassKind::PerceptronU,
                           MulticlassKind::PerceptronS}) {
    MulticlassState s(k, d, K, {});
    for (int i = 0; i < 1000; ++i) {
      auto x = fixtures::random_instance(rng, d);
      const Eigen::VectorXd before = predict_multiclass(s, x).scores;
      update_multiclass(k, s, x, ClassLabel(random_class(rng, K), K), {});
      const Eigen::VectorXd after = predict_multiclass(s, x).scores;
      EXPECT_NEAR((after - before).sum(), 0.0, 1e-12) << to_string(k);
    }
    EXPECT_LT(s.W.colwise().sum().cwiseAbs().maxCoeff(), 1e-9) << to_string(k);
  }
}

TEST(MulticlassProperties, PaPostUpdateMarginIsOne) {
  std::mt19937_64 rng(2);
  const std::size_t K = 4, d = 6;
  MulticlassState s(MulticlassKind::PA, d, K, {});
  for (int i = 0; i < 1000; ++i) {
    auto x = fixtures::random_instance(rng, d);
    const std::size_t y = random_class(rng, K);
    const std::size_t r = top_rival(predict_multiclass(s, x).scores, y);
    auto info = update_multiclass(MulticlassKind::PA, s, x, ClassLabel(y, K), {});
    if (!info.triggered) continue;
    const auto sc = predict_multiclass(s, x).scores;
    EXPECT_NEAR(sc[y] - sc[r], 1.0, 1e-9);
  }
}

TEST(MulticlassProperties, ArgmaxInvariantUnderRowShift) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 500; ++trial) {
    MulticlassState s(MulticlassKind::PA, 7, 5, {});
    for (auto& v : s.W.reshaped()) v = g(rng);
    auto x = fixtures::random_instance(rng, 7);
    const auto before = predict_multiclass(s, x).predicted;
    Eigen::RowVectorXd shift(7);
    for (auto& v : shift) v = g(rng);
    s.W.rowwise() += shift;
    EXPECT_EQ(predict_multiclass(s, x).predicted, before);
  }
}

TEST(MulticlassProperties, TwoClassPaMatchesBinaryPa) {
  std::mt19937_64 rng(4);
  const std::size_t d = 6;
  MulticlassState mc(MulticlassKind::PA, d, 2, {});
  FirstOrderState bin(d);
  for (int i = 0; i < 1000; ++i) {
    auto x = fixtures::random_instance(rng, d);
    const std::size_t c = random_class(rng, 2);
    const BinaryLabel y(c == 1 ? 1 : -1);
    const double score = predict_linear({bin.w.data(), d}, x);
    auto mi = update_multiclass(MulticlassKind::PA, mc, x, ClassLabel(c, 2), {});
    auto bi = update_first_order(BinaryKind::PA, bin, x, y, {});
    EXPECT_EQ(mi.triggered, bi.triggered);
    if (score != 0.0) EXPECT_EQ(mi.mistake, bi.mistake);
    const Eigen::VectorXd diff = (mc.W.row(1) - mc.W.row(0)).transpose();
    EXPECT_LT((diff - bin.w).norm(), 1e-9 * (1.0 + bin.w.norm()));
    EXPECT_LT((mc.W.row(1) + mc.W.row(0)).norm(), 1e-12);
  }
}

TEST(MulticlassProperties, SecondOrderCovariancesStayPd) {
  std::mt19937_64 rng(5);
  const std::size_t K = 4, d = 10;
  for (MulticlassKind k : {MulticlassKind::CW, MulticlassKind::SCW1, MulticlassKind::SCW2,
                           MulticlassKind::AROW}) {
    for (CovarianceMode mode : {CovarianceMode::Full, CovarianceMode::Diagonal}) {
      HyperParams hp;
      hp.covariance = mode;
      MulticlassState s(k, d, K, hp);
      EXPECT_EQ(s.sigma.size(), mode == CovarianceMode::Full ? 1u : K);
      for (int i = 0; i < 1000; ++i) {
        update_multiclass(k, s, fixtures::random_instance(rng, d), ClassLabel(random_class(rng, K), K), hp);
      }
      for (const auto& c : s.sigma) {
        EXPECT_TRUE(c.is_symmetric(1e-12));
        EXPECT_TRUE(c.is_positive_definite()) << to_string(k);
      }
    }
  }
}

TEST(MulticlassProperties, ReportedDeltaMatchesFrobeniusChange) {
  std::mt19937_64 rng(6);
  const std::size_t K = 3, d = 5;
  for (auto k : all_multiclass_kinds()) {
    MulticlassState s(k, d, K, {});
    for (int i = 0; i < 300; ++i) {
      ++s.t;
      const Eigen::MatrixXd before = s.W;
      auto info = update_multiclass(k, s, fixtures::random_instance(rng, d),
                                    ClassLabel(random_class(rng, K), K), {});
      const double actual = (s.W - before).squaredNorm();
      EXPECT_NEAR(info.delta_sq_norm, actual, 1e-12 * std::max(1.0, actual)) << to_string(k);
    }
  }
}

TEST(MulticlassProperties, MistakeDrivenKinds) {
  std::mt19937_64 rng(7);
  const std::size_t K = 4, d = 5;
  for (MulticlassKind k : {MulticlassKind::PerceptronM, MulticlassKind::PerceptronU,
                           MulticlassKind::PerceptronS, MulticlassKind::ROMMA}) {
    MulticlassState s(k, d, K, {});
    for (int i = 0; i < 500; ++i) {
      auto x = fixtures::random_instance(rng, d);
      const std::size_t y = random_class(rng, K);
      const bool wrong = predict_multiclass(s, x).predicted != y;
      auto info = update_multiclass(k, s, x, ClassLabel(y, K), {});
      if (info.triggered) EXPECT_TRUE(wrong || k == MulticlassKind::ROMMA) << to_string(k);
      if (wrong && k != MulticlassKind::ROMMA) EXPECT_TRUE(info.triggered);
    }
  }
}
