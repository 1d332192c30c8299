#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "support.hpp"
#include "wbpose/loss.hpp"

using namespace wbpose;

namespace {

BasicTensor<double> random_tensor(int c, int h, int w, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  BasicTensor<double> t(c, h, w);
  for (auto& v : t.data()) v = u(rng);
  return t;
}

BasicTensor<double> random_mask(int c, int h, int w, std::mt19937_64& rng) {
  std::bernoulli_distribution b(0.6);
  BasicTensor<double> t(c, h, w);
  for (auto& v : t.data()) v = b(rng) ? 1.0 : 0.0;
  return t;
}

// Plain triple loop, no helpers.
double reference_loss(const BasicTensor<double>& p, const BasicTensor<double>& g,
                      const BasicTensor<double>& w) {
  double acc = 0.0;
  for (int c = 0; c < p.channels(); ++c)
    for (int y = 0; y < p.height(); ++y)
      for (int x = 0; x < p.width(); ++x) {
        const double d = p(c, y, x) - g(c, y, x);
        acc += w(c, y, x) * d * d;
      }
  return acc;
}

}  // namespace

TEST(MaskedL2, TwoByTwoExample) {
  Tensor pred(1, 2, 2, 0.5f), gt(1, 2, 2, 0.0f), mask(1, 2, 2, 1.0f);
  EXPECT_DOUBLE_EQ(masked_l2(pred, gt, mask), 1.0);
  mask(0, 0, 0) = 0.0f;
  EXPECT_DOUBLE_EQ(masked_l2(pred, gt, mask), 0.75);
}

TEST(MaskedL2, MatchesReference) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const auto p = random_tensor(3, 4, 5, rng), g = random_tensor(3, 4, 5, rng);
    const auto w = random_mask(3, 4, 5, rng);
    EXPECT_NEAR(masked_l2(p, g, w), reference_loss(p, g, w), 1e-12);
  }
}

TEST(MaskedL2, ShapeMismatch) {
  Tensor a(1, 2, 2), b(1, 2, 3);
  try {
    masked_l2(a, b, a);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ShapeMismatch);
  }
}

TEST(MaskedL2, PafComponentsGiveSquaredNorm) {
  Tensor p(2, 1, 1), g(2, 1, 1), w(2, 1, 1, 1.0f);
  p(0, 0, 0) = 3.0f;
  p(1, 0, 0) = 4.0f;
  EXPECT_DOUBLE_EQ(masked_l2(p, g, w), 25.0);
}

TEST(LossGradient, MatchesCentralDifferences) {
  std::mt19937_64 rng(9);
  const double h = 1e-4;
  for (int trial = 0; trial < 10; ++trial) {
    auto p = random_tensor(2, 3, 3, rng);
    const auto g = random_tensor(2, 3, 3, rng), w = random_mask(2, 3, 3, rng);
    const auto grad = loss_gradient(p, g, w);
    for (std::size_t i = 0; i < p.size(); ++i) {
      const double keep = p.data()[i];
      p.data()[i] = keep + h;
      const double up = masked_l2(p, g, w);
      p.data()[i] = keep - h;
      const double down = masked_l2(p, g, w);
      p.data()[i] = keep;
      const double fd = (up - down) / (2 * h);
      EXPECT_NEAR(grad.data()[i], fd, 1e-5 * std::max(1.0, std::abs(fd)));
    }
  }
}

TEST(MultitaskLoss, DoublingStagesDoublesTerms) {
  const auto& topo = wbtest::mini_topology();
  AnnotatedScene s;
  s.image_w = s.image_h = 64;
  s.coverage = GroupSet::all();
  s.people.push_back(wbtest::person({{0, {20, 20}}, {1, {40, 30}}, {4, {50, 40}}}));
  const auto t = as_targets(encode(s, topo));
  StagePredictions<float> one;
  one.paf_stages.emplace_back(t.l_star.channels(), t.l_star.height(), t.l_star.width(), 0.25f);
  one.cm_stages.emplace_back(t.s_star.channels(), t.s_star.height(), t.s_star.width(), 0.25f);
  StagePredictions<float> two = one;
  two.paf_stages.push_back(one.paf_stages[0]);
  two.cm_stages.push_back(one.cm_stages[0]);
  const auto a = multitask_loss(one, t, topo), b = multitask_loss(two, t, topo);
  ASSERT_EQ(b.f_L_per_stage.size(), 2u);
  EXPECT_DOUBLE_EQ(b.f_L_per_stage[0] + b.f_L_per_stage[1], 2 * a.f_L_per_stage[0]);
  EXPECT_DOUBLE_EQ(b.f_S_per_stage[0] + b.f_S_per_stage[1], 2 * a.f_S_per_stage[0]);
  EXPECT_DOUBLE_EQ(b.total, 2 * a.total);
}

TEST(MultitaskLoss, GroupsSumToTotal) {
  const auto& topo = wbtest::mini_topology();
  AnnotatedScene s;
  s.image_w = s.image_h = 64;
  s.coverage = GroupSet::all();
  s.people.push_back(wbtest::person({{0, {20, 20}}, {1, {40, 30}}, {4, {50, 40}}}));
  const auto t = as_targets(encode(s, topo));
  StagePredictions<float> p;
  p.paf_stages.emplace_back(t.l_star.channels(), t.l_star.height(), t.l_star.width(), 0.1f);
  p.cm_stages.emplace_back(t.s_star.channels(), t.s_star.height(), t.s_star.width(), 0.3f);
  const auto r = multitask_loss(p, t, topo);
  double sum = r.background;
  for (double v : r.per_group) sum += v;
  EXPECT_NEAR(sum, r.total, 1e-9 * r.total);
  EXPECT_EQ(r.per_group[static_cast<int>(PartGroup::Face)], 0.0);
  EXPECT_GT(r.per_group[static_cast<int>(PartGroup::Hand)], 0.0);
}

TEST(MultitaskLoss, ZeroStagesAndChannelMismatch) {
  const auto& topo = wbtest::mini_topology();
  BasicTargets<float> t{Tensor(8, 2, 2), Tensor(14, 2, 2), Tensor(8, 2, 2), Tensor(14, 2, 2)};
  StagePredictions<float> p;
  p.cm_stages.emplace_back(8, 2, 2);
  try {
    multitask_loss(p, t, topo);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::StageCountZero);
  }
  p.paf_stages.emplace_back(14, 2, 2);
  t.s_star = Tensor(9, 2, 2);
  try {
    multitask_loss(p, t, topo);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ChannelMismatch);
  }
}
