#include <boost/math/distributions/chi_squared.hpp>
#include <gtest/gtest.h>

#include "support.hpp"
#include "wbpose/scheduler.hpp"

using namespace wbpose;

namespace {

void expect_kind(ErrorKind kind, const std::function<void()>& f) {
  try {
    f();
    FAIL() << "no throw";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

}  // namespace

TEST(Registry, DefaultIsValidAndSumsToOne) {
  const auto r = default_registry();
  EXPECT_NO_THROW(validate_registry(r));
  ASSERT_EQ(r.size(), 10u);
  double sum = 0;
  for (const auto& d : r) sum += d.probability;
  EXPECT_NEAR(sum, 1.0, 1e-12);
  EXPECT_NEAR(r[0].probability, 0.7651, 1e-12);
  EXPECT_DOUBLE_EQ(r[6].aug.scale_min, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(r[6].aug.scale_max, 4.5);
  EXPECT_DOUBLE_EQ(r[7].aug.scale_min, 0.5);
  EXPECT_DOUBLE_EQ(r[7].aug.scale_max, 4.0);
}

TEST(Registry, Validation) {
  expect_kind(ErrorKind::EmptyRegistry, [] { validate_registry({}); });
  auto r = default_registry();
  r[1].probability += 0.01;
  expect_kind(ErrorKind::InvalidRegistry, [&] { validate_registry(r); });
  r = default_registry();
  r[2].aug.scale_max = 0.1;
  expect_kind(ErrorKind::InvalidRegistry, [&] { validate_registry(r); });
}

TEST(Registry, JsonRoundTrip) {
  const auto r = default_registry();
  const auto back = registry_from_json(registry_to_json(r));
  EXPECT_EQ(registry_hash(back), registry_hash(r));
  ASSERT_EQ(back.size(), r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    EXPECT_EQ(back[i].name, r[i].name);
    EXPECT_EQ(back[i].coverage, r[i].coverage);
    EXPECT_EQ(back[i].probability, r[i].probability);
    EXPECT_EQ(back[i].special, r[i].special);
  }
  auto j = registry_to_json(r);
  j["datasets"][0]["coverage"] = {"tail"};
  expect_kind(ErrorKind::InvalidRegistry, [&] { registry_from_json(j); });
}

TEST(NextBatch, SingleDatasetAlwaysChosen) {
  Registry r = {{"only", 0, GroupSet{PartGroup::Body}, 1.0, {}, DatasetKind::Normal}};
  RngState st{42};
  for (int i = 0; i < 1000; ++i) {
    std::size_t idx;
    std::tie(idx, st) = next_batch(r, st);
    ASSERT_EQ(idx, 0u);
  }
}

TEST(NextBatch, ZeroProbabilityNeverChosen) {
  Registry r = {{"a", 0, {}, 0.0, {}, DatasetKind::Normal},
                {"b", 0, {}, 1.0, {}, DatasetKind::Normal},
                {"c", 0, {}, 0.0, {}, DatasetKind::Normal}};
  RngState st{1};
  for (int i = 0; i < 1000; ++i) {
    std::size_t idx;
    std::tie(idx, st) = next_batch(r, st);
    ASSERT_EQ(idx, 1u);
  }
}

TEST(NextBatch, DeterministicSequence) {
  const auto r = default_registry();
  RngState a{7}, b{7};
  for (int i = 0; i < 1000; ++i) {
    std::size_t ia, ib;
    std::tie(ia, a) = next_batch(r, a);
    std::tie(ib, b) = next_batch(r, b);
    ASSERT_EQ(ia, ib);
  }
  EXPECT_EQ(a, b);
}

TEST(NextBatch, FrequenciesPassChiSquare) {
  const auto r = default_registry();
  const int n = 50000;
  std::vector<int> counts(r.size(), 0);
  RngState st{2024};
  for (int i = 0; i < n; ++i) {
    std::size_t idx;
    std::tie(idx, st) = next_batch(r, st);
    ++counts[idx];
  }
  double stat = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double e = n * r[i].probability;
    stat += (counts[i] - e) * (counts[i] - e) / e;
  }
  boost::math::chi_squared dist(static_cast<double>(r.size() - 1));
  EXPECT_GT(boost::math::cdf(boost::math::complement(dist, stat)), 0.001);
}

TEST(Augmentation, DegenerateRangesGiveIdentity) {
  DatasetSpec d{"id", 0, GroupSet::all(), 1.0, {}, DatasetKind::Normal};
  d.aug.scale_min = d.aug.scale_max = 1.0;
  d.aug.rotation_deg = 0.0;
  d.aug.flip_prob = 0.0;
  RngState st{3};
  for (int i = 0; i < 200; ++i) {
    AugmentationDraw a;
    std::tie(a, st) = draw_augmentation(d, st);
    ASSERT_EQ(a.scale, 1.0);
    ASSERT_EQ(a.rotation_deg, 0.0);
    ASSERT_FALSE(a.flip);
  }
}

TEST(Augmentation, DrawsInRangeAndUniform) {
  const auto r = default_registry();
  for (const auto& d : r) {
    RngState st{99};
    std::vector<double> scales, rots;
    int flips = 0;
    for (int i = 0; i < 5000; ++i) {
      AugmentationDraw a;
      std::tie(a, st) = draw_augmentation(d, st);
      ASSERT_GE(a.scale, d.aug.scale_min);
      ASSERT_LE(a.scale, d.aug.scale_max);
      ASSERT_LE(std::abs(a.rotation_deg), d.aug.rotation_deg);
      scales.push_back(a.scale);
      rots.push_back(a.rotation_deg);
      flips += a.flip;
    }
    EXPECT_GT(wbtest::ks_uniform_p(scales, d.aug.scale_min, d.aug.scale_max), 0.001) << d.name;
    EXPECT_GT(wbtest::ks_uniform_p(rots, -d.aug.rotation_deg, d.aug.rotation_deg), 0.001);
    EXPECT_NEAR(flips / 5000.0, 0.5, 0.03);
  }
}

TEST(Augmentation, KsDetectsSkew) {
  std::vector<double> xs;
  for (int i = 0; i < 2000; ++i) xs.push_back(std::pow((i + 0.5) / 2000.0, 2));
  EXPECT_LT(wbtest::ks_uniform_p(xs, 0, 1), 1e-6);
}

TEST(CropOffset, InsideOrCentred) {
  AugmentationRanges a;
  AugmentationDraw d;
  d.crop_u = 0.0;
  d.crop_v = 0.999999;
  EXPECT_EQ(crop_offset(d, 600, 700, a), (std::pair<int, int>{0, 220}));
  EXPECT_EQ(crop_offset(d, 400, 480, a), (std::pair<int, int>{-40, 0}));
}

TEST(MaskPolicy, Cases) {
  const auto& topo = default_topology();
  const auto r = default_registry();
  const auto coco = mask_policy(r[0], topo);
  EXPECT_TRUE(coco.confidence[0]);
  EXPECT_FALSE(coco.confidence[19]);  // foot
  EXPECT_FALSE(coco.confidence[30]);  // face
  EXPECT_TRUE(coco.confidence.back());  // background
  const auto hand = mask_policy(r[7], topo);
  EXPECT_FALSE(hand.confidence[0]);
  EXPECT_TRUE(hand.confidence[100]);
  const auto none = mask_policy(r[9], topo);
  for (bool b : none.confidence) EXPECT_TRUE(b);
  for (bool b : none.paf) EXPECT_TRUE(b);
  const auto whole = mask_policy(r[8], topo);
  for (bool b : whole.paf) EXPECT_TRUE(b);
}

TEST(Plan, ReplayIsIdenticalAndBatchLocal) {
  const auto r = default_registry();
  const auto a = sample_plan(r, 5, 200, 4), b = sample_plan(r, 5, 200, 4);
  EXPECT_EQ(a, b);
  EXPECT_EQ(plan_batch(r, 5, 150, 4), a[150]);
  const auto c = sample_plan(r, 6, 200, 4);
  EXPECT_NE(a, c);
}
