#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "metrics_oracle.hpp"
#include "support.hpp"
#include "wbpose/metrics.hpp"
#include "wbpose/synth.hpp"

using namespace wbpose;

namespace {

Pose pose_of(std::initializer_list<std::pair<int, std::pair<double, double>>> parts, double score) {
  Pose p = pose_from_person(wbtest::person(parts));
  p.person_score = score;
  return p;
}

}  // namespace

TEST(Oks, PerfectAndMissing) {
  const auto& topo = wbtest::mini_topology();
  const Pose gt = pose_of({{0, {10, 10}}, {1, {20, 20}}}, 1);
  EXPECT_DOUBLE_EQ(oks(gt, gt, 100, topo, GroupSet::all()), 1.0);
  const Pose half = pose_of({{0, {10, 10}}}, 1);
  EXPECT_DOUBLE_EQ(oks(half, gt, 100, topo, GroupSet::all()), 0.5);
}

TEST(Oks, ZeroLabeledParts) {
  const auto& topo = wbtest::mini_topology();
  const Pose gt = pose_of({{4, {10, 10}}}, 1);
  try {
    oks(gt, gt, 100, topo, GroupSet{PartGroup::Body});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroLabeledParts);
  }
}

TEST(InterpolatedAp, Known) {
  EXPECT_DOUBLE_EQ(interpolated_ap({1.0}, {1.0}), 1.0);
  EXPECT_DOUBLE_EQ(interpolated_ap({1.0, 0.5}, {0.5, 0.5}), 51.0 / 101.0);
  EXPECT_DOUBLE_EQ(interpolated_ap({}, {}), 0.0);
}

TEST(Evaluate, TwoScenesOneSpurious) {
  const auto& topo = wbtest::mini_topology();
  const Pose a = pose_of({{0, {10, 10}}, {3, {10, 60}}}, 1);
  const Pose b = pose_of({{0, {100, 10}}, {3, {100, 60}}}, 1);
  const Pose c = pose_of({{0, {50, 10}}, {3, {50, 60}}}, 1);
  EvalScene s1{{pose_of({{0, {10, 10}}, {3, {10, 60}}}, 0.9), pose_of({{0, {300, 300}}}, 0.8)},
               {a, b}, {}};
  EvalScene s2{{pose_of({{0, {50, 10}}, {3, {50, 60}}}, 0.7)}, {c}, {}};
  const auto r = evaluate({s1, s2}, topo, GroupSet::all());
  // PR: (1, 1/3), (1/2, 1/3), (2/3, 2/3)
  EXPECT_NEAR(r.ap, (34.0 + 33.0 * 2.0 / 3.0) / 101.0, 1e-12);
  EXPECT_NEAR(r.ar, 2.0 / 3.0, 1e-12);
}

TEST(Evaluate, PerfectDetectionsEveryGroupSubset) {
  const auto& topo = default_topology();
  std::vector<EvalScene> scenes;
  for (int i = 0; i < 3; ++i) {
    SceneRecipe rec;
    rec.n_people = 3;
    rec.seed = 100 + i;
    const auto scene = generate(rec, topo);
    EvalScene es;
    for (const auto& p : scene.people) {
      es.groundtruth.push_back(pose_from_person(p));
      es.detections.push_back(pose_from_person(p));
      es.detections.back().person_score = 0.5 + 0.1 * es.detections.size();
    }
    scenes.push_back(es);
  }
  for (unsigned bits = 1; bits < 16; ++bits) {
    GroupSet g;
    for (auto grp : kAllGroups)
      if (bits & (1u << static_cast<unsigned>(grp))) g.insert(grp);
    const auto r = evaluate(scenes, topo, g);
    EXPECT_DOUBLE_EQ(r.ap, 1.0) << bits;
    EXPECT_DOUBLE_EQ(r.ar, 1.0) << bits;
  }
}

TEST(Evaluate, MatchesExhaustiveOracle) {
  const auto& topo = wbtest::mini_topology();
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const auto scenes = wbtest::random_eval_scenes(rng, 1 + trial % 3);
    for (GroupSet g : {GroupSet::all(), GroupSet{PartGroup::Body}, GroupSet{PartGroup::Hand}}) {
      const auto got = evaluate(scenes, topo, g);
      const auto want = wbtest::oracle_evaluate(scenes, topo, g);
      ASSERT_NEAR(got.ap, want.ap, 1e-12) << "trial " << trial;
      ASSERT_NEAR(got.ar, want.ar, 1e-12) << "trial " << trial;
    }
  }
}
