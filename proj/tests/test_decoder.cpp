#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "support.hpp"
#include "wbpose/decoder.hpp"
#include "wbpose/encoder.hpp"

using namespace wbpose;

namespace {

std::vector<float> gaussian_plane(int w, int h, std::vector<std::pair<double, double>> peaks,
                                  double sigma) {
  std::vector<float> out(static_cast<std::size_t>(w) * h, 0.0f);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      for (auto [px, py] : peaks) {
        const double d2 = (x - px) * (x - px) + (y - py) * (y - py);
        float& v = out[static_cast<std::size_t>(y) * w + x];
        v = std::max(v, static_cast<float>(std::exp(-d2 / (sigma * sigma))));
      }
  return out;
}

PartCandidate cand(int part, double x, double y, int id) { return {part, x, y, 1.0f, id}; }

ScoredConnection conn(int limb, int s, int d, double score) { return {limb, s, d, score, true}; }

}  // namespace

TEST(Nms, ZerosGiveNothing) {
  std::vector<float> plane(20 * 15, 0.0f);
  EXPECT_TRUE(nms(plane, 20, 15, 0.05f, 3).empty());
}

TEST(Nms, SinglePeakOnCell) {
  const auto plane = gaussian_plane(20, 15, {{10, 7}}, 1.0);
  const auto c = nms(plane, 20, 15, 0.05f, 3, 4);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].part_id, 4);
  EXPECT_NEAR(c[0].x, 10.0, 1e-9);
  EXPECT_NEAR(c[0].y, 7.0, 1e-9);
  EXPECT_FLOAT_EQ(c[0].score, 1.0f);
}

TEST(Nms, SubcellPeakRecovered) {
  const auto plane = gaussian_plane(20, 15, {{10.3, 6.8}}, 1.3);
  const auto c = nms(plane, 20, 15, 0.05f, 3);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_NEAR(c[0].x, 10.3, 1e-5);
  EXPECT_NEAR(c[0].y, 6.8, 1e-5);
}

TEST(Nms, TwoSeparatedPeaksRankedByScore) {
  auto plane = gaussian_plane(20, 15, {{4, 7}, {10, 7}}, 1.0);
  plane[7 * 20 + 4] = 0.8f;
  const auto c = nms(plane, 20, 15, 0.05f, 3);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_NEAR(c[0].x, 10.0, 1e-9);
  EXPECT_EQ(c[0].candidate_id, 0);
  EXPECT_EQ(c[1].candidate_id, 1);
  EXPECT_LT(c[1].score, c[0].score);
}

TEST(Nms, PlateauIsNotAPeak) {
  std::vector<float> plane(5 * 5, 0.0f);
  plane[2 * 5 + 2] = plane[2 * 5 + 3] = 0.7f;
  EXPECT_TRUE(nms(plane, 5, 5, 0.05f, 3).empty());
}

TEST(Nms, BadWindowAndShape) {
  std::vector<float> plane(9, 0.0f);
  for (int w : {1, 2, 4}) {
    try {
      nms(plane, 3, 3, 0.1f, w);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::InvalidFormat);
    }
  }
  try {
    nms(plane, 4, 3, 0.1f, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ShapeMismatch);
  }
}

TEST(Nms, CandidateCountMonotoneInThreshold) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<float> u(0.0f, 1.0f);
  std::vector<float> plane(30 * 30);
  for (auto& v : plane) v = u(rng);
  std::size_t prev = plane.size();
  for (float t : {0.0f, 0.2f, 0.4f, 0.6f, 0.8f, 0.95f}) {
    const auto n = nms(plane, 30, 30, t, 3).size();
    EXPECT_LE(n, prev);
    prev = n;
  }
}

class ScoreTest : public ::testing::Test {
 protected:
  const SkeletonTopology& topo = wbtest::mini_topology();
  Tensor paf{14, 20, 20, 0.0f};
  DecoderParams params;
};

TEST_F(ScoreTest, AlignedFieldScoresOne) {
  for (int x = 0; x < 20; ++x) paf(0, 5, x) = 1.0f;
  const auto sc = score_connection(paf, topo.limb(0), cand(0, 2, 5, 0), cand(1, 15, 5, 0), params);
  EXPECT_TRUE(sc.valid);
  EXPECT_DOUBLE_EQ(sc.paf_score, 1.0);
}

TEST_F(ScoreTest, PerpendicularFieldScoresZero) {
  for (int x = 0; x < 20; ++x) paf(1, 5, x) = 1.0f;
  const auto sc = score_connection(paf, topo.limb(0), cand(0, 2, 5, 0), cand(1, 15, 5, 0), params);
  EXPECT_FALSE(sc.valid);
  EXPECT_DOUBLE_EQ(sc.paf_score, 0.0);
}

TEST_F(ScoreTest, TruePairOutranksCrossPairs) {
  AnnotatedScene s;
  s.image_w = s.image_h = 160;
  s.coverage = GroupSet::all();
  s.people.push_back(wbtest::person({{0, {24, 40}}, {1, {120, 40}}}));
  s.people.push_back(wbtest::person({{0, {24, 120}}, {1, {120, 120}}}));
  const Tensor l = encode_paf(s, topo, {});
  const auto a0 = cand(0, 3, 5, 0), a1 = cand(0, 3, 15, 1);
  const auto b0 = cand(1, 15, 5, 0), b1 = cand(1, 15, 15, 1);
  const double t0 = score_connection(l, topo.limb(0), a0, b0, params).paf_score;
  const double t1 = score_connection(l, topo.limb(0), a1, b1, params).paf_score;
  const auto x0 = score_connection(l, topo.limb(0), a0, b1, params);
  const auto x1 = score_connection(l, topo.limb(0), a1, b0, params);
  EXPECT_GT(std::min(t0, t1), std::max(x0.paf_score, x1.paf_score));
  EXPECT_FALSE(x0.valid);
  EXPECT_FALSE(x1.valid);
}

TEST_F(ScoreTest, EndpointsMustMatchLimb) {
  try {
    score_connection(paf, topo.limb(0), cand(2, 0, 0, 0), cand(1, 5, 5, 0), params);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ChannelMismatch);
  }
}

TEST_F(ScoreTest, EarlyExitAgreesOnValidity) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<float> u(-0.2f, 1.0f);
  std::uniform_real_distribution<double> pos(0.0, 19.0);
  for (int trial = 0; trial < 500; ++trial) {
    for (auto& v : paf.data()) v = u(rng);
    for (int n : {2, 7, 10, 40}) {
      params.n_samples = n;
      const auto s = cand(0, pos(rng), pos(rng), 0), d = cand(1, pos(rng), pos(rng), 0);
      const auto full = detail::integrate_paf(paf, topo.limb(0), s, d, params, false);
      const auto fast = detail::integrate_paf(paf, topo.limb(0), s, d, params, true);
      ASSERT_EQ(full.valid, fast.valid);
      if (full.valid) {
        ASSERT_EQ(full.paf_score, fast.paf_score);
      }
    }
  }
}

TEST_F(ScoreTest, SamplesAtCellsOutsideMapCountZero) {
  for (auto& v : paf.plane(0)) v = 1.0f;
  // half of the segment lies beyond the right edge
  const auto sc = score_connection(paf, topo.limb(0), cand(0, 10, 5, 0), cand(1, 28.9, 5, 0), params);
  EXPECT_FALSE(sc.valid);
  EXPECT_GT(sc.paf_score, 0.0);
  EXPECT_LT(sc.paf_score, 1.0);
}

TEST(MatchLimb, GreedyTakesStrongestFirst) {
  const auto out = match_limb({conn(0, 0, 0, 0.9), conn(0, 1, 0, 0.4), conn(0, 1, 1, 0.3)});
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].src_candidate_id, 0);
  EXPECT_EQ(out[0].dst_candidate_id, 0);
  EXPECT_EQ(out[1].src_candidate_id, 1);
  EXPECT_EQ(out[1].dst_candidate_id, 1);
}

TEST(MatchLimb, InvalidConnectionsDropped) {
  auto c = conn(0, 0, 0, 0.9);
  c.valid = false;
  EXPECT_TRUE(match_limb({c}).empty());
}

TEST(MatchLimb, RandomAgainstSweepOracle) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> level(0, 6);  // coarse levels force ties
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<ScoredConnection> all;
    double score[4][4];
    for (int s = 0; s < 4; ++s)
      for (int d = 0; d < 4; ++d) {
        score[s][d] = level(rng) / 6.0;
        all.push_back(conn(0, s, d, score[s][d]));
      }
    std::shuffle(all.begin(), all.end(), rng);
    // Sweep: repeatedly take the best free pair, scanning src then dst.
    std::vector<std::pair<int, int>> expect;
    bool used_s[4] = {}, used_d[4] = {};
    for (;;) {
      int bs = -1, bd = -1;
      for (int s = 0; s < 4; ++s)
        for (int d = 0; d < 4; ++d)
          if (!used_s[s] && !used_d[d] && (bs < 0 || score[s][d] > score[bs][bd])) bs = s, bd = d;
      if (bs < 0) break;
      used_s[bs] = used_d[bd] = true;
      expect.emplace_back(bs, bd);
    }
    const auto got = match_limb(all);
    ASSERT_EQ(got.size(), expect.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      EXPECT_EQ(got[i].src_candidate_id, expect[i].first);
      EXPECT_EQ(got[i].dst_candidate_id, expect[i].second);
    }
  }
}

class AssembleTest : public ::testing::Test {
 protected:
  const SkeletonTopology& topo = wbtest::mini_topology();
  DecoderParams params;
  // 0 neck, 1 r_wrist, 2 hip, 3 r_hand_a, 4 r_hand_b, 5 a second r_wrist
  std::vector<PartCandidate> cands = {cand(0, 5, 2, 0), cand(1, 3, 5, 1), cand(3, 5, 8, 2),
                                      cand(4, 2, 6, 3), cand(5, 1, 7, 4), cand(1, 3.2, 5.1, 5)};
  void SetUp() override {
    params.min_parts = 1;
    params.min_score = 0.0;
  }
};

TEST_F(AssembleTest, SharedWristMergesBodyAndHand) {
  const std::vector<ScoredConnection> acc = {conn(0, 0, 1, 0.9), conn(2, 0, 2, 0.9),
                                             conn(3, 1, 3, 0.8), conn(4, 3, 4, 0.8)};
  const auto poses = assemble(cands, acc, topo, params, 8);
  ASSERT_EQ(poses.size(), 1u);
  EXPECT_EQ(poses[0].parts.size(), 5u);
  EXPECT_EQ(poses[0].parts.at(1).candidate_id, 1);
  EXPECT_DOUBLE_EQ(poses[0].parts.at(0).x, 40.0);
}

TEST_F(AssembleTest, DistinctWristsStayApart) {
  const std::vector<ScoredConnection> acc = {conn(0, 0, 1, 0.9), conn(2, 0, 2, 0.9),
                                             conn(3, 5, 3, 0.8), conn(4, 3, 4, 0.8)};
  const auto poses = assemble(cands, acc, topo, params, 8);
  ASSERT_EQ(poses.size(), 2u);
  EXPECT_EQ(poses[0].parts.size(), 3u);
  EXPECT_EQ(poses[1].parts.size(), 3u);
  EXPECT_EQ(poses[0].parts.at(1).candidate_id, 1);
  EXPECT_EQ(poses[1].parts.at(1).candidate_id, 5);
}

TEST_F(AssembleTest, MinPartsFilters) {
  params.min_parts = 4;
  const std::vector<ScoredConnection> acc = {conn(0, 0, 1, 0.9), conn(2, 0, 2, 0.9)};
  EXPECT_TRUE(assemble(cands, acc, topo, params, 8).empty());
}

TEST(Decode, TwoPeopleRoundTrip) {
  const auto& topo = wbtest::mini_topology();
  AnnotatedScene s;
  s.image_w = s.image_h = 240;
  s.coverage = GroupSet::all();
  s.people.push_back(wbtest::person({{0, {40, 40}}, {1, {24, 80}}, {2, {64, 80}}, {3, {40, 120},},
                                     {4, {16, 120}}, {5, {8, 160}}, {6, {72, 120}}, {7, {80, 160}}}));
  s.people.push_back(wbtest::person({{0, {160, 40}}, {1, {136, 80}}, {2, {184, 80}}, {3, {160, 120}},
                                     {4, {136, 120}}, {5, {128, 160}}, {6, {192, 120}}, {7, {200, 160}}}));
  const auto t = encode(s, topo);
  DecodeStats stats;
  const auto poses = decode(t, topo, {}, &stats);
  ASSERT_EQ(poses.size(), 2u);
  EXPECT_EQ(stats.candidates, 16);
  for (const auto& p : poses) {
    ASSERT_EQ(p.parts.size(), 8u);
    const auto& truth = p.parts.at(0).x < 100 ? s.people[0] : s.people[1];
    for (const auto& [id, kp] : p.parts) {
      EXPECT_NEAR(kp.x, truth.parts.at(id).x, 1e-3);
      EXPECT_NEAR(kp.y, truth.parts.at(id).y, 1e-3);
    }
  }
  const auto again = decode(t, topo);
  ASSERT_EQ(again.size(), poses.size());
  for (std::size_t i = 0; i < poses.size(); ++i) {
    EXPECT_EQ(again[i].person_score, poses[i].person_score);
    for (const auto& [id, kp] : poses[i].parts) EXPECT_EQ(again[i].parts.at(id).x, kp.x);
  }
}

TEST(Decode, ThreadCountDoesNotChangeOutput) {
  const auto& topo = wbtest::mini_topology();
  AnnotatedScene s;
  s.image_w = s.image_h = 160;
  s.coverage = GroupSet::all();
  s.people.push_back(wbtest::person({{0, {40, 24}}, {1, {16, 64}}, {2, {64, 64}}, {3, {40, 96}}}));
  const auto t = encode(s, topo);
  DecoderParams p1, p4;
  p4.threads = 4;
  const auto a = decode(t, topo, p1), b = decode(t, topo, p4);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].person_score, b[i].person_score);
}

TEST(Decode, ChannelMismatch) {
  const auto& topo = wbtest::mini_topology();
  try {
    decode(Tensor(7, 4, 4), Tensor(14, 4, 4), topo, {}, 8);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ChannelMismatch);
  }
}
