#include <gtest/gtest.h>

#include "wbpose/archmodel.hpp"
#include "wbpose/skeleton.hpp"

using namespace wbpose;

TEST(ParseConfig, SingleWidth) {
  const auto s = parse_config("1s, 10b, 256w");
  EXPECT_EQ(s.stages, 1);
  EXPECT_EQ(s.blocks, 10);
  EXPECT_EQ(s.widths, std::vector<int>{256});
}

TEST(ParseConfig, RangeInterpolates) {
  EXPECT_EQ(parse_config("3s, 8b, 96-256w").widths, (std::vector<int>{96, 176, 256}));
  EXPECT_EQ(parse_config("2s,8b,128-288w").widths, (std::vector<int>{128, 288}));
  EXPECT_EQ(parse_config(" 4s , 8b , 96-256w ").widths, (std::vector<int>{96, 149, 203, 256}));
}

TEST(ParseConfig, ExplicitList) {
  EXPECT_EQ(parse_config("3s, 2b, 64:80:96w").widths, (std::vector<int>{64, 80, 96}));
}

TEST(ParseConfig, Malformed) {
  for (const char* bad : {"0s, 1b, 64w", "1s, 0b, 64w", "1s 10b 256w", "s, 1b, 64w", "2s, 1b, 1:2:3w",
                          "1s, 1b, w", ""}) {
    try {
      parse_config(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::MalformedSpec) << bad;
    }
  }
}

TEST(ConvMacs, KnownValue) {
  const ConvLayer l{3, 1, 2, 4, false};
  EXPECT_EQ(conv_macs(l, 10, 10), 7200);
  const ConvLayer doubled{3, 1, 4, 8, false};
  EXPECT_EQ(conv_macs(doubled, 10, 10), 4 * 7200);
  EXPECT_EQ(conv_macs({2, 2, 8, 8, true}, 10, 10), 0);
}

TEST(StageGraph, DoublingWidthsQuadruplesInnerMacs) {
  const ChannelCounts cc{10, 20};
  StageGraph a = build_stage_graph(parse_config("1s, 3b, 64w"), parse_config("1s, 3b, 64w"), cc);
  StageGraph b = build_stage_graph(parse_config("1s, 3b, 128w"), parse_config("1s, 3b, 128w"), cc);
  const auto la = a.paf_stages[0].layers(), lb = b.paf_stages[0].layers();
  // inner block 2 -> 3 maps widths to widths
  EXPECT_EQ(conv_macs(lb[1], 60, 60), 4 * conv_macs(la[1], 60, 60));
}

TEST(StageGraph, TableConfigsSatisfyChannelRules) {
  const ChannelCounts cc = channel_counts(default_topology());
  ASSERT_EQ(table_configs().size(), 6u);
  for (const auto& [paf, cm] : table_configs()) {
    const auto ps = parse_config(paf), cs = parse_config(cm);
    const auto g = build_stage_graph(ps, cs, cc);
    EXPECT_FALSE(check_channel_arithmetic(g).has_value()) << paf;
    EXPECT_EQ(g.backbone_stride(), 8);
    ASSERT_EQ(static_cast<int>(g.paf_stages.size()), ps.stages);
    for (std::size_t t = 0; t < g.paf_stages.size(); ++t) {
      EXPECT_EQ(g.paf_stages[t].input_channels, 128 + (t ? cc.paf_channels : 0));
      EXPECT_EQ(g.paf_stages[t].output_channels, cc.paf_channels);
    }
    EXPECT_EQ(g.cm_stages[0].input_channels, 128 + cc.paf_channels);
    EXPECT_EQ(g.cm_stages.back().output_channels, cc.confidence_channels);
  }
}

TEST(StageGraph, BrokenArithmeticReported) {
  const ChannelCounts cc{10, 20};
  auto g = build_stage_graph(parse_config("2s, 1b, 64w"), parse_config("1s, 1b, 64w"), cc);
  g.paf_stages[1].input_channels = 128;
  EXPECT_TRUE(check_channel_arithmetic(g).has_value());
}

TEST(ReceptiveField, ToyStack) {
  StageGraph g;
  StageConfig s;
  s.blocks = 3;
  s.widths = {8, 8, 8};
  s.input_channels = 3;
  s.output_channels = 2;
  g.paf_stages.push_back(s);
  EXPECT_EQ(receptive_field(g), 7);
}

TEST(ReceptiveField, GrowsWithBlocks) {
  const ChannelCounts cc{10, 20};
  int prev = 0;
  for (int b = 1; b <= 12; ++b) {
    const std::string spec = "2s, " + std::to_string(b) + "b, 64w";
    const int rf = receptive_field(build_stage_graph(parse_config(spec), parse_config(spec), cc));
    EXPECT_GT(rf, prev);
    prev = rf;
  }
}

TEST(CostEstimate, StagesRunAtOutputResolution) {
  const ChannelCounts cc{10, 20};
  const auto g = build_stage_graph(parse_config("1s, 1b, 16w"), parse_config("1s, 1b, 16w"), cc, 480);
  const auto c = cost_estimate(g);
  // 3x3 128->16 then 1x1 16->20 on 60x60
  EXPECT_EQ(c.paf_stage_macs[0], 9LL * 128 * 16 * 3600 + 16LL * 20 * 3600);
  EXPECT_EQ(c.macs, c.backbone_macs + c.paf_stage_macs[0] + c.cm_stage_macs[0]);
  EXPECT_GT(c.params, 0);
}

TEST(RuntimeModel, Examples) {
  RuntimeModel m;
  m.visibility = 0.6;
  EXPECT_DOUBLE_EQ(runtime_ratio(m, 10), 7.0);
  m.t_face = m.t_hand = 0.0;
  for (int n : {0, 1, 5, 20}) EXPECT_DOUBLE_EQ(runtime_ratio(m, n), 1.0);
  m = RuntimeModel{};
  for (int n : {0, 1, 5, 20}) EXPECT_DOUBLE_EQ(runtime_ratio(m, n), 1.0 + n);
  m.t_single = 0;
  EXPECT_THROW(runtime_ratio(m, 1), Error);
}

TEST(RuntimeFit, AffineRecovered) {
  std::vector<std::pair<double, double>> single, multi;
  for (int n = 1; n <= 20; ++n) {
    single.emplace_back(n, 10.0);
    multi.emplace_back(n, 8.0 + 3.0 * n);
  }
  const auto f = fit_runtime(single, multi, 0.5, 1.0);
  ASSERT_TRUE(f.multi.has_value());
  EXPECT_NEAR(f.multi->intercept, 8.0, 1e-9);
  EXPECT_NEAR(f.multi->slope, 3.0, 1e-9);
  EXPECT_NEAR(f.model.t_single, 10.0, 1e-12);
  EXPECT_NEAR(f.model.t_face + f.model.t_hand, 6.0, 1e-9);
  EXPECT_NEAR(runtime_ratio(f.model, 4), (8.0 + 12.0) / 10.0, 1e-9);
  const auto modeled = fit_runtime(single, {}, 1.0, 1.0);
  EXPECT_FALSE(modeled.multi.has_value());
  EXPECT_NEAR(runtime_ratio(modeled.model, 3), 4.0, 1e-12);
}
