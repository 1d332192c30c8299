#include <gtest/gtest.h>

#include "wbpose/bench.hpp"

using namespace wbpose;

TEST(BenchStats, MedianAndP90) {
  EXPECT_EQ(detail::median_of({5, 1, 3}), 3);
  EXPECT_EQ(detail::median_of({4, 1, 3, 2}), 2);
  std::vector<std::int64_t> v;
  for (int i = 1; i <= 10; ++i) v.push_back(i);
  EXPECT_EQ(detail::p90_of(v), 9);
  v.push_back(11);
  EXPECT_EQ(detail::p90_of(v), 10);
}

TEST(Bench, RejectsTooFewRuns) {
  BenchConfig cfg;
  cfg.repetitions = 5;
  EXPECT_THROW(run_bench(cfg, default_topology()), Error);
  cfg.repetitions = 10;
  cfg.warmup = 1;
  EXPECT_THROW(run_bench(cfg, default_topology()), Error);
}

TEST(Bench, RecordsSortedAndPopulated) {
  BenchConfig cfg;
  cfg.people = {2, 1};
  cfg.maps = {{40, 40}, {30, 30}};
  const auto recs = run_bench(cfg, default_topology());
  ASSERT_EQ(recs.size(), 4u);
  EXPECT_EQ(recs[0].map_w, 30);
  EXPECT_EQ(recs[0].n_people, 1);
  EXPECT_EQ(recs[1].n_people, 2);
  EXPECT_EQ(recs[2].map_w, 40);
  for (const auto& r : recs) {
    EXPECT_EQ(r.repetitions, 10);
    EXPECT_GT(r.median_ns, 0);
    EXPECT_GE(r.p90_ns, r.median_ns);
    EXPECT_EQ(r.candidates, 135 * r.n_people);
    EXPECT_GT(r.connections, 0);
  }
}

TEST(BenchCsv, RoundTrip) {
  std::vector<BenchRecord> recs(2);
  recs[0] = {1, 60, 60, 1, 10, 1000, 1200, 135, 136};
  recs[1] = {20, 60, 60, 1, 10, 9000, 9900, 2700, 54400};
  const std::string csv = bench_csv(recs);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), kBenchCsvHeader);
  const auto back = parse_bench_csv(csv);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[1].median_ns, 9000);
  EXPECT_EQ(back[1].connections, 54400);
}

TEST(BenchCsv, MultiColumnAndErrors) {
  const std::string csv = std::string(kBenchCsvHeader) + ",multi_ns\n1,60,60,1,100,120,1,1,250.5\n";
  std::vector<double> multi;
  const auto recs = parse_bench_csv(csv, &multi);
  ASSERT_EQ(multi.size(), 1u);
  EXPECT_DOUBLE_EQ(multi[0], 250.5);
  EXPECT_EQ(recs[0].median_ns, 100);
  EXPECT_THROW(parse_bench_csv("a,b\n"), Error);
  EXPECT_THROW(parse_bench_csv(std::string(kBenchCsvHeader) + "\n1,2\n"), Error);
}
