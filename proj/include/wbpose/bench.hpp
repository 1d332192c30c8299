#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "wbpose/decoder.hpp"
#include "wbpose/encoder.hpp"
#include "wbpose/synth.hpp"

namespace wbpose {

struct BenchConfig {
  std::vector<int> people = {1, 5, 10, 20};
  std::vector<std::pair<int, int>> maps = {{60, 60}};
  int warmup = 3;
  int repetitions = 10;
  SceneRecipe recipe = [] {
    SceneRecipe r;
    r.scale_min = 50.0;
    r.scale_max = 70.0;
    r.min_separation = 8.0;
    return r;
  }();
  EncoderParams encoder;
  DecoderParams decoder;
};

struct BenchRecord {
  int n_people = 0;
  int map_w = 0;
  int map_h = 0;
  int threads = 1;
  int repetitions = 0;
  std::int64_t median_ns = 0;
  std::int64_t p90_ns = 0;
  int candidates = 0;
  std::int64_t connections = 0;
  std::int64_t nms_median_ns = 0;
  std::int64_t score_median_ns = 0;
  std::int64_t assemble_median_ns = 0;
};

namespace detail {

inline std::int64_t median_of(std::vector<std::int64_t> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

inline std::int64_t p90_of(std::vector<std::int64_t> v) {
  std::sort(v.begin(), v.end());
  const auto rank = static_cast<std::size_t>(std::ceil(0.9 * static_cast<double>(v.size())));
  return v[std::max<std::size_t>(rank, 1) - 1];
}

}  // namespace detail

/// Times decode (only) over every (people, map) grid point. Scenes come from
/// the synthesizer at image size map * stride; warmup runs are discarded.
inline std::vector<BenchRecord> run_bench(const BenchConfig& cfg, const SkeletonTopology& topo) {
  if (cfg.repetitions < 10) throw Error(ErrorKind::InvalidRecipe, "need at least 10 repetitions");
  if (cfg.warmup < 3) throw Error(ErrorKind::InvalidRecipe, "need at least 3 warmup runs");
  using clock = std::chrono::steady_clock;
  std::vector<BenchRecord> out;
  for (const auto& [mw, mh] : cfg.maps)
    for (int n : cfg.people) {
      SceneRecipe r = cfg.recipe;
      r.n_people = n;
      r.n_people_max = -1;
      r.image_w = mw * cfg.encoder.stride;
      r.image_h = mh * cfg.encoder.stride;
      const AnnotatedScene scene = generate(r, topo);
      const TargetTensors targets = encode(scene, topo, cfg.encoder);

      BenchRecord rec{n, mw, mh, cfg.decoder.threads, cfg.repetitions};
      std::vector<std::int64_t> total, nms_t, score_t, asm_t;
      for (int i = 0; i < cfg.warmup + cfg.repetitions; ++i) {
        DecodeStats st;
        const auto t0 = clock::now();
        const PoseSet poses = decode(targets, topo, cfg.decoder, &st);
        const auto t1 = clock::now();
        if (i < cfg.warmup) continue;
        total.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
        nms_t.push_back(st.nms_ns);
        score_t.push_back(st.score_ns);
        asm_t.push_back(st.assemble_ns);
        rec.candidates = st.candidates;
        rec.connections = st.connections_scored;
        (void)poses;
      }
      rec.median_ns = detail::median_of(total);
      rec.p90_ns = detail::p90_of(total);
      rec.nms_median_ns = detail::median_of(nms_t);
      rec.score_median_ns = detail::median_of(score_t);
      rec.assemble_median_ns = detail::median_of(asm_t);
      out.push_back(rec);
    }
  std::sort(out.begin(), out.end(), [](const BenchRecord& a, const BenchRecord& b) {
    if (a.map_w * a.map_h != b.map_w * b.map_h) return a.map_w * a.map_h < b.map_w * b.map_h;
    return a.n_people < b.n_people;
  });
  return out;
}

inline constexpr const char* kBenchCsvHeader =
    "n_people,map_w,map_h,threads,median_ns,p90_ns,candidates,connections";

inline std::string bench_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream os;
  os << kBenchCsvHeader << "\n";
  for (const auto& r : records)
    os << r.n_people << ',' << r.map_w << ',' << r.map_h << ',' << r.threads << ',' << r.median_ns
       << ',' << r.p90_ns << ',' << r.candidates << ',' << r.connections << "\n";
  return os.str();
}

/// Reads the bench CSV back. An optional trailing `multi_ns` column (measured
/// multi-network times) is returned through `multi_ns` when present.
inline std::vector<BenchRecord> parse_bench_csv(const std::string& text,
                                                std::vector<double>* multi_ns = nullptr) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorKind::InvalidFormat, "empty bench CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  bool has_multi = false;
  if (line == std::string(kBenchCsvHeader) + ",multi_ns") has_multi = true;
  else if (line != kBenchCsvHeader)
    throw Error(ErrorKind::InvalidFormat, "unexpected bench CSV header: " + line);
  std::vector<BenchRecord> out;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    BenchRecord r;
    double multi = 0.0;
    fields >> r.n_people >> r.map_w >> r.map_h >> r.threads >> r.median_ns >> r.p90_ns >>
        r.candidates >> r.connections;
    if (has_multi) fields >> multi;
    if (!fields) throw Error(ErrorKind::InvalidFormat, "bad bench CSV row");
    out.push_back(r);
    if (has_multi && multi_ns) multi_ns->push_back(multi);
  }
  return out;
}

}  // namespace wbpose
