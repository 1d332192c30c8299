#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <span>
#include <vector>

#include "wbpose/encoder.hpp"
#include "wbpose/parallel.hpp"
#include "wbpose/skeleton.hpp"
#include "wbpose/tensor.hpp"

namespace wbpose {

struct DecoderParams {
  float nms_threshold = 0.05f;
  int window = 3;
  int n_samples = 10;
  double sample_threshold = 0.05;
  double valid_fraction = 0.8;
  int min_parts = 4;
  double min_score = 0.8;  // 0.2 * min_parts
  int threads = 1;
};

/// A peak in one confidence channel; position in (subpixel) map coordinates.
struct PartCandidate {
  int part_id = 0;
  double x = 0.0;
  double y = 0.0;
  float score = 0.0f;
  int candidate_id = 0;
};

struct ScoredConnection {
  int limb_id = 0;
  int src_candidate_id = 0;
  int dst_candidate_id = 0;
  double paf_score = 0.0;
  bool valid = false;
};

/// A decoded keypoint; x, y in input pixels. candidate_id is -1 for groundtruth.
struct PoseKeypoint {
  double x = 0.0;
  double y = 0.0;
  double score = 1.0;
  int candidate_id = -1;
};

struct Pose {
  std::map<int, PoseKeypoint> parts;
  double person_score = 0.0;
};

using PoseSet = std::vector<Pose>;

namespace detail {

// Offset of the vertex of a parabola through (-1, l), (0, c), (1, r).
inline double parabola_vertex(double l, double c, double r) {
  const double denom = l - 2.0 * c + r;
  if (denom >= 0.0) return 0.0;
  return 0.5 * (l - r) / denom;
}

// Quadratic fit in the log domain when all three samples are positive (exact for
// a Gaussian peak), raw values otherwise; clamped to half a cell.
inline double refine_axis(double l, double c, double r) {
  double off;
  if (l > 0.0 && c > 0.0 && r > 0.0)
    off = parabola_vertex(std::log(l), std::log(c), std::log(r));
  else
    off = parabola_vertex(l, c, r);
  return std::clamp(off, -0.5, 0.5);
}

}  // namespace detail

/// Strict local maxima at or above `threshold` inside a `window` x `window`
/// neighbourhood (clipped at the border), refined to subpixel precision and
/// sorted by descending score, ties in raster order. candidate_id is the rank.
inline std::vector<PartCandidate> nms(std::span<const float> plane, int width, int height,
                                      float threshold, int window, int part_id = 0) {
  if (window < 3 || window % 2 == 0)
    throw Error(ErrorKind::InvalidFormat, "NMS window must be odd and >= 3");
  if (plane.size() != static_cast<std::size_t>(width) * height)
    throw Error(ErrorKind::ShapeMismatch, "NMS plane size does not match width x height");
  const int half = window / 2;
  std::vector<PartCandidate> out;
  auto at = [&](int x, int y) { return plane[static_cast<std::size_t>(y) * width + x]; };
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const float v = at(x, y);
      if (!(v >= threshold)) continue;
      bool peak = true;
      for (int yy = std::max(0, y - half); peak && yy <= std::min(height - 1, y + half); ++yy)
        for (int xx = std::max(0, x - half); xx <= std::min(width - 1, x + half); ++xx) {
          if ((xx != x || yy != y) && at(xx, yy) >= v) {
            peak = false;
            break;
          }
        }
      if (!peak) continue;
      double dx = 0.0, dy = 0.0;
      if (x > 0 && x + 1 < width) dx = detail::refine_axis(at(x - 1, y), v, at(x + 1, y));
      if (y > 0 && y + 1 < height) dy = detail::refine_axis(at(x, y - 1), v, at(x, y + 1));
      out.push_back({part_id, x + dx, y + dy, v, 0});
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const PartCandidate& a, const PartCandidate& b) { return a.score > b.score; });
  for (std::size_t i = 0; i < out.size(); ++i) out[i].candidate_id = static_cast<int>(i);
  return out;
}

namespace detail {

// std::lround without the libm call; v - trunc(v) is exact.
inline long round_half_away(double v) {
  long r = static_cast<long>(v);
  const double frac = v - static_cast<double>(r);
  if (frac >= 0.5) ++r;
  else if (frac <= -0.5) --r;
  return r;
}

// Per-limb constants of the PAF line integral.
struct LimbScorer {
  const float* px = nullptr;
  const float* py = nullptr;
  int w = 0, h = 0;
  int n = 10;
  int required = 8;
  int max_fail = 2;
  double threshold = 0.05;
  int limb_id = 0;

  LimbScorer(const Tensor& paf, const Limb& limb, const DecoderParams& params)
      : px(paf.plane(2 * limb.id).data()),
        py(paf.plane(2 * limb.id + 1).data()),
        w(paf.width()),
        h(paf.height()),
        n(params.n_samples),
        required(static_cast<int>(std::ceil(params.valid_fraction * params.n_samples - 1e-9))),
        max_fail(n - required),
        threshold(params.sample_threshold),
        limb_id(limb.id) {}

  // Line integral along src->dst. With `early_exit` the samples are visited
  // middle-out (cross-person pairs fail there first) and the walk stops once
  // valid_fraction is out of reach; the score is then meaningless and valid is
  // false. The sum is always taken in sample order.
  ScoredConnection operator()(const PartCandidate& src, const PartCandidate& dst,
                              bool early_exit) const {
    ScoredConnection sc{limb_id, src.candidate_id, dst.candidate_id, 0.0, false};
    const double vx = dst.x - src.x, vy = dst.y - src.y;
    const double len = std::sqrt(vx * vx + vy * vy);
    if (len < 1e-9) return sc;
    const double ux = vx / len, uy = vy / len;
    const double step = 1.0 / (n - 1);
    auto sample = [&](int i) {
      const double t = i * step;
      const long cx = round_half_away(src.x + t * vx);
      const long cy = round_half_away(src.y + t * vy);
      if (cx < 0 || cy < 0 || cx >= w || cy >= h) return 0.0;
      const std::size_t k = static_cast<std::size_t>(cy) * w + static_cast<std::size_t>(cx);
      return px[k] * ux + py[k] * uy;
    };

    constexpr int kStack = 32;
    std::array<double, kStack> stack_dots;
    std::vector<double> heap_dots;
    double* dots = stack_dots.data();
    if (n > kStack) {
      heap_dots.resize(n);
      dots = heap_dots.data();
    }
    int above = 0, fail = 0;
    for (int j = 0; j < n; ++j) {
      // middle-out: n/2, n/2-1, n/2+1, n/2-2, ...
      const int off = (j + 1) / 2;
      const int i = early_exit ? (j % 2 ? n / 2 - off : n / 2 + off) : j;
      const double dot = sample(i);
      dots[i] = dot;
      if (dot > threshold)
        ++above;
      else if (early_exit && ++fail > max_fail)
        return sc;
    }
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += dots[i];
    sc.paf_score = sum / n;
    sc.valid = above >= required;
    return sc;
  }
};

inline ScoredConnection integrate_paf(const Tensor& paf, const Limb& limb, const PartCandidate& src,
                                      const PartCandidate& dst, const DecoderParams& params,
                                      bool early_exit) {
  return LimbScorer(paf, limb, params)(src, dst, early_exit);
}

}  // namespace detail

/// Mean of dot(PAF, unit(dst - src)) over n_samples evenly spaced points
/// (endpoints included, nearest cell). Valid when at least valid_fraction of the
/// samples exceed sample_threshold.
inline ScoredConnection score_connection(const Tensor& paf, const Limb& limb,
                                         const PartCandidate& src, const PartCandidate& dst,
                                         const DecoderParams& params) {
  if (params.n_samples < 2) throw Error(ErrorKind::InvalidFormat, "n_samples must be >= 2");
  if (src.part_id != limb.src || dst.part_id != limb.dst)
    throw Error(ErrorKind::ChannelMismatch,
                "candidates do not match the endpoints of limb " + std::to_string(limb.id));
  if (paf.channels() <= 2 * limb.id + 1)
    throw Error(ErrorKind::ChannelMismatch, "PAF tensor lacks limb " + std::to_string(limb.id));
  return detail::integrate_paf(paf, limb, src, dst, params, false);
}

/// Greedy bipartite matching: valid connections by descending score (ties by
/// src then dst id), each endpoint used at most once.
inline std::vector<ScoredConnection> match_limb(std::vector<ScoredConnection> connections) {
  std::erase_if(connections, [](const ScoredConnection& c) { return !c.valid; });
  std::sort(connections.begin(), connections.end(),
            [](const ScoredConnection& a, const ScoredConnection& b) {
              if (a.paf_score != b.paf_score) return a.paf_score > b.paf_score;
              if (a.src_candidate_id != b.src_candidate_id)
                return a.src_candidate_id < b.src_candidate_id;
              return a.dst_candidate_id < b.dst_candidate_id;
            });
  std::vector<ScoredConnection> accepted;
  std::vector<int> used_src, used_dst;
  for (const auto& c : connections) {
    if (std::find(used_src.begin(), used_src.end(), c.src_candidate_id) != used_src.end()) continue;
    if (std::find(used_dst.begin(), used_dst.end(), c.dst_candidate_id) != used_dst.end()) continue;
    used_src.push_back(c.src_candidate_id);
    used_dst.push_back(c.dst_candidate_id);
    accepted.push_back(c);
  }
  return accepted;
}

namespace detail {

// Part membership is kept twice: (part, candidate) pairs and a part bitmask,
// so conflict checks only look at parts both clusters hold.
struct Cluster {
  std::vector<std::pair<int, int>> parts;  // (part id, candidate id)
  std::vector<std::uint64_t> mask;
  double connection_score = 0.0;
  int connections = 0;

  int candidate_for(int part) const {
    for (const auto& [p, c] : parts)
      if (p == part) return c;
    return -1;
  }
};

inline Cluster singleton(int part, int cand, int part_count) {
  Cluster c;
  c.parts.emplace_back(part, cand);
  c.mask.assign((part_count + 63) / 64, 0);
  c.mask[part / 64] |= std::uint64_t{1} << (part % 64);
  return c;
}

// True when no part is held by the two clusters with different candidates.
inline bool compatible(const Cluster& a, const Cluster& b) {
  for (std::size_t wi = 0; wi < a.mask.size(); ++wi) {
    std::uint64_t common = a.mask[wi] & b.mask[wi];
    while (common) {
      const int part = static_cast<int>(wi * 64) + std::countr_zero(common);
      common &= common - 1;
      if (a.candidate_for(part) != b.candidate_for(part)) return false;
    }
  }
  return true;
}

inline void absorb(Cluster& into, Cluster& from) {
  for (const auto& pc : from.parts)
    if (!((into.mask[pc.first / 64] >> (pc.first % 64)) & 1)) into.parts.push_back(pc);
  for (std::size_t wi = 0; wi < into.mask.size(); ++wi) into.mask[wi] |= from.mask[wi];
  into.connection_score += from.connection_score;
  into.connections += from.connections;
  from = Cluster{};
}

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
};

}  // namespace detail

/// Groups accepted connections into people.
///
/// Phase one clusters each group's connections separately, strongest first,
/// refusing any union that would put two candidates on one part. Phase two
/// merges clusters of different groups that share an anchor candidate, again
/// strongest (summed connection score) first under the same rule. A candidate
/// left in two clusters stays with the higher-scoring one. Candidates are
/// indexed by candidate_id; `stride` converts map coordinates to pixels.
inline PoseSet assemble(const std::vector<PartCandidate>& candidates,
                        const std::vector<ScoredConnection>& accepted, const SkeletonTopology& topo,
                        const DecoderParams& params, int stride) {
  using detail::Cluster;
  std::vector<Cluster> clusters;
  const int part_count = topo.part_count();
  const int n_cand = static_cast<int>(candidates.size());
  std::vector<int> node_of(n_cand, -1);  // candidate id -> local cluster index

  for (auto group : kAllGroups) {
    std::vector<ScoredConnection> conns;
    for (const auto& c : accepted)
      if (topo.limb_group(c.limb_id) == group) conns.push_back(c);
    if (conns.empty()) continue;
    std::sort(conns.begin(), conns.end(), [](const ScoredConnection& a, const ScoredConnection& b) {
      if (a.paf_score != b.paf_score) return a.paf_score > b.paf_score;
      if (a.limb_id != b.limb_id) return a.limb_id < b.limb_id;
      if (a.src_candidate_id != b.src_candidate_id) return a.src_candidate_id < b.src_candidate_id;
      return a.dst_candidate_id < b.dst_candidate_id;
    });

    std::vector<Cluster> local;
    std::fill(node_of.begin(), node_of.end(), -1);
    auto node = [&](int cand) {
      int& slot = node_of.at(cand);
      if (slot < 0) {
        slot = static_cast<int>(local.size());
        local.push_back(detail::singleton(candidates[cand].part_id, cand, part_count));
      }
      return slot;
    };
    std::vector<int> seed_nodes;
    for (const auto& c : conns) {
      seed_nodes.push_back(node(c.src_candidate_id));
      seed_nodes.push_back(node(c.dst_candidate_id));
    }
    detail::DisjointSets ds(static_cast<int>(local.size()));
    for (std::size_t k = 0; k < conns.size(); ++k) {
      const int ra = ds.find(seed_nodes[2 * k]), rb = ds.find(seed_nodes[2 * k + 1]);
      if (ra == rb) {
        local[ra].connection_score += conns[k].paf_score;
        ++local[ra].connections;
        continue;
      }
      if (!detail::compatible(local[ra], local[rb])) continue;
      const int keep = std::min(ra, rb), drop = std::max(ra, rb);
      detail::absorb(local[keep], local[drop]);
      local[keep].connection_score += conns[k].paf_score;
      ++local[keep].connections;
      ds.parent[drop] = keep;
    }
    for (int i = 0; i < static_cast<int>(local.size()); ++i)
      if (ds.find(i) == i && local[i].connections > 0) clusters.push_back(std::move(local[i]));
  }

  // Phase two: anchor merges across groups.
  std::vector<std::vector<int>> holders(n_cand);  // candidate id -> cluster indices
  for (int i = 0; i < static_cast<int>(clusters.size()); ++i)
    for (const auto& [part, cand] : clusters[i].parts) holders[cand].push_back(i);
  struct Proposal {
    double score;
    int a, b;
  };
  std::vector<Proposal> proposals;
  for (const auto& hs : holders)
    for (std::size_t i = 0; i < hs.size(); ++i)
      for (std::size_t j = i + 1; j < hs.size(); ++j)
        proposals.push_back({clusters[hs[i]].connection_score + clusters[hs[j]].connection_score,
                             hs[i], hs[j]});
  std::sort(proposals.begin(), proposals.end(), [](const Proposal& x, const Proposal& y) {
    if (x.score != y.score) return x.score > y.score;
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  });
  detail::DisjointSets merged(static_cast<int>(clusters.size()));
  for (const auto& p : proposals) {
    const int ra = merged.find(p.a), rb = merged.find(p.b);
    if (ra == rb || !detail::compatible(clusters[ra], clusters[rb])) continue;
    const int keep = std::min(ra, rb), drop = std::max(ra, rb);
    detail::absorb(clusters[keep], clusters[drop]);
    merged.parent[drop] = keep;
  }
  std::vector<int> roots;
  for (int i = 0; i < static_cast<int>(clusters.size()); ++i)
    if (merged.find(i) == i) roots.push_back(i);

  // Exclusivity: a candidate still held twice stays with the stronger cluster.
  std::vector<int> owner(n_cand, -1);
  for (int r : roots)
    for (const auto& [part, cand] : clusters[r].parts) {
      int& o = owner[cand];
      if (o < 0 || clusters[r].connection_score > clusters[o].connection_score) o = r;
    }

  PoseSet poses;
  std::vector<int> min_cand;
  for (int r : roots) {
    Pose pose;
    double raw = clusters[r].connection_score;
    int first = std::numeric_limits<int>::max();
    for (const auto& [part, cand] : clusters[r].parts) {
      if (owner[cand] != r) continue;
      const auto& pc = candidates.at(cand);
      pose.parts[part] = {pc.x * stride, pc.y * stride, pc.score, cand};
      raw += pc.score;
      first = std::min(first, cand);
    }
    const int n = static_cast<int>(pose.parts.size());
    if (n < params.min_parts || raw < params.min_score) continue;
    pose.person_score = raw / (n + clusters[r].connections);
    poses.push_back(std::move(pose));
    min_cand.push_back(first);
  }
  std::vector<std::size_t> order(poses.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (poses[a].person_score != poses[b].person_score)
      return poses[a].person_score > poses[b].person_score;
    return min_cand[a] < min_cand[b];
  });
  PoseSet sorted;
  for (auto i : order) sorted.push_back(std::move(poses[i]));
  return sorted;
}

struct DecodeStats {
  int candidates = 0;
  std::int64_t connections_scored = 0;
  std::int64_t nms_ns = 0;
  std::int64_t score_ns = 0;
  std::int64_t assemble_ns = 0;
};

/// Confidence + PAF tensors to people. `stride` maps cells to input pixels.
inline PoseSet decode(const Tensor& confidence, const Tensor& paf, const SkeletonTopology& topo,
                      const DecoderParams& params, int stride, DecodeStats* stats = nullptr) {
  const ChannelCounts cc = channel_counts(topo);
  if (confidence.channels() != cc.confidence_channels || paf.channels() != cc.paf_channels)
    throw Error(ErrorKind::ChannelMismatch,
                "tensors have " + std::to_string(confidence.channels()) + "+" +
                    std::to_string(paf.channels()) + " channels, topology expects " +
                    std::to_string(cc.confidence_channels) + "+" + std::to_string(cc.paf_channels));
  if (confidence.width() != paf.width() || confidence.height() != paf.height())
    throw Error(ErrorKind::ShapeMismatch, "confidence and PAF maps differ in size");
  if (params.n_samples < 2) throw Error(ErrorKind::InvalidFormat, "n_samples must be >= 2");

  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  const int parts = topo.part_count();
  std::vector<std::vector<PartCandidate>> per_part(parts);
  parallel_for(parts, params.threads, [&](int c) {
    per_part[c] = nms(confidence.plane(c), confidence.width(), confidence.height(),
                      params.nms_threshold, params.window, c);
  });
  std::vector<PartCandidate> candidates;
  std::vector<std::vector<int>> ids_of(parts);
  for (int c = 0; c < parts; ++c)
    for (auto pc : per_part[c]) {
      pc.candidate_id = static_cast<int>(candidates.size());
      ids_of[c].push_back(pc.candidate_id);
      candidates.push_back(pc);
    }
  const auto t1 = clock::now();

  const int limbs = topo.limb_count();
  std::vector<std::vector<ScoredConnection>> per_limb(limbs);
  std::vector<std::int64_t> scored(limbs, 0);
  parallel_for(limbs, params.threads, [&](int li) {
    const Limb& limb = topo.limb(li);
    const detail::LimbScorer scorer(paf, limb, params);
    std::vector<ScoredConnection> conns;
    for (int s : ids_of[limb.src])
      for (int d : ids_of[limb.dst]) {
        auto sc = scorer(candidates[s], candidates[d], true);
        if (sc.valid) conns.push_back(sc);
      }
    scored[li] = static_cast<std::int64_t>(ids_of[limb.src].size()) * ids_of[limb.dst].size();
    per_limb[li] = match_limb(std::move(conns));
  });
  std::vector<ScoredConnection> accepted;
  for (auto& v : per_limb) accepted.insert(accepted.end(), v.begin(), v.end());
  const auto t2 = clock::now();

  PoseSet poses = assemble(candidates, accepted, topo, params, stride);
  const auto t3 = clock::now();

  if (stats) {
    auto ns = [](auto d) { return std::chrono::duration_cast<std::chrono::nanoseconds>(d).count(); };
    stats->candidates = static_cast<int>(candidates.size());
    stats->connections_scored = std::accumulate(scored.begin(), scored.end(), std::int64_t{0});
    stats->nms_ns = ns(t1 - t0);
    stats->score_ns = ns(t2 - t1);
    stats->assemble_ns = ns(t3 - t2);
  }
  return poses;
}

inline PoseSet decode(const TargetTensors& t, const SkeletonTopology& topo,
                      const DecoderParams& params = {}, DecodeStats* stats = nullptr) {
  return decode(t.s_star, t.l_star, topo, params, t.grid.stride, stats);
}

}  // namespace wbpose
