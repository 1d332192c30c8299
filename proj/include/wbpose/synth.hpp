#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <string>
#include <vector>

#include "wbpose/decoder.hpp"
#include "wbpose/encoder.hpp"
#include "wbpose/metrics.hpp"
#include "wbpose/rng.hpp"
#include "wbpose/scene.hpp"

namespace wbpose {

struct SceneRecipe {
  int n_people = 1;
  /// When greater than n_people, the count is drawn uniformly from [n_people, n_people_max].
  int n_people_max = -1;
  int image_w = 480;
  int image_h = 480;
  double min_separation = 0.0;  // px between person bounding boxes
  double scale_min = 80.0;      // person height in px
  double scale_max = 110.0;
  GroupSet coverage = GroupSet::all();
  std::array<double, 4> missing_prob{};  // by PartGroup
  double occluded_prob = 0.0;
  double rotation_deg = 20.0;
  double limb_jitter_deg = 15.0;
  double margin = 12.0;  // keep keypoints this far from the image border
  int max_attempts = 1000;
  std::uint64_t seed = 0;
};

namespace detail {

inline void validate_recipe(const SceneRecipe& r) {
  auto fail = [](const std::string& what) { throw Error(ErrorKind::InvalidRecipe, what); };
  if (r.n_people < 0) fail("n_people must be >= 0");
  if (r.image_w <= 0 || r.image_h <= 0) fail("image size must be positive");
  if (r.min_separation < 0) fail("min_separation must be >= 0");
  if (!(r.scale_min > 0) || r.scale_max < r.scale_min) fail("bad person scale range");
  for (double p : r.missing_prob)
    if (p < 0 || p > 1) fail("missing_prob outside [0,1]");
  if (r.occluded_prob < 0 || r.occluded_prob > 1) fail("occluded_prob outside [0,1]");
  if (r.max_attempts < 1) fail("max_attempts must be >= 1");
}

// Breadth-first spanning tree of the limb graph: (parent, child) in visit order.
inline std::vector<std::pair<int, int>> skeleton_tree(const SkeletonTopology& topo, int& root) {
  root = 0;
  for (const auto& p : topo.parts())
    if (p.group == PartGroup::Body) {
      root = p.id;
      break;
    }
  std::vector<std::vector<int>> adj(topo.part_count());
  for (const auto& l : topo.limbs()) {
    adj[l.src].push_back(l.dst);
    adj[l.dst].push_back(l.src);
  }
  std::vector<bool> seen(topo.part_count(), false);
  std::vector<std::pair<int, int>> edges;
  std::queue<int> q;
  q.push(root);
  seen[root] = true;
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int v : adj[u])
      if (!seen[v]) {
        seen[v] = true;
        edges.emplace_back(u, v);
        q.push(v);
      }
  }
  return edges;
}

}  // namespace detail

/// Samples one scene: each person is the manifest template scaled, rotated and
/// jittered per limb, then placed by rejection sampling so that every pair of
/// person boxes is at least min_separation apart.
inline AnnotatedScene generate(const SceneRecipe& recipe, const SkeletonTopology& topo) {
  detail::validate_recipe(recipe);
  if (topo.template_pose().empty())
    throw Error(ErrorKind::InvalidRecipe, "topology has no template pose");
  RngState rng{splitmix64_mix(recipe.seed)};

  AnnotatedScene scene;
  scene.id = "synth-" + std::to_string(recipe.seed);
  scene.image_w = recipe.image_w;
  scene.image_h = recipe.image_h;
  scene.coverage = recipe.coverage;

  int n = recipe.n_people;
  if (recipe.n_people_max > recipe.n_people)
    n += static_cast<int>(next_u64(rng) % static_cast<std::uint64_t>(recipe.n_people_max - n + 1));
  if (n == 0) {
    scene.no_people = true;
    return scene;
  }

  int root = 0;
  const auto tree = detail::skeleton_tree(topo, root);
  const auto& tmpl = topo.template_pose();
  const double deg = std::numbers::pi / 180.0;
  std::vector<Box> placed;

  for (int k = 0; k < n; ++k) {
    const double scale = next_uniform(rng, recipe.scale_min, recipe.scale_max);
    const double theta = next_uniform(rng, -recipe.rotation_deg, recipe.rotation_deg) * deg;
    std::vector<Point2> pos(topo.part_count());
    pos[root] = {0.0, 0.0};
    for (const auto& [parent, child] : tree) {
      const double a = theta + next_uniform(rng, -recipe.limb_jitter_deg, recipe.limb_jitter_deg) * deg;
      const double vx = (tmpl[child].x - tmpl[parent].x) * scale;
      const double vy = (tmpl[child].y - tmpl[parent].y) * scale;
      pos[child] = {pos[parent].x + std::cos(a) * vx - std::sin(a) * vy,
                    pos[parent].y + std::sin(a) * vx + std::cos(a) * vy};
    }
    Box rel{pos[0].x, pos[0].y, pos[0].x, pos[0].y};
    for (const auto& p : pos) {
      rel.x0 = std::min(rel.x0, p.x);
      rel.y0 = std::min(rel.y0, p.y);
      rel.x1 = std::max(rel.x1, p.x);
      rel.y1 = std::max(rel.y1, p.y);
    }
    const double tx_lo = recipe.margin - rel.x0, tx_hi = recipe.image_w - recipe.margin - rel.x1;
    const double ty_lo = recipe.margin - rel.y0, ty_hi = recipe.image_h - recipe.margin - rel.y1;
    if (tx_hi < tx_lo || ty_hi < ty_lo)
      throw Error(ErrorKind::InfeasiblePacking, "person larger than the image");

    bool ok = false;
    Box box;
    double tx = 0, ty = 0;
    for (int attempt = 0; attempt < recipe.max_attempts && !ok; ++attempt) {
      tx = next_uniform(rng, tx_lo, tx_hi);
      ty = next_uniform(rng, ty_lo, ty_hi);
      box = {rel.x0 + tx, rel.y0 + ty, rel.x1 + tx, rel.y1 + ty};
      ok = std::all_of(placed.begin(), placed.end(), [&](const Box& other) {
        return box_distance(box, other) >= recipe.min_separation;
      });
    }
    if (!ok)
      throw Error(ErrorKind::InfeasiblePacking,
                  "could not place person " + std::to_string(k + 1) + " of " + std::to_string(n) +
                      " after " + std::to_string(recipe.max_attempts) + " attempts");
    placed.push_back(box);

    Person person;
    for (const auto& part : topo.parts()) {
      if (!recipe.coverage.contains(part.group)) continue;
      Keypoint kp{pos[part.id].x + tx, pos[part.id].y + ty, Visibility::Labeled};
      const double u_missing = next_unit(rng);
      const double u_occluded = next_unit(rng);
      if (u_missing < recipe.missing_prob[static_cast<int>(part.group)])
        kp.vis = Visibility::Missing;
      else if (u_occluded < recipe.occluded_prob)
        kp.vis = Visibility::Occluded;
      person.parts[part.id] = kp;
    }
    scene.people.push_back(std::move(person));
  }
  return scene;
}

/// Scene `index` of a recipe-driven batch; seeds are split so each scene depends
/// on (seed, index) only.
inline AnnotatedScene generate_nth(SceneRecipe recipe, const SkeletonTopology& topo, int index) {
  const std::uint64_t base = recipe.seed;
  recipe.seed = split(base, static_cast<std::uint64_t>(index)).s;
  AnnotatedScene s = generate(recipe, topo);
  s.id = "synth-" + std::to_string(base) + "-" + std::to_string(index);
  return s;
}

struct RoundtripReport {
  int scenes = 0;
  int people_total = 0;
  int people_found = 0;
  int unmatched_truth = 0;
  int spurious_poses = 0;
  int cross_assignment_errors = 0;
  int missed_parts = 0;
  int extra_parts = 0;
  int scenes_bijective = 0;
  std::size_t parts_compared = 0;
  double max_error_px = 0.0;
  double mean_error_px = 0.0;
  double p50_error_px = 0.0;
  double p90_error_px = 0.0;
  double p99_error_px = 0.0;
  double max_error_cells = 0.0;
  int stride = 8;
  bool full_labeling = true;

  /// Exact people count and bijection per scene, no cross assignments, no
  /// invented parts, sub-half-cell error; with full labeling also no missed parts.
  bool passes(double max_cells = 0.5) const {
    return scenes_bijective == scenes && cross_assignment_errors == 0 && extra_parts == 0 &&
           max_error_cells <= max_cells && (!full_labeling || missed_parts == 0);
  }
};

namespace detail {

inline double quantile(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) return 0.0;
  const auto idx = static_cast<std::size_t>(std::ceil(q * sorted.size())) ;
  return sorted[std::min(sorted.size() - 1, idx == 0 ? 0 : idx - 1)];
}

}  // namespace detail

/// Compares decoded poses with a scene's truth and accumulates into `report`.
/// Poses are assigned to people greedily by descending OKS over all groups.
inline void compare_with_truth(const AnnotatedScene& scene, const PoseSet& poses,
                               const SkeletonTopology& topo, RoundtripReport& report,
                               std::vector<double>& errors) {
  const GroupSet all = GroupSet::all();
  std::vector<Pose> truth;
  for (const auto& p : scene.people) truth.push_back(pose_from_person(p));

  struct Pair {
    double oks;
    int det, gt;
  };
  std::vector<Pair> pairs;
  for (int d = 0; d < static_cast<int>(poses.size()); ++d)
    for (int g = 0; g < static_cast<int>(truth.size()); ++g) {
      if (truth[g].parts.empty()) continue;
      const double o = oks(poses[d], truth[g], pose_area(truth[g], topo, all), topo, all);
      if (o > 0.0) pairs.push_back({o, d, g});
    }
  std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
    if (a.oks != b.oks) return a.oks > b.oks;
    if (a.det != b.det) return a.det < b.det;
    return a.gt < b.gt;
  });
  std::vector<int> gt_of(poses.size(), -1), det_of(truth.size(), -1);
  for (const auto& p : pairs)
    if (gt_of[p.det] < 0 && det_of[p.gt] < 0) {
      gt_of[p.det] = p.gt;
      det_of[p.gt] = p.det;
    }

  int unmatched = 0, spurious = 0;
  for (int g = 0; g < static_cast<int>(truth.size()); ++g)
    if (det_of[g] < 0 && !truth[g].parts.empty()) ++unmatched;
  for (int d = 0; d < static_cast<int>(poses.size()); ++d) {
    if (gt_of[d] < 0) {
      ++spurious;
      continue;
    }
    const Pose& t = truth[gt_of[d]];
    for (const auto& [part, kp] : poses[d].parts) {
      auto it = t.parts.find(part);
      if (it == t.parts.end()) {
        ++report.extra_parts;
        continue;
      }
      errors.push_back(std::hypot(kp.x - it->second.x, kp.y - it->second.y));
      // Cross assignment: the nearest truth instance of this part belongs to someone else.
      int nearest = -1;
      double best = 0.0;
      for (int g = 0; g < static_cast<int>(truth.size()); ++g) {
        auto jt = truth[g].parts.find(part);
        if (jt == truth[g].parts.end()) continue;
        const double dd = std::hypot(kp.x - jt->second.x, kp.y - jt->second.y);
        if (nearest < 0 || dd < best) {
          nearest = g;
          best = dd;
        }
      }
      if (nearest != gt_of[d]) ++report.cross_assignment_errors;
    }
    for (const auto& [part, kp] : t.parts)
      if (!poses[d].parts.contains(part)) ++report.missed_parts;
  }
  for (int g = 0; g < static_cast<int>(truth.size()); ++g)
    if (det_of[g] < 0) report.missed_parts += static_cast<int>(truth[g].parts.size());

  report.scenes += 1;
  report.people_total += static_cast<int>(scene.people.size());
  report.people_found += static_cast<int>(poses.size());
  report.unmatched_truth += unmatched;
  report.spurious_poses += spurious;
  if (unmatched == 0 && spurious == 0 && poses.size() == scene.people.size())
    report.scenes_bijective += 1;
}

inline void finalize_errors(RoundtripReport& report, std::vector<double>& errors) {
  std::sort(errors.begin(), errors.end());
  report.parts_compared = errors.size();
  if (errors.empty()) return;
  report.max_error_px = errors.back();
  report.mean_error_px = std::accumulate(errors.begin(), errors.end(), 0.0) / errors.size();
  report.p50_error_px = detail::quantile(errors, 0.50);
  report.p90_error_px = detail::quantile(errors, 0.90);
  report.p99_error_px = detail::quantile(errors, 0.99);
  report.max_error_cells = report.max_error_px / report.stride;
}

/// generate -> encode -> decode -> compare, over `n_scenes` split-seeded scenes.
inline RoundtripReport roundtrip_report(const SceneRecipe& recipe, const SkeletonTopology& topo,
                                        const EncoderParams& enc, const DecoderParams& dec,
                                        int n_scenes = 1) {
  RoundtripReport report;
  report.stride = enc.stride;
  report.full_labeling = std::all_of(recipe.missing_prob.begin(), recipe.missing_prob.end(),
                                     [](double p) { return p == 0.0; });
  std::vector<double> errors;
  for (int i = 0; i < n_scenes; ++i) {
    const AnnotatedScene scene = n_scenes == 1 ? generate(recipe, topo) : generate_nth(recipe, topo, i);
    const TargetTensors targets = encode(scene, topo, enc);
    const PoseSet poses = decode(targets, topo, dec);
    compare_with_truth(scene, poses, topo, report, errors);
  }
  finalize_errors(report, errors);
  return report;
}

}  // namespace wbpose
