#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <vector>

#include "wbpose/decoder.hpp"
#include "wbpose/scene.hpp"
#include "wbpose/skeleton.hpp"

namespace wbpose {

/// The canonical OKS thresholds 0.50, 0.55, ..., 0.95.
inline std::vector<double> oks_thresholds() {
  std::vector<double> t;
  for (int i = 0; i < 10; ++i) t.push_back((50 + 5 * i) / 100.0);
  return t;
}

/// Mean over the groundtruth's parts in `groups` of exp(-d^2 / (2 area kappa^2)).
/// Parts the detection lacks contribute 0.
inline double oks(const Pose& det, const Pose& gt, double gt_area, const SkeletonTopology& topo,
                  GroupSet groups) {
  if (!(gt_area > 0.0)) throw Error(ErrorKind::InvalidFormat, "gt_area must be positive");
  double sum = 0.0;
  int labeled = 0;
  for (const auto& [part, g] : gt.parts) {
    if (!groups.contains(topo.group_of(part))) continue;
    ++labeled;
    auto it = det.parts.find(part);
    if (it == det.parts.end()) continue;
    const double dx = it->second.x - g.x, dy = it->second.y - g.y;
    const double k = topo.oks_kappa(part);
    sum += std::exp(-(dx * dx + dy * dy) / (2.0 * gt_area * k * k));
  }
  if (labeled == 0) throw Error(ErrorKind::ZeroLabeledParts, "groundtruth has no part in subset");
  return sum / labeled;
}

/// Area of the bounding box of a pose's parts within `groups`, floored at 1 px^2.
inline double pose_area(const Pose& p, const SkeletonTopology& topo, GroupSet groups) {
  bool any = false;
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  for (const auto& [part, k] : p.parts) {
    if (!groups.contains(topo.group_of(part))) continue;
    if (!any) {
      x0 = x1 = k.x;
      y0 = y1 = k.y;
      any = true;
    }
    x0 = std::min(x0, k.x);
    y0 = std::min(y0, k.y);
    x1 = std::max(x1, k.x);
    y1 = std::max(y1, k.y);
  }
  return std::max(1.0, (x1 - x0) * (y1 - y0));
}

inline bool has_parts_in(const Pose& p, const SkeletonTopology& topo, GroupSet groups) {
  for (const auto& [part, k] : p.parts)
    if (groups.contains(topo.group_of(part))) return true;
  return false;
}

struct EvalScene {
  PoseSet detections;
  PoseSet groundtruth;
  /// Optional per-groundtruth areas; when empty, pose_area() over the subset is used.
  std::vector<double> gt_areas;
};

struct ThresholdResult {
  double precision = 0.0;
  double recall = 0.0;
  double ap = 0.0;
};

struct EvalResult {
  double ap = 0.0;
  double ar = 0.0;
  std::map<double, ThresholdResult> per_threshold;
  GroupSet groups;
  /// Full PR curve at each threshold (rank order), for CSV export.
  std::map<double, std::vector<std::pair<double, double>>> pr_curves;
};

/// 101-point interpolated AP from a rank-ordered PR curve.
inline double interpolated_ap(const std::vector<double>& precision, const std::vector<double>& recall) {
  std::vector<double> env(precision);
  for (int i = static_cast<int>(env.size()) - 2; i >= 0; --i) env[i] = std::max(env[i], env[i + 1]);
  double ap = 0.0;
  for (int r = 0; r <= 100; ++r) {
    const double level = r / 100.0;
    auto it = std::lower_bound(recall.begin(), recall.end(), level);
    if (it != recall.end()) ap += env[static_cast<std::size_t>(it - recall.begin())];
  }
  return ap / 101.0;
}

/// COCO-style AP/AR over a group subset.
///
/// Per scene, detections (by descending person_score) greedily take the
/// unmatched groundtruth with the highest OKS at or above the threshold.
/// Detections and groundtruth without any part in the subset are ignored.
/// Detections across scenes are then ranked by score (ties: scene order, then
/// rank within scene) to build the PR curve. AR is the mean final recall.
inline EvalResult evaluate(const std::vector<EvalScene>& scenes, const SkeletonTopology& topo,
                           GroupSet groups) {
  struct Ranked {
    double score;
    int scene;
    int rank;
    std::vector<double> oks_row;  // over the scene's kept groundtruth
  };
  std::vector<std::vector<Ranked>> per_scene(scenes.size());
  int total_gt = 0;
  for (std::size_t s = 0; s < scenes.size(); ++s) {
    const auto& sc = scenes[s];
    std::vector<const Pose*> gts;
    std::vector<double> areas;
    for (std::size_t g = 0; g < sc.groundtruth.size(); ++g) {
      if (!has_parts_in(sc.groundtruth[g], topo, groups)) continue;
      gts.push_back(&sc.groundtruth[g]);
      areas.push_back(sc.gt_areas.empty() ? pose_area(sc.groundtruth[g], topo, groups)
                                          : sc.gt_areas.at(g));
    }
    total_gt += static_cast<int>(gts.size());
    std::vector<std::size_t> order;
    for (std::size_t d = 0; d < sc.detections.size(); ++d)
      if (has_parts_in(sc.detections[d], topo, groups)) order.push_back(d);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return sc.detections[a].person_score > sc.detections[b].person_score;
    });
    for (std::size_t r = 0; r < order.size(); ++r) {
      const Pose& det = sc.detections[order[r]];
      Ranked rk{det.person_score, static_cast<int>(s), static_cast<int>(r), {}};
      for (std::size_t g = 0; g < gts.size(); ++g)
        rk.oks_row.push_back(oks(det, *gts[g], areas[g], topo, groups));
      per_scene[s].push_back(std::move(rk));
    }
  }

  std::vector<const Ranked*> global;
  for (const auto& v : per_scene)
    for (const auto& r : v) global.push_back(&r);
  std::stable_sort(global.begin(), global.end(),
                   [](const Ranked* a, const Ranked* b) { return a->score > b->score; });

  EvalResult out;
  out.groups = groups;
  const auto thresholds = oks_thresholds();
  for (double t : thresholds) {
    // Matching within each scene.
    std::map<std::pair<int, int>, bool> is_tp;
    for (const auto& v : per_scene) {
      if (v.empty()) continue;
      std::vector<bool> taken(v.front().oks_row.size(), false);
      for (const auto& det : v) {
        int best = -1;
        double best_oks = t;
        for (std::size_t g = 0; g < det.oks_row.size(); ++g) {
          if (taken[g] || det.oks_row[g] < best_oks) continue;
          if (best >= 0 && det.oks_row[g] <= det.oks_row[best]) continue;
          best = static_cast<int>(g);
          best_oks = det.oks_row[g];
        }
        if (best >= 0) taken[best] = true;
        is_tp[{det.scene, det.rank}] = best >= 0;
      }
    }
    std::vector<double> precision, recall;
    int tp = 0, fp = 0;
    for (const Ranked* r : global) {
      if (is_tp[{r->scene, r->rank}]) ++tp;
      else ++fp;
      precision.push_back(static_cast<double>(tp) / (tp + fp));
      recall.push_back(total_gt > 0 ? static_cast<double>(tp) / total_gt : 0.0);
    }
    ThresholdResult tr;
    if (total_gt > 0) {
      tr.ap = interpolated_ap(precision, recall);
      tr.recall = recall.empty() ? 0.0 : recall.back();
      tr.precision = precision.empty() ? 0.0 : precision.back();
    }
    out.per_threshold[t] = tr;
    auto& curve = out.pr_curves[t];
    for (std::size_t i = 0; i < precision.size(); ++i) curve.emplace_back(precision[i], recall[i]);
    out.ap += tr.ap;
    out.ar += tr.recall;
  }
  out.ap /= static_cast<double>(thresholds.size());
  out.ar /= static_cast<double>(thresholds.size());
  return out;
}

/// Groundtruth pose view of an annotated person (present parts, score 1).
inline Pose pose_from_person(const Person& p) {
  Pose pose;
  pose.person_score = 1.0;
  for (const auto& [id, kp] : p.parts)
    if (kp.present()) pose.parts[id] = {kp.x, kp.y, 1.0, -1};
  return pose;
}

}  // namespace wbpose
