#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <vector>

#include "wbpose/scene.hpp"
#include "wbpose/skeleton.hpp"
#include "wbpose/tensor.hpp"

namespace wbpose {

struct EncoderParams {
  int stride = 8;
  /// Gaussian sigma in input pixels, indexed by PartGroup (body, foot, face, hand).
  std::array<double, 4> sigma = {7.0, 7.0, 3.5, 3.5};
  /// PAF half-width in input pixels. Unset: max(sigma of the src group, stride).
  std::optional<double> limb_width;

  double sigma_of(PartGroup g) const { return sigma[static_cast<int>(g)]; }
};

/// Groundtruth maps S*, L* and their loss masks, all on one grid.
/// s_mask has one channel per confidence channel, l_mask one per PAF channel.
struct TargetTensors {
  GridSpec grid;
  Tensor s_star;
  Tensor l_star;
  Tensor s_mask;
  Tensor l_mask;

  friend bool operator==(const TargetTensors&, const TargetTensors&) = default;
};

namespace detail {

// Gaussians are evaluated where d^2 / sigma^2 <= this; beyond it they are below 5e-18.
inline constexpr double kGaussianCutoff = 40.0;

inline void cell_range(double lo_px, double hi_px, int stride, int cells, int& first, int& last) {
  first = std::max(0, static_cast<int>(std::ceil(lo_px / stride)));
  last = std::min(cells - 1, static_cast<int>(std::floor(hi_px / stride)));
}

inline double limb_half_width(const EncoderParams& params, const SkeletonTopology& topo,
                              const Limb& limb) {
  if (params.limb_width) return *params.limb_width;
  return std::max(params.sigma_of(topo.group_of(limb.src)), static_cast<double>(params.stride));
}

}  // namespace detail

/// Confidence maps: per part channel the max over people of exp(-d^2 / sigma^2),
/// plus an optional background channel 1 - max over parts.
inline Tensor encode_confidence(const AnnotatedScene& scene, const SkeletonTopology& topo,
                                const EncoderParams& params) {
  const GridSpec grid = grid_for_image(scene.image_w, scene.image_h, params.stride);
  const ChannelCounts cc = channel_counts(topo);
  Tensor s(cc.confidence_channels, grid.map_h, grid.map_w, 0.0f);
  const double stride = grid.stride;

  for (int c = 0; c < topo.part_count(); ++c) {
    const double sigma = params.sigma_of(topo.group_of(c));
    const double radius = sigma * std::sqrt(detail::kGaussianCutoff);
    for (const auto& person : scene.people) {
      const Keypoint* kp = person.find(c);
      if (!kp) continue;
      int x0, x1, y0, y1;
      detail::cell_range(kp->x - radius, kp->x + radius, grid.stride, grid.map_w, x0, x1);
      detail::cell_range(kp->y - radius, kp->y + radius, grid.stride, grid.map_h, y0, y1);
      for (int y = y0; y <= y1; ++y) {
        const double dy = y * stride - kp->y;
        for (int x = x0; x <= x1; ++x) {
          const double dx = x * stride - kp->x;
          const double e = (dx * dx + dy * dy) / (sigma * sigma);
          if (e > detail::kGaussianCutoff) continue;
          float& cell = s(c, y, x);
          cell = std::max(cell, static_cast<float>(std::exp(-e)));
        }
      }
    }
  }

  if (topo.background_channel()) {
    const int bg = topo.part_count();
    for (int y = 0; y < grid.map_h; ++y)
      for (int x = 0; x < grid.map_w; ++x) {
        float peak = 0.0f;
        for (int c = 0; c < bg; ++c) peak = std::max(peak, s(c, y, x));
        s(bg, y, x) = 1.0f - peak;
      }
  }
  return s;
}

/// Part affinity fields: cells within the limb half-width of a person's segment
/// carry the src->dst unit vector; people overlapping on a cell are averaged.
inline Tensor encode_paf(const AnnotatedScene& scene, const SkeletonTopology& topo,
                         const EncoderParams& params) {
  const GridSpec grid = grid_for_image(scene.image_w, scene.image_h, params.stride);
  Tensor l(2 * topo.limb_count(), grid.map_h, grid.map_w, 0.0f);
  const double stride = grid.stride;
  const std::size_t plane = static_cast<std::size_t>(grid.map_w) * grid.map_h;
  std::vector<double> sum_x(plane), sum_y(plane);
  std::vector<int> count(plane);

  for (const auto& limb : topo.limbs()) {
    const double width = detail::limb_half_width(params, topo, limb);
    std::fill(sum_x.begin(), sum_x.end(), 0.0);
    std::fill(sum_y.begin(), sum_y.end(), 0.0);
    std::fill(count.begin(), count.end(), 0);
    bool touched = false;

    for (const auto& person : scene.people) {
      const Keypoint* a = person.find(limb.src);
      const Keypoint* b = person.find(limb.dst);
      if (!a || !b) continue;
      const double vx = b->x - a->x, vy = b->y - a->y;
      const double len = std::hypot(vx, vy);
      if (len < 1e-9) continue;
      const double ux = vx / len, uy = vy / len;
      int x0, x1, y0, y1;
      detail::cell_range(std::min(a->x, b->x) - width, std::max(a->x, b->x) + width, grid.stride,
                         grid.map_w, x0, x1);
      detail::cell_range(std::min(a->y, b->y) - width, std::max(a->y, b->y) + width, grid.stride,
                         grid.map_h, y0, y1);
      for (int y = y0; y <= y1; ++y)
        for (int x = x0; x <= x1; ++x) {
          const double px = x * stride - a->x, py = y * stride - a->y;
          const double t = std::clamp(px * ux + py * uy, 0.0, len);
          const double dx = px - t * ux, dy = py - t * uy;
          if (dx * dx + dy * dy > width * width) continue;
          const std::size_t i = static_cast<std::size_t>(y) * grid.map_w + x;
          sum_x[i] += ux;
          sum_y[i] += uy;
          ++count[i];
          touched = true;
        }
    }
    if (!touched) continue;
    auto px = l.plane(2 * limb.id);
    auto py = l.plane(2 * limb.id + 1);
    for (std::size_t i = 0; i < plane; ++i)
      if (count[i] > 0) {
        px[i] = static_cast<float>(sum_x[i] / count[i]);
        py[i] = static_cast<float>(sum_y[i] / count[i]);
      }
  }
  return l;
}

struct MaskTensors {
  Tensor s_mask;
  Tensor l_mask;
};

/// Binary loss masks.
///
/// Covered groups are on except inside unlabeled regions. Uncovered groups are
/// off, except that when the body is covered, cells outside every person region
/// (keypoint box dilated by 2 * sigma_body) and every unlabeled region are
/// re-enabled. A no-people scene enables everything. Cells past the image edge
/// are always off. The background channel follows the covered rule.
inline MaskTensors encode_masks(const AnnotatedScene& scene, const SkeletonTopology& topo,
                                const EncoderParams& params) {
  const GridSpec grid = grid_for_image(scene.image_w, scene.image_h, params.stride);
  const ChannelCounts cc = channel_counts(topo);
  const std::size_t plane = static_cast<std::size_t>(grid.map_w) * grid.map_h;

  std::vector<Box> person_regions;
  const double dilation = 2.0 * params.sigma_of(PartGroup::Body);
  for (const auto& p : scene.people) {
    Box b;
    if (person_bbox(p, b)) person_regions.push_back(b.dilated(dilation));
  }

  // Per-cell state: 0 outside image, 1 in an unlabeled region, 2 in a person
  // region, 3 free.
  std::vector<std::uint8_t> state(plane, 3);
  for (int y = 0; y < grid.map_h; ++y)
    for (int x = 0; x < grid.map_w; ++x) {
      const double px = static_cast<double>(x) * grid.stride;
      const double py = static_cast<double>(y) * grid.stride;
      auto& st = state[static_cast<std::size_t>(y) * grid.map_w + x];
      if (px >= scene.image_w || py >= scene.image_h) {
        st = 0;
        continue;
      }
      for (const auto& r : scene.unlabeled_regions)
        if (r.contains(px, py)) st = 1;
      if (st != 3) continue;
      for (const auto& r : person_regions)
        if (r.contains(px, py)) st = 2;
    }

  const bool reenable = scene.coverage.contains(PartGroup::Body);
  auto render = [&](bool covered) {
    std::vector<float> out(plane);
    for (std::size_t i = 0; i < plane; ++i) {
      const auto st = state[i];
      bool on;
      if (st == 0) on = false;
      else if (scene.no_people) on = true;
      else if (covered) on = st != 1;
      else on = reenable && st == 3;
      out[i] = on ? 1.0f : 0.0f;
    }
    return out;
  };
  std::array<std::vector<float>, 2> by_rule = {render(false), render(true)};
  auto fill = [&](Tensor& t, int c, bool covered) {
    const auto& src = by_rule[covered ? 1 : 0];
    std::copy(src.begin(), src.end(), t.plane(c).begin());
  };

  MaskTensors m{Tensor(cc.confidence_channels, grid.map_h, grid.map_w),
                Tensor(cc.paf_channels, grid.map_h, grid.map_w)};
  for (int c = 0; c < cc.confidence_channels; ++c) {
    const auto g = topo.confidence_channel_group(c);
    fill(m.s_mask, c, !g || scene.coverage.contains(*g));
  }
  for (int l = 0; l < topo.limb_count(); ++l) {
    const bool covered = scene.coverage.contains(topo.limb_group(l));
    fill(m.l_mask, 2 * l, covered);
    fill(m.l_mask, 2 * l + 1, covered);
  }
  return m;
}

inline TargetTensors encode(const AnnotatedScene& scene, const SkeletonTopology& topo,
                            const EncoderParams& params = {}) {
  validate_scene(scene, topo);
  TargetTensors t;
  t.grid = grid_for_image(scene.image_w, scene.image_h, params.stride);
  t.s_star = encode_confidence(scene, topo, params);
  t.l_star = encode_paf(scene, topo, params);
  auto masks = encode_masks(scene, topo, params);
  t.s_mask = std::move(masks.s_mask);
  t.l_mask = std::move(masks.l_mask);
  return t;
}

}  // namespace wbpose
