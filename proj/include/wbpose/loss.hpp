#pragma once

#include <array>
#include <vector>

#include "wbpose/encoder.hpp"
#include "wbpose/skeleton.hpp"
#include "wbpose/tensor.hpp"

namespace wbpose {

/// Per-channel masked squared error, each channel summed in row-major order.
template <typename T>
std::vector<double> masked_l2_per_channel(const BasicTensor<T>& pred, const BasicTensor<T>& gt,
                                          const BasicTensor<T>& mask) {
  require_same_shape(pred, gt, "masked_l2 pred/gt");
  require_same_shape(pred, mask, "masked_l2 pred/mask");
  std::vector<double> out(pred.channels(), 0.0);
  for (int c = 0; c < pred.channels(); ++c) {
    auto p = pred.plane(c), g = gt.plane(c), w = mask.plane(c);
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const double d = static_cast<double>(p[i]) - static_cast<double>(g[i]);
      acc += static_cast<double>(w[i]) * d * d;
    }
    out[c] = acc;
  }
  return out;
}

/// Sum over channels and pixels of W * (pred - gt)^2. For PAF tensors the two
/// components of a limb sit in adjacent channels, so this is the squared norm.
template <typename T>
double masked_l2(const BasicTensor<T>& pred, const BasicTensor<T>& gt, const BasicTensor<T>& mask) {
  double total = 0.0;
  for (double v : masked_l2_per_channel(pred, gt, mask)) total += v;
  return total;
}

/// d/d(pred) of masked_l2: 2 * W * (pred - gt).
template <typename T>
BasicTensor<T> loss_gradient(const BasicTensor<T>& pred, const BasicTensor<T>& gt,
                             const BasicTensor<T>& mask) {
  require_same_shape(pred, gt, "loss_gradient pred/gt");
  require_same_shape(pred, mask, "loss_gradient pred/mask");
  BasicTensor<T> grad(pred.channels(), pred.height(), pred.width());
  auto p = pred.data(), g = gt.data(), w = mask.data();
  auto out = grad.data();
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = T(2) * w[i] * (p[i] - g[i]);
  return grad;
}

/// Network outputs at the end of every stage: F PAF stages then C confidence stages.
template <typename T>
struct StagePredictions {
  std::vector<BasicTensor<T>> paf_stages;
  std::vector<BasicTensor<T>> cm_stages;
};

struct LossBreakdown {
  std::vector<double> f_L_per_stage;
  std::vector<double> f_S_per_stage;
  std::array<double, 4> per_group{};  // indexed by PartGroup
  double background = 0.0;
  double total = 0.0;
};

/// Target tensors in the prediction's scalar type.
template <typename T>
struct BasicTargets {
  BasicTensor<T> s_star, l_star, s_mask, l_mask;
};

inline BasicTargets<float> as_targets(const TargetTensors& t) {
  return {t.s_star, t.l_star, t.s_mask, t.l_mask};
}

/// Multi-stage masked loss: every PAF stage against L*, every confidence stage
/// against S*. Group attribution follows the topology's channel ownership.
template <typename T>
LossBreakdown multitask_loss(const StagePredictions<T>& preds, const BasicTargets<T>& targets,
                             const SkeletonTopology& topo) {
  if (preds.paf_stages.empty() || preds.cm_stages.empty())
    throw Error(ErrorKind::StageCountZero, "need at least one PAF and one confidence stage");
  const ChannelCounts cc = channel_counts(topo);
  if (targets.s_star.channels() != cc.confidence_channels ||
      targets.l_star.channels() != cc.paf_channels)
    throw Error(ErrorKind::ChannelMismatch, "targets do not match the topology channel layout");

  LossBreakdown out;
  for (const auto& stage : preds.paf_stages) {
    const auto per = masked_l2_per_channel(stage, targets.l_star, targets.l_mask);
    double sum = 0.0;
    for (std::size_t c = 0; c < per.size(); ++c) {
      sum += per[c];
      out.per_group[static_cast<int>(topo.limb_group(static_cast<int>(c) / 2))] += per[c];
    }
    out.f_L_per_stage.push_back(sum);
  }
  for (const auto& stage : preds.cm_stages) {
    const auto per = masked_l2_per_channel(stage, targets.s_star, targets.s_mask);
    double sum = 0.0;
    for (std::size_t c = 0; c < per.size(); ++c) {
      sum += per[c];
      if (auto g = topo.confidence_channel_group(static_cast<int>(c)))
        out.per_group[static_cast<int>(*g)] += per[c];
      else
        out.background += per[c];
    }
    out.f_S_per_stage.push_back(sum);
  }
  for (double v : out.f_L_per_stage) out.total += v;
  for (double v : out.f_S_per_stage) out.total += v;
  return out;
}

}  // namespace wbpose
