#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "wbpose/error.hpp"
#include "wbpose/hash.hpp"
#include "wbpose/rng.hpp"
#include "wbpose/skeleton.hpp"

namespace wbpose {

struct AugmentationRanges {
  double scale_min = 1.0 / 3.0;
  double scale_max = 1.5;
  double rotation_deg = 45.0;  // symmetric: [-rotation_deg, +rotation_deg]
  double flip_prob = 0.5;
  int crop_w = 480;
  int crop_h = 480;
};

enum class DatasetKind : std::uint8_t { Normal, NoPeople };

struct DatasetSpec {
  std::string name;
  std::int64_t size = 0;  // image count; 0 when not tracked
  GroupSet coverage;
  double probability = 0.0;
  AugmentationRanges aug;
  DatasetKind special = DatasetKind::Normal;
};

using Registry = std::vector<DatasetSpec>;

/// The training mixture: COCO 76.5% (plus the 0.01% rounding residual), foot
/// 5%, MPII 5%, three face sets 0.33% each, Dome hand 0.5%, MPII hand 5%,
/// whole-body 5%, people-free COCO 2%.
inline Registry default_registry() {
  const GroupSet body{PartGroup::Body};
  const GroupSet face{PartGroup::Face};
  const GroupSet hand{PartGroup::Hand};
  Registry r = {
      {"coco", 0, body, 0.765, {}, DatasetKind::Normal},
      {"coco_foot", 0, {PartGroup::Body, PartGroup::Foot}, 0.05, {}, DatasetKind::Normal},
      {"mpii", 0, body, 0.05, {}, DatasetKind::Normal},
      {"multipie_face", 0, face, 0.0033, {}, DatasetKind::Normal},
      {"frgc_face", 0, face, 0.0033, {}, DatasetKind::Normal},
      {"ibug_face", 0, face, 0.0033, {}, DatasetKind::Normal},
      {"dome_hand", 0, hand, 0.005, {}, DatasetKind::Normal},
      {"mpii_hand", 0, hand, 0.05, {}, DatasetKind::Normal},
      {"whole_body", 0, GroupSet::all(), 0.05, {}, DatasetKind::Normal},
      {"coco_no_people", 0, {}, 0.02, {}, DatasetKind::NoPeople},
  };
  r[6].aug.scale_min = 2.0 / 3.0;
  r[6].aug.scale_max = 4.5;
  r[7].aug.scale_min = 0.5;
  r[7].aug.scale_max = 4.0;
  double sum = 0.0;
  for (const auto& d : r) sum += d.probability;
  r[0].probability += 1.0 - sum;
  return r;
}

inline void validate_registry(const Registry& r) {
  if (r.empty()) throw Error(ErrorKind::EmptyRegistry, "registry has no datasets");
  double sum = 0.0;
  for (const auto& d : r) {
    if (d.probability < 0.0 || d.probability > 1.0)
      throw Error(ErrorKind::InvalidRegistry, d.name + ": probability outside [0,1]");
    const auto& a = d.aug;
    if (!(a.scale_min > 0.0) || a.scale_max < a.scale_min || a.rotation_deg < 0.0 ||
        a.flip_prob < 0.0 || a.flip_prob > 1.0 || a.crop_w <= 0 || a.crop_h <= 0)
      throw Error(ErrorKind::InvalidRegistry, d.name + ": invalid augmentation ranges");
    sum += d.probability;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw Error(ErrorKind::InvalidRegistry, "probabilities sum to " + std::to_string(sum));
}

/// Picks the dataset of the next batch by inverse CDF over registry order.
/// Returns the dataset index and the advanced state.
inline std::pair<std::size_t, RngState> next_batch(const Registry& registry, RngState state) {
  if (registry.empty()) throw Error(ErrorKind::EmptyRegistry, "registry has no datasets");
  const double u = next_unit(state);
  double cdf = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < registry.size(); ++i) {
    if (registry[i].probability <= 0.0) continue;
    last_positive = i;
    cdf += registry[i].probability;
    if (u < cdf) return {i, state};
  }
  return {last_positive, state};
}

struct AugmentationDraw {
  double scale = 1.0;
  double rotation_deg = 0.0;
  bool flip = false;
  double crop_u = 0.0;  // crop placement as a fraction of the free range, per axis
  double crop_v = 0.0;

  friend bool operator==(const AugmentationDraw&, const AugmentationDraw&) = default;
};

inline std::pair<AugmentationDraw, RngState> draw_augmentation(const DatasetSpec& spec,
                                                               RngState state) {
  AugmentationDraw d;
  const auto& a = spec.aug;
  d.scale = next_uniform(state, a.scale_min, a.scale_max);
  d.rotation_deg = next_uniform(state, -a.rotation_deg, a.rotation_deg);
  d.flip = next_unit(state) < a.flip_prob;
  d.crop_u = next_unit(state);
  d.crop_v = next_unit(state);
  return {d, state};
}

/// Pixel offset of the crop window in an image of the given (augmented) size;
/// uniform over every placement that keeps the window inside, or centred when
/// the image is smaller than the window.
inline std::pair<int, int> crop_offset(const AugmentationDraw& d, int image_w, int image_h,
                                       const AugmentationRanges& a) {
  auto axis = [](double u, int image, int crop) {
    if (image <= crop) return (image - crop) / 2;
    return static_cast<int>(std::floor(u * (image - crop + 1)));
  };
  return {axis(d.crop_u, image_w, a.crop_w), axis(d.crop_v, image_h, a.crop_h)};
}

/// Per-channel loss mask default for a dataset, before any region carving.
struct MaskPolicy {
  std::vector<bool> confidence;
  std::vector<bool> paf;
};

inline MaskPolicy mask_policy(const DatasetSpec& spec, const SkeletonTopology& topo) {
  const bool all_on = spec.special == DatasetKind::NoPeople;
  const ChannelCounts cc = channel_counts(topo);
  MaskPolicy m;
  for (int c = 0; c < cc.confidence_channels; ++c) {
    const auto g = topo.confidence_channel_group(c);
    m.confidence.push_back(all_on || !g || spec.coverage.contains(*g));
  }
  for (int c = 0; c < cc.paf_channels; ++c)
    m.paf.push_back(all_on || spec.coverage.contains(topo.limb_group(c / 2)));
  return m;
}

struct PlanEntry {
  int batch_index = 0;
  std::size_t dataset = 0;
  std::vector<AugmentationDraw> draws;

  friend bool operator==(const PlanEntry&, const PlanEntry&) = default;
};

/// Batch `batch_index` of a plan; depends on (seed, batch_index) only.
inline PlanEntry plan_batch(const Registry& registry, std::uint64_t seed, int batch_index,
                            int batch_size) {
  RngState state = split(seed, static_cast<std::uint64_t>(batch_index));
  PlanEntry e;
  e.batch_index = batch_index;
  std::tie(e.dataset, state) = next_batch(registry, state);
  for (int i = 0; i < batch_size; ++i) {
    AugmentationDraw d;
    std::tie(d, state) = draw_augmentation(registry[e.dataset], state);
    e.draws.push_back(d);
  }
  return e;
}

inline std::vector<PlanEntry> sample_plan(const Registry& registry, std::uint64_t seed,
                                          int n_batches, int batch_size) {
  validate_registry(registry);
  std::vector<PlanEntry> plan;
  plan.reserve(n_batches);
  for (int b = 0; b < n_batches; ++b) plan.push_back(plan_batch(registry, seed, b, batch_size));
  return plan;
}

// JSON config -----------------------------------------------------------------

inline nlohmann::json registry_to_json(const Registry& r) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& d : r) {
    nlohmann::json cov = nlohmann::json::array();
    for (auto g : d.coverage.members()) cov.push_back(std::string(to_string(g)));
    arr.push_back({{"name", d.name},
                   {"size", d.size},
                   {"coverage", cov},
                   {"probability", d.probability},
                   {"aug",
                    {{"scale", {d.aug.scale_min, d.aug.scale_max}},
                     {"rotation", d.aug.rotation_deg},
                     {"flip_prob", d.aug.flip_prob},
                     {"crop", {d.aug.crop_w, d.aug.crop_h}}}},
                   {"special", d.special == DatasetKind::NoPeople ? "no_people" : "normal"}});
  }
  return {{"datasets", arr}};
}

inline Registry registry_from_json(const nlohmann::json& j) try {
  Registry r;
  for (const auto& jd : j.at("datasets")) {
    DatasetSpec d;
    d.name = jd.at("name").get<std::string>();
    d.size = jd.value("size", std::int64_t{0});
    for (const auto& g : jd.at("coverage")) {
      auto pg = parse_group(g.get<std::string>());
      if (!pg) throw Error(ErrorKind::InvalidRegistry, d.name + ": unknown group");
      d.coverage.insert(*pg);
    }
    d.probability = jd.at("probability").get<double>();
    if (jd.contains("aug")) {
      const auto& a = jd["aug"];
      if (a.contains("scale")) {
        d.aug.scale_min = a["scale"].at(0).get<double>();
        d.aug.scale_max = a["scale"].at(1).get<double>();
      }
      d.aug.rotation_deg = a.value("rotation", d.aug.rotation_deg);
      d.aug.flip_prob = a.value("flip_prob", d.aug.flip_prob);
      if (a.contains("crop")) {
        d.aug.crop_w = a["crop"].at(0).get<int>();
        d.aug.crop_h = a["crop"].at(1).get<int>();
      }
    }
    const std::string special = jd.value("special", std::string("normal"));
    if (special == "no_people") d.special = DatasetKind::NoPeople;
    else if (special != "normal") throw Error(ErrorKind::InvalidRegistry, d.name + ": bad special");
    r.push_back(std::move(d));
  }
  validate_registry(r);
  return r;
} catch (const nlohmann::json::exception& e) {
  throw Error(ErrorKind::InvalidRegistry, e.what());
}

inline std::uint64_t registry_hash(const Registry& r) { return fnv1a64(registry_to_json(r).dump()); }

}  // namespace wbpose
