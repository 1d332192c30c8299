#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wbpose/archmodel.hpp"
#include "wbpose/decoder.hpp"
#include "wbpose/error.hpp"
#include "wbpose/hash.hpp"
#include "wbpose/loss.hpp"
#include "wbpose/metrics.hpp"
#include "wbpose/scene.hpp"
#include "wbpose/scheduler.hpp"
#include "wbpose/synth.hpp"

namespace wbpose::io {

using nlohmann::json;

inline constexpr const char* kToolVersion = "0.1.0";

inline json provenance(const SkeletonTopology& topo, std::uint64_t seed) {
  return {{"tool_version", kToolVersion}, {"manifest_hash", hex64(topo.manifest_hash())}, {"seed", seed}};
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidFormat, path + ": " + e.what());
  }
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorKind::Io, "write failed for " + path);
}

inline void write_json_file(const std::string& path, const json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

// Groups ----------------------------------------------------------------------

inline json groups_to_json(GroupSet g) {
  json arr = json::array();
  for (auto m : g.members()) arr.push_back(std::string(to_string(m)));
  return arr;
}

inline GroupSet groups_from_json(const json& arr) {
  GroupSet g;
  for (const auto& v : arr) {
    auto pg = parse_group(v.get<std::string>());
    if (!pg) throw Error(ErrorKind::InvalidFormat, "unknown part group '" + v.get<std::string>() + "'");
    g.insert(*pg);
  }
  return g;
}

/// "body,foot" or "all".
inline GroupSet parse_group_list(const std::string& text) {
  if (text == "all" || text.empty()) return GroupSet::all();
  GroupSet g;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto pg = parse_group(item);
    if (!pg) throw Error(ErrorKind::InvalidFormat, "unknown part group '" + item + "'");
    g.insert(*pg);
  }
  return g;
}

// Scenes ----------------------------------------------------------------------

inline const char* to_string(Visibility v) {
  switch (v) {
    case Visibility::Labeled: return "labeled";
    case Visibility::Occluded: return "occluded";
    case Visibility::Missing: return "missing";
  }
  return "missing";
}

inline Visibility parse_visibility(const std::string& s) {
  if (s == "labeled") return Visibility::Labeled;
  if (s == "occluded") return Visibility::Occluded;
  if (s == "missing") return Visibility::Missing;
  throw Error(ErrorKind::InvalidFormat, "unknown visibility '" + s + "'");
}

inline json scene_to_json(const AnnotatedScene& s) {
  json people = json::array();
  for (const auto& p : s.people) {
    json parts = json::object();
    for (const auto& [id, kp] : p.parts) parts[std::to_string(id)] = {kp.x, kp.y, to_string(kp.vis)};
    people.push_back({{"parts", parts}});
  }
  json regions = json::array();
  for (const auto& b : s.unlabeled_regions) regions.push_back({b.x0, b.y0, b.x1, b.y1});
  return {{"id", s.id},
          {"image_size", {s.image_w, s.image_h}},
          {"coverage", groups_to_json(s.coverage)},
          {"no_people", s.no_people},
          {"people", people},
          {"unlabeled_regions", regions}};
}

inline AnnotatedScene scene_from_json(const json& j) {
  AnnotatedScene s;
  s.id = j.at("id").get<std::string>();
  s.image_w = j.at("image_size").at(0).get<int>();
  s.image_h = j.at("image_size").at(1).get<int>();
  s.coverage = groups_from_json(j.at("coverage"));
  s.no_people = j.value("no_people", false);
  for (const auto& jp : j.value("people", json::array())) {
    Person p;
    for (const auto& [key, v] : jp.at("parts").items()) {
      Keypoint kp{v.at(0).get<double>(), v.at(1).get<double>(),
                  v.size() > 2 ? parse_visibility(v.at(2).get<std::string>()) : Visibility::Labeled};
      p.parts[std::stoi(key)] = kp;
    }
    s.people.push_back(std::move(p));
  }
  for (const auto& b : j.value("unlabeled_regions", json::array()))
    s.unlabeled_regions.push_back(
        {b.at(0).get<double>(), b.at(1).get<double>(), b.at(2).get<double>(), b.at(3).get<double>()});
  return s;
}

inline json scenes_document(const std::vector<AnnotatedScene>& scenes, const json& prov) {
  json doc = prov;
  doc["scenes"] = json::array();
  for (const auto& s : scenes) doc["scenes"].push_back(scene_to_json(s));
  return doc;
}

inline std::vector<AnnotatedScene> scenes_from_document(const json& doc) try {
  std::vector<AnnotatedScene> out;
  for (const auto& j : doc.at("scenes")) out.push_back(scene_from_json(j));
  return out;
} catch (const json::exception& e) {
  throw Error(ErrorKind::InvalidFormat, std::string("scenes document: ") + e.what());
}

// Poses -----------------------------------------------------------------------

struct PoseDocument {
  std::map<std::string, PoseSet> poses;
  /// Optional per-pose "area" (groundtruth files); NaN when absent.
  std::map<std::string, std::vector<double>> areas;
};

inline json pose_to_json(const Pose& p) {
  json parts = json::object();
  for (const auto& [id, k] : p.parts) parts[std::to_string(id)] = {k.x, k.y, k.score};
  return {{"person_score", p.person_score}, {"parts", parts}};
}

inline json poses_document(const std::map<std::string, PoseSet>& poses, const json& prov) {
  json doc = prov;
  doc["poses"] = json::object();
  for (const auto& [id, set] : poses) {
    json arr = json::array();
    for (const auto& p : set) arr.push_back(pose_to_json(p));
    doc["poses"][id] = arr;
  }
  return doc;
}

inline PoseDocument poses_from_document(const json& doc) try {
  PoseDocument out;
  for (const auto& [id, arr] : doc.at("poses").items()) {
    PoseSet set;
    std::vector<double> areas;
    for (const auto& jp : arr) {
      Pose p;
      p.person_score = jp.value("person_score", 1.0);
      for (const auto& [key, v] : jp.at("parts").items())
        p.parts[std::stoi(key)] = {v.at(0).get<double>(), v.at(1).get<double>(),
                                   v.size() > 2 ? v.at(2).get<double>() : 1.0, -1};
      areas.push_back(jp.contains("area") ? jp["area"].get<double>()
                                          : std::numeric_limits<double>::quiet_NaN());
      set.push_back(std::move(p));
    }
    out.poses[id] = std::move(set);
    out.areas[id] = std::move(areas);
  }
  return out;
} catch (const json::exception& e) {
  throw Error(ErrorKind::InvalidFormat, std::string("poses document: ") + e.what());
}

// Recipes and reports ---------------------------------------------------------

inline json recipe_to_json(const SceneRecipe& r) {
  json missing = json::object();
  for (auto g : kAllGroups) missing[std::string(to_string(g))] = r.missing_prob[static_cast<int>(g)];
  return {{"n_people", r.n_people},       {"n_people_max", r.n_people_max},
          {"image_size", {r.image_w, r.image_h}},
          {"min_separation", r.min_separation},
          {"scale", {r.scale_min, r.scale_max}},
          {"coverage", groups_to_json(r.coverage)},
          {"missing_prob", missing},       {"occluded_prob", r.occluded_prob},
          {"rotation_deg", r.rotation_deg}, {"limb_jitter_deg", r.limb_jitter_deg},
          {"margin", r.margin},            {"max_attempts", r.max_attempts},
          {"seed", r.seed}};
}

/// Unknown keys are rejected so that typos do not silently fall back to defaults.
inline SceneRecipe recipe_from_json(const json& j) try {
  static const std::vector<std::string> known = {
      "n_people", "n_people_max", "image_size", "min_separation", "scale", "coverage",
      "missing_prob", "occluded_prob", "rotation_deg", "limb_jitter_deg", "margin",
      "max_attempts", "seed"};
  for (const auto& [k, v] : j.items())
    if (std::find(known.begin(), known.end(), k) == known.end())
      throw Error(ErrorKind::InvalidRecipe, "unknown recipe key '" + k + "'");
  SceneRecipe r;
  r.n_people = j.value("n_people", r.n_people);
  r.n_people_max = j.value("n_people_max", r.n_people_max);
  if (j.contains("image_size")) {
    r.image_w = j["image_size"].at(0).get<int>();
    r.image_h = j["image_size"].at(1).get<int>();
  }
  r.min_separation = j.value("min_separation", r.min_separation);
  if (j.contains("scale")) {
    r.scale_min = j["scale"].at(0).get<double>();
    r.scale_max = j["scale"].at(1).get<double>();
  }
  if (j.contains("coverage")) r.coverage = groups_from_json(j["coverage"]);
  if (j.contains("missing_prob")) {
    const auto& m = j["missing_prob"];
    if (m.is_number()) {
      r.missing_prob.fill(m.get<double>());
    } else {
      for (const auto& [k, v] : m.items()) {
        auto g = parse_group(k);
        if (!g) throw Error(ErrorKind::InvalidRecipe, "unknown group '" + k + "' in missing_prob");
        r.missing_prob[static_cast<int>(*g)] = v.get<double>();
      }
    }
  }
  r.occluded_prob = j.value("occluded_prob", r.occluded_prob);
  r.rotation_deg = j.value("rotation_deg", r.rotation_deg);
  r.limb_jitter_deg = j.value("limb_jitter_deg", r.limb_jitter_deg);
  r.margin = j.value("margin", r.margin);
  r.max_attempts = j.value("max_attempts", r.max_attempts);
  r.seed = j.value("seed", r.seed);
  return r;
} catch (const json::exception& e) {
  throw Error(ErrorKind::InvalidRecipe, e.what());
}

inline json report_to_json(const RoundtripReport& r) {
  return {{"scenes", r.scenes},
          {"people_total", r.people_total},
          {"people_found", r.people_found},
          {"unmatched_truth", r.unmatched_truth},
          {"spurious_poses", r.spurious_poses},
          {"cross_assignment_errors", r.cross_assignment_errors},
          {"missed_parts", r.missed_parts},
          {"extra_parts", r.extra_parts},
          {"scenes_bijective", r.scenes_bijective},
          {"parts_compared", r.parts_compared},
          {"error_px",
           {{"max", r.max_error_px},
            {"mean", r.mean_error_px},
            {"p50", r.p50_error_px},
            {"p90", r.p90_error_px},
            {"p99", r.p99_error_px}}},
          {"max_error_cells", r.max_error_cells},
          {"stride", r.stride},
          {"full_labeling", r.full_labeling},
          {"pass", r.passes()}};
}

inline json loss_to_json(const LossBreakdown& b) {
  json groups = json::object();
  for (auto g : kAllGroups) groups[std::string(to_string(g))] = b.per_group[static_cast<int>(g)];
  return {{"f_L", b.f_L_per_stage}, {"f_S", b.f_S_per_stage}, {"per_group", groups},
          {"background", b.background}, {"total", b.total}};
}

inline json eval_to_json(const EvalResult& r) {
  json per = json::array();
  for (const auto& [t, v] : r.per_threshold)
    per.push_back({{"oks", t}, {"ap", v.ap}, {"precision", v.precision}, {"recall", v.recall}});
  return {{"groups", groups_to_json(r.groups)}, {"ap", r.ap}, {"ar", r.ar}, {"per_threshold", per}};
}

/// threshold,rank,precision,recall
inline std::string pr_curves_csv(const EvalResult& r) {
  std::ostringstream os;
  os << "oks_threshold,rank,precision,recall\n";
  for (const auto& [t, curve] : r.pr_curves)
    for (std::size_t i = 0; i < curve.size(); ++i)
      os << t << ',' << i + 1 << ',' << curve[i].first << ',' << curve[i].second << "\n";
  return os.str();
}

inline json plan_entry_to_json(const PlanEntry& e, const Registry& registry) {
  json draws = json::array();
  for (const auto& d : e.draws)
    draws.push_back({{"scale", d.scale}, {"rotation_deg", d.rotation_deg}, {"flip", d.flip},
                     {"crop_u", d.crop_u}, {"crop_v", d.crop_v}});
  return {{"batch", e.batch_index}, {"dataset", registry.at(e.dataset).name},
          {"dataset_index", e.dataset}, {"augmentations", draws}};
}

inline json arch_to_json(const std::string& paf_spec, const std::string& cm_spec, const StageGraph& g) {
  const CostEstimate c = cost_estimate(g);
  auto stages = [](const std::vector<StageConfig>& v) {
    json arr = json::array();
    for (const auto& s : v)
      arr.push_back({{"blocks", s.blocks}, {"width", s.widths.empty() ? 0 : s.widths.front()},
                     {"in", s.input_channels}, {"out", s.output_channels}});
    return arr;
  };
  return {{"paf", paf_spec},
          {"cm", cm_spec},
          {"input_resolution", g.input_resolution},
          {"backbone_channels", g.backbone_channels},
          {"paf_stages", stages(g.paf_stages)},
          {"cm_stages", stages(g.cm_stages)},
          {"receptive_field", receptive_field(g)},
          {"params", c.params},
          {"macs", c.macs},
          {"backbone_macs", c.backbone_macs},
          {"paf_stage_macs", c.paf_stage_macs},
          {"cm_stage_macs", c.cm_stage_macs}};
}

}  // namespace wbpose::io
