#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wbpose/error.hpp"
#include "wbpose/scene.hpp"
#include "wbpose/skeleton.hpp"

namespace wbpose::io {

/// Which COCO category to read and where its keypoints land in the topology.
struct CocoMapping {
  int category_id = 1;
  std::vector<int> keypoint_parts;  // COCO keypoint index -> part id
  GroupSet coverage;
};

/// COCO person keypoints (nose, eyes, ears, shoulders, elbows, wrists, hips,
/// knees, ankles) onto BODY_25 ids.
inline CocoMapping default_coco_mapping() {
  CocoMapping m;
  m.keypoint_parts = {0, 16, 15, 18, 17, 5, 2, 6, 3, 7, 4, 12, 9, 13, 10, 14, 11};
  m.coverage.insert(PartGroup::Body);
  return m;
}

inline CocoMapping coco_mapping_from_json(const nlohmann::json& j) try {
  CocoMapping m;
  m.category_id = j.value("category_id", 1);
  m.keypoint_parts = j.at("keypoint_parts").get<std::vector<int>>();
  for (const auto& g : j.at("coverage")) {
    auto pg = parse_group(g.get<std::string>());
    if (!pg) throw Error(ErrorKind::InvalidFormat, "unknown group in COCO mapping");
    m.coverage.insert(*pg);
  }
  return m;
} catch (const nlohmann::json::exception& e) {
  throw Error(ErrorKind::InvalidFormat, std::string("COCO mapping: ") + e.what());
}

/// One scene per image, in "images" order. Crowd annotations and annotations
/// without a single labeled keypoint become unlabeled regions (their bbox);
/// images without any annotation become no-people scenes.
inline std::vector<AnnotatedScene> ingest_coco(const nlohmann::json& coco, const SkeletonTopology& topo,
                                               const CocoMapping& mapping = default_coco_mapping()) try {
  for (int id : mapping.keypoint_parts)
    if (id < 0 || id >= topo.part_count())
      throw Error(ErrorKind::UnknownPart, "COCO mapping references part " + std::to_string(id));

  std::vector<AnnotatedScene> scenes;
  std::map<std::int64_t, std::size_t> by_image;
  for (const auto& img : coco.at("images")) {
    AnnotatedScene s;
    const auto id = img.at("id").get<std::int64_t>();
    s.id = std::to_string(id);
    s.image_w = img.at("width").get<int>();
    s.image_h = img.at("height").get<int>();
    s.coverage = mapping.coverage;
    s.no_people = true;
    by_image[id] = scenes.size();
    scenes.push_back(std::move(s));
  }

  const std::size_t n_kp = mapping.keypoint_parts.size();
  for (const auto& ann : coco.value("annotations", nlohmann::json::array())) {
    const auto image_id = ann.at("image_id").get<std::int64_t>();
    auto it = by_image.find(image_id);
    if (it == by_image.end())
      throw Error(ErrorKind::InvalidFormat, "annotation for unknown image " + std::to_string(image_id));
    AnnotatedScene& s = scenes[it->second];
    const int category = ann.at("category_id").get<int>();
    if (category != mapping.category_id)
      throw Error(ErrorKind::UnknownCategory, "category " + std::to_string(category) + " in image " + s.id);
    s.no_people = false;

    Box bbox{};
    if (ann.contains("bbox")) {
      const auto& b = ann["bbox"];
      bbox = {b.at(0).get<double>(), b.at(1).get<double>(),
              b.at(0).get<double>() + b.at(2).get<double>(), b.at(1).get<double>() + b.at(3).get<double>()};
    }
    if (ann.value("iscrowd", 0) != 0) {
      s.unlabeled_regions.push_back(bbox);
      continue;
    }
    const auto kps = ann.value("keypoints", std::vector<double>{});
    if (kps.size() != 3 * n_kp)
      throw Error(ErrorKind::KeypointCountMismatch,
                  "annotation in image " + s.id + " has " + std::to_string(kps.size()) +
                      " keypoint values, expected " + std::to_string(3 * n_kp));
    Person p;
    for (std::size_t k = 0; k < n_kp; ++k) {
      const int v = static_cast<int>(kps[3 * k + 2]);
      if (v == 0) continue;
      const double x = std::clamp(kps[3 * k], 0.0, static_cast<double>(s.image_w));
      const double y = std::clamp(kps[3 * k + 1], 0.0, static_cast<double>(s.image_h));
      p.parts[mapping.keypoint_parts[k]] = {x, y, v == 2 ? Visibility::Labeled : Visibility::Occluded};
    }
    if (p.parts.empty()) s.unlabeled_regions.push_back(bbox);
    else s.people.push_back(std::move(p));
  }
  return scenes;
} catch (const nlohmann::json::exception& e) {
  throw Error(ErrorKind::InvalidFormat, std::string("COCO file: ") + e.what());
}

}  // namespace wbpose::io
