#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "wbpose/error.hpp"
#include "wbpose/skeleton.hpp"

namespace wbpose {

enum class Visibility : std::uint8_t { Labeled, Occluded, Missing };

struct Keypoint {
  double x = 0.0;
  double y = 0.0;
  Visibility vis = Visibility::Labeled;

  bool present() const noexcept { return vis != Visibility::Missing; }
  friend bool operator==(const Keypoint&, const Keypoint&) = default;
};

/// One annotated person: part id -> keypoint. Absent ids count as Missing.
struct Person {
  std::map<int, Keypoint> parts;

  const Keypoint* find(int part_id) const {
    auto it = parts.find(part_id);
    return it == parts.end() || !it->second.present() ? nullptr : &it->second;
  }
  friend bool operator==(const Person&, const Person&) = default;
};

/// Axis-aligned box in input pixels, closed on all sides.
struct Box {
  double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;

  bool contains(double x, double y) const noexcept {
    return x >= x0 && x <= x1 && y >= y0 && y <= y1;
  }
  Box dilated(double r) const noexcept { return {x0 - r, y0 - r, x1 + r, y1 + r}; }
  friend bool operator==(const Box&, const Box&) = default;
};

/// Euclidean gap between two boxes; 0 when they touch or overlap.
inline double box_distance(const Box& a, const Box& b) {
  const double dx = std::max({0.0, a.x0 - b.x1, b.x0 - a.x1});
  const double dy = std::max({0.0, a.y0 - b.y1, b.y0 - a.y1});
  return std::sqrt(dx * dx + dy * dy);
}

struct AnnotatedScene {
  std::string id;
  int image_w = 0;
  int image_h = 0;
  std::vector<Person> people;
  GroupSet coverage;
  std::vector<Box> unlabeled_regions;
  bool no_people = false;

  friend bool operator==(const AnnotatedScene&, const AnnotatedScene&) = default;
};

/// Bounding box of a person's present keypoints; false if none are present.
inline bool person_bbox(const Person& p, Box& out) {
  bool any = false;
  for (const auto& [id, kp] : p.parts) {
    if (!kp.present()) continue;
    if (!any) {
      out = {kp.x, kp.y, kp.x, kp.y};
      any = true;
    } else {
      out.x0 = std::min(out.x0, kp.x);
      out.y0 = std::min(out.y0, kp.y);
      out.x1 = std::max(out.x1, kp.x);
      out.y1 = std::max(out.y1, kp.y);
    }
  }
  return any;
}

inline void validate_scene(const AnnotatedScene& s, const SkeletonTopology& topo) {
  const std::string where = "scene '" + s.id + "'";
  if (s.image_w <= 0 || s.image_h <= 0)
    throw Error(ErrorKind::GridTooSmall, where + " has an empty image");
  if (s.no_people && (!s.people.empty() || !s.unlabeled_regions.empty()))
    throw Error(ErrorKind::InvalidFormat, where + " is marked no_people but has people");
  for (const auto& person : s.people)
    for (const auto& [id, kp] : person.parts) {
      if (id < 0 || id >= topo.part_count())
        throw Error(ErrorKind::UnknownPart, where + " references part " + std::to_string(id));
      if (kp.present() && (kp.x < 0 || kp.y < 0 || kp.x > s.image_w || kp.y > s.image_h))
        throw Error(ErrorKind::InvalidFormat,
                    where + ": part " + std::to_string(id) + " lies outside the image");
    }
}

}  // namespace wbpose
