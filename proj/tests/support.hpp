#pragma once

#include <cmath>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wbpose/scene.hpp"
#include "wbpose/skeleton.hpp"

namespace wbtest {

// Eight parts: neck, both wrists, hip (body) and two two-part hands hanging off
// the wrists. Wrists are the body/hand anchors.
inline nlohmann::json mini_manifest(bool background = false) {
  using nlohmann::json;
  json m;
  m["manifest_version"] = 1;
  m["name"] = "mini8";
  m["background_channel"] = background;
  m["parts"] = json::array({
      {{"id", 0}, {"name", "neck"}, {"group", "body"}},
      {{"id", 1}, {"name", "r_wrist"}, {"group", "body"}, {"side", "right"}},
      {{"id", 2}, {"name", "l_wrist"}, {"group", "body"}, {"side", "left"}},
      {{"id", 3}, {"name", "hip"}, {"group", "body"}},
      {{"id", 4}, {"name", "r_hand_a"}, {"group", "hand"}, {"side", "right"}},
      {{"id", 5}, {"name", "r_hand_b"}, {"group", "hand"}, {"side", "right"}},
      {{"id", 6}, {"name", "l_hand_a"}, {"group", "hand"}, {"side", "left"}},
      {{"id", 7}, {"name", "l_hand_b"}, {"group", "hand"}, {"side", "left"}},
  });
  m["limbs"] = json::array({
      {{"id", 0}, {"src", 0}, {"dst", 1}},
      {{"id", 1}, {"src", 0}, {"dst", 2}},
      {{"id", 2}, {"src", 0}, {"dst", 3}},
      {{"id", 3}, {"src", 1}, {"dst", 4}},
      {{"id", 4}, {"src", 4}, {"dst", 5}},
      {{"id", 5}, {"src", 2}, {"dst", 6}},
      {{"id", 6}, {"src", 6}, {"dst", 7}},
  });
  m["anchors"] = json::array({
      {{"part", 1}, {"groups", {"body", "hand"}}},
      {{"part", 2}, {"groups", {"body", "hand"}}},
  });
  m["template"] = {{"0", {0.0, -0.4}},  {"1", {-0.3, 0.0}}, {"2", {0.3, 0.0}},   {"3", {0.0, 0.4}},
                   {"4", {-0.35, 0.1}}, {"5", {-0.4, 0.2}}, {"6", {0.35, 0.1}}, {"7", {0.4, 0.2}}};
  return m;
}

inline const wbpose::SkeletonTopology& mini_topology() {
  static const wbpose::SkeletonTopology t = wbpose::load_topology(mini_manifest());
  return t;
}

inline wbpose::Person person(std::initializer_list<std::pair<int, std::pair<double, double>>> parts) {
  wbpose::Person p;
  for (const auto& [id, xy] : parts) p.parts[id] = {xy.first, xy.second, wbpose::Visibility::Labeled};
  return p;
}

// Upper tail of the Kolmogorov distribution, P(K > x).
inline double kolmogorov_q(double x) {
  if (x < 1e-3) return 1.0;
  double sum = 0.0;
  for (int k = 1; k <= 200; ++k) {
    const double term = std::exp(-2.0 * k * k * x * x);
    sum += (k % 2 ? 1.0 : -1.0) * term;
    if (term < 1e-16) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

// One-sample KS test of `xs` against uniform[lo, hi]; returns the p-value.
inline double ks_uniform_p(std::vector<double> xs, double lo, double hi) {
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = (xs[i] - lo) / (hi - lo);
    d = std::max({d, (i + 1) / n - f, f - i / n});
  }
  const double sn = std::sqrt(n);
  return kolmogorov_q(d * (sn + 0.12 + 0.11 / sn));
}

}  // namespace wbtest
