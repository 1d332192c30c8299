#pragma once

#include <array>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "wbpose/default_manifest.hpp"
#include "wbpose/error.hpp"
#include "wbpose/hash.hpp"

namespace wbpose {

/// The four annotation tasks a whole-body skeleton is split into.
enum class PartGroup : std::uint8_t { Body = 0, Foot = 1, Face = 2, Hand = 3 };

inline constexpr std::array<PartGroup, 4> kAllGroups = {PartGroup::Body, PartGroup::Foot,
                                                        PartGroup::Face, PartGroup::Hand};

constexpr std::string_view to_string(PartGroup g) {
  switch (g) {
    case PartGroup::Body: return "body";
    case PartGroup::Foot: return "foot";
    case PartGroup::Face: return "face";
    case PartGroup::Hand: return "hand";
  }
  return "?";
}

inline std::optional<PartGroup> parse_group(std::string_view s) {
  for (auto g : kAllGroups)
    if (to_string(g) == s) return g;
  return std::nullopt;
}

/// Small bitset over PartGroup, used for dataset coverage and evaluation subsets.
class GroupSet {
 public:
  constexpr GroupSet() = default;
  constexpr GroupSet(std::initializer_list<PartGroup> groups) {
    for (auto g : groups) insert(g);
  }
  static constexpr GroupSet all() { return GroupSet{0x0f}; }

  constexpr void insert(PartGroup g) { bits_ |= bit(g); }
  constexpr void erase(PartGroup g) { bits_ &= static_cast<std::uint8_t>(~bit(g)); }
  constexpr bool contains(PartGroup g) const { return (bits_ & bit(g)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool is_all() const { return bits_ == 0x0f; }

  std::vector<PartGroup> members() const {
    std::vector<PartGroup> out;
    for (auto g : kAllGroups)
      if (contains(g)) out.push_back(g);
    return out;
  }

  friend constexpr bool operator==(GroupSet, GroupSet) = default;

 private:
  constexpr explicit GroupSet(std::uint8_t bits) : bits_(bits) {}
  static constexpr std::uint8_t bit(PartGroup g) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(g));
  }
  std::uint8_t bits_ = 0;
};

enum class Side : std::uint8_t { Left, Right, Center };

struct Point2 {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point2&, const Point2&) = default;
};

struct Part {
  int id = 0;
  std::string name;
  PartGroup group = PartGroup::Body;
  Side side = Side::Center;
};

/// A PAF pair. Limb `id` owns PAF channels 2*id (x) and 2*id+1 (y).
struct Limb {
  int id = 0;
  int src = 0;
  int dst = 0;
};

/// A part shared by two groups; the seam along which group clusters merge.
struct Anchor {
  int part = 0;
  PartGroup group_a = PartGroup::Body;
  PartGroup group_b = PartGroup::Body;
};

struct ChannelCounts {
  int confidence_channels = 0;
  int paf_channels = 0;
  friend bool operator==(const ChannelCounts&, const ChannelCounts&) = default;
};

/// Validated, immutable skeleton description. Build with load_topology().
class SkeletonTopology {
 public:
  const std::vector<Part>& parts() const noexcept { return parts_; }
  const std::vector<Limb>& limbs() const noexcept { return limbs_; }
  const std::vector<Anchor>& anchors() const noexcept { return anchors_; }
  int part_count() const noexcept { return static_cast<int>(parts_.size()); }
  int limb_count() const noexcept { return static_cast<int>(limbs_.size()); }

  const Part& part(int id) const { return parts_.at(id); }
  const Limb& limb(int id) const { return limbs_.at(id); }
  PartGroup group_of(int part_id) const { return parts_.at(part_id).group; }
  double oks_kappa(int part_id) const { return kappa_.at(part_id); }

  bool background_channel() const noexcept { return background_; }
  const std::string& name() const noexcept { return name_; }
  std::uint64_t manifest_hash() const noexcept { return hash_; }

  /// Canonical pose used by the scene synthesizer; empty if the manifest has none.
  const std::vector<Point2>& template_pose() const noexcept { return template_; }

  /// A limb that crosses groups belongs to its non-body endpoint's group.
  PartGroup limb_group(int limb_id) const {
    const Limb& l = limbs_.at(limb_id);
    PartGroup a = group_of(l.src), b = group_of(l.dst);
    if (a == b) return a;
    return a == PartGroup::Body ? b : a;
  }

  /// Group owning a confidence channel, or nullopt for the background channel.
  std::optional<PartGroup> confidence_channel_group(int channel) const {
    if (channel < part_count()) return group_of(channel);
    return std::nullopt;
  }

  bool is_anchor(int part_id) const {
    for (const auto& a : anchors_)
      if (a.part == part_id) return true;
    return false;
  }

  bool is_anchor_between(int part_id, PartGroup a, PartGroup b) const {
    for (const auto& an : anchors_)
      if (an.part == part_id && ((an.group_a == a && an.group_b == b) ||
                                 (an.group_a == b && an.group_b == a)))
        return true;
    return false;
  }

  std::vector<int> parts_in(GroupSet groups) const {
    std::vector<int> out;
    for (const auto& p : parts_)
      if (groups.contains(p.group)) out.push_back(p.id);
    return out;
  }

  const nlohmann::json& manifest() const noexcept { return manifest_; }

 private:
  friend SkeletonTopology load_topology(const nlohmann::json& manifest);

  std::string name_;
  std::vector<Part> parts_;
  std::vector<Limb> limbs_;
  std::vector<Anchor> anchors_;
  std::vector<double> kappa_;
  std::vector<Point2> template_;
  bool background_ = true;
  std::uint64_t hash_ = 0;
  nlohmann::json manifest_;
};

inline ChannelCounts channel_counts(const SkeletonTopology& t) {
  return {t.part_count() + (t.background_channel() ? 1 : 0), 2 * t.limb_count()};
}

namespace detail {

inline double default_kappa(PartGroup g) {
  switch (g) {
    case PartGroup::Face: return 0.025;
    case PartGroup::Hand: return 0.035;
    default: return 0.079;
  }
}

inline PartGroup require_group(const nlohmann::json& j, std::string_view where) {
  if (!j.is_string()) throw Error(ErrorKind::InvalidManifest, std::string(where) + ": group not a string");
  auto g = parse_group(j.get<std::string>());
  if (!g) throw Error(ErrorKind::InvalidManifest, std::string(where) + ": unknown group '" +
                                                    j.get<std::string>() + "'");
  return *g;
}

inline Side parse_side(const nlohmann::json& j) {
  const std::string s = j.is_string() ? j.get<std::string>() : "center";
  if (s == "left") return Side::Left;
  if (s == "right") return Side::Right;
  if (s == "center") return Side::Center;
  throw Error(ErrorKind::InvalidManifest, "unknown side '" + s + "'");
}

}  // namespace detail

/// Parses and validates a topology manifest.
///
/// Connectivity is checked on the graph whose edges are same-group limbs plus
/// cross-group limbs touching a declared anchor for that group pair; every part
/// must be reachable from the first body part (or part 0 without a body group).
inline SkeletonTopology load_topology(const nlohmann::json& m) try {
  using nlohmann::json;
  if (!m.is_object()) throw Error(ErrorKind::InvalidManifest, "manifest is not an object");
  if (m.value("manifest_version", 1) != 1)
    throw Error(ErrorKind::InvalidManifest, "unsupported manifest_version");
  if (!m.contains("parts") || !m["parts"].is_array() || m["parts"].empty())
    throw Error(ErrorKind::InvalidManifest, "manifest needs a non-empty 'parts' array");

  SkeletonTopology t;
  t.name_ = m.value("name", std::string("unnamed"));
  t.background_ = m.value("background_channel", true);

  const auto& jparts = m["parts"];
  const int n = static_cast<int>(jparts.size());
  std::vector<std::optional<Part>> slots(n);
  for (const auto& jp : jparts) {
    const int id = jp.at("id").get<int>();
    if (id < 0 || id >= n)
      throw Error(ErrorKind::InvalidManifest, "part id " + std::to_string(id) + " outside 0.." +
                                                  std::to_string(n - 1));
    if (slots[id]) throw Error(ErrorKind::DuplicatePart, "part id " + std::to_string(id));
    slots[id] = Part{id, jp.value("name", "part_" + std::to_string(id)),
                     detail::require_group(jp.at("group"), "part " + std::to_string(id)),
                     detail::parse_side(jp.value("side", json("center")))};
  }
  for (auto& s : slots) t.parts_.push_back(std::move(*s));

  if (m.contains("limbs")) {
    const auto& jl = m["limbs"];
    std::vector<std::optional<Limb>> limbs(jl.size());
    for (const auto& l : jl) {
      const int id = l.at("id").get<int>();
      if (id < 0 || id >= static_cast<int>(jl.size()) || limbs[id])
        throw Error(ErrorKind::InvalidManifest, "limb ids must be unique and contiguous");
      const int src = l.at("src").get<int>(), dst = l.at("dst").get<int>();
      for (int p : {src, dst})
        if (p < 0 || p >= n)
          throw Error(ErrorKind::UnknownPart,
                      "limb " + std::to_string(id) + " references part " + std::to_string(p));
      if (src == dst)
        throw Error(ErrorKind::InvalidManifest, "limb " + std::to_string(id) + " is a self loop");
      limbs[id] = Limb{id, src, dst};
    }
    for (auto& l : limbs) t.limbs_.push_back(*l);
  }

  if (m.contains("anchors")) {
    for (const auto& a : m["anchors"]) {
      const int p = a.at("part").get<int>();
      if (p < 0 || p >= n) throw Error(ErrorKind::UnknownPart, "anchor part " + std::to_string(p));
      const auto& gs = a.at("groups");
      if (!gs.is_array() || gs.size() != 2)
        throw Error(ErrorKind::InvalidManifest, "anchor groups must be a pair");
      Anchor an{p, detail::require_group(gs[0], "anchor"), detail::require_group(gs[1], "anchor")};
      if (an.group_a == an.group_b)
        throw Error(ErrorKind::InvalidManifest, "anchor joins a group to itself");
      const PartGroup own = t.parts_[p].group;
      if (own != an.group_a && own != an.group_b)
        throw Error(ErrorKind::InvalidManifest,
                    "anchor part " + std::to_string(p) + " is not in either of its groups");
      t.anchors_.push_back(an);
    }
  }

  t.kappa_.resize(n);
  for (int i = 0; i < n; ++i) t.kappa_[i] = detail::default_kappa(t.parts_[i].group);
  if (m.contains("oks_kappa")) {
    for (const auto& [key, value] : m["oks_kappa"].items()) {
      const int id = std::stoi(key);
      if (id < 0 || id >= n) throw Error(ErrorKind::UnknownPart, "oks_kappa for part " + key);
      const double k = value.get<double>();
      if (!(k > 0.0)) throw Error(ErrorKind::NonPositiveKappa, "part " + key);
      t.kappa_[id] = k;
    }
  }

  if (m.contains("template")) {
    t.template_.assign(n, Point2{});
    std::vector<bool> seen(n, false);
    for (const auto& [key, value] : m["template"].items()) {
      const int id = std::stoi(key);
      if (id < 0 || id >= n) throw Error(ErrorKind::UnknownPart, "template for part " + key);
      t.template_[id] = {value.at(0).get<double>(), value.at(1).get<double>()};
      seen[id] = true;
    }
    for (int i = 0; i < n; ++i)
      if (!seen[i])
        throw Error(ErrorKind::InvalidManifest, "template misses part " + std::to_string(i));
  }

  // Reachability over the anchor-gated limb graph.
  std::vector<std::vector<int>> adj(n);
  for (const auto& l : t.limbs_) {
    const PartGroup a = t.parts_[l.src].group, b = t.parts_[l.dst].group;
    const bool gated = a == b || t.is_anchor_between(l.src, a, b) || t.is_anchor_between(l.dst, a, b);
    if (!gated) continue;
    adj[l.src].push_back(l.dst);
    adj[l.dst].push_back(l.src);
  }
  int seed = 0;
  for (const auto& p : t.parts_)
    if (p.group == PartGroup::Body) {
      seed = p.id;
      break;
    }
  std::vector<bool> reached(n, false);
  std::queue<int> frontier;
  frontier.push(seed);
  reached[seed] = true;
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (int v : adj[u])
      if (!reached[v]) {
        reached[v] = true;
        frontier.push(v);
      }
  }
  for (int i = 0; i < n; ++i)
    if (!reached[i])
      throw Error(ErrorKind::DisconnectedGroup,
                  "part " + std::to_string(i) + " (" + t.parts_[i].name + ", group " +
                      std::string(to_string(t.parts_[i].group)) + ") is not reachable");

  t.manifest_ = m;
  t.hash_ = fnv1a64(m.dump());
  return t;
} catch (const nlohmann::json::exception& e) {
  throw Error(ErrorKind::InvalidManifest, e.what());
}

inline SkeletonTopology load_topology_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open manifest " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidManifest, path + ": " + e.what());
  }
  return load_topology(j);
}

/// The shipped 135-part whole-body topology (data/wholebody135.json).
inline const SkeletonTopology& default_topology() {
  static const SkeletonTopology topo =
      load_topology(nlohmann::json::parse(detail::kDefaultManifestJson));
  return topo;
}

}  // namespace wbpose
