#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "wbpose/error.hpp"
#include "wbpose/skeleton.hpp"

namespace wbpose {

/// One row half of an architecture table entry, e.g. "3s, 8b, 96-256w".
struct StageSchedule {
  int stages = 1;
  int blocks = 1;
  std::vector<int> widths;  // one per stage
};

/// Parses "<s>s, <b>b, <w>w", "<s>s, <b>b, <w0>-<w1>w" (linear per-stage
/// interpolation, rounded) or an explicit list "<w0>:<w1>:...w".
inline StageSchedule parse_config(std::string_view spec) {
  static const std::regex re(R"(^\s*(\d+)\s*s\s*,\s*(\d+)\s*b\s*,\s*([0-9:\-]+)\s*w\s*$)");
  std::cmatch m;
  const std::string s(spec);
  if (!std::regex_match(s.c_str(), m, re))
    throw Error(ErrorKind::MalformedSpec, "expected '<s>s, <b>b, <w>w', got '" + s + "'");
  StageSchedule out;
  out.stages = std::stoi(m[1].str());
  out.blocks = std::stoi(m[2].str());
  if (out.stages < 1) throw Error(ErrorKind::MalformedSpec, "'" + s + "': need at least one stage");
  if (out.blocks < 1) throw Error(ErrorKind::MalformedSpec, "'" + s + "': need at least one block");
  const std::string w = m[3].str();
  static const std::regex single(R"(^(\d+)$)"), range(R"(^(\d+)-(\d+)$)"), list(R"(^\d+(:\d+)+$)");
  std::smatch wm;
  if (std::regex_match(w, wm, single)) {
    out.widths.assign(out.stages, std::stoi(wm[1].str()));
  } else if (std::regex_match(w, wm, range)) {
    const double first = std::stoi(wm[1].str()), last = std::stoi(wm[2].str());
    for (int i = 0; i < out.stages; ++i) {
      // A single stage with a range takes the first width.
      const double t = out.stages == 1 ? 0.0 : static_cast<double>(i) / (out.stages - 1);
      out.widths.push_back(static_cast<int>(std::lround(first + (last - first) * t)));
    }
  } else if (std::regex_match(w, list)) {
    std::size_t pos = 0;
    while (pos <= w.size()) {
      const auto next = w.find(':', pos);
      out.widths.push_back(std::stoi(w.substr(pos, next - pos)));
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    if (static_cast<int>(out.widths.size()) != out.stages)
      throw Error(ErrorKind::MalformedSpec, "'" + s + "': width list length != stage count");
  } else {
    throw Error(ErrorKind::MalformedSpec, "'" + s + "': bad width field");
  }
  for (int v : out.widths)
    if (v < 1) throw Error(ErrorKind::MalformedSpec, "'" + s + "': widths must be positive");
  return out;
}

struct ConvLayer {
  int kernel = 3;
  int stride = 1;
  int c_in = 0;
  int c_out = 0;
  bool pool = false;  // max-pool: no parameters, no MACs
};

inline std::int64_t conv_macs(const ConvLayer& l, std::int64_t out_h, std::int64_t out_w) {
  if (l.pool) return 0;
  return static_cast<std::int64_t>(l.kernel) * l.kernel * l.c_in * l.c_out * out_h * out_w;
}

inline std::int64_t conv_params(const ConvLayer& l) {
  if (l.pool) return 0;
  return static_cast<std::int64_t>(l.kernel) * l.kernel * l.c_in * l.c_out + l.c_out;
}

struct StageConfig {
  int blocks = 1;
  std::vector<int> widths;  // per block
  int kernel = 3;
  int input_channels = 0;
  int output_channels = 0;

  /// `blocks` k x k convolutions followed by a 1 x 1 projection to the outputs.
  std::vector<ConvLayer> layers() const {
    std::vector<ConvLayer> out;
    int c = input_channels;
    for (int b = 0; b < blocks; ++b) {
      out.push_back({kernel, 1, c, widths.at(b), false});
      c = widths[b];
    }
    out.push_back({1, 1, c, output_channels, false});
    return out;
  }
};

/// VGG-19 conv1_1..conv4_2 plus the two reduction layers of the PAF family;
/// stride 8, 128 output channels.
inline std::vector<ConvLayer> default_backbone(int input_channels = 3) {
  std::vector<ConvLayer> v;
  int c = input_channels;
  auto conv = [&](int out) {
    v.push_back({3, 1, c, out, false});
    c = out;
  };
  auto pool = [&] { v.push_back({2, 2, c, c, true}); };
  conv(64), conv(64), pool();
  conv(128), conv(128), pool();
  conv(256), conv(256), conv(256), conv(256), pool();
  conv(512), conv(512);
  conv(256), conv(128);
  return v;
}

/// Descriptor of the refinement network: backbone features F, PAF stages that
/// each see F (and, from the second stage on, the previous PAFs), then
/// confidence stages that see F and the final PAFs.
struct StageGraph {
  std::vector<ConvLayer> backbone;
  int backbone_channels = 128;
  std::vector<StageConfig> paf_stages;
  std::vector<StageConfig> cm_stages;
  int input_resolution = 480;

  int backbone_stride() const {
    int s = 1;
    for (const auto& l : backbone) s *= l.stride;
    return s;
  }
};

inline StageGraph build_stage_graph(const StageSchedule& paf, const StageSchedule& cm,
                                    const ChannelCounts& channels, int input_resolution = 480,
                                    int kernel = 3) {
  StageGraph g;
  g.backbone = default_backbone();
  g.backbone_channels = g.backbone.back().c_out;
  g.input_resolution = input_resolution;
  for (int t = 0; t < paf.stages; ++t) {
    StageConfig s;
    s.blocks = paf.blocks;
    s.widths.assign(paf.blocks, paf.widths.at(t));
    s.kernel = kernel;
    s.input_channels = g.backbone_channels + (t == 0 ? 0 : channels.paf_channels);
    s.output_channels = channels.paf_channels;
    g.paf_stages.push_back(s);
  }
  for (int t = 0; t < cm.stages; ++t) {
    StageConfig s;
    s.blocks = cm.blocks;
    s.widths.assign(cm.blocks, cm.widths.at(t));
    s.kernel = kernel;
    s.input_channels = g.backbone_channels + channels.paf_channels;
    s.output_channels = channels.confidence_channels;
    g.cm_stages.push_back(s);
  }
  return g;
}

/// Checks the concatenation rules; returns a description of the first violation.
inline std::optional<std::string> check_channel_arithmetic(const StageGraph& g) {
  if (g.paf_stages.empty()) return std::nullopt;
  const int paf_out = g.paf_stages.front().output_channels;
  for (std::size_t t = 0; t < g.paf_stages.size(); ++t) {
    const auto& s = g.paf_stages[t];
    const int expected = g.backbone_channels + (t == 0 ? 0 : paf_out);
    if (s.input_channels != expected)
      return "PAF stage " + std::to_string(t + 1) + " input " + std::to_string(s.input_channels) +
             " != " + std::to_string(expected);
    if (s.output_channels != paf_out) return "PAF stages disagree on output channels";
  }
  for (std::size_t t = 0; t < g.cm_stages.size(); ++t)
    if (g.cm_stages[t].input_channels != g.backbone_channels + paf_out)
      return "confidence stage " + std::to_string(t + 1) + " input mismatch";
  return std::nullopt;
}

/// Theoretical receptive field in input pixels along the longest path:
/// backbone, every PAF stage, every confidence stage (r += (k - 1) * jump).
inline int receptive_field(const StageGraph& g) {
  long r = 1, jump = 1;
  auto step = [&](const ConvLayer& l) {
    r += static_cast<long>(l.kernel - 1) * jump;
    jump *= l.stride;
  };
  for (const auto& l : g.backbone) step(l);
  for (const auto& s : g.paf_stages)
    for (const auto& l : s.layers()) step(l);
  for (const auto& s : g.cm_stages)
    for (const auto& l : s.layers()) step(l);
  return static_cast<int>(r);
}

struct CostEstimate {
  std::int64_t params = 0;
  std::int64_t macs = 0;
  std::int64_t backbone_macs = 0;
  std::vector<std::int64_t> paf_stage_macs;
  std::vector<std::int64_t> cm_stage_macs;
};

/// Parameter and multiply-accumulate counts with k^2 * c_in * c_out * H * W per
/// convolution at the input resolution.
inline CostEstimate cost_estimate(const StageGraph& g) {
  CostEstimate c;
  std::int64_t side = g.input_resolution;
  for (const auto& l : g.backbone) {
    side = (side + l.stride - 1) / l.stride;
    c.backbone_macs += conv_macs(l, side, side);
    c.params += conv_params(l);
  }
  auto stage_cost = [&](const StageConfig& s) {
    std::int64_t m = 0;
    for (const auto& l : s.layers()) {
      m += conv_macs(l, side, side);
      c.params += conv_params(l);
    }
    return m;
  };
  for (const auto& s : g.paf_stages) c.paf_stage_macs.push_back(stage_cost(s));
  for (const auto& s : g.cm_stages) c.cm_stage_macs.push_back(stage_cost(s));
  c.macs = c.backbone_macs;
  for (auto m : c.paf_stage_macs) c.macs += m;
  for (auto m : c.cm_stage_macs) c.macs += m;
  return c;
}

/// The PAF/CM rows of the architecture comparison table.
inline const std::vector<std::pair<std::string, std::string>>& table_configs() {
  static const std::vector<std::pair<std::string, std::string>> rows = {
      {"1s, 10b, 256w", "1s, 10b, 256w"},    {"2s, 8b, 128-288w", "1s, 8b, 256w"},
      {"2s, 10b, 128-256w", "1s, 10b, 256w"}, {"3s, 8b, 96-256w", "1s, 8b, 192w"},
      {"4s, 8b, 96-256w", "1s, 8b, 224w"},    {"5s, 8b, 64-256w", "1s, 5b, 256w"},
  };
  return rows;
}

// Runtime model ---------------------------------------------------------------

/// Single network (constant cost) against a body network plus per-person face
/// and hand networks, run for the visible fraction of people.
struct RuntimeModel {
  double t_single = 1.0;
  double t_body = 1.0;
  double t_face = 0.5;
  double t_hand = 0.5;
  double visibility = 1.0;
};

/// Multi-network over single-network cost for n people.
inline double runtime_ratio(const RuntimeModel& m, double n_people) {
  if (!(m.t_single > 0.0)) throw Error(ErrorKind::InvalidFormat, "t_single must be positive");
  return (m.t_body + n_people * m.visibility * (m.t_face + m.t_hand)) / m.t_single;
}

struct AffineFit {
  double intercept = 0.0;
  double slope = 0.0;
};

/// Ordinary least squares y = intercept + slope * x.
inline AffineFit fit_affine(const std::vector<std::pair<double, double>>& xy) {
  if (xy.empty()) throw Error(ErrorKind::InvalidFormat, "no samples to fit");
  double sx = 0, sy = 0;
  for (const auto& [x, y] : xy) sx += x, sy += y;
  const double n = static_cast<double>(xy.size());
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (const auto& [x, y] : xy) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  AffineFit f;
  f.slope = sxx > 0 ? sxy / sxx : 0.0;
  f.intercept = my - f.slope * mx;
  return f;
}

struct RuntimeFit {
  AffineFit single;
  std::optional<AffineFit> multi;
  RuntimeModel model;
};

/// Fits the runtime model. t_single is the mean measured single-network time.
/// With multi-network samples, their affine fit gives t_body (intercept) and
/// visibility * (t_face + t_hand) (slope; face and hand split evenly). Without
/// them the baseline is modelled: t_body = t_single and
/// t_face + t_hand = face_hand_over_body * t_body.
inline RuntimeFit fit_runtime(const std::vector<std::pair<double, double>>& single,
                              const std::vector<std::pair<double, double>>& multi,
                              double visibility, double face_hand_over_body) {
  if (visibility < 0.0 || visibility > 1.0)
    throw Error(ErrorKind::InvalidFormat, "visibility outside [0,1]");
  RuntimeFit out;
  out.single = fit_affine(single);
  double mean = 0.0;
  for (const auto& [x, y] : single) mean += y;
  mean /= static_cast<double>(single.size());
  out.model.t_single = mean;
  out.model.visibility = visibility;
  if (!multi.empty()) {
    out.multi = fit_affine(multi);
    out.model.t_body = out.multi->intercept;
    const double per_person = visibility > 0.0 ? out.multi->slope / visibility : 0.0;
    out.model.t_face = out.model.t_hand = per_person / 2.0;
  } else {
    out.model.t_body = mean;
    out.model.t_face = out.model.t_hand = face_hand_over_body * mean / 2.0;
  }
  return out;
}

}  // namespace wbpose
