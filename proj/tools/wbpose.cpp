// wbpose command-line tool.

#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "wbpose/archmodel.hpp"
#include "wbpose/bench.hpp"
#include "wbpose/decoder.hpp"
#include "wbpose/encoder.hpp"
#include "wbpose/io/coco.hpp"
#include "wbpose/io/json_io.hpp"
#include "wbpose/io/wbpt.hpp"
#include "wbpose/loss.hpp"
#include "wbpose/metrics.hpp"
#include "wbpose/parallel.hpp"
#include "wbpose/scheduler.hpp"
#include "wbpose/skeleton.hpp"
#include "wbpose/synth.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace wbpose;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitTolerance = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFormat = 3;

struct Globals {
  std::string manifest;
  std::uint64_t seed = 0;
  bool seed_given = false;
  int stride = 8;
  int threads = 1;
  bool quiet = false;
};

const SkeletonTopology& topology(const Globals& g) {
  static std::optional<SkeletonTopology> loaded;
  if (g.manifest.empty()) return default_topology();
  if (!loaded) loaded = load_topology_file(g.manifest);
  return *loaded;
}

// Writes JSON to `path`, or stdout when path is empty or "-".
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") std::cout << text;
  else io::write_text_file(path, text);
}

void emit_json(const std::string& path, const json& j) { emit(path, j.dump(2) + "\n"); }

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::MalformedSpec:
    case ErrorKind::InvalidRecipe:
    case ErrorKind::InfeasiblePacking:
    case ErrorKind::StageCountZero:
    case ErrorKind::EmptyRegistry:
    case ErrorKind::GridTooSmall:
    case ErrorKind::ZeroLabeledParts:
      return kExitUsage;
    default:
      return kExitFormat;
  }
}

std::string safe_file_stem(const std::string& id) {
  std::string out = id;
  for (char& c : out)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.')) c = '_';
  return out.empty() ? "scene" : out;
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  return out;
}

// "a..b" or "a,b,c"
std::vector<int> parse_int_range(const std::string& text) {
  std::vector<int> out;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    const int a = std::stoi(text.substr(0, dots)), b = std::stoi(text.substr(dots + 2));
    if (b < a) throw Error(ErrorKind::MalformedSpec, "empty range " + text);
    for (int i = a; i <= b; ++i) out.push_back(i);
    return out;
  }
  for (double v : parse_doubles(text)) out.push_back(static_cast<int>(v));
  return out;
}

// "60x60,120x120"
std::vector<std::pair<int, int>> parse_maps(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto x = item.find('x');
    if (x == std::string::npos) throw Error(ErrorKind::MalformedSpec, "map size '" + item + "' is not WxH");
    out.emplace_back(std::stoi(item.substr(0, x)), std::stoi(item.substr(x + 1)));
  }
  return out;
}

void check_manifest_hash(const io::WbptFile& f, const SkeletonTopology& topo, const std::string& path) {
  if (f.manifest_hash != 0 && f.manifest_hash != topo.manifest_hash())
    throw Error(ErrorKind::ChannelMismatch, path + " was written for manifest " + hex64(f.manifest_hash) +
                                                ", current manifest is " + hex64(topo.manifest_hash()));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Whole-body part affinity field toolkit"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--manifest", g.manifest, "Topology manifest JSON (default: built-in 135-part)");
  auto* seed_opt = app.add_option("--seed", g.seed, "Random seed");
  app.add_option("--stride", g.stride, "Map stride in pixels")->check(CLI::PositiveNumber);
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--quiet", g.quiet, "Suppress informational output");

  // encode
  auto* enc = app.add_subcommand("encode", "scenes JSON -> WBPT target files");
  enc->fallthrough();
  std::string enc_scenes, enc_out_dir = ".", enc_sigma, enc_summary;
  double enc_limb_width = 0.0;
  enc->add_option("--scenes", enc_scenes, "Scenes JSON")->required();
  enc->add_option("--out-dir", enc_out_dir, "Directory for <scene id>.wbpt files");
  enc->add_option("--sigma", enc_sigma, "Gaussian sigma per group: body,foot,face,hand (px)");
  enc->add_option("--limb-width", enc_limb_width, "PAF half-width in px (default max(sigma, stride))");
  enc->add_option("--summary", enc_summary, "Write the JSON summary here instead of stdout");

  // decode
  auto* dec = app.add_subcommand("decode", "WBPT tensor files -> poses JSON");
  dec->fallthrough();
  std::vector<std::string> dec_inputs;
  std::string dec_out;
  DecoderParams dec_params;
  dec->add_option("--input", dec_inputs, "Combined WBPT file(s); scene id = file stem")->required();
  dec->add_option("--out", dec_out, "Poses JSON (default stdout)");
  dec->add_option("--nms-threshold", dec_params.nms_threshold, "Peak threshold");
  dec->add_option("--min-parts", dec_params.min_parts, "Minimum parts per pose");
  dec->add_option("--min-score", dec_params.min_score, "Minimum raw pose score");

  // loss
  auto* lossc = app.add_subcommand("loss", "prediction + target WBPT -> loss breakdown JSON");
  lossc->fallthrough();
  std::vector<std::string> loss_preds;
  std::string loss_gt, loss_out;
  lossc->add_option("--pred", loss_preds,
                    "Prediction WBPT; every PAF/confidence section is one stage, files in order")
      ->required();
  lossc->add_option("--gt", loss_gt, "Combined target WBPT (S, L, W)")->required();
  lossc->add_option("--out", loss_out, "Output JSON (default stdout)");

  // eval
  auto* ev = app.add_subcommand("eval", "detections vs groundtruth -> AP/AR JSON");
  ev->fallthrough();
  std::string ev_dets, ev_gts, ev_gt_scenes, ev_groups = "all", ev_out, ev_pr_csv;
  bool ev_ar_only = false;
  std::optional<double> ev_min_ap, ev_min_ar;
  ev->add_option("--dets", ev_dets, "Detections poses JSON")->required();
  auto* gts_opt = ev->add_option("--gts", ev_gts, "Groundtruth poses JSON");
  auto* gts_scenes_opt = ev->add_option("--gt-scenes", ev_gt_scenes, "Groundtruth scenes JSON");
  gts_opt->excludes(gts_scenes_opt);
  ev->add_option("--groups", ev_groups, "Part groups to evaluate, e.g. body,foot or all");
  ev->add_flag("--ar-only", ev_ar_only, "Report AR only (sets with unlabeled people)");
  ev->add_option("--pr-csv", ev_pr_csv, "Write the PR curves as CSV");
  ev->add_option("--min-ap", ev_min_ap, "Exit 1 when AP is below this");
  ev->add_option("--min-ar", ev_min_ar, "Exit 1 when AR is below this");
  ev->add_option("--out", ev_out, "Output JSON (default stdout)");

  // synth
  auto* sy = app.add_subcommand("synth", "recipe JSON -> scenes JSON");
  sy->fallthrough();
  std::string sy_recipe, sy_out;
  int sy_count = 1;
  sy->add_option("--recipe", sy_recipe, "Scene recipe JSON")->required();
  sy->add_option("--count", sy_count, "Number of scenes")->check(CLI::PositiveNumber);
  sy->add_option("--out", sy_out, "Scenes JSON (default stdout)");

  // roundtrip
  auto* rt = app.add_subcommand("roundtrip", "recipe -> generate/encode/decode report");
  rt->fallthrough();
  std::string rt_recipe, rt_out;
  int rt_scenes = 1;
  double rt_max_cells = 0.5;
  rt->add_option("--recipe", rt_recipe, "Scene recipe JSON")->required();
  rt->add_option("--scenes", rt_scenes, "Number of scenes")->check(CLI::PositiveNumber);
  rt->add_option("--max-cells", rt_max_cells, "Localization tolerance in map cells");
  rt->add_option("--out", rt_out, "Report JSON (default stdout)");

  // sample-plan
  auto* sp = app.add_subcommand("sample-plan", "registry -> JSON-lines batch plan");
  sp->fallthrough();
  std::string sp_registry, sp_out;
  int sp_batches = 10, sp_batch_size = 1;
  sp->add_option("--registry", sp_registry, "Registry JSON (default: built-in mix)");
  sp->add_option("--batches", sp_batches, "Number of batches")->check(CLI::NonNegativeNumber);
  sp->add_option("--batch-size", sp_batch_size, "Samples per batch")->check(CLI::PositiveNumber);
  sp->add_option("--out", sp_out, "Plan file (default stdout)");

  // arch
  auto* ar = app.add_subcommand("arch", "architecture arithmetic and runtime model");
  ar->fallthrough();
  std::string ar_spec, ar_cm, ar_fit, ar_n = "1..20", ar_out;
  int ar_resolution = 480;
  bool ar_ratio = false;
  double ar_visibility = 0.6, ar_face_hand = 1.0;
  ar->add_option("--spec", ar_spec, "PAF stage config, e.g. \"3s, 8b, 96-256w\"");
  ar->add_option("--cm", ar_cm, "Confidence stage config, e.g. \"1s, 8b, 192w\"");
  ar->add_option("--resolution", ar_resolution, "Square input resolution")->check(CLI::PositiveNumber);
  ar->add_flag("--ratio", ar_ratio, "Print the multi/single runtime ratio curve as CSV");
  ar->add_option("--fit", ar_fit, "Bench CSV to fit the runtime model on");
  ar->add_option("--n", ar_n, "People counts, a..b or a,b,c");
  ar->add_option("--visibility", ar_visibility, "Fraction of people whose face/hands are processed");
  ar->add_option("--face-hand-factor", ar_face_hand, "Modeled face+hand cost relative to body");
  ar->add_option("--out", ar_out, "Output (default stdout)");

  // bench
  auto* be = app.add_subcommand("bench", "decode timing grid -> CSV + JSON summary");
  be->fallthrough();
  std::string be_people = "1,5,10,20", be_maps = "60x60,120x120", be_csv, be_json;
  int be_reps = 10, be_warmup = 3;
  be->add_option("--people", be_people, "People counts");
  be->add_option("--maps", be_maps, "Map sizes WxH, comma separated");
  be->add_option("--reps", be_reps, "Timed repetitions (>= 10)");
  be->add_option("--warmup", be_warmup, "Discarded warmup runs (>= 3)");
  be->add_option("--csv", be_csv, "CSV output (default stdout)");
  be->add_option("--json", be_json, "JSON summary output");

  // ingest-coco
  auto* co = app.add_subcommand("ingest-coco", "COCO keypoint annotations -> scenes JSON");
  co->fallthrough();
  std::string co_in, co_mapping, co_out;
  co->add_option("--coco", co_in, "COCO keypoints JSON")->required();
  co->add_option("--mapping", co_mapping, "Mapping JSON (default: COCO person -> BODY_25 ids)");
  co->add_option("--out", co_out, "Scenes JSON (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }
  g.seed_given = seed_opt->count() > 0;

  try {
    const SkeletonTopology& topo = topology(g);
    const json prov = io::provenance(topo, g.seed);

    if (*enc) {
      EncoderParams params;
      params.stride = g.stride;
      if (!enc_sigma.empty()) {
        const auto s = parse_doubles(enc_sigma);
        if (s.size() != 4) throw Error(ErrorKind::MalformedSpec, "--sigma needs four values");
        for (int i = 0; i < 4; ++i) params.sigma[i] = s[i];
      }
      if (enc_limb_width > 0) params.limb_width = enc_limb_width;
      const auto scenes = io::scenes_from_document(io::read_json_file(enc_scenes));
      fs::create_directories(enc_out_dir);
      std::vector<std::string> paths(scenes.size());
      parallel_for(static_cast<int>(scenes.size()), g.threads, [&](int i) {
        const TargetTensors t = encode(scenes[i], topo, params);
        paths[i] = (fs::path(enc_out_dir) / (safe_file_stem(scenes[i].id) + ".wbpt")).string();
        io::write_wbpt(paths[i], io::from_targets(t, topo.manifest_hash()));
      });
      json summary = prov;
      summary["files"] = paths;
      if (!g.quiet || !enc_summary.empty()) emit_json(enc_summary, summary);
      return kExitOk;
    }

    if (*dec) {
      dec_params.threads = g.threads;
      std::map<std::string, PoseSet> out;
      for (const auto& path : dec_inputs) {
        const io::WbptFile f = io::read_wbpt(path);
        check_manifest_hash(f, topo, path);
        const io::Predictions p = io::predictions_from(f);
        out[fs::path(path).stem().string()] = decode(p.confidence, p.paf, topo, dec_params, p.stride);
      }
      emit_json(dec_out, io::poses_document(out, prov));
      return kExitOk;
    }

    if (*lossc) {
      const io::WbptFile gt_file = io::read_wbpt(loss_gt);
      check_manifest_hash(gt_file, topo, loss_gt);
      const TargetTensors targets = io::to_targets(gt_file);
      StagePredictions<float> preds;
      for (const auto& path : loss_preds) {
        const io::WbptFile f = io::read_wbpt(path);
        check_manifest_hash(f, topo, path);
        if (f.kind == io::WbptKind::Combined) {
          int off = 0;
          for (const auto& s : f.sections) {
            const int n = static_cast<int>(s.channels);
            if (s.kind == io::WbptKind::Paf) preds.paf_stages.push_back(io::channel_slice(f.data, off, n));
            if (s.kind == io::WbptKind::Confidence)
              preds.cm_stages.push_back(io::channel_slice(f.data, off, n));
            off += n;
          }
        } else if (f.kind == io::WbptKind::Paf) {
          preds.paf_stages.push_back(f.data);
        } else if (f.kind == io::WbptKind::Confidence) {
          preds.cm_stages.push_back(f.data);
        } else {
          throw Error(ErrorKind::InvalidFormat, path + " holds masks, not predictions");
        }
      }
      json j = prov;
      j["loss"] = io::loss_to_json(multitask_loss(preds, as_targets(targets), topo));
      emit_json(loss_out, j);
      return kExitOk;
    }

    if (*ev) {
      if (ev_gts.empty() && ev_gt_scenes.empty())
        throw CLI::RequiredError("--gts or --gt-scenes");
      const GroupSet groups = io::parse_group_list(ev_groups);
      const io::PoseDocument dets = io::poses_from_document(io::read_json_file(ev_dets));
      io::PoseDocument gts;
      if (!ev_gts.empty()) {
        gts = io::poses_from_document(io::read_json_file(ev_gts));
      } else {
        for (const auto& s : io::scenes_from_document(io::read_json_file(ev_gt_scenes))) {
          for (const auto& p : s.people) gts.poses[s.id].push_back(pose_from_person(p));
          gts.poses.try_emplace(s.id);
        }
      }
      std::map<std::string, EvalScene> by_id;
      for (const auto& [id, set] : dets.poses) by_id[id].detections = set;
      for (const auto& [id, set] : gts.poses) {
        EvalScene& es = by_id[id];
        es.groundtruth = set;
        auto areas = gts.areas.count(id) ? gts.areas.at(id) : std::vector<double>{};
        if (std::any_of(areas.begin(), areas.end(), [](double a) { return !std::isnan(a); })) {
          for (std::size_t i = 0; i < areas.size(); ++i)
            if (std::isnan(areas[i])) areas[i] = pose_area(set[i], topo, groups);
          es.gt_areas = areas;
        }
      }
      std::vector<EvalScene> scenes;
      for (auto& [id, es] : by_id) scenes.push_back(std::move(es));
      const EvalResult r = evaluate(scenes, topo, groups);
      json j = prov;
      j["eval"] = io::eval_to_json(r);
      if (ev_ar_only) {
        j["eval"].erase("ap");
        for (auto& t : j["eval"]["per_threshold"]) t.erase("ap"), t.erase("precision");
      }
      emit_json(ev_out, j);
      if (!ev_pr_csv.empty()) io::write_text_file(ev_pr_csv, io::pr_curves_csv(r));
      bool ok = true;
      if (ev_min_ap && !ev_ar_only && r.ap < *ev_min_ap) ok = false;
      if (ev_min_ar && r.ar < *ev_min_ar) ok = false;
      return ok ? kExitOk : kExitTolerance;
    }

    if (*sy || *rt) {
      SceneRecipe recipe = io::recipe_from_json(io::read_json_file(*sy ? sy_recipe : rt_recipe));
      if (g.seed_given) recipe.seed = g.seed;
      json p = io::provenance(topo, recipe.seed);
      if (*sy) {
        std::vector<AnnotatedScene> scenes(sy_count);
        parallel_for(sy_count, g.threads, [&](int i) {
          scenes[i] = sy_count == 1 ? generate(recipe, topo) : generate_nth(recipe, topo, i);
        });
        emit_json(sy_out, io::scenes_document(scenes, p));
        return kExitOk;
      }
      EncoderParams enc_params;
      enc_params.stride = g.stride;
      DecoderParams dparams;
      dparams.threads = g.threads;
      const RoundtripReport report = roundtrip_report(recipe, topo, enc_params, dparams, rt_scenes);
      p["report"] = io::report_to_json(report);
      p["report"]["pass"] = report.passes(rt_max_cells);
      emit_json(rt_out, p);
      return report.passes(rt_max_cells) ? kExitOk : kExitTolerance;
    }

    if (*sp) {
      const Registry registry =
          sp_registry.empty() ? default_registry() : registry_from_json(io::read_json_file(sp_registry));
      std::ostringstream os;
      json header = prov;
      header["rng_algorithm"] = kRngAlgorithm;
      header["registry_hash"] = hex64(registry_hash(registry));
      os << header.dump() << "\n";
      for (const auto& e : sample_plan(registry, g.seed, sp_batches, sp_batch_size))
        os << io::plan_entry_to_json(e, registry).dump() << "\n";
      emit(sp_out, os.str());
      return kExitOk;
    }

    if (*ar) {
      if (ar_ratio) {
        std::vector<std::pair<double, double>> single, multi;
        RuntimeModel model;
        model.visibility = ar_visibility;
        model.t_face = model.t_hand = ar_face_hand / 2.0;
        std::string source = "unit-cost";
        if (!ar_fit.empty()) {
          std::vector<double> multi_ns;
          const auto records = parse_bench_csv(io::read_text_file(ar_fit), &multi_ns);
          if (records.empty()) throw Error(ErrorKind::InvalidFormat, ar_fit + " has no rows");
          const int w = records.front().map_w, h = records.front().map_h;
          for (std::size_t i = 0; i < records.size(); ++i) {
            if (records[i].map_w != w || records[i].map_h != h) continue;
            single.emplace_back(records[i].n_people, static_cast<double>(records[i].median_ns));
            if (i < multi_ns.size()) multi.emplace_back(records[i].n_people, multi_ns[i]);
          }
          model = fit_runtime(single, multi, ar_visibility, ar_face_hand).model;
          source = multi.empty() ? "fitted-single/modeled-multi" : "fitted";
        }
        std::ostringstream os;
        os << "# runtime model: " << source << "\n";
        os << "n_people,single_network,multi_network_modeled,ratio\n";
        os.precision(17);
        for (int n : parse_int_range(ar_n))
          os << n << ',' << model.t_single << ','
             << model.t_body + n * model.visibility * (model.t_face + model.t_hand) << ','
             << runtime_ratio(model, n) << "\n";
        emit(ar_out, os.str());
        return kExitOk;
      }
      if (ar_spec.empty()) throw CLI::RequiredError("--spec");
      if (ar_cm.empty()) throw CLI::RequiredError("--cm");
      const StageGraph graph =
          build_stage_graph(parse_config(ar_spec), parse_config(ar_cm), channel_counts(topo), ar_resolution);
      json j = prov;
      j.update(io::arch_to_json(ar_spec, ar_cm, graph));
      emit_json(ar_out, j);
      return kExitOk;
    }

    if (*be) {
      BenchConfig cfg;
      cfg.people = parse_int_range(be_people);
      cfg.maps = parse_maps(be_maps);
      cfg.repetitions = be_reps;
      cfg.warmup = be_warmup;
      cfg.recipe.seed = g.seed;
      cfg.encoder.stride = g.stride;
      cfg.decoder.threads = g.threads;
      const auto records = run_bench(cfg, topo);
      emit(be_csv, bench_csv(records));
      if (!be_json.empty()) {
        json j = prov;
        j["records"] = json::array();
        for (const auto& r : records)
          j["records"].push_back({{"n_people", r.n_people},
                                  {"map_w", r.map_w},
                                  {"map_h", r.map_h},
                                  {"threads", r.threads},
                                  {"repetitions", r.repetitions},
                                  {"median_ns", r.median_ns},
                                  {"p90_ns", r.p90_ns},
                                  {"candidates", r.candidates},
                                  {"connections", r.connections},
                                  {"phase_median_ns",
                                   {{"nms", r.nms_median_ns},
                                    {"score", r.score_median_ns},
                                    {"assemble", r.assemble_median_ns}}}});
        io::write_json_file(be_json, j);
      }
      return kExitOk;
    }

    if (*co) {
      const io::CocoMapping mapping = co_mapping.empty()
                                          ? io::default_coco_mapping()
                                          : io::coco_mapping_from_json(io::read_json_file(co_mapping));
      const auto scenes = io::ingest_coco(io::read_json_file(co_in), topo, mapping);
      emit_json(co_out, io::scenes_document(scenes, prov));
      return kExitOk;
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: bad number: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFormat;
  }
  return kExitUsage;
}
