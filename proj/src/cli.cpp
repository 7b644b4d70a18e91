#include "facesym/cli.hpp"

#include <omp.h>

#include <cstdio>

#include <CLI11.hpp>

#include "facesym/errors.hpp"
#include "facesym/detector.hpp"
#include "facesym/report.hpp"

namespace facesym::cli {

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

struct ScoringFlags {
  double tilt = kDefaultTiltThresholdDeg;
  double deadband = kDefaultAlignDeadbandDeg;
  double padding = AlignParams{}.padding;
  SsimParams ssim;

  void add_to(CLI::App& app) {
    app.add_option("--tilt-threshold", tilt,
                   "Discard frames whose |roll| exceeds this many degrees")
        ->check(CLI::Range(0.0, 89.999))
        ->capture_default_str();
    app.add_option("--align-deadband", deadband,
                   "Frames with |roll| at or below this are not rotated")
        ->check(CLI::Range(0.0, 89.999))
        ->capture_default_str();
    app.add_option("--crop-padding", padding,
                   "Fraction of the landmark box added per side of the crop")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    app.add_option("--ssim-window", ssim.window_size, "Odd SSIM window size")
        ->check(CLI::Range(1, 255))
        ->capture_default_str();
    app.add_option("--ssim-sigma", ssim.sigma, "Gaussian window sigma")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--ssim-k1", ssim.k1, "SSIM luminance constant")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--ssim-k2", ssim.k2, "SSIM contrast constant")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--ssim-range", ssim.dynamic_range, "Pixel dynamic range")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  }

  ScoringParams params() const {
    ScoringParams p;
    p.tilt_threshold_deg = tilt;
    p.align_deadband_deg = deadband;
    p.align.padding = padding;
    p.ssim = ssim;
    try {
      p.ssim.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    return p;
  }
};

struct SourceFlags {
  std::string sidecar;
  std::string detector;

  void add_to(CLI::App& app) {
    auto* lm = app.add_option("--landmarks", sidecar,
                              "JSON-lines landmark sidecar");
    auto* det = app.add_option(
        "--detector-cmd", detector,
        "Shell command reading frame paths on stdin, writing sidecar lines");
    lm->excludes(det);
  }

  LandmarkSource source() const {
    if (sidecar.empty() == detector.empty()) {
      throw UsageError("exactly one of --landmarks or --detector-cmd is required");
    }
    LandmarkSource s;
    if (!sidecar.empty()) s.sidecar = sidecar;
    if (!detector.empty()) s.detector_command = detector;
    return s;
  }
};

std::optional<std::filesystem::path> opt_path(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return std::filesystem::path(s);
}

}  // namespace

Command parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Hemifacial asymmetry analysis over extracted video frames",
               "facesym"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "Score every frame of a clip");
  std::string manifest;
  SourceFlags analyze_source;
  ScoringFlags analyze_scoring;
  std::optional<double> baseline;
  std::string estimator = "midpoint";
  double delta = kDefaultDeltaPct;
  int min_frames = kDefaultMinFrames;
  double congruence = kDefaultCongruencePct;
  std::string out_csv, out_json, out_svg, debug_frames;
  int jobs = std::max(1, omp_get_num_procs());

  analyze->add_option("--manifest", manifest, "Frame manifest (JSON)")->required();
  analyze_source.add_to(*analyze);
  analyze_scoring.add_to(*analyze);
  analyze->add_option("--baseline", baseline,
                      "External baseline SSID in percent (skips estimation)")
      ->check(CLI::Range(0.0, 100.0));
  analyze->add_option("--baseline-estimator", estimator,
                      "Baseline estimate when --baseline is absent")
      ->check(CLI::IsMember({"midpoint", "median"}))
      ->capture_default_str();
  analyze->add_option("--delta", delta,
                      "Dip depth below baseline, in SSID percentage points")
      ->check(CLI::Range(0.0, 100.0))
      ->capture_default_str();
  analyze->add_option("--min-frames", min_frames,
                      "Minimum consecutive frames for a dip")
      ->check(CLI::Range(1, 1 << 30))
      ->capture_default_str();
  analyze->add_option("--congruence-threshold", congruence,
                      "SSID percent at or above which a frame is congruent")
      ->check(CLI::Range(0.0, 100.0))
      ->capture_default_str();
  analyze->add_option("--out-csv", out_csv, "Per-frame CSV output");
  analyze->add_option("--out-json", out_json, "Full JSON report output");
  analyze->add_option("--out-svg", out_svg, "SVG time graph output");
  analyze->add_option("--debug-frames", debug_frames,
                      "Directory for per-frame composite layout PNGs");
  analyze->add_option("--jobs", jobs, "Worker threads")
      ->check(CLI::Range(1, 1024))
      ->capture_default_str();

  auto* base = app.add_subcommand(
      "baseline", "SSID of a neutral-state still, for use with --baseline");
  std::string image;
  SourceFlags base_source;
  ScoringFlags base_scoring;
  base->add_option("--image", image, "Neutral-state PNG")->required();
  base_source.add_to(*base);
  base_scoring.add_to(*base);

  std::vector<const char*> argv{"facesym"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (analyze->parsed()) {
    AnalyzeOptions o;
    o.manifest = manifest;
    o.landmarks = analyze_source.source();
    o.pipeline.scoring = analyze_scoring.params();
    o.pipeline.external_baseline_pct = baseline;
    o.pipeline.estimator = parse_baseline_estimator(estimator);
    o.pipeline.delta_pct = delta;
    o.pipeline.min_frames = min_frames;
    o.pipeline.congruence_threshold_pct = congruence;
    o.pipeline.jobs = jobs;
    o.pipeline.debug_dir = opt_path(debug_frames);
    o.out_csv = opt_path(out_csv);
    o.out_json = opt_path(out_json);
    o.out_svg = opt_path(out_svg);
    return o;
  }
  BaselineOptions o;
  o.image = image;
  o.landmarks = base_source.source();
  o.scoring = base_scoring.params();
  return o;
}

namespace {

nlohmann::ordered_json inputs_echo(const AnalyzeOptions& o) {
  nlohmann::ordered_json j;
  j["manifest"] = o.manifest.string();
  if (o.landmarks.sidecar) {
    j["landmarks"] = o.landmarks.sidecar->string();
  } else {
    j["detector_cmd"] = *o.landmarks.detector_command;
  }
  return j;
}

int run_analyze(const AnalyzeOptions& o, std::ostream& out) {
  const FrameManifest manifest = load_manifest(o.manifest);
  const AsymmetrySeries series = run_pipeline(manifest, o.landmarks, o.pipeline);
  const AnalysisReport report = make_report(series, o.pipeline, inputs_echo(o));

  if (o.out_csv) write_csv(series, *o.out_csv);
  if (o.out_json) write_json(report, *o.out_json);
  if (o.out_svg) render_svg(series, *o.out_svg);

  const ReportSummary& s = report.summary;
  out << "frames=" << s.frames << " scored=" << s.scored
      << " no_face=" << s.no_face << " discarded=" << s.discarded_tilt
      << " baseline=" << fixed6(s.baseline_pct) << " ("
      << to_string(s.baseline_source) << ") dips=" << s.dip_count
      << " congruent=" << s.congruent << " incongruent=" << s.incongruent
      << '\n';
  return 0;
}

int run_baseline(const BaselineOptions& o, std::ostream& out, std::ostream& err) {
  const GrayImage image = read_png(o.image);
  FrameFaceResult face = NoFace{};
  if (o.landmarks.sidecar) {
    const auto records = load_sidecar_file(*o.landmarks.sidecar);
    if (records.size() != 1) {
      throw InputError("baseline: sidecar must hold exactly one record, found " +
                       std::to_string(records.size()));
    }
    face = records.front().face;
  } else {
    const std::vector<std::filesystem::path> paths{o.image};
    face = run_detector(*o.landmarks.detector_command, paths).front().face;
  }
  const FrameScore score = score_frame(image, face, o.scoring);
  if (!score.scored()) {
    err << "facesym: baseline image was not scored (" << to_string(score.status)
        << (score.detail.empty() ? "" : ": " + score.detail) << ")\n";
    return 1;
  }
  out << "baseline_pct=" << fixed6(score.ssid_pct) << '\n';
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Command command;
  try {
    command = parse_args(args);
  } catch (const HelpRequested& help) {
    out << help.what();
    return 0;
  } catch (const UsageError& e) {
    err << "facesym: " << e.what() << "\n";
    return 1;
  }

  try {
    if (const auto* a = std::get_if<AnalyzeOptions>(&command)) {
      return run_analyze(*a, out);
    }
    return run_baseline(std::get<BaselineOptions>(command), out, err);
  } catch (const InputError& e) {
    err << "facesym: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "facesym: internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace facesym::cli
