#include "facesym/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "facesym/errors.hpp"

namespace facesym {

using nlohmann::ordered_json;

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  // Avoid "-0.000000" for values that round to zero.
  if (std::string_view(buf) == "-0.000000") return "0.000000";
  return buf;
}

void write_text(const std::string& text, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw std::runtime_error("error writing '" + path.string() + "'");
}

}  // namespace

ReportSummary summarize(const AsymmetrySeries& series,
                        double congruence_threshold_pct) {
  ReportSummary s;
  s.frames = static_cast<std::int64_t>(series.scores.size());
  for (const FrameScore& f : series.scores) {
    switch (f.status) {
      case FrameStatus::kScored:
        ++s.scored;
        if (classify_congruence(f.ssid_pct, congruence_threshold_pct) ==
            Congruence::kCongruent) {
          ++s.congruent;
        } else {
          ++s.incongruent;
        }
        break;
      case FrameStatus::kNoFace:
        ++s.no_face;
        break;
      case FrameStatus::kDiscardedTilt:
        ++s.discarded_tilt;
        break;
    }
  }
  s.baseline_pct = series.baseline_pct;
  s.baseline_source = series.baseline_source;
  s.dip_count = static_cast<std::int64_t>(series.dips.size());
  s.congruence_threshold_pct = congruence_threshold_pct;
  return s;
}

ordered_json config_to_json(const PipelineConfig& config) {
  const auto& sc = config.scoring;
  ordered_json j;
  j["tilt_threshold_deg"] = sc.tilt_threshold_deg;
  j["align_deadband_deg"] = sc.align_deadband_deg;
  j["crop_padding"] = sc.align.padding;
  j["ssim"] = {{"window_size", sc.ssim.window_size},
               {"sigma", sc.ssim.sigma},
               {"k1", sc.ssim.k1},
               {"k2", sc.ssim.k2},
               {"dynamic_range", sc.ssim.dynamic_range}};
  if (config.external_baseline_pct) {
    j["baseline_pct"] = *config.external_baseline_pct;
  } else {
    j["baseline_pct"] = nullptr;
  }
  j["baseline_estimator"] = std::string(to_string(config.estimator));
  j["delta_pct"] = config.delta_pct;
  j["min_frames"] = config.min_frames;
  j["congruence_threshold_pct"] = config.congruence_threshold_pct;
  return j;
}

AnalysisReport make_report(const AsymmetrySeries& series,
                           const PipelineConfig& config, ordered_json inputs) {
  ordered_json echo;
  echo["inputs"] = inputs.is_null() ? ordered_json::object() : std::move(inputs);
  echo["parameters"] = config_to_json(config);
  return {series, std::move(echo),
          summarize(series, config.congruence_threshold_pct)};
}

std::string csv_text(const AsymmetrySeries& series) {
  std::string out = "frame_index,time_ms,time_pct,status,ssid_raw,ssid_pct\n";
  for (const FrameScore& f : series.scores) {
    out += std::to_string(f.frame_index);
    out += ',' + fixed6(f.time_ms);
    out += ',' + fixed6(f.time_pct);
    out += ',';
    out += to_string(f.status);
    out += ',' + fixed6(f.ssid_raw);
    out += ',' + fixed6(f.ssid_pct);
    out += '\n';
  }
  return out;
}

void write_csv(const AsymmetrySeries& series, const std::filesystem::path& path) {
  write_text(csv_text(series), path);
}

namespace {

// Plot geometry in SVG user units.
constexpr double kWidth = 800.0;
constexpr double kHeight = 400.0;
constexpr double kLeft = 60.0;
constexpr double kRight = 20.0;
constexpr double kTop = 20.0;
constexpr double kBottom = 50.0;
constexpr double kYMin = -15.0;
constexpr double kYMax = 100.0;

double px(double time_pct) {
  return kLeft + time_pct / 100.0 * (kWidth - kLeft - kRight);
}

double py(double ssid_pct) {
  const double t = (ssid_pct - kYMin) / (kYMax - kYMin);
  return kHeight - kBottom - t * (kHeight - kTop - kBottom);
}

}  // namespace

std::string svg_text(const AsymmetrySeries& series) {
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed6(kWidth)
    << "\" height=\"" << fixed6(kHeight) << "\" viewBox=\"0 0 "
    << fixed6(kWidth) << ' ' << fixed6(kHeight) << "\">\n";
  s << "<rect class=\"background\" x=\"0\" y=\"0\" width=\"" << fixed6(kWidth)
    << "\" height=\"" << fixed6(kHeight) << "\" fill=\"white\"/>\n";

  for (const DipInterval& d : series.dips) {
    s << "<rect class=\"dip\" x=\"" << fixed6(px(d.start_pct)) << "\" y=\""
      << fixed6(py(kYMax)) << "\" width=\""
      << fixed6(px(d.end_pct) - px(d.start_pct)) << "\" height=\""
      << fixed6(py(kYMin) - py(kYMax))
      << "\" fill=\"#f4a582\" fill-opacity=\"0.5\"/>\n";
  }

  // Axes, gridlines and tick labels.
  s << "<g class=\"axes\" stroke=\"black\" stroke-width=\"1\">\n";
  s << "<line x1=\"" << fixed6(px(0)) << "\" y1=\"" << fixed6(py(0))
    << "\" x2=\"" << fixed6(px(100)) << "\" y2=\"" << fixed6(py(0)) << "\"/>\n";
  s << "<line x1=\"" << fixed6(px(0)) << "\" y1=\"" << fixed6(py(kYMin))
    << "\" x2=\"" << fixed6(px(0)) << "\" y2=\"" << fixed6(py(kYMax))
    << "\"/>\n";
  s << "</g>\n";
  s << "<g class=\"ticks\" font-family=\"sans-serif\" font-size=\"11\">\n";
  for (int t = 0; t <= 100; t += 10) {
    s << "<text x=\"" << fixed6(px(t)) << "\" y=\""
      << fixed6(kHeight - kBottom + 16) << "\" text-anchor=\"middle\">" << t
      << "</text>\n";
  }
  for (int v = -10; v <= 100; v += 10) {
    s << "<text x=\"" << fixed6(kLeft - 6) << "\" y=\"" << fixed6(py(v) + 4)
      << "\" text-anchor=\"end\">" << v << "</text>\n";
  }
  s << "<text x=\"" << fixed6(px(50)) << "\" y=\"" << fixed6(kHeight - 10)
    << "\" text-anchor=\"middle\">time (% of clip)</text>\n";
  s << "<text x=\"14\" y=\"" << fixed6(py(42.5))
    << "\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
    << fixed6(py(42.5)) << ")\">SSID (%)</text>\n";
  s << "</g>\n";

  s << "<line class=\"baseline\" x1=\"" << fixed6(px(0)) << "\" y1=\""
    << fixed6(py(series.baseline_pct)) << "\" x2=\"" << fixed6(px(100))
    << "\" y2=\"" << fixed6(py(series.baseline_pct))
    << "\" stroke=\"#2166ac\" stroke-dasharray=\"6 4\"/>\n";

  s << "<polyline class=\"ssid\" fill=\"none\" stroke=\"#b2182b\" "
       "stroke-width=\"1.5\" points=\"";
  bool first = true;
  for (const FrameScore& f : series.scores) {
    if (!first) s << ' ';
    first = false;
    s << fixed6(px(f.time_pct)) << ',' << fixed6(py(f.ssid_pct));
  }
  s << "\"/>\n";
  s << "</svg>\n";
  return s.str();
}

void render_svg(const AsymmetrySeries& series, const std::filesystem::path& path) {
  write_text(svg_text(series), path);
}

ordered_json report_to_json(const AnalysisReport& report) {
  const auto& sm = report.summary;
  const auto& series = report.series;
  ordered_json j;
  j["config"] = report.config_echo;
  j["summary"] = {{"frames", sm.frames},
                  {"scored", sm.scored},
                  {"no_face", sm.no_face},
                  {"discarded_tilt", sm.discarded_tilt},
                  {"baseline_pct", sm.baseline_pct},
                  {"baseline_source", std::string(to_string(sm.baseline_source))},
                  {"dip_count", sm.dip_count},
                  {"congruence_threshold_pct", sm.congruence_threshold_pct},
                  {"congruent", sm.congruent},
                  {"incongruent", sm.incongruent}};
  j["baseline_pct"] = series.baseline_pct;
  j["baseline_source"] = std::string(to_string(series.baseline_source));
  auto dips = ordered_json::array();
  for (const DipInterval& d : series.dips) {
    dips.push_back({{"start_pct", d.start_pct},
                    {"end_pct", d.end_pct},
                    {"min_ssid_pct", d.min_ssid_pct},
                    {"first_frame", d.first_frame},
                    {"last_frame", d.last_frame}});
  }
  j["dips"] = std::move(dips);
  auto frames = ordered_json::array();
  for (const FrameScore& f : series.scores) {
    ordered_json fj = {{"frame_index", f.frame_index},
                       {"time_ms", f.time_ms},
                       {"time_pct", f.time_pct},
                       {"status", std::string(to_string(f.status))},
                       {"ssid_raw", f.ssid_raw},
                       {"ssid_pct", f.ssid_pct}};
    if (!f.detail.empty()) fj["detail"] = f.detail;
    frames.push_back(std::move(fj));
  }
  j["frames"] = std::move(frames);
  return j;
}

AnalysisReport report_from_json(const ordered_json& doc) {
  try {
    AnalysisReport r;
    r.config_echo = doc.at("config");
    const auto& sm = doc.at("summary");
    r.summary.frames = sm.at("frames").get<std::int64_t>();
    r.summary.scored = sm.at("scored").get<std::int64_t>();
    r.summary.no_face = sm.at("no_face").get<std::int64_t>();
    r.summary.discarded_tilt = sm.at("discarded_tilt").get<std::int64_t>();
    r.summary.baseline_pct = sm.at("baseline_pct").get<double>();
    r.summary.baseline_source =
        parse_baseline_source(sm.at("baseline_source").get<std::string>());
    r.summary.dip_count = sm.at("dip_count").get<std::int64_t>();
    r.summary.congruence_threshold_pct =
        sm.at("congruence_threshold_pct").get<double>();
    r.summary.congruent = sm.at("congruent").get<std::int64_t>();
    r.summary.incongruent = sm.at("incongruent").get<std::int64_t>();

    r.series.baseline_pct = doc.at("baseline_pct").get<double>();
    r.series.baseline_source =
        parse_baseline_source(doc.at("baseline_source").get<std::string>());
    for (const auto& d : doc.at("dips")) {
      r.series.dips.push_back({d.at("start_pct").get<double>(),
                               d.at("end_pct").get<double>(),
                               d.at("min_ssid_pct").get<double>(),
                               d.at("first_frame").get<std::int64_t>(),
                               d.at("last_frame").get<std::int64_t>()});
    }
    for (const auto& f : doc.at("frames")) {
      FrameScore s;
      s.frame_index = f.at("frame_index").get<std::int64_t>();
      s.time_ms = f.at("time_ms").get<double>();
      s.time_pct = f.at("time_pct").get<double>();
      s.status = parse_frame_status(f.at("status").get<std::string>());
      s.ssid_raw = f.at("ssid_raw").get<double>();
      s.ssid_pct = f.at("ssid_pct").get<double>();
      if (f.contains("detail")) s.detail = f.at("detail").get<std::string>();
      r.series.scores.push_back(std::move(s));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("report JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("report JSON: ") + e.what());
  }
}

void write_json(const AnalysisReport& report, const std::filesystem::path& path) {
  write_text(report_to_json(report).dump(2) + "\n", path);
}

AnalysisReport read_json_report(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  try {
    return report_from_json(ordered_json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("report JSON: ") + e.what());
  }
}

}  // namespace facesym
