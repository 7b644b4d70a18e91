#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "facesym/analysis.hpp"

namespace facesym {

struct ReportSummary {
  std::int64_t frames = 0;
  std::int64_t scored = 0;
  std::int64_t no_face = 0;
  std::int64_t discarded_tilt = 0;
  double baseline_pct = 0.0;
  BaselineSource baseline_source = BaselineSource::kEstimated;
  std::int64_t dip_count = 0;
  double congruence_threshold_pct = kDefaultCongruencePct;
  std::int64_t congruent = 0;
  std::int64_t incongruent = 0;

  friend bool operator==(const ReportSummary&, const ReportSummary&) = default;
};

struct AnalysisReport {
  AsymmetrySeries series;
  // Every parameter that influences the output bytes.
  nlohmann::ordered_json config_echo;
  ReportSummary summary;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

ReportSummary summarize(const AsymmetrySeries& series,
                        double congruence_threshold_pct = kDefaultCongruencePct);

// Analysis parameters of a pipeline config. Thread count and debug output do
// not affect results and are left out.
nlohmann::ordered_json config_to_json(const PipelineConfig& config);

AnalysisReport make_report(const AsymmetrySeries& series,
                           const PipelineConfig& config,
                           nlohmann::ordered_json inputs = {});

// frame_index,time_ms,time_pct,status,ssid_raw,ssid_pct with six decimals and
// LF line endings.
std::string csv_text(const AsymmetrySeries& series);
void write_csv(const AsymmetrySeries& series, const std::filesystem::path& path);

// Time (%) against SSID (%): the per-frame polyline with unscored frames at
// -10, the baseline rule and one shaded rect per dip. Axes span 0..100 in x
// and -15..100 in y.
std::string svg_text(const AsymmetrySeries& series);
void render_svg(const AsymmetrySeries& series, const std::filesystem::path& path);

nlohmann::ordered_json report_to_json(const AnalysisReport& report);
AnalysisReport report_from_json(const nlohmann::ordered_json& doc);
void write_json(const AnalysisReport& report, const std::filesystem::path& path);
AnalysisReport read_json_report(const std::filesystem::path& path);

}  // namespace facesym
