#include "facesym/analysis.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <unordered_map>

#include "facesym/debug_frame.hpp"
#include "facesym/detector.hpp"
#include "facesym/errors.hpp"

namespace facesym {

std::string_view to_string(FrameStatus status) {
  switch (status) {
    case FrameStatus::kScored:
      return "Scored";
    case FrameStatus::kNoFace:
      return "NoFace";
    case FrameStatus::kDiscardedTilt:
      return "DiscardedTilt";
  }
  return "Unknown";
}

FrameStatus parse_frame_status(std::string_view text) {
  if (text == "Scored") return FrameStatus::kScored;
  if (text == "NoFace") return FrameStatus::kNoFace;
  if (text == "DiscardedTilt") return FrameStatus::kDiscardedTilt;
  throw std::invalid_argument("unknown frame status '" + std::string(text) + "'");
}

std::string_view to_string(BaselineSource source) {
  return source == BaselineSource::kExternal ? "external" : "estimated";
}

std::string_view to_string(BaselineEstimator estimator) {
  return estimator == BaselineEstimator::kMedian ? "median" : "midpoint";
}

BaselineSource parse_baseline_source(std::string_view text) {
  if (text == "external") return BaselineSource::kExternal;
  if (text == "estimated") return BaselineSource::kEstimated;
  throw std::invalid_argument("unknown baseline source '" + std::string(text) + "'");
}

BaselineEstimator parse_baseline_estimator(std::string_view text) {
  if (text == "midpoint") return BaselineEstimator::kMidpoint;
  if (text == "median") return BaselineEstimator::kMedian;
  throw std::invalid_argument("unknown baseline estimator '" +
                              std::string(text) + "'");
}

FrameAnalysis analyze_frame(const GrayImage& frame, const FrameFaceResult& face,
                            const ScoringParams& params) {
  FrameAnalysis out;
  const auto* lm = std::get_if<Landmarks68>(&face);
  if (lm == nullptr) return out;

  out.status = FrameStatus::kDiscardedTilt;
  try {
    const double roll = roll_angle(*lm);
    out.roll_deg = roll;
    const TiltDecision decision =
        tilt_gate(roll, params.tilt_threshold_deg, params.align_deadband_deg);
    if (decision.action == TiltAction::kDiscard) {
      out.detail = "roll exceeds tilt threshold";
      return out;
    }
    FaceChip chip = align_and_crop(frame, *lm, decision, params.align);
    CompositePair pair = make_composites(chip);
    const double score = ssid(pair.ll, pair.rr, params.ssim);
    out.status = FrameStatus::kScored;
    out.ssid_raw = score;
    out.chip = std::move(chip);
    out.composites = std::move(pair);
  } catch (const std::exception& e) {
    out.status = FrameStatus::kDiscardedTilt;
    out.ssid_raw = kSentinelSsid;
    out.detail = e.what();
    out.chip.reset();
    out.composites.reset();
  }
  return out;
}

FrameScore score_frame(const GrayImage& frame, const FrameFaceResult& face,
                       const ScoringParams& params) {
  FrameAnalysis a = analyze_frame(frame, face, params);
  FrameScore score;
  score.status = a.status;
  score.ssid_raw = a.ssid_raw;
  score.ssid_pct = a.status == FrameStatus::kScored ? a.ssid_raw * 100.0
                                                    : kSentinelPct;
  score.detail = std::move(a.detail);
  return score;
}

double estimate_baseline(std::span<const FrameScore> scores,
                         BaselineEstimator estimator) {
  std::vector<double> values;
  for (const FrameScore& s : scores) {
    if (s.scored()) values.push_back(s.ssid_pct);
  }
  if (values.empty()) {
    throw InputError("no scored frames; cannot estimate a baseline");
  }
  std::sort(values.begin(), values.end());
  if (estimator == BaselineEstimator::kMidpoint) {
    return (values.front() + values.back()) / 2.0;
  }
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return (values[mid - 1] + values[mid]) / 2.0;
}

std::vector<DipInterval> detect_dips(std::span<const FrameScore> scores,
                                     double baseline_pct, double delta_pct,
                                     int min_frames) {
  const double limit = baseline_pct - delta_pct;
  std::vector<DipInterval> dips;
  std::size_t i = 0;
  while (i < scores.size()) {
    if (!(scores[i].scored() && scores[i].ssid_pct < limit)) {
      ++i;
      continue;
    }
    std::size_t j = i;
    double lowest = scores[i].ssid_pct;
    while (j + 1 < scores.size() && scores[j + 1].scored() &&
           scores[j + 1].ssid_pct < limit) {
      ++j;
      lowest = std::min(lowest, scores[j].ssid_pct);
    }
    if (static_cast<long>(j - i + 1) >= min_frames) {
      const double end = j + 1 < scores.size() ? scores[j + 1].time_pct : 100.0;
      dips.push_back({scores[i].time_pct, end, lowest, scores[i].frame_index,
                      scores[j].frame_index});
    }
    i = j + 1;
  }
  return dips;
}

Congruence classify_congruence(double ssid_pct, double threshold_pct) {
  if (ssid_pct < 0.0) {
    throw std::invalid_argument("congruence is undefined for unscored frames");
  }
  return ssid_pct >= threshold_pct ? Congruence::kCongruent
                                   : Congruence::kIncongruent;
}

std::vector<FrameFaceResult> collect_landmarks(const LandmarkSource& source,
                                               const FrameManifest& manifest) {
  if (source.sidecar.has_value() == source.detector_command.has_value()) {
    throw std::invalid_argument("exactly one landmark source must be set");
  }
  const auto& frames = manifest.frames();
  std::vector<FrameFaceResult> faces(frames.size());

  if (source.detector_command) {
    std::vector<std::filesystem::path> paths;
    paths.reserve(frames.size());
    for (std::size_t i = 0; i < frames.size(); ++i) {
      paths.push_back(manifest.frame_path(i));
    }
    auto records = run_detector(*source.detector_command, paths);
    for (std::size_t i = 0; i < frames.size(); ++i) {
      if (records[i].index != frames[i].index) {
        throw InputError("detector: record " + std::to_string(i) +
                         " has index " + std::to_string(records[i].index) +
                         ", expected frame " + std::to_string(frames[i].index));
      }
      faces[i] = std::move(records[i].face);
    }
    return faces;
  }

  auto records = load_sidecar_file(*source.sidecar);
  std::vector<bool> seen(frames.size(), false);
  for (auto& record : records) {
    const auto pos = manifest.position_of(record.index);
    if (pos < 0) {
      throw InputError("landmarks: frame index " + std::to_string(record.index) +
                       " is not in the manifest");
    }
    if (seen[static_cast<std::size_t>(pos)]) {
      throw InputError("landmarks: duplicate record for frame " +
                       std::to_string(record.index));
    }
    seen[static_cast<std::size_t>(pos)] = true;
    faces[static_cast<std::size_t>(pos)] = std::move(record.face);
  }
  for (std::size_t i = 0; i < frames.size(); ++i) {
    if (!seen[i]) {
      throw InputError("landmarks: no record for frame " +
                       std::to_string(frames[i].index));
    }
  }
  return faces;
}

AsymmetrySeries run_pipeline(const FrameManifest& manifest,
                             std::span<const FrameFaceResult> faces,
                             const PipelineConfig& config) {
  const auto& frames = manifest.frames();
  if (faces.size() != frames.size()) {
    throw InputError("landmark count " + std::to_string(faces.size()) +
                     " does not match manifest frame count " +
                     std::to_string(frames.size()));
  }
  config.scoring.ssim.validate();
  if (config.debug_dir) std::filesystem::create_directories(*config.debug_dir);

  const long n = static_cast<long>(frames.size());
  std::vector<FrameScore> scores(frames.size());
  std::vector<std::exception_ptr> errors(frames.size());
  const int jobs = std::max(1, config.jobs);

#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
  for (long i = 0; i < n; ++i) {
    try {
      const auto& entry = frames[static_cast<std::size_t>(i)];
      const GrayImage image = load_frame(manifest, entry.index);
      const FrameFaceResult& face = faces[static_cast<std::size_t>(i)];
      FrameAnalysis a = analyze_frame(image, face, config.scoring);
      if (config.debug_dir) {
        write_debug_frame(*config.debug_dir, entry.index, image, a);
      }
      FrameScore& s = scores[static_cast<std::size_t>(i)];
      s.frame_index = entry.index;
      s.time_ms = manifest.time_ms(entry.index);
      s.time_pct = 100.0 * static_cast<double>(i) / static_cast<double>(n);
      s.status = a.status;
      s.ssid_raw = a.ssid_raw;
      s.ssid_pct = a.status == FrameStatus::kScored ? a.ssid_raw * 100.0
                                                    : kSentinelPct;
      s.detail = std::move(a.detail);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  AsymmetrySeries series;
  series.scores = std::move(scores);
  if (config.external_baseline_pct) {
    series.baseline_pct = *config.external_baseline_pct;
    series.baseline_source = BaselineSource::kExternal;
  } else {
    series.baseline_pct = estimate_baseline(series.scores, config.estimator);
    series.baseline_source = BaselineSource::kEstimated;
  }
  series.dips = detect_dips(series.scores, series.baseline_pct, config.delta_pct,
                            config.min_frames);
  return series;
}

AsymmetrySeries run_pipeline(const FrameManifest& manifest,
                             const LandmarkSource& source,
                             const PipelineConfig& config) {
  const auto faces = collect_landmarks(source, manifest);
  return run_pipeline(manifest, faces, config);
}

}  // namespace facesym
