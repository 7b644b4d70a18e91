#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "facesym/composite.hpp"
#include "facesym/geometry.hpp"
#include "facesym/ingest.hpp"
#include "facesym/landmarks.hpp"
#include "facesym/ssim.hpp"

namespace facesym {

// Score recorded for frames without a usable face.
inline constexpr double kSentinelSsid = -0.1;
inline constexpr double kSentinelPct = -10.0;

enum class FrameStatus { kScored, kNoFace, kDiscardedTilt };

std::string_view to_string(FrameStatus status);
FrameStatus parse_frame_status(std::string_view text);

struct FrameScore {
  std::int64_t frame_index = 0;
  double time_ms = 0.0;
  double time_pct = 0.0;
  FrameStatus status = FrameStatus::kNoFace;
  double ssid_raw = kSentinelSsid;
  double ssid_pct = kSentinelPct;
  // Why a frame with a face was not scored; empty otherwise.
  std::string detail;

  bool scored() const { return status == FrameStatus::kScored; }
  friend bool operator==(const FrameScore&, const FrameScore&) = default;
};

struct DipInterval {
  double start_pct = 0.0;
  double end_pct = 0.0;
  double min_ssid_pct = 0.0;
  std::int64_t first_frame = 0;
  std::int64_t last_frame = 0;

  friend bool operator==(const DipInterval&, const DipInterval&) = default;
};

enum class BaselineSource { kExternal, kEstimated };
enum class BaselineEstimator { kMidpoint, kMedian };

std::string_view to_string(BaselineSource source);
std::string_view to_string(BaselineEstimator estimator);
BaselineSource parse_baseline_source(std::string_view text);
BaselineEstimator parse_baseline_estimator(std::string_view text);

struct AsymmetrySeries {
  std::vector<FrameScore> scores;
  double baseline_pct = 0.0;
  BaselineSource baseline_source = BaselineSource::kEstimated;
  std::vector<DipInterval> dips;

  friend bool operator==(const AsymmetrySeries&,
                         const AsymmetrySeries&) = default;
};

struct ScoringParams {
  double tilt_threshold_deg = kDefaultTiltThresholdDeg;
  double align_deadband_deg = kDefaultAlignDeadbandDeg;
  AlignParams align;
  SsimParams ssim;
};

// Everything score_frame produced on the way to a score; chip and composites
// are set only for scored frames.
struct FrameAnalysis {
  FrameStatus status = FrameStatus::kNoFace;
  double ssid_raw = kSentinelSsid;
  std::string detail;
  std::optional<double> roll_deg;
  std::optional<FaceChip> chip;
  std::optional<CompositePair> composites;
};

FrameAnalysis analyze_frame(const GrayImage& frame, const FrameFaceResult& face,
                            const ScoringParams& params = {});

// NoFace and discarded tilts yield the -0.1 sentinel. Geometry failures on a
// detected face are reported as kDiscardedTilt with the reason in `detail`.
// Index and time fields are left for the caller.
FrameScore score_frame(const GrayImage& frame, const FrameFaceResult& face,
                       const ScoringParams& params = {});

// Midpoint of the extreme scored values, or their median. Throws InputError
// when nothing was scored.
double estimate_baseline(std::span<const FrameScore> scores,
                         BaselineEstimator estimator = BaselineEstimator::kMidpoint);

inline constexpr double kDefaultDeltaPct = 10.0;
inline constexpr int kDefaultMinFrames = 3;

// Maximal runs of at least min_frames consecutive scored frames below
// baseline - delta. Unscored frames end a run. An interval runs from the
// start of its first frame to the start of the frame after its last one (100
// at the end of the clip).
std::vector<DipInterval> detect_dips(std::span<const FrameScore> scores,
                                     double baseline_pct,
                                     double delta_pct = kDefaultDeltaPct,
                                     int min_frames = kDefaultMinFrames);

enum class Congruence { kCongruent, kIncongruent };

inline constexpr double kDefaultCongruencePct = 75.0;

// ssid_pct >= threshold is congruent. Throws std::invalid_argument for
// sentinel (negative) input.
Congruence classify_congruence(double ssid_pct,
                               double threshold_pct = kDefaultCongruencePct);

struct PipelineConfig {
  ScoringParams scoring;
  std::optional<double> external_baseline_pct;
  BaselineEstimator estimator = BaselineEstimator::kMidpoint;
  double delta_pct = kDefaultDeltaPct;
  int min_frames = kDefaultMinFrames;
  double congruence_threshold_pct = kDefaultCongruencePct;
  int jobs = 1;
  std::optional<std::filesystem::path> debug_dir;
};

// Exactly one of the two is set.
struct LandmarkSource {
  std::optional<std::filesystem::path> sidecar;
  std::optional<std::string> detector_command;
};

// Landmark results ordered like the manifest. Throws InputError when the
// source misses, repeats or adds frame indices.
std::vector<FrameFaceResult> collect_landmarks(const LandmarkSource& source,
                                               const FrameManifest& manifest);

// Scores every frame (in parallel across config.jobs threads), then resolves
// the baseline and dips in one ordered pass. Output does not depend on jobs.
AsymmetrySeries run_pipeline(const FrameManifest& manifest,
                             std::span<const FrameFaceResult> faces,
                             const PipelineConfig& config);

AsymmetrySeries run_pipeline(const FrameManifest& manifest,
                             const LandmarkSource& source,
                             const PipelineConfig& config);

}  // namespace facesym
