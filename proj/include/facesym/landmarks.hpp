#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace facesym {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

// The 68-point face annotation scheme:
//   0-16 jaw, 17-26 brows, 27-35 nose, 36-41 eye on the image-left side
//   (the subject's right eye), 42-47 eye on the image-right side, 48-67 mouth.
// Coordinates are continuous frame pixels (see GrayImage).
class Landmarks68 {
 public:
  static constexpr int kCount = 68;

  // Throws std::invalid_argument for non-finite coordinates and GeometryError
  // when the bounding box has zero width or height.
  explicit Landmarks68(const std::array<Point, kCount>& points);

  const std::array<Point, kCount>& points() const { return points_; }
  const Point& operator[](int i) const { return points_[i]; }

  struct Box {
    double min_x, min_y, max_x, max_y;
  };
  Box bounds() const;

  friend bool operator==(const Landmarks68&, const Landmarks68&) = default;

 private:
  std::array<Point, kCount> points_;
};

// Index of the anatomically mirrored landmark (left jaw <-> right jaw, etc.).
// Midline points (nose bridge, chin, lip centers) map to themselves.
int mirrored_landmark_index(int i);

// Reflects every point to width - x and relabels left/right landmarks so the
// result is again a valid 68-point annotation of the mirrored frame.
Landmarks68 mirror_horizontal(const Landmarks68& lm, double width);

struct NoFace {
  friend bool operator==(const NoFace&, const NoFace&) = default;
};

using FrameFaceResult = std::variant<NoFace, Landmarks68>;

inline bool has_face(const FrameFaceResult& r) {
  return std::holds_alternative<Landmarks68>(r);
}

struct SidecarRecord {
  std::int64_t index = 0;
  FrameFaceResult face;

  friend bool operator==(const SidecarRecord&, const SidecarRecord&) = default;
};

// One sidecar line: {"index": i, "points": [[x,y] x 68]} or
// {"index": i, "no_face": true}. Throws InputError; malformed JSON,
// point-count mismatch and non-numeric coordinates produce distinct messages,
// each naming the frame index when it could be read.
SidecarRecord parse_landmark_sidecar(std::string_view line);

std::string to_sidecar_line(const SidecarRecord& record);

// Reads a JSON-lines sidecar; blank lines are skipped. Errors cite the line.
std::vector<SidecarRecord> load_sidecar_file(const std::filesystem::path& path);

struct EyeCenters {
  Point left;   // mean of 42-47
  Point right;  // mean of 36-41
};

EyeCenters eye_centers(const Landmarks68& lm);

// Signed angle in degrees, in (-90, 90], of the segment from the right eye
// center to the left eye center. Positive when the image-right eye sits lower.
// Throws GeometryError when the eye centers coincide.
double roll_angle(const Landmarks68& lm);

enum class TiltAction { kProcessAsIs, kAlignThenProcess, kDiscard };

struct TiltDecision {
  TiltAction action = TiltAction::kProcessAsIs;
  double roll_deg = 0.0;

  friend bool operator==(const TiltDecision&, const TiltDecision&) = default;
};

inline constexpr double kDefaultTiltThresholdDeg = 5.0;
inline constexpr double kDefaultAlignDeadbandDeg = 0.5;

// |roll| > threshold discards; otherwise |roll| <= dead_band is left as is and
// anything in between is aligned.
TiltDecision tilt_gate(double roll_deg,
                       double threshold_deg = kDefaultTiltThresholdDeg,
                       double dead_band_deg = kDefaultAlignDeadbandDeg);

// Mean x of the nose bridge (27-30) and the chin (8).
double midline_x(const Landmarks68& lm);

}  // namespace facesym
