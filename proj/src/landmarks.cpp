#include "facesym/landmarks.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

#include "facesym/errors.hpp"

namespace facesym {

using nlohmann::json;

Landmarks68::Landmarks68(const std::array<Point, kCount>& points)
    : points_(points) {
  for (const Point& p : points_) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw std::invalid_argument("landmark coordinate is not finite");
    }
  }
  const Box b = bounds();
  if (!(b.max_x > b.min_x) || !(b.max_y > b.min_y)) {
    throw GeometryError("landmark bounding box is degenerate");
  }
}

Landmarks68::Box Landmarks68::bounds() const {
  Box b{points_[0].x, points_[0].y, points_[0].x, points_[0].y};
  for (const Point& p : points_) {
    b.min_x = std::min(b.min_x, p.x);
    b.max_x = std::max(b.max_x, p.x);
    b.min_y = std::min(b.min_y, p.y);
    b.max_y = std::max(b.max_y, p.y);
  }
  return b;
}

int mirrored_landmark_index(int i) {
  if (i < 0 || i >= Landmarks68::kCount) {
    throw std::out_of_range("landmark index out of range");
  }
  if (i <= 16) return 16 - i;  // jaw
  if (i <= 26) return 43 - i;  // brows
  if (i <= 30) return i;       // nose bridge
  if (i <= 35) return 66 - i;  // nostrils
  if (i <= 47) {
    // Eyes: corners and upper lids pair by 81, lower lids by 87.
    static constexpr std::array<int, 12> kEyes = {45, 44, 43, 42, 47, 46,
                                                  39, 38, 37, 36, 41, 40};
    return kEyes[i - 36];
  }
  if (i <= 54) return 102 - i;  // outer upper lip
  if (i <= 59) return 114 - i;  // outer lower lip
  if (i <= 64) return 124 - i;  // inner upper lip
  return 132 - i;               // inner lower lip
}

Landmarks68 mirror_horizontal(const Landmarks68& lm, double width) {
  std::array<Point, Landmarks68::kCount> out{};
  for (int i = 0; i < Landmarks68::kCount; ++i) {
    const Point& p = lm[i];
    out[mirrored_landmark_index(i)] = Point{width - p.x, p.y};
  }
  return Landmarks68(out);
}

namespace {

std::string frame_context(const json& doc) {
  if (doc.is_object() && doc.contains("index") &&
      doc["index"].is_number_integer()) {
    return "frame " + std::to_string(doc["index"].get<std::int64_t>());
  }
  return "record";
}

}  // namespace

SidecarRecord parse_landmark_sidecar(std::string_view line) {
  json doc;
  try {
    doc = json::parse(line);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("landmarks: malformed JSON: ") + e.what());
  }
  const std::string where = "landmarks: " + frame_context(doc);
  if (!doc.is_object()) throw InputError(where + ": expected a JSON object");
  if (!doc.contains("index") || !doc["index"].is_number_integer()) {
    throw InputError(where + ": field 'index' missing or not an integer");
  }
  SidecarRecord record;
  record.index = doc["index"].get<std::int64_t>();

  if (doc.contains("no_face")) {
    if (doc["no_face"] != true) {
      throw InputError(where + ": field 'no_face' must be true when present");
    }
    if (doc.contains("points")) {
      throw InputError(where + ": a no_face record must not carry points");
    }
    record.face = NoFace{};
    return record;
  }
  if (!doc.contains("points") || !doc["points"].is_array()) {
    throw InputError(where + ": field 'points' missing or not an array");
  }
  const json& pts = doc["points"];
  if (pts.size() != Landmarks68::kCount) {
    throw InputError(where + ": point-count mismatch: expected 68, got " +
                     std::to_string(pts.size()));
  }
  std::array<Point, Landmarks68::kCount> points{};
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const json& p = pts[i];
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() ||
        !p[1].is_number()) {
      throw InputError(where + ": point " + std::to_string(i) +
                       " is not a numeric [x, y] pair");
    }
    points[i] = Point{p[0].get<double>(), p[1].get<double>()};
  }
  try {
    record.face = Landmarks68(points);
  } catch (const std::exception& e) {
    throw InputError(where + ": " + e.what());
  }
  return record;
}

std::string to_sidecar_line(const SidecarRecord& record) {
  nlohmann::ordered_json doc;
  doc["index"] = record.index;
  if (const auto* lm = std::get_if<Landmarks68>(&record.face)) {
    auto pts = nlohmann::ordered_json::array();
    for (const Point& p : lm->points()) pts.push_back({p.x, p.y});
    doc["points"] = std::move(pts);
  } else {
    doc["no_face"] = true;
  }
  return doc.dump();
}

std::vector<SidecarRecord> load_sidecar_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("landmarks: cannot open '" + path.string() + "'");
  }
  std::vector<SidecarRecord> records;
  std::string line;
  for (int line_no = 1; std::getline(in, line); ++line_no) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      records.push_back(parse_landmark_sidecar(line));
    } catch (const InputError& e) {
      throw InputError(path.string() + ":" + std::to_string(line_no) + ": " +
                       e.what());
    }
  }
  return records;
}

namespace {

Point mean_of(const Landmarks68& lm, int first, int last) {
  double sx = 0.0, sy = 0.0;
  for (int i = first; i <= last; ++i) {
    sx += lm[i].x;
    sy += lm[i].y;
  }
  const double n = last - first + 1;
  return {sx / n, sy / n};
}

}  // namespace

EyeCenters eye_centers(const Landmarks68& lm) {
  return {mean_of(lm, 42, 47), mean_of(lm, 36, 41)};
}

double roll_angle(const Landmarks68& lm) {
  const EyeCenters eyes = eye_centers(lm);
  const double dx = eyes.left.x - eyes.right.x;
  const double dy = eyes.left.y - eyes.right.y;
  if (dx == 0.0 && dy == 0.0) {
    throw GeometryError("eye centers coincide; roll is undefined");
  }
  double deg = std::atan2(dy, dx) * 180.0 / std::numbers::pi;
  if (deg > 90.0) deg -= 180.0;
  if (deg <= -90.0) deg += 180.0;
  return deg;
}

TiltDecision tilt_gate(double roll_deg, double threshold_deg,
                       double dead_band_deg) {
  const double magnitude = std::abs(roll_deg);
  if (magnitude > threshold_deg) return {TiltAction::kDiscard, roll_deg};
  if (magnitude <= dead_band_deg) return {TiltAction::kProcessAsIs, roll_deg};
  return {TiltAction::kAlignThenProcess, roll_deg};
}

double midline_x(const Landmarks68& lm) {
  return (lm[27].x + lm[28].x + lm[29].x + lm[30].x + lm[8].x) / 5.0;
}

}  // namespace facesym
