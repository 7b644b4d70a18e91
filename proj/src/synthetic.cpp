#include "facesym/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include <json.hpp>

namespace facesym::synthetic {

namespace {

std::array<Point, Landmarks68::kCount> build_template() {
  std::array<Point, Landmarks68::kCount> t{};
  auto set_pair = [&](int i, double x, double y) {
    t[i] = {x, y};
    t[mirrored_landmark_index(i)] = {-x, y};
  };
  // Jaw: quarter ellipse from the temple down to the chin.
  for (int k = 0; k < 8; ++k) {
    const double a = std::numbers::pi * k / 16.0;
    set_pair(k, -0.95 * std::cos(a), -0.15 + 1.25 * std::sin(a));
  }
  t[8] = {0.0, 1.10};
  // Brow on the image-left side, outer to inner.
  set_pair(17, -0.80, -0.50);
  set_pair(18, -0.66, -0.57);
  set_pair(19, -0.50, -0.60);
  set_pair(20, -0.34, -0.58);
  set_pair(21, -0.18, -0.53);
  // Nose bridge and nostrils.
  t[27] = {0.0, -0.35};
  t[28] = {0.0, -0.20};
  t[29] = {0.0, -0.05};
  t[30] = {0.0, 0.10};
  set_pair(31, -0.20, 0.22);
  set_pair(32, -0.10, 0.26);
  t[33] = {0.0, 0.28};
  // Eye on the image-left side: outer corner, upper lid, inner corner, lower lid.
  set_pair(36, -0.58, -0.30);
  set_pair(37, -0.47, -0.36);
  set_pair(38, -0.33, -0.36);
  set_pair(39, -0.22, -0.30);
  set_pair(40, -0.33, -0.25);
  set_pair(41, -0.47, -0.25);
  // Outer lips.
  set_pair(48, -0.38, 0.55);
  set_pair(49, -0.22, 0.48);
  set_pair(50, -0.08, 0.45);
  t[51] = {0.0, 0.47};
  set_pair(59, -0.22, 0.64);
  set_pair(58, -0.08, 0.68);
  t[57] = {0.0, 0.69};
  // Inner lips.
  set_pair(60, -0.30, 0.555);
  set_pair(61, -0.10, 0.52);
  t[62] = {0.0, 0.525};
  set_pair(67, -0.10, 0.585);
  t[66] = {0.0, 0.58};
  return t;
}

double gauss(double x, double y, double cx, double cy, double sx, double sy) {
  const double dx = (x - cx) / sx;
  const double dy = (y - cy) / sy;
  return std::exp(-0.5 * (dx * dx + dy * dy));
}

double smoothstep(double e0, double e1, double v) {
  const double t = std::clamp((v - e0) / (e1 - e0), 0.0, 1.0);
  return t * t * (3.0 - 2.0 * t);
}

double background(double x, double y) {
  return 0.18 + 0.04 * std::cos(x * 0.05) * std::cos(y * 0.07);
}

// Soft elliptical face mask in face-local coordinates.
double face_mask(double lx, double ly) {
  const double r = std::hypot(std::abs(lx) / 0.98, ly - 0.22);
  return 1.0 - smoothstep(0.92, 1.0, r);
}

// Skin and features at face-local (lx, ly); the symmetric part depends on
// |lx| only.
double face_value(double lx, double ly, double asymmetry) {
  const double ax = std::abs(lx);
  double v = 0.62;
  v += 0.06 * std::cos(7.0 * ax) * std::cos(5.0 * ly);
  v += 0.04 * std::cos(13.0 * ax + 2.0 * ly);
  v -= 0.08 * ax * ax;                                   // cheek falloff
  v -= 0.40 * gauss(ax, ly, 0.40, -0.30, 0.10, 0.045);   // eyes
  v -= 0.25 * gauss(ax, ly, 0.40, -0.30, 0.03, 0.03);    // pupils
  v -= 0.30 * gauss(ax, ly, 0.49, -0.565, 0.17, 0.03);   // brows
  v += 0.10 * gauss(ax, ly, 0.0, -0.05, 0.05, 0.25);     // nose bridge
  v -= 0.20 * gauss(ax, ly, 0.12, 0.24, 0.05, 0.03);     // nostrils
  v -= 0.35 * gauss(ax, ly, 0.0, 0.56, 0.28, 0.05);      // mouth
  if (asymmetry != 0.0 && lx > 0.0) {
    v += asymmetry * 0.22 * std::cos(25.0 * lx) * std::cos(19.0 * ly);
    v -= asymmetry * 0.30 * gauss(lx, ly, 0.38, 0.46, 0.08, 0.06);   // raised corner
    v += asymmetry * 0.15 * gauss(lx, ly, 0.50, 0.10, 0.15, 0.12);   // flushed cheek
    v -= asymmetry * 0.25 * gauss(lx, ly, 0.40, -0.42, 0.14, 0.04);  // squint
  }
  return v;
}

}  // namespace

const std::array<Point, Landmarks68::kCount>& landmark_template() {
  static const auto kTemplate = build_template();
  return kTemplate;
}

Landmarks68 face_landmarks(const FaceSpec& spec) {
  const auto& t = landmark_template();
  const double rad = spec.roll_deg * std::numbers::pi / 180.0;
  const double c = std::cos(rad);
  const double s = std::sin(rad);
  std::array<Point, Landmarks68::kCount> pts{};
  for (int i = 0; i < Landmarks68::kCount; ++i) {
    const double x = spec.scale * t[i].x;
    const double y = spec.scale * t[i].y;
    if (spec.roll_deg == 0.0) {
      pts[i] = {spec.center_x + x, spec.center_y + y};
    } else {
      pts[i] = {spec.center_x + c * x - s * y, spec.center_y + s * x + c * y};
    }
  }
  return Landmarks68(pts);
}

GrayImage render_face(int width, int height, const FaceSpec& spec) {
  const double rad = spec.roll_deg * std::numbers::pi / 180.0;
  const double c = std::cos(rad);
  const double s = std::sin(rad);
  GrayImage img(width, height);
  for (int y = 0; y < height; ++y) {
    auto row = img.row(y);
    for (int x = 0; x < width; ++x) {
      const double dx = x + 0.5 - spec.center_x;
      const double dy = y + 0.5 - spec.center_y;
      double lx = dx, ly = dy;
      if (spec.roll_deg != 0.0) {
        lx = c * dx + s * dy;
        ly = -s * dx + c * dy;
      }
      lx /= spec.scale;
      ly /= spec.scale;
      const double mask = face_mask(lx, ly);
      const double bg = background(std::abs(lx) * spec.scale, ly * spec.scale);
      const double v =
          mask > 0.0 ? mask * face_value(lx, ly, spec.asymmetry) + (1.0 - mask) * bg
                     : bg;
      row[x] = std::clamp(v, 0.0, 1.0);
    }
  }
  return img;
}

VideoSpec symmetric_video(int frame_count) {
  VideoSpec video;
  for (int k = 0; k < frame_count; ++k) {
    FrameSpec f;
    f.face.center_x = 128.0 + (k % 5) - 2;
    f.face.center_y = 128.0 + (k % 3) - 1;
    video.frames.push_back(f);
  }
  return video;
}

VideoSpec injected_dip_video() {
  VideoSpec video = symmetric_video(100);
  for (int k = 0; k < 100; ++k) {
    FaceSpec& face = video.frames[k].face;
    // Mild, varying asymmetry everywhere so scores are not all 100.
    face.asymmetry = 0.06 * (1.0 + std::sin(0.7 * k)) / 2.0;
    if (k >= 40 && k < 50) face.asymmetry = 1.0;
  }
  video.frames[20].kind = FrameKind::kNoFace;
  video.frames[21].kind = FrameKind::kNoFace;
  video.frames[80].face.roll_deg = 10.0;
  return video;
}

WrittenFixture write_fixture(const VideoSpec& video,
                             const std::filesystem::path& dir, bool mirror) {
  std::filesystem::create_directories(dir);
  nlohmann::ordered_json manifest;
  manifest["fps"] = video.fps;
  manifest["frames"] = nlohmann::ordered_json::array();
  std::ofstream sidecar(dir / "landmarks.jsonl", std::ios::binary);

  for (std::size_t k = 0; k < video.frames.size(); ++k) {
    const FrameSpec& f = video.frames[k];
    char name[32];
    std::snprintf(name, sizeof(name), "frame_%06zu.png", k);

    SidecarRecord record{static_cast<std::int64_t>(k), NoFace{}};
    GrayImage img(video.width, video.height);
    if (f.kind == FrameKind::kFace) {
      img = render_face(video.width, video.height, f.face);
      Landmarks68 lm = face_landmarks(f.face);
      if (mirror) lm = mirror_horizontal(lm, video.width);
      record.face = lm;
    } else {
      for (int y = 0; y < video.height; ++y) {
        for (int x = 0; x < video.width; ++x) {
          img.at(x, y) = background(std::abs(x + 0.5 - video.width / 2.0),
                                    y + 0.5 - video.height / 2.0);
        }
      }
    }
    if (mirror) img = mirror_horizontal(img);
    write_png(img, dir / name);
    sidecar << to_sidecar_line(record) << '\n';
    manifest["frames"].push_back({{"index", k}, {"file", name}});
  }
  std::ofstream(dir / "manifest.json", std::ios::binary) << manifest.dump(2)
                                                          << '\n';
  return {dir / "manifest.json", dir / "landmarks.jsonl"};
}

}  // namespace facesym::synthetic
