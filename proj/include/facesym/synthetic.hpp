#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "facesym/image.hpp"
#include "facesym/landmarks.hpp"

namespace facesym::synthetic {

// An analytic face rendered directly at its pose (no resampling). With
// asymmetry == 0 the face is exactly mirror-symmetric about x = center_x in
// its own upright frame, so an integer center gives pixel-exact symmetry.
struct FaceSpec {
  double center_x = 128.0;
  double center_y = 128.0;
  double scale = 56.0;  // jaw half-width is 0.95 * scale
  double roll_deg = 0.0;
  // Strength of a texture and shading change confined to the image-right half
  // of the face; 0 keeps the face symmetric.
  double asymmetry = 0.0;
};

// Face-local template, x in units of scale, y downward; the midline is x = 0.
const std::array<Point, Landmarks68::kCount>& landmark_template();

Landmarks68 face_landmarks(const FaceSpec& spec);

GrayImage render_face(int width, int height, const FaceSpec& spec);

enum class FrameKind { kFace, kNoFace };

struct FrameSpec {
  FrameKind kind = FrameKind::kFace;
  FaceSpec face;
};

struct VideoSpec {
  int width = 256;
  int height = 256;
  double fps = 60.0;
  std::vector<FrameSpec> frames;
};

// Frontal symmetric face with small integer jitter in position.
VideoSpec symmetric_video(int frame_count = 60);

// 100 frames at 60 fps. Frames 40-49 (40-50% of the clip) carry injected
// asymmetry, frames 20 and 21 have no face and frame 80 is rolled 10 degrees.
VideoSpec injected_dip_video();

struct WrittenFixture {
  std::filesystem::path manifest;
  std::filesystem::path sidecar;
};

// Writes frame_NNNNNN.png files, manifest.json and landmarks.jsonl into dir.
// With mirror set, every frame and its landmarks are flipped horizontally.
WrittenFixture write_fixture(const VideoSpec& video,
                             const std::filesystem::path& dir,
                             bool mirror = false);

}  // namespace facesym::synthetic
