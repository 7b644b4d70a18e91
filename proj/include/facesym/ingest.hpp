#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "facesym/image.hpp"

namespace facesym {

struct ManifestFrame {
  std::int64_t index = 0;
  std::string file;

  friend bool operator==(const ManifestFrame&, const ManifestFrame&) = default;
};

// Validated, immutable description of an already-extracted frame sequence.
//
// Indices run 0, 1, 2, ... without gaps, so frame k starts at k * 1000 / fps
// and the clip lasts frame_count * 1000 / fps.
class FrameManifest {
 public:
  FrameManifest(double fps, std::vector<ManifestFrame> frames,
                std::filesystem::path base_dir);

  double fps() const { return fps_; }
  const std::vector<ManifestFrame>& frames() const { return frames_; }
  std::size_t size() const { return frames_.size(); }
  const std::filesystem::path& base_dir() const { return base_dir_; }

  double frame_duration_ms() const { return 1000.0 / fps_; }
  double duration_ms() const;
  double time_ms(std::int64_t frame_index) const;

  // Position of frame_index in frames(), or -1 when absent.
  std::ptrdiff_t position_of(std::int64_t frame_index) const;
  std::filesystem::path frame_path(std::size_t position) const;

 private:
  double fps_;
  std::vector<ManifestFrame> frames_;
  std::filesystem::path base_dir_;
};

// Parses `{"fps": number, "frames": [{"index": int, "file": string}, ...]}`.
// Frame files are resolved relative to the manifest's directory; each one
// must exist. Throws InputError naming the offending field or entry.
FrameManifest load_manifest(const std::filesystem::path& manifest_path);

// Same validation over in-memory JSON text; base_dir resolves frame files.
// Existence of frame files is checked only when check_files is set.
FrameManifest parse_manifest(const std::string& json_text,
                             const std::filesystem::path& base_dir,
                             bool check_files = true);

GrayImage load_frame(const FrameManifest& manifest, std::int64_t frame_index);

}  // namespace facesym
