#include "facesym/ingest.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "facesym/errors.hpp"

namespace facesym {

using nlohmann::json;

FrameManifest::FrameManifest(double fps, std::vector<ManifestFrame> frames,
                             std::filesystem::path base_dir)
    : fps_(fps), frames_(std::move(frames)), base_dir_(std::move(base_dir)) {}

double FrameManifest::duration_ms() const {
  return static_cast<double>(frames_.size()) * 1000.0 / fps_;
}

double FrameManifest::time_ms(std::int64_t frame_index) const {
  return static_cast<double>(frame_index) * 1000.0 / fps_;
}

std::ptrdiff_t FrameManifest::position_of(std::int64_t frame_index) const {
  // Indices are contiguous from 0, so the index is the position.
  if (frame_index < 0 ||
      frame_index >= static_cast<std::int64_t>(frames_.size())) {
    return -1;
  }
  return static_cast<std::ptrdiff_t>(frame_index);
}

std::filesystem::path FrameManifest::frame_path(std::size_t position) const {
  return base_dir_ / frames_.at(position).file;
}

FrameManifest parse_manifest(const std::string& json_text,
                             const std::filesystem::path& base_dir,
                             bool check_files) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("manifest: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("manifest: top level must be an object");
  if (!doc.contains("fps") || !doc["fps"].is_number()) {
    throw InputError("manifest: field 'fps' missing or not a number");
  }
  const double fps = doc["fps"].get<double>();
  if (!std::isfinite(fps) || fps <= 0.0) {
    throw InputError("manifest: field 'fps' must be > 0");
  }
  if (!doc.contains("frames") || !doc["frames"].is_array()) {
    throw InputError("manifest: field 'frames' missing or not an array");
  }
  const json& entries = doc["frames"];
  if (entries.empty()) throw InputError("manifest: empty frame sequence");

  std::vector<ManifestFrame> frames;
  frames.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const json& e = entries[i];
    const std::string where = "manifest: frames[" + std::to_string(i) + "]";
    if (!e.is_object()) throw InputError(where + ": entry must be an object");
    if (!e.contains("index") || !e["index"].is_number_integer()) {
      throw InputError(where + ": field 'index' missing or not an integer");
    }
    if (!e.contains("file") || !e["file"].is_string()) {
      throw InputError(where + ": field 'file' missing or not a string");
    }
    ManifestFrame frame{e["index"].get<std::int64_t>(),
                        e["file"].get<std::string>()};
    if (frame.index < 0) throw InputError(where + ": negative index");
    if (frame.file.empty()) throw InputError(where + ": empty file name");
    frames.push_back(std::move(frame));
  }
  for (std::size_t i = 1; i < frames.size(); ++i) {
    if (frames[i].index <= frames[i - 1].index) {
      throw InputError("manifest: frames[" + std::to_string(i) +
                       "]: non-monotonic indices (" +
                       std::to_string(frames[i - 1].index) + " then " +
                       std::to_string(frames[i].index) + ")");
    }
  }
  for (std::size_t i = 0; i < frames.size(); ++i) {
    const std::string where = "manifest: frames[" + std::to_string(i) + "]";
    if (frames[i].index != static_cast<std::int64_t>(i)) {
      throw InputError(where + ": expected index " + std::to_string(i) +
                       ", got " + std::to_string(frames[i].index) +
                       " (indices must start at 0 without gaps)");
    }
    const auto path = base_dir / frames[i].file;
    if (check_files && !std::filesystem::is_regular_file(path)) {
      throw InputError(where + ": frame file '" + path.string() +
                       "' not found");
    }
  }
  return FrameManifest(fps, std::move(frames), base_dir);
}

FrameManifest load_manifest(const std::filesystem::path& manifest_path) {
  std::ifstream in(manifest_path);
  if (!in) {
    throw InputError("manifest: cannot open '" + manifest_path.string() + "'");
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_manifest(text.str(), manifest_path.parent_path());
}

GrayImage load_frame(const FrameManifest& manifest, std::int64_t frame_index) {
  const auto pos = manifest.position_of(frame_index);
  if (pos < 0) {
    throw InputError("frame " + std::to_string(frame_index) +
                     " is not in the manifest");
  }
  try {
    return read_png(manifest.frame_path(static_cast<std::size_t>(pos)));
  } catch (const InputError& e) {
    throw InputError("frame " + std::to_string(frame_index) + ": " + e.what());
  }
}

}  // namespace facesym
