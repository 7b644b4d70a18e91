#pragma once

#include <cstdint>
#include <filesystem>

#include "facesym/analysis.hpp"
#include "facesym/image.hpp"

namespace facesym {

// Side-by-side inspection canvas: L-L composite top-left, R-R composite
// bottom-left, original frame in the center, aligned chip on the right.
// Frames that were not scored show only the original.
GrayImage debug_layout(const GrayImage& original, const FrameAnalysis& analysis);

// Writes <dir>/frame_NNNNNN.png.
void write_debug_frame(const std::filesystem::path& dir, std::int64_t index,
                       const GrayImage& original, const FrameAnalysis& analysis);

}  // namespace facesym
