#pragma once

#include "facesym/geometry.hpp"
#include "facesym/image.hpp"

namespace facesym {

// Hemifacial composites: ll repeats the image-left half of the face with its
// mirror image, rr does the same for the image-right half. Both are
// 2 * half_width wide and mirror-symmetric about their own center.
struct CompositePair {
  GrayImage ll;
  GrayImage rr;
  int split_col = 0;
};

inline constexpr int kMinHalfWidth = 4;

// Splits between columns split_col - 1 and split_col, using the narrower of
// the two halves on both sides. Requires 0 < split_col < width.
CompositePair split_composites(const GrayImage& image, int split_col);

// Splits at round(chip.midline_x) clamped to [4, width - 4]. Throws
// GeometryError when either half is narrower than 4 columns.
CompositePair make_composites(const FaceChip& chip);

}  // namespace facesym
