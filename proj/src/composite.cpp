#include "facesym/composite.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "facesym/errors.hpp"

namespace facesym {

CompositePair split_composites(const GrayImage& image, int split_col) {
  if (split_col <= 0 || split_col >= image.width()) {
    throw std::invalid_argument("split column must lie strictly inside the image");
  }
  const int half = std::min(split_col, image.width() - split_col);
  const int h = image.height();
  CompositePair out{GrayImage(2 * half, h), GrayImage(2 * half, h), split_col};
  for (int y = 0; y < h; ++y) {
    auto src = image.row(y);
    auto left = src.subspan(static_cast<std::size_t>(split_col - half),
                            static_cast<std::size_t>(half));
    auto right = src.subspan(static_cast<std::size_t>(split_col),
                             static_cast<std::size_t>(half));
    auto ll = out.ll.row(y);
    auto rr = out.rr.row(y);
    std::copy(left.begin(), left.end(), ll.begin());
    std::reverse_copy(left.begin(), left.end(), ll.begin() + half);
    std::reverse_copy(right.begin(), right.end(), rr.begin());
    std::copy(right.begin(), right.end(), rr.begin() + half);
  }
  return out;
}

CompositePair make_composites(const FaceChip& chip) {
  const int width = chip.image.width();
  if (width < 2 * kMinHalfWidth) {
    throw GeometryError("face chip too narrow to split");
  }
  const auto rounded = std::lround(chip.midline_x);
  const int split = static_cast<int>(
      std::clamp<long>(rounded, kMinHalfWidth, width - kMinHalfWidth));
  if (std::min(split, width - split) < kMinHalfWidth) {
    throw GeometryError("face chip too asymmetric to composite");
  }
  return split_composites(chip.image, split);
}

}  // namespace facesym
