#pragma once

#include "facesym/image.hpp"
#include "facesym/landmarks.hpp"

namespace facesym {

// Upright, cropped face region ready for compositing.
struct FaceChip {
  GrayImage image;      // even width, at least 16 x 16
  Landmarks68 landmarks;  // chip coordinates
  double midline_x = 0.0;
  double source_roll_deg = 0.0;
};

struct AlignParams {
  // Fraction of the landmark box added on every side of the crop.
  double padding = 0.10;
};

inline constexpr int kMinChipSize = 16;

Point rotate_point(Point p, Point center, double angle_deg);

// Bilinear sample at a continuous coordinate; neighbours outside the image
// contribute 0.
double sample_bilinear(const GrayImage& image, double x, double y);

// Rotates the frame by -roll about the eye-center midpoint (skipped for
// kProcessAsIs), crops the transformed landmark box grown by `padding` per
// side, and drops the rightmost column when the crop width is odd. Pixels
// outside the frame read as 0.
//
// Throws GeometryError when the crop misses the frame entirely, the chip is
// smaller than 16 x 16, or the midline falls outside the chip, and
// std::invalid_argument for a kDiscard decision.
FaceChip align_and_crop(const GrayImage& frame, const Landmarks68& lm,
                        const TiltDecision& decision,
                        const AlignParams& params = {});

}  // namespace facesym
