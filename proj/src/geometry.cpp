#include "facesym/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "facesym/errors.hpp"

namespace facesym {

namespace {

// Keeps floor/ceil stable when a padded edge lands on an integer up to
// rounding noise.
constexpr double kEdgeSlack = 1e-9;

struct Rotation {
  Point center;
  double cos_a = 1.0;
  double sin_a = 0.0;

  Point apply(Point p) const {
    const double dx = p.x - center.x;
    const double dy = p.y - center.y;
    return {center.x + cos_a * dx - sin_a * dy,
            center.y + sin_a * dx + cos_a * dy};
  }
  Point invert(Point p) const {
    const double dx = p.x - center.x;
    const double dy = p.y - center.y;
    return {center.x + cos_a * dx + sin_a * dy,
            center.y - sin_a * dx + cos_a * dy};
  }
};

}  // namespace

Point rotate_point(Point p, Point center, double angle_deg) {
  const double rad = angle_deg * std::numbers::pi / 180.0;
  return Rotation{center, std::cos(rad), std::sin(rad)}.apply(p);
}

double sample_bilinear(const GrayImage& image, double x, double y) {
  // Pixel centers sit at half-integers.
  const double u = x - 0.5;
  const double v = y - 0.5;
  const double fu = std::floor(u);
  const double fv = std::floor(v);
  const double tx = u - fu;
  const double ty = v - fv;
  const auto x0 = static_cast<long>(fu);
  const auto y0 = static_cast<long>(fv);

  auto px = [&](long xi, long yi) -> double {
    if (xi < 0 || yi < 0 || xi >= image.width() || yi >= image.height()) {
      return 0.0;
    }
    return image.at(static_cast<int>(xi), static_cast<int>(yi));
  };
  if (tx == 0.0 && ty == 0.0) return px(x0, y0);
  const double top = (1.0 - tx) * px(x0, y0) + tx * px(x0 + 1, y0);
  const double bottom = (1.0 - tx) * px(x0, y0 + 1) + tx * px(x0 + 1, y0 + 1);
  return (1.0 - ty) * top + ty * bottom;
}

FaceChip align_and_crop(const GrayImage& frame, const Landmarks68& lm,
                        const TiltDecision& decision,
                        const AlignParams& params) {
  if (decision.action == TiltAction::kDiscard) {
    throw std::invalid_argument("align_and_crop called on a discarded frame");
  }
  if (frame.empty()) throw std::invalid_argument("align_and_crop: empty frame");

  const bool rotate = decision.action == TiltAction::kAlignThenProcess;
  Rotation rot;
  if (rotate) {
    const EyeCenters eyes = eye_centers(lm);
    rot.center = {(eyes.left.x + eyes.right.x) / 2.0,
                  (eyes.left.y + eyes.right.y) / 2.0};
    const double rad = -decision.roll_deg * std::numbers::pi / 180.0;
    rot.cos_a = std::cos(rad);
    rot.sin_a = std::sin(rad);
  }

  std::array<Point, Landmarks68::kCount> upright{};
  for (int i = 0; i < Landmarks68::kCount; ++i) {
    upright[i] = rotate ? rot.apply(lm[i]) : lm[i];
  }
  const Landmarks68 upright_lm(upright);
  const auto box = upright_lm.bounds();
  const double pad_x = params.padding * (box.max_x - box.min_x);
  const double pad_y = params.padding * (box.max_y - box.min_y);

  const auto x0 = static_cast<long>(std::floor(box.min_x - pad_x + kEdgeSlack));
  const auto y0 = static_cast<long>(std::floor(box.min_y - pad_y + kEdgeSlack));
  const auto x1 = static_cast<long>(std::ceil(box.max_x + pad_x - kEdgeSlack));
  const auto y1 = static_cast<long>(std::ceil(box.max_y + pad_y - kEdgeSlack));

  if (x1 <= 0 || y1 <= 0 || x0 >= frame.width() || y0 >= frame.height()) {
    throw GeometryError("face crop lies entirely outside the frame");
  }
  long width = x1 - x0;
  const long height = y1 - y0;
  if (width % 2 != 0) --width;
  if (width < kMinChipSize || height < kMinChipSize) {
    throw GeometryError("face chip " + std::to_string(width) + "x" +
                        std::to_string(height) + " is below the 16x16 minimum");
  }

  GrayImage chip(static_cast<int>(width), static_cast<int>(height));
  for (long cy = 0; cy < height; ++cy) {
    auto out = chip.row(static_cast<int>(cy));
    for (long cx = 0; cx < width; ++cx) {
      const Point at{static_cast<double>(x0 + cx) + 0.5,
                     static_cast<double>(y0 + cy) + 0.5};
      const Point src = rotate ? rot.invert(at) : at;
      out[static_cast<std::size_t>(cx)] = sample_bilinear(frame, src.x, src.y);
    }
  }

  std::array<Point, Landmarks68::kCount> local{};
  for (int i = 0; i < Landmarks68::kCount; ++i) {
    local[i] = {upright[i].x - static_cast<double>(x0),
                upright[i].y - static_cast<double>(y0)};
  }
  Landmarks68 chip_lm(local);
  const double mid = midline_x(chip_lm);
  if (!(mid > 0.0 && mid < static_cast<double>(width))) {
    throw GeometryError("midline falls outside the face chip");
  }
  return FaceChip{std::move(chip), std::move(chip_lm), mid, decision.roll_deg};
}

}  // namespace facesym
