#include "facesym/debug_frame.hpp"

#include <algorithm>
#include <cstdio>

namespace facesym {

namespace {

void blit(GrayImage& canvas, const GrayImage& src, int x0, int y0) {
  for (int y = 0; y < src.height(); ++y) {
    auto in = src.row(y);
    std::copy(in.begin(), in.end(), canvas.row(y0 + y).begin() + x0);
  }
}

}  // namespace

GrayImage debug_layout(const GrayImage& original, const FrameAnalysis& analysis) {
  if (!analysis.composites || !analysis.chip) return original;
  const GrayImage& ll = analysis.composites->ll;
  const GrayImage& rr = analysis.composites->rr;
  const GrayImage& chip = analysis.chip->image;

  const int width = ll.width() + original.width() + chip.width();
  const int height = std::max({2 * ll.height(), original.height(), chip.height()});
  GrayImage canvas(width, height);
  blit(canvas, ll, 0, 0);
  blit(canvas, rr, 0, ll.height());
  blit(canvas, original, ll.width(), 0);
  blit(canvas, chip, ll.width() + original.width(), 0);
  return canvas;
}

void write_debug_frame(const std::filesystem::path& dir, std::int64_t index,
                       const GrayImage& original, const FrameAnalysis& analysis) {
  char name[32];
  std::snprintf(name, sizeof(name), "frame_%06lld.png",
                static_cast<long long>(index));
  write_png(debug_layout(original, analysis), dir / name);
}

}  // namespace facesym
