#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <vector>

namespace facesym {

// Row-major single-channel raster with luminance in [0,1].
//
// Pixel (x, y) covers the unit square [x, x+1) x [y, y+1), so its center sits
// at (x + 0.5, y + 0.5) in the continuous coordinates used by landmarks.
// Mirroring a continuous coordinate within an image of width W is W - x.
class GrayImage {
 public:
  GrayImage() = default;
  GrayImage(int width, int height, double fill = 0.0);
  GrayImage(int width, int height, std::vector<double> data);

  int width() const { return width_; }
  int height() const { return height_; }
  bool empty() const { return data_.empty(); }

  double at(int x, int y) const { return data_[index(x, y)]; }
  double& at(int x, int y) { return data_[index(x, y)]; }

  std::span<const double> row(int y) const {
    return {data_.data() + static_cast<std::size_t>(y) * width_,
            static_cast<std::size_t>(width_)};
  }
  std::span<double> row(int y) {
    return {data_.data() + static_cast<std::size_t>(y) * width_,
            static_cast<std::size_t>(width_)};
  }

  std::span<const double> pixels() const { return data_; }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * width_ + x;
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<double> data_;
};

// Rec. 601 luma. Channels are clamped to [0,1] first.
double to_gray(double red, double green, double blue);

GrayImage mirror_horizontal(const GrayImage& image);

// Copies the window [x0, x0+width) x [y0, y0+height); the window must lie
// inside the image.
GrayImage crop(const GrayImage& image, int x0, int y0, int width, int height);

// Reads an 8-bit grayscale or RGB PNG (alpha is dropped) and converts it with
// to_gray. Throws InputError on unreadable or corrupt files.
GrayImage read_png(const std::filesystem::path& path);

// Writes an 8-bit grayscale PNG; values are clamped and rounded to 0..255.
void write_png(const GrayImage& image, const std::filesystem::path& path);

// Writes an 8-bit RGB PNG from interleaved rgb bytes (width * height * 3).
void write_png_rgb(int width, int height, std::span<const unsigned char> rgb,
                   const std::filesystem::path& path);

}  // namespace facesym
