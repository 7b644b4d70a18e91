#include "facesym/image.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>
#include <string>

#include "facesym/errors.hpp"

namespace facesym {

GrayImage::GrayImage(int width, int height, double fill)
    : width_(width), height_(height) {
  if (width <= 0 || height <= 0) {
    throw std::invalid_argument("GrayImage dimensions must be positive");
  }
  data_.assign(static_cast<std::size_t>(width) * height, fill);
}

GrayImage::GrayImage(int width, int height, std::vector<double> data)
    : width_(width), height_(height), data_(std::move(data)) {
  if (width <= 0 || height <= 0) {
    throw std::invalid_argument("GrayImage dimensions must be positive");
  }
  if (data_.size() != static_cast<std::size_t>(width) * height) {
    throw std::invalid_argument("GrayImage data length != width * height");
  }
}

double to_gray(double red, double green, double blue) {
  red = std::clamp(red, 0.0, 1.0);
  green = std::clamp(green, 0.0, 1.0);
  blue = std::clamp(blue, 0.0, 1.0);
  if (red == green && green == blue) return red;
  return std::min(1.0, 0.299 * red + 0.587 * green + 0.114 * blue);
}

GrayImage mirror_horizontal(const GrayImage& image) {
  GrayImage out(image.width(), image.height());
  for (int y = 0; y < image.height(); ++y) {
    auto src = image.row(y);
    std::reverse_copy(src.begin(), src.end(), out.row(y).begin());
  }
  return out;
}

GrayImage crop(const GrayImage& image, int x0, int y0, int width, int height) {
  if (x0 < 0 || y0 < 0 || width <= 0 || height <= 0 ||
      x0 + width > image.width() || y0 + height > image.height()) {
    throw std::out_of_range("crop window outside image");
  }
  GrayImage out(width, height);
  for (int y = 0; y < height; ++y) {
    auto src = image.row(y0 + y).subspan(x0, width);
    std::copy(src.begin(), src.end(), out.row(y).begin());
  }
  return out;
}

namespace {

struct PngImage {
  png_image image;
  PngImage() {
    std::memset(&image, 0, sizeof(image));
    image.version = PNG_IMAGE_VERSION;
  }
  ~PngImage() { png_image_free(&image); }
  PngImage(const PngImage&) = delete;
  PngImage& operator=(const PngImage&) = delete;
};

}  // namespace

GrayImage read_png(const std::filesystem::path& path) {
  PngImage png;
  if (!png_image_begin_read_from_file(&png.image, path.c_str())) {
    throw InputError("cannot read PNG '" + path.string() +
                     "': " + png.image.message);
  }
  png.image.format = PNG_FORMAT_RGB;
  std::vector<png_byte> buffer(PNG_IMAGE_SIZE(png.image));
  if (!png_image_finish_read(&png.image, nullptr, buffer.data(), 0, nullptr)) {
    throw InputError("corrupt PNG '" + path.string() +
                     "': " + png.image.message);
  }
  const int width = static_cast<int>(png.image.width);
  const int height = static_cast<int>(png.image.height);
  if (width <= 0 || height <= 0) {
    throw InputError("PNG '" + path.string() + "' has no pixels");
  }
  std::vector<double> data(static_cast<std::size_t>(width) * height);
  for (std::size_t i = 0; i < data.size(); ++i) {
    const png_byte* px = &buffer[3 * i];
    data[i] = to_gray(px[0] / 255.0, px[1] / 255.0, px[2] / 255.0);
  }
  return GrayImage(width, height, std::move(data));
}

void write_png(const GrayImage& image, const std::filesystem::path& path) {
  std::vector<png_byte> buffer(image.pixels().size());
  std::transform(image.pixels().begin(), image.pixels().end(), buffer.begin(),
                 [](double v) {
                   return static_cast<png_byte>(
                       std::lround(std::clamp(v, 0.0, 1.0) * 255.0));
                 });
  PngImage png;
  png.image.width = static_cast<png_uint_32>(image.width());
  png.image.height = static_cast<png_uint_32>(image.height());
  png.image.format = PNG_FORMAT_GRAY;
  if (!png_image_write_to_file(&png.image, path.c_str(), 0, buffer.data(), 0,
                               nullptr)) {
    throw std::runtime_error("cannot write PNG '" + path.string() +
                             "': " + png.image.message);
  }
}

void write_png_rgb(int width, int height, std::span<const unsigned char> rgb,
                   const std::filesystem::path& path) {
  if (rgb.size() != static_cast<std::size_t>(width) * height * 3) {
    throw std::invalid_argument("rgb buffer size mismatch");
  }
  PngImage png;
  png.image.width = static_cast<png_uint_32>(width);
  png.image.height = static_cast<png_uint_32>(height);
  png.image.format = PNG_FORMAT_RGB;
  if (!png_image_write_to_file(&png.image, path.c_str(), 0, rgb.data(), 0,
                               nullptr)) {
    throw std::runtime_error("cannot write PNG '" + path.string() +
                             "': " + png.image.message);
  }
}

}  // namespace facesym
