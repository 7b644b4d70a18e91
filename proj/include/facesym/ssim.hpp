#pragma once

#include <cstddef>
#include <vector>

#include "facesym/image.hpp"

namespace facesym {

// Structural similarity settings. Defaults are the metric's usual ones:
// 11 x 11 Gaussian window, sigma 1.5, k1 0.01, k2 0.03, dynamic range 1.
struct SsimParams {
  int window_size = 11;
  double sigma = 1.5;
  double k1 = 0.01;
  double k2 = 0.03;
  double dynamic_range = 1.0;

  double c1() const { return (k1 * dynamic_range) * (k1 * dynamic_range); }
  double c2() const { return (k2 * dynamic_range) * (k2 * dynamic_range); }

  // Throws std::invalid_argument unless the window is odd and positive and
  // sigma, k1, k2 and the dynamic range are positive and finite.
  void validate() const;
};

// Normalized 1-D Gaussian taps; the 2-D window is their outer product.
std::vector<double> gaussian_kernel(const SsimParams& p);

// Row-major window_size x window_size weights summing to 1.
std::vector<double> gaussian_window(const SsimParams& p);

// Local SSIM scores at every position where the whole window fits, so the
// map is (width - n + 1) x (height - n + 1). Entry (x, y) belongs to the
// window whose top-left pixel is (x, y).
struct ScoreMap {
  int width = 0;
  int height = 0;
  std::vector<double> values;

  double at(int x, int y) const {
    return values[static_cast<std::size_t>(y) * width + x];
  }
};

// Separable Gaussian filtering, parallelized over rows with OpenMP. Every
// entry is computed with a fixed summation order, so the result is bitwise
// independent of the thread count. Throws std::invalid_argument on size
// mismatch or images smaller than the window.
ScoreMap ssim_map(const GrayImage& a, const GrayImage& b,
                  const SsimParams& p = {});

// The same kernel on one thread; kept as the serial baseline for tests and
// benchmarks.
ScoreMap ssim_map_serial(const GrayImage& a, const GrayImage& b,
                         const SsimParams& p = {});

// Mean of the map in row-major order. Lies in [-1, 1].
double mean_ssim(const GrayImage& a, const GrayImage& b,
                 const SsimParams& p = {});

// mean_ssim clamped below at 0. Negative scores are reserved for frames that
// could not be scored.
double ssid(const GrayImage& a, const GrayImage& b, const SsimParams& p = {});

}  // namespace facesym
