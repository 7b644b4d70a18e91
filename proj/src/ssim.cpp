#include "facesym/ssim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace facesym {

void SsimParams::validate() const {
  if (window_size <= 0 || window_size % 2 == 0) {
    throw std::invalid_argument("SSIM window size must be odd and positive");
  }
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(sigma)) throw std::invalid_argument("SSIM sigma must be > 0");
  if (!positive(k1) || !positive(k2)) {
    throw std::invalid_argument("SSIM k1 and k2 must be > 0");
  }
  if (!positive(dynamic_range)) {
    throw std::invalid_argument("SSIM dynamic range must be > 0");
  }
}

std::vector<double> gaussian_kernel(const SsimParams& p) {
  p.validate();
  const int n = p.window_size;
  const int r = n / 2;
  std::vector<double> taps(static_cast<std::size_t>(n));
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    const double d = i - r;
    taps[i] = std::exp(-(d * d) / (2.0 * p.sigma * p.sigma));
    total += taps[i];
  }
  for (double& t : taps) t /= total;
  return taps;
}

std::vector<double> gaussian_window(const SsimParams& p) {
  const auto taps = gaussian_kernel(p);
  const std::size_t n = taps.size();
  std::vector<double> window(n * n);
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) window[y * n + x] = taps[y] * taps[x];
  }
  return window;
}

namespace {

void check_inputs(const GrayImage& a, const GrayImage& b, const SsimParams& p) {
  p.validate();
  if (a.width() != b.width() || a.height() != b.height()) {
    throw std::invalid_argument("SSIM inputs differ in size");
  }
  if (a.width() < p.window_size || a.height() < p.window_size) {
    throw std::invalid_argument("SSIM input smaller than the window");
  }
}

ScoreMap compute_map(const GrayImage& a, const GrayImage& b,
                     const SsimParams& p, bool parallel) {
  check_inputs(a, b, p);
  const auto taps = gaussian_kernel(p);
  const int n = p.window_size;
  const int w = a.width();
  const int h = a.height();
  const int out_w = w - n + 1;
  const int out_h = h - n + 1;
  const std::size_t plane = static_cast<std::size_t>(h) * out_w;

  // Horizontally filtered mu_a, mu_b, E[aa], E[bb], E[ab].
  std::vector<double> rows(5 * plane);
  double* ha = rows.data();
  double* hb = ha + plane;
  double* haa = hb + plane;
  double* hbb = haa + plane;
  double* hab = hbb + plane;

#pragma omp parallel for schedule(static) if (parallel)
  for (int y = 0; y < h; ++y) {
    const auto ra = a.row(y);
    const auto rb = b.row(y);
    const std::size_t base = static_cast<std::size_t>(y) * out_w;
    for (int x = 0; x < out_w; ++x) {
      double sa = 0, sb = 0, saa = 0, sbb = 0, sab = 0;
      for (int k = 0; k < n; ++k) {
        const double va = ra[x + k];
        const double vb = rb[x + k];
        const double t = taps[k];
        sa += t * va;
        sb += t * vb;
        saa += t * (va * va);
        sbb += t * (vb * vb);
        sab += t * (va * vb);
      }
      ha[base + x] = sa;
      hb[base + x] = sb;
      haa[base + x] = saa;
      hbb[base + x] = sbb;
      hab[base + x] = sab;
    }
  }

  const double c1 = p.c1();
  const double c2 = p.c2();
  ScoreMap map{out_w, out_h,
               std::vector<double>(static_cast<std::size_t>(out_w) * out_h)};

#pragma omp parallel for schedule(static) if (parallel)
  for (int y = 0; y < out_h; ++y) {
    for (int x = 0; x < out_w; ++x) {
      double mu_a = 0, mu_b = 0, eaa = 0, ebb = 0, eab = 0;
      for (int k = 0; k < n; ++k) {
        const std::size_t i = static_cast<std::size_t>(y + k) * out_w + x;
        const double t = taps[k];
        mu_a += t * ha[i];
        mu_b += t * hb[i];
        eaa += t * haa[i];
        ebb += t * hbb[i];
        eab += t * hab[i];
      }
      const double var_a = eaa - mu_a * mu_a;
      const double var_b = ebb - mu_b * mu_b;
      const double cov = eab - mu_a * mu_b;
      const double num = (2.0 * mu_a * mu_b + c1) * (2.0 * cov + c2);
      const double den = (mu_a * mu_a + mu_b * mu_b + c1) * (var_a + var_b + c2);
      map.values[static_cast<std::size_t>(y) * out_w + x] = num / den;
    }
  }
  return map;
}

}  // namespace

ScoreMap ssim_map(const GrayImage& a, const GrayImage& b, const SsimParams& p) {
  return compute_map(a, b, p, /*parallel=*/true);
}

ScoreMap ssim_map_serial(const GrayImage& a, const GrayImage& b,
                         const SsimParams& p) {
  return compute_map(a, b, p, /*parallel=*/false);
}

double mean_ssim(const GrayImage& a, const GrayImage& b, const SsimParams& p) {
  const ScoreMap map = ssim_map(a, b, p);
  double total = 0.0;
  for (double v : map.values) total += v;
  return total / static_cast<double>(map.values.size());
}

double ssid(const GrayImage& a, const GrayImage& b, const SsimParams& p) {
  return std::max(0.0, mean_ssim(a, b, p));
}

}  // namespace facesym
