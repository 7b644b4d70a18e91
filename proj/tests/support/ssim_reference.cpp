#include "support/ssim_reference.hpp"

#include <cmath>

namespace facesym::testing {

ScoreMap reference_ssim_map(const GrayImage& a, const GrayImage& b,
                            const SsimParams& p) {
  const int n = p.window_size;
  const int r = n / 2;
  std::vector<double> w(static_cast<std::size_t>(n) * n);
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double d2 = double(i - r) * (i - r) + double(j - r) * (j - r);
      w[i * n + j] = std::exp(-d2 / (2.0 * p.sigma * p.sigma));
      total += w[i * n + j];
    }
  }
  for (double& v : w) v /= total;

  const double c1 = (p.k1 * p.dynamic_range) * (p.k1 * p.dynamic_range);
  const double c2 = (p.k2 * p.dynamic_range) * (p.k2 * p.dynamic_range);
  ScoreMap map;
  map.width = a.width() - n + 1;
  map.height = a.height() - n + 1;
  map.values.resize(static_cast<std::size_t>(map.width) * map.height);
  for (int y = 0; y < map.height; ++y) {
    for (int x = 0; x < map.width; ++x) {
      double mu_a = 0, mu_b = 0;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          mu_a += w[i * n + j] * a.at(x + j, y + i);
          mu_b += w[i * n + j] * b.at(x + j, y + i);
        }
      }
      double var_a = 0, var_b = 0, cov = 0;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          const double da = a.at(x + j, y + i) - mu_a;
          const double db = b.at(x + j, y + i) - mu_b;
          var_a += w[i * n + j] * da * da;
          var_b += w[i * n + j] * db * db;
          cov += w[i * n + j] * da * db;
        }
      }
      map.values[static_cast<std::size_t>(y) * map.width + x] =
          ((2 * mu_a * mu_b + c1) * (2 * cov + c2)) /
          ((mu_a * mu_a + mu_b * mu_b + c1) * (var_a + var_b + c2));
    }
  }
  return map;
}

double reference_mean_ssim(const GrayImage& a, const GrayImage& b,
                           const SsimParams& p) {
  const ScoreMap m = reference_ssim_map(a, b, p);
  double s = 0.0;
  for (double v : m.values) s += v;
  return s / static_cast<double>(m.values.size());
}

}  // namespace facesym::testing
