#include <gtest/gtest.h>

#include <random>

#include "facesym/composite.hpp"
#include "facesym/errors.hpp"
#include "facesym/ssim.hpp"
#include "facesym/synthetic.hpp"
#include "support/temp_dir.hpp"

namespace facesym {
namespace {

bool mirror_symmetric(const GrayImage& img) {
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      if (img.at(x, y) != img.at(img.width() - 1 - x, y)) return false;
    }
  }
  return true;
}

FaceChip chip_from(GrayImage image, double midline) {
  const auto lm = synthetic::face_landmarks(
      {image.width() / 2.0, image.height() / 2.0, image.width() / 3.0, 0, 0});
  return FaceChip{std::move(image), lm, midline, 0.0};
}

TEST(SplitComposites, HandComputedFourByTwo) {
  // Rows [a b c d] = [1 2 3 4] and [5 6 7 8], split at column 2.
  const GrayImage chip(4, 2, {1, 2, 3, 4, 5, 6, 7, 8});
  const CompositePair p = split_composites(chip, 2);
  EXPECT_EQ(p.ll, GrayImage(4, 2, {1, 2, 2, 1, 5, 6, 6, 5}));
  EXPECT_EQ(p.rr, GrayImage(4, 2, {4, 3, 3, 4, 8, 7, 7, 8}));
  EXPECT_EQ(p.split_col, 2);
}

TEST(SplitComposites, UsesNarrowerHalf) {
  const GrayImage chip(6, 1, {1, 2, 3, 4, 5, 6});
  const CompositePair p = split_composites(chip, 4);  // halves 4 and 2
  EXPECT_EQ(p.ll, GrayImage(4, 1, {3, 4, 4, 3}));
  EXPECT_EQ(p.rr, GrayImage(4, 1, {6, 5, 5, 6}));
  EXPECT_THROW(split_composites(chip, 0), std::invalid_argument);
  EXPECT_THROW(split_composites(chip, 6), std::invalid_argument);
}

TEST(MakeComposites, SymmetricChipGivesEqualComposites) {
  const synthetic::FaceSpec spec{64, 64, 40, 0, 0};
  const GrayImage img = synthetic::render_face(128, 128, spec);
  const CompositePair p = make_composites(chip_from(img, 64.0));
  EXPECT_EQ(p.ll, p.rr);
  EXPECT_EQ(p.ll, img);  // centered split uses the whole chip
  EXPECT_EQ(ssid(p.ll, p.rr), 1.0);
}

TEST(MakeComposites, RoundsAndClampsTheSplit) {
  std::mt19937_64 rng(8);
  const GrayImage img = testing::random_image(32, 20, rng);
  EXPECT_EQ(make_composites(chip_from(img, 13.4)).split_col, 13);
  EXPECT_EQ(make_composites(chip_from(img, 13.5)).split_col, 14);
  EXPECT_EQ(make_composites(chip_from(img, 1.0)).split_col, 4);
  EXPECT_EQ(make_composites(chip_from(img, 31.0)).split_col, 28);
  EXPECT_EQ(make_composites(chip_from(img, 31.0)).ll.width(), 8);
  EXPECT_THROW(make_composites(chip_from(testing::random_image(6, 20, rng), 3)),
               GeometryError);
}

TEST(MakeComposites, PropertiesOnRandomChips) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> size(16, 80);
  for (int trial = 0; trial < 200; ++trial) {
    const int w = size(rng) & ~1, h = size(rng);
    const GrayImage img = testing::random_image(w, h, rng);
    std::uniform_real_distribution<double> mid(0.6, w - 0.6);
    const double m = mid(rng);
    const CompositePair p = make_composites(chip_from(img, m));
    ASSERT_EQ(p.ll.width(), p.rr.width());
    ASSERT_EQ(p.ll.height(), h);
    EXPECT_EQ(p.ll.width(), 2 * std::min(p.split_col, w - p.split_col));
    EXPECT_TRUE(mirror_symmetric(p.ll));
    EXPECT_TRUE(mirror_symmetric(p.rr));

    // Mirroring the chip and its midline swaps and mirrors the composites.
    const double mm = w - m;
    if (std::abs(m - std::floor(m) - 0.5) < 1e-9) continue;
    const CompositePair q = make_composites(chip_from(mirror_horizontal(img), mm));
    EXPECT_EQ(q.ll, mirror_horizontal(p.rr));
    EXPECT_EQ(q.rr, mirror_horizontal(p.ll));
  }
}

}  // namespace
}  // namespace facesym
