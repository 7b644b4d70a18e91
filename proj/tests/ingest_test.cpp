#include <gtest/gtest.h>

#include <random>

#include "facesym/errors.hpp"
#include "facesym/ingest.hpp"
#include "support/temp_dir.hpp"

namespace facesym {
namespace {

using testing::TempDir;
using testing::write_file;

std::string manifest_json(double fps, int frames) {
  std::string s = "{\"fps\": " + std::to_string(fps) + ", \"frames\": [";
  for (int i = 0; i < frames; ++i) {
    if (i) s += ", ";
    s += "{\"index\": " + std::to_string(i) + ", \"file\": \"f" +
         std::to_string(i) + ".png\"}";
  }
  return s + "]}";
}

TEST(ToGray, Rec601Weights) {
  EXPECT_DOUBLE_EQ(to_gray(1, 1, 1), 1.0);
  EXPECT_DOUBLE_EQ(to_gray(0, 0, 0), 0.0);
  EXPECT_DOUBLE_EQ(to_gray(1, 0, 0), 0.299);
  EXPECT_DOUBLE_EQ(to_gray(0, 1, 0), 0.587);
  EXPECT_DOUBLE_EQ(to_gray(0, 0, 1), 0.114);
}

TEST(ToGray, ClampsOutOfRangeChannels) {
  EXPECT_DOUBLE_EQ(to_gray(2.0, -1.0, 0.0), 0.299);
}

TEST(ToGray, MonotoneAndBounded) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double r = u(rng), g = u(rng), b = u(rng), bump = u(rng) * (1 - r);
    const double v = to_gray(r, g, b);
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
    EXPECT_LE(v, to_gray(r + bump, g, b));
    EXPECT_LE(to_gray(g, r, b), to_gray(g, r + bump, b));
    EXPECT_LE(to_gray(g, b, r), to_gray(g, b, r + bump));
  }
}

TEST(Manifest, SixtyFpsDuration) {
  const auto m = parse_manifest(manifest_json(60, 600), ".", false);
  EXPECT_EQ(m.size(), 600u);
  EXPECT_NEAR(m.duration_ms(), 10000.0, 1e-9);
  EXPECT_NEAR(m.frame_duration_ms(), 16.6667, 1e-4);  // "about 17 ms"
}

TEST(Manifest, FrameDurationsSumToDuration) {
  for (double fps : {24.0, 25.0, 29.97, 30.0, 59.94, 60.0, 120.0}) {
    for (int n : {1, 7, 100, 601}) {
      const auto m = parse_manifest(manifest_json(fps, n), ".", false);
      double total = 0.0;
      for (std::size_t i = 0; i < m.size(); ++i) total += m.frame_duration_ms();
      EXPECT_NEAR(total, m.duration_ms(), 1e-9 * m.duration_ms());
    }
  }
}

TEST(Manifest, RejectsEmptySequence) {
  try {
    parse_manifest(R"({"fps": 60, "frames": []})", ".", false);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("empty"), std::string::npos);
  }
}

TEST(Manifest, RejectsNonMonotonicIndices) {
  const std::string text = R"({"fps": 30, "frames": [
      {"index": 0, "file": "a.png"}, {"index": 2, "file": "b.png"},
      {"index": 1, "file": "c.png"}]})";
  try {
    parse_manifest(text, ".", false);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("non-monotonic"), std::string::npos)
        << e.what();
  }
}

TEST(Manifest, RejectsGapsAndNonZeroStart) {
  EXPECT_THROW(parse_manifest(R"({"fps": 30, "frames": [{"index": 1, "file": "a"}]})",
                              ".", false),
               InputError);
  EXPECT_THROW(parse_manifest(R"({"fps": 30, "frames": [{"index": 0, "file": "a"},
                                  {"index": 2, "file": "b"}]})",
                              ".", false),
               InputError);
}

TEST(Manifest, RejectsBadFps) {
  for (const char* fps : {"0", "-5", "\"60\""}) {
    const std::string text = std::string("{\"fps\": ") + fps +
                             R"(, "frames": [{"index": 0, "file": "a"}]})";
    EXPECT_THROW(parse_manifest(text, ".", false), InputError) << fps;
  }
}

TEST(Manifest, MalformedEntriesNameTheField) {
  try {
    parse_manifest(R"({"fps": 30, "frames": [{"index": 0, "file": "a"},
                       {"index": "x", "file": "b"}]})",
                   ".", false);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("frames[1]"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("index"), std::string::npos);
  }
  EXPECT_THROW(parse_manifest("{not json", ".", false), InputError);
}

TEST(Manifest, MissingFileAndMissingFrameFile) {
  TempDir dir;
  EXPECT_THROW(load_manifest(dir / "nope.json"), InputError);
  write_file(dir / "m.json", manifest_json(60, 1));
  EXPECT_THROW(load_manifest(dir / "m.json"), InputError);
}

TEST(LoadFrame, WhiteAndBlackPngs) {
  TempDir dir;
  write_png(GrayImage(8, 8, 1.0), dir / "f0.png");
  write_png(GrayImage(4, 4, 0.0), dir / "f1.png");
  write_file(dir / "m.json", manifest_json(60, 2));
  const auto m = load_manifest(dir / "m.json");

  const GrayImage white = load_frame(m, 0);
  EXPECT_EQ(white.width(), 8);
  for (double v : white.pixels()) EXPECT_EQ(v, 1.0);
  const GrayImage black = load_frame(m, 1);
  EXPECT_EQ(black.height(), 4);
  for (double v : black.pixels()) EXPECT_EQ(v, 0.0);
  EXPECT_EQ(load_frame(m, 0), white);  // pure
}

TEST(LoadFrame, RgbPngUsesLumaWeights) {
  TempDir dir;
  const std::vector<unsigned char> red = {255, 0, 0, 255, 0, 0};
  write_png_rgb(2, 1, red, dir / "f0.png");
  write_file(dir / "m.json", manifest_json(30, 1));
  const GrayImage g = load_frame(load_manifest(dir / "m.json"), 0);
  EXPECT_DOUBLE_EQ(g.at(0, 0), 0.299);
}

TEST(LoadFrame, MissingOrCorruptFileNamesTheFrame) {
  TempDir dir;
  for (int i = 0; i < 6; ++i) write_png(GrayImage(4, 4, 0.5), dir / ("f" + std::to_string(i) + ".png"));
  write_file(dir / "m.json", manifest_json(30, 6));
  const auto m = load_manifest(dir / "m.json");
  std::filesystem::remove(dir / "f5.png");
  try {
    load_frame(m, 5);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("frame 5"), std::string::npos);
  }
  write_file(dir / "f3.png", "definitely not a png");
  EXPECT_THROW(load_frame(m, 3), InputError);
  EXPECT_THROW(load_frame(m, 6), InputError);
}

}  // namespace
}  // namespace facesym
