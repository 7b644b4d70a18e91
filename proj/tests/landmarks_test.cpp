#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "facesym/errors.hpp"
#include "facesym/landmarks.hpp"
#include "facesym/synthetic.hpp"

namespace facesym {
namespace {

std::array<Point, 68> template_points(double cx = 64, double cy = 64,
                                      double s = 40) {
  std::array<Point, 68> pts{};
  const auto& t = synthetic::landmark_template();
  for (int i = 0; i < 68; ++i) pts[i] = {cx + s * t[i].x, cy + s * t[i].y};
  return pts;
}

// Places the six points of an eye symmetrically around `center`.
void place_eye(std::array<Point, 68>& pts, int first, Point center) {
  const Point offsets[6] = {{-9, 0}, {-4, -3}, {4, -3}, {9, 0}, {4, 3}, {-4, 3}};
  for (int k = 0; k < 6; ++k) {
    pts[first + k] = {center.x + offsets[k].x, center.y + offsets[k].y};
  }
}

std::string points_json(const std::array<Point, 68>& pts, int count = 68) {
  std::string s = "[";
  for (int i = 0; i < count; ++i) {
    if (i) s += ",";
    s += "[" + std::to_string(pts[i].x) + "," + std::to_string(pts[i].y) + "]";
  }
  return s + "]";
}

TEST(Landmarks68, RejectsDegenerateAndNonFinite) {
  std::array<Point, 68> same{};
  same.fill({5, 5});
  EXPECT_THROW(Landmarks68{same}, GeometryError);
  auto pts = template_points();
  pts[3].x = std::nan("");
  EXPECT_THROW(Landmarks68{pts}, std::invalid_argument);
}

TEST(MirrorIndex, IsAnInvolutionWithFixedMidline) {
  for (int i = 0; i < 68; ++i) {
    EXPECT_EQ(mirrored_landmark_index(mirrored_landmark_index(i)), i);
  }
  for (int i : {8, 27, 28, 29, 30, 33, 51, 57, 62, 66}) {
    EXPECT_EQ(mirrored_landmark_index(i), i);
  }
  EXPECT_EQ(mirrored_landmark_index(36), 45);
  EXPECT_EQ(mirrored_landmark_index(39), 42);
  EXPECT_EQ(mirrored_landmark_index(48), 54);
  EXPECT_EQ(mirrored_landmark_index(0), 16);
}

TEST(Sidecar, ParsesFaceRecord) {
  const auto pts = template_points();
  const auto r = parse_landmark_sidecar("{\"index\": 3, \"points\": " +
                                        points_json(pts) + "}");
  EXPECT_EQ(r.index, 3);
  ASSERT_TRUE(has_face(r.face));
  EXPECT_NEAR(std::get<Landmarks68>(r.face)[10].x, pts[10].x, 1e-6);
}

TEST(Sidecar, ParsesNoFace) {
  const auto r = parse_landmark_sidecar(R"({"index": 7, "no_face": true})");
  EXPECT_EQ(r.index, 7);
  EXPECT_FALSE(has_face(r.face));
}

std::string error_of(const std::string& line) {
  try {
    parse_landmark_sidecar(line);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

TEST(Sidecar, DistinctErrors) {
  const auto pts = template_points();
  const std::string count =
      error_of("{\"index\": 4, \"points\": " + points_json(pts, 67) + "}");
  EXPECT_NE(count.find("point-count"), std::string::npos) << count;
  EXPECT_NE(count.find("frame 4"), std::string::npos) << count;

  std::string bad = "{\"index\": 4, \"points\": " + points_json(pts) + "}";
  bad.replace(bad.find("[[") + 2, 1, "\"x\",");
  const std::string numeric = error_of(bad);
  EXPECT_NE(numeric.find("not a numeric"), std::string::npos) << numeric;

  const std::string malformed = error_of("{\"index\": 4, \"points\": [");
  EXPECT_NE(malformed.find("malformed JSON"), std::string::npos) << malformed;

  EXPECT_NE(error_of(R"({"points": []})").find("index"), std::string::npos);
  EXPECT_FALSE(error_of(R"({"index": 1, "no_face": false})").empty());
}

TEST(Sidecar, RoundTripsExactly) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-500.0, 1500.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::array<Point, 68> pts{};
    for (auto& p : pts) p = {u(rng), u(rng)};
    const SidecarRecord rec{trial, Landmarks68(pts)};
    EXPECT_EQ(parse_landmark_sidecar(to_sidecar_line(rec)), rec);
  }
  const SidecarRecord none{9, NoFace{}};
  EXPECT_EQ(parse_landmark_sidecar(to_sidecar_line(none)), none);
}

TEST(EyeCenters, MeansOfEyePoints) {
  auto pts = template_points();
  for (int i = 42; i <= 47; ++i) pts[i] = {10, 10};
  pts[36] = {2, 4};
  pts[37] = {6, 4};
  pts[38] = {6, 8};
  pts[39] = {2, 8};
  pts[40] = {4, 6};
  pts[41] = {4, 6};
  const auto eyes = eye_centers(Landmarks68(pts));
  EXPECT_EQ(eyes.left, (Point{10, 10}));
  EXPECT_DOUBLE_EQ(eyes.right.x, 4);
  EXPECT_DOUBLE_EQ(eyes.right.y, 6);
}

TEST(EyeCenters, ConstructedFace) {
  auto pts = template_points();
  place_eye(pts, 36, {30, 40});
  place_eye(pts, 42, {70, 40});
  const auto eyes = eye_centers(Landmarks68(pts));
  EXPECT_EQ(eyes.right, (Point{30, 40}));
  EXPECT_EQ(eyes.left, (Point{70, 40}));
}

TEST(RollAngle, HorizontalAndFiveDegrees) {
  auto pts = template_points();
  place_eye(pts, 36, {30, 40});
  place_eye(pts, 42, {70, 40});
  EXPECT_EQ(roll_angle(Landmarks68(pts)), 0.0);

  const double dy = 40.0 * std::tan(5.0 * std::numbers::pi / 180.0);
  place_eye(pts, 42, {70, 40 + dy});
  EXPECT_NEAR(roll_angle(Landmarks68(pts)), 5.0, 1e-9);
}

TEST(RollAngle, CoincidentEyesIsAnError) {
  auto pts = template_points();
  place_eye(pts, 36, {50, 40});
  place_eye(pts, 42, {50, 40});
  EXPECT_THROW(roll_angle(Landmarks68(pts)), GeometryError);
}

TEST(RollAngle, StaysInHalfOpenRange) {
  auto pts = template_points();
  place_eye(pts, 36, {70, 40});  // eyes swapped: segment points left
  place_eye(pts, 42, {30, 40});
  EXPECT_EQ(roll_angle(Landmarks68(pts)), 0.0);
  place_eye(pts, 36, {50, 60});
  place_eye(pts, 42, {50, 20});  // vertical
  EXPECT_EQ(roll_angle(Landmarks68(pts)), 90.0);
}

TEST(RollAngle, NegatedByMirroring) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> roll(-40.0, 40.0);
  for (int i = 0; i < 100; ++i) {
    synthetic::FaceSpec spec{100.5, 90.25, 35.0, roll(rng), 0.0};
    const Landmarks68 lm = synthetic::face_landmarks(spec);
    const double r = roll_angle(lm);
    EXPECT_NEAR(roll_angle(mirror_horizontal(lm, 200.0)), -r, 1e-12);
    EXPECT_NEAR(r, spec.roll_deg, 1e-9);
  }
}

TEST(TiltGate, Decisions) {
  EXPECT_EQ(tilt_gate(3.0).action, TiltAction::kAlignThenProcess);
  EXPECT_EQ(tilt_gate(10.0).action, TiltAction::kDiscard);
  EXPECT_EQ(tilt_gate(0.0).action, TiltAction::kProcessAsIs);
  EXPECT_EQ(tilt_gate(0.5).action, TiltAction::kProcessAsIs);
  EXPECT_EQ(tilt_gate(-0.51).action, TiltAction::kAlignThenProcess);
  EXPECT_EQ(tilt_gate(5.0).action, TiltAction::kAlignThenProcess);
  EXPECT_EQ(tilt_gate(-5.0001).action, TiltAction::kDiscard);
  EXPECT_EQ(tilt_gate(7.0, 8.0).action, TiltAction::kAlignThenProcess);
  EXPECT_EQ(tilt_gate(-3.0).roll_deg, -3.0);
}

TEST(TiltGate, MonotoneAndDiscardImpliesAboveThreshold) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  std::uniform_real_distribution<double> th(0.0, 15.0);
  for (int i = 0; i < 2000; ++i) {
    double r1 = u(rng), r2 = u(rng);
    if (std::abs(r1) > std::abs(r2)) std::swap(r1, r2);
    const double t = th(rng);
    const auto d1 = tilt_gate(r1, t), d2 = tilt_gate(r2, t);
    if (d2.action != TiltAction::kDiscard) {
      EXPECT_NE(d1.action, TiltAction::kDiscard);
    }
    if (d1.action == TiltAction::kDiscard) EXPECT_GT(std::abs(r1), t);
  }
}

TEST(Midline, MeanOfNoseBridgeAndChin) {
  auto pts = template_points(50);
  for (int i : {27, 28, 29, 30, 8}) pts[i].x = 50;
  EXPECT_EQ(midline_x(Landmarks68(pts)), 50.0);
  for (int i : {27, 28, 29, 30}) pts[i].x = 49;
  pts[8].x = 54;
  EXPECT_EQ(midline_x(Landmarks68(pts)), 50.0);
}

TEST(Midline, SymmetricLandmarksGiveTheirAxis) {
  const auto lm = synthetic::face_landmarks({64, 70, 30, 0, 0});
  EXPECT_EQ(midline_x(lm), 64.0);
  // Mirrored about the same axis within a 128-wide frame.
  EXPECT_EQ(midline_x(mirror_horizontal(lm, 128.0)), 64.0);
}

}  // namespace
}  // namespace facesym
