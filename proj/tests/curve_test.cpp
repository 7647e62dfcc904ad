#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "conormal/curve.hpp"

using namespace conormal;

static const std::vector<LatticePoint> kSquare = {{0, 0}, {2, 0}, {2, 2}, {0, 2}};
static const std::vector<LatticePoint> kFig8 = {
    {0, 0}, {4, 0}, {4, 2}, {1, 2}, {1, -2}, {-2, -2}, {-2, 1}, {0, 1}};

TEST_CASE("validate accepts the ccw square") {
  auto c = RectCurve::validate(kSquare);
  REQUIRE(c.size() == 4);
}

TEST_CASE("validate rejects bad input") {
  REQUIRE_THROWS_MATCHES(
      RectCurve::validate({{0, 0}, {1, 1}}), ValidationError,
      Catch::Matchers::Predicate<ValidationError>(
          [](const ValidationError& e) { return e.code() == Err::NotAxisAligned; }));
  // two segments on the line y = 0
  REQUIRE_THROWS_MATCHES(
      RectCurve::validate({{0, 0}, {2, 0}, {2, 2}, {4, 2}, {4, 0}, {6, 0}, {6, 4}, {0, 4}}),
      ValidationError,
      Catch::Matchers::Predicate<ValidationError>(
          [](const ValidationError& e) { return e.code() == Err::CollinearSegments; }));
  REQUIRE_THROWS_MATCHES(
      RectCurve::validate({{0, 0}, {1, 0}}), ValidationError,
      Catch::Matchers::Predicate<ValidationError>(
          [](const ValidationError& e) { return e.code() == Err::TooFewCorners; }));
}

TEST_CASE("whitney index of basic curves") {
  auto sq = RectCurve::validate(kSquare);
  CHECK(whitney_index(sq) == 1);
  CHECK(whitney_index(reverse(sq)) == -1);
  auto fig8 = RectCurve::validate(kFig8);
  CHECK(whitney_index(fig8) == 0);
  CHECK(fig8.double_points() == 1);
}

TEST_CASE("whitney negates under reversal for random curves") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int k = 3 + int(rng() % 4);
    std::vector<std::int64_t> xs(k), ys(k);
    for (int i = 0; i < k; ++i) { xs[i] = i; ys[i] = i; }
    std::shuffle(xs.begin(), xs.end(), rng);
    std::shuffle(ys.begin(), ys.end(), rng);
    std::vector<LatticePoint> corners;
    for (int i = 0; i < k; ++i) {
      corners.push_back({xs[i], ys[i]});
      corners.push_back({xs[(i + 1) % k], ys[i]});
    }
    auto c = RectCurve::validate(corners);
    CHECK(whitney_index(reverse(c)) == -whitney_index(c));
  }
}

TEST_CASE("st_to_j1 matches the identification formulas") {
  auto p0 = st_to_j1({0, 0, 1, 0});
  CHECK(p0.theta == Catch::Approx(0.0));
  CHECK(p0.y == Catch::Approx(0.0).margin(1e-12));
  CHECK(p0.z == Catch::Approx(0.0).margin(1e-12));

  auto p1 = st_to_j1({1, 0, 0, 1});
  CHECK(p1.theta == Catch::Approx(kTwoPi / 4));
  CHECK(p1.y == Catch::Approx(-1.0));
  CHECK(p1.z == Catch::Approx(0.0).margin(1e-12));

  auto p2 = st_to_j1({3, 4, 0, -1});
  CHECK(p2.theta == Catch::Approx(3 * kTwoPi / 4));
  CHECK(p2.y == Catch::Approx(3.0));
  CHECK(p2.z == Catch::Approx(-4.0));

  REQUIRE_THROWS_AS(st_to_j1({1, 1, 0, 0}), ValidationError);
}

TEST_CASE("conormal lift substitutions") {
  SampledCurve c;
  c.points = {{1, 2}, {2, 2}, {1.5, 3}};  // first chord has phi = 0
  auto lift = conormal_lift(c);
  CHECK(lift[0].theta == Catch::Approx(kTwoPi / 4));
  CHECK(lift[0].z == Catch::Approx(2.0));

  SampledCurve degenerate;
  degenerate.points = {{0, 0}, {0, 0}, {1, 1}};
  REQUIRE_THROWS_AS(conormal_lift(degenerate), ValidationError);
}

static SampledCurve unit_circle(int n) {
  SampledCurve c;
  for (int i = 0; i < n; ++i) {
    double t = kTwoPi * i / n;
    c.points.push_back({std::cos(t), std::sin(t)});
  }
  return c;
}

TEST_CASE("lift of the unit circle is Legendrian to sampling order") {
  const int n = 1000;
  auto lift = conormal_lift(unit_circle(n));
  double worst = 0;
  double wind = 0;
  for (int i = 0; i < n; ++i) {
    const auto& a = lift[i];
    const auto& b = lift[(i + 1) % n];
    double dtheta = b.theta - a.theta;
    while (dtheta > kTwoPi / 2) dtheta -= kTwoPi;
    while (dtheta < -kTwoPi / 2) dtheta += kTwoPi;
    wind += dtheta;
    worst = std::max(worst, std::abs((b.z - a.z) - a.y * dtheta));
  }
  double h = kTwoPi / n;
  CHECK(worst <= 10 * h * h);
  CHECK(wind == Catch::Approx(kTwoPi).epsilon(1e-6));
}

TEST_CASE("st_to_j1 composed with the conormal covector reproduces the lift") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> coord(-5.0, 5.0), ang(0.0, kTwoPi);
  for (int i = 0; i < 10000; ++i) {
    double q1 = coord(rng), q2 = coord(rng), phi = ang(rng);
    // two nearby samples along direction phi
    SampledCurve c;
    c.points = {{q1, q2},
                {q1 + std::cos(phi), q2 + std::sin(phi)},
                {q1 + std::cos(phi) - std::sin(phi), q2 + std::sin(phi) + std::cos(phi)}};
    auto lift = conormal_lift(c);
    CotangentPoint ct{q1, q2, -std::sin(phi), std::cos(phi)};
    auto j = st_to_j1(ct);
    CHECK(std::abs(j.theta - lift[0].theta) < 1e-9);
    CHECK(std::abs(j.y - lift[0].y) < 1e-9);
    CHECK(std::abs(j.z - lift[0].z) < 1e-9);
  }
}
