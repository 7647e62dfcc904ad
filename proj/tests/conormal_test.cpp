#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "conormal/conormal.hpp"

using namespace conormal;

static RectCurve square() {
  return RectCurve::validate({{0, 0}, {2, 0}, {2, 2}, {0, 2}});
}
static RectCurve fig8() {
  return RectCurve::validate(
      {{0, 0}, {4, 0}, {4, 2}, {1, 2}, {1, -2}, {-2, -2}, {-2, 1}, {0, 1}});
}
static RectCurve doubled() {
  return RectCurve::validate(
      {{0, 0}, {3, 0}, {3, 2}, {1, 2}, {1, 1}, {4, 1}, {4, 3}, {0, 3}});
}

TEST_CASE("dots of the ccw square follow the four rules") {
  auto d = dots(square()).dots;
  REQUIRE(d.size() == 4);
  CHECK((d[0].sector == 1 && d[0].height == 0));
  CHECK((d[1].sector == 2 && d[1].height == -2));
  CHECK((d[2].sector == 3 && d[2].height == -2));
  CHECK((d[3].sector == 0 && d[3].height == 0));
  for (const auto& dot : d) CHECK(dot.turn == 1);
}

TEST_CASE("square conormal is the embedded longitude") {
  auto f = conormal_front(square());
  CHECK(f.events.empty());
  CHECK(f.wall_strands() == 1);
  CHECK(f.wall_orientations == std::vector<int>{1});
  auto r = invariants(f);
  CHECK(r.tb == 0);
  CHECK(r.rot == 0);
  CHECK(r.winding == 1);
  CHECK(r.jplus == 0);
}

TEST_CASE("figure-eight conormal: the wrapped eye") {
  auto f = conormal_front(fig8());
  auto r = invariants(f);
  CHECK(r.crossings == 0);
  CHECK(r.left_cusps == 1);
  CHECK(r.right_cusps == 1);
  CHECK(r.winding == 0);
  CHECK(r.tb == -1);
  CHECK(r.rot == 0);
  CHECK(r.jplus == 0);
  CHECK(f.wall_strands() == 2);
  CHECK(components(f) == 1);
}

TEST_CASE("doubled convex curve winds twice") {
  auto f = conormal_front(doubled());
  CHECK(winding(f) == 2);
  CHECK(whitney_index(doubled()) == 2);
  CHECK(rot(f) == 0);
  CHECK(components(f) == 1);
}

static RectCurve random_grid_curve(std::mt19937& rng, int k) {
  std::vector<std::int64_t> xs(k), ys(k);
  for (int i = 0; i < k; ++i) { xs[i] = i; ys[i] = i; }
  std::shuffle(xs.begin(), xs.end(), rng);
  std::shuffle(ys.begin(), ys.end(), rng);
  std::vector<LatticePoint> corners;
  for (int i = 0; i < k; ++i) {
    corners.push_back({xs[i], ys[i]});
    corners.push_back({xs[(i + 1) % k], ys[i]});
  }
  return RectCurve::validate(corners);
}

TEST_CASE("conormal winding equals whitney index on random curves") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    auto c = random_grid_curve(rng, 3 + int(rng() % 5));
    auto f = conormal_front(c);
    auto r = invariants(f);
    REQUIRE(r.winding == whitney_index(c));
    REQUIRE(r.rot == 0);
    REQUIRE(r.left_cusps == r.right_cusps);
    REQUIRE(components(f) == 1);
    // reversal flips winding, keeps the framing
    auto fr = conormal_front(reverse(c));
    REQUIRE(tb(fr) == r.tb);
    REQUIRE(winding(fr) == -*r.winding);
  }
}
