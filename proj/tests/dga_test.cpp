#include <catch2/catch_amalgamated.hpp>

#include "conormal/conormal.hpp"
#include "conormal/dga.hpp"
#include "conormal/satellite.hpp"

using namespace conormal;

static LineFront eye() { return {{L(1), R(1)}}; }
static LineFront trefoil() { return {{L(1), L(3), X(2), X(2), X(2), R(3), R(1)}}; }

TEST_CASE("unknot eye algebra") {
  auto d = build_dga(eye());
  REQUIRE(d.generators.size() == 1);
  CHECK(d.generators[0].degree == 1);
  CHECK(d.differential[0].empty());  // the two disks cancel over Z/2
  CHECK(d_squared_is_zero(d));
  auto augs = augmentations(d);
  REQUIRE(augs.size() == 1);
  auto poly = poincare(d, augs[0]);
  CHECK(poly == PoincarePolynomial{{1, 1}});
  CHECK(graded_ruling_count(eye()) == 1);
}

TEST_CASE("stabilized unknot algebra is obstructed") {
  auto f = stabilized_unknot(1);
  auto d = build_dga(f);
  REQUIRE(d.generators.size() == 2);
  CHECK(d.grading_modulus == 2);
  CHECK(d_squared_is_zero(d));
  CHECK(augmentations(d).empty());
  CHECK(graded_ruling_count(f) == 0);
  CHECK_THROWS_AS(build_dga(f, true), ValidationError);
  // the later cusp bounds a bare disk; the earlier one also swallows the loop
  bool has_constant = false;
  for (auto& words : d.differential)
    for (auto& w : words)
      if (w.empty()) has_constant = true;
  CHECK(has_constant);
}

TEST_CASE("trefoil algebra reproduces the classical count") {
  auto d = build_dga(trefoil());
  REQUIRE(d.generators.size() == 5);
  int deg0 = 0, deg1 = 0;
  for (auto& g : d.generators) {
    if (g.degree == 0) ++deg0;
    if (g.degree == 1) ++deg1;
  }
  CHECK(deg0 == 3);
  CHECK(deg1 == 2);
  CHECK(d_squared_is_zero(d));
  auto augs = augmentations(d);
  CHECK(augs.size() == 5);
  auto set = poincare_set(trefoil());
  REQUIRE(set.size() == 1);
  CHECK(*set.begin() == PoincarePolynomial{{0, 2}, {1, 1}});
  CHECK(has_graded_ruling(trefoil()));
}

TEST_CASE("poincare rejects cyclic gradings") {
  CHECK_THROWS_AS(poincare_set(stabilized_unknot(1)), ValidationError);
}

TEST_CASE("splice with trivial pattern is the identity") {
  TorusFront longitude;
  longitude.wall_orientations = {1};
  auto out = splice(longitude, eye());
  CHECK(out.events == eye().events);
  auto out2 = splice(longitude, trefoil());
  CHECK(out2.events == trefoil().events);
}

TEST_CASE("two-copy of the eye") {
  auto f = n_copy(eye(), 2);
  auto r = invariants(f);
  CHECK(r.left_cusps == 2);
  CHECK(r.right_cusps == 2);
  CHECK(r.crossings == 2);
  CHECK(components(f) == 2);
}

TEST_CASE("satellite of the stabilized unknot by the wrapped-eye pattern") {
  auto band = conormal_front(RectCurve::validate(
      {{0, 0}, {4, 0}, {4, 2}, {1, 2}, {1, -2}, {-2, -2}, {-2, 1}, {0, 1}}));
  REQUIRE(band.wall_strands() == 2);
  auto sat = splice(band, stabilized_unknot(1));
  CHECK(components(sat) == 1);
  CHECK(rot(sat) == 0);
  auto d = build_dga(sat);
  CHECK(d.grading_modulus == 0);
  CHECK(d_squared_is_zero(d));
}
