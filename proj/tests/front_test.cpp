#include <catch2/catch_amalgamated.hpp>

#include "conormal/front.hpp"

using namespace conormal;

static LineFront eye() { return {{L(1), R(1)}}; }
static LineFront stab() { return {{L(1), L(1), R(2), R(1)}}; }
// max-tb right trefoil: plat closure of the 3-crossing 2-braid
static LineFront trefoil() { return {{L(1), L(3), X(2), X(2), X(2), R(3), R(1)}}; }

TEST_CASE("unknot eye invariants") {
  auto r = invariants(eye());
  CHECK(r.tb == -1);
  CHECK(r.rot == 0);
  CHECK(r.crossings == 0);
  CHECK(r.right_cusps == 1);
  CHECK(components(eye()) == 1);
}

TEST_CASE("stabilized unknot invariants") {
  auto f = stab();
  auto r = invariants(f);
  CHECK(r.tb == -2);
  CHECK(std::abs(r.rot) == 1);
  CHECK(components(f) == 1);
  f.orientation = -f.orientation;
  CHECK(invariants(f).rot == -r.rot);
}

TEST_CASE("trefoil invariants") {
  auto r = invariants(trefoil());
  CHECK(r.tb == 1);
  CHECK(r.rot == 0);
  CHECK(r.crossings == 3);
  CHECK(components(trefoil()) == 1);
}

TEST_CASE("invalid fronts are rejected") {
  CHECK_THROWS_AS(invariants(LineFront{{X(1)}}), ValidationError);
  CHECK_THROWS_AS(invariants(LineFront{{L(1), R(2)}}), ValidationError);
  CHECK_THROWS_AS(invariants(LineFront{{L(1)}}), ValidationError);
}

TEST_CASE("torus front: single wall strand loop") {
  TorusFront f;
  f.wall_orientations = {1};
  auto r = invariants(f);
  CHECK(r.tb == 0);
  CHECK(r.rot == 0);
  CHECK(r.winding == 1);
  CHECK(r.jplus == 0);
  CHECK(components(f) == 1);
}

TEST_CASE("jplus consistency identity") {
  TorusFront f;
  f.wall_orientations = {1, -1};
  f.events = {L(1), R(1)};
  auto r = invariants(f);
  REQUIRE(r.winding.has_value());
  CHECK(*r.jplus + *r.winding * *r.winding - 1 == r.tb);
}

TEST_CASE("framed codes of mirror eyes agree") {
  CHECK(framed_code(eye()) == framed_code(LineFront{{L(1), R(1)}}));
  CHECK(framed_code(trefoil()).tb == 1);
}
