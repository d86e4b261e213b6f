#include <doctest.h>

#include <sstream>

#include "test_support.hpp"
#include "tricensus/generators.hpp"
#include "tricensus/geometry.hpp"
#include "tricensus/pointset_io.hpp"

using namespace tricensus;
using tricensus::testing::random_point;
using tricensus::testing::random_rat;

TEST_SUITE("geometry") {

TEST_CASE("sq_dist examples") {
  CHECK(sq_dist({0, 0}, {3, 4}) == Rat(25));
  CHECK(sq_dist({0, 0}, {0, 0}) == Rat(0));
  CHECK(sq_dist({Rat(1, 2), Rat(0)}, {Rat(0), Rat(1, 2)}) == Rat(1, 2));
}

TEST_CASE("sq_dist is symmetric and translation invariant") {
  SplitMix64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const Point a = random_point(rng), b = random_point(rng);
    const Rat vx = random_rat(rng), vy = random_rat(rng);
    CHECK(sq_dist(a, b) == sq_dist(b, a));
    CHECK(sq_dist({a.x + vx, a.y + vy}, {b.x + vx, b.y + vy}) == sq_dist(a, b));
  }
}

TEST_CASE("orientation examples and antisymmetry") {
  CHECK(orientation({0, 0}, {1, 0}, {0, 1}) == 1);
  CHECK(orientation({0, 0}, {1, 1}, {2, 2}) == 0);
  CHECK(orientation({0, 0}, {0, 1}, {1, 0}) == -1);
  SplitMix64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const Point a = random_point(rng), b = random_point(rng), c = random_point(rng);
    const int o = orientation(a, b, c);
    CHECK(orientation(b, a, c) == -o);
    CHECK(orientation(a, c, b) == -o);
    CHECK(orientation(c, b, a) == -o);
  }
}

TEST_CASE("point set rejects duplicates and empties") {
  CHECK_THROWS_AS(PointSet({{0, 0}, {1, 1}, {0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(PointSet(std::vector<Point>{}), std::invalid_argument);
  const PointSet ps({{0, 0}, {1, 0}, {2, 5}});
  CHECK(ps.index_of({2, 5}) == 2);
  CHECK_FALSE(ps.index_of({2, 4}).has_value());
}

TEST_CASE("max_collinear examples") {
  CHECK(max_collinear(grid(3)) == 3);
  CHECK(max_collinear(PointSet({{0, 0}, {1, 0}, {0, 1}})) == 2);
  CHECK(max_collinear(PointSet({{0, 0}, {1, 0}, {2, 0}, {0, 1}})) == 3);
}

TEST_CASE("max_collinear bounds") {
  SplitMix64 rng(17);
  for (int t = 0; t < 20; ++t) {
    const PointSet ps = random_rational(5 + t % 4, 1000 + t);
    const std::size_t m = max_collinear(ps);
    CHECK(m <= ps.size());
    CHECK(m >= 2);
  }
  // equals N iff all points collinear
  const PointSet line({{0, 0}, {1, 2}, {2, 4}, {3, 6}});
  CHECK(max_collinear(line) == 4);
  const PointSet bent({{0, 0}, {1, 2}, {2, 4}, {3, 7}});
  CHECK(max_collinear(bent) == 3);
}

TEST_CASE("hypothesis validation") {
  CHECK(validate_hypothesis(grid(2)).ok);
  CHECK(validate_hypothesis(grid(3)).ok);

  const PointSet bad({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {Rat(1, 2), Rat(7)}});
  const HypothesisReport r = validate_hypothesis(bad);
  CHECK_FALSE(r.ok);
  CHECK(r.max_on_line == 4);
  REQUIRE(r.witness.has_value());
  CHECK(collinear(r.witness->a, r.witness->b, Point{2, 0}));
  CHECK(r.witness->count == 4);
}

TEST_CASE("point set text format round trip") {
  std::istringstream in(
      "# a comment\n"
      "0 0\n"
      "1/2 -3/4   # trailing comment\n"
      "\n"
      "-2 5\n");
  const PointSet ps = read_point_set(in);
  REQUIRE(ps.size() == 3);
  CHECK(ps[1] == Point(Rat(1, 2), Rat(-3, 4)));

  std::ostringstream out;
  write_point_set(out, ps, "round trip");
  std::istringstream back(out.str());
  const PointSet ps2 = read_point_set(back);
  REQUIRE(ps2.size() == ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) CHECK(ps[i] == ps2[i]);
}

TEST_CASE("point set parse errors carry line numbers") {
  std::istringstream one_field("0 0\n17\n");
  CHECK_THROWS_WITH_AS(read_point_set(one_field),
                       doctest::Contains("line 2"), std::runtime_error);
  std::istringstream bad_rat("0 0\n1 x\n");
  CHECK_THROWS_WITH_AS(read_point_set(bad_rat), doctest::Contains("line 2"), std::runtime_error);
  std::istringstream empty("# nothing\n");
  CHECK_THROWS_AS(read_point_set(empty), std::runtime_error);
}

}  // TEST_SUITE
