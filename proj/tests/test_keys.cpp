#include <doctest.h>

#include <algorithm>

#include "test_support.hpp"
#include "tricensus/keys.hpp"
#include "tricensus/motion_lift.hpp"
#include "tricensus/conformal_lift.hpp"

using namespace tricensus;
using tricensus::testing::random_motion;
using tricensus::testing::random_nonzero_gauss;
using tricensus::testing::random_rat;
using tricensus::testing::random_triangle;

namespace {

std::array<Rat, 3> sides(const CongruenceKey& k) { return k.sq_sides; }

Point map_point(const Similitude& s, const Point& p) {
  const GaussRat z = apply_sim(s, p.as_complex());
  return {z.re, z.im};
}

}  // namespace

TEST_SUITE("keys") {

TEST_CASE("congruence key examples") {
  CHECK(sides(congruence_key({0, 0}, {1, 0}, {0, 1})) == std::array<Rat, 3>{1, 1, 2});
  CHECK(sides(congruence_key({0, 0}, {2, 0}, {0, 2})) == std::array<Rat, 3>{4, 4, 8});
  CHECK_THROWS_AS(congruence_key({0, 0}, {0, 0}, {1, 1}), std::invalid_argument);
}

TEST_CASE("congruence key is invariant under all 6 vertex orders") {
  const Point a{0, 0}, b{1, 0}, c{0, 1};
  const CongruenceKey expect = congruence_key(a, b, c);
  const std::array<std::array<Point, 3>, 6> perms = {
      {{a, b, c}, {a, c, b}, {b, a, c}, {b, c, a}, {c, a, b}, {c, b, a}}};
  for (const auto& p : perms) CHECK(congruence_key(p[0], p[1], p[2]) == expect);
}

TEST_CASE("direct congruence key: minimal cyclic rotation in ccw order") {
  const DirectCongruenceKey k = direct_congruence_key({0, 0}, {3, 0}, {0, 1});
  CHECK(k.sq_sides == std::array<Rat, 3>{1, 9, 10});
  CHECK_FALSE(k.degenerate);

  const DirectCongruenceKey mirror = direct_congruence_key({0, 0}, {3, 0}, {0, -1});
  CHECK(mirror.sq_sides == std::array<Rat, 3>{1, 10, 9});
  CHECK_FALSE(k == mirror);
}

TEST_CASE("isosceles triangle equals its mirror under direct congruence") {
  const Point a{0, 0}, b{1, 0};
  const Point c{Rat(1, 2), Rat(1)}, cm{Rat(1, 2), Rat(-1)};
  CHECK(direct_congruence_key(a, b, c) == direct_congruence_key(a, b, cm));
}

TEST_CASE("degenerate triples need the explicit flag") {
  CHECK_THROWS_AS(direct_congruence_key({0, 0}, {1, 0}, {2, 0}), std::invalid_argument);
  const DirectCongruenceKey k = direct_congruence_key({0, 0}, {1, 0}, {2, 0}, true);
  CHECK(k.degenerate);
  CHECK(k.sq_sides == std::array<Rat, 3>{1, 1, 4});

  CHECK_THROWS_AS(similarity_key({0, 0}, {1, 0}, {2, 0}, false), std::invalid_argument);
  const SimilarityKey s = similarity_key({0, 0}, {1, 0}, {2, 0}, false, true);
  CHECK(s.degenerate);
  CHECK(s.shape.is_real());
}

TEST_CASE("anharmonic orbit of i") {
  const auto orbit = anharmonic_orbit(GaussRat(0, 1));
  const std::vector<GaussRat> expect = {
      GaussRat(0, -1),         GaussRat(0, 1),           GaussRat(Rat(1, 2), Rat(-1, 2)),
      GaussRat(Rat(1, 2), Rat(1, 2)), GaussRat(1, -1),  GaussRat(1, 1)};
  CHECK(orbit == expect);
}

TEST_CASE("anharmonic orbit of 1/2 has size 3") {
  const auto orbit = anharmonic_orbit(GaussRat(Rat(1, 2), Rat(0)));
  const std::vector<GaussRat> expect = {GaussRat(-1, 0), GaussRat(Rat(1, 2), Rat(0)),
                                        GaussRat(2, 0)};
  CHECK(orbit == expect);
  CHECK(anharmonic_orbit(GaussRat(2, 0)) == expect);
}

TEST_CASE("anharmonic orbit rejects 0 and 1, and is closed") {
  CHECK_THROWS_AS(anharmonic_orbit(GaussRat(0, 0)), std::domain_error);
  CHECK_THROWS_AS(anharmonic_orbit(GaussRat(1, 0)), std::domain_error);

  SplitMix64 rng(23);
  const GaussRat one(1, 0);
  for (int t = 0; t < 50; ++t) {
    GaussRat r = random_nonzero_gauss(rng);
    if (r == one) continue;
    const auto orbit = anharmonic_orbit(r);
    CHECK(orbit.size() <= 6);
    for (const GaussRat& z : orbit) {
      const GaussRat s = one - z;
      for (const GaussRat& image : {z, inverse(z), s, inverse(s), -(z / s), -(s / z)})
        CHECK(std::binary_search(orbit.begin(), orbit.end(), image));
    }
  }
}

TEST_CASE("similarity key examples") {
  const SimilarityKey k = similarity_key({0, 0}, {1, 0}, {0, 1}, false);
  CHECK(k.shape == GaussRat(0, -1));
  CHECK(similarity_key({0, 0}, {2, 0}, {0, 2}, false) == k);  // scale invariance

  // Mirror triangle with reflections on: conjugation closure makes keys equal.
  const SimilarityKey orig = similarity_key({0, 0}, {3, 0}, {0, 1}, true);
  const SimilarityKey mirrored = similarity_key({0, 0}, {3, 0}, {0, -1}, true);
  CHECK(orig == mirrored);
  // Without reflections the scalene mirror pair separates.
  CHECK_FALSE(similarity_key({0, 0}, {3, 0}, {0, 1}, false) ==
              similarity_key({0, 0}, {3, 0}, {0, -1}, false));
}

TEST_CASE("keys invariant under random rigid motions and similitudes") {
  SplitMix64 rng(29);
  for (int t = 0; t < 300; ++t) {
    const auto tri = random_triangle(rng);

    // Rigid motions (|a| = 1 via the half-angle parameterisation).
    const RigidMotion m = random_motion(rng);
    const Point ma = apply(m, tri[0]), mb = apply(m, tri[1]), mc = apply(m, tri[2]);
    CHECK(congruence_key(ma, mb, mc) == congruence_key(tri[0], tri[1], tri[2]));
    CHECK(direct_congruence_key(ma, mb, mc) == direct_congruence_key(tri[0], tri[1], tri[2]));

    // Similitudes z -> az + b with a != 0.
    const Similitude s{random_nonzero_gauss(rng), tricensus::testing::random_gauss(rng)};
    const Point sa = map_point(s, tri[0]), sb = map_point(s, tri[1]), sc = map_point(s, tri[2]);
    CHECK(similarity_key(sa, sb, sc, false) == similarity_key(tri[0], tri[1], tri[2], false));
    CHECK(similarity_key(sa, sb, sc, true) == similarity_key(tri[0], tri[1], tri[2], true));
  }
}

TEST_CASE("congruence keys survive 10^4 rational rotations") {
  SplitMix64 rng(101);
  for (int t = 0; t < 10000; ++t) {
    const auto tri = random_triangle(rng);
    const RigidMotion m = decode({random_rat(rng), random_rat(rng), random_rat(rng)});
    const Point a = apply(m, tri[0]), b = apply(m, tri[1]), c = apply(m, tri[2]);
    REQUIRE(congruence_key(a, b, c) == congruence_key(tri[0], tri[1], tri[2]));
  }
}

TEST_CASE("similarity key invariant under vertex relabeling") {
  SplitMix64 rng(31);
  for (int t = 0; t < 100; ++t) {
    const auto tri = random_triangle(rng);
    const SimilarityKey expect = similarity_key(tri[0], tri[1], tri[2], false);
    const std::array<std::array<int, 3>, 6> perms = {
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (const auto& p : perms)
      CHECK(similarity_key(tri[p[0]], tri[p[1]], tri[p[2]], false) == expect);
  }
}

TEST_CASE("direct congruence key refines the full key") {
  SplitMix64 rng(37);
  std::vector<std::array<Point, 3>> tris;
  for (int t = 0; t < 60; ++t) tris.push_back(random_triangle(rng));
  // Seed some guaranteed direct-congruent pairs (translated copies).
  for (int t = 0; t < 20; ++t) {
    auto tri = tris[t];
    const Rat dx = random_rat(rng), dy = random_rat(rng);
    for (Point& p : tri) p = {p.x + dx, p.y + dy};
    tris.push_back(tri);
  }
  for (std::size_t i = 0; i < tris.size(); ++i)
    for (std::size_t j = i + 1; j < tris.size(); ++j) {
      const bool direct = direct_congruence_key(tris[i][0], tris[i][1], tris[i][2]) ==
                          direct_congruence_key(tris[j][0], tris[j][1], tris[j][2]);
      const bool full = congruence_key(tris[i][0], tris[i][1], tris[i][2]) ==
                        congruence_key(tris[j][0], tris[j][1], tris[j][2]);
      if (direct) CHECK(full);
    }
}

}  // TEST_SUITE
