#include <doctest.h>

#include <map>

#include "test_support.hpp"
#include "tricensus/census.hpp"
#include "tricensus/generators.hpp"
#include "tricensus/report.hpp"

using namespace tricensus;

namespace {

// Reference tally straight from the canonical key functions, bypassing the
// census's interned fast path.
std::vector<std::uint64_t> reference_multiplicities(const PointSet& ps, KeyKind kind,
                                                    bool include_degenerate) {
  std::map<std::string, std::uint64_t> classes;
  for_each_triangle(ps, include_degenerate, [&](std::uint32_t i, std::uint32_t j, std::uint32_t k) {
    const Point &a = ps[i], &b = ps[j], &c = ps[k];
    switch (kind) {
      case KeyKind::congruence_full: {
        auto key = congruence_key(a, b, c);
        ++classes[std::string(collinear(a, b, c) ? "d" : "n") + key.to_string()];
        break;
      }
      case KeyKind::congruence_direct:
        ++classes[direct_congruence_key(a, b, c, include_degenerate).to_string()];
        break;
      case KeyKind::similarity_direct:
        ++classes[similarity_key(a, b, c, false, include_degenerate).to_string()];
        break;
      case KeyKind::similarity_full:
        ++classes[similarity_key(a, b, c, true, include_degenerate).to_string()];
        break;
    }
  });
  std::vector<std::uint64_t> mult;
  for (const auto& [_, m] : classes) mult.push_back(m);
  std::sort(mult.begin(), mult.end(), std::greater<>());
  return mult;
}

}  // namespace

TEST_SUITE("census") {

TEST_CASE("triangle enumeration counts") {
  CHECK(enumerate_triangles(grid(2), false).size() == 4);
  CHECK(enumerate_triangles(grid(3), false).size() == 76);
  CHECK(enumerate_triangles(grid(3), true).size() == 84);
  const PointSet line({{0, 0}, {1, 0}, {2, 0}});
  CHECK(enumerate_triangles(line, false).empty());
  CHECK(enumerate_triangles(line, true).size() == 1);
}

TEST_CASE("2x2 grid censuses") {
  const ClassCensus full = census(grid(2), KeyKind::congruence_full);
  CHECK(full.n_triangles == 4);
  CHECK(full.n_classes() == 1);
  CHECK(full.multiplicities == std::vector<std::uint64_t>{4});
  CHECK(full.hypothesis_ok);

  const ClassCensus sim = census(grid(2), KeyKind::similarity_direct);
  CHECK(sim.n_classes() == 1);
  CHECK(sim.multiplicities == std::vector<std::uint64_t>{4});

  const PairCounts pc = pair_counts(full);
  CHECK(pc.pairs_same_class == 6);
  CHECK(pc.sum_m_sq == 16);
  CHECK(class_lower_bound(full) == Rat(1));
}

TEST_CASE("single generic triangle is its own class") {
  const ClassCensus c = census(PointSet({{0, 0}, {3, 0}, {0, 1}}), KeyKind::congruence_full);
  CHECK(c.n_triangles == 1);
  CHECK(c.n_classes() == 1);
  CHECK(c.multiplicities == std::vector<std::uint64_t>{1});
}

TEST_CASE("pair count identities") {
  ClassCensus c;
  c.multiplicities = {4};
  c.n_triangles = 4;
  CHECK(pair_counts(c).pairs_same_class == 6);
  CHECK(pair_counts(c).sum_m_sq == 16);

  c.multiplicities = {3, 2};
  c.n_triangles = 5;
  CHECK(pair_counts(c).pairs_same_class == 4);
  CHECK(pair_counts(c).sum_m_sq == 13);
  CHECK(class_lower_bound(c) == Rat(25, 13));

  c.multiplicities.assign(7, 1);  // all singletons
  c.n_triangles = 7;
  CHECK(pair_counts(c).pairs_same_class == 0);
  CHECK(pair_counts(c).sum_m_sq == 7);
  CHECK(class_lower_bound(c) == Rat(7));
}

TEST_CASE("sum_m_sq = |T| + 2Q and Cauchy-Schwarz bound on random sets") {
  SplitMix64 rng(41);
  for (int t = 0; t < 10; ++t) {
    const PointSet ps = random_rational(6 + t % 4, 500 + t);
    for (KeyKind kind : all_key_kinds()) {
      const ClassCensus c = census(ps, kind);
      const PairCounts pc = pair_counts(c);
      CHECK(pc.sum_m_sq == c.n_triangles + 2 * pc.pairs_same_class);
      std::uint64_t total = 0;
      for (auto m : c.multiplicities) total += m;
      CHECK(total == c.n_triangles);
      if (c.n_triangles > 0) {
        // n_classes >= |T|^2 / sum m^2, exactly.
        const Rat bound = class_lower_bound(c);
        CHECK(Rat(static_cast<long>(c.n_classes())) >= bound);
      }
    }
  }
}

TEST_CASE("coarser relations merge classes; Q_s >= Q_c") {
  SplitMix64 rng(43);
  for (int t = 0; t < 8; ++t) {
    const PointSet ps = random_rational(7, 900 + t);
    const ClassCensus cf = census(ps, KeyKind::congruence_full);
    const ClassCensus cd = census(ps, KeyKind::congruence_direct);
    const ClassCensus sd = census(ps, KeyKind::similarity_direct);
    const ClassCensus sf = census(ps, KeyKind::similarity_full);
    CHECK(sd.n_classes() <= cd.n_classes());
    CHECK(cf.n_classes() <= cd.n_classes());
    CHECK(sf.n_classes() <= sd.n_classes());
    CHECK(pair_counts(sd).pairs_same_class >= pair_counts(cd).pairs_same_class);
    CHECK(pair_counts(sf).pairs_same_class >= pair_counts(cf).pairs_same_class);
  }
}

TEST_CASE("census matches the plain key functions on every kind") {
  SplitMix64 rng(47);
  for (int t = 0; t < 6; ++t) {
    const PointSet ps = random_rational(8, 1300 + t);
    for (KeyKind kind : all_key_kinds())
      for (bool degenerate : {false, true}) {
        CensusOptions opts;
        opts.include_degenerate = degenerate;
        CHECK(census(ps, kind, opts).multiplicities ==
              reference_multiplicities(ps, kind, degenerate));
      }
  }
  for (KeyKind kind : all_key_kinds())
    for (bool degenerate : {false, true}) {
      CensusOptions opts;
      opts.include_degenerate = degenerate;
      CHECK(census(grid(4), kind, opts).multiplicities ==
            reference_multiplicities(grid(4), kind, degenerate));
    }
}

TEST_CASE("mixed non-dyadic denominators") {
  const PointSet ps({{Rat(1, 3), Rat(0)},
                     {Rat(2, 7), Rat(1, 3)},
                     {Rat(0), Rat(5, 11)},
                     {Rat(1, 2), Rat(1, 7)},
                     {Rat(-3, 5), Rat(2, 11)},
                     {Rat(4, 3), Rat(-1, 2)},
                     {Rat(1, 3), Rat(5, 11)}});
  for (KeyKind kind : all_key_kinds())
    CHECK(census(ps, kind).multiplicities == reference_multiplicities(ps, kind, false));
}

TEST_CASE("coordinates too large for the interned fast path") {
  // Forces the exact mpz orientation fallback inside the census loop.
  const Rat big(mpz_class(mpz_class(1) << 70));
  const PointSet ps({{big, Rat(0)},
                     {Rat(0), big},
                     {big + Rat(1), big},
                     {Rat(3), Rat(4)},
                     {-big, Rat(1, 3)},
                     {Rat(1, 7), Rat(2)}});
  for (KeyKind kind : all_key_kinds())
    CHECK(census(ps, kind).multiplicities == reference_multiplicities(ps, kind, false));
}

TEST_CASE("census independent of point order and thread count") {
  const PointSet ps = random_rational(30, 2024);
  std::vector<Point> shuffled(ps.begin(), ps.end());
  SplitMix64 rng(49);
  for (std::size_t i = shuffled.size(); i > 1; --i)
    std::swap(shuffled[i - 1], shuffled[rng.next_below(i)]);
  const PointSet ps2(std::move(shuffled));

  for (KeyKind kind : all_key_kinds()) {
    CensusOptions seq, par;
    par.threads = 3;
    const ClassCensus a = census(ps, kind, seq);
    const ClassCensus b = census(ps, kind, par);
    const ClassCensus c = census(ps2, kind, par);
    CHECK(a.multiplicities == b.multiplicities);
    CHECK(a.multiplicities == c.multiplicities);
    CHECK(dump_report(census_report(a)) == dump_report(census_report(b)));
  }
}

TEST_CASE("degenerate mode keys collinear triples") {
  CensusOptions opts;
  opts.include_degenerate = true;
  const ClassCensus c = census(grid(3), KeyKind::congruence_full, opts);
  CHECK(c.n_triangles == 84);
  CHECK(c.n_collinear == 8);
  const ClassCensus plain = census(grid(3), KeyKind::congruence_full);
  CHECK(plain.n_triangles == 76);
  CHECK(plain.n_collinear == 8);
  // the degenerate triples add classes, never merge with proper triangles
  CHECK(c.n_classes() > plain.n_classes());
}

TEST_CASE("strict mode rejects hypothesis violations") {
  const PointSet bad({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {Rat(1, 2), Rat(7)}});
  CensusOptions opts;
  opts.strict_hypothesis = true;
  CHECK_THROWS_AS(census(bad, KeyKind::congruence_full, opts), HypothesisViolation);
  const ClassCensus c = census(bad, KeyKind::congruence_full);
  CHECK_FALSE(c.hypothesis_ok);
  CHECK(c.max_on_line == 4);
}

}  // TEST_SUITE
