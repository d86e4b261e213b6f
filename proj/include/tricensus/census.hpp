#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tricensus/geometry.hpp"
#include "tricensus/keys.hpp"

namespace tricensus {

/// Visits all C(N,3) index triples i<j<k; collinear triples are skipped
/// unless include_degenerate is set.
void for_each_triangle(const PointSet& ps, bool include_degenerate,
                       const std::function<void(std::uint32_t, std::uint32_t, std::uint32_t)>& fn);

std::vector<std::array<std::uint32_t, 3>> enumerate_triangles(const PointSet& ps,
                                                              bool include_degenerate);

struct CensusOptions {
  bool include_degenerate = false;
  unsigned threads = 1;
  /// When set, a hypothesis violation throws; default records it and counts on.
  bool strict_hypothesis = false;
};

struct HypothesisViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Class multiplicities of the triangles of a point set under one key kind.
/// Only multiplicities are retained; Sum(m_c) = n_triangles by construction.
struct ClassCensus {
  KeyKind kind = KeyKind::congruence_full;
  bool include_degenerate = false;
  std::size_t n_points = 0;
  std::uint64_t n_triples = 0;     // C(N,3)
  std::uint64_t n_collinear = 0;   // collinear triples among them
  std::uint64_t n_triangles = 0;   // triples counted into classes (|T|)
  bool hypothesis_ok = false;
  std::size_t max_on_line = 0;
  std::vector<std::uint64_t> multiplicities;  // descending

  std::size_t n_classes() const { return multiplicities.size(); }
};

/// Aggregates canonical keys of all triangles into class multiplicities.
/// Deterministic: output is independent of enumeration order and thread
/// count. Requires |P| >= 3.
ClassCensus census(const PointSet& ps, KeyKind kind, const CensusOptions& opts = {});

struct PairCounts {
  std::uint64_t pairs_same_class = 0;  // Q: unordered pairs of distinct triangles, same class
  std::uint64_t sum_m_sq = 0;          // Sum over classes of m_c^2
};

/// Q = Sum C(m_c, 2); the identity sum_m_sq = |T| + 2Q holds exactly.
PairCounts pair_counts(const ClassCensus& c);

/// Cauchy-Schwarz class lower bound |T|^2 / Sum m_c^2, exact.
Rat class_lower_bound(const ClassCensus& c);

}  // namespace tricensus
