#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tricensus/census.hpp"
#include "tricensus/conformal_lift.hpp"
#include "tricensus/geometry.hpp"
#include "tricensus/keys.hpp"
#include "tricensus/motion_lift.hpp"

namespace tricensus {

using Triangle = std::array<Point, 3>;

/// A group element together with n = #{(x, y) in P x P : motion(x) = y}.
struct MotionRecord {
  RigidMotion motion;
  std::uint32_t n = 0;
};

/// All direct rigid motions realizable between point pairs of P, deduplicated
/// and partitioned; every n is recomputed by applying the motion to all of P.
/// Built without consulting canonical keys or lifted lines.
struct MotionTable {
  std::optional<MotionRecord> identity;
  std::vector<MotionRecord> translations;  // sorted by vector
  std::vector<MotionRecord> rotations;     // sorted by (center, t)

  std::size_t size() const {
    return (identity ? 1 : 0) + translations.size() + rotations.size();
  }
  /// Sum over non-identity entries of C(n, 3).
  std::uint64_t triple_sum_non_identity() const;
};

/// Enumerates ordered pairs of ordered point pairs ((p,p'),(q,q')) with equal
/// squared lengths. Two-point recovery gives the unique direct motion when
/// p != p'; the degenerate pairs (p = p', q = q') contribute the two
/// distinguished motions of the single map p -> q: the translation by q - p
/// and the half-turn about midpoint(p, q).
MotionTable enumerate_motions(const PointSet& ps);

struct SimilitudeRecord {
  Similitude map;
  std::uint32_t n = 0;
};

struct SimilitudeTable {
  std::vector<SimilitudeRecord> entries;  // sorted by (a, b); only a != 0

  std::uint64_t triple_sum() const;
  const SimilitudeRecord* find(const Similitude& s) const;
};

/// All similitudes realizable between segments of P: for every ((p,p'),(q,q'))
/// with p != p', a = (q-q')/(p-p'), b = q - a*p, kept when a != 0.
SimilitudeTable enumerate_similitudes(const PointSet& ps);

/// True iff some of the 6 vertex correspondences (12 with reflections)
/// extends to an exact isometry; decided by side-length matching plus an
/// orientation check.
bool congruent_pair_test(const Triangle& t1, const Triangle& t2, bool allow_reflections);

/// Similarity analogue: corresponding squared sides proportional (cross
/// ratios equal), orientation preserved unless reflections are allowed.
bool similar_pair_test(const Triangle& t1, const Triangle& t2, bool allow_reflections);

struct EquivalenceCheck {
  bool ok = false;
  std::uint64_t n_triangles = 0;
  std::uint64_t n_classes = 0;
  /// First pair of triangle index triples where the key partition and the
  /// pairwise oracle disagree.
  std::optional<std::pair<std::array<std::uint32_t, 3>, std::array<std::uint32_t, 3>>>
      counterexample;
};

/// Verifies that partitioning the (non-degenerate) triangles of P by
/// canonical key equals the partition by pairwise oracle tests. `key_label`
/// may replace the canonical key labeling (fault-injection hook for tests).
EquivalenceCheck census_equivalence_check(
    const PointSet& ps, KeyKind kind, std::size_t cap = 10,
    const std::function<std::string(const Triangle&)>& key_label = nullptr);

}  // namespace tricensus
