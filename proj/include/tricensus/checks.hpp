#pragma once

#include <cstdint>

#include "tricensus/arrangement.hpp"
#include "tricensus/census.hpp"
#include "tricensus/geometry.hpp"

namespace tricensus {

/// Triple-intersection bookkeeping of one lift, set against the brute-force
/// transformation tables. Exact equality is the contract.
struct LiftEquivalence {
  std::uint64_t oracle_triples = 0;       // Sum C(n,3) over the oracle table
  std::uint64_t arrangement_triples = 0;  // triple_count of the lift arrangement
  std::uint64_t excluded_triples = 0;     // identity section (R^3) / a=0 section (C^2)
  bool ok = false;
  RichPointHistogram histogram;
};

/// Sum over non-identity motions of C(n(phi),3) vs the R^3 arrangement's
/// finite + translation triple count (identity section isolated).
LiftEquivalence motion_lift_equivalence(const PointSet& ps, unsigned threads = 1);

/// Sum over similitudes of C(n(psi),3) vs the C^2 arrangement's triple count
/// restricted to a != 0.
LiftEquivalence similitude_lift_equivalence(const PointSet& ps, unsigned threads = 1);

/// The excluded a = 0 points of the conformal lift must be exactly the N
/// points (0, q), q in P, each carrying all N lines L_pq with that target.
struct AZeroAudit {
  bool ok = false;
  std::size_t expected_points = 0;
  std::size_t found_points = 0;
  bool multiplicities_exact = false;  // every point has multiplicity exactly N
  bool targets_in_set = false;        // every point is (0, q) with q in P
};
AZeroAudit a_zero_audit(const PointSet& ps);

/// Exact partition identity behind the halving trick: pairs congruent via a
/// direct motion plus mirror-only pairs (full keys equal, direct keys
/// unequal) account for every congruent pair, so one side is >= Q_c/2.
struct HalvingIdentity {
  std::uint64_t q_full = 0;
  std::uint64_t q_direct = 0;
  std::uint64_t q_mirror_only = 0;
  bool ok = false;
};
HalvingIdentity halving_identity(const PointSet& ps);

}  // namespace tricensus
