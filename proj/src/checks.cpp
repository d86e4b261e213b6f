#include "tricensus/checks.hpp"

#include "tricensus/keys.hpp"
#include "tricensus/oracle.hpp"

namespace tricensus {

LiftEquivalence motion_lift_equivalence(const PointSet& ps, unsigned threads) {
  LiftEquivalence eq;
  eq.histogram = rich_points(motion_lines(ps, /*include_identity_lines=*/true), threads);
  eq.arrangement_triples = triple_count(eq.histogram);
  eq.excluded_triples = identity_triple_count(eq.histogram);
  eq.oracle_triples = enumerate_motions(ps).triple_sum_non_identity();
  eq.ok = eq.oracle_triples == eq.arrangement_triples;
  return eq;
}

LiftEquivalence similitude_lift_equivalence(const PointSet& ps, unsigned threads) {
  LiftEquivalence eq;
  eq.histogram = rich_points(conformal_lines(ps), threads);
  eq.arrangement_triples = triple_count(eq.histogram);
  eq.excluded_triples = a_zero_triple_count(eq.histogram);
  eq.oracle_triples = enumerate_similitudes(ps).triple_sum();
  eq.ok = eq.oracle_triples == eq.arrangement_triples;
  return eq;
}

AZeroAudit a_zero_audit(const PointSet& ps) {
  const ConformalDetails details = rich_point_details(conformal_lines(ps));
  AZeroAudit audit;
  audit.expected_points = ps.size();
  audit.found_points = details.a_zero.size();
  audit.multiplicities_exact = true;
  audit.targets_in_set = true;
  for (const ConformalRichPoint& rp : details.a_zero) {
    if (rp.lines.size() != ps.size()) audit.multiplicities_exact = false;
    if (!ps.index_of(Point{rp.point.b.re, rp.point.b.im})) audit.targets_in_set = false;
  }
  audit.ok = audit.found_points == audit.expected_points && audit.multiplicities_exact &&
             audit.targets_in_set;
  return audit;
}

HalvingIdentity halving_identity(const PointSet& ps) {
  const auto triples = enumerate_triangles(ps, /*include_degenerate=*/false);
  std::vector<CongruenceKey> full;
  std::vector<DirectCongruenceKey> direct;
  full.reserve(triples.size());
  direct.reserve(triples.size());
  for (const auto& t : triples) {
    full.push_back(congruence_key(ps[t[0]], ps[t[1]], ps[t[2]]));
    direct.push_back(direct_congruence_key(ps[t[0]], ps[t[1]], ps[t[2]]));
  }

  HalvingIdentity id;
  for (std::size_t i = 0; i < triples.size(); ++i)
    for (std::size_t j = i + 1; j < triples.size(); ++j) {
      const bool same_full = full[i] == full[j];
      const bool same_direct = direct[i] == direct[j];
      if (same_full) ++id.q_full;
      if (same_direct) ++id.q_direct;
      if (same_full && !same_direct) ++id.q_mirror_only;
    }
  id.ok = id.q_direct + id.q_mirror_only == id.q_full &&
          (2 * id.q_direct >= id.q_full || 2 * id.q_mirror_only >= id.q_full);
  return id;
}

}  // namespace tricensus
