#include "tricensus/report.hpp"

#include <cmath>

namespace tricensus {

namespace {

json section_json(const std::map<std::size_t, std::uint64_t>& section) {
  json obj = json::object();
  for (const auto& [k, c] : section) obj[std::to_string(k)] = c;
  return obj;
}

}  // namespace

json census_report(const ClassCensus& c, std::size_t top_k) {
  const PairCounts pc = pair_counts(c);
  json j;
  j["n_points"] = c.n_points;
  j["n_triples"] = c.n_triples;
  j["n_collinear_triples"] = c.n_collinear;
  j["n_triangles"] = c.n_triangles;
  j["include_degenerate"] = c.include_degenerate;
  j["key_kind"] = std::string(to_string(c.kind));
  j["n_classes"] = c.n_classes();
  j["Q"] = pc.pairs_same_class;
  j["sum_m_sq"] = pc.sum_m_sq;
  if (c.n_triangles > 0) {
    const Rat bound = class_lower_bound(c);
    j["cs_lower_bound_num"] = bound.num().get_str();
    j["cs_lower_bound_den"] = bound.den().get_str();
  } else {
    j["cs_lower_bound_num"] = "0";
    j["cs_lower_bound_den"] = "1";
  }
  const double n2 = static_cast<double>(c.n_points) * static_cast<double>(c.n_points);
  j["classes_per_n2"] = static_cast<double>(c.n_classes()) / n2;
  j["classes_log_n_per_n2"] =
      static_cast<double>(c.n_classes()) * std::log(static_cast<double>(c.n_points)) / n2;
  j["hypothesis_ok"] = c.hypothesis_ok;
  j["max_collinear"] = c.max_on_line;
  json top = json::array();
  for (std::size_t i = 0; i < c.multiplicities.size() && i < top_k; ++i)
    top.push_back(c.multiplicities[i]);
  j["top_multiplicities"] = std::move(top);
  return j;
}

json histogram_json(const RichPointHistogram& h) {
  json j;
  j["n_lines"] = h.n_lines;
  j["finite"] = section_json(h.finite);
  j["translation_classes"] = section_json(h.translations);
  j["a_zero"] = section_json(h.a_zero);
  j["identity_lines"] = h.identity_lines;
  j["finite_pairs"] = h.finite_pairs;
  j["triple_count"] = triple_count(h);
  j["identity_triples"] = identity_triple_count(h);
  j["a_zero_triples"] = a_zero_triple_count(h);
  return j;
}

json arrangement_report(const RichPointHistogram& h, std::size_t n_points, BoundRegime regime,
                        std::size_t k0) {
  json j = histogram_json(h);
  j["n_points"] = n_points;
  j["regime"] = regime == BoundRegime::guth_katz ? "guth-katz" : "szemeredi-trotter";
  const ConcurrencyAudit audit = concurrency_audit(h, n_points);
  j["concurrency_audit"] = {
      {"ok", audit.ok}, {"max_multiplicity", audit.max_multiplicity}, {"limit", audit.limit}};
  const DyadicBuckets dyadic = dyadic_buckets(h, k0);
  j["dyadic"] = {{"k0", dyadic.k0},
                 {"buckets", section_json(dyadic.buckets)},
                 {"majorant", dyadic.majorant},
                 {"total", dyadic.total()}};
  return j;
}

json equivalence_json(const EquivalenceCheck& check) {
  json j;
  j["ok"] = check.ok;
  j["n_triangles"] = check.n_triangles;
  if (check.ok) j["n_classes"] = check.n_classes;
  if (check.counterexample) {
    j["counterexample"] = {{"first", check.counterexample->first},
                           {"second", check.counterexample->second}};
  }
  return j;
}

json lift_equivalence_json(const LiftEquivalence& eq) {
  json j;
  j["ok"] = eq.ok;
  j["oracle_triples"] = eq.oracle_triples;
  j["arrangement_triples"] = eq.arrangement_triples;
  j["excluded_triples"] = eq.excluded_triples;
  return j;
}

json a_zero_json(const AZeroAudit& audit) {
  json j;
  j["ok"] = audit.ok;
  j["expected_points"] = audit.expected_points;
  j["found_points"] = audit.found_points;
  j["multiplicities_exact"] = audit.multiplicities_exact;
  j["targets_in_set"] = audit.targets_in_set;
  return j;
}

json halving_json(const HalvingIdentity& id) {
  json j;
  j["ok"] = id.ok;
  j["q_congruence_full"] = id.q_full;
  j["q_congruence_direct"] = id.q_direct;
  j["q_mirror_only"] = id.q_mirror_only;
  return j;
}

std::string dump_report(const json& j) { return j.dump(2) + "\n"; }

}  // namespace tricensus
