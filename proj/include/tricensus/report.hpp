#pragma once

#include <json.hpp>

#include "tricensus/arrangement.hpp"
#include "tricensus/census.hpp"
#include "tricensus/checks.hpp"
#include "tricensus/oracle.hpp"

namespace tricensus {

using json = nlohmann::ordered_json;

/// Census report per the external contract: counts plus the exact
/// Cauchy-Schwarz lower bound (numerator/denominator as decimal strings).
/// Field values are derived only from the merged census, so identical runs
/// serialize byte-identically regardless of thread count.
json census_report(const ClassCensus& c, std::size_t top_k = 10);

json histogram_json(const RichPointHistogram& h);
json arrangement_report(const RichPointHistogram& h, std::size_t n_points, BoundRegime regime,
                        std::size_t k0);
json equivalence_json(const EquivalenceCheck& check);
json lift_equivalence_json(const LiftEquivalence& eq);
json a_zero_json(const AZeroAudit& audit);
json halving_json(const HalvingIdentity& id);

std::string dump_report(const json& j);

}  // namespace tricensus
