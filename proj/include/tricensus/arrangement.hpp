#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "tricensus/conformal_lift.hpp"
#include "tricensus/motion_lift.hpp"

namespace tricensus {

/// Exact multiplicity census of a line arrangement. `finite` maps k to the
/// number of distinct finite points where exactly k lines meet (k >= 2).
/// For motion lines, parallel classes sharing a nonzero displacement are the
/// points at infinity (`translations`), and the zero-displacement class (the
/// vertical lines L_pp) is the isolated identity section. For conformal
/// lines, points with a = 0 are tracked apart: they are not group elements.
struct RichPointHistogram {
  std::map<std::size_t, std::uint64_t> finite;
  std::map<std::size_t, std::uint64_t> translations;
  std::map<std::size_t, std::uint64_t> a_zero;
  std::size_t identity_lines = 0;
  std::size_t n_lines = 0;
  std::uint64_t finite_pairs = 0;  // unordered line pairs meeting at finite points

  std::size_t max_finite() const { return finite.empty() ? 0 : finite.rbegin()->first; }
  /// Finite points plus translation classes with multiplicity >= k.
  std::uint64_t points_at_least(std::size_t k) const;
};

/// Exact all-pairs intersection census. Aborts (std::logic_error) if any
/// point group fails the C(k,2) pair-count consistency check. The result is
/// independent of line order and thread count.
RichPointHistogram rich_points(const std::vector<MotionLine>& lines, unsigned threads = 1);
RichPointHistogram rich_points(const std::vector<ConformalLine>& lines, unsigned threads = 1);

struct MotionRichPoint {
  Vec3Rat point;
  std::vector<std::uint32_t> lines;  // indices into the input family, sorted
};
std::vector<MotionRichPoint> rich_point_details(const std::vector<MotionLine>& lines);

struct ConformalRichPoint {
  Similitude point;  // a = 0 entries are the excluded points (0, q)
  std::vector<std::uint32_t> lines;
};
struct ConformalDetails {
  std::vector<ConformalRichPoint> regular;  // a != 0
  std::vector<ConformalRichPoint> a_zero;
};
ConformalDetails rich_point_details(const std::vector<ConformalLine>& lines);

/// Number of intersecting triples of distinct lines: Sum C(k,3) over finite
/// points and translation classes. The identity section and the a = 0
/// section are excluded and reported by their own counters.
std::uint64_t triple_count(const RichPointHistogram& h);
std::uint64_t identity_triple_count(const RichPointHistogram& h);
std::uint64_t a_zero_triple_count(const RichPointHistogram& h);

/// S_{2^j} = points (finite + translation classes) with multiplicity in
/// [2^j, 2^{j+1}), restricted to multiplicity >= k0.
struct DyadicBuckets {
  std::size_t k0 = 3;
  std::map<std::size_t, std::uint64_t> buckets;  // 2^j -> |S_{2^j}|
  /// Sum over j of (2^{j+1})^3 * |S_{2^j}|; dominates 6 * triple_count for
  /// k0 <= 3.
  std::uint64_t majorant = 0;

  std::uint64_t total() const;
};
DyadicBuckets dyadic_buckets(const RichPointHistogram& h, std::size_t k0);

enum class BoundRegime { guth_katz, szemeredi_trotter };

/// Ratio of the measured >= k point count to the theorem envelope N^3/k^2
/// (Guth-Katz) or N^4/k^3 (Szemeredi-Trotter). Diagnostic only: the
/// theorems' constants are unknown, so nothing is asserted.
struct EnvelopeRow {
  std::size_t k = 0;
  std::uint64_t count_exact = 0;
  std::uint64_t count_at_least = 0;
  double envelope = 0.0;
  double ratio = 0.0;
};
std::vector<EnvelopeRow> bound_diagnostics(const RichPointHistogram& h, std::size_t n_points,
                                           BoundRegime regime);

struct ConcurrencyAudit {
  bool ok = false;
  std::size_t max_multiplicity = 0;
  std::size_t limit = 0;
};
/// ok iff no finite, non-excluded point has multiplicity > N.
ConcurrencyAudit concurrency_audit(const RichPointHistogram& h, std::size_t n_points);
ConcurrencyAudit concurrency_audit(const std::vector<MotionLine>& lines, std::size_t n_points);
ConcurrencyAudit concurrency_audit(const std::vector<ConformalLine>& lines, std::size_t n_points);

struct CoplanarityAudit {
  bool ok = false;
  std::size_t max_lines_in_plane = 0;
  std::size_t limit = 0;
};
/// Brute-force plane census of an R^3 motion family; intended for toy sizes
/// (the CLI gates it to point sets of at most 12 points).
CoplanarityAudit coplanarity_audit(const std::vector<MotionLine>& lines, std::size_t n_points);

/// CSV rows (k, count_exact, count_at_least, dyadic_bucket, envelope_ratio)
/// over the finite + translation sections.
void write_histogram_csv(std::ostream& out, const RichPointHistogram& h, std::size_t n_points,
                         BoundRegime regime, std::size_t k0 = 3);

}  // namespace tricensus
