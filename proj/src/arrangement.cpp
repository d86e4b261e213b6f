#include "tricensus/arrangement.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "tricensus/parallel.hpp"

namespace tricensus {

namespace {

std::uint64_t choose2(std::uint64_t k) { return k * (k - 1) / 2; }
std::uint64_t choose3(std::uint64_t k) { return k < 3 ? 0 : k * (k - 1) * (k - 2) / 6; }

template <typename Key>
struct PointGroup {
  std::vector<std::uint32_t> lines;
  std::uint64_t pairs = 0;
};

// All-pairs intersection grouped by exact intersection point. `visit` is
// called per unordered pair and feeds point groups via the sink.
template <typename Key, typename Line, typename Visit>
std::map<Key, PointGroup<Key>> collect_groups(const std::vector<Line>& lines, unsigned threads,
                                              Visit&& visit) {
  using Groups = std::map<Key, PointGroup<Key>>;
  const std::size_t n = lines.size();
  const unsigned workers = std::max(1u, threads);
  std::vector<Groups> local(workers);
  IndexFeed feed(n);
  run_workers(workers, [&](unsigned w) {
    Groups& groups = local[w];
    auto sink = [&groups](Key key, std::uint32_t i, std::uint32_t j) {
      PointGroup<Key>& g = groups[std::move(key)];
      g.lines.push_back(i);
      g.lines.push_back(j);
      ++g.pairs;
    };
    for (std::size_t i = feed.next(); i < n; i = feed.next())
      for (std::size_t j = i + 1; j < n; ++j)
        visit(lines[i], lines[j], static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
              sink);
  });
  Groups merged = std::move(local[0]);
  for (unsigned w = 1; w < workers; ++w) {
    for (auto& [key, group] : local[w]) {
      PointGroup<Key>& g = merged[key];
      g.lines.insert(g.lines.end(), group.lines.begin(), group.lines.end());
      g.pairs += group.pairs;
    }
    local[w].clear();
  }
  return merged;
}

// Deduplicates the line list of a group and verifies that the pairs seen at
// the point are exactly C(k,2) for k distinct lines.
template <typename Key>
std::size_t settle_group(PointGroup<Key>& g) {
  std::sort(g.lines.begin(), g.lines.end());
  g.lines.erase(std::unique(g.lines.begin(), g.lines.end()), g.lines.end());
  const std::size_t k = g.lines.size();
  if (g.pairs != choose2(k))
    throw std::logic_error("rich point census: pair count inconsistent with line multiplicity");
  return k;
}

void visit_motion_pair(const MotionLine& a, const MotionLine& b, std::uint32_t i, std::uint32_t j,
                       const std::function<void(Vec3Rat, std::uint32_t, std::uint32_t)>& sink) {
  MotionIntersection x = intersect_motion_lines(a, b);
  if (x.kind == MotionIntersection::Kind::finite) sink(std::move(x.point), i, j);
}

}  // namespace

std::uint64_t RichPointHistogram::points_at_least(std::size_t k) const {
  std::uint64_t total = 0;
  for (const auto& [m, c] : finite)
    if (m >= k) total += c;
  for (const auto& [m, c] : translations)
    if (m >= k) total += c;
  return total;
}

RichPointHistogram rich_points(const std::vector<MotionLine>& lines, unsigned threads) {
  RichPointHistogram h;
  h.n_lines = lines.size();

  auto groups = collect_groups<Vec3Rat>(
      lines, threads,
      [](const MotionLine& a, const MotionLine& b, std::uint32_t i, std::uint32_t j,
         const auto& sink) {
        MotionIntersection x = intersect_motion_lines(a, b);
        if (x.kind == MotionIntersection::Kind::finite) sink(std::move(x.point), i, j);
      });
  for (auto& [point, group] : groups) {
    const std::size_t k = settle_group(group);
    ++h.finite[k];
    h.finite_pairs += group.pairs;
  }

  // Parallel classes by displacement: the zero class is the identity section,
  // every other class of size >= 2 is a translation (a point at infinity).
  std::map<std::pair<Rat, Rat>, std::size_t> classes;
  for (const MotionLine& l : lines) ++classes[l.displacement()];
  for (const auto& [shift, count] : classes) {
    if (shift.first.is_zero() && shift.second.is_zero())
      h.identity_lines = count;
    else if (count >= 2)
      ++h.translations[count];
  }
  return h;
}

RichPointHistogram rich_points(const std::vector<ConformalLine>& lines, unsigned threads) {
  RichPointHistogram h;
  h.n_lines = lines.size();
  auto groups = collect_groups<Similitude>(
      lines, threads,
      [](const ConformalLine& a, const ConformalLine& b, std::uint32_t i, std::uint32_t j,
         const auto& sink) {
        ConformalIntersection x = intersect_c(a, b);
        if (x.kind != ConformalIntersection::Kind::parallel) sink(std::move(x.value), i, j);
      });
  for (auto& [point, group] : groups) {
    const std::size_t k = settle_group(group);
    if (point.a.is_zero()) {
      ++h.a_zero[k];
    } else {
      ++h.finite[k];
      h.finite_pairs += group.pairs;
    }
  }
  return h;
}

std::vector<MotionRichPoint> rich_point_details(const std::vector<MotionLine>& lines) {
  auto groups = collect_groups<Vec3Rat>(lines, 1, visit_motion_pair);
  std::vector<MotionRichPoint> out;
  out.reserve(groups.size());
  for (auto& [point, group] : groups) {
    settle_group(group);
    out.push_back({point, std::move(group.lines)});
  }
  return out;
}

ConformalDetails rich_point_details(const std::vector<ConformalLine>& lines) {
  auto groups = collect_groups<Similitude>(
      lines, 1,
      [](const ConformalLine& a, const ConformalLine& b, std::uint32_t i, std::uint32_t j,
         const auto& sink) {
        ConformalIntersection x = intersect_c(a, b);
        if (x.kind != ConformalIntersection::Kind::parallel) sink(std::move(x.value), i, j);
      });
  ConformalDetails out;
  for (auto& [point, group] : groups) {
    settle_group(group);
    auto& section = point.a.is_zero() ? out.a_zero : out.regular;
    section.push_back({point, std::move(group.lines)});
  }
  return out;
}

std::uint64_t triple_count(const RichPointHistogram& h) {
  std::uint64_t total = 0;
  for (const auto& [k, c] : h.finite) total += choose3(k) * c;
  for (const auto& [k, c] : h.translations) total += choose3(k) * c;
  return total;
}

std::uint64_t identity_triple_count(const RichPointHistogram& h) {
  return choose3(h.identity_lines);
}

std::uint64_t a_zero_triple_count(const RichPointHistogram& h) {
  std::uint64_t total = 0;
  for (const auto& [k, c] : h.a_zero) total += choose3(k) * c;
  return total;
}

std::uint64_t DyadicBuckets::total() const {
  std::uint64_t t = 0;
  for (const auto& [_, c] : buckets) t += c;
  return t;
}

DyadicBuckets dyadic_buckets(const RichPointHistogram& h, std::size_t k0) {
  if (k0 < 2) throw std::invalid_argument("dyadic_buckets: k0 must be >= 2");
  DyadicBuckets out;
  out.k0 = k0;
  auto add = [&](std::size_t m, std::uint64_t count) {
    if (m < k0) return;
    std::size_t p = 1;
    while (p * 2 <= m) p *= 2;  // p = 2^floor(log2 m)
    out.buckets[p] += count;
  };
  for (const auto& [m, c] : h.finite) add(m, c);
  for (const auto& [m, c] : h.translations) add(m, c);

  unsigned __int128 maj = 0;
  for (const auto& [p, c] : out.buckets) {
    const unsigned __int128 edge = static_cast<unsigned __int128>(2) * p;
    maj += edge * edge * edge * c;
  }
  if (maj > UINT64_MAX) throw std::overflow_error("dyadic_buckets: majorant overflow");
  out.majorant = static_cast<std::uint64_t>(maj);
  return out;
}

std::vector<EnvelopeRow> bound_diagnostics(const RichPointHistogram& h, std::size_t n_points,
                                           BoundRegime regime) {
  std::vector<EnvelopeRow> rows;
  std::size_t max_k = h.max_finite();
  if (!h.translations.empty()) max_k = std::max(max_k, h.translations.rbegin()->first);
  const double n = static_cast<double>(n_points);
  for (std::size_t k = 2; k <= max_k; ++k) {
    EnvelopeRow row;
    row.k = k;
    auto fin = h.finite.find(k);
    auto tr = h.translations.find(k);
    row.count_exact = (fin != h.finite.end() ? fin->second : 0) +
                      (tr != h.translations.end() ? tr->second : 0);
    row.count_at_least = h.points_at_least(k);
    const double kk = static_cast<double>(k);
    row.envelope = regime == BoundRegime::guth_katz ? n * n * n / (kk * kk)
                                                    : n * n * n * n / (kk * kk * kk);
    row.ratio = row.envelope == 0.0 ? 0.0 : static_cast<double>(row.count_at_least) / row.envelope;
    rows.push_back(row);
  }
  return rows;
}

ConcurrencyAudit concurrency_audit(const RichPointHistogram& h, std::size_t n_points) {
  ConcurrencyAudit audit;
  audit.limit = n_points;
  audit.max_multiplicity = h.max_finite();
  audit.ok = audit.max_multiplicity <= n_points;
  return audit;
}

ConcurrencyAudit concurrency_audit(const std::vector<MotionLine>& lines, std::size_t n_points) {
  return concurrency_audit(rich_points(lines), n_points);
}

ConcurrencyAudit concurrency_audit(const std::vector<ConformalLine>& lines, std::size_t n_points) {
  return concurrency_audit(rich_points(lines), n_points);
}

CoplanarityAudit coplanarity_audit(const std::vector<MotionLine>& lines, std::size_t n_points) {
  // Every non-skew pair spans a unique plane; group pairs by the canonical
  // plane form and count distinct lines per plane.
  using PlaneKey = std::array<Rat, 4>;  // (nx, ny, nz, c) with leading normal coord 1
  std::map<PlaneKey, PointGroup<PlaneKey>> planes;

  auto plane_through = [](const MotionLine& a, const MotionLine& b,
                          bool parallel) -> std::array<Rat, 4> {
    // Directions are (dx, dy, 1); anchors are (ax, ay, 0).
    Rat nx, ny, nz;
    if (!parallel) {
      nx = a.dy - b.dy;
      ny = b.dx - a.dx;
      nz = a.dx * b.dy - a.dy * b.dx;
    } else {
      // d x (anchor difference, z = 0)
      const Rat ux = b.ax - a.ax;
      const Rat uy = b.ay - a.ay;
      nx = -uy;
      ny = ux;
      nz = a.dx * uy - a.dy * ux;
    }
    Rat c = nx * a.ax + ny * a.ay;  // anchor z = 0
    const Rat lead = !nx.is_zero() ? nx : (!ny.is_zero() ? ny : nz);
    return {nx / lead, ny / lead, nz / lead, c / lead};
  };

  for (std::uint32_t i = 0; i < lines.size(); ++i)
    for (std::uint32_t j = i + 1; j < lines.size(); ++j) {
      const MotionLine& a = lines[i];
      const MotionLine& b = lines[j];
      const bool parallel = a.dx == b.dx && a.dy == b.dy;
      if (!parallel) {
        MotionIntersection x = intersect_motion_lines(a, b);
        if (x.kind != MotionIntersection::Kind::finite) continue;  // skew
      }
      PointGroup<PlaneKey>& g = planes[plane_through(a, b, parallel)];
      g.lines.push_back(i);
      g.lines.push_back(j);
      ++g.pairs;
    }

  CoplanarityAudit audit;
  audit.limit = n_points;
  audit.max_lines_in_plane = 0;
  for (auto& [key, group] : planes)
    audit.max_lines_in_plane = std::max(audit.max_lines_in_plane, settle_group(group));
  audit.ok = audit.max_lines_in_plane <= n_points;
  return audit;
}

void write_histogram_csv(std::ostream& out, const RichPointHistogram& h, std::size_t n_points,
                         BoundRegime regime, std::size_t k0) {
  const DyadicBuckets dyadic = dyadic_buckets(h, k0);
  out << "k,count_exact,count_at_least,dyadic_bucket,envelope_ratio\n";
  for (const EnvelopeRow& row : bound_diagnostics(h, n_points, regime)) {
    out << row.k << "," << row.count_exact << "," << row.count_at_least << ",";
    auto bucket = dyadic.buckets.find(row.k);
    if (bucket != dyadic.buckets.end()) out << bucket->second;
    out << "," << row.ratio << "\n";
  }
}

}  // namespace tricensus
