#include "tricensus/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tricensus {

namespace {

std::uint64_t choose3(std::uint64_t k) { return k < 3 ? 0 : k * (k - 1) * (k - 2) / 6; }

// Unique direct isometry sending p->q and p2->q2, for |p p2| = |q q2| != 0.
// In complex form z -> a z + b with a = (q - q2)/(p - p2) (|a| = 1 exactly).
RigidMotion direct_motion_from_pairs(const Point& p, const Point& q, const Point& p2,
                                     const Point& q2) {
  const GaussRat a = (q.as_complex() - q2.as_complex()) / (p.as_complex() - p2.as_complex());
  const GaussRat b = q.as_complex() - a * p.as_complex();
  const GaussRat one(1, 0);
  if (a == one) {
    if (b.is_zero()) return Identity{};
    return Translation{b.re, b.im};
  }
  // Fixed point c = b / (1 - a); half-angle parameter t = cot(theta/2)
  //   = sin / (1 - cos) = im(a) / (1 - re(a)).
  const GaussRat center = b / (one - a);
  return Rotation{Point{center.re, center.im}, a.im / (Rat(1) - a.re)};
}

struct MotionOrder {
  bool operator()(const RigidMotion& m1, const RigidMotion& m2) const {
    const auto tag = [](const RigidMotion& m) { return m.index(); };
    if (tag(m1) != tag(m2)) return tag(m1) < tag(m2);
    if (std::holds_alternative<Identity>(m1)) return false;
    if (const auto* t1 = std::get_if<Translation>(&m1)) {
      const auto& t2 = std::get<Translation>(m2);
      if (t1->vx != t2.vx) return t1->vx < t2.vx;
      return t1->vy < t2.vy;
    }
    const auto& r1 = std::get<Rotation>(m1);
    const auto& r2 = std::get<Rotation>(m2);
    if (!(r1.center == r2.center)) return r1.center < r2.center;
    return r1.t < r2.t;
  }
};

std::uint32_t count_mapped_pairs(const RigidMotion& m, const PointSet& ps) {
  std::uint32_t n = 0;
  for (const Point& p : ps)
    if (ps.index_of(apply(m, p))) ++n;
  return n;
}

std::uint32_t count_mapped_pairs(const Similitude& s, const PointSet& ps) {
  std::uint32_t n = 0;
  for (const Point& p : ps) {
    const GaussRat image = apply_sim(s, p.as_complex());
    if (ps.index_of(Point{image.re, image.im})) ++n;
  }
  return n;
}

std::array<Rat, 3> squared_sides(const Triangle& t) {
  return {sq_dist(t[0], t[1]), sq_dist(t[1], t[2]), sq_dist(t[2], t[0])};
}

constexpr std::array<std::array<int, 3>, 6> kPerms = {
    {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

int perm_sign(const std::array<int, 3>& p) {
  int inversions = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

std::uint64_t MotionTable::triple_sum_non_identity() const {
  std::uint64_t total = 0;
  for (const auto& r : translations) total += choose3(r.n);
  for (const auto& r : rotations) total += choose3(r.n);
  return total;
}

MotionTable enumerate_motions(const PointSet& ps) {
  const std::size_t n = ps.size();
  if (n < 2) throw std::invalid_argument("enumerate_motions: need at least 2 points");

  // Segment pairs with equal squared length, degenerate segments included.
  std::map<RigidMotion, std::uint32_t, MotionOrder> found;
  const Rat half(1, 2);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t p2 = 0; p2 < n; ++p2) {
      const Rat len = sq_dist(ps[p], ps[p2]);
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t q2 = 0; q2 < n; ++q2) {
          if (sq_dist(ps[q], ps[q2]) != len) continue;
          if (p != p2) {
            found.emplace(direct_motion_from_pairs(ps[p], ps[q], ps[p2], ps[q2]), 0);
          } else if (q == q2) {
            // Single map p -> q: its translation and the half-turn about the
            // midpoint (the t = 0 point of L_pq).
            if (p == q)
              found.emplace(Identity{}, 0);
            else
              found.emplace(Translation{ps[q].x - ps[p].x, ps[q].y - ps[p].y}, 0);
            found.emplace(
                Rotation{Point{(ps[p].x + ps[q].x) * half, (ps[p].y + ps[q].y) * half}, Rat(0)},
                0);
          }
        }
    }

  MotionTable table;
  for (auto& [motion, _] : found) {
    MotionRecord rec{motion, count_mapped_pairs(motion, ps)};
    if (std::holds_alternative<Identity>(motion))
      table.identity = rec;
    else if (std::holds_alternative<Translation>(motion))
      table.translations.push_back(std::move(rec));
    else
      table.rotations.push_back(std::move(rec));
  }
  return table;
}

std::uint64_t SimilitudeTable::triple_sum() const {
  std::uint64_t total = 0;
  for (const auto& r : entries) total += choose3(r.n);
  return total;
}

const SimilitudeRecord* SimilitudeTable::find(const Similitude& s) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), s,
                             [](const SimilitudeRecord& r, const Similitude& v) { return r.map < v; });
  if (it == entries.end() || !(it->map == s)) return nullptr;
  return &*it;
}

SimilitudeTable enumerate_similitudes(const PointSet& ps) {
  const std::size_t n = ps.size();
  if (n < 2) throw std::invalid_argument("enumerate_similitudes: need at least 2 points");

  std::map<Similitude, std::uint32_t> found;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t p2 = 0; p2 < n; ++p2) {
      if (p == p2) continue;
      const GaussRat zp = ps[p].as_complex(), zp2 = ps[p2].as_complex();
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t q2 = 0; q2 < n; ++q2) {
          const GaussRat zq = ps[q].as_complex(), zq2 = ps[q2].as_complex();
          GaussRat a = (zq - zq2) / (zp - zp2);
          if (a.is_zero()) continue;  // q = q2: not a group element
          GaussRat b = zq - a * zp;
          found.emplace(Similitude{std::move(a), std::move(b)}, 0);
        }
    }

  SimilitudeTable table;
  table.entries.reserve(found.size());
  for (auto& [map, _] : found)
    table.entries.push_back({map, count_mapped_pairs(map, ps)});
  return table;
}

bool congruent_pair_test(const Triangle& t1, const Triangle& t2, bool allow_reflections) {
  const std::array<Rat, 3> s1 = squared_sides(t1);
  const int o1 = orientation(t1[0], t1[1], t1[2]);
  const int o2 = orientation(t2[0], t2[1], t2[2]);
  for (const auto& perm : kPerms) {
    const Triangle u = {t2[perm[0]], t2[perm[1]], t2[perm[2]]};
    if (squared_sides(u) != s1) continue;
    if (allow_reflections) return true;
    if (o1 == perm_sign(perm) * o2) return true;
  }
  return false;
}

bool similar_pair_test(const Triangle& t1, const Triangle& t2, bool allow_reflections) {
  const std::array<Rat, 3> s1 = squared_sides(t1);
  const int o1 = orientation(t1[0], t1[1], t1[2]);
  const int o2 = orientation(t2[0], t2[1], t2[2]);
  for (const auto& perm : kPerms) {
    const Triangle u = {t2[perm[0]], t2[perm[1]], t2[perm[2]]};
    const std::array<Rat, 3> s2 = squared_sides(u);
    // Proportionality of squared sides, cross-multiplied (exact).
    if (s1[0] * s2[1] != s1[1] * s2[0] || s1[1] * s2[2] != s1[2] * s2[1]) continue;
    if (allow_reflections) return true;
    if (o1 == perm_sign(perm) * o2) return true;
  }
  return false;
}

EquivalenceCheck census_equivalence_check(
    const PointSet& ps, KeyKind kind, std::size_t cap,
    const std::function<std::string(const Triangle&)>& key_label) {
  if (ps.size() > cap)
    throw std::invalid_argument("census_equivalence_check: point set exceeds cap " +
                                std::to_string(cap));
  const auto triples = enumerate_triangles(ps, /*include_degenerate=*/false);
  std::vector<Triangle> triangles;
  triangles.reserve(triples.size());
  for (const auto& t : triples) triangles.push_back({ps[t[0]], ps[t[1]], ps[t[2]]});

  auto label = [&](const Triangle& t) -> std::string {
    if (key_label) return key_label(t);
    switch (kind) {
      case KeyKind::congruence_full: return congruence_key(t[0], t[1], t[2]).to_string();
      case KeyKind::congruence_direct: return direct_congruence_key(t[0], t[1], t[2]).to_string();
      case KeyKind::similarity_direct: return similarity_key(t[0], t[1], t[2], false).to_string();
      case KeyKind::similarity_full: return similarity_key(t[0], t[1], t[2], true).to_string();
    }
    throw std::logic_error("unknown KeyKind");
  };
  auto oracle_equivalent = [&](const Triangle& a, const Triangle& b) {
    switch (kind) {
      case KeyKind::congruence_full: return congruent_pair_test(a, b, true);
      case KeyKind::congruence_direct: return congruent_pair_test(a, b, false);
      case KeyKind::similarity_direct: return similar_pair_test(a, b, false);
      case KeyKind::similarity_full: return similar_pair_test(a, b, true);
    }
    throw std::logic_error("unknown KeyKind");
  };

  std::vector<std::string> labels;
  labels.reserve(triangles.size());
  for (const Triangle& t : triangles) labels.push_back(label(t));

  EquivalenceCheck result;
  result.n_triangles = triangles.size();
  for (std::size_t i = 0; i < triangles.size(); ++i)
    for (std::size_t j = i + 1; j < triangles.size(); ++j) {
      const bool same_key = labels[i] == labels[j];
      if (same_key != oracle_equivalent(triangles[i], triangles[j])) {
        result.ok = false;
        result.counterexample = {triples[i], triples[j]};
        return result;
      }
    }
  result.ok = true;
  std::vector<std::string> distinct = labels;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  result.n_classes = distinct.size();
  return result;
}

}  // namespace tricensus
