#include "tricensus/census.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <tuple>

#include "tricensus/parallel.hpp"

namespace tricensus {

void for_each_triangle(const PointSet& ps, bool include_degenerate,
                       const std::function<void(std::uint32_t, std::uint32_t, std::uint32_t)>& fn) {
  const std::size_t n = ps.size();
  if (n < 3) throw std::invalid_argument("for_each_triangle: need at least 3 points");
  for (std::uint32_t i = 0; i + 2 < n; ++i)
    for (std::uint32_t j = i + 1; j + 1 < n; ++j)
      for (std::uint32_t k = j + 1; k < n; ++k) {
        if (!include_degenerate && collinear(ps[i], ps[j], ps[k])) continue;
        fn(i, j, k);
      }
}

std::vector<std::array<std::uint32_t, 3>> enumerate_triangles(const PointSet& ps,
                                                              bool include_degenerate) {
  std::vector<std::array<std::uint32_t, 3>> out;
  for_each_triangle(ps, include_degenerate,
                    [&](std::uint32_t i, std::uint32_t j, std::uint32_t k) {
                      out.push_back({i, j, k});
                    });
  return out;
}

namespace {

// Exact geometry interned for the O(N^3) loop: squared pair distances are
// replaced by their rank in the sorted list of distinct values (ranks are
// order-isomorphic to the values, so sorted/cyclic-min key comparisons agree
// with the Rat originals), and orientation signs use integer-scaled
// coordinates when they fit 64 bits.
class InternedGeometry {
 public:
  explicit InternedGeometry(const PointSet& ps) : ps_(&ps), n_(ps.size()) {
    build_ranks();
    build_scaled();
  }

  std::uint32_t rank(std::size_t i, std::size_t j) const { return rank_[i * n_ + j]; }

  int orient(std::size_t i, std::size_t j, std::size_t k) const {
    if (fast_) {
      using I = __int128;
      const I ax = sx_[i], ay = sy_[i];
      const I v = (I(sx_[j]) - ax) * (I(sy_[k]) - ay) - (I(sy_[j]) - ay) * (I(sx_[k]) - ax);
      return v > 0 ? 1 : v < 0 ? -1 : 0;
    }
    return orientation((*ps_)[i], (*ps_)[j], (*ps_)[k]);
  }

 private:
  void build_ranks() {
    struct Entry {
      Rat d;
      std::uint32_t i, j;
    };
    std::vector<Entry> entries;
    entries.reserve(n_ * (n_ - 1) / 2);
    for (std::uint32_t i = 0; i < n_; ++i)
      for (std::uint32_t j = i + 1; j < n_; ++j)
        entries.push_back({sq_dist((*ps_)[i], (*ps_)[j]), i, j});
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.d < b.d; });
    rank_.assign(n_ * n_, 0);
    std::uint32_t r = 0;
    for (std::size_t t = 0; t < entries.size(); ++t) {
      if (t > 0 && entries[t - 1].d != entries[t].d) ++r;
      rank_[entries[t].i * n_ + entries[t].j] = r;
      rank_[entries[t].j * n_ + entries[t].i] = r;
    }
  }

  void build_scaled() {
    mpz_class lcm_den = 1;
    for (const Point& p : *ps_) {
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), p.x.den().get_mpz_t());
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), p.y.den().get_mpz_t());
    }
    sx_.reserve(n_);
    sy_.reserve(n_);
    fast_ = true;
    const mpz_class limit = mpz_class(1) << 61;
    auto scaled = [&](const Rat& v) -> long {
      mpz_class s = v.num() * (lcm_den / v.den());
      if (abs(s) >= limit) fast_ = false;
      return fast_ ? s.get_si() : 0;
    };
    for (const Point& p : *ps_) {
      sx_.push_back(scaled(p.x));
      sy_.push_back(scaled(p.y));
      if (!fast_) break;
    }
  }

  const PointSet* ps_;
  std::size_t n_;
  std::vector<std::uint32_t> rank_;
  bool fast_ = false;
  std::vector<long> sx_, sy_;
};

struct CongKey {
  std::uint32_t s0, s1, s2;
  std::uint8_t degenerate;

  friend bool operator<(const CongKey& a, const CongKey& b) {
    return std::tie(a.degenerate, a.s0, a.s1, a.s2) < std::tie(b.degenerate, b.s0, b.s1, b.s2);
  }
  friend bool operator==(const CongKey& a, const CongKey& b) {
    return std::tie(a.degenerate, a.s0, a.s1, a.s2) == std::tie(b.degenerate, b.s0, b.s1, b.s2);
  }
};

struct SimKey {
  GaussRat shape;
  std::uint8_t degenerate;

  friend bool operator<(const SimKey& a, const SimKey& b) {
    if (a.degenerate != b.degenerate) return a.degenerate < b.degenerate;
    return a.shape < b.shape;
  }
  friend bool operator==(const SimKey& a, const SimKey& b) {
    return a.degenerate == b.degenerate && a.shape == b.shape;
  }
};

CongKey sorted_key(std::uint32_t a, std::uint32_t b, std::uint32_t c, bool degenerate) {
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
  return {a, b, c, degenerate ? std::uint8_t{1} : std::uint8_t{0}};
}

CongKey min_cyclic(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  // Lexicographic minimum of (a,b,c), (b,c,a), (c,a,b).
  CongKey best{a, b, c, 0};
  CongKey r1{b, c, a, 0};
  CongKey r2{c, a, b, 0};
  if (r1 < best) best = r1;
  if (r2 < best) best = r2;
  return best;
}

// Canonical shape representative for the similarity census; vertices must be
// pairwise distinct and the caller has already classified degeneracy.
GaussRat canonical_shape(const Point& a, const Point& b, const Point& c, bool reflections) {
  const GaussRat r = shape_parameter(a, b, c);
  std::vector<GaussRat> orbit = anharmonic_orbit(r);
  GaussRat best = orbit.front();
  if (reflections) {
    for (const GaussRat& z : orbit) {
      GaussRat zc = z.conj();
      if (zc < best) best = zc;
    }
  }
  return best;
}

template <typename Key, typename MakeKey>
std::vector<std::uint64_t> tally(const PointSet& ps, const InternedGeometry& geom,
                                 const CensusOptions& opts, std::uint64_t& n_collinear,
                                 std::uint64_t& n_kept, MakeKey&& make_key) {
  const std::size_t n = ps.size();
  const unsigned workers = std::max(1u, opts.threads);
  std::vector<std::vector<Key>> local(workers);
  std::vector<std::uint64_t> local_collinear(workers, 0);
  IndexFeed feed(n);
  run_workers(workers, [&](unsigned w) {
    auto& keys = local[w];
    for (std::size_t i = feed.next(); i < n; i = feed.next()) {
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
          const int orient = geom.orient(i, j, k);
          if (orient == 0) {
            ++local_collinear[w];
            if (!opts.include_degenerate) continue;
          }
          keys.push_back(make_key(i, j, k, orient));
        }
    }
  });

  std::size_t total = 0;
  for (const auto& v : local) total += v.size();
  std::vector<Key> keys;
  keys.reserve(total);
  for (auto& v : local) {
    keys.insert(keys.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
    v.clear();
    v.shrink_to_fit();
  }
  std::sort(keys.begin(), keys.end());

  n_collinear = 0;
  for (std::uint64_t c : local_collinear) n_collinear += c;
  n_kept = keys.size();

  std::vector<std::uint64_t> mult;
  std::size_t run = 0;
  for (std::size_t t = 0; t < keys.size(); ++t) {
    ++run;
    if (t + 1 == keys.size() || !(keys[t] == keys[t + 1])) {
      mult.push_back(run);
      run = 0;
    }
  }
  std::sort(mult.begin(), mult.end(), std::greater<>());
  return mult;
}

}  // namespace

ClassCensus census(const PointSet& ps, KeyKind kind, const CensusOptions& opts) {
  const std::size_t n = ps.size();
  if (n < 3) throw std::invalid_argument("census: need at least 3 points");

  ClassCensus out;
  out.kind = kind;
  out.include_degenerate = opts.include_degenerate;
  out.n_points = n;
  out.n_triples = static_cast<std::uint64_t>(n) * (n - 1) * (n - 2) / 6;

  const HypothesisReport hyp = validate_hypothesis(ps);
  out.hypothesis_ok = hyp.ok;
  out.max_on_line = hyp.max_on_line;
  if (opts.strict_hypothesis && !hyp.ok)
    throw HypothesisViolation("census: " + std::to_string(hyp.max_on_line) + " collinear points exceed N/2 = " +
                              std::to_string(n) + "/2 (witness through " + hyp.witness->a.to_string() +
                              " and " + hyp.witness->b.to_string() + ")");

  const InternedGeometry geom(ps);

  switch (kind) {
    case KeyKind::congruence_full:
      out.multiplicities = tally<CongKey>(
          ps, geom, opts, out.n_collinear, out.n_triangles,
          [&](std::size_t i, std::size_t j, std::size_t k, int orient) {
            return sorted_key(geom.rank(i, j), geom.rank(i, k), geom.rank(j, k), orient == 0);
          });
      break;
    case KeyKind::congruence_direct:
      out.multiplicities = tally<CongKey>(
          ps, geom, opts, out.n_collinear, out.n_triangles,
          [&](std::size_t i, std::size_t j, std::size_t k, int orient) {
            if (orient == 0)
              return sorted_key(geom.rank(i, j), geom.rank(i, k), geom.rank(j, k), true);
            if (orient > 0)
              return min_cyclic(geom.rank(i, j), geom.rank(j, k), geom.rank(k, i));
            return min_cyclic(geom.rank(i, k), geom.rank(k, j), geom.rank(j, i));
          });
      break;
    case KeyKind::similarity_direct:
    case KeyKind::similarity_full: {
      const bool reflections = kind == KeyKind::similarity_full;
      out.multiplicities = tally<SimKey>(
          ps, geom, opts, out.n_collinear, out.n_triangles,
          [&](std::size_t i, std::size_t j, std::size_t k, int orient) {
            return SimKey{canonical_shape(ps[i], ps[j], ps[k], reflections),
                          orient == 0 ? std::uint8_t{1} : std::uint8_t{0}};
          });
      break;
    }
  }
  return out;
}

PairCounts pair_counts(const ClassCensus& c) {
  unsigned __int128 q = 0, sq = 0;
  for (std::uint64_t m : c.multiplicities) {
    q += static_cast<unsigned __int128>(m) * (m - 1) / 2;
    sq += static_cast<unsigned __int128>(m) * m;
  }
  if (q > UINT64_MAX || sq > UINT64_MAX) throw std::overflow_error("pair_counts: counter overflow");
  return {static_cast<std::uint64_t>(q), static_cast<std::uint64_t>(sq)};
}

Rat class_lower_bound(const ClassCensus& c) {
  if (c.n_triangles == 0) throw std::invalid_argument("class_lower_bound: empty census");
  const PairCounts pc = pair_counts(c);
  Rat t(mpz_class(static_cast<unsigned long>(c.n_triangles)));
  return t * t / Rat(mpz_class(static_cast<unsigned long>(pc.sum_m_sq)));
}

}  // namespace tricensus
