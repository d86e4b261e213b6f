#include "tricensus/generators.hpp"

#include <set>
#include <stdexcept>

namespace tricensus {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("next_below: zero bound");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

PointSet grid(std::size_t m) {
  if (m < 2) throw std::invalid_argument("grid: side must be >= 2");
  std::vector<Point> pts;
  pts.reserve(m * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      pts.emplace_back(static_cast<long>(x), static_cast<long>(y));
  return PointSet(std::move(pts));
}

PointSet random_rational(std::size_t n, std::uint64_t seed, long half_width,
                         unsigned denom_log2) {
  if (n < 3) throw std::invalid_argument("random_rational: need n >= 3");
  if (half_width < 1) throw std::invalid_argument("random_rational: half_width must be >= 1");
  const long denom = 1L << denom_log2;
  const std::uint64_t per_axis = static_cast<std::uint64_t>(2 * half_width) * denom + 1;
  if (per_axis * per_axis < n)
    throw std::invalid_argument("random_rational: lattice smaller than requested point count");

  SplitMix64 rng(seed);
  std::set<std::pair<long, long>> seen;
  std::vector<Point> pts;
  pts.reserve(n);
  std::size_t rejects = 0;
  const std::size_t reject_budget = 1000 + 64 * n;
  while (pts.size() < n) {
    const long nx = static_cast<long>(rng.next_below(per_axis)) - half_width * denom;
    const long ny = static_cast<long>(rng.next_below(per_axis)) - half_width * denom;
    if (!seen.insert({nx, ny}).second) {
      if (++rejects > reject_budget)
        throw std::runtime_error("random_rational: collision retry budget exceeded");
      continue;
    }
    pts.emplace_back(Rat(nx, denom), Rat(ny, denom));
  }
  return PointSet(std::move(pts));
}

PointSet half_line_config(std::size_t n) {
  if (n < 6 || n % 2 != 0)
    throw std::invalid_argument("half_line_config: n must be even and >= 6");
  std::vector<Point> pts;
  pts.reserve(n);
  const long h = static_cast<long>(n / 2);
  for (long i = 0; i < h; ++i) pts.emplace_back(i, 0L);
  // Points on a parabola: no line meets it in more than 2 points, and any
  // non-axis line picks up at most one axis point, so max_collinear stays n/2.
  for (long i = 0; i < h; ++i) pts.emplace_back(i, 1 + i * i);
  return PointSet(std::move(pts));
}

Point reflect(const RatLine& line, const Point& p) {
  if (line.a.is_zero() && line.b.is_zero())
    throw std::invalid_argument("reflect: degenerate line (a = b = 0)");
  const Rat d = (line.a * p.x + line.b * p.y + line.c) / (line.a * line.a + line.b * line.b);
  const Rat two(2);
  return {p.x - two * d * line.a, p.y - two * d * line.b};
}

RatLine default_mirror_line(const PointSet& ps) {
  Rat max_x = ps[0].x;
  for (const Point& p : ps)
    if (p.x > max_x) max_x = p.x;
  // x = max_x + 1/3, i.e. x - (max_x + 1/3) = 0.
  return RatLine{Rat(1), Rat(0), -(max_x + Rat(1, 3))};
}

PointSet mirror(const PointSet& ps, const RatLine& line) {
  std::vector<Point> pts;
  pts.reserve(ps.size());
  for (const Point& p : ps) {
    Point image = reflect(line, p);
    if (ps.index_of(image))
      throw std::runtime_error("mirror: image not disjoint from P, shared point " +
                               image.to_string());
    pts.push_back(std::move(image));
  }
  return PointSet(std::move(pts));
}

PointSet mirror(const PointSet& ps) { return mirror(ps, default_mirror_line(ps)); }

PointSet make_point_set(const GenSpec& spec) {
  switch (spec.kind) {
    case GenSpec::Kind::grid:
      return grid(spec.side);
    case GenSpec::Kind::random:
      return random_rational(spec.count, spec.seed, spec.half_width, spec.denom_log2);
    case GenSpec::Kind::half_line:
      return half_line_config(spec.count);
    case GenSpec::Kind::mirror_of:
      if (!spec.base) throw std::invalid_argument("make_point_set: mirror_of needs a base set");
      return spec.mirror_line ? mirror(*spec.base, *spec.mirror_line) : mirror(*spec.base);
  }
  throw std::logic_error("make_point_set: unknown kind");
}

}  // namespace tricensus
