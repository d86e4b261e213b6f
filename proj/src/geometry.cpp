#include "tricensus/geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace tricensus {

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("PointSet: empty");
  order_.resize(points_.size());
  std::iota(order_.begin(), order_.end(), std::size_t{0});
  std::sort(order_.begin(), order_.end(),
            [&](std::size_t a, std::size_t b) { return points_[a] < points_[b]; });
  for (std::size_t i = 1; i < order_.size(); ++i) {
    if (points_[order_[i - 1]] == points_[order_[i]])
      throw std::invalid_argument("PointSet: duplicate point " + points_[order_[i]].to_string());
  }
}

std::optional<std::size_t> PointSet::index_of(const Point& p) const {
  auto it = std::lower_bound(order_.begin(), order_.end(), p, [&](std::size_t i, const Point& q) {
    return points_[i] < q;
  });
  if (it == order_.end() || !(points_[*it] == p)) return std::nullopt;
  return *it;
}

namespace {

// Canonical direction of the segment anchor->other: vertical lines map to
// nullopt, everything else to the exact slope dy/dx.
std::optional<Rat> slope_key(const Point& anchor, const Point& other) {
  Rat dx = other.x - anchor.x;
  if (dx.is_zero()) return std::nullopt;
  return (other.y - anchor.y) / dx;
}

}  // namespace

std::size_t max_collinear(const PointSet& ps) {
  const std::size_t n = ps.size();
  if (n < 2) throw std::invalid_argument("max_collinear: need at least 2 points");
  std::size_t best = 2;
  for (std::size_t i = 0; i < n; ++i) {
    std::map<std::optional<Rat>, std::size_t> counts;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      best = std::max(best, ++counts[slope_key(ps[i], ps[j])] + 1);
    }
  }
  return best;
}

HypothesisReport validate_hypothesis(const PointSet& ps) {
  const std::size_t n = ps.size();
  if (n < 3) throw std::invalid_argument("validate_hypothesis: need at least 3 points");

  HypothesisReport report;
  report.n = n;
  std::size_t best = 1;
  std::pair<std::size_t, std::size_t> best_pair{0, 0};
  for (std::size_t i = 0; i < n; ++i) {
    std::map<std::optional<Rat>, std::pair<std::size_t, std::size_t>> groups;  // slope -> (count, first j)
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      auto& g = groups[slope_key(ps[i], ps[j])];
      if (g.first == 0) g.second = j;
      ++g.first;
    }
    for (const auto& [slope, g] : groups) {
      if (g.first + 1 > best) {
        best = g.first + 1;
        best_pair = {i, g.second};
      }
    }
  }
  report.max_on_line = best;
  report.ok = 2 * best <= n;
  if (!report.ok)
    report.witness = LineWitness{ps[best_pair.first], ps[best_pair.second], best};
  return report;
}

}  // namespace tricensus
