#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tricensus/gauss.hpp"
#include "tricensus/rational.hpp"

namespace tricensus {

struct Point {
  Rat x;
  Rat y;

  Point() = default;
  Point(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {}
  Point(long px, long py) : x(px), y(py) {}

  /// (x, y) viewed as the complex number x + iy.
  GaussRat as_complex() const { return {x, y}; }

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  friend bool operator<(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }

  std::string to_string() const { return "(" + x.to_string() + ", " + y.to_string() + ")"; }
  std::size_t hash() const {
    std::size_t h = x.hash();
    h ^= y.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

/// Squared Euclidean distance, exact.
inline Rat sq_dist(const Point& a, const Point& b) {
  Rat dx = a.x - b.x;
  Rat dy = a.y - b.y;
  return dx * dx + dy * dy;
}

/// Sign of the cross product (b-a) x (c-a): +1 counterclockwise, -1
/// clockwise, 0 collinear.
inline int orientation(const Point& a, const Point& b, const Point& c) {
  Rat cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return cross.sign();
}

inline bool collinear(const Point& a, const Point& b, const Point& c) {
  return orientation(a, b, c) == 0;
}

/// Ordered point set with stable indices. Construction rejects duplicates;
/// all downstream line counts presume distinct points.
class PointSet {
 public:
  explicit PointSet(std::vector<Point> points);

  std::size_t size() const { return points_.size(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  /// Index of a point, if present.
  std::optional<std::size_t> index_of(const Point& p) const;

 private:
  std::vector<Point> points_;
  std::vector<std::size_t> order_;  // indices sorted by coordinate, for lookups
};

/// Maximum number of points of P on one straight line. Exact; O(N^2 log N).
std::size_t max_collinear(const PointSet& ps);

struct LineWitness {
  Point a;
  Point b;          // two points spanning the witness line
  std::size_t count = 0;
};

struct HypothesisReport {
  bool ok = false;
  std::size_t n = 0;
  std::size_t max_on_line = 0;
  std::optional<LineWitness> witness;  // set when violated
};

/// Checks the "no line carries more than N/2 points" hypothesis.
/// A violation is a value, not a failure.
HypothesisReport validate_hypothesis(const PointSet& ps);

}  // namespace tricensus

template <>
struct std::hash<tricensus::Point> {
  std::size_t operator()(const tricensus::Point& p) const { return p.hash(); }
};
