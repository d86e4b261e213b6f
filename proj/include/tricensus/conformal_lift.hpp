#pragma once

#include <string>
#include <vector>

#include "tricensus/geometry.hpp"

namespace tricensus {

/// Linear conformal map z -> a*z + b. A valid group element has a != 0;
/// a = 0 records appear only as flagged degenerate intersection artifacts.
struct Similitude {
  GaussRat a, b;

  friend bool operator==(const Similitude& s, const Similitude& t) { return s.a == t.a && s.b == t.b; }
  friend bool operator<(const Similitude& s, const Similitude& t) {
    if (!(s.a == t.a)) return s.a < t.a;
    return s.b < t.b;
  }
  std::string to_string() const { return "(a=" + a.to_string() + ", b=" + b.to_string() + ")"; }
};

/// Throws std::domain_error when s.a = 0 (not a group element).
GaussRat apply_sim(const Similitude& s, const GaussRat& z);

/// The line L_pq = {(a,b) in C^2 : a*p + b = q} of linear conformal maps
/// taking p to q. Two lines are equal iff their (p, q) pairs are equal.
struct ConformalLine {
  GaussRat source, target;

  bool contains(const Similitude& s) const { return s.a * source + s.b == target; }
  friend bool operator==(const ConformalLine& a, const ConformalLine& b) {
    return a.source == b.source && a.target == b.target;
  }
};

ConformalLine lift_c(GaussRat p, GaussRat q);

struct ConformalIntersection {
  enum class Kind { similitude, degenerate_a_zero, parallel };
  Kind kind = Kind::parallel;
  /// For `similitude` the unique common map; for `degenerate_a_zero` the
  /// point (0, q) of C^2, which is not a group element.
  Similitude value;
};

/// Unique solution when the sources differ: a = (q1-q2)/(p1-p2), b = q1-a*p1;
/// a = 0 (equal targets) is flagged degenerate. Equal sources never share a
/// map (a*p + b cannot send p to two targets). Identical lines throw.
ConformalIntersection intersect_c(const ConformalLine& l1, const ConformalLine& l2);

/// The N^2 lines {L_pq}, points read as complex numbers x + iy, in (p, q)
/// index order. With conjugate_sources the sources are conjugated before
/// lifting, which realizes the reflection (conjugate-similarity) variant.
std::vector<ConformalLine> conformal_lines(const PointSet& ps, bool conjugate_sources = false);

}  // namespace tricensus
