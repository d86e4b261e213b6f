#pragma once

#include <string>
#include <variant>
#include <vector>

#include "tricensus/geometry.hpp"

namespace tricensus {

struct Vec3Rat {
  Rat x, y, z;

  friend bool operator==(const Vec3Rat& a, const Vec3Rat& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
  friend bool operator<(const Vec3Rat& a, const Vec3Rat& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
  }
  std::string to_string() const {
    return "(" + x.to_string() + ", " + y.to_string() + ", " + z.to_string() + ")";
  }
};

struct Identity {};
/// Translation by (vx, vy); the zero translation is represented as Identity.
struct Translation {
  Rat vx, vy;
};
/// Rotation about `center` with t = cot(theta/2); cos = (t^2-1)/(t^2+1),
/// sin = 2t/(t^2+1) keep every image rational. t = 0 is the half-turn; the
/// identity has no finite t and lives in its own variant.
struct Rotation {
  Point center;
  Rat t;
};
using RigidMotion = std::variant<Identity, Translation, Rotation>;

Point apply(const RigidMotion& m, const Point& p);
std::string to_string(const RigidMotion& m);

/// The set L_pq of orientation-preserving rigid motions taking p to q,
/// parameterised as the line {(ax + t*dx, ay + t*dy, t) : t rational} in R^3:
/// anchor (midpoint(p,q), 0), direction ((q-p) rotated by +90 deg, halved, 1).
/// The point at height t decodes to the rotation about (ax+t*dx, ay+t*dy)
/// with parameter t, which maps p to q exactly. For p = q the line is the
/// vertical through (p, 0): all rotations about p.
struct MotionLine {
  Point source, target;
  Rat ax, ay;  // anchor (z = 0)
  Rat dx, dy;  // xy-slope per unit z

  Vec3Rat at(const Rat& t) const { return {ax + t * dx, ay + t * dy, t}; }
  bool vertical() const { return dx.is_zero() && dy.is_zero(); }
  /// Displacement q - p; the translation appended to this line at infinity.
  std::pair<Rat, Rat> displacement() const { return {target.x - source.x, target.y - source.y}; }

  friend bool operator==(const MotionLine& a, const MotionLine& b) {
    return a.source == b.source && a.target == b.target;
  }
};

MotionLine lift(const Point& p, const Point& q);

/// Rotation encoded by a point of R^3 (Guth-Katz coordinates): center (x, y),
/// t = z.
RigidMotion decode(const Vec3Rat& point);

struct MotionIntersection {
  enum class Kind { finite, shared_translation, disjoint };
  Kind kind = Kind::disjoint;
  Vec3Rat point;      // kind == finite
  Translation shift;  // kind == shared_translation

  static MotionIntersection disjoint() { return {}; }
};

/// Exact intersection of two motion lines. Equal directions with a common
/// nonzero displacement report the shared translation (the point at infinity
/// of both lines); identical lines (same (p,q), impossible for distinct
/// pairs) throw.
MotionIntersection intersect_motion_lines(const MotionLine& l1, const MotionLine& l2);

/// The N^2 lines {L_pq} of a point set, in (p, q) index order. The N vertical
/// lines L_pp are included unless include_identity_lines is false.
std::vector<MotionLine> motion_lines(const PointSet& ps, bool include_identity_lines = true);

}  // namespace tricensus
