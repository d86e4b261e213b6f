#include "tricensus/motion_lift.hpp"

#include <stdexcept>

namespace tricensus {

Point apply(const RigidMotion& m, const Point& p) {
  struct Visitor {
    const Point& p;
    Point operator()(const Identity&) const { return p; }
    Point operator()(const Translation& t) const { return {p.x + t.vx, p.y + t.vy}; }
    Point operator()(const Rotation& r) const {
      // z -> c + omega * (z - c), omega = ((t^2-1) + 2ti) / (t^2+1)
      const Rat t2 = r.t * r.t;
      const Rat den = t2 + Rat(1);
      const Rat cos = (t2 - Rat(1)) / den;
      const Rat sin = (Rat(2) * r.t) / den;
      const Rat ux = p.x - r.center.x;
      const Rat uy = p.y - r.center.y;
      return {r.center.x + cos * ux - sin * uy, r.center.y + sin * ux + cos * uy};
    }
  };
  return std::visit(Visitor{p}, m);
}

std::string to_string(const RigidMotion& m) {
  struct Visitor {
    std::string operator()(const Identity&) const { return "identity"; }
    std::string operator()(const Translation& t) const {
      return "translation(" + t.vx.to_string() + ", " + t.vy.to_string() + ")";
    }
    std::string operator()(const Rotation& r) const {
      return "rotation(center=" + r.center.to_string() + ", t=" + r.t.to_string() + ")";
    }
  };
  return std::visit(Visitor{}, m);
}

MotionLine lift(const Point& p, const Point& q) {
  MotionLine line;
  line.source = p;
  line.target = q;
  const Rat half(1, 2);
  line.ax = (p.x + q.x) * half;
  line.ay = (p.y + q.y) * half;
  // (q - p) rotated by +90 degrees, halved: (u, v) -> (-v, u).
  line.dx = -(q.y - p.y) * half;
  line.dy = (q.x - p.x) * half;
  return line;
}

RigidMotion decode(const Vec3Rat& point) {
  return Rotation{Point{point.x, point.y}, point.z};
}

MotionIntersection intersect_motion_lines(const MotionLine& l1, const MotionLine& l2) {
  const Rat ex = l1.dx - l2.dx;
  const Rat ey = l1.dy - l2.dy;
  const Rat bx = l2.ax - l1.ax;
  const Rat by = l2.ay - l1.ay;

  if (ex.is_zero() && ey.is_zero()) {
    // Equal xy-slopes <=> equal displacements q - p.
    if (bx.is_zero() && by.is_zero())
      throw std::invalid_argument("intersect_motion_lines: identical lines");
    auto [vx, vy] = l1.displacement();
    if (vx.is_zero() && vy.is_zero()) return MotionIntersection::disjoint();  // two vertical lines
    MotionIntersection res;
    res.kind = MotionIntersection::Kind::shared_translation;
    res.shift = Translation{std::move(vx), std::move(vy)};
    return res;
  }

  // Solve t * (e_x, e_y) = (b_x, b_y); both components must agree.
  Rat t = ex.is_zero() ? by / ey : bx / ex;
  if (t * ex != bx || t * ey != by) return MotionIntersection::disjoint();
  MotionIntersection res;
  res.kind = MotionIntersection::Kind::finite;
  res.point = l1.at(t);
  return res;
}

std::vector<MotionLine> motion_lines(const PointSet& ps, bool include_identity_lines) {
  std::vector<MotionLine> lines;
  lines.reserve(ps.size() * ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = 0; j < ps.size(); ++j) {
      if (i == j && !include_identity_lines) continue;
      lines.push_back(lift(ps[i], ps[j]));
    }
  return lines;
}

}  // namespace tricensus
