#include "tricensus/keys.hpp"

#include <algorithm>
#include <stdexcept>

namespace tricensus {

std::string_view to_string(KeyKind kind) {
  switch (kind) {
    case KeyKind::congruence_full: return "congruence-full";
    case KeyKind::congruence_direct: return "congruence-direct";
    case KeyKind::similarity_direct: return "similarity-direct";
    case KeyKind::similarity_full: return "similarity-full";
  }
  throw std::logic_error("unknown KeyKind");
}

KeyKind key_kind_from_string(std::string_view name) {
  for (KeyKind k : all_key_kinds())
    if (to_string(k) == name) return k;
  throw std::invalid_argument("unknown key kind: " + std::string(name));
}

namespace {

void require_distinct(const Point& a, const Point& b, const Point& c) {
  if (a == b || a == c || b == c)
    throw std::invalid_argument("triangle key: duplicate vertices");
}

std::array<Rat, 3> min_cyclic_rotation(const std::array<Rat, 3>& s) {
  std::array<Rat, 3> best = s;
  for (int r = 1; r < 3; ++r) {
    std::array<Rat, 3> rot = {s[r % 3], s[(r + 1) % 3], s[(r + 2) % 3]};
    if (rot < best) best = rot;
  }
  return best;
}

}  // namespace

std::string CongruenceKey::to_string() const {
  return "(" + sq_sides[0].to_string() + "," + sq_sides[1].to_string() + "," +
         sq_sides[2].to_string() + ")";
}

std::string DirectCongruenceKey::to_string() const {
  std::string s = "(" + sq_sides[0].to_string() + "," + sq_sides[1].to_string() + "," +
                  sq_sides[2].to_string() + ")";
  if (degenerate) s += "*";
  return s;
}

std::string SimilarityKey::to_string() const {
  std::string s = shape.to_string();
  if (reflections) s += "~";
  if (degenerate) s += "*";
  return s;
}

CongruenceKey congruence_key(const Point& a, const Point& b, const Point& c) {
  require_distinct(a, b, c);
  std::array<Rat, 3> s = {sq_dist(a, b), sq_dist(a, c), sq_dist(b, c)};
  std::sort(s.begin(), s.end());
  return CongruenceKey{std::move(s)};
}

DirectCongruenceKey direct_congruence_key(const Point& a, const Point& b, const Point& c,
                                          bool allow_degenerate) {
  require_distinct(a, b, c);
  const int orient = orientation(a, b, c);
  if (orient == 0) {
    if (!allow_degenerate)
      throw std::invalid_argument("direct_congruence_key: collinear vertices");
    std::array<Rat, 3> s = {sq_dist(a, b), sq_dist(a, c), sq_dist(b, c)};
    std::sort(s.begin(), s.end());
    return DirectCongruenceKey{std::move(s), true};
  }
  // Squared sides read along the boundary in counterclockwise vertex order.
  std::array<Rat, 3> s;
  if (orient > 0)
    s = {sq_dist(a, b), sq_dist(b, c), sq_dist(c, a)};
  else
    s = {sq_dist(a, c), sq_dist(c, b), sq_dist(b, a)};
  return DirectCongruenceKey{min_cyclic_rotation(s), false};
}

GaussRat shape_parameter(const Point& a, const Point& b, const Point& c) {
  require_distinct(a, b, c);
  return (c.as_complex() - a.as_complex()) / (b.as_complex() - a.as_complex());
}

std::vector<GaussRat> anharmonic_orbit(const GaussRat& r) {
  const GaussRat one(1, 0);
  if (r.is_zero() || r == one)
    throw std::domain_error("anharmonic_orbit: degenerate shape parameter");
  const GaussRat s = one - r;
  std::vector<GaussRat> orbit = {r, inverse(r), s, inverse(s), -(r / s), -(s / r)};
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return orbit;
}

SimilarityKey similarity_key(const Point& a, const Point& b, const Point& c, bool reflections,
                             bool allow_degenerate) {
  const GaussRat r = shape_parameter(a, b, c);
  const bool degenerate = r.is_real();
  if (degenerate && !allow_degenerate)
    throw std::invalid_argument("similarity_key: collinear vertices");
  std::vector<GaussRat> orbit = anharmonic_orbit(r);
  GaussRat best = orbit.front();  // orbit is sorted ascending
  if (reflections) {
    for (const GaussRat& z : orbit) {
      GaussRat zc = z.conj();
      if (zc < best) best = zc;
    }
  }
  return SimilarityKey{std::move(best), reflections, degenerate};
}

}  // namespace tricensus
