#include "tricensus/conformal_lift.hpp"

#include <stdexcept>

namespace tricensus {

GaussRat apply_sim(const Similitude& s, const GaussRat& z) {
  if (s.a.is_zero()) throw std::domain_error("apply_sim: a = 0 is not a group element");
  return s.a * z + s.b;
}

ConformalLine lift_c(GaussRat p, GaussRat q) { return {std::move(p), std::move(q)}; }

ConformalIntersection intersect_c(const ConformalLine& l1, const ConformalLine& l2) {
  if (l1 == l2) throw std::invalid_argument("intersect_c: identical lines");
  ConformalIntersection res;
  if (l1.source == l2.source) {
    res.kind = ConformalIntersection::Kind::parallel;
    return res;
  }
  GaussRat a = (l1.target - l2.target) / (l1.source - l2.source);
  GaussRat b = l1.target - a * l1.source;
  res.kind = a.is_zero() ? ConformalIntersection::Kind::degenerate_a_zero
                         : ConformalIntersection::Kind::similitude;
  res.value = Similitude{std::move(a), std::move(b)};
  return res;
}

std::vector<ConformalLine> conformal_lines(const PointSet& ps, bool conjugate_sources) {
  std::vector<ConformalLine> lines;
  lines.reserve(ps.size() * ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) {
    GaussRat p = ps[i].as_complex();
    if (conjugate_sources) p = p.conj();
    for (std::size_t j = 0; j < ps.size(); ++j) lines.push_back({p, ps[j].as_complex()});
  }
  return lines;
}

}  // namespace tricensus
