#include "tricensus/gauss.hpp"

#include <ostream>

namespace tricensus {

GaussRat inverse(const GaussRat& z) {
  if (z.is_zero()) throw std::domain_error("GaussRat: division by zero");
  Rat n = z.norm();
  return {z.re / n, -z.im / n};
}

GaussRat& GaussRat::operator/=(const GaussRat& o) { return *this *= inverse(o); }

std::string GaussRat::to_string() const {
  std::string s = re.to_string();
  s += im.sign() < 0 ? "-" : "+";
  s += abs(im).to_string();
  s += "i";
  return s;
}

std::size_t GaussRat::hash() const {
  std::size_t h = re.hash();
  h ^= im.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::ostream& operator<<(std::ostream& os, const GaussRat& z) { return os << z.to_string(); }

}  // namespace tricensus
