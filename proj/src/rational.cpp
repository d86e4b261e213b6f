#include "tricensus/rational.hpp"

#include <ostream>

namespace tricensus {

void Rat::set_ll(long long n) {
  mpz_class z;
  const bool neg = n < 0;
  unsigned long long mag =
      neg ? static_cast<unsigned long long>(-(n + 1)) + 1ULL : static_cast<unsigned long long>(n);
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(mag), 0, 0, &mag);
  if (neg) z = -z;
  v_ = mpq_class(z);
}

Rat Rat::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("Rat::parse: empty string");
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("Rat::parse: malformed rational '" + std::string(text) + "'");
  if (sgn(q.get_den()) == 0)
    throw std::invalid_argument("Rat::parse: zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return Rat(std::move(q));
}

std::size_t Rat::hash() const {
  // FNV-1a over the numerator and denominator limbs.
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](const mpz_class& z) {
    const mp_limb_t* limbs = mpz_limbs_read(z.get_mpz_t());
    std::size_t n = mpz_size(z.get_mpz_t());
    int s = sgn(z);
    h = (h ^ static_cast<std::uint64_t>(s + 1)) * 1099511628211ULL;
    for (std::size_t i = 0; i < n; ++i)
      h = (h ^ static_cast<std::uint64_t>(limbs[i])) * 1099511628211ULL;
  };
  mix(v_.get_num());
  mix(v_.get_den());
  return static_cast<std::size_t>(h);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

}  // namespace tricensus
