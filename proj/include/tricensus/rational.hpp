#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tricensus {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. Canonical zero is 0/1. Every geometric decision in this
/// library goes through exact Rat comparisons; there is no floating point
/// anywhere on a decision path.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}
  Rat(long n) : v_(static_cast<long int>(n)) {}
  Rat(long long n) { set_ll(n); }
  Rat(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    v_.canonicalize();
  }
  explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  explicit Rat(const mpz_class& n) : v_(n) {}

  /// Accepts "123", "-4/6" (reduced on construction), "+7/2".
  static Rat parse(std::string_view text);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
  friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
  friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
  friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }
  Rat operator-() const { return Rat(mpq_class(-v_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) == 0; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) < 0; }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  /// "n" when integral, "n/d" otherwise.
  std::string to_string() const { return v_.get_str(); }
  double to_double() const { return v_.get_d(); }

  std::size_t hash() const;

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

 private:
  void set_ll(long long n);

  mpq_class v_;
};

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

}  // namespace tricensus

template <>
struct std::hash<tricensus::Rat> {
  std::size_t operator()(const tricensus::Rat& r) const { return r.hash(); }
};
