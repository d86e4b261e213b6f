#pragma once

#include <iosfwd>
#include <string>

#include "tricensus/rational.hpp"

namespace tricensus {

/// Gaussian rational: re + im*i with exact rational components. Closed under
/// the field operations used by the conformal lift. The ordering is
/// lexicographic on (re, im); it exists only to pick canonical orbit
/// representatives and has no geometric meaning.
struct GaussRat {
  Rat re;
  Rat im;

  GaussRat() = default;
  GaussRat(Rat r) : re(std::move(r)) {}
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  GaussRat(long r, long i) : re(r), im(i) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  GaussRat conj() const { return {re, -im}; }
  /// |z|^2 = re^2 + im^2, exact.
  Rat norm() const { return re * re + im * im; }

  GaussRat& operator+=(const GaussRat& o) { re += o.re; im += o.im; return *this; }
  GaussRat& operator-=(const GaussRat& o) { re -= o.re; im -= o.im; return *this; }
  GaussRat& operator*=(const GaussRat& o) {
    Rat r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  GaussRat& operator/=(const GaussRat& o);

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { a += b; return a; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { a -= b; return a; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { a *= b; return a; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { a /= b; return a; }
  GaussRat operator-() const { return {-re, -im}; }

  friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
  friend bool operator<(const GaussRat& a, const GaussRat& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  }

  std::string to_string() const;
  std::size_t hash() const;

  friend std::ostream& operator<<(std::ostream& os, const GaussRat& z);
};

GaussRat inverse(const GaussRat& z);

}  // namespace tricensus

template <>
struct std::hash<tricensus::GaussRat> {
  std::size_t operator()(const tricensus::GaussRat& z) const { return z.hash(); }
};
