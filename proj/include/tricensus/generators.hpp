#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "tricensus/geometry.hpp"

namespace tricensus {

/// The m x m integer grid {0..m-1}^2; N = m^2.
PointSet grid(std::size_t m);

/// n distinct points drawn uniformly from the dyadic lattice
/// {-half_width..half_width} with step 2^-denom_log2, deterministic for a
/// fixed seed (platform-independent RNG). Throws when n exceeds the lattice
/// or the collision-retry budget runs out.
PointSet random_rational(std::size_t n, std::uint64_t seed, long half_width = 8,
                         unsigned denom_log2 = 4);

/// n/2 points on the x-axis plus n/2 points on a parabola above it: exactly
/// at the N/2 collinearity boundary of the hypothesis. n must be even, >= 6.
PointSet half_line_config(std::size_t n);

/// Line a*x + b*y + c = 0 with rational coefficients, (a, b) != (0, 0).
struct RatLine {
  Rat a, b, c;

  std::string to_string() const {
    return a.to_string() + "*x + " + b.to_string() + "*y + " + c.to_string() + " = 0";
  }
};

Point reflect(const RatLine& line, const Point& p);

/// Vertical line strictly right of the bounding box of P (offset 1/3), so the
/// mirror image is guaranteed disjoint from P.
RatLine default_mirror_line(const PointSet& ps);

/// Mirror image P' of P against the line; throws (naming the shared point)
/// when P and P' are not disjoint.
PointSet mirror(const PointSet& ps, const RatLine& line);
PointSet mirror(const PointSet& ps);

/// Declarative point-set request, as consumed by the CLI.
struct GenSpec {
  enum class Kind { grid, random, half_line, mirror_of };
  Kind kind = Kind::grid;
  std::size_t side = 4;    // grid
  std::size_t count = 8;   // random / half_line
  std::uint64_t seed = 1;  // random
  long half_width = 8;
  unsigned denom_log2 = 4;
  std::optional<PointSet> base;       // mirror_of
  std::optional<RatLine> mirror_line; // mirror_of; default line when absent
};

PointSet make_point_set(const GenSpec& spec);

/// splitmix64: tiny portable deterministic generator for test instances.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [0, bound), rejection-sampled (no modulo bias).
  std::uint64_t next_below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

}  // namespace tricensus
