#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "tricensus/geometry.hpp"

namespace tricensus {

enum class KeyKind {
  congruence_full,    // isometries including reflections (SSS)
  congruence_direct,  // orientation-preserving isometries only
  similarity_direct,  // z -> az + b, a != 0
  similarity_full,    // direct similarity plus conjugation
};

std::string_view to_string(KeyKind kind);
KeyKind key_kind_from_string(std::string_view name);
constexpr std::array<KeyKind, 4> all_key_kinds() {
  return {KeyKind::congruence_full, KeyKind::congruence_direct, KeyKind::similarity_direct,
          KeyKind::similarity_full};
}
inline bool is_similarity(KeyKind k) {
  return k == KeyKind::similarity_direct || k == KeyKind::similarity_full;
}

/// Sorted triple of squared side lengths. Two triangles are congruent (any
/// isometry, reflections allowed) iff their keys are equal.
struct CongruenceKey {
  std::array<Rat, 3> sq_sides;  // ascending

  friend bool operator==(const CongruenceKey& a, const CongruenceKey& b) {
    return a.sq_sides == b.sq_sides;
  }
  friend bool operator<(const CongruenceKey& a, const CongruenceKey& b) {
    return a.sq_sides < b.sq_sides;
  }
  std::string to_string() const;
};

/// Minimal cyclic rotation of the squared sides read in counterclockwise
/// vertex order. Invariant under orientation-preserving isometries only; a
/// scalene triangle and its mirror image get distinct keys. Collinear triples
/// (degenerate flag) fall back to the sorted triple, which is a complete
/// invariant there: a collinear triple and its mirror are directly congruent.
struct DirectCongruenceKey {
  std::array<Rat, 3> sq_sides;
  bool degenerate = false;

  friend bool operator==(const DirectCongruenceKey& a, const DirectCongruenceKey& b) {
    return a.degenerate == b.degenerate && a.sq_sides == b.sq_sides;
  }
  friend bool operator<(const DirectCongruenceKey& a, const DirectCongruenceKey& b) {
    if (a.degenerate != b.degenerate) return a.degenerate < b.degenerate;
    return a.sq_sides < b.sq_sides;
  }
  std::string to_string() const;
};

/// Canonical representative (lexicographic minimum) of the anharmonic orbit
/// of the shape parameter r = (z3-z1)/(z2-z1), conjugates included when the
/// reflections flag is set.
struct SimilarityKey {
  GaussRat shape;
  bool reflections = false;
  bool degenerate = false;

  friend bool operator==(const SimilarityKey& a, const SimilarityKey& b) {
    return a.reflections == b.reflections && a.degenerate == b.degenerate && a.shape == b.shape;
  }
  friend bool operator<(const SimilarityKey& a, const SimilarityKey& b) {
    if (a.reflections != b.reflections) return a.reflections < b.reflections;
    if (a.degenerate != b.degenerate) return a.degenerate < b.degenerate;
    return a.shape < b.shape;
  }
  std::string to_string() const;
};

/// Throws std::invalid_argument on duplicate vertices (a degenerate pair, not
/// a triangle).
CongruenceKey congruence_key(const Point& a, const Point& b, const Point& c);

/// Throws std::invalid_argument on duplicate vertices; collinear triples are
/// an error unless allow_degenerate is set.
DirectCongruenceKey direct_congruence_key(const Point& a, const Point& b, const Point& c,
                                          bool allow_degenerate = false);

/// Shape parameter r = (z3-z1)/(z2-z1) of the vertex triple as complex
/// numbers. Throws on duplicate vertices.
GaussRat shape_parameter(const Point& a, const Point& b, const Point& c);

/// Orbit {r, 1/r, 1-r, 1/(1-r), r/(r-1), (r-1)/r} of the vertex-relabeling
/// action, deduplicated and sorted. Throws std::domain_error for r in {0, 1}.
std::vector<GaussRat> anharmonic_orbit(const GaussRat& r);

SimilarityKey similarity_key(const Point& a, const Point& b, const Point& c, bool reflections,
                             bool allow_degenerate = false);

}  // namespace tricensus
