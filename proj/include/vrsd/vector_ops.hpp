#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "vrsd/errors.hpp"

namespace vrsd {

using Vector = std::vector<double>;

inline void check_same_dim(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("dimension mismatch: " + std::to_string(a.size()) +
                            " vs " + std::to_string(b.size()));
  }
}

inline bool all_finite(const Vector& v) {
  return std::all_of(v.begin(), v.end(),
                     [](double c) { return std::isfinite(c); });
}

inline double dot(const Vector& a, const Vector& b) {
  check_same_dim(a, b);
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

inline double norm(const Vector& a) { return std::sqrt(dot(a, a)); }

// Cosine similarity, clamped to [-1, 1] so rounding can never push a result
// past the mathematical range. Computed as dot / sqrt(|a|^2 * |b|^2); when
// both vectors have small integer components and one is a positive multiple
// of the other, every intermediate is exact and the result is exactly 1.0.
inline double cosine(const Vector& a, const Vector& b) {
  check_same_dim(a, b);
  const double na2 = dot(a, a);
  const double nb2 = dot(b, b);
  if (na2 == 0.0) throw ZeroNorm("cosine: first argument has zero norm");
  if (nb2 == 0.0) throw ZeroNorm("cosine: second argument has zero norm");
  const double c = dot(a, b) / std::sqrt(na2 * nb2);
  return std::clamp(c, -1.0, 1.0);
}

// Componentwise sum, accumulated left to right.
inline Vector sum_vectors(std::span<const Vector> vs) {
  if (vs.empty()) throw EmptyInput("sum_vectors: empty input");
  Vector acc = vs.front();
  for (std::size_t i = 1; i < vs.size(); ++i) {
    check_same_dim(acc, vs[i]);
    for (std::size_t c = 0; c < acc.size(); ++c) acc[c] += vs[i][c];
  }
  return acc;
}

inline Vector normalize(const Vector& a) {
  const double n = norm(a);
  if (n == 0.0) throw ZeroNorm("normalize: zero-norm vector");
  Vector out = a;
  for (double& c : out) c /= n;
  return out;
}

}  // namespace vrsd
