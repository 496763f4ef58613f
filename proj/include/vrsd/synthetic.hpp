#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "vrsd/types.hpp"

namespace vrsd {

// Deterministic standard-normal stream: Box-Muller over the raw mt19937_64
// output, so the generated bytes do not depend on the standard library's
// distribution implementations.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : rng_(seed) {}

  // Uniform in [0, 1), 53 random bits.
  double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    // log1p(-u1) = log(1 - u1), finite because u1 < 1.
    const double r = std::sqrt(-2.0 * std::log1p(-u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

 private:
  std::mt19937_64 rng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

// Parameters for the seeded synthetic corpus generator.
struct SyntheticSpec {
  std::uint64_t seed = 42;
  std::size_t num_records = 1000;   // corpus size
  std::size_t dimension = 32;       // at least 2
  std::size_t pool_size = 20;       // candidate pool retained downstream
  double cluster_spread = 0.3;      // stddev of the angular offset, radians
  double distractor_fraction = 0.5; // share of records drawn uniformly on the sphere
};

namespace detail {

inline std::string synthetic_id(std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "r%04zu", i);
  return buf;
}

}  // namespace detail

// Builds a unit query plus a corpus of unit records: a cluster placed at
// angular offsets |N(0, spread)| from the query and uniform-sphere
// distractors. Deterministic function of the spec; identical specs produce
// byte-identical corpora.
inline std::pair<CandidateSet, Query> generate_synthetic(const SyntheticSpec& spec) {
  if (spec.num_records == 0) throw EmptyInput("generate_synthetic: num_records is 0");
  if (spec.dimension < 2) throw Error("generate_synthetic: dimension must be >= 2");
  if (spec.pool_size < 1 || spec.pool_size > spec.num_records) {
    throw Error("generate_synthetic: pool_size must lie in [1, num_records]");
  }
  if (!(spec.cluster_spread > 0.0)) {
    throw Error("generate_synthetic: cluster_spread must be positive");
  }
  if (!(spec.distractor_fraction >= 0.0 && spec.distractor_fraction <= 1.0)) {
    throw Error("generate_synthetic: distractor_fraction must lie in [0, 1]");
  }

  GaussianStream g(spec.seed);
  const std::size_t d = spec.dimension;

  const auto draw_unit = [&]() {
    while (true) {
      Vector v(d);
      for (double& c : v) c = g.next();
      const double n2 = dot(v, v);
      if (n2 > 0.0) {
        const double inv = 1.0 / std::sqrt(n2);
        for (double& c : v) c *= inv;
        return v;
      }
    }
  };

  const Vector qv = draw_unit();

  const std::size_t num_distractors = static_cast<std::size_t>(
      std::llround(spec.distractor_fraction * static_cast<double>(spec.num_records)));
  const std::size_t num_clustered = spec.num_records - num_distractors;

  std::vector<EmbeddingRecord> recs;
  recs.reserve(spec.num_records);
  for (std::size_t i = 0; i < num_clustered; ++i) {
    // Unit tangent direction orthogonal to the query.
    Vector u;
    while (true) {
      Vector z(d);
      for (double& c : z) c = g.next();
      const double zq = dot(z, qv);
      for (std::size_t c = 0; c < d; ++c) z[c] -= zq * qv[c];
      const double n2 = dot(z, z);
      if (n2 > 1e-24) {
        const double inv = 1.0 / std::sqrt(n2);
        for (double& c : z) c *= inv;
        u = std::move(z);
        break;
      }
    }
    const double theta = std::abs(g.next()) * spec.cluster_spread;
    Vector v(d);
    const double ct = std::cos(theta);
    const double st = std::sin(theta);
    for (std::size_t c = 0; c < d; ++c) v[c] = ct * qv[c] + st * u[c];
    recs.push_back({detail::synthetic_id(i), std::move(v), std::nullopt});
  }
  for (std::size_t i = num_clustered; i < spec.num_records; ++i) {
    recs.push_back({detail::synthetic_id(i), draw_unit(), std::nullopt});
  }

  return {CandidateSet(std::move(recs)),
          Query{"q" + std::to_string(spec.seed), qv}};
}

}  // namespace vrsd
