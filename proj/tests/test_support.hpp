#pragma once

// Shared helpers for the test binaries: seeded random instances and random
// orthogonal transforms (compositions of Householder reflections).

#include <cstdint>
#include <random>
#include <vector>

#include "vrsd/vrsd.hpp"

namespace testsupport {

inline vrsd::Vector random_vector(std::mt19937_64& rng, std::size_t d) {
  std::uniform_real_distribution<double> comp(-1.0, 1.0);
  while (true) {
    vrsd::Vector v(d);
    for (double& c : v) c = comp(rng);
    if (vrsd::dot(v, v) > 1e-12) return v;
  }
}

inline vrsd::CandidateSet random_candidates(std::mt19937_64& rng, std::size_t n,
                                            std::size_t d) {
  std::vector<vrsd::EmbeddingRecord> recs;
  recs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    recs.push_back({"c" + std::to_string(i), random_vector(rng, d), std::nullopt});
  }
  return vrsd::CandidateSet(std::move(recs));
}

inline vrsd::Query random_query(std::mt19937_64& rng, std::size_t d) {
  return {"q", random_vector(rng, d)};
}

// Orthogonal map stored as a chain of unit Householder reflectors.
class Orthogonal {
 public:
  Orthogonal(std::mt19937_64& rng, std::size_t d, int reflections = 3) {
    for (int r = 0; r < reflections; ++r) {
      reflectors_.push_back(vrsd::normalize(random_vector(rng, d)));
    }
  }

  vrsd::Vector apply(const vrsd::Vector& x) const {
    vrsd::Vector out = x;
    for (const auto& u : reflectors_) {
      const double proj = 2.0 * vrsd::dot(out, u);
      for (std::size_t c = 0; c < out.size(); ++c) out[c] -= proj * u[c];
    }
    return out;
  }

  vrsd::CandidateSet apply(const vrsd::CandidateSet& cands) const {
    std::vector<vrsd::EmbeddingRecord> recs;
    recs.reserve(cands.size());
    for (const auto& r : cands) {
      recs.push_back({r.id, apply(r.vector), r.text});
    }
    return vrsd::CandidateSet(std::move(recs));
  }

 private:
  std::vector<vrsd::Vector> reflectors_;
};

// 64-bit FNV-1a over a byte string, for golden-output checks.
inline std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  return h;
}

// The worked 3-candidate fixture: values {3, 5, 2}, target 8, k 2, so the
// candidates are [3,1], [5,1], [2,1] and the query is [8,2].
inline vrsd::SubsetSumInstance worked_instance() { return {{3, 5, 2}, 8, 2}; }

}  // namespace testsupport
