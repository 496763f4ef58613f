#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "vrsd/decision.hpp"
#include "vrsd/types.hpp"

namespace vrsd {

// k-subset-sum instance: choose exactly k elements of `values` (a multiset;
// positions are the element identities) summing to `target`.
struct SubsetSumInstance {
  std::vector<std::int64_t> values;
  std::int64_t target = 0;
  std::size_t k = 1;

  friend bool operator==(const SubsetSumInstance&, const SubsetSumInstance&) = default;
};

inline void validate(const SubsetSumInstance& inst) {
  if (inst.values.empty()) throw EmptyInput("subset-sum instance: empty value set");
  if (inst.k < 1 || inst.k > inst.values.size()) {
    throw Error("subset-sum instance: k=" + std::to_string(inst.k) +
                " out of range for " + std::to_string(inst.values.size()) +
                " values");
  }
}

// Image of a k-subset-sum instance in vector form: one candidate [t_i, 1]
// per element and query [target, k]. A k-subset sums to the target exactly
// when the corresponding candidate vectors sum to the query itself, because
// the second components force the multiple to be 1.
struct ReducedInstance {
  std::vector<IntVec2> candidates;
  IntVec2 query;
  std::size_t k = 1;
  std::vector<std::size_t> id_map;  // candidate index -> position in the source set

  friend bool operator==(const ReducedInstance&, const ReducedInstance&) = default;
};

inline ReducedInstance reduce(const SubsetSumInstance& inst) {
  validate(inst);
  ReducedInstance red;
  red.k = inst.k;
  red.candidates.reserve(inst.values.size());
  red.id_map.reserve(inst.values.size());
  for (std::size_t i = 0; i < inst.values.size(); ++i) {
    red.candidates.push_back({inst.values[i], 1});
    red.id_map.push_back(i);
  }
  red.query = {inst.target, static_cast<Int128>(inst.k)};
  return red;
}

// Maps a claimed certificate (candidate indices) back to source positions,
// verifying it exactly first.
inline std::vector<std::size_t> lift_certificate(const ReducedInstance& red,
                                                 std::span<const std::size_t> selected) {
  if (selected.size() != red.k) {
    throw Error("lift_certificate: expected " + std::to_string(red.k) +
                " indices, got " + std::to_string(selected.size()));
  }
  std::unordered_set<std::size_t> distinct;
  std::vector<IntVec2> vs;
  vs.reserve(selected.size());
  for (const std::size_t idx : selected) {
    if (idx >= red.candidates.size()) {
      throw Error("lift_certificate: index " + std::to_string(idx) + " out of range");
    }
    if (!distinct.insert(idx).second) {
      throw Error("lift_certificate: repeated index " + std::to_string(idx));
    }
    vs.push_back(red.candidates[idx]);
  }
  const DecisionOutcome out = decision_check(vs, red.query);
  if (!out.is_yes) {
    throw NotACertificate("lift_certificate: selection does not sum to a positive "
                          "multiple of the query");
  }
  std::vector<std::size_t> positions;
  positions.reserve(selected.size());
  for (const std::size_t idx : selected) positions.push_back(red.id_map[idx]);
  return positions;
}

// Expands an any-size subset-sum question into one k-subset-sum instance per
// cardinality. Some subset sums to `target` exactly when at least one of the
// expanded instances is a yes instance.
inline std::vector<SubsetSumInstance> expand_to_k_instances(
    const std::vector<std::int64_t>& values, std::int64_t target) {
  if (values.empty()) throw EmptyInput("expand_to_k_instances: empty value set");
  std::vector<SubsetSumInstance> out;
  out.reserve(values.size());
  for (std::size_t k = 1; k <= values.size(); ++k) {
    out.push_back({values, target, k});
  }
  return out;
}

// Float lift of a reduced instance, for feeding the similarity-based
// selectors. Candidate ids are "t<index>".
inline CandidateSet to_candidate_set(const ReducedInstance& red) {
  std::vector<EmbeddingRecord> recs;
  recs.reserve(red.candidates.size());
  for (std::size_t i = 0; i < red.candidates.size(); ++i) {
    recs.push_back({"t" + std::to_string(i),
                    {static_cast<double>(red.candidates[i].x),
                     static_cast<double>(red.candidates[i].y)},
                    std::nullopt});
  }
  return CandidateSet(std::move(recs));
}

inline Query to_query(const ReducedInstance& red) {
  return {"q", {static_cast<double>(red.query.x), static_cast<double>(red.query.y)}};
}

}  // namespace vrsd
