#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "vrsd/errors.hpp"
#include "vrsd/vector_ops.hpp"

namespace vrsd {

// One candidate vector with a stable id and optional source text.
struct EmbeddingRecord {
  std::string id;
  Vector vector;
  std::optional<std::string> text;

  friend bool operator==(const EmbeddingRecord&, const EmbeddingRecord&) = default;
};

struct Query {
  std::string id;
  Vector vector;

  friend bool operator==(const Query&, const Query&) = default;
};

// Validated collection of candidates. Construction enforces everything the
// selection algorithms rely on: at least one record, uniform dimension,
// nonempty distinct ids, finite components, strictly positive norms.
class CandidateSet {
 public:
  explicit CandidateSet(std::vector<EmbeddingRecord> records)
      : records_(std::move(records)) {
    if (records_.empty()) throw EmptyInput("CandidateSet: no records");
    dim_ = records_.front().vector.size();
    if (dim_ == 0) throw Error("CandidateSet: record '" + records_.front().id +
                               "' has an empty vector");
    std::unordered_set<std::string_view> seen;
    for (const auto& r : records_) {
      if (r.id.empty()) throw Error("CandidateSet: record with empty id");
      if (!seen.insert(r.id).second) {
        throw Error("CandidateSet: duplicate id '" + r.id + "'");
      }
      if (r.vector.size() != dim_) {
        throw DimensionMismatch("CandidateSet: record '" + r.id +
                                "' has dimension " + std::to_string(r.vector.size()) +
                                " but '" + records_.front().id + "' has " +
                                std::to_string(dim_));
      }
      if (!all_finite(r.vector)) {
        throw Error("CandidateSet: record '" + r.id + "' has a non-finite component");
      }
      if (dot(r.vector, r.vector) == 0.0) {
        throw ZeroNorm("CandidateSet: record '" + r.id + "' has zero norm");
      }
    }
  }

  std::size_t size() const { return records_.size(); }
  std::size_t dim() const { return dim_; }
  const EmbeddingRecord& operator[](std::size_t i) const { return records_[i]; }
  const std::vector<EmbeddingRecord>& records() const { return records_; }
  auto begin() const { return records_.begin(); }
  auto end() const { return records_.end(); }

  friend bool operator==(const CandidateSet&, const CandidateSet&) = default;

 private:
  std::vector<EmbeddingRecord> records_;
  std::size_t dim_ = 0;
};

enum class AlgorithmTag { cosine, mmr, vrsd, exact };

constexpr const char* to_string(AlgorithmTag t) {
  switch (t) {
    case AlgorithmTag::cosine: return "cosine";
    case AlgorithmTag::mmr: return "mmr";
    case AlgorithmTag::vrsd: return "vrsd";
    case AlgorithmTag::exact: return "exact";
  }
  return "unknown";
}

inline std::optional<AlgorithmTag> parse_algorithm_tag(std::string_view s) {
  if (s == "cosine") return AlgorithmTag::cosine;
  if (s == "mmr") return AlgorithmTag::mmr;
  if (s == "vrsd") return AlgorithmTag::vrsd;
  if (s == "exact") return AlgorithmTag::exact;
  return std::nullopt;
}

// One greedy iteration: which candidate was taken, at what objective value,
// and how many remaining candidates were scanned to pick it.
struct StepTrace {
  std::size_t step_index = 0;
  std::string chosen_id;
  double objective_value = 0.0;
  std::size_t candidates_scanned = 0;

  friend bool operator==(const StepTrace&, const StepTrace&) = default;
};

// Outcome of one selection run. `score` is the cosine between the sum of
// the selected vectors and the query.
//
// Counter semantics by algorithm:
//   candidate_evaluations
//     vrsd    sum-objective evaluations in the greedy loop, i.e.
//             sum over steps 1..k-1 of (n - step)
//     exact   one per enumerated subset
//     cosine  n (each candidate scored once against the query)
//     mmr     n (the relevance precompute; cached lookups are not counted)
//   pair_similarity_evaluations
//     mmr     candidate-to-candidate cosines, sum over steps of step*(n - step)
//     others  0
struct SelectionResult {
  AlgorithmTag algorithm = AlgorithmTag::cosine;
  std::vector<std::string> selected_ids;
  Vector sum_vector;
  double score = 0.0;
  std::vector<StepTrace> steps;
  std::uint64_t candidate_evaluations = 0;
  std::uint64_t pair_similarity_evaluations = 0;
  // Set when every admissible choice cancelled to a zero-norm sum; the
  // reported score of 0 is then a placeholder, not a cosine.
  bool zero_sum_warning = false;

  friend bool operator==(const SelectionResult&, const SelectionResult&) = default;
};

struct MmrParams {
  double lambda = 0.5;
};

}  // namespace vrsd
