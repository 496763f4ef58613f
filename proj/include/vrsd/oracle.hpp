#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "vrsd/reduction.hpp"
#include "vrsd/select.hpp"

namespace vrsd {

// Enumeration settings for the exhaustive selector. With fix_first the
// relevance argmax is forced into every enumerated subset, matching the
// greedy selectors' forced first pick; without it all k-subsets compete.
struct OracleMode {
  bool fix_first = true;
  std::uint64_t enumeration_cap = 5'000'000;
};

namespace detail {

// C(n, r) saturated at 2^64 - 1.
inline std::uint64_t binomial_saturated(std::uint64_t n, std::uint64_t r) {
  constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();
  if (r > n) return 0;
  if (r > n - r) r = n - r;
  unsigned __int128 c = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    c = c * (n - r + i) / i;  // exact at each step
    if (c >= kSat) return kSat;
  }
  return static_cast<std::uint64_t>(c);
}

// Visits r-combinations of {0, ..., m-1} in lexicographic order. The
// visitor returns false to stop early.
template <typename Visitor>
void for_each_combination(std::size_t m, std::size_t r, Visitor&& visit) {
  std::vector<std::size_t> c(r);
  std::iota(c.begin(), c.end(), std::size_t{0});
  while (true) {
    if (!visit(static_cast<const std::vector<std::size_t>&>(c))) return;
    std::size_t i = r;
    while (i > 0 && c[i - 1] == m - r + (i - 1)) --i;
    if (i == 0) return;
    ++c[i - 1];
    for (std::size_t j = i; j < r; ++j) c[j] = c[j - 1] + 1;
  }
}

}  // namespace detail

// Exhaustive optimum of the sum-vector objective over k-subsets. Subsets are
// enumerated in lexicographic index order and strict improvement is required
// to replace the incumbent, so ties resolve to the lexicographically
// smallest subset. Throws EnumerationCapExceeded (message includes the
// required subset count) when the enumeration would exceed the cap.
inline SelectionResult exact_select(const CandidateSet& cands, const Query& q,
                                    std::size_t k, const OracleMode& mode = {}) {
  const std::size_t n = cands.size();
  detail::require_k(k, n);

  std::size_t forced = n;
  std::vector<std::size_t> free_idx;
  free_idx.reserve(n);
  if (mode.fix_first) {
    const auto qcos = detail::query_cosines(cands, q);
    forced = detail::argmax_lowest_index(qcos);
    for (std::size_t i = 0; i < n; ++i) {
      if (i != forced) free_idx.push_back(i);
    }
  } else {
    free_idx.resize(n);
    std::iota(free_idx.begin(), free_idx.end(), std::size_t{0});
  }
  const std::size_t choose = k - (mode.fix_first ? 1 : 0);

  const std::uint64_t required = detail::binomial_saturated(free_idx.size(), choose);
  if (required > mode.enumeration_cap) {
    const bool saturated = required == std::numeric_limits<std::uint64_t>::max();
    throw EnumerationCapExceeded(
        "exact_select: enumeration requires " +
        std::string(saturated ? "more than " : "") + std::to_string(required) +
        " subsets, cap is " + std::to_string(mode.enumeration_cap));
  }

  SelectionResult res;
  res.algorithm = AlgorithmTag::exact;
  const double qq = dot(q.vector, q.vector);
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();

  double best = kNegInf;
  bool have = false;
  std::vector<std::size_t> best_subset;
  std::vector<std::size_t> subset(k);
  Vector sum(cands.dim());

  detail::for_each_combination(free_idx.size(), choose, [&](const std::vector<std::size_t>& comb) {
    // Materialize the subset in ascending index order.
    subset.clear();
    for (const std::size_t c : comb) subset.push_back(free_idx[c]);
    if (forced != n) {
      const auto pos = std::lower_bound(subset.begin(), subset.end(), forced);
      subset.insert(pos, forced);
    }
    std::fill(sum.begin(), sum.end(), 0.0);
    for (const std::size_t idx : subset) {
      const Vector& v = cands[idx].vector;
      for (std::size_t c = 0; c < sum.size(); ++c) sum[c] += v[c];
    }
    double score = kNegInf;
    const double tt = dot(sum, sum);
    if (tt != 0.0) {
      const double s = dot(sum, q.vector) / std::sqrt(tt * qq);
      score = std::clamp(s, -1.0, 1.0);
    }
    ++res.candidate_evaluations;
    if (!have || score > best) {
      best = score;
      have = true;
      best_subset = subset;
    }
    return true;
  });

  for (const std::size_t idx : best_subset) res.selected_ids.push_back(cands[idx].id);
  detail::finalize_sum_and_score(res, cands, q, best_subset);
  return res;
}

// Exhaustive first witness (lexicographic) of a k-subset-sum instance, or
// nullopt. Exact integer arithmetic throughout.
inline std::optional<std::vector<std::size_t>> subset_sum_bruteforce(
    const SubsetSumInstance& inst) {
  validate(inst);
  if (inst.values.size() > 30) {
    throw InstanceTooLarge("subset_sum_bruteforce: " +
                           std::to_string(inst.values.size()) +
                           " values exceeds the limit of 30");
  }
  std::optional<std::vector<std::size_t>> found;
  detail::for_each_combination(inst.values.size(), inst.k,
                               [&](const std::vector<std::size_t>& comb) {
    Int128 sum = 0;
    for (const std::size_t idx : comb) sum += inst.values[idx];
    if (sum == inst.target) {
      found = comb;
      return false;
    }
    return true;
  });
  return found;
}

// Full exact pipeline on a reduced instance: enumerate every k-subset of the
// float lift, then certify the optimum in integer arithmetic. On a yes
// answer, witness_ids holds the winning candidate ids.
inline DecisionOutcome solve_reduced(const ReducedInstance& red,
                                     std::uint64_t enumeration_cap = 5'000'000) {
  const CandidateSet cands = to_candidate_set(red);
  const Query q = to_query(red);
  const OracleMode mode{.fix_first = false, .enumeration_cap = enumeration_cap};
  const SelectionResult sel = exact_select(cands, q, red.k, mode);

  std::unordered_map<std::string, std::size_t> index_of;
  for (std::size_t i = 0; i < cands.size(); ++i) index_of.emplace(cands[i].id, i);
  std::vector<IntVec2> vs;
  vs.reserve(sel.selected_ids.size());
  for (const auto& id : sel.selected_ids) {
    vs.push_back(red.candidates[index_of.at(id)]);
  }
  DecisionOutcome out = decision_check(vs, red.query);
  if (out.is_yes) out.witness_ids = sel.selected_ids;
  return out;
}

}  // namespace vrsd
