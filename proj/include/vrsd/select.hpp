#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "vrsd/types.hpp"

namespace vrsd {

namespace detail {

inline void require_k(std::size_t k, std::size_t n) {
  if (k == 0) throw KTooLarge("k must be at least 1");
  if (k > n) {
    throw KTooLarge("k=" + std::to_string(k) + " exceeds candidate count " +
                    std::to_string(n));
  }
}

inline std::vector<double> query_cosines(const CandidateSet& cands, const Query& q) {
  std::vector<double> qcos(cands.size());
  for (std::size_t i = 0; i < cands.size(); ++i) {
    qcos[i] = cosine(cands[i].vector, q.vector);
  }
  return qcos;
}

// Strict > keeps the lowest index on exact ties.
inline std::size_t argmax_lowest_index(const std::vector<double>& xs) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (xs[i] > xs[best]) best = i;
  }
  return best;
}

// cosine(run + v, q) without materializing the sum. Accumulation order per
// term matches dot() on the materialized vector, so the value is bit
// identical to cosine(sum_vectors({run, v}), q). Returns -inf when the
// trial sum has zero norm. qq is dot(q, q), hoisted by the caller.
inline double sum_objective(const Vector& run, const Vector& v, const Vector& qv,
                            double qq) {
  double tt = 0.0;
  double tq = 0.0;
  for (std::size_t c = 0; c < run.size(); ++c) {
    const double t = run[c] + v[c];
    tt += t * t;
    tq += t * qv[c];
  }
  if (tt == 0.0) return -std::numeric_limits<double>::infinity();
  const double s = tq / std::sqrt(tt * qq);
  return std::clamp(s, -1.0, 1.0);
}

// Fills sum_vector, score, and zero_sum_warning from the chosen indices.
// The sum accumulates left to right in the order given.
inline void finalize_sum_and_score(SelectionResult& res, const CandidateSet& cands,
                                   const Query& q,
                                   std::span<const std::size_t> chosen) {
  Vector sum(cands.dim(), 0.0);
  for (const std::size_t idx : chosen) {
    const Vector& v = cands[idx].vector;
    for (std::size_t c = 0; c < sum.size(); ++c) sum[c] += v[c];
  }
  res.sum_vector = std::move(sum);
  if (dot(res.sum_vector, res.sum_vector) == 0.0) {
    res.score = 0.0;
    res.zero_sum_warning = true;
  } else {
    res.score = cosine(res.sum_vector, q.vector);
  }
}

}  // namespace detail

// Plain relevance baseline: the k candidates with the highest cosine to the
// query, in descending order. Ties keep input order.
inline SelectionResult cosine_topk(const CandidateSet& cands, const Query& q,
                                   std::size_t k) {
  const std::size_t n = cands.size();
  detail::require_k(k, n);
  const auto qcos = detail::query_cosines(cands, q);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return qcos[a] > qcos[b]; });

  SelectionResult res;
  res.algorithm = AlgorithmTag::cosine;
  res.candidate_evaluations = n;
  std::vector<std::size_t> chosen(order.begin(), order.begin() + k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t idx = chosen[i];
    res.selected_ids.push_back(cands[idx].id);
    res.steps.push_back({i, cands[idx].id, qcos[idx], n - i});
  }
  detail::finalize_sum_and_score(res, cands, q, chosen);
  return res;
}

// Maximal marginal relevance. The first pick is the relevance argmax; each
// later step maximizes
//   lambda * cos(d, q) - (1 - lambda) * max over selected s of cos(d, s).
// Relevance cosines are computed once up front; the redundancy term is
// recomputed against every selected vector at every step, which is what the
// pair_similarity_evaluations counter records.
inline SelectionResult mmr_select(const CandidateSet& cands, const Query& q,
                                  std::size_t k, MmrParams params) {
  const std::size_t n = cands.size();
  detail::require_k(k, n);
  if (!(params.lambda >= 0.0 && params.lambda <= 1.0)) {
    throw InvalidLambda("lambda must lie in [0, 1]");
  }
  const double lam = params.lambda;
  const auto qcos = detail::query_cosines(cands, q);

  SelectionResult res;
  res.algorithm = AlgorithmTag::mmr;
  res.candidate_evaluations = n;

  std::vector<std::size_t> chosen;
  std::vector<bool> used(n, false);
  const std::size_t first = detail::argmax_lowest_index(qcos);
  chosen.push_back(first);
  used[first] = true;
  res.steps.push_back({0, cands[first].id, qcos[first], n});

  for (std::size_t step = 1; step < k; ++step) {
    double best = 0.0;
    std::size_t best_idx = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      double max_pair = -std::numeric_limits<double>::infinity();
      for (const std::size_t j : chosen) {
        const double s = cosine(cands[i].vector, cands[j].vector);
        ++res.pair_similarity_evaluations;
        if (s > max_pair) max_pair = s;
      }
      const double score = lam * qcos[i] - (1.0 - lam) * max_pair;
      if (best_idx == n || score > best) {
        best = score;
        best_idx = i;
      }
    }
    chosen.push_back(best_idx);
    used[best_idx] = true;
    res.steps.push_back({step, cands[best_idx].id, best, n - step});
  }

  for (const std::size_t idx : chosen) res.selected_ids.push_back(cands[idx].id);
  detail::finalize_sum_and_score(res, cands, q, chosen);
  return res;
}

// Greedy sum-vector selection. The first pick is the relevance argmax; each
// later step adds the candidate whose inclusion maximizes the cosine between
// the running sum and the query:
//   argmax over remaining d of cos(s + d, q).
// If every remaining candidate cancels the running sum to zero norm, the
// lowest-index remaining candidate is taken and its step objective is
// recorded as 0.
inline SelectionResult vrsd_select(const CandidateSet& cands, const Query& q,
                                   std::size_t k) {
  const std::size_t n = cands.size();
  detail::require_k(k, n);
  const auto qcos = detail::query_cosines(cands, q);
  const double qq = dot(q.vector, q.vector);
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();

  SelectionResult res;
  res.algorithm = AlgorithmTag::vrsd;

  std::vector<std::size_t> chosen;
  std::vector<bool> used(n, false);
  const std::size_t first = detail::argmax_lowest_index(qcos);
  chosen.push_back(first);
  used[first] = true;
  res.steps.push_back({0, cands[first].id, qcos[first], n});

  Vector run = cands[first].vector;
  for (std::size_t step = 1; step < k; ++step) {
    double best = 0.0;
    std::size_t best_idx = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      const double score = detail::sum_objective(run, cands[i].vector, q.vector, qq);
      ++res.candidate_evaluations;
      if (best_idx == n || score > best) {
        best = score;
        best_idx = i;
      }
    }
    chosen.push_back(best_idx);
    used[best_idx] = true;
    const Vector& v = cands[best_idx].vector;
    for (std::size_t c = 0; c < run.size(); ++c) run[c] += v[c];
    res.steps.push_back({step, cands[best_idx].id, best == kNegInf ? 0.0 : best,
                         n - step});
  }

  for (const std::size_t idx : chosen) res.selected_ids.push_back(cands[idx].id);
  detail::finalize_sum_and_score(res, cands, q, chosen);
  return res;
}

// Keeps the n records with the highest cosine to the query (all of them when
// n >= size), descending, ties in input order. Used to carve a working pool
// out of a larger corpus before running a selector.
inline CandidateSet top_n_filter(const CandidateSet& cands, const Query& q,
                                 std::size_t n) {
  if (n == 0) throw Error("top_n_filter: n must be at least 1");
  const auto qcos = detail::query_cosines(cands, q);
  std::vector<std::size_t> order(cands.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return qcos[a] > qcos[b]; });
  const std::size_t take = std::min(n, cands.size());
  std::vector<EmbeddingRecord> recs;
  recs.reserve(take);
  for (std::size_t i = 0; i < take; ++i) recs.push_back(cands[order[i]]);
  return CandidateSet(std::move(recs));
}

// 2D configuration with every candidate on the same side of the query: one
// candidate at angle theta from the query and the rest at strictly larger
// angles, all inside (0, pi/2).
struct SameSideScenario {
  double theta = 0.0;                    // radians
  std::vector<double> candidate_angles;  // radians, strictly ascending, all > theta
};

// Realizes the scenario as unit vectors: query (1, 0), candidate d0 at
// theta, then d1, d2, ... at the listed angles.
inline std::pair<CandidateSet, Query> build_same_side_scenario(
    const SameSideScenario& s) {
  constexpr double kHalfPi = std::numbers::pi / 2.0;
  if (!(s.theta > 0.0 && s.theta < kHalfPi)) {
    throw InvalidScenario("theta must lie in (0, pi/2)");
  }
  double prev = s.theta;
  for (const double a : s.candidate_angles) {
    if (!(a > prev)) {
      throw InvalidScenario("candidate angles must be strictly ascending and exceed theta");
    }
    if (!(a < kHalfPi)) throw InvalidScenario("candidate angles must stay below pi/2");
    prev = a;
  }
  std::vector<EmbeddingRecord> recs;
  recs.push_back({"d0", {std::cos(s.theta), std::sin(s.theta)}, std::nullopt});
  std::size_t idx = 1;
  for (const double a : s.candidate_angles) {
    recs.push_back({"d" + std::to_string(idx++), {std::cos(a), std::sin(a)},
                    std::nullopt});
  }
  return {CandidateSet(std::move(recs)), Query{"q", {1.0, 0.0}}};
}

}  // namespace vrsd
