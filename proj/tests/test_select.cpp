#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "vrsd/reduction.hpp"
#include "vrsd/select.hpp"

namespace {

using vrsd::CandidateSet;
using vrsd::Query;
using vrsd::Vector;

// Candidates [3,1], [5,1], [2,1] (ids t0, t1, t2) against query [8,2].
// Relevance order: t1 (0.99887) > t0 (0.99705) > t2 (0.97619).
struct Fixture {
  CandidateSet cands = vrsd::to_candidate_set(vrsd::reduce(testsupport::worked_instance()));
  Query q = vrsd::to_query(vrsd::reduce(testsupport::worked_instance()));
};

TEST(CosineTopk, FixtureOrdering) {
  const Fixture f;
  const auto res = vrsd::cosine_topk(f.cands, f.q, 3);
  EXPECT_EQ(res.algorithm, vrsd::AlgorithmTag::cosine);
  EXPECT_EQ(res.selected_ids, (std::vector<std::string>{"t1", "t0", "t2"}));
  EXPECT_DOUBLE_EQ(res.steps[0].objective_value, 0.9988681377244375);
  EXPECT_DOUBLE_EQ(res.steps[1].objective_value, 0.9970544855015815);
  EXPECT_DOUBLE_EQ(res.steps[2].objective_value, 0.9761870601839528);
  EXPECT_EQ(res.candidate_evaluations, 3u);
  EXPECT_EQ(res.pair_similarity_evaluations, 0u);
}

TEST(CosineTopk, K1IsArgmax) {
  const Fixture f;
  const auto res = vrsd::cosine_topk(f.cands, f.q, 1);
  EXPECT_EQ(res.selected_ids, (std::vector<std::string>{"t1"}));
  EXPECT_EQ(res.sum_vector, (Vector{5.0, 1.0}));
}

TEST(CosineTopk, TiesKeepInputOrder) {
  const CandidateSet cands({{"a", {2.0, 0.0}, std::nullopt},
                            {"b", {1.0, 0.0}, std::nullopt},
                            {"c", {0.0, 1.0}, std::nullopt}});
  const Query q{"q", {1.0, 0.0}};
  const auto res = vrsd::cosine_topk(cands, q, 2);
  EXPECT_EQ(res.selected_ids, (std::vector<std::string>{"a", "b"}));
}

TEST(Selectors, RejectBadK) {
  const Fixture f;
  EXPECT_THROW(vrsd::cosine_topk(f.cands, f.q, 0), vrsd::KTooLarge);
  EXPECT_THROW(vrsd::cosine_topk(f.cands, f.q, 4), vrsd::KTooLarge);
  EXPECT_THROW(vrsd::vrsd_select(f.cands, f.q, 4), vrsd::KTooLarge);
  EXPECT_THROW(vrsd::mmr_select(f.cands, f.q, 4, {0.5}), vrsd::KTooLarge);
}

TEST(Mmr, RejectsBadLambda) {
  const Fixture f;
  EXPECT_THROW(vrsd::mmr_select(f.cands, f.q, 2, {-0.1}), vrsd::InvalidLambda);
  EXPECT_THROW(vrsd::mmr_select(f.cands, f.q, 2, {1.1}), vrsd::InvalidLambda);
  EXPECT_THROW(
      vrsd::mmr_select(f.cands, f.q, 2, {std::numeric_limits<double>::quiet_NaN()}),
      vrsd::InvalidLambda);
}

TEST(Mmr, FixturePrefersDiversityAtHalfLambda) {
  const Fixture f;
  const auto res = vrsd::mmr_select(f.cands, f.q, 2, {0.5});
  // t2 is less relevant than t0 but further from the already selected t1.
  EXPECT_EQ(res.selected_ids, (std::vector<std::string>{"t1", "t2"}));
  const double expected = 0.5 * vrsd::cosine(f.cands[2].vector, f.q.vector) -
                          0.5 * vrsd::cosine(f.cands[2].vector, f.cands[1].vector);
  EXPECT_DOUBLE_EQ(res.steps[1].objective_value, expected);
  EXPECT_EQ(res.pair_similarity_evaluations, 2u);  // two remaining, one selected
}

TEST(Mmr, LambdaOneMatchesCosineTopk) {
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 5 + rng() % 10;
    const std::size_t d = 2 + rng() % 6;
    const auto cands = testsupport::random_candidates(rng, n, d);
    const auto q = testsupport::random_query(rng, d);
    const std::size_t k = 1 + rng() % n;
    EXPECT_EQ(vrsd::mmr_select(cands, q, k, {1.0}).selected_ids,
              vrsd::cosine_topk(cands, q, k).selected_ids);
  }
}

TEST(Mmr, PairEvaluationCountClosedForm) {
  std::mt19937_64 rng(20240812);
  const auto cands = testsupport::random_candidates(rng, 10, 4);
  const auto q = testsupport::random_query(rng, 4);
  const auto res = vrsd::mmr_select(cands, q, 4, {0.5});
  // steps 1..3 scan (10 - step) remaining against step selected
  EXPECT_EQ(res.pair_similarity_evaluations, 1u * 9 + 2u * 8 + 3u * 7);
}

TEST(Vrsd, FixtureReachesExactParallelSum) {
  const Fixture f;
  const auto res = vrsd::vrsd_select(f.cands, f.q, 2);
  EXPECT_EQ(res.algorithm, vrsd::AlgorithmTag::vrsd);
  EXPECT_EQ(res.selected_ids, (std::vector<std::string>{"t1", "t0"}));
  EXPECT_EQ(res.sum_vector, (Vector{8.0, 2.0}));
  EXPECT_EQ(res.score, 1.0);  // [8,2] is the query itself
  EXPECT_FALSE(res.zero_sum_warning);
  ASSERT_EQ(res.steps.size(), 2u);
  EXPECT_EQ(res.steps[0].chosen_id, "t1");
  EXPECT_DOUBLE_EQ(res.steps[0].objective_value, 0.9988681377244375);
  EXPECT_EQ(res.steps[0].candidates_scanned, 3u);
  EXPECT_EQ(res.steps[1].chosen_id, "t0");
  EXPECT_EQ(res.steps[1].objective_value, 1.0);
  EXPECT_EQ(res.steps[1].candidates_scanned, 2u);
  EXPECT_EQ(res.candidate_evaluations, 2u);
}

TEST(Vrsd, EvaluationCountClosedForm) {
  std::mt19937_64 rng(20240813);
  for (const auto [n, k] : {std::pair<std::size_t, std::size_t>{10, 4},
                            {7, 7},
                            {20, 1},
                            {15, 2}}) {
    const auto cands = testsupport::random_candidates(rng, n, 4);
    const auto q = testsupport::random_query(rng, 4);
    const auto res = vrsd::vrsd_select(cands, q, k);
    const std::uint64_t expected = (k - 1) * n - k * (k - 1) / 2;
    EXPECT_EQ(res.candidate_evaluations, expected) << "n=" << n << " k=" << k;
    for (std::size_t i = 0; i < res.steps.size(); ++i) {
      EXPECT_EQ(res.steps[i].candidates_scanned, n - i);
    }
  }
}

TEST(Vrsd, GreedyStepsMatchManualRescan) {
  std::mt19937_64 rng(20240814);
  const std::size_t n = 12;
  const std::size_t k = 5;
  const auto cands = testsupport::random_candidates(rng, n, 6);
  const auto q = testsupport::random_query(rng, 6);
  const auto res = vrsd::vrsd_select(cands, q, k);

  std::vector<std::size_t> chosen;
  std::vector<bool> used(n, false);
  // first pick: relevance argmax
  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (vrsd::cosine(cands[i].vector, q.vector) >
        vrsd::cosine(cands[best].vector, q.vector)) {
      best = i;
    }
  }
  chosen.push_back(best);
  used[best] = true;
  Vector run = cands[best].vector;
  for (std::size_t step = 1; step < k; ++step) {
    std::size_t pick = n;
    double pick_score = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      Vector trial = run;
      for (std::size_t c = 0; c < trial.size(); ++c) trial[c] += cands[i].vector[c];
      const double s = vrsd::cosine(trial, q.vector);
      if (pick == n || s > pick_score) {
        pick = i;
        pick_score = s;
      }
    }
    chosen.push_back(pick);
    used[pick] = true;
    for (std::size_t c = 0; c < run.size(); ++c) run[c] += cands[pick].vector[c];
  }
  std::vector<std::string> expected_ids;
  for (const std::size_t idx : chosen) expected_ids.push_back(cands[idx].id);
  EXPECT_EQ(res.selected_ids, expected_ids);
  EXPECT_EQ(res.sum_vector, run);
}

TEST(Vrsd, AllCancellingForcedPickWarns) {
  const CandidateSet cands({{"a", {1.0, 0.0}, std::nullopt},
                            {"b", {-1.0, 0.0}, std::nullopt}});
  const Query q{"q", {1.0, 0.0}};
  const auto res = vrsd::vrsd_select(cands, q, 2);
  EXPECT_EQ(res.selected_ids, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(res.sum_vector, (Vector{0.0, 0.0}));
  EXPECT_EQ(res.score, 0.0);
  EXPECT_TRUE(res.zero_sum_warning);
  EXPECT_EQ(res.steps[1].objective_value, 0.0);  // placeholder for the forced pick
}

TEST(Vrsd, RecoversAfterForcedCancellation) {
  // First pick is 'a'. At step 1 only 'b' cancels; 'c' keeps the sum alive.
  const CandidateSet cands({{"a", {1.0, 0.0}, std::nullopt},
                            {"b", {-1.0, 0.0}, std::nullopt},
                            {"c", {0.5, 0.0}, std::nullopt}});
  const Query q{"q", {1.0, 0.0}};
  const auto res = vrsd::vrsd_select(cands, q, 3);
  EXPECT_EQ(res.selected_ids, (std::vector<std::string>{"a", "c", "b"}));
  EXPECT_EQ(res.sum_vector, (Vector{0.5, 0.0}));
  EXPECT_EQ(res.score, 1.0);
  EXPECT_FALSE(res.zero_sum_warning);
}

TEST(Vrsd, QueryScaleInvariantSelection) {
  std::mt19937_64 rng(20240815);
  for (int trial = 0; trial < 10; ++trial) {
    const auto cands = testsupport::random_candidates(rng, 10, 5);
    const auto q = testsupport::random_query(rng, 5);
    Query scaled = q;
    for (double& c : scaled.vector) c *= 3.0;
    EXPECT_EQ(vrsd::vrsd_select(cands, scaled, 4).selected_ids,
              vrsd::vrsd_select(cands, q, 4).selected_ids);
  }
}

TEST(TopNFilter, KeepsMostRelevant) {
  const Fixture f;
  const auto top2 = vrsd::top_n_filter(f.cands, f.q, 2);
  ASSERT_EQ(top2.size(), 2u);
  EXPECT_EQ(top2[0].id, "t1");
  EXPECT_EQ(top2[1].id, "t0");
  // n larger than the set keeps everything
  EXPECT_EQ(vrsd::top_n_filter(f.cands, f.q, 20).size(), 3u);
  EXPECT_THROW(vrsd::top_n_filter(f.cands, f.q, 0), vrsd::Error);
}

TEST(SameSideScenario, BuildsUnitVectorsInOrder) {
  const vrsd::SameSideScenario s{std::numbers::pi / 18.0,
                                 {std::numbers::pi / 9.0, std::numbers::pi / 6.0}};
  const auto [cands, q] = vrsd::build_same_side_scenario(s);
  ASSERT_EQ(cands.size(), 3u);
  EXPECT_EQ(q.vector, (Vector{1.0, 0.0}));
  EXPECT_NEAR(vrsd::norm(cands[0].vector), 1.0, 1e-12);
  EXPECT_NEAR(vrsd::cosine(cands[0].vector, q.vector), std::cos(s.theta), 1e-12);
  // ascending angle means descending relevance
  EXPECT_GT(vrsd::cosine(cands[0].vector, q.vector),
            vrsd::cosine(cands[1].vector, q.vector));
  EXPECT_GT(vrsd::cosine(cands[1].vector, q.vector),
            vrsd::cosine(cands[2].vector, q.vector));
}

TEST(SameSideScenario, MmrHalfLambdaSelectsAscendingAngles) {
  const vrsd::SameSideScenario s{std::numbers::pi / 18.0,
                                 {std::numbers::pi / 9.0, std::numbers::pi / 6.0}};
  const auto [cands, q] = vrsd::build_same_side_scenario(s);
  const auto res = vrsd::mmr_select(cands, q, 3, {0.5});
  EXPECT_EQ(res.selected_ids, (std::vector<std::string>{"d0", "d1", "d2"}));
}

TEST(SameSideScenario, RejectsInvalidAngles) {
  using vrsd::build_same_side_scenario;
  using vrsd::InvalidScenario;
  constexpr double kHalfPi = std::numbers::pi / 2.0;
  EXPECT_THROW(build_same_side_scenario({0.0, {0.3}}), InvalidScenario);
  EXPECT_THROW(build_same_side_scenario({kHalfPi, {}}), InvalidScenario);
  EXPECT_THROW(build_same_side_scenario({0.2, {0.1}}), InvalidScenario);
  EXPECT_THROW(build_same_side_scenario({0.2, {0.4, 0.4}}), InvalidScenario);
  EXPECT_THROW(build_same_side_scenario({0.2, {0.4, kHalfPi}}), InvalidScenario);
}

}  // namespace
