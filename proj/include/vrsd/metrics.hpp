#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "vrsd/oracle.hpp"
#include "vrsd/select.hpp"

namespace vrsd {

// Scores within this band count as a tie when comparing algorithms.
inline constexpr double kScoreTieTolerance = 1e-12;

// Per-query record of each algorithm's sum-vector cosine against the query.
struct QueryOutcome {
  std::string query_id;
  std::map<std::string, double> scores;  // algorithm label -> score

  friend bool operator==(const QueryOutcome&, const QueryOutcome&) = default;
};

// Pairwise comparison of two algorithm labels over a query suite.
struct EvaluationReport {
  std::string challenger_tag;
  std::string baseline_tag;
  double win_rate = 0.0;  // fraction of queries the challenger strictly wins
  double tie_rate = 0.0;  // fraction with |difference| <= kScoreTieTolerance
  double max_diff = 0.0;  // largest signed challenger - baseline difference
  std::map<std::string, double> mean_by_algorithm;
  std::size_t num_queries = 0;

  friend bool operator==(const EvaluationReport&, const EvaluationReport&) = default;
};

inline EvaluationReport compare(std::span<const QueryOutcome> outcomes,
                                const std::string& challenger,
                                const std::string& baseline) {
  if (outcomes.empty()) throw EmptyInput("compare: no query outcomes");
  EvaluationReport rep;
  rep.challenger_tag = challenger;
  rep.baseline_tag = baseline;
  rep.num_queries = outcomes.size();

  std::size_t wins = 0;
  std::size_t ties = 0;
  double max_diff = -std::numeric_limits<double>::infinity();
  double sum_c = 0.0;
  double sum_b = 0.0;
  for (const auto& o : outcomes) {
    const auto ic = o.scores.find(challenger);
    if (ic == o.scores.end()) {
      throw MissingTag("compare: query '" + o.query_id + "' has no score for '" +
                       challenger + "'");
    }
    const auto ib = o.scores.find(baseline);
    if (ib == o.scores.end()) {
      throw MissingTag("compare: query '" + o.query_id + "' has no score for '" +
                       baseline + "'");
    }
    const double c = ic->second;
    const double b = ib->second;
    const double diff = c - b;
    if (std::abs(diff) <= kScoreTieTolerance) {
      ++ties;
    } else if (diff > 0.0) {
      ++wins;
    }
    if (diff > max_diff) max_diff = diff;
    sum_c += c;
    sum_b += b;
  }
  const double n = static_cast<double>(outcomes.size());
  rep.win_rate = static_cast<double>(wins) / n;
  rep.tie_rate = static_cast<double>(ties) / n;
  rep.max_diff = max_diff;
  rep.mean_by_algorithm[challenger] = sum_c / n;
  rep.mean_by_algorithm[baseline] = sum_b / n;
  return rep;
}

// Shortest decimal string that parses back to exactly the same double.
inline std::string format_shortest(double v) {
  char buf[40];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

// One algorithm configuration for a suite run. lambda applies to mmr only.
struct AlgorithmSpec {
  AlgorithmTag kind = AlgorithmTag::vrsd;
  std::optional<double> lambda;

  // Label used to key scores: "vrsd", "cosine", "exact", "mmr(lambda=0.5)".
  std::string label() const {
    if (kind == AlgorithmTag::mmr) {
      return "mmr(lambda=" + format_shortest(lambda.value_or(0.5)) + ")";
    }
    return to_string(kind);
  }
};

inline SelectionResult run_algorithm(const CandidateSet& pool, const Query& q,
                                     std::size_t k, const AlgorithmSpec& spec) {
  switch (spec.kind) {
    case AlgorithmTag::cosine:
      return cosine_topk(pool, q, k);
    case AlgorithmTag::mmr:
      if (!spec.lambda) throw InvalidLambda("mmr requires a lambda");
      return mmr_select(pool, q, k, {*spec.lambda});
    case AlgorithmTag::vrsd:
      return vrsd_select(pool, q, k);
    case AlgorithmTag::exact:
      return exact_select(pool, q, k);
  }
  throw Error("run_algorithm: unknown algorithm tag");
}

// One query with its (already filtered) candidate pool.
struct SuiteCase {
  Query query;
  CandidateSet pool;
};

// Runs every algorithm on every case. Failures are rethrown with the query
// id and algorithm label prefixed so suite-level errors are attributable.
inline std::vector<QueryOutcome> run_suite(std::span<const SuiteCase> cases,
                                           std::span<const AlgorithmSpec> algorithms,
                                           std::size_t k) {
  if (cases.empty()) throw EmptyInput("run_suite: no cases");
  if (algorithms.empty()) throw EmptyInput("run_suite: no algorithms");
  std::vector<QueryOutcome> out;
  out.reserve(cases.size());
  for (const auto& sc : cases) {
    QueryOutcome o;
    o.query_id = sc.query.id;
    for (const auto& algo : algorithms) {
      try {
        o.scores[algo.label()] = run_algorithm(sc.pool, sc.query, k, algo).score;
      } catch (const std::exception& e) {
        throw Error("run_suite: query '" + sc.query.id + "', " + algo.label() +
                    ": " + e.what());
      }
    }
    out.push_back(std::move(o));
  }
  return out;
}

// "92.5%" style, one decimal place.
inline std::string format_percent(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f%%", fraction * 100.0);
  return buf;
}

// "0.108" style, three decimal places.
inline std::string format_fixed3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

// Plain-text comparison table. The challenger appears first with its mean
// score; each baseline row shows the challenger's win rate against it, the
// largest challenger-minus-baseline difference, and the baseline's mean.
// All reports must share one challenger.
inline std::string render_comparison_table(std::span<const EvaluationReport> reports) {
  if (reports.empty()) throw EmptyInput("render_comparison_table: no reports");
  const std::string& challenger = reports.front().challenger_tag;

  std::size_t name_width = std::string("algorithm").size();
  name_width = std::max(name_width, challenger.size());
  for (const auto& r : reports) name_width = std::max(name_width, r.baseline_tag.size());

  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(name_width)) << "algorithm"
     << std::right << std::setw(10) << "win.rate" << std::setw(10) << "max-diff"
     << std::setw(8) << "mean" << '\n';
  const auto mean_of = [](const EvaluationReport& r, const std::string& tag) {
    const auto it = r.mean_by_algorithm.find(tag);
    if (it == r.mean_by_algorithm.end()) {
      throw MissingTag("render_comparison_table: report lacks mean for '" + tag + "'");
    }
    return it->second;
  };
  os << std::left << std::setw(static_cast<int>(name_width)) << challenger
     << std::right << std::setw(10) << "-" << std::setw(10) << "-" << std::setw(8)
     << format_fixed3(mean_of(reports.front(), challenger)) << '\n';
  for (const auto& r : reports) {
    if (r.challenger_tag != challenger) {
      throw Error("render_comparison_table: mixed challengers '" + challenger +
                  "' and '" + r.challenger_tag + "'");
    }
    os << std::left << std::setw(static_cast<int>(name_width)) << r.baseline_tag
       << std::right << std::setw(10) << format_percent(r.win_rate) << std::setw(10)
       << format_fixed3(r.max_diff) << std::setw(8)
       << format_fixed3(mean_of(r, r.baseline_tag)) << '\n';
  }
  return os.str();
}

}  // namespace vrsd
