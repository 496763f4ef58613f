#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "vrsd/metrics.hpp"
#include "vrsd/types.hpp"

namespace vrsd {

using json = nlohmann::json;

namespace detail {

inline bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t\r\n") == std::string::npos;
}

inline Vector parse_vector_field(const json& j, std::size_t lineno) {
  const auto it = j.find("vector");
  if (it == j.end() || !it->is_array()) {
    throw ParseError("line " + std::to_string(lineno) +
                     ": missing array field \"vector\"");
  }
  Vector v;
  v.reserve(it->size());
  for (const auto& x : *it) {
    if (!x.is_number()) {
      throw ParseError("line " + std::to_string(lineno) +
                       ": \"vector\" holds a non-numeric entry");
    }
    v.push_back(x.get<double>());
  }
  if (v.empty()) {
    throw ParseError("line " + std::to_string(lineno) + ": empty \"vector\"");
  }
  if (!all_finite(v)) {
    throw ParseError("line " + std::to_string(lineno) +
                     ": \"vector\" holds a non-finite value");
  }
  return v;
}

inline json parse_record_line(const std::string& line, std::size_t lineno) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
  }
  if (!j.is_object()) {
    throw ParseError("line " + std::to_string(lineno) + ": expected a JSON object");
  }
  return j;
}

inline std::string parse_id_field(const json& j, std::size_t lineno) {
  const auto it = j.find("id");
  if (it == j.end() || !it->is_string()) {
    throw ParseError("line " + std::to_string(lineno) +
                     ": missing string field \"id\"");
  }
  const std::string id = it->get<std::string>();
  if (id.empty()) {
    throw ParseError("line " + std::to_string(lineno) + ": empty \"id\"");
  }
  return id;
}

}  // namespace detail

// Reads JSONL embeddings: one {"id", "vector", optional "text"} object per
// line, blank lines skipped. Enforces distinct ids, uniform dimension, and
// nonzero norms, naming the offending line. With normalize_on_load each
// vector is rescaled to unit norm.
inline CandidateSet load_embeddings(const std::filesystem::path& path,
                                    bool normalize_on_load = false) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());

  std::vector<EmbeddingRecord> recs;
  std::unordered_map<std::string, std::size_t> first_line_of;
  std::size_t dim = 0;
  std::size_t dim_line = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::is_blank(line)) continue;
    const json j = detail::parse_record_line(line, lineno);
    EmbeddingRecord r;
    r.id = detail::parse_id_field(j, lineno);
    r.vector = detail::parse_vector_field(j, lineno);
    if (const auto it = j.find("text"); it != j.end()) {
      if (!it->is_string()) {
        throw ParseError("line " + std::to_string(lineno) +
                         ": \"text\" must be a string");
      }
      r.text = it->get<std::string>();
    }
    if (const auto [it, inserted] = first_line_of.emplace(r.id, lineno); !inserted) {
      throw ParseError("line " + std::to_string(lineno) + ": duplicate id '" + r.id +
                       "' (first seen at line " + std::to_string(it->second) + ")");
    }
    if (dim == 0) {
      dim = r.vector.size();
      dim_line = lineno;
    } else if (r.vector.size() != dim) {
      throw DimensionMismatch("line " + std::to_string(lineno) + ": dimension " +
                              std::to_string(r.vector.size()) + " does not match " +
                              std::to_string(dim) + " from line " +
                              std::to_string(dim_line));
    }
    if (dot(r.vector, r.vector) == 0.0) {
      throw ZeroNorm("line " + std::to_string(lineno) + ": zero-norm vector '" +
                     r.id + "'");
    }
    if (normalize_on_load) r.vector = normalize(r.vector);
    recs.push_back(std::move(r));
  }
  if (recs.empty()) throw EmptyInput("no records in " + path.string());
  return CandidateSet(std::move(recs));
}

// Reads JSONL queries: {"id", "vector"} per line. Same line-level checks as
// load_embeddings except dimensions may vary between queries.
inline std::vector<Query> load_queries(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());

  std::vector<Query> out;
  std::unordered_map<std::string, std::size_t> first_line_of;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::is_blank(line)) continue;
    const json j = detail::parse_record_line(line, lineno);
    Query q;
    q.id = detail::parse_id_field(j, lineno);
    q.vector = detail::parse_vector_field(j, lineno);
    if (const auto [it, inserted] = first_line_of.emplace(q.id, lineno); !inserted) {
      throw ParseError("line " + std::to_string(lineno) + ": duplicate id '" + q.id +
                       "' (first seen at line " + std::to_string(it->second) + ")");
    }
    if (dot(q.vector, q.vector) == 0.0) {
      throw ZeroNorm("line " + std::to_string(lineno) + ": zero-norm query '" +
                     q.id + "'");
    }
    out.push_back(std::move(q));
  }
  if (out.empty()) throw EmptyInput("no queries in " + path.string());
  return out;
}

inline std::string to_jsonl_line(const EmbeddingRecord& r) {
  json j;
  j["id"] = r.id;
  j["vector"] = r.vector;
  if (r.text) j["text"] = *r.text;
  return j.dump();
}

inline std::string to_jsonl_line(const Query& q) {
  json j;
  j["id"] = q.id;
  j["vector"] = q.vector;
  return j.dump();
}

inline std::string to_jsonl(const CandidateSet& set) {
  std::string out;
  for (const auto& r : set) {
    out += to_jsonl_line(r);
    out += '\n';
  }
  return out;
}

inline void to_json(json& j, const StepTrace& s) {
  j = json{{"step_index", s.step_index},
           {"chosen_id", s.chosen_id},
           {"objective_value", s.objective_value},
           {"candidates_scanned", s.candidates_scanned}};
}

inline void from_json(const json& j, StepTrace& s) {
  j.at("step_index").get_to(s.step_index);
  j.at("chosen_id").get_to(s.chosen_id);
  j.at("objective_value").get_to(s.objective_value);
  j.at("candidates_scanned").get_to(s.candidates_scanned);
}

inline void to_json(json& j, const SelectionResult& r) {
  j = json{{"algorithm", to_string(r.algorithm)},
           {"selected_ids", r.selected_ids},
           {"sum_vector", r.sum_vector},
           {"score", r.score},
           {"steps", r.steps},
           {"candidate_evaluations", r.candidate_evaluations},
           {"pair_similarity_evaluations", r.pair_similarity_evaluations},
           {"zero_sum_warning", r.zero_sum_warning}};
}

inline void from_json(const json& j, SelectionResult& r) {
  const auto tag = parse_algorithm_tag(j.at("algorithm").get<std::string>());
  if (!tag) {
    throw ParseError("unknown algorithm tag '" +
                     j.at("algorithm").get<std::string>() + "'");
  }
  r.algorithm = *tag;
  j.at("selected_ids").get_to(r.selected_ids);
  j.at("sum_vector").get_to(r.sum_vector);
  j.at("score").get_to(r.score);
  j.at("steps").get_to(r.steps);
  j.at("candidate_evaluations").get_to(r.candidate_evaluations);
  j.at("pair_similarity_evaluations").get_to(r.pair_similarity_evaluations);
  j.at("zero_sum_warning").get_to(r.zero_sum_warning);
}

inline void to_json(json& j, const EvaluationReport& r) {
  j = json{{"challenger", r.challenger_tag},
           {"baseline", r.baseline_tag},
           {"win_rate", r.win_rate},
           {"tie_rate", r.tie_rate},
           {"max_diff", r.max_diff},
           {"mean_by_algorithm", r.mean_by_algorithm},
           {"num_queries", r.num_queries}};
}

inline void from_json(const json& j, EvaluationReport& r) {
  j.at("challenger").get_to(r.challenger_tag);
  j.at("baseline").get_to(r.baseline_tag);
  j.at("win_rate").get_to(r.win_rate);
  j.at("tie_rate").get_to(r.tie_rate);
  j.at("max_diff").get_to(r.max_diff);
  j.at("mean_by_algorithm").get_to(r.mean_by_algorithm);
  j.at("num_queries").get_to(r.num_queries);
}

inline void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw IoError("failed writing " + path.string());
}

inline void save_selection(const SelectionResult& r, const std::filesystem::path& path) {
  write_text_file(path, json(r).dump(2) + "\n");
}

inline SelectionResult load_selection(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return json::parse(in).get<SelectionResult>();
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

inline void save_report(const EvaluationReport& r, const std::filesystem::path& path) {
  write_text_file(path, json(r).dump(2) + "\n");
}

inline EvaluationReport load_report(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return json::parse(in).get<EvaluationReport>();
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

// End-to-end settings for the evaluation harness: per query, keep the
// pool_size most relevant records, run every algorithm at selection size k,
// and compare the first algorithm against each of the others.
struct RunConfig {
  std::size_t k = 5;
  std::size_t pool_size = 20;
  std::vector<AlgorithmSpec> algorithms;
  bool normalize_on_load = false;
  std::filesystem::path embeddings_path;
  std::filesystem::path queries_path;
};

struct EvaluationRun {
  std::vector<QueryOutcome> outcomes;
  std::vector<EvaluationReport> reports;
};

inline EvaluationRun run_evaluation(const RunConfig& cfg) {
  if (cfg.algorithms.size() < 2) {
    throw Error("run_evaluation: need a challenger and at least one baseline");
  }
  if (cfg.k > cfg.pool_size) {
    throw KTooLarge("run_evaluation: k=" + std::to_string(cfg.k) +
                    " exceeds pool size " + std::to_string(cfg.pool_size));
  }
  const CandidateSet corpus = load_embeddings(cfg.embeddings_path, cfg.normalize_on_load);
  const std::vector<Query> queries = load_queries(cfg.queries_path);

  std::vector<SuiteCase> cases;
  cases.reserve(queries.size());
  for (const auto& q : queries) {
    cases.push_back({q, top_n_filter(corpus, q, cfg.pool_size)});
  }

  EvaluationRun run;
  run.outcomes = run_suite(cases, cfg.algorithms, cfg.k);
  const std::string challenger = cfg.algorithms.front().label();
  for (std::size_t i = 1; i < cfg.algorithms.size(); ++i) {
    run.reports.push_back(compare(run.outcomes, challenger, cfg.algorithms[i].label()));
  }
  return run;
}

}  // namespace vrsd
