// Command-line driver for the sum-vector retrieval toolkit.
//
// Subcommands: retrieve, evaluate, reduce, oracle, gen. Output is JSON on
// stdout unless --out redirects it to a file. Exit codes: 0 success, 1 data
// error, 2 usage error, 3 enumeration or instance size cap exceeded.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vrsd/vrsd.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDataError = 1;
constexpr int kExitUsageError = 2;
constexpr int kExitCapExceeded = 3;

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kExitUsageError;
}

void emit(const vrsd::json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    vrsd::write_text_file(out_path, j.dump(2) + "\n");
  }
}

vrsd::Query load_single_query(const std::string& path) {
  const auto queries = vrsd::load_queries(path);
  if (queries.size() != 1) {
    throw vrsd::Error("query file " + path + " must contain exactly one record, got " +
                      std::to_string(queries.size()));
  }
  return queries.front();
}

struct RetrieveOpts {
  std::string embeddings;
  std::string query;
  std::string algo;
  std::size_t k = 0;
  std::size_t n = 20;
  double lambda = 0.5;
  bool lambda_given = false;
  std::string out;
};

int run_retrieve(const RetrieveOpts& o) {
  if (o.k > o.n) {
    return usage_error("--k must not exceed --n (" + std::to_string(o.k) + " > " +
                       std::to_string(o.n) + ")");
  }
  if ((o.algo == "mmr") != o.lambda_given) {
    return usage_error(o.algo == "mmr" ? "--algo mmr requires --lambda"
                                       : "--lambda is only valid with --algo mmr");
  }
  const vrsd::CandidateSet corpus = vrsd::load_embeddings(o.embeddings);
  const vrsd::Query q = load_single_query(o.query);
  const vrsd::CandidateSet pool = vrsd::top_n_filter(corpus, q, o.n);

  vrsd::SelectionResult sel;
  if (o.algo == "cosine") {
    sel = vrsd::cosine_topk(pool, q, o.k);
  } else if (o.algo == "mmr") {
    sel = vrsd::mmr_select(pool, q, o.k, {o.lambda});
  } else if (o.algo == "vrsd") {
    sel = vrsd::vrsd_select(pool, q, o.k);
  } else {
    sel = vrsd::exact_select(pool, q, o.k);
  }
  emit(vrsd::json(sel), o.out);
  return kExitOk;
}

struct EvaluateOpts {
  std::string embeddings;
  std::string queries;
  std::size_t k = 5;
  std::size_t n = 20;
  std::vector<double> lambdas = {0.0, 0.5, 1.0};
  std::string out;
  bool pretty = false;
};

int run_evaluate(const EvaluateOpts& o) {
  if (o.k > o.n) {
    return usage_error("--k must not exceed --n (" + std::to_string(o.k) + " > " +
                       std::to_string(o.n) + ")");
  }
  if (o.lambdas.empty()) return usage_error("--lambdas must name at least one value");

  vrsd::RunConfig cfg;
  cfg.k = o.k;
  cfg.pool_size = o.n;
  cfg.embeddings_path = o.embeddings;
  cfg.queries_path = o.queries;
  cfg.algorithms.push_back({vrsd::AlgorithmTag::vrsd, std::nullopt});
  for (const double lam : o.lambdas) {
    cfg.algorithms.push_back({vrsd::AlgorithmTag::mmr, lam});
  }
  const vrsd::EvaluationRun run = vrsd::run_evaluation(cfg);
  const std::string table = vrsd::render_comparison_table(run.reports);

  vrsd::json j;
  j["k"] = o.k;
  j["n"] = o.n;
  j["lambdas"] = o.lambdas;
  j["num_queries"] = run.outcomes.size();
  j["reports"] = run.reports;
  j["table"] = table;
  if (!o.out.empty()) {
    vrsd::write_text_file(o.out, j.dump(2) + "\n");
    if (o.pretty) std::cout << table;
  } else if (o.pretty) {
    std::cout << table;
  } else {
    std::cout << j.dump(2) << "\n";
  }
  return kExitOk;
}

struct ReduceOpts {
  std::vector<std::int64_t> set;
  std::int64_t target = 0;
  std::size_t k = 0;
  bool solve = false;
};

int run_reduce(const ReduceOpts& o) {
  if (o.k > o.set.size()) {
    return usage_error("--k must not exceed the set size (" + std::to_string(o.k) +
                       " > " + std::to_string(o.set.size()) + ")");
  }
  const vrsd::SubsetSumInstance inst{o.set, o.target, o.k};
  const vrsd::ReducedInstance red = vrsd::reduce(inst);

  vrsd::json j;
  j["set"] = o.set;
  j["target"] = o.target;
  j["k"] = o.k;
  auto& cand_list = j["candidates"] = vrsd::json::array();
  for (const auto& c : red.candidates) {
    cand_list.push_back({static_cast<std::int64_t>(c.x), static_cast<std::int64_t>(c.y)});
  }
  j["query"] = {static_cast<std::int64_t>(red.query.x),
                static_cast<std::int64_t>(red.query.y)};

  if (o.solve) {
    const vrsd::DecisionOutcome outcome = vrsd::solve_reduced(red);
    if (outcome.is_yes) {
      // Map the witness ids back to candidate indices, then lift to source
      // positions, re-certifying along the way.
      const vrsd::CandidateSet cands = vrsd::to_candidate_set(red);
      std::vector<std::size_t> indices;
      for (const auto& id : outcome.witness_ids) {
        for (std::size_t i = 0; i < cands.size(); ++i) {
          if (cands[i].id == id) {
            indices.push_back(i);
            break;
          }
        }
      }
      const std::vector<std::size_t> positions = vrsd::lift_certificate(red, indices);
      j["answer"] = "YES";
      j["witness_positions"] = positions;
      auto& values = j["witness_values"] = vrsd::json::array();
      for (const std::size_t p : positions) values.push_back(o.set[p]);
      j["alpha"] = vrsd::to_string(*outcome.alpha);
    } else {
      j["answer"] = "NO";
    }
  }
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

struct OracleOpts {
  std::string embeddings;
  std::string query;
  std::size_t k = 0;
  bool fix_first = false;
  std::uint64_t cap = 5'000'000;
  std::string compare;
};

int run_oracle(const OracleOpts& o) {
  const vrsd::CandidateSet cands = vrsd::load_embeddings(o.embeddings);
  const vrsd::Query q = load_single_query(o.query);
  const vrsd::OracleMode mode{.fix_first = o.fix_first, .enumeration_cap = o.cap};
  const vrsd::SelectionResult sel = vrsd::exact_select(cands, q, o.k, mode);

  if (o.compare.empty()) {
    std::cout << vrsd::json(sel).dump(2) << "\n";
    return kExitOk;
  }
  const vrsd::SelectionResult other = vrsd::load_selection(o.compare);
  vrsd::json j;
  j["selection"] = sel;
  j["compared_algorithm"] = vrsd::to_string(other.algorithm);
  j["compared_score"] = other.score;
  j["optimality_gap"] = sel.score - other.score;
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

struct GenOpts {
  std::uint64_t seed = 42;
  std::size_t num = 1000;
  std::size_t dim = 32;
  double spread = 0.3;
  double distractors = 0.5;
  std::string out_prefix;
};

int run_gen(const GenOpts& o) {
  vrsd::SyntheticSpec spec;
  spec.seed = o.seed;
  spec.num_records = o.num;
  spec.dimension = o.dim;
  spec.pool_size = o.num;  // gen emits the full corpus; filtering happens downstream
  spec.cluster_spread = o.spread;
  spec.distractor_fraction = o.distractors;
  const auto [cands, query] = vrsd::generate_synthetic(spec);

  const std::string emb_path = o.out_prefix + ".embeddings.jsonl";
  const std::string query_path = o.out_prefix + ".query.jsonl";
  vrsd::write_text_file(emb_path, vrsd::to_jsonl(cands));
  vrsd::write_text_file(query_path, vrsd::to_jsonl_line(query) + "\n");

  vrsd::json j;
  j["embeddings"] = emb_path;
  j["query"] = query_path;
  j["records"] = cands.size();
  j["dimension"] = cands.dim();
  j["seed"] = o.seed;
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vrsd: sum-vector retrieval toolkit"};
  app.require_subcommand(1);

  RetrieveOpts ro;
  CLI::App* retrieve = app.add_subcommand("retrieve", "Select k records for one query");
  retrieve->add_option("--embeddings", ro.embeddings, "JSONL embeddings file")->required();
  retrieve->add_option("--query", ro.query, "JSONL file with exactly one query")->required();
  retrieve->add_option("--algo", ro.algo, "Selection algorithm")
      ->required()
      ->check(CLI::IsMember({"cosine", "mmr", "vrsd", "exact"}));
  retrieve->add_option("--k", ro.k, "Number of records to select")
      ->required()
      ->check(CLI::PositiveNumber);
  retrieve->add_option("--n", ro.n, "Pool size: keep the n most relevant records")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  CLI::Option* lambda_opt =
      retrieve->add_option("--lambda", ro.lambda, "MMR trade-off weight in [0, 1]")
          ->check(CLI::Range(0.0, 1.0));
  retrieve->add_option("--out", ro.out, "Write the selection JSON here instead of stdout");

  EvaluateOpts eo;
  CLI::App* evaluate = app.add_subcommand("evaluate", "Compare vrsd against mmr over a query suite");
  evaluate->add_option("--embeddings", eo.embeddings, "JSONL embeddings file")->required();
  evaluate->add_option("--queries", eo.queries, "JSONL queries file")->required();
  evaluate->add_option("--k", eo.k, "Number of records to select")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  evaluate->add_option("--n", eo.n, "Pool size per query")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  evaluate->add_option("--lambdas", eo.lambdas, "Comma-separated MMR lambdas")
      ->delimiter(',')
      ->check(CLI::Range(0.0, 1.0));
  evaluate->add_option("--out", eo.out, "Write the report JSON here instead of stdout");
  evaluate->add_flag("--pretty", eo.pretty, "Print the comparison table instead of JSON");

  ReduceOpts co;
  CLI::App* reduce = app.add_subcommand("reduce", "Map a k-subset-sum instance to a retrieval instance");
  reduce->add_option("--set", co.set, "Comma-separated integers")->delimiter(',')->required();
  reduce->add_option("--target", co.target, "Target sum")->required();
  reduce->add_option("--k", co.k, "Subset size")->required()->check(CLI::PositiveNumber);
  reduce->add_flag("--solve", co.solve, "Decide the instance exactly and print a witness");

  OracleOpts oo;
  CLI::App* oracle = app.add_subcommand("oracle", "Exhaustive optimum of the sum-vector objective");
  oracle->add_option("--embeddings", oo.embeddings, "JSONL embeddings file")->required();
  oracle->add_option("--query", oo.query, "JSONL file with exactly one query")->required();
  oracle->add_option("--k", oo.k, "Number of records to select")
      ->required()
      ->check(CLI::PositiveNumber);
  oracle->add_flag("--fix-first", oo.fix_first,
                   "Force the relevance argmax into every enumerated subset");
  oracle->add_option("--cap", oo.cap, "Abort if more subsets than this would be enumerated")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  oracle->add_option("--compare", oo.compare,
                     "Selection JSON to compute the optimality gap against");

  GenOpts go;
  CLI::App* gen = app.add_subcommand("gen", "Generate a seeded synthetic corpus");
  gen->add_option("--seed", go.seed, "RNG seed")->capture_default_str();
  gen->add_option("--num", go.num, "Number of records")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  gen->add_option("--dim", go.dim, "Vector dimension")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
  gen->add_option("--spread", go.spread, "Cluster angular spread, radians")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  gen->add_option("--distractors", go.distractors, "Fraction of uniform-sphere records")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--out-prefix", go.out_prefix, "Output path prefix")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsageError;
  }
  ro.lambda_given = lambda_opt->count() > 0;

  try {
    if (retrieve->parsed()) return run_retrieve(ro);
    if (evaluate->parsed()) return run_evaluate(eo);
    if (reduce->parsed()) return run_reduce(co);
    if (oracle->parsed()) return run_oracle(oo);
    if (gen->parsed()) return run_gen(go);
  } catch (const vrsd::EnumerationCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const vrsd::InstanceTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const vrsd::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDataError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDataError;
  }
  return usage_error("no subcommand given");
}
