// Command-line front end: generate synthetic populations, rank candidates,
// compute and verify stable matchings, and run benchmark sweeps.

#include <filesystem>
#include <iostream>
#include <sstream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ridematch/bench.hpp"
#include "ridematch/datagen.hpp"
#include "ridematch/io.hpp"
#include "ridematch/matching.hpp"
#include "ridematch/metrics.hpp"
#include "ridematch/rng.hpp"
#include "ridematch/topsis.hpp"

namespace fs = std::filesystem;
using namespace ridematch;

namespace {

// Exit codes, also documented in the README:
//   0 success
//   2 invalid input (malformed files, schema violations, bad flags)
//   3 empty input
//   4 infeasible request (e.g. gs on unequal sets)
//   5 resource-guard refusal
//   6 verification failed (matching is invalid or unstable)
//   1 unexpected internal error
constexpr int kOk = 0;
constexpr int kInternalError = 1;
constexpr int kInvalidInput = 2;
constexpr int kEmptyInput = 3;
constexpr int kInfeasible = 4;
constexpr int kResourceGuard = 5;
constexpr int kVerificationFailed = 6;

struct GlobalOptions {
  std::uint64_t seed = 0;
  std::string out = ".";
  std::string format = "csv";
  bool trace = false;
};

Matching run_algorithm(const std::string& name,
                       const PreferenceProfileSet& profiles,
                       std::vector<ProposalEvent>* trace) {
  if (name == "sm") return sm_match(profiles, trace);
  if (name == "gs") return gale_shapley(profiles, trace);
  if (name == "driver_opt") return driver_optimal(profiles, trace);
  if (name == "passenger_opt") return passenger_optimal(profiles, trace);
  throw InvalidInputError("unknown algorithm: " + name);
}

int cmd_gen(const GlobalOptions& global, const GenConfig& config) {
  GenConfig cfg = config;
  cfg.validate();
  Population pop = generate_population(cfg);
  fs::path dir(global.out);
  io::save_population_csv(pop, dir);
  std::vector<fs::path> files;
  for (const char* name :
       {"DriverProfile.csv", "DriverPreferences.csv", "DriverWeight.csv",
        "PassengerProfile.csv", "PassengerPreferences.csv",
        "PassengerWeight.csv"}) {
    files.push_back(dir / name);
  }
  io::write_manifest(cfg, dir, files);
  std::cout << "wrote " << files.size() << " tables + manifest.json to "
            << dir.string() << "\n";
  return kOk;
}

struct RankInputs {
  std::string dir;         // six-table directory
  std::string candidates;  // or explicit single-side files
  std::string prefs;
  std::string weights;
  std::string judgment;   // or a ready judgment matrix (single-user fixture)
  std::string evaluator;  // evaluator id for --judgment
  std::string side = "passenger";  // evaluator side for explicit files
  std::vector<std::string> methods = {"topsis"};
};

// One evaluator's rankings with the requested methods; returns results per
// method in the order requested.
std::vector<RankingResult> rank_user(const JudgmentMatrix& judgment,
                                     const WeightVector& weights,
                                     const std::vector<std::string>& methods,
                                     const GlobalOptions& global,
                                     const fs::path& trace_dir) {
  std::vector<RankingResult> results;
  for (const std::string& method : methods) {
    if (method == "topsis") {
      TopsisTrace trace;
      results.push_back(topsis_rank(judgment, weights,
                                    global.trace ? &trace : nullptr));
      if (global.trace) {
        io::write_file(trace_dir / (judgment.evaluator_id + "_topsis.json"),
                       io::to_json(trace));
      }
    } else if (method == "wsm") {
      results.push_back(wsm_rank(judgment, weights));
    } else {
      throw InvalidInputError("unknown ranking method: " + method);
    }
  }
  return results;
}

int cmd_rank(const GlobalOptions& global, const RankInputs& inputs) {
  fs::path out_dir(global.out);
  fs::create_directories(out_dir);
  fs::path trace_dir = out_dir / "traces";
  if (global.trace) fs::create_directories(trace_dir);

  // (evaluator, judgment, weights) units of work.
  struct Unit {
    JudgmentMatrix judgment;
    WeightVector weights;
  };
  std::vector<Unit> units;

  auto add_side = [&](const std::vector<UserProfile>& evaluators,
                      const std::map<std::string, PreferenceSpec>& prefs,
                      const std::map<std::string, WeightVector>& weights,
                      const std::vector<UserProfile>& candidates) {
    if (candidates.empty()) {
      throw EmptyInputError("no candidates to rank");
    }
    for (const UserProfile& evaluator : evaluators) {
      auto pref = prefs.find(evaluator.id);
      auto weight = weights.find(evaluator.id);
      if (pref == prefs.end() || weight == weights.end()) {
        throw InvalidInputError("no preferences/weights for " + evaluator.id);
      }
      units.push_back(Unit{
          build_judgment_matrix(evaluator, pref->second, candidates),
          weight->second});
    }
  };

  if (!inputs.judgment.empty()) {
    if (inputs.evaluator.empty() || inputs.weights.empty()) {
      throw InvalidInputError(
          "rank --judgment needs --evaluator and --weights");
    }
    Role evaluator_role = role_from_string(inputs.side);
    JudgmentMatrix judgment =
        io::load_judgment_csv(inputs.judgment, inputs.evaluator);
    if (judgment.rows() == 0) {
      throw EmptyInputError("judgment file " + inputs.judgment +
                            " has no rows");
    }
    auto weights = io::load_weights_csv(inputs.weights, evaluator_role);
    auto weight = weights.find(inputs.evaluator);
    if (weight == weights.end()) {
      throw InvalidInputError("no weight row for evaluator " +
                              inputs.evaluator);
    }
    units.push_back(Unit{std::move(judgment), weight->second});
  } else if (!inputs.dir.empty()) {
    Population pop = io::load_population_csv(inputs.dir);
    add_side(pop.passengers, pop.passenger_prefs, pop.passenger_weights,
             pop.drivers);
    add_side(pop.drivers, pop.driver_prefs, pop.driver_weights,
             pop.passengers);
  } else {
    if (inputs.candidates.empty() || inputs.prefs.empty() ||
        inputs.weights.empty()) {
      throw InvalidInputError(
          "rank needs either --dir or all of --candidates/--prefs/--weights");
    }
    Role evaluator_role = role_from_string(inputs.side);
    Role candidate_role =
        evaluator_role == Role::driver ? Role::passenger : Role::driver;
    auto candidates = io::load_profiles_csv(inputs.candidates, candidate_role);
    auto prefs = io::load_preferences_csv(inputs.prefs, evaluator_role);
    auto weights = io::load_weights_csv(inputs.weights, evaluator_role);
    if (candidates.empty()) {
      throw EmptyInputError("candidate file " + inputs.candidates +
                            " has no rows");
    }
    for (const auto& [id, pref] : prefs) {
      auto weight = weights.find(id);
      if (weight == weights.end()) {
        throw InvalidInputError("no weight row for evaluator " + id);
      }
      UserProfile evaluator;
      evaluator.id = id;
      evaluator.role = evaluator_role;
      units.push_back(Unit{build_judgment_matrix(evaluator, pref, candidates),
                           weight->second});
    }
  }

  if (units.empty()) {
    throw EmptyInputError("no evaluators in input");
  }

  std::ostringstream rankings_csv;
  rankings_csv << "evaluator_id,method,rank,candidate_id,score\n";
  nlohmann::ordered_json rankings_json = nlohmann::ordered_json::array();
  std::ostringstream superiority_csv;
  superiority_csv << "evaluator_id,topsis_head,wsm_head,"
                     "w_topsis_over_wsm,w_wsm_over_topsis\n";
  bool both_methods = false;

  for (const Unit& unit : units) {
    std::vector<RankingResult> results =
        rank_user(unit.judgment, unit.weights, inputs.methods, global,
                  trace_dir);
    const RankingResult* topsis = nullptr;
    const RankingResult* wsm = nullptr;
    for (const RankingResult& r : results) {
      std::string csv = io::to_csv(r);
      rankings_csv << csv.substr(csv.find('\n') + 1);  // drop header
      rankings_json.push_back(
          nlohmann::ordered_json::parse(io::to_json(r)));
      if (r.method == RankMethod::topsis) topsis = &r;
      if (r.method == RankMethod::wsm) wsm = &r;
    }
    // Weight Superiority between the two methods' list heads.
    if (topsis != nullptr && wsm != nullptr) {
      both_methods = true;
      const std::string& t_head = topsis->preference_list.front();
      const std::string& w_head = wsm->preference_list.front();
      double forward =
          weight_superiority(unit.judgment, t_head, w_head, unit.weights);
      double backward =
          weight_superiority(unit.judgment, w_head, t_head, unit.weights);
      superiority_csv << unit.judgment.evaluator_id << ',' << t_head << ','
                      << w_head << ',' << io::format_double(forward) << ','
                      << io::format_double(backward) << '\n';
    }
  }

  if (global.format == "json") {
    io::write_file(out_dir / "rankings.json", rankings_json.dump(2) + "\n");
  } else {
    io::write_file(out_dir / "rankings.csv", rankings_csv.str());
  }
  if (both_methods) {
    io::write_file(out_dir / "superiority.csv", superiority_csv.str());
  }
  std::cout << "ranked " << units.size() << " evaluator(s) into "
            << out_dir.string() << "\n";
  return kOk;
}

int cmd_match(const GlobalOptions& global, const std::string& input,
              const std::string& algorithm, const std::string& values_file) {
  PreferenceProfileSet profiles = io::load_profile_set(input);
  std::vector<ProposalEvent> events;
  Matching m = run_algorithm(algorithm, profiles,
                             global.trace ? &events : nullptr);

  FormulationReport report = verify_formulation(profiles, m);
  if (!report.ok) {
    std::cerr << "internal error: " << algorithm
              << " produced an invalid matching\n";
    for (const auto& v : report.violations) std::cerr << "  " << v << "\n";
    return kInternalError;
  }

  std::optional<ValueMatrix> values;
  if (!values_file.empty()) {
    values = io::value_matrix_from_table(io::load_table_csv(values_file));
  }

  fs::path out_dir(global.out);
  fs::create_directories(out_dir);
  io::save_matching(m, out_dir / "matching.json");
  if (global.trace) {
    io::write_file(out_dir / "proposals.json", io::to_json(events));
  }
  std::cout << io::to_json(m);

  if (m.pairs.empty()) {
    // An empty side yields an empty matching; every metric is undefined.
    std::cout << "pairs=0 (metrics undefined for an empty matching)\n";
    return kOk;
  }

  MetricReport metrics =
      evaluate_matching(profiles, m, values ? &*values : nullptr);
  io::write_file(out_dir / "metrics.csv",
                 io::metric_csv_header() +
                     io::metric_csv_row(fs::path(input).stem().string(),
                                        algorithm, profiles.drivers.size(),
                                        profiles.passengers.size(), metrics));
  std::cout << "pairs=" << m.pairs.size() << " regret=" << metrics.regret_cost
            << " egalitarian=" << metrics.egalitarian_cost
            << " sex_equality=" << metrics.sex_equality_cost;
  if (metrics.price_of_stability) {
    std::cout << " delta=" << io::format_double(*metrics.price_of_stability);
  }
  std::cout << "\n";
  return kOk;
}

int cmd_verify(const std::string& input, const std::string& matching_file) {
  PreferenceProfileSet profiles = io::load_profile_set(input);
  Matching m = io::load_matching(matching_file);
  FormulationReport report = verify_formulation(profiles, m);
  if (report.ok) {
    std::cout << "matching is valid and stable (" << m.pairs.size()
              << " pairs)\n";
    return kOk;
  }
  std::cout << "matching FAILS verification:\n";
  for (const auto& v : report.violations) {
    std::cout << "  " << v << "\n";
  }
  for (const auto& bp : report.blocking_pairs) {
    std::cout << "  blocking pair: (" << bp.driver << ", " << bp.passenger
              << ")  current: driver->"
              << bp.driver_current.value_or("(unmatched)") << ", passenger->"
              << bp.passenger_current.value_or("(unmatched)") << "\n";
  }
  return kVerificationFailed;
}

int cmd_bench(const GlobalOptions& global, ExperimentPlan plan) {
  if (plan.output_dir.empty()) plan.output_dir = global.out;
  plan.validate();
  std::vector<BenchRow> rows = run_bench(plan);
  write_bench_outputs(plan, rows, plan.output_dir);
  std::cout << "bench: " << rows.size() << " rows over " << plan.sizes.size()
            << " sizes x " << plan.trials << " trials -> " << plan.output_dir
            << "\n";
  return kOk;
}

std::vector<std::pair<int, int>> parse_sizes(
    const std::vector<std::string>& tokens) {
  std::vector<std::pair<int, int>> sizes;
  for (const std::string& token : tokens) {
    auto cross = token.find('x');
    try {
      if (cross == std::string::npos) {
        int n = std::stoi(token);
        sizes.emplace_back(n, n);
      } else {
        sizes.emplace_back(std::stoi(token.substr(0, cross)),
                           std::stoi(token.substr(cross + 1)));
      }
    } catch (const std::exception&) {
      throw InvalidInputError("bad size token: " + token);
    }
  }
  return sizes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"social-preference rideshare matching toolkit"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--seed", global.seed, "random seed")->capture_default_str();
  app.add_option("--out", global.out, "output directory")
      ->capture_default_str();
  app.add_option("--format", global.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_flag("--trace", global.trace,
               "emit step traces / proposal event logs");

  // gen
  GenConfig gen_cfg;
  std::string gen_skew = "uniform";
  auto* gen = app.add_subcommand("gen", "generate a synthetic population");
  gen->fallthrough();
  gen->add_option("--drivers", gen_cfg.n_drivers, "number of drivers")
      ->required();
  gen->add_option("--passengers", gen_cfg.n_passengers,
                  "number of passengers")
      ->required();
  gen->add_option("--skew", gen_skew, "marginal skew")
      ->check(CLI::IsMember({"uniform", "clustered"}));
  gen->add_option("--age-min", gen_cfg.age_min, "minimum age");
  gen->add_option("--age-max", gen_cfg.age_max, "maximum age");
  gen->add_option("--feedback-alpha", gen_cfg.feedback_alpha,
                  "feedback Beta alpha");
  gen->add_option("--feedback-beta", gen_cfg.feedback_beta,
                  "feedback Beta beta");
  gen->add_option("--clusters", gen_cfg.n_clusters, "taste clusters");
  gen->add_option("--adherence", gen_cfg.cluster_adherence,
                  "cluster adherence probability");

  // rank
  RankInputs rank_inputs;
  auto* rank = app.add_subcommand("rank", "rank candidates per user");
  rank->fallthrough();
  rank->add_option("--dir", rank_inputs.dir,
                   "directory with the six population tables");
  rank->add_option("--candidates", rank_inputs.candidates,
                   "candidate profile CSV");
  rank->add_option("--prefs", rank_inputs.prefs, "evaluator preference CSV");
  rank->add_option("--weights", rank_inputs.weights, "evaluator weight CSV");
  rank->add_option("--judgment", rank_inputs.judgment,
                   "ready judgment-matrix CSV (single-user fixture)");
  rank->add_option("--evaluator", rank_inputs.evaluator,
                   "evaluator id for --judgment");
  rank->add_option("--side", rank_inputs.side, "evaluator side")
      ->check(CLI::IsMember({"driver", "passenger"}));
  rank->add_option("--method", rank_inputs.methods,
                   "ranking method (repeatable)")
      ->check(CLI::IsMember({"topsis", "wsm"}));

  // match
  std::string match_input, match_algorithm = "sm", match_values;
  auto* match = app.add_subcommand("match", "compute a stable matching");
  match->fallthrough();
  match->add_option("--input", match_input, "preference-profile JSON")
      ->required();
  match->add_option("--algorithm", match_algorithm, "matching algorithm")
      ->check(CLI::IsMember({"sm", "gs", "driver_opt", "passenger_opt"}));
  match->add_option("--values", match_values,
                    "pair-value matrix CSV (enables objective and delta)");

  // verify
  std::string verify_input, verify_matching;
  auto* verify = app.add_subcommand("verify", "verify a matching");
  verify->fallthrough();
  verify->add_option("--input", verify_input, "preference-profile JSON")
      ->required();
  verify->add_option("--matching", verify_matching, "matching JSON")
      ->required();

  // bench
  std::string bench_plan_file;
  std::vector<std::string> bench_sizes;
  int bench_trials = 30;
  std::vector<std::string> bench_algorithms;
  auto* bench = app.add_subcommand("bench", "run a benchmark sweep");
  bench->fallthrough();
  bench->add_option("--plan", bench_plan_file, "plan JSON file");
  bench->add_option("--sizes", bench_sizes,
                    "sizes, e.g. 5 10 50 or 500x5 500x10");
  bench->add_option("--trials", bench_trials, "trials per size")
      ->capture_default_str();
  bench->add_option("--algorithms", bench_algorithms,
                    "algorithms (sm, gs, driver_opt, passenger_opt)");
  bool bench_oracle_check = false;
  bench->add_flag("--oracle-check", bench_oracle_check,
                  "cross-check outputs against exhaustive enumeration "
                  "(sides <= 6 only)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInvalidInput;
  }

  try {
    if (gen->parsed()) {
      gen_cfg.seed = global.seed;
      gen_cfg.skew = skew_from_string(gen_skew);
      return cmd_gen(global, gen_cfg);
    }
    if (rank->parsed()) {
      return cmd_rank(global, rank_inputs);
    }
    if (match->parsed()) {
      return cmd_match(global, match_input, match_algorithm, match_values);
    }
    if (verify->parsed()) {
      return cmd_verify(verify_input, verify_matching);
    }
    if (bench->parsed()) {
      ExperimentPlan plan;
      if (!bench_plan_file.empty()) {
        plan = plan_from_json(io::read_file(bench_plan_file));
      } else {
        plan.sizes = parse_sizes(bench_sizes);
        plan.trials = bench_trials;
        if (!bench_algorithms.empty()) plan.algorithms = bench_algorithms;
        plan.seed = global.seed;
        plan.oracle_check = bench_oracle_check;
      }
      if (plan.output_dir.empty()) plan.output_dir = global.out;
      return cmd_bench(global, plan);
    }
  } catch (const EmptyInputError& e) {
    std::cerr << "error (empty input): " << e.what() << "\n";
    return kEmptyInput;
  } catch (const InfeasibleError& e) {
    std::cerr << "error (infeasible): " << e.what() << "\n";
    return kInfeasible;
  } catch (const ResourceGuardError& e) {
    std::cerr << "error (resource guard): " << e.what() << "\n";
    return kResourceGuard;
  } catch (const UndefinedMetricError& e) {
    std::cerr << "error (undefined metric): " << e.what() << "\n";
    return kInvalidInput;
  } catch (const InvalidInputError& e) {
    std::cerr << "error (invalid input): " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternalError;
  }
  return kInvalidInput;
}
