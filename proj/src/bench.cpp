#include "ridematch/bench.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ridematch/assignment.hpp"
#include "ridematch/datagen.hpp"
#include "ridematch/io.hpp"
#include "ridematch/rng.hpp"

namespace ridematch {

namespace {

const std::set<std::string> kKnownAlgorithms = {"sm", "gs", "driver_opt",
                                                "passenger_opt"};

Matching run_algorithm(const std::string& name,
                       const PreferenceProfileSet& profiles) {
  if (name == "sm") return sm_match(profiles);
  if (name == "gs") return gale_shapley(profiles);
  if (name == "driver_opt") return driver_optimal(profiles);
  if (name == "passenger_opt") return passenger_optimal(profiles);
  throw InvalidInputError("unknown algorithm: " + name);
}

}  // namespace

std::string_view to_string(PlanMode m) {
  switch (m) {
    case PlanMode::rank:
      return "rank";
    case PlanMode::match:
      return "match";
    case PlanMode::verify:
      return "verify";
    case PlanMode::bench:
      return "bench";
    default:
      return "scenario";
  }
}

PlanMode plan_mode_from_string(std::string_view s) {
  for (PlanMode m : {PlanMode::rank, PlanMode::match, PlanMode::verify,
                     PlanMode::bench, PlanMode::scenario}) {
    if (to_string(m) == s) return m;
  }
  throw InvalidInputError("unknown plan mode: " + std::string(s));
}

void ExperimentPlan::validate() const {
  if (mode != PlanMode::bench) {
    throw InvalidInputError("only bench-mode plans can be executed here");
  }
  if (sizes.empty()) {
    throw InvalidInputError("plan has no sizes");
  }
  if (trials < 1) {
    throw InvalidInputError("plan needs at least one trial");
  }
  if (algorithms.empty()) {
    throw InvalidInputError("plan has no algorithms");
  }
  for (const auto& a : algorithms) {
    if (!kKnownAlgorithms.contains(a)) {
      throw InvalidInputError("unknown algorithm in plan: " + a);
    }
  }
  bool has_gs = std::find(algorithms.begin(), algorithms.end(), "gs") !=
                algorithms.end();
  for (const auto& [n_d, n_p] : sizes) {
    if (n_d < 1 || n_p < 1) {
      throw InvalidInputError("plan sizes must be positive");
    }
    if (has_gs && n_d != n_p) {
      throw InvalidInputError(
          "gs is only planned for equal sizes (got " + std::to_string(n_d) +
          "x" + std::to_string(n_p) + ")");
    }
    if (oracle_check && (n_d > 6 || n_p > 6)) {
      throw ResourceGuardError(
          "oracle checks compare against exhaustive enumeration and refuse "
          "sides above 6 (got " + std::to_string(n_d) + "x" +
          std::to_string(n_p) + ")");
    }
  }
}

ExperimentPlan plan_from_json(const std::string& text) {
  ExperimentPlan plan;
  try {
    nlohmann::json j = nlohmann::json::parse(text);
    if (j.contains("mode")) {
      plan.mode = plan_mode_from_string(j["mode"].get<std::string>());
    }
    for (const auto& size : j.at("sizes")) {
      if (size.is_array()) {
        plan.sizes.emplace_back(size.at(0).get<int>(), size.at(1).get<int>());
      } else {
        int n = size.get<int>();
        plan.sizes.emplace_back(n, n);
      }
    }
    if (j.contains("trials")) plan.trials = j["trials"].get<int>();
    if (j.contains("algorithms")) {
      plan.algorithms = j["algorithms"].get<std::vector<std::string>>();
    }
    if (j.contains("seed")) plan.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("output_dir")) {
      plan.output_dir = j["output_dir"].get<std::string>();
    }
    if (j.contains("oracle_check")) {
      plan.oracle_check = j["oracle_check"].get<bool>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInputError(std::string("malformed plan JSON: ") + e.what());
  }
  plan.validate();
  return plan;
}

std::string to_json(const ExperimentPlan& plan) {
  nlohmann::ordered_json j;
  j["mode"] = std::string(to_string(plan.mode));
  j["sizes"] = nlohmann::ordered_json::array();
  for (const auto& [n_d, n_p] : plan.sizes) {
    j["sizes"].push_back({n_d, n_p});
  }
  j["trials"] = plan.trials;
  j["algorithms"] = plan.algorithms;
  j["seed"] = plan.seed;
  j["output_dir"] = plan.output_dir;
  j["oracle_check"] = plan.oracle_check;
  return j.dump(2) + "\n";
}

std::vector<BenchRow> run_bench(const ExperimentPlan& plan) {
  plan.validate();
  std::vector<BenchRow> rows;
  rows.reserve(plan.sizes.size() * plan.trials * plan.algorithms.size());
  for (size_t s = 0; s < plan.sizes.size(); ++s) {
    const auto& [n_drivers, n_passengers] = plan.sizes[s];
    for (int t = 0; t < plan.trials; ++t) {
      GenConfig cfg;
      cfg.n_drivers = n_drivers;
      cfg.n_passengers = n_passengers;
      cfg.seed = derive_seed(plan.seed, {s, static_cast<std::uint64_t>(t)});
      MatchingInstance instance =
          derive_matching_instance(generate_population(cfg));
      std::string instance_id = "n" + std::to_string(n_drivers) + "x" +
                                std::to_string(n_passengers) + "_t" +
                                std::to_string(t);
      std::vector<Matching> stable_set;
      if (plan.oracle_check) {
        stable_set = brute_force_stable(instance.profiles);
      }
      for (const std::string& algorithm : plan.algorithms) {
        Matching m = run_algorithm(algorithm, instance.profiles);
        FormulationReport check = verify_formulation(instance.profiles, m);
        if (!check.ok) {
          throw Error("bench: " + algorithm + " produced an invalid matching on " +
                      instance_id);
        }
        if (plan.oracle_check &&
            std::find(stable_set.begin(), stable_set.end(), m) ==
                stable_set.end()) {
          throw Error("bench: " + algorithm +
                      " output is outside the enumerated stable set on " +
                      instance_id);
        }
        BenchRow row;
        row.instance_id = instance_id;
        row.algorithm = algorithm;
        row.n_drivers = n_drivers;
        row.n_passengers = n_passengers;
        row.size_index = static_cast<int>(s);
        row.trial = t;
        row.report = evaluate_matching(instance.profiles, m, &instance.values);
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

namespace {

struct Series {
  std::vector<double> values;
  double mean() const {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
  }
  double stdev() const {
    if (values.size() < 2) return 0.0;
    double m = mean();
    double sum = 0.0;
    for (double v : values) sum += (v - m) * (v - m);
    return std::sqrt(sum / static_cast<double>(values.size() - 1));
  }
};

}  // namespace

void write_bench_outputs(const ExperimentPlan& plan,
                         const std::vector<BenchRow>& rows,
                         const std::filesystem::path& directory) {
  std::filesystem::create_directories(directory);
  // The echoed plan lives inside the output directory, so its output_dir is
  // written self-relative; the files stay byte-identical wherever they land.
  ExperimentPlan echo = plan;
  echo.output_dir = ".";
  io::write_file(directory / "plan.json", to_json(echo));

  std::ostringstream results;
  results << io::metric_csv_header();
  for (const BenchRow& row : rows) {
    results << io::metric_csv_row(row.instance_id, row.algorithm,
                                  static_cast<size_t>(row.n_drivers),
                                  static_cast<size_t>(row.n_passengers),
                                  row.report);
  }
  io::write_file(directory / "results.csv", results.str());

  // Aggregate each metric per (size, algorithm).
  using Key = std::tuple<int, std::string>;  // size index, algorithm
  std::map<std::string, std::map<Key, Series>> figures;
  std::map<int, std::pair<int, int>> size_of_index;
  for (const BenchRow& row : rows) {
    size_of_index[row.size_index] = {row.n_drivers, row.n_passengers};
    Key key{row.size_index, row.algorithm};
    figures["regret"][key].values.push_back(row.report.regret_cost);
    figures["egalitarian"][key].values.push_back(row.report.egalitarian_cost);
    figures["egalitarian_norm"][key].values.push_back(
        row.report.egalitarian_norm);
    figures["sex_equality"][key].values.push_back(
        row.report.sex_equality_cost);
    figures["sex_equality_norm"][key].values.push_back(
        row.report.sex_equality_norm);
    if (row.report.objective) {
      figures["objective"][key].values.push_back(*row.report.objective);
    }
    if (row.report.price_of_stability) {
      figures["delta"][key].values.push_back(*row.report.price_of_stability);
    }
  }
  for (const auto& [metric, cells] : figures) {
    std::ostringstream out;
    out << "n_drivers,n_passengers,algorithm,mean,stdev,trials\n";
    for (const auto& [key, series] : cells) {
      const auto& [size_index, algorithm] = key;
      const auto& [n_d, n_p] = size_of_index.at(size_index);
      out << n_d << ',' << n_p << ',' << algorithm << ','
          << io::format_double(series.mean()) << ','
          << io::format_double(series.stdev()) << ',' << series.values.size()
          << '\n';
    }
    io::write_file(directory / ("fig_" + metric + ".csv"), out.str());
  }
}

}  // namespace ridematch
