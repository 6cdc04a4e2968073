// Python bindings for the main operations: scoring, ranking, stable
// matching, exact assignment, metrics, and the synthetic generator.
// Signatures stay in plain python types (lists, dicts, tuples).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ridematch/assignment.hpp"
#include "ridematch/bench.hpp"
#include "ridematch/datagen.hpp"
#include "ridematch/io.hpp"
#include "ridematch/judgment.hpp"
#include "ridematch/matching.hpp"
#include "ridematch/metrics.hpp"
#include "ridematch/topsis.hpp"

namespace py = pybind11;
using namespace ridematch;

namespace {

JudgmentMatrix judgment_from_lists(const std::vector<std::string>& ids,
                                   const std::vector<std::vector<double>>& rows) {
  if (rows.size() != ids.size()) {
    throw InvalidInputError("candidate ids and matrix rows differ in length");
  }
  JudgmentMatrix m;
  m.evaluator_id = "evaluator";
  m.candidate_ids = ids;
  size_t cols = rows.empty() ? 0 : rows[0].size();
  auto set = criteria_for(Role::passenger);
  if (cols > set.size()) {
    throw InvalidInputError("too many criteria columns");
  }
  m.criteria.assign(set.begin(), set.begin() + cols);
  for (const auto& row : rows) {
    if (row.size() != cols) {
      throw InvalidInputError("ragged judgment matrix");
    }
    m.entries.insert(m.entries.end(), row.begin(), row.end());
  }
  return m;
}

PreferenceProfileSet profiles_from_args(
    const std::vector<std::string>& drivers,
    const std::vector<std::string>& passengers,
    const std::map<std::string, std::vector<std::string>>& driver_lists,
    const std::map<std::string, std::vector<std::string>>& passenger_lists) {
  PreferenceProfileSet s;
  s.drivers = drivers;
  s.passengers = passengers;
  s.driver_lists = driver_lists;
  s.passenger_lists = passenger_lists;
  s.validate();
  return s;
}

py::dict matching_to_dict(const Matching& m) {
  py::dict out;
  py::list pairs;
  for (const auto& [d, p] : m.pairs) {
    pairs.append(py::make_tuple(d, p));
  }
  out["pairs"] = pairs;
  out["unmatched_drivers"] = m.unmatched_drivers;
  out["unmatched_passengers"] = m.unmatched_passengers;
  return out;
}

Matching matching_from_pairs(
    const PreferenceProfileSet& profiles,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  return make_matching(profiles, pairs);
}

py::dict ranking_to_dict(const RankingResult& r) {
  py::dict out;
  out["method"] = std::string(to_string(r.method));
  out["scores"] = r.scores;
  out["preference_list"] = r.preference_list;
  return out;
}

ValueMatrix values_from_lists(const std::vector<std::string>& passengers,
                              const std::vector<std::string>& drivers,
                              const std::vector<std::vector<double>>& rows) {
  if (rows.size() != passengers.size()) {
    throw InvalidInputError("value matrix row count != passenger count");
  }
  ValueMatrix v;
  v.passengers = passengers;
  v.drivers = drivers;
  v.values = Matrix(passengers.size(), drivers.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != drivers.size()) {
      throw InvalidInputError("ragged value matrix");
    }
    for (size_t j = 0; j < drivers.size(); ++j) {
      v.values.at(i, j) = rows[i][j];
    }
  }
  return v;
}

}  // namespace

PYBIND11_MODULE(_ridematch, m) {
  m.doc() = "social-preference rideshare matching core";

  py::register_exception<EmptyInputError>(m, "EmptyInputError",
                                          PyExc_ValueError);
  py::register_exception<InfeasibleError>(m, "InfeasibleError",
                                          PyExc_ValueError);
  py::register_exception<ResourceGuardError>(m, "ResourceGuardError",
                                             PyExc_ValueError);
  py::register_exception<InvalidInputError>(m, "InvalidInputError",
                                            PyExc_ValueError);

  // Scoring.
  m.def("age_score", &age_score, py::arg("age_pref"), py::arg("age_tolerance"),
        py::arg("age"),
        "Age closeness: tolerance / (|age - age_pref| + tolerance).");
  m.def(
      "apply_feedback",
      [](std::pair<double, int> aggregate, double score) {
        FeedbackAggregate next = apply_feedback(
            FeedbackAggregate{aggregate.first, aggregate.second}, score);
        return std::make_pair(next.mean, next.count);
      },
      py::arg("aggregate"), py::arg("score"),
      "Extend a (mean, count) feedback aggregate by one evaluation.");
  m.def(
      "evaluation_to_score",
      [](const std::string& category, const std::string& label) {
        EvaluationCategory cat;
        if (category == "social_behavior") {
          cat = EvaluationCategory::social_behavior;
        } else if (category == "driving_skills") {
          cat = EvaluationCategory::driving_skills;
        } else if (category == "reliability") {
          cat = EvaluationCategory::reliability;
        } else {
          throw InvalidInputError("unknown category: " + category);
        }
        for (EvaluationLabel l :
             {EvaluationLabel::friendly, EvaluationLabel::polite,
              EvaluationLabel::rude, EvaluationLabel::efficient,
              EvaluationLabel::acceptable, EvaluationLabel::dangerous,
              EvaluationLabel::extremely_reliable,
              EvaluationLabel::moderately_reliable,
              EvaluationLabel::not_reliable}) {
          if (to_string(l) == label) return evaluation_to_score(cat, l);
        }
        throw InvalidInputError("unknown label: " + label);
      },
      py::arg("category"), py::arg("label"));
  m.def("format_score_2dp", &format_score_2dp, py::arg("value"),
        "Two-decimal truncated display used by the reference tables.");

  // Ranking.
  m.def(
      "topsis_rank",
      [](const std::vector<std::string>& candidate_ids,
         const std::vector<std::vector<double>>& judgment,
         const std::vector<double>& weights, bool with_trace) {
        JudgmentMatrix jm = judgment_from_lists(candidate_ids, judgment);
        TopsisTrace trace;
        RankingResult r =
            topsis_rank(jm, weights, with_trace ? &trace : nullptr);
        py::dict out = ranking_to_dict(r);
        if (with_trace) {
          out["closeness"] = trace.closeness;
          out["positive_ideal"] = trace.positive_ideal;
          out["negative_ideal"] = trace.negative_ideal;
          out["sep_positive"] = trace.sep_positive;
          out["sep_negative"] = trace.sep_negative;
        }
        return out;
      },
      py::arg("candidate_ids"), py::arg("judgment"), py::arg("weights"),
      py::arg("with_trace") = false,
      "Rank candidates by relative closeness to the ideal solution.");
  m.def(
      "wsm_rank",
      [](const std::vector<std::string>& candidate_ids,
         const std::vector<std::vector<double>>& judgment,
         const std::vector<double>& weights) {
        return ranking_to_dict(
            wsm_rank(judgment_from_lists(candidate_ids, judgment), weights));
      },
      py::arg("candidate_ids"), py::arg("judgment"), py::arg("weights"),
      "Weighted-sum baseline over raw judgment entries.");
  m.def(
      "weight_superiority",
      [](const std::vector<double>& row_a, const std::vector<double>& row_b,
         const std::vector<double>& weights) {
        return weight_superiority(std::span<const double>(row_a),
                                  std::span<const double>(row_b),
                                  std::span<const double>(weights));
      },
      py::arg("row_a"), py::arg("row_b"), py::arg("weights"),
      "Total weight of criteria where row_a strictly beats row_b.");

  // Stable matching.
  auto bind_matcher = [&m](const char* name, auto fn, const char* doc) {
    m.def(
        name,
        [fn](const std::vector<std::string>& drivers,
             const std::vector<std::string>& passengers,
             const std::map<std::string, std::vector<std::string>>&
                 driver_lists,
             const std::map<std::string, std::vector<std::string>>&
                 passenger_lists) {
          return matching_to_dict(fn(
              profiles_from_args(drivers, passengers, driver_lists,
                                 passenger_lists),
              nullptr));
        },
        py::arg("drivers"), py::arg("passengers"), py::arg("driver_lists"),
        py::arg("passenger_lists"), doc);
  };
  bind_matcher("gale_shapley", &gale_shapley,
               "Equal-sets baseline, drivers proposing.");
  bind_matcher("sm_match", &sm_match,
               "Minimum-choice stable matching: the smaller set proposes.");
  bind_matcher("driver_optimal", &driver_optimal,
               "Deferred acceptance with drivers proposing.");
  bind_matcher("passenger_optimal", &passenger_optimal,
               "Deferred acceptance with passengers proposing.");
  m.def(
      "find_blocking_pairs",
      [](const std::vector<std::string>& drivers,
         const std::vector<std::string>& passengers,
         const std::map<std::string, std::vector<std::string>>& driver_lists,
         const std::map<std::string, std::vector<std::string>>&
             passenger_lists,
         const std::vector<std::pair<std::string, std::string>>& pairs) {
        PreferenceProfileSet s = profiles_from_args(
            drivers, passengers, driver_lists, passenger_lists);
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& bp :
             find_blocking_pairs(s, matching_from_pairs(s, pairs))) {
          out.emplace_back(bp.driver, bp.passenger);
        }
        return out;
      },
      py::arg("drivers"), py::arg("passengers"), py::arg("driver_lists"),
      py::arg("passenger_lists"), py::arg("pairs"),
      "Every acceptable pair that blocks the given matching.");
  m.def(
      "brute_force_stable",
      [](const std::vector<std::string>& drivers,
         const std::vector<std::string>& passengers,
         const std::map<std::string, std::vector<std::string>>& driver_lists,
         const std::map<std::string, std::vector<std::string>>&
             passenger_lists) {
        PreferenceProfileSet s = profiles_from_args(
            drivers, passengers, driver_lists, passenger_lists);
        py::list out;
        for (const Matching& match : brute_force_stable(s)) {
          out.append(matching_to_dict(match));
        }
        return out;
      },
      py::arg("drivers"), py::arg("passengers"), py::arg("driver_lists"),
      py::arg("passenger_lists"),
      "All stable matchings by exhaustive enumeration (sides <= 10).");

  // Assignment and metrics.
  m.def(
      "max_weight_assignment",
      [](const std::vector<std::string>& passengers,
         const std::vector<std::string>& drivers,
         const std::vector<std::vector<double>>& values) {
        AssignmentResult r = max_weight_assignment(
            values_from_lists(passengers, drivers, values));
        py::dict out = matching_to_dict(r.matching);
        out["objective"] = r.objective;
        return out;
      },
      py::arg("passengers"), py::arg("drivers"), py::arg("values"),
      "Exact maximum-weight assignment (rows = passengers).");
  m.def(
      "price_of_stability",
      [](const std::vector<std::string>& passengers,
         const std::vector<std::string>& drivers,
         const std::vector<std::vector<double>>& values,
         const std::vector<std::pair<std::string, std::string>>& pairs) {
        ValueMatrix v = values_from_lists(passengers, drivers, values);
        Matching m2;
        m2.pairs = pairs;
        m2.normalize();
        return price_of_stability(v, m2);
      },
      py::arg("passengers"), py::arg("drivers"), py::arg("values"),
      py::arg("pairs"),
      "(A - A_s) / A against the exact assignment optimum.");
  m.def(
      "evaluate_matching",
      [](const std::vector<std::string>& drivers,
         const std::vector<std::string>& passengers,
         const std::map<std::string, std::vector<std::string>>& driver_lists,
         const std::map<std::string, std::vector<std::string>>&
             passenger_lists,
         const std::vector<std::pair<std::string, std::string>>& pairs) {
        PreferenceProfileSet s = profiles_from_args(
            drivers, passengers, driver_lists, passenger_lists);
        MetricReport r = evaluate_matching(s, matching_from_pairs(s, pairs));
        py::dict out;
        out["regret"] = r.regret_cost;
        out["egalitarian"] = r.egalitarian_cost;
        out["egalitarian_norm"] = r.egalitarian_norm;
        out["sex_equality"] = r.sex_equality_cost;
        out["sex_equality_norm"] = r.sex_equality_norm;
        out["matched_count"] = r.matched_count;
        return out;
      },
      py::arg("drivers"), py::arg("passengers"), py::arg("driver_lists"),
      py::arg("passenger_lists"), py::arg("pairs"),
      "Regret, egalitarian, and sex-equality costs of a matching.");

  // Generator and bench harness.
  m.def(
      "generate_population_csv",
      [](int n_drivers, int n_passengers, std::uint64_t seed,
         const std::string& out_dir, const std::string& skew) {
        GenConfig cfg;
        cfg.n_drivers = n_drivers;
        cfg.n_passengers = n_passengers;
        cfg.seed = seed;
        cfg.skew = skew_from_string(skew);
        Population pop = generate_population(cfg);
        io::save_population_csv(pop, out_dir);
        std::vector<std::filesystem::path> files;
        for (const char* name :
             {"DriverProfile.csv", "DriverPreferences.csv", "DriverWeight.csv",
              "PassengerProfile.csv", "PassengerPreferences.csv",
              "PassengerWeight.csv"}) {
          files.push_back(std::filesystem::path(out_dir) / name);
        }
        io::write_manifest(cfg, out_dir, files);
        std::vector<std::string> names;
        for (const auto& f : files) names.push_back(f.string());
        return names;
      },
      py::arg("n_drivers"), py::arg("n_passengers"), py::arg("seed"),
      py::arg("out_dir"), py::arg("skew") = "uniform",
      "Write the six population tables plus manifest.json; deterministic "
      "per seed.");
  m.def(
      "derive_instance_csv",
      [](const std::string& population_dir) {
        MatchingInstance instance = derive_matching_instance(
            io::load_population_csv(population_dir));
        py::dict out;
        out["drivers"] = instance.profiles.drivers;
        out["passengers"] = instance.profiles.passengers;
        out["driver_lists"] = instance.profiles.driver_lists;
        out["passenger_lists"] = instance.profiles.passenger_lists;
        std::vector<std::vector<double>> values;
        for (size_t i = 0; i < instance.values.values.rows; ++i) {
          auto row = instance.values.values.row(i);
          values.emplace_back(row.begin(), row.end());
        }
        out["values"] = values;
        return out;
      },
      py::arg("population_dir"),
      "Judgment -> ranking -> preference lists + pair values for a saved "
      "population.");
  m.def(
      "run_bench",
      [](const std::vector<std::pair<int, int>>& sizes, int trials,
         const std::vector<std::string>& algorithms, std::uint64_t seed,
         const std::string& out_dir) {
        ExperimentPlan plan;
        plan.sizes = sizes;
        plan.trials = trials;
        plan.algorithms = algorithms;
        plan.seed = seed;
        plan.output_dir = out_dir;
        std::vector<BenchRow> rows = run_bench(plan);
        write_bench_outputs(plan, rows, out_dir);
        return rows.size();
      },
      py::arg("sizes"), py::arg("trials"), py::arg("algorithms"),
      py::arg("seed"), py::arg("out_dir"),
      "Benchmark sweep; writes results.csv and fig_*.csv, returns row count.");
}
