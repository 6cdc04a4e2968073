#include "ridematch/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace ridematch {

namespace {

// 1-based position of `target` in `list` (first choice = 1).
int rank_in(const std::vector<std::string>& list, const std::string& target) {
  auto it = std::find(list.begin(), list.end(), target);
  if (it == list.end()) {
    throw InvalidInputError("matched partner " + target +
                            " missing from a preference list");
  }
  return static_cast<int>(it - list.begin()) + 1;
}

struct RankSums {
  long driver_sum = 0;     // drivers' ranks of their passengers
  long passenger_sum = 0;  // passengers' ranks of their drivers
  int worst = 0;
};

RankSums rank_sums(const PreferenceProfileSet& profiles,
                   const Matching& matching) {
  if (matching.pairs.empty()) {
    throw UndefinedMetricError("metrics undefined for an empty matching");
  }
  RankSums sums;
  for (const auto& [d, p] : matching.pairs) {
    int dr = rank_in(profiles.driver_lists.at(d), p);
    int pr = rank_in(profiles.passenger_lists.at(p), d);
    sums.driver_sum += dr;
    sums.passenger_sum += pr;
    sums.worst = std::max({sums.worst, dr, pr});
  }
  return sums;
}

}  // namespace

int regret_cost(const PreferenceProfileSet& profiles,
                const Matching& matching) {
  return rank_sums(profiles, matching).worst;
}

double egalitarian_cost(const PreferenceProfileSet& profiles,
                        const Matching& matching) {
  RankSums sums = rank_sums(profiles, matching);
  return static_cast<double>(sums.driver_sum + sums.passenger_sum);
}

double sex_equality_cost(const PreferenceProfileSet& profiles,
                         const Matching& matching) {
  RankSums sums = rank_sums(profiles, matching);
  return static_cast<double>(std::labs(sums.driver_sum - sums.passenger_sum));
}

MetricReport evaluate_matching(const PreferenceProfileSet& profiles,
                               const Matching& matching,
                               const ValueMatrix* values) {
  RankSums sums = rank_sums(profiles, matching);
  MetricReport report;
  report.matched_count = static_cast<int>(matching.pairs.size());
  report.regret_cost = sums.worst;
  report.egalitarian_cost =
      static_cast<double>(sums.driver_sum + sums.passenger_sum);
  report.sex_equality_cost =
      static_cast<double>(std::labs(sums.driver_sum - sums.passenger_sum));
  report.egalitarian_norm = report.egalitarian_cost / report.matched_count;
  report.sex_equality_norm = report.sex_equality_cost / report.matched_count;
  if (values != nullptr) {
    report.objective = matching_value(*values, matching);
    report.price_of_stability = price_of_stability(*values, matching);
  }
  return report;
}

}  // namespace ridematch
