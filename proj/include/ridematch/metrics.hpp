#pragma once

#include <optional>
#include <string>

#include "ridematch/assignment.hpp"
#include "ridematch/matching.hpp"

namespace ridematch {

// Stability-quality metrics of one matching. Ranks are 1-based positions in
// the preference lists; unmatched members contribute nothing; normalized
// variants divide by the matched-pair count.
struct MetricReport {
  int regret_cost = 0;
  double egalitarian_cost = 0.0;
  double egalitarian_norm = 0.0;
  double sex_equality_cost = 0.0;
  double sex_equality_norm = 0.0;
  int matched_count = 0;
  std::optional<double> objective;           // total pair value, when known
  std::optional<double> price_of_stability;  // delta, when values supplied
};

// Worst rank any matched participant assigns to its partner,
// max over pairs of max(rank_d(p), rank_p(d)).
// Throws UndefinedMetricError for an empty matching.
int regret_cost(const PreferenceProfileSet& profiles, const Matching& matching);

// Sum of all matched participants' partner ranks over both sides.
double egalitarian_cost(const PreferenceProfileSet& profiles,
                        const Matching& matching);

// Absolute difference between the two sides' rank sums.
double sex_equality_cost(const PreferenceProfileSet& profiles,
                         const Matching& matching);

// All of the above in one pass; objective and delta are filled when a value
// matrix is supplied.
MetricReport evaluate_matching(const PreferenceProfileSet& profiles,
                               const Matching& matching,
                               const ValueMatrix* values = nullptr);

}  // namespace ridematch
