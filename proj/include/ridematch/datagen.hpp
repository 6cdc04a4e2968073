#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ridematch/assignment.hpp"
#include "ridematch/judgment.hpp"
#include "ridematch/matching.hpp"
#include "ridematch/types.hpp"

namespace ridematch {

enum class Skew { uniform, clustered };

std::string_view to_string(Skew s);
Skew skew_from_string(std::string_view s);

// Synthetic population parameters. Marginals are configuration, not
// constants: uniform categorical draws, truncated-normal age, beta-shaped
// feedback means by default, all overridable.
struct GenConfig {
  int n_drivers = 1;
  int n_passengers = 1;
  std::uint64_t seed = 0;
  Skew skew = Skew::uniform;

  int age_min = 19;
  int age_max = 80;
  double age_mean = 35.0;
  double age_stddev = 12.0;

  // Feedback means are drawn from 10 * Beta(alpha, beta).
  double feedback_alpha = 2.0;
  double feedback_beta = 2.0;

  // Clustered skew: members are assigned to this many taste clusters; a
  // cluster shares categorical tendencies and an age center.
  int n_clusters = 3;
  double cluster_adherence = 0.8;  // probability a draw follows the cluster

  void validate() const;  // throws InvalidInputError on bad ranges
};

// Profiles, preferences, and weights for both sides; every record satisfies
// the data-model invariants.
struct Population {
  std::vector<UserProfile> drivers;
  std::vector<UserProfile> passengers;
  std::map<std::string, PreferenceSpec> driver_prefs;
  std::map<std::string, PreferenceSpec> passenger_prefs;
  std::map<std::string, WeightVector> driver_weights;
  std::map<std::string, WeightVector> passenger_weights;
};

// Deterministic for a fixed config: the same seed yields the same records on
// every platform (see Rng::kAlgorithm).
Population generate_population(const GenConfig& config);

// Matching-market instance derived from a population: every user's judgment
// matrix is ranked (TOPSIS), the rankings become the preference lists, and
// the pairwise closeness values fill the value matrix
// (value(d,p) = C*_p(d) + C*_d(p)).
struct MatchingInstance {
  PreferenceProfileSet profiles;
  ValueMatrix values;
};
MatchingInstance derive_matching_instance(const Population& population);

// Same derivation when only the two closeness tables are known
// (passenger_closeness rows = passengers, cols = drivers; driver_closeness
// rows = drivers, cols = passengers).
MatchingInstance instance_from_closeness(const LabeledTable& passenger_closeness,
                                         const LabeledTable& driver_closeness);

}  // namespace ridematch
