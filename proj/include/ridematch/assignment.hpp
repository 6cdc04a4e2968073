#pragma once

#include <string>
#include <vector>

#include "ridematch/matching.hpp"
#include "ridematch/topsis.hpp"

namespace ridematch {

// A labeled real table, e.g. one side's closeness scores for the other
// (row_ids = evaluators, col_ids = candidates).
struct LabeledTable {
  std::vector<std::string> row_ids;
  std::vector<std::string> col_ids;
  Matrix values;
};

// Pair values of a matching market: rows are passengers, columns are
// drivers (the layout of the closeness tables this is usually built from).
// The value of a pair is the sum of both sides' closeness for each other.
struct ValueMatrix {
  std::vector<std::string> passengers;  // rows
  std::vector<std::string> drivers;     // columns
  Matrix values;

  double value_of(const std::string& driver, const std::string& passenger) const;
};

// Exact maximum-weight one-to-one assignment (augmenting-path Hungarian on a
// zero-padded square matrix). With non-negative values the returned matching
// has maximum cardinality; members are unmatched only on the larger side.
struct AssignmentResult {
  Matching matching;
  double objective = 0.0;
};
AssignmentResult max_weight_assignment(const ValueMatrix& values);

// Total pair value of a matching under the given value matrix.
double matching_value(const ValueMatrix& values, const Matching& matching);

// Enumerates every injective matching and keeps exactly the stable ones.
// Test oracle; refuses instances with a side above kBruteForceLimit.
inline constexpr size_t kBruteForceLimit = 10;
std::vector<Matching> brute_force_stable(const PreferenceProfileSet& profiles);

// delta = (A - A_s) / A where A is the unconstrained assignment optimum and
// A_s the total value of the given stable matching. Throws
// UndefinedMetricError when A == 0.
double price_of_stability(const ValueMatrix& values, const Matching& stable);

}  // namespace ridematch
