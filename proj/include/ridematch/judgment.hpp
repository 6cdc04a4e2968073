#pragma once

#include <span>
#include <string>
#include <vector>

#include "ridematch/types.hpp"

namespace ridematch {

// Equality score for binary criteria: 1 when the preferred value equals the
// candidate's profile value, else 0. Throws InvalidInputError when the two
// values come from different attribute domains.
double binary_score(const AttributeValue& pref_value,
                    const AttributeValue& prof_value);

// AgeTolerance / (|age - age_pref| + AgeTolerance), in (0,1], equal to 1
// exactly at the preferred age. Throws InvalidInputError for tolerance < 1.
double age_score(int age_pref, int age_tolerance, int age);

// Two-decimal display used by the reference tables: truncated toward zero,
// trailing zeros stripped ("0.55", "0.12", "0.2", "1").
std::string format_score_2dp(double value);

// Per-evaluator score matrix: one row per candidate, one column per
// criterion of the evaluator's criterion set, in canonical order.
struct JudgmentMatrix {
  std::string evaluator_id;
  std::vector<std::string> candidate_ids;  // rows
  std::vector<Criterion> criteria;         // columns
  std::vector<double> entries;             // row-major

  size_t rows() const { return candidate_ids.size(); }
  size_t cols() const { return criteria.size(); }
  double at(size_t row, size_t col) const {
    return entries[row * criteria.size() + col];
  }
  double& at(size_t row, size_t col) {
    return entries[row * criteria.size() + col];
  }
  size_t column_of(Criterion c) const;  // throws if absent
};

// Builds the evaluator's judgment matrix over the given candidates, one row
// per candidate in input order. Binary criteria use binary_score, age uses
// age_score, feedback criteria copy the candidate's aggregate means (they do
// not depend on the evaluator's preferences).
//
// Throws EmptyInputError for an empty candidate list and InvalidInputError
// when a candidate's role is not opposite to the evaluator's or a candidate
// profile is missing a field the criterion set needs.
JudgmentMatrix build_judgment_matrix(const UserProfile& evaluator,
                                     const PreferenceSpec& prefs,
                                     std::span<const UserProfile> candidates);

}  // namespace ridematch
