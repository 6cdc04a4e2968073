#include "ridematch/judgment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace ridematch {

double binary_score(const AttributeValue& pref_value,
                    const AttributeValue& prof_value) {
  if (pref_value.index() != prof_value.index()) {
    throw InvalidInputError(
        "binary_score: values come from different attribute domains");
  }
  return pref_value == prof_value ? 1.0 : 0.0;
}

double age_score(int age_pref, int age_tolerance, int age) {
  if (age_tolerance < 1) {
    throw InvalidInputError("age_score: tolerance must be at least 1");
  }
  return static_cast<double>(age_tolerance) /
         (std::abs(age - age_pref) + age_tolerance);
}

std::string format_score_2dp(double value) {
  // Truncate toward zero to two decimals, then drop trailing zeros; the
  // reference tables print 0.125 as 0.12 and 0.2083 as 0.2.
  double truncated = std::trunc(value * 100.0) / 100.0;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", truncated);
  std::string s(buf);
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

size_t JudgmentMatrix::column_of(Criterion c) const {
  auto it = std::find(criteria.begin(), criteria.end(), c);
  if (it == criteria.end()) {
    throw InvalidInputError(std::string("criterion ") +
                            std::string(to_string(c)) +
                            " not a column of this judgment matrix");
  }
  return static_cast<size_t>(it - criteria.begin());
}

namespace {

AttributeValue preferred_value(const PreferenceSpec& prefs, Criterion c) {
  switch (c) {
    case Criterion::gender:
      return prefs.gender_pref;
    case Criterion::status:
      return prefs.status_pref;
    case Criterion::vhrange:
      return *prefs.vhrange_pref;
    case Criterion::pets:
      return prefs.pets_pref;
    case Criterion::smoking:
      return prefs.smoking_pref;
    case Criterion::music:
      return prefs.music_pref;
    default:
      throw InvalidInputError("criterion has no preferred value");
  }
}

AttributeValue profile_value(const UserProfile& profile, Criterion c) {
  switch (c) {
    case Criterion::gender:
      return profile.gender;
    case Criterion::status:
      return profile.status;
    case Criterion::vhrange:
      if (!profile.vh_range) {
        throw InvalidInputError("candidate " + profile.id +
                                " has no vehicle range");
      }
      return *profile.vh_range;
    case Criterion::pets:
      return profile.pets;
    case Criterion::smoking:
      return profile.smoking;
    case Criterion::music:
      return profile.music;
    default:
      throw InvalidInputError("criterion is not a profile attribute");
  }
}

double feedback_mean(const UserProfile& profile, Criterion c) {
  switch (c) {
    case Criterion::social_behavior:
      return profile.social_behavior.mean;
    case Criterion::driving_skills:
      if (!profile.driving_skills) {
        throw InvalidInputError("candidate " + profile.id +
                                " has no driving-skills history");
      }
      return profile.driving_skills->mean;
    default:
      return profile.reliability.mean;
  }
}

}  // namespace

JudgmentMatrix build_judgment_matrix(const UserProfile& evaluator,
                                     const PreferenceSpec& prefs,
                                     std::span<const UserProfile> candidates) {
  if (candidates.empty()) {
    throw EmptyInputError("build_judgment_matrix: no candidates");
  }
  validate(prefs, evaluator.role);

  auto criterion_set = criteria_for(evaluator.role);
  JudgmentMatrix m;
  m.evaluator_id = evaluator.id;
  m.criteria.assign(criterion_set.begin(), criterion_set.end());
  m.candidate_ids.reserve(candidates.size());
  m.entries.reserve(candidates.size() * criterion_set.size());

  for (const UserProfile& candidate : candidates) {
    if (candidate.role == evaluator.role) {
      throw InvalidInputError("candidate " + candidate.id +
                              " has the same role as evaluator " +
                              evaluator.id);
    }
    m.candidate_ids.push_back(candidate.id);
    for (Criterion c : criterion_set) {
      double score;
      if (c == Criterion::age) {
        score = age_score(prefs.age_pref, prefs.age_tolerance, candidate.age);
      } else if (is_binary_criterion(c)) {
        score = binary_score(preferred_value(prefs, c),
                             profile_value(candidate, c));
      } else {
        // Feedback criteria are the candidate's received evaluations; they
        // do not depend on the evaluator's preferences.
        score = feedback_mean(candidate, c);
      }
      m.entries.push_back(score);
    }
  }
  return m;
}

}  // namespace ridematch
