#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ridematch/errors.hpp"

namespace ridematch {

enum class Role { driver, passenger };
enum class Gender { male, female };
enum class MaritalStatus { married, single };
enum class VehicleRange { basic, comfort, luxury };

// Ranking criteria in canonical column order. A driver judges passengers on
// eight of these (passengers have no vehicle or driving data); a passenger
// judges drivers on all ten.
enum class Criterion {
  gender,
  age,
  status,
  vhrange,
  pets,
  smoking,
  music,
  social_behavior,
  driving_skills,
  reliability,
};

// Criterion set of an evaluator with the given role, in canonical order.
std::span<const Criterion> criteria_for(Role evaluator_role);

bool is_binary_criterion(Criterion c);
bool is_feedback_criterion(Criterion c);

std::string_view to_string(Role r);
std::string_view to_string(Gender g);
std::string_view to_string(MaritalStatus s);
std::string_view to_string(VehicleRange v);
std::string_view to_string(Criterion c);

Role role_from_string(std::string_view s);
Gender gender_from_string(std::string_view s);
MaritalStatus status_from_string(std::string_view s);
VehicleRange vhrange_from_string(std::string_view s);
Criterion criterion_from_string(std::string_view s);

// Running average of post-ride evaluations, kept on the [0,10] scale.
// A user with no evaluations yet carries the cold-start default.
struct FeedbackAggregate {
  double mean = kColdStartMean;
  int count = 0;

  static constexpr double kColdStartMean = 5.0;
  static FeedbackAggregate cold_start(double default_mean = kColdStartMean);

  bool operator==(const FeedbackAggregate&) const = default;
};

// Returns the aggregate extended by one more evaluation; the stored value is
// the exact running mean, rounding is display-only.
FeedbackAggregate apply_feedback(const FeedbackAggregate& agg, double score);

struct UserProfile {
  std::string id;
  Role role = Role::passenger;
  Gender gender = Gender::male;
  int age = 19;
  MaritalStatus status = MaritalStatus::single;
  std::optional<VehicleRange> vh_range;  // drivers only
  bool pets = false;
  bool music = false;
  bool smoking = false;
  FeedbackAggregate social_behavior;
  std::optional<FeedbackAggregate> driving_skills;  // drivers only
  FeedbackAggregate reliability;

  bool operator==(const UserProfile&) const = default;
};

// Throws InvalidInputError when a field violates its domain (age <= 18,
// driver-only fields on a passenger or missing on a driver, feedback mean
// outside [0,10]).
void validate(const UserProfile& profile);

// What the owner wants in a correspondent. Feedback criteria carry no
// preferred value, only a weight.
struct PreferenceSpec {
  Gender gender_pref = Gender::male;
  int age_pref = 19;
  int age_tolerance = 5;
  MaritalStatus status_pref = MaritalStatus::single;
  std::optional<VehicleRange> vhrange_pref;  // passengers only
  bool pets_pref = false;
  bool music_pref = false;
  bool smoking_pref = false;

  bool operator==(const PreferenceSpec&) const = default;
};

void validate(const PreferenceSpec& prefs, Role owner_role);

// Integer importance weights in [0,10], one per criterion of the owner's
// criterion set (8 for drivers, 10 for passengers).
class WeightVector {
 public:
  explicit WeightVector(Role owner_role);
  WeightVector(Role owner_role,
               std::initializer_list<std::pair<Criterion, int>> weights);

  Role owner_role() const { return owner_role_; }
  std::span<const Criterion> criteria() const;

  int at(Criterion c) const;
  void set(Criterion c, int weight);

  // Weights in canonical column order, aligned with criteria().
  std::vector<double> column_weights() const;

  bool operator==(const WeightVector&) const = default;

 private:
  size_t index_of(Criterion c) const;

  Role owner_role_;
  std::vector<int> weights_;
};

enum class EvaluationCategory { social_behavior, driving_skills, reliability };

enum class EvaluationLabel {
  friendly,
  polite,
  rude,
  efficient,
  acceptable,
  dangerous,
  extremely_reliable,
  moderately_reliable,
  not_reliable,
};

std::string_view to_string(EvaluationCategory c);
std::string_view to_string(EvaluationLabel l);

// Maps a post-ride questionnaire answer to its score on the [0,10] scale.
// Throws InvalidInputError when the label does not belong to the category.
double evaluation_to_score(EvaluationCategory category, EvaluationLabel label);

// One judged attribute value, for the generic equality score. Both sides of
// a comparison must hold the same alternative.
using AttributeValue = std::variant<Gender, MaritalStatus, VehicleRange, bool>;

}  // namespace ridematch
