#include "ridematch/types.hpp"

#include <algorithm>
#include <array>

namespace ridematch {

namespace {

constexpr std::array<Criterion, 10> kPassengerCriteria = {
    Criterion::gender,          Criterion::age,
    Criterion::status,          Criterion::vhrange,
    Criterion::pets,            Criterion::smoking,
    Criterion::music,           Criterion::social_behavior,
    Criterion::driving_skills,  Criterion::reliability,
};

// Drivers judge passengers, who have no vehicle range or driving skills.
constexpr std::array<Criterion, 8> kDriverCriteria = {
    Criterion::gender, Criterion::age,
    Criterion::status, Criterion::pets,
    Criterion::smoking, Criterion::music,
    Criterion::social_behavior, Criterion::reliability,
};

void check_feedback_range(const FeedbackAggregate& agg, const char* what) {
  if (agg.mean < 0.0 || agg.mean > 10.0) {
    throw InvalidInputError(std::string(what) + " mean outside [0,10]");
  }
  if (agg.count < 0) {
    throw InvalidInputError(std::string(what) + " has negative count");
  }
}

}  // namespace

std::span<const Criterion> criteria_for(Role evaluator_role) {
  if (evaluator_role == Role::driver) {
    return kDriverCriteria;
  }
  return kPassengerCriteria;
}

bool is_binary_criterion(Criterion c) {
  switch (c) {
    case Criterion::gender:
    case Criterion::status:
    case Criterion::vhrange:
    case Criterion::pets:
    case Criterion::smoking:
    case Criterion::music:
      return true;
    default:
      return false;
  }
}

bool is_feedback_criterion(Criterion c) {
  return c == Criterion::social_behavior || c == Criterion::driving_skills ||
         c == Criterion::reliability;
}

std::string_view to_string(Role r) {
  return r == Role::driver ? "driver" : "passenger";
}

std::string_view to_string(Gender g) { return g == Gender::male ? "m" : "f"; }

std::string_view to_string(MaritalStatus s) {
  return s == MaritalStatus::married ? "married" : "single";
}

std::string_view to_string(VehicleRange v) {
  switch (v) {
    case VehicleRange::basic:
      return "basic";
    case VehicleRange::comfort:
      return "comfort";
    default:
      return "luxury";
  }
}

std::string_view to_string(Criterion c) {
  switch (c) {
    case Criterion::gender:
      return "gender";
    case Criterion::age:
      return "age";
    case Criterion::status:
      return "status";
    case Criterion::vhrange:
      return "vhrange";
    case Criterion::pets:
      return "pets";
    case Criterion::smoking:
      return "smoking";
    case Criterion::music:
      return "music";
    case Criterion::social_behavior:
      return "social_behavior";
    case Criterion::driving_skills:
      return "driving_skills";
    default:
      return "reliability";
  }
}

Role role_from_string(std::string_view s) {
  if (s == "driver") return Role::driver;
  if (s == "passenger") return Role::passenger;
  throw InvalidInputError("unknown role: " + std::string(s));
}

Gender gender_from_string(std::string_view s) {
  if (s == "m" || s == "M") return Gender::male;
  if (s == "f" || s == "F") return Gender::female;
  throw InvalidInputError("unknown gender: " + std::string(s));
}

MaritalStatus status_from_string(std::string_view s) {
  if (s == "married") return MaritalStatus::married;
  if (s == "single") return MaritalStatus::single;
  throw InvalidInputError("unknown marital status: " + std::string(s));
}

VehicleRange vhrange_from_string(std::string_view s) {
  if (s == "basic") return VehicleRange::basic;
  if (s == "comfort") return VehicleRange::comfort;
  if (s == "luxury") return VehicleRange::luxury;
  throw InvalidInputError("unknown vehicle range: " + std::string(s));
}

Criterion criterion_from_string(std::string_view s) {
  for (Criterion c : kPassengerCriteria) {
    if (to_string(c) == s) return c;
  }
  throw InvalidInputError("unknown criterion: " + std::string(s));
}

FeedbackAggregate FeedbackAggregate::cold_start(double default_mean) {
  if (default_mean < 0.0 || default_mean > 10.0) {
    throw InvalidInputError("cold-start default outside [0,10]");
  }
  return FeedbackAggregate{default_mean, 0};
}

FeedbackAggregate apply_feedback(const FeedbackAggregate& agg, double score) {
  if (score < 0.0 || score > 10.0) {
    throw InvalidInputError("feedback score outside [0,10]");
  }
  check_feedback_range(agg, "feedback aggregate");
  if (agg.count == 0) {
    // First real evaluation replaces the cold-start default.
    return FeedbackAggregate{score, 1};
  }
  double mean = (agg.mean * agg.count + score) / (agg.count + 1);
  return FeedbackAggregate{mean, agg.count + 1};
}

void validate(const UserProfile& profile) {
  if (profile.id.empty()) {
    throw InvalidInputError("profile id is empty");
  }
  if (profile.age <= 18) {
    throw InvalidInputError("profile " + profile.id + ": age must exceed 18");
  }
  const bool is_driver = profile.role == Role::driver;
  if (is_driver != profile.vh_range.has_value()) {
    throw InvalidInputError("profile " + profile.id +
                            ": vh_range present iff role is driver");
  }
  if (is_driver != profile.driving_skills.has_value()) {
    throw InvalidInputError("profile " + profile.id +
                            ": driving_skills present iff role is driver");
  }
  check_feedback_range(profile.social_behavior, "social_behavior");
  check_feedback_range(profile.reliability, "reliability");
  if (profile.driving_skills) {
    check_feedback_range(*profile.driving_skills, "driving_skills");
  }
}

void validate(const PreferenceSpec& prefs, Role owner_role) {
  if (prefs.age_pref <= 18) {
    throw InvalidInputError("age_pref must exceed 18");
  }
  if (prefs.age_tolerance < 1 || prefs.age_tolerance > 20) {
    throw InvalidInputError("age_tolerance outside [1,20]");
  }
  const bool is_passenger = owner_role == Role::passenger;
  if (is_passenger != prefs.vhrange_pref.has_value()) {
    throw InvalidInputError("vhrange_pref present iff owner is a passenger");
  }
}

WeightVector::WeightVector(Role owner_role)
    : owner_role_(owner_role),
      weights_(criteria_for(owner_role).size(), 0) {}

WeightVector::WeightVector(
    Role owner_role, std::initializer_list<std::pair<Criterion, int>> weights)
    : WeightVector(owner_role) {
  for (const auto& [criterion, weight] : weights) {
    set(criterion, weight);
  }
}

std::span<const Criterion> WeightVector::criteria() const {
  return criteria_for(owner_role_);
}

size_t WeightVector::index_of(Criterion c) const {
  auto set = criteria();
  auto it = std::find(set.begin(), set.end(), c);
  if (it == set.end()) {
    throw InvalidInputError(std::string("criterion ") +
                            std::string(to_string(c)) +
                            " not in the owner's criterion set");
  }
  return static_cast<size_t>(it - set.begin());
}

int WeightVector::at(Criterion c) const { return weights_[index_of(c)]; }

void WeightVector::set(Criterion c, int weight) {
  if (weight < 0 || weight > 10) {
    throw InvalidInputError("weight outside [0,10]");
  }
  weights_[index_of(c)] = weight;
}

std::vector<double> WeightVector::column_weights() const {
  return std::vector<double>(weights_.begin(), weights_.end());
}

std::string_view to_string(EvaluationCategory c) {
  switch (c) {
    case EvaluationCategory::social_behavior:
      return "social_behavior";
    case EvaluationCategory::driving_skills:
      return "driving_skills";
    default:
      return "reliability";
  }
}

std::string_view to_string(EvaluationLabel l) {
  switch (l) {
    case EvaluationLabel::friendly:
      return "friendly";
    case EvaluationLabel::polite:
      return "polite";
    case EvaluationLabel::rude:
      return "rude";
    case EvaluationLabel::efficient:
      return "efficient";
    case EvaluationLabel::acceptable:
      return "acceptable";
    case EvaluationLabel::dangerous:
      return "dangerous";
    case EvaluationLabel::extremely_reliable:
      return "extremely_reliable";
    case EvaluationLabel::moderately_reliable:
      return "moderately_reliable";
    default:
      return "not_reliable";
  }
}

double evaluation_to_score(EvaluationCategory category, EvaluationLabel label) {
  switch (category) {
    case EvaluationCategory::social_behavior:
      switch (label) {
        case EvaluationLabel::friendly:
          return 10.0;
        case EvaluationLabel::polite:
          return 5.0;
        case EvaluationLabel::rude:
          return 0.0;
        default:
          break;
      }
      break;
    case EvaluationCategory::driving_skills:
      switch (label) {
        case EvaluationLabel::efficient:
          return 10.0;
        case EvaluationLabel::acceptable:
          return 5.0;
        case EvaluationLabel::dangerous:
          return 0.0;
        default:
          break;
      }
      break;
    case EvaluationCategory::reliability:
      switch (label) {
        case EvaluationLabel::extremely_reliable:
          return 10.0;
        case EvaluationLabel::moderately_reliable:
          return 5.0;
        case EvaluationLabel::not_reliable:
          return 0.0;
        default:
          break;
      }
      break;
  }
  throw InvalidInputError(std::string("label ") +
                          std::string(to_string(label)) +
                          " does not belong to category " +
                          std::string(to_string(category)));
}

}  // namespace ridematch
