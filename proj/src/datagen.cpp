#include "ridematch/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "ridematch/rng.hpp"
#include "ridematch/topsis.hpp"

namespace ridematch {

std::string_view to_string(Skew s) {
  return s == Skew::uniform ? "uniform" : "clustered";
}

Skew skew_from_string(std::string_view s) {
  if (s == "uniform") return Skew::uniform;
  if (s == "clustered") return Skew::clustered;
  throw InvalidInputError("unknown skew: " + std::string(s));
}

void GenConfig::validate() const {
  if (n_drivers < 1 || n_passengers < 1) {
    throw InvalidInputError("population counts must be at least 1");
  }
  if (age_min < 19 || age_max < age_min) {
    throw InvalidInputError("age range must lie within [19, ...], min <= max");
  }
  if (feedback_alpha <= 0.0 || feedback_beta <= 0.0) {
    throw InvalidInputError("feedback beta parameters must be positive");
  }
  if (n_clusters < 1) {
    throw InvalidInputError("cluster count must be at least 1");
  }
  if (cluster_adherence < 0.0 || cluster_adherence > 1.0) {
    throw InvalidInputError("cluster adherence must lie in [0,1]");
  }
}

namespace {

std::string padded_id(char prefix, int index, int count) {
  int width = 1;
  for (int v = count; v >= 10; v /= 10) ++width;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%c%0*d", prefix, width, index);
  return buf;
}

struct ClusterTendency {
  Gender gender;
  MaritalStatus status;
  VehicleRange vh_range;
  bool pets, music, smoking;
  double age_center;
};

std::vector<ClusterTendency> draw_clusters(const GenConfig& cfg, Rng& rng) {
  std::vector<ClusterTendency> clusters(cfg.n_clusters);
  for (auto& c : clusters) {
    c.gender = rng.bernoulli() ? Gender::male : Gender::female;
    c.status = rng.bernoulli() ? MaritalStatus::married : MaritalStatus::single;
    c.vh_range = static_cast<VehicleRange>(rng.uniform_int(0, 2));
    c.pets = rng.bernoulli();
    c.music = rng.bernoulli();
    c.smoking = rng.bernoulli();
    c.age_center = cfg.age_min +
                   (cfg.age_max - cfg.age_min) * rng.next_double();
  }
  return clusters;
}

double feedback_mean(const GenConfig& cfg, Rng& rng) {
  double raw = 10.0 * rng.beta(cfg.feedback_alpha, cfg.feedback_beta);
  // Two-decimal quantization so the value survives the CSV schema exactly.
  return std::round(raw * 100.0) / 100.0;
}

class MemberSampler {
 public:
  MemberSampler(const GenConfig& cfg, Rng& rng,
                const std::vector<ClusterTendency>& clusters)
      : cfg_(cfg), rng_(rng), clusters_(clusters) {}

  void next_member() {
    if (cfg_.skew == Skew::clustered) {
      cluster_ = &clusters_[static_cast<size_t>(
          rng_.uniform_int(0, cfg_.n_clusters - 1))];
    }
  }

  Gender gender() {
    if (follows_cluster()) return cluster_->gender;
    return rng_.bernoulli() ? Gender::male : Gender::female;
  }
  MaritalStatus status() {
    if (follows_cluster()) return cluster_->status;
    return rng_.bernoulli() ? MaritalStatus::married : MaritalStatus::single;
  }
  VehicleRange vh_range() {
    if (follows_cluster()) return cluster_->vh_range;
    return static_cast<VehicleRange>(rng_.uniform_int(0, 2));
  }
  bool flag(bool ClusterTendency::* which) {
    if (follows_cluster()) return cluster_->*which;
    return rng_.bernoulli();
  }
  int age() {
    double mean = cluster_ != nullptr ? cluster_->age_center : cfg_.age_mean;
    double a = rng_.truncated_normal(mean, cfg_.age_stddev, cfg_.age_min,
                                     cfg_.age_max);
    return static_cast<int>(std::lround(a));
  }

 private:
  bool follows_cluster() {
    return cluster_ != nullptr && rng_.bernoulli(cfg_.cluster_adherence);
  }

  const GenConfig& cfg_;
  Rng& rng_;
  const std::vector<ClusterTendency>& clusters_;
  const ClusterTendency* cluster_ = nullptr;
};

UserProfile draw_profile(const GenConfig& cfg, Rng& rng, MemberSampler& s,
                         std::string id, Role role) {
  s.next_member();
  UserProfile profile;
  profile.id = std::move(id);
  profile.role = role;
  profile.gender = s.gender();
  profile.age = s.age();
  profile.status = s.status();
  profile.pets = s.flag(&ClusterTendency::pets);
  profile.music = s.flag(&ClusterTendency::music);
  profile.smoking = s.flag(&ClusterTendency::smoking);
  profile.social_behavior = FeedbackAggregate{feedback_mean(cfg, rng), 1};
  profile.reliability = FeedbackAggregate{feedback_mean(cfg, rng), 1};
  if (role == Role::driver) {
    profile.vh_range = s.vh_range();
    profile.driving_skills = FeedbackAggregate{feedback_mean(cfg, rng), 1};
  }
  return profile;
}

PreferenceSpec draw_prefs(const GenConfig& cfg, Rng& rng, Role owner_role) {
  PreferenceSpec prefs;
  prefs.gender_pref = rng.bernoulli() ? Gender::male : Gender::female;
  prefs.age_pref = rng.uniform_int(std::max(19, cfg.age_min), cfg.age_max);
  prefs.age_tolerance = rng.uniform_int(1, 20);
  prefs.status_pref =
      rng.bernoulli() ? MaritalStatus::married : MaritalStatus::single;
  prefs.pets_pref = rng.bernoulli();
  prefs.music_pref = rng.bernoulli();
  prefs.smoking_pref = rng.bernoulli();
  if (owner_role == Role::passenger) {
    prefs.vhrange_pref = static_cast<VehicleRange>(rng.uniform_int(0, 2));
  }
  return prefs;
}

WeightVector draw_weights(Rng& rng, Role owner_role) {
  WeightVector w(owner_role);
  for (Criterion c : w.criteria()) {
    w.set(c, rng.uniform_int(0, 10));
  }
  return w;
}

}  // namespace

Population generate_population(const GenConfig& config) {
  config.validate();
  Rng rng(config.seed);
  std::vector<ClusterTendency> clusters = draw_clusters(config, rng);
  MemberSampler sampler(config, rng, clusters);

  Population pop;
  for (int i = 1; i <= config.n_drivers; ++i) {
    std::string id = padded_id('D', i, config.n_drivers);
    UserProfile profile =
        draw_profile(config, rng, sampler, id, Role::driver);
    pop.driver_prefs.emplace(id, draw_prefs(config, rng, Role::driver));
    pop.driver_weights.emplace(id, draw_weights(rng, Role::driver));
    pop.drivers.push_back(std::move(profile));
  }
  for (int i = 1; i <= config.n_passengers; ++i) {
    std::string id = padded_id('P', i, config.n_passengers);
    UserProfile profile =
        draw_profile(config, rng, sampler, id, Role::passenger);
    pop.passenger_prefs.emplace(id, draw_prefs(config, rng, Role::passenger));
    pop.passenger_weights.emplace(id, draw_weights(rng, Role::passenger));
    pop.passengers.push_back(std::move(profile));
  }
  for (const auto& p : pop.drivers) validate(p);
  for (const auto& p : pop.passengers) validate(p);
  return pop;
}

MatchingInstance derive_matching_instance(const Population& population) {
  if (population.drivers.empty() || population.passengers.empty()) {
    throw EmptyInputError("derive_matching_instance: a side is empty");
  }
  MatchingInstance instance;
  auto& profiles = instance.profiles;
  for (const auto& d : population.drivers) profiles.drivers.push_back(d.id);
  for (const auto& p : population.passengers) {
    profiles.passengers.push_back(p.id);
  }

  instance.values.passengers = profiles.passengers;
  instance.values.drivers = profiles.drivers;
  instance.values.values =
      Matrix(profiles.passengers.size(), profiles.drivers.size());

  for (size_t i = 0; i < population.passengers.size(); ++i) {
    const UserProfile& p = population.passengers[i];
    JudgmentMatrix judgment = build_judgment_matrix(
        p, population.passenger_prefs.at(p.id), population.drivers);
    RankingResult ranking =
        topsis_rank(judgment, population.passenger_weights.at(p.id));
    profiles.passenger_lists[p.id] = ranking.preference_list;
    for (size_t j = 0; j < population.drivers.size(); ++j) {
      instance.values.values.at(i, j) +=
          ranking.scores.at(population.drivers[j].id);
    }
  }
  for (size_t j = 0; j < population.drivers.size(); ++j) {
    const UserProfile& d = population.drivers[j];
    JudgmentMatrix judgment = build_judgment_matrix(
        d, population.driver_prefs.at(d.id), population.passengers);
    RankingResult ranking =
        topsis_rank(judgment, population.driver_weights.at(d.id));
    profiles.driver_lists[d.id] = ranking.preference_list;
    for (size_t i = 0; i < population.passengers.size(); ++i) {
      instance.values.values.at(i, j) +=
          ranking.scores.at(population.passengers[i].id);
    }
  }
  instance.profiles.validate();
  return instance;
}

namespace {

// Preference list from one row of a closeness table: descending score, ties
// by ascending identifier.
std::vector<std::string> list_from_row(const LabeledTable& table, size_t row) {
  std::vector<size_t> order(table.col_ids.size());
  for (size_t j = 0; j < order.size(); ++j) order[j] = j;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    double va = table.values.at(row, a);
    double vb = table.values.at(row, b);
    if (va != vb) return va > vb;
    return table.col_ids[a] < table.col_ids[b];
  });
  std::vector<std::string> list;
  list.reserve(order.size());
  for (size_t j : order) list.push_back(table.col_ids[j]);
  return list;
}

}  // namespace

MatchingInstance instance_from_closeness(const LabeledTable& passenger_closeness,
                                         const LabeledTable& driver_closeness) {
  const auto& passengers = passenger_closeness.row_ids;
  const auto& drivers = driver_closeness.row_ids;
  auto same_ids = [](std::vector<std::string> a, std::vector<std::string> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  };
  if (!same_ids(passenger_closeness.col_ids, drivers) ||
      !same_ids(driver_closeness.col_ids, passengers)) {
    throw InvalidInputError(
        "closeness tables do not cover the same driver/passenger sets");
  }

  MatchingInstance instance;
  instance.profiles.drivers = drivers;
  instance.profiles.passengers = passengers;
  for (size_t i = 0; i < passengers.size(); ++i) {
    instance.profiles.passenger_lists[passengers[i]] =
        list_from_row(passenger_closeness, i);
  }
  for (size_t j = 0; j < drivers.size(); ++j) {
    instance.profiles.driver_lists[drivers[j]] =
        list_from_row(driver_closeness, j);
  }
  instance.profiles.validate();

  instance.values.passengers = passengers;
  instance.values.drivers = drivers;
  instance.values.values = Matrix(passengers.size(), drivers.size());
  auto col_index = [](const std::vector<std::string>& ids,
                      const std::string& id) {
    return static_cast<size_t>(
        std::find(ids.begin(), ids.end(), id) - ids.begin());
  };
  for (size_t i = 0; i < passengers.size(); ++i) {
    for (size_t j = 0; j < drivers.size(); ++j) {
      double from_passenger = passenger_closeness.values.at(
          i, col_index(passenger_closeness.col_ids, drivers[j]));
      double from_driver = driver_closeness.values.at(
          j, col_index(driver_closeness.col_ids, passengers[i]));
      instance.values.values.at(i, j) = from_passenger + from_driver;
    }
  }
  return instance;
}

}  // namespace ridematch
