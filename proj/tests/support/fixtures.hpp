#pragma once

// Hand-transcribed reference instances shared by the unit and acceptance
// suites. Values marked "printed" are taken verbatim from the published
// worked-example tables, including their quirks; see fixtures/reference.

#include <string>
#include <vector>

#include "ridematch/assignment.hpp"
#include "ridematch/judgment.hpp"
#include "ridematch/matching.hpp"
#include "ridematch/topsis.hpp"
#include "ridematch/types.hpp"

namespace ridematch::testfix {

// --- Worked ranking example: passenger P1 judging six drivers. ---

inline PreferenceSpec p1_preferences() {
  PreferenceSpec p;
  p.gender_pref = Gender::male;
  p.age_pref = 30;
  p.age_tolerance = 5;
  p.status_pref = MaritalStatus::single;
  p.vhrange_pref = VehicleRange::comfort;
  p.pets_pref = true;
  p.music_pref = false;
  p.smoking_pref = false;
  return p;
}

inline WeightVector p1_weights() {
  return WeightVector(Role::passenger, {
      {Criterion::gender, 4},
      {Criterion::age, 9},
      {Criterion::status, 6},
      {Criterion::vhrange, 5},
      {Criterion::pets, 0},
      {Criterion::music, 8},
      {Criterion::smoking, 8},
      {Criterion::social_behavior, 6},
      {Criterion::driving_skills, 7},
      {Criterion::reliability, 0},
  });
}

inline UserProfile p1_profile() {
  UserProfile p;
  p.id = "P1";
  p.role = Role::passenger;
  p.gender = Gender::female;
  p.age = 28;
  p.status = MaritalStatus::single;
  return p;
}

inline std::vector<UserProfile> six_driver_profiles() {
  auto driver = [](std::string id, Gender g, int age, MaritalStatus s,
                   VehicleRange v, bool pets, bool music, bool smoking,
                   double social, double skills, double reliab) {
    UserProfile d;
    d.id = std::move(id);
    d.role = Role::driver;
    d.gender = g;
    d.age = age;
    d.status = s;
    d.vh_range = v;
    d.pets = pets;
    d.music = music;
    d.smoking = smoking;
    d.social_behavior = {social, 1};
    d.driving_skills = FeedbackAggregate{skills, 1};
    d.reliability = {reliab, 1};
    return d;
  };
  return {
      driver("D1", Gender::male, 26, MaritalStatus::married,
             VehicleRange::luxury, false, true, true, 4.77, 4.12, 7.78),
      driver("D2", Gender::female, 44, MaritalStatus::married,
             VehicleRange::basic, true, false, true, 1.06, 5.94, 6.39),
      driver("D3", Gender::female, 34, MaritalStatus::single,
             VehicleRange::basic, false, false, true, 5.58, 9.3, 6.46),
      driver("D4", Gender::male, 65, MaritalStatus::single,
             VehicleRange::luxury, false, false, false, 0.34, 4.34, 0.23),
      driver("D5", Gender::male, 38, MaritalStatus::single,
             VehicleRange::comfort, true, true, false, 4.37, 1.63, 8.65),
      driver("D6", Gender::female, 49, MaritalStatus::married,
             VehicleRange::comfort, true, true, true, 3.08, 8.91, 1.88),
  };
}

// The judgment matrix of the reference table taken verbatim, columns
// arranged in this library's canonical order (the table prints music before
// smoking; values follow the printed headers). Its last two columns
// disagree with the profile table: the printed driving-skills and
// reliability values appear swapped. Golden ranking tests consume this
// matrix as-is.
inline JudgmentMatrix p1_printed_judgment() {
  JudgmentMatrix m;
  m.evaluator_id = "P1";
  m.candidate_ids = {"D1", "D2", "D3", "D4", "D5", "D6"};
  auto set = criteria_for(Role::passenger);
  m.criteria.assign(set.begin(), set.end());
  m.entries = {
      1, 0.55, 0, 0, 0, 0, 0, 4.77, 7.78, 4.12,  //
      0, 0.26, 0, 0, 1, 0, 1, 1.06, 6.39, 5.94,  //
      0, 0.55, 1, 0, 0, 0, 1, 5.58, 6.46, 9.3,   //
      1, 0.12, 1, 0, 0, 1, 1, 0.34, 0.23, 4.34,  //
      1, 0.38, 1, 1, 1, 1, 0, 4.37, 8.65, 1.63,  //
      0, 0.2,  0, 1, 1, 0, 0, 3.08, 1.88, 8.91,  //
  };
  return m;
}

// --- Equal-sets instance of size 4 (m1..m4 vs w1..w4). ---

inline PreferenceProfileSet smp_size4() {
  PreferenceProfileSet s;
  s.drivers = {"m1", "m2", "m3", "m4"};
  s.passengers = {"w1", "w2", "w3", "w4"};
  s.driver_lists = {
      {"m1", {"w2", "w4", "w1", "w3"}},
      {"m2", {"w3", "w1", "w4", "w2"}},
      {"m3", {"w2", "w3", "w1", "w4"}},
      {"m4", {"w4", "w1", "w3", "w2"}},
  };
  s.passenger_lists = {
      {"w1", {"m2", "m1", "m4", "m3"}},
      {"w2", {"m4", "m3", "m1", "m2"}},
      {"w3", {"m1", "m4", "m3", "m2"}},
      {"w4", {"m2", "m1", "m4", "m3"}},
  };
  return s;
}

// --- 3 passengers vs 6 drivers, the printed preference lists. ---
// PL(D5) is printed as P2,P1,P3 although the closeness table it derives
// from ranks P3,P1,P2; matching goldens consume the printed lists verbatim.

inline PreferenceProfileSet instance_3x6_printed() {
  PreferenceProfileSet s;
  s.drivers = {"D1", "D2", "D3", "D4", "D5", "D6"};
  s.passengers = {"P1", "P2", "P3"};
  s.passenger_lists = {
      {"P1", {"D2", "D1", "D5", "D3", "D6", "D4"}},
      {"P2", {"D2", "D3", "D4", "D6", "D1", "D5"}},
      {"P3", {"D6", "D3", "D4", "D5", "D1", "D2"}},
  };
  s.driver_lists = {
      {"D1", {"P1", "P3", "P2"}},
      {"D2", {"P1", "P2", "P3"}},
      {"D3", {"P3", "P2", "P1"}},
      {"D4", {"P1", "P2", "P3"}},
      {"D5", {"P2", "P1", "P3"}},
      {"D6", {"P3", "P2", "P1"}},
  };
  return s;
}

// Closeness tables behind the 3x6 instance.
inline LabeledTable closeness_passengers_3x6() {
  LabeledTable t;
  t.row_ids = {"P1", "P2", "P3"};
  t.col_ids = {"D1", "D2", "D3", "D4", "D5", "D6"};
  t.values = Matrix(3, 6);
  t.values.data = {
      0.5,  0.7,  0.31, 0.12, 0.48, 0.25,  //
      0.15, 0.9,  0.72, 0.38, 0.14, 0.19,  //
      0.22, 0.17, 0.77, 0.57, 0.24, 0.81,  //
  };
  return t;
}

inline LabeledTable closeness_drivers_3x6() {
  LabeledTable t;
  t.row_ids = {"D1", "D2", "D3", "D4", "D5", "D6"};
  t.col_ids = {"P1", "P2", "P3"};
  t.values = Matrix(6, 3);
  t.values.data = {
      0.89, 0.55, 0.68,  //
      0.9,  0.7,  0.57,  //
      0.38, 0.42, 0.54,  //
      0.29, 0.19, 0.17,  //
      0.25, 0.15, 0.28,  //
      0.16, 0.18, 0.23,  //
  };
  return t;
}

// --- 4 passengers vs 3 drivers. ---

inline PreferenceProfileSet instance_4x3() {
  PreferenceProfileSet s;
  s.drivers = {"D1", "D2", "D3"};
  s.passengers = {"P1", "P2", "P3", "P4"};
  s.passenger_lists = {
      {"P1", {"D2", "D1", "D3"}},
      {"P2", {"D2", "D3", "D1"}},
      {"P3", {"D3", "D2", "D1"}},
      {"P4", {"D1", "D2", "D3"}},
  };
  s.driver_lists = {
      {"D1", {"P1", "P3", "P4", "P2"}},
      {"D2", {"P1", "P4", "P2", "P3"}},
      {"D3", {"P3", "P4", "P2", "P1"}},
  };
  return s;
}

inline Matching pairs_to_matching(
    const PreferenceProfileSet& profiles,
    std::vector<std::pair<std::string, std::string>> pairs) {
  return make_matching(profiles, std::move(pairs));
}

}  // namespace ridematch::testfix
