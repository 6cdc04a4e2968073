#include "ridematch/judgment.hpp"

#include <algorithm>
#include <random>

#include <doctest.h>

#include "support/fixtures.hpp"

using namespace ridematch;

TEST_CASE("binary_score matches on equality only") {
  CHECK(binary_score(Gender::male, Gender::male) == 1.0);
  CHECK(binary_score(MaritalStatus::single, MaritalStatus::married) == 0.0);
  CHECK(binary_score(VehicleRange::comfort, VehicleRange::comfort) == 1.0);
  CHECK(binary_score(true, false) == 0.0);
  CHECK(binary_score(false, false) == 1.0);
}

TEST_CASE("binary_score rejects mixed attribute domains") {
  CHECK_THROWS_AS(binary_score(Gender::male, MaritalStatus::single),
                  InvalidInputError);
  CHECK_THROWS_AS(binary_score(true, VehicleRange::basic), InvalidInputError);
}

TEST_CASE("binary_score is symmetric") {
  std::vector<AttributeValue> values = {Gender::male, Gender::female,
                                        MaritalStatus::married, true, false,
                                        VehicleRange::luxury};
  for (const auto& a : values) {
    for (const auto& b : values) {
      if (a.index() != b.index()) continue;
      CHECK(binary_score(a, b) == binary_score(b, a));
    }
  }
}

TEST_CASE("age_score worked values") {
  CHECK(age_score(30, 5, 26) == doctest::Approx(5.0 / 9.0));
  CHECK(format_score_2dp(age_score(30, 5, 26)) == "0.55");
  CHECK(age_score(30, 5, 30) == 1.0);
  CHECK(age_score(30, 5, 44) == doctest::Approx(5.0 / 19.0));
  CHECK(format_score_2dp(age_score(30, 5, 44)) == "0.26");
}

TEST_CASE("age_score rejects tolerance below 1") {
  CHECK_THROWS_AS(age_score(30, 0, 25), InvalidInputError);
}

TEST_CASE("age_score range and symmetry around the preferred age") {
  std::mt19937 gen(7);
  std::uniform_int_distribution<int> age(19, 90), pref(19, 90), tol(1, 20);
  for (int i = 0; i < 500; ++i) {
    int p = pref(gen), t = tol(gen), a = age(gen);
    double s = age_score(p, t, a);
    CHECK(s > 0.0);
    CHECK(s <= 1.0);
    CHECK((s == 1.0) == (a == p));
    CHECK(s == doctest::Approx(age_score(p, t, 2 * p - a)));
  }
}

TEST_CASE("evaluation labels map to the fixed score scale") {
  CHECK(evaluation_to_score(EvaluationCategory::social_behavior,
                            EvaluationLabel::friendly) == 10.0);
  CHECK(evaluation_to_score(EvaluationCategory::social_behavior,
                            EvaluationLabel::polite) == 5.0);
  CHECK(evaluation_to_score(EvaluationCategory::social_behavior,
                            EvaluationLabel::rude) == 0.0);
  CHECK(evaluation_to_score(EvaluationCategory::driving_skills,
                            EvaluationLabel::acceptable) == 5.0);
  CHECK(evaluation_to_score(EvaluationCategory::reliability,
                            EvaluationLabel::not_reliable) == 0.0);
  CHECK_THROWS_AS(evaluation_to_score(EvaluationCategory::reliability,
                                      EvaluationLabel::friendly),
                  InvalidInputError);
}

TEST_CASE("apply_feedback replaces the cold-start default") {
  FeedbackAggregate agg = FeedbackAggregate::cold_start();
  CHECK(agg.mean == 5.0);
  CHECK(agg.count == 0);
  FeedbackAggregate updated = apply_feedback(agg, 10.0);
  CHECK(updated.mean == 10.0);
  CHECK(updated.count == 1);
}

TEST_CASE("apply_feedback keeps the running mean") {
  FeedbackAggregate agg;
  for (double score : {10.0, 5.0, 0.0}) {
    agg = apply_feedback(agg, score);
  }
  CHECK(agg.mean == doctest::Approx(5.0));
  CHECK(agg.count == 3);

  // Expanding {mean 7.78, count 9} by one 10: mean of the extended multiset.
  FeedbackAggregate history{7.78, 9};
  FeedbackAggregate next = apply_feedback(history, 10.0);
  CHECK(next.count == 10);
  CHECK(next.mean == doctest::Approx((7.78 * 9 + 10.0) / 10.0).epsilon(1e-12));
}

TEST_CASE("apply_feedback rejects out-of-range scores") {
  CHECK_THROWS_AS(apply_feedback({5.0, 1}, 10.5), InvalidInputError);
  CHECK_THROWS_AS(apply_feedback({5.0, 1}, -0.1), InvalidInputError);
}

TEST_CASE("apply_feedback is order independent") {
  std::mt19937 gen(11);
  std::uniform_real_distribution<double> score(0.0, 10.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> scores(1 + gen() % 12);
    for (auto& s : scores) s = score(gen);
    FeedbackAggregate forward;
    for (double s : scores) forward = apply_feedback(forward, s);
    std::shuffle(scores.begin(), scores.end(), gen);
    FeedbackAggregate shuffled;
    for (double s : scores) shuffled = apply_feedback(shuffled, s);
    CHECK(forward.count == shuffled.count);
    CHECK(forward.mean == doctest::Approx(shuffled.mean).epsilon(1e-12));
  }
}

TEST_CASE("judgment matrix of the worked example") {
  auto drivers = testfix::six_driver_profiles();
  JudgmentMatrix m = build_judgment_matrix(testfix::p1_profile(),
                                           testfix::p1_preferences(), drivers);
  REQUIRE(m.rows() == 6);
  REQUIRE(m.cols() == 10);
  CHECK(m.candidate_ids ==
        std::vector<std::string>{"D1", "D2", "D3", "D4", "D5", "D6"});

  // Row D1 under profile-table semantics.
  size_t gender = m.column_of(Criterion::gender);
  size_t age = m.column_of(Criterion::age);
  size_t status = m.column_of(Criterion::status);
  size_t vhrange = m.column_of(Criterion::vhrange);
  size_t pets = m.column_of(Criterion::pets);
  size_t smoking = m.column_of(Criterion::smoking);
  size_t music = m.column_of(Criterion::music);
  size_t social = m.column_of(Criterion::social_behavior);
  size_t skills = m.column_of(Criterion::driving_skills);
  size_t reliab = m.column_of(Criterion::reliability);

  CHECK(m.at(0, gender) == 1.0);
  CHECK(m.at(0, age) == doctest::Approx(5.0 / 9.0));
  CHECK(m.at(0, status) == 0.0);
  CHECK(m.at(0, vhrange) == 0.0);
  CHECK(m.at(0, pets) == 0.0);
  CHECK(m.at(0, smoking) == 0.0);
  CHECK(m.at(0, music) == 0.0);
  CHECK(m.at(0, social) == 4.77);
  CHECK(m.at(0, skills) == 4.12);
  CHECK(m.at(0, reliab) == 7.78);

  // Binary and age entries across all drivers against the printed table.
  const JudgmentMatrix printed = testfix::p1_printed_judgment();
  for (size_t i = 0; i < 6; ++i) {
    for (Criterion c : m.criteria) {
      if (is_feedback_criterion(c)) continue;
      size_t col = m.column_of(c);
      size_t printed_col = printed.column_of(c);
      if (c == Criterion::age) {
        CHECK(format_score_2dp(m.at(i, col)) ==
              format_score_2dp(printed.at(i, printed_col)));
      } else {
        CHECK(m.at(i, col) == printed.at(i, printed_col));
      }
    }
  }
}

TEST_CASE("judgment row of a perfectly matching candidate") {
  auto prefs = testfix::p1_preferences();
  UserProfile ideal;
  ideal.id = "DX";
  ideal.role = Role::driver;
  ideal.gender = prefs.gender_pref;
  ideal.age = prefs.age_pref;
  ideal.status = prefs.status_pref;
  ideal.vh_range = prefs.vhrange_pref;
  ideal.pets = prefs.pets_pref;
  ideal.music = prefs.music_pref;
  ideal.smoking = prefs.smoking_pref;
  ideal.driving_skills = FeedbackAggregate{};

  std::vector<UserProfile> candidates = {ideal};
  JudgmentMatrix m =
      build_judgment_matrix(testfix::p1_profile(), prefs, candidates);
  for (Criterion c : m.criteria) {
    if (is_feedback_criterion(c)) continue;
    CHECK(m.at(0, m.column_of(c)) == 1.0);
  }
}

TEST_CASE("zeroed feedback history yields the cold-start default") {
  auto prefs = testfix::p1_preferences();
  UserProfile fresh = testfix::six_driver_profiles()[0];
  fresh.social_behavior = FeedbackAggregate::cold_start();
  fresh.driving_skills = FeedbackAggregate::cold_start();
  fresh.reliability = FeedbackAggregate::cold_start();

  std::vector<UserProfile> candidates = {fresh};
  JudgmentMatrix m =
      build_judgment_matrix(testfix::p1_profile(), prefs, candidates);
  CHECK(m.at(0, m.column_of(Criterion::social_behavior)) == 5.0);
  CHECK(m.at(0, m.column_of(Criterion::driving_skills)) == 5.0);
  CHECK(m.at(0, m.column_of(Criterion::reliability)) == 5.0);
}

TEST_CASE("judgment rows depend only on their own candidate") {
  auto drivers = testfix::six_driver_profiles();
  JudgmentMatrix full = build_judgment_matrix(
      testfix::p1_profile(), testfix::p1_preferences(), drivers);
  for (size_t keep = 0; keep < drivers.size(); ++keep) {
    std::vector<UserProfile> only = {drivers[keep]};
    JudgmentMatrix single = build_judgment_matrix(
        testfix::p1_profile(), testfix::p1_preferences(), only);
    for (size_t j = 0; j < full.cols(); ++j) {
      CHECK(single.at(0, j) == full.at(keep, j));
    }
  }
}

TEST_CASE("judgment matrix input errors") {
  CHECK_THROWS_AS(build_judgment_matrix(testfix::p1_profile(),
                                        testfix::p1_preferences(), {}),
                  EmptyInputError);
  std::vector<UserProfile> wrong_side = {testfix::p1_profile()};
  CHECK_THROWS_AS(build_judgment_matrix(testfix::p1_profile(),
                                        testfix::p1_preferences(), wrong_side),
                  InvalidInputError);
}

TEST_CASE("driver evaluators use the eight-criterion set") {
  UserProfile driver = testfix::six_driver_profiles()[0];
  PreferenceSpec prefs;
  prefs.age_pref = 30;
  UserProfile passenger = testfix::p1_profile();
  std::vector<UserProfile> candidates = {passenger};
  JudgmentMatrix m = build_judgment_matrix(driver, prefs, candidates);
  CHECK(m.cols() == 8);
  CHECK_THROWS_AS(m.column_of(Criterion::vhrange), InvalidInputError);
  CHECK_THROWS_AS(m.column_of(Criterion::driving_skills), InvalidInputError);
}

TEST_CASE("two-decimal display truncates and strips zeros") {
  CHECK(format_score_2dp(0.125) == "0.12");
  CHECK(format_score_2dp(5.0 / 24.0) == "0.2");
  CHECK(format_score_2dp(1.0) == "1");
  CHECK(format_score_2dp(0.5555555) == "0.55");
  CHECK(format_score_2dp(0.0) == "0");
}
