#include "ridematch/io.hpp"

#include <filesystem>
#include <unistd.h>

#include <doctest.h>

#include "support/fixtures.hpp"

using namespace ridematch;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("ridematch_io_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static inline int counter = 0;
};

}  // namespace

TEST_CASE("population CSV round trip is lossless") {
  GenConfig cfg;
  cfg.n_drivers = 25;
  cfg.n_passengers = 30;
  cfg.seed = 4242;
  cfg.skew = Skew::clustered;
  Population pop = generate_population(cfg);

  TempDir dir;
  io::save_population_csv(pop, dir.path);
  Population loaded = io::load_population_csv(dir.path);
  CHECK(loaded.drivers == pop.drivers);
  CHECK(loaded.passengers == pop.passengers);
  CHECK(loaded.driver_prefs == pop.driver_prefs);
  CHECK(loaded.passenger_prefs == pop.passenger_prefs);
  CHECK(loaded.driver_weights == pop.driver_weights);
  CHECK(loaded.passenger_weights == pop.passenger_weights);

  SUBCASE("same seed writes byte-identical tables") {
    TempDir second;
    io::save_population_csv(generate_population(cfg), second.path);
    for (const char* name :
         {"DriverProfile.csv", "DriverPreferences.csv", "DriverWeight.csv",
          "PassengerProfile.csv", "PassengerPreferences.csv",
          "PassengerWeight.csv"}) {
      CHECK(io::read_file(dir.path / name) ==
            io::read_file(second.path / name));
    }
  }
}

TEST_CASE("profile CSV schema violations carry coordinates") {
  TempDir dir;
  fs::path file = dir.path / "DriverProfile.csv";
  io::write_file(file,
                 "id,gender,age,status,vh_range,pets,music,smoking,"
                 "social_behavior,driving_skills,reliability\n"
                 "D1,m,forty,single,basic,yes,no,no,5,5,5\n");
  try {
    io::load_profiles_csv(file, Role::driver);
    FAIL("expected InvalidInputError");
  } catch (const InvalidInputError& e) {
    std::string msg = e.what();
    CHECK(msg.find("row 2") != std::string::npos);
    CHECK(msg.find("col 3") != std::string::npos);
    CHECK(msg.find("integer") != std::string::npos);
  }

  SUBCASE("missing column is named") {
    io::write_file(file, "id,gender\nD1,m\n");
    CHECK_THROWS_WITH_AS(io::load_profiles_csv(file, Role::driver),
                         doctest::Contains("missing column 'age'"),
                         InvalidInputError);
  }

  SUBCASE("duplicate ids are rejected") {
    io::write_file(file,
                   "id,gender,age,status,vh_range,pets,music,smoking,"
                   "social_behavior,driving_skills,reliability\n"
                   "D1,m,40,single,basic,yes,no,no,5,5,5\n"
                   "D1,f,41,single,basic,yes,no,no,5,5,5\n");
    CHECK_THROWS_WITH_AS(io::load_profiles_csv(file, Role::driver),
                         doctest::Contains("duplicate id"),
                         InvalidInputError);
  }

  SUBCASE("bad enum is located") {
    io::write_file(file,
                   "id,gender,age,status,vh_range,pets,music,smoking,"
                   "social_behavior,driving_skills,reliability\n"
                   "D1,m,40,widowed,basic,yes,no,no,5,5,5\n");
    try {
      io::load_profiles_csv(file, Role::driver);
      FAIL("expected InvalidInputError");
    } catch (const InvalidInputError& e) {
      std::string msg = e.what();
      CHECK(msg.find("row 2") != std::string::npos);
      CHECK(msg.find("col 4") != std::string::npos);
      CHECK(msg.find("marital status") != std::string::npos);
    }
  }

  SUBCASE("bad boolean is located") {
    io::write_file(file,
                   "id,gender,age,status,vh_range,pets,music,smoking,"
                   "social_behavior,driving_skills,reliability\n"
                   "D1,m,40,single,basic,maybe,no,no,5,5,5\n");
    CHECK_THROWS_WITH_AS(io::load_profiles_csv(file, Role::driver),
                         doctest::Contains("yes/no"), InvalidInputError);
  }
}

TEST_CASE("profile-set JSON round trip") {
  auto instance = testfix::instance_3x6_printed();
  std::string text = io::to_json(instance);
  PreferenceProfileSet loaded = io::profile_set_from_json(text);
  CHECK(loaded.drivers == instance.drivers);
  CHECK(loaded.passengers == instance.passengers);
  CHECK(loaded.driver_lists == instance.driver_lists);
  CHECK(loaded.passenger_lists == instance.passenger_lists);

  CHECK_THROWS_AS(io::profile_set_from_json("{\"drivers\": []"),
                  InvalidInputError);
  CHECK_THROWS_AS(io::profile_set_from_json("{}"), InvalidInputError);
}

TEST_CASE("matching JSON round trip") {
  auto instance = testfix::instance_3x6_printed();
  Matching m = sm_match(instance);
  Matching loaded = io::matching_from_json(io::to_json(m));
  CHECK(loaded == m);
}

TEST_CASE("labeled table CSV round trip") {
  TempDir dir;
  fs::path file = dir.path / "closeness.csv";
  LabeledTable table = testfix::closeness_passengers_3x6();
  io::save_table_csv(table, file);
  LabeledTable loaded = io::load_table_csv(file);
  CHECK(loaded.row_ids == table.row_ids);
  CHECK(loaded.col_ids == table.col_ids);
  CHECK(loaded.values.data == table.values.data);
}

TEST_CASE("judgment CSV accepts any column order") {
  TempDir dir;
  fs::path file = dir.path / "judgment.csv";
  // Printed layout: music ahead of smoking.
  io::write_file(
      file,
      "id,gender,age,status,vhrange,pets,music,smoking,social_behavior,"
      "driving_skills,reliability\n"
      "D1,1,0.55,0,0,0,0,0,4.77,7.78,4.12\n"
      "D2,0,0.26,0,0,1,1,0,1.06,6.39,5.94\n"
      "D3,0,0.55,1,0,0,1,0,5.58,6.46,9.3\n"
      "D4,1,0.12,1,0,0,1,1,0.34,0.23,4.34\n"
      "D5,1,0.38,1,1,1,0,1,4.37,8.65,1.63\n"
      "D6,0,0.2,0,1,1,0,0,3.08,1.88,8.91\n");
  JudgmentMatrix m = io::load_judgment_csv(file, "P1");
  CHECK(m.rows() == 6);
  CHECK(m.criteria[5] == Criterion::music);
  RankingResult result = topsis_rank(m, testfix::p1_weights());
  CHECK(result.preference_list ==
        std::vector<std::string>{"D5", "D3", "D4", "D1", "D2", "D6"});
}

TEST_CASE("ranking result serializations") {
  RankingResult r;
  r.evaluator_id = "P1";
  r.method = RankMethod::topsis;
  r.scores = {{"D1", 0.25}, {"D2", 0.75}};
  r.preference_list = {"D2", "D1"};
  std::string csv = io::to_csv(r);
  CHECK(csv.find("evaluator_id,method,rank,candidate_id,score\n") == 0);
  CHECK(csv.find("P1,topsis,1,D2,0.75") != std::string::npos);
  std::string json = io::to_json(r);
  CHECK(json.find("\"preference_list\"") != std::string::npos);
}

TEST_CASE("metric CSV rows") {
  MetricReport report;
  report.regret_cost = 3;
  report.egalitarian_cost = 12.0;
  report.egalitarian_norm = 4.0;
  report.sex_equality_cost = 2.0;
  report.sex_equality_norm = 2.0 / 3.0;
  report.matched_count = 3;
  std::string row = io::metric_csv_row("inst", "sm", 6, 3, report);
  CHECK(row == "inst,sm,6,3,3,12,4,2," + io::format_double(2.0 / 3.0) +
                   ",,\n");
  report.objective = 4.3;
  report.price_of_stability = 0.12;
  row = io::metric_csv_row("inst", "sm", 6, 3, report);
  CHECK(row.find(",4.3,0.12\n") != std::string::npos);
}

TEST_CASE("fnv1a matches the published test vector") {
  CHECK(io::fnv1a("") == 0xcbf29ce484222325ULL);
  CHECK(io::fnv1a("abc") == 0xe71fa2190541574bULL);
}

TEST_CASE("manifest lists hashes of every table") {
  GenConfig cfg;
  cfg.n_drivers = 3;
  cfg.n_passengers = 2;
  cfg.seed = 55;
  TempDir dir;
  Population pop = generate_population(cfg);
  io::save_population_csv(pop, dir.path);
  std::vector<fs::path> files;
  for (const char* name :
       {"DriverProfile.csv", "DriverPreferences.csv", "DriverWeight.csv",
        "PassengerProfile.csv", "PassengerPreferences.csv",
        "PassengerWeight.csv"}) {
    files.push_back(dir.path / name);
  }
  io::write_manifest(cfg, dir.path, files);
  std::string manifest = io::read_file(dir.path / "manifest.json");
  CHECK(manifest.find("xoshiro256**") != std::string::npos);
  CHECK(manifest.find("DriverProfile.csv") != std::string::npos);
  CHECK(manifest.find("fnv1a:") != std::string::npos);
  CHECK(manifest.find("\"seed\": 55") != std::string::npos);
}

TEST_CASE("trace serializations are well formed") {
  TopsisTrace trace;
  topsis_rank(testfix::p1_printed_judgment(), testfix::p1_weights(), &trace);
  std::string json = io::to_json(trace);
  for (const char* key : {"normalized", "weighted", "positive_ideal",
                          "negative_ideal", "sep_positive", "sep_negative",
                          "closeness"}) {
    CHECK(json.find(key) != std::string::npos);
  }

  std::vector<ProposalEvent> events;
  gale_shapley(testfix::smp_size4(), &events);
  std::string log = io::to_json(events);
  CHECK(log.find("propose") != std::string::npos);
  CHECK(log.find("engage") != std::string::npos);
}
