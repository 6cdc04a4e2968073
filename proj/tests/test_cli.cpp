// Integration tests that spawn the real CLI binary.

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <doctest.h>

#include "ridematch/io.hpp"
#include "ridematch/matching.hpp"

using namespace ridematch;
namespace fs = std::filesystem;

namespace {

const std::string kCli = RIDEMATCH_CLI_PATH;
const fs::path kFixtures = fs::path(RIDEMATCH_FIXTURE_DIR) / "reference";

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("ridematch_cli_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static inline int counter = 0;
};

int run(const std::string& args, const fs::path& capture = {}) {
  std::string cmd = kCli + " " + args;
  if (!capture.empty()) {
    cmd += " >" + capture.string() + " 2>&1";
  } else {
    cmd += " >/dev/null 2>&1";
  }
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("rank on the printed judgment fixture reproduces the golden list") {
  TempDir out;
  int code = run("--out " + out.path.string() + " rank --judgment " +
                 (kFixtures / "example_p1" / "judgment_printed.csv").string() +
                 " --weights " +
                 (kFixtures / "example_p1" / "PassengerWeight.csv").string() +
                 " --evaluator P1 --side passenger --method topsis");
  REQUIRE(code == 0);
  std::string csv = io::read_file(out.path / "rankings.csv");
  CHECK(csv.find("P1,topsis,1,D5,") != std::string::npos);
  CHECK(csv.find("P1,topsis,2,D3,") != std::string::npos);
  CHECK(csv.find("P1,topsis,3,D4,") != std::string::npos);
  CHECK(csv.find("P1,topsis,4,D1,") != std::string::npos);
  CHECK(csv.find("P1,topsis,5,D2,") != std::string::npos);
  CHECK(csv.find("P1,topsis,6,D6,") != std::string::npos);
}

TEST_CASE("rank from the profile tables (profile-column semantics)") {
  // The printed matrix carries two transposed feedback columns; building
  // from the profile table itself swaps D3/D4 in the ranking.
  TempDir out;
  int code = run(
      "--out " + out.path.string() + " rank --candidates " +
      (kFixtures / "example_p1" / "DriverProfile.csv").string() +
      " --prefs " +
      (kFixtures / "example_p1" / "PassengerPreferences.csv").string() +
      " --weights " +
      (kFixtures / "example_p1" / "PassengerWeight.csv").string() +
      " --side passenger --method topsis --method wsm");
  REQUIRE(code == 0);
  std::string csv = io::read_file(out.path / "rankings.csv");
  CHECK(csv.find("P1,topsis,1,D5,") != std::string::npos);
  CHECK(csv.find("P1,topsis,2,D4,") != std::string::npos);
  CHECK(csv.find("P1,topsis,3,D3,") != std::string::npos);
  // Both methods ran, so the head-to-head superiority table exists.
  CHECK(fs::exists(out.path / "superiority.csv"));
}

TEST_CASE("rank with --trace dumps the step trace") {
  TempDir out;
  int code = run("--trace --out " + out.path.string() + " rank --judgment " +
                 (kFixtures / "example_p1" / "judgment_printed.csv").string() +
                 " --weights " +
                 (kFixtures / "example_p1" / "PassengerWeight.csv").string() +
                 " --evaluator P1 --method topsis");
  REQUIRE(code == 0);
  std::string trace =
      io::read_file(out.path / "traces" / "P1_topsis.json");
  CHECK(trace.find("\"normalized\"") != std::string::npos);
  CHECK(trace.find("\"closeness\"") != std::string::npos);
}

TEST_CASE("rank on an empty candidate file exits with the empty-input code") {
  TempDir out;
  io::write_file(out.path / "empty.csv",
                 "id,gender,age,status,vh_range,pets,music,smoking,"
                 "social_behavior,driving_skills,reliability\n");
  int code = run(
      "--out " + out.path.string() + " rank --candidates " +
      (out.path / "empty.csv").string() + " --prefs " +
      (kFixtures / "example_p1" / "PassengerPreferences.csv").string() +
      " --weights " +
      (kFixtures / "example_p1" / "PassengerWeight.csv").string() +
      " --side passenger");
  CHECK(code == 3);
}

TEST_CASE("match computes the minimum-choice matching with metrics") {
  TempDir out;
  int code = run("--out " + out.path.string() + " match --input " +
                 (kFixtures / "instance_3x6" / "profiles.json").string() +
                 " --algorithm sm --values " +
                 (kFixtures / "instance_3x6" / "pair_values.csv").string());
  REQUIRE(code == 0);
  Matching m = io::load_matching(out.path / "matching.json");
  Matching expected;
  expected.pairs = {{"D2", "P1"}, {"D3", "P2"}, {"D6", "P3"}};
  expected.unmatched_drivers = {"D1", "D4", "D5"};
  expected.normalize();
  CHECK(m == expected);
  std::string metrics = io::read_file(out.path / "metrics.csv");
  CHECK(metrics.find("profiles,sm,6,3,2,8,") != std::string::npos);
  CHECK(metrics.find("0.1209") != std::string::npos);
}

TEST_CASE("match refuses gs on unequal sets") {
  TempDir out;
  fs::path log = out.path / "log.txt";
  int code = run("--out " + out.path.string() + " match --input " +
                     (kFixtures / "instance_4x3" / "profiles.json").string() +
                     " --algorithm gs",
                 log);
  CHECK(code == 4);
  std::string text = io::read_file(log);
  CHECK(text.find("equal sets only") != std::string::npos);
}

TEST_CASE("verify flags a hand-edited unstable matching") {
  TempDir out;
  io::write_file(out.path / "unstable.json",
                 R"({"pairs": [["m1","w1"],["m2","w2"],["m3","w4"],["m4","w3"]],
                     "unmatched_drivers": [], "unmatched_passengers": []})");
  fs::path log = out.path / "log.txt";
  int code = run("verify --input " +
                     (kFixtures / "smp_size4" / "profiles.json").string() +
                     " --matching " + (out.path / "unstable.json").string(),
                 log);
  CHECK(code == 6);
  std::string text = io::read_file(log);
  CHECK(text.find("blocking pair") != std::string::npos);
  CHECK(text.find("(m1, w4)") != std::string::npos);

  SUBCASE("a stable matching passes") {
    TempDir out2;
    REQUIRE(run("--out " + out2.path.string() + " match --input " +
                (kFixtures / "smp_size4" / "profiles.json").string() +
                " --algorithm gs") == 0);
    CHECK(run("verify --input " +
              (kFixtures / "smp_size4" / "profiles.json").string() +
              " --matching " +
              (out2.path / "matching.json").string()) == 0);
  }
}

TEST_CASE("match emits the proposal log under --trace") {
  TempDir out;
  int code = run("--trace --out " + out.path.string() + " match --input " +
                 (kFixtures / "instance_4x3" / "profiles.json").string() +
                 " --algorithm sm");
  REQUIRE(code == 0);
  std::string log = io::read_file(out.path / "proposals.json");
  CHECK(log.find("\"propose\"") != std::string::npos);
  CHECK(log.find("\"engage\"") != std::string::npos);
}

TEST_CASE("bench accepts a plan file and emits figure data") {
  TempDir out;
  io::write_file(out.path / "plan.json",
                 R"({"mode": "bench", "sizes": [[4,4],[6,3]], "trials": 3,
                     "algorithms": ["sm","passenger_opt"], "seed": 5,
                     "output_dir": ")" +
                     (out.path / "results").string() + R"("})");
  int code = run("bench --plan " + (out.path / "plan.json").string());
  REQUIRE(code == 0);
  for (const char* name :
       {"plan.json", "results.csv", "fig_regret.csv", "fig_egalitarian.csv",
        "fig_sex_equality_norm.csv", "fig_delta.csv", "fig_objective.csv"}) {
    CHECK(fs::exists(out.path / "results" / name));
  }
  std::string results = io::read_file(out.path / "results" / "results.csv");
  // 2 sizes x 3 trials x 2 algorithms rows plus the header.
  size_t lines = std::count(results.begin(), results.end(), '\n');
  CHECK(lines == 13);
}

TEST_CASE("bench rejects gs on unequal sizes") {
  TempDir out;
  fs::path log = out.path / "log.txt";
  int code = run("--out " + out.path.string() +
                     " bench --sizes 4x6 --trials 2 --algorithms gs",
                 log);
  CHECK(code == 2);
  std::string text = io::read_file(log);
  CHECK(text.find("equal sizes") != std::string::npos);
}

TEST_CASE("match with an empty side emits the matching, no metrics") {
  TempDir out;
  io::write_file(out.path / "empty_side.json",
                 R"({"drivers": [], "passengers": ["p1"],
                     "driver_lists": {}, "passenger_lists": {"p1": []}})");
  fs::path log = out.path / "log.txt";
  int code = run("--out " + (out.path / "m").string() + " match --input " +
                     (out.path / "empty_side.json").string() +
                     " --algorithm sm",
                 log);
  CHECK(code == 0);
  CHECK(fs::exists(out.path / "m" / "matching.json"));
  CHECK_FALSE(fs::exists(out.path / "m" / "metrics.csv"));
  CHECK(io::read_file(log).find("metrics undefined") != std::string::npos);
}

TEST_CASE("rank honors --format json") {
  TempDir out;
  int code = run("--format json --out " + out.path.string() +
                 " rank --judgment " +
                 (kFixtures / "example_p1" / "judgment_printed.csv").string() +
                 " --weights " +
                 (kFixtures / "example_p1" / "PassengerWeight.csv").string() +
                 " --evaluator P1 --method topsis");
  REQUIRE(code == 0);
  CHECK(fs::exists(out.path / "rankings.json"));
  CHECK_FALSE(fs::exists(out.path / "rankings.csv"));
  std::string json = io::read_file(out.path / "rankings.json");
  CHECK(json.find("\"preference_list\"") != std::string::npos);
  CHECK(json.find("D5") != std::string::npos);
}

TEST_CASE("gen rejects invalid configuration") {
  TempDir out;
  fs::path log = out.path / "log.txt";
  int code = run("--out " + out.path.string() +
                     " gen --drivers 0 --passengers 5",
                 log);
  CHECK(code == 2);
  CHECK(io::read_file(log).find("at least 1") != std::string::npos);
}

TEST_CASE("bench oracle-check verifies outputs and guards its size") {
  TempDir out;
  CHECK(run("--seed 3 --out " + (out.path / "ok").string() +
            " bench --sizes 4 5x3 --trials 3 --algorithms sm passenger_opt"
            " --oracle-check") == 0);
  fs::path log = out.path / "log.txt";
  int code = run("--seed 3 --out " + (out.path / "big").string() +
                     " bench --sizes 8 --trials 2 --oracle-check",
                 log);
  CHECK(code == 5);
  CHECK(io::read_file(log).find("refuse") != std::string::npos);
}

TEST_CASE("unknown flags exit with the invalid-input code") {
  CHECK(run("match --input nowhere.json --no-such-flag") == 2);
  CHECK(run("rank") == 2);  // no input files named at all
}
