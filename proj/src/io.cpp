#include "ridematch/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ridematch/rng.hpp"

namespace ridematch::io {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string trim(const std::string& s) {
  size_t begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  size_t end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) {
    fields.push_back(trim(field));
  }
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

// Parsed CSV with a header row; cell access reports file/row/column
// coordinates on every schema violation.
class CsvReader {
 public:
  CsvReader(const std::filesystem::path& file) : file_(file.string()) {
    std::ifstream in(file);
    if (!in) {
      throw InvalidInputError("cannot open " + file_);
    }
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
      if (trim(line).empty()) continue;
      if (first) {
        header_ = split_csv_line(line);
        first = false;
      } else {
        rows_.push_back(split_csv_line(line));
      }
    }
    if (first) {
      throw InvalidInputError(file_ + ": missing header row");
    }
  }

  size_t rows() const { return rows_.size(); }
  const std::vector<std::string>& header() const { return header_; }

  size_t column(const std::string& name) const {
    for (size_t i = 0; i < header_.size(); ++i) {
      if (header_[i] == name) return i;
    }
    throw InvalidInputError(file_ + ": missing column '" + name + "'");
  }

  bool has_column(const std::string& name) const {
    for (const auto& h : header_) {
      if (h == name) return true;
    }
    return false;
  }

  const std::string& cell(size_t row, size_t col) const {
    if (col >= rows_[row].size()) {
      throw InvalidInputError(coords(row, col) + ": missing field");
    }
    return rows_[row][col];
  }

  std::string cell(size_t row, const std::string& name) const {
    return cell(row, column(name));
  }

  int int_cell(size_t row, const std::string& name) const {
    const std::string& raw = cell(row, column(name));
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(raw.data(), raw.data() + raw.size(), value);
    if (ec != std::errc{} || ptr != raw.data() + raw.size()) {
      throw InvalidInputError(coords(row, column(name)) +
                              ": expected integer, got '" + raw + "'");
    }
    return value;
  }

  double double_cell(size_t row, const std::string& name) const {
    const std::string& raw = cell(row, column(name));
    try {
      size_t consumed = 0;
      double value = std::stod(raw, &consumed);
      if (consumed != raw.size()) throw std::invalid_argument(raw);
      return value;
    } catch (const std::exception&) {
      throw InvalidInputError(coords(row, column(name)) +
                              ": expected real, got '" + raw + "'");
    }
  }

  bool bool_cell(size_t row, const std::string& name) const {
    const std::string raw = cell(row, column(name));
    if (raw == "yes") return true;
    if (raw == "no") return false;
    throw InvalidInputError(coords(row, column(name)) +
                            ": expected yes/no, got '" + raw + "'");
  }

  // Enum cell: parse failures are rethrown with coordinates attached.
  template <typename Fn>
  auto enum_cell(size_t row, const std::string& name, Fn&& parse) const {
    const std::string raw = cell(row, column(name));
    try {
      return parse(raw);
    } catch (const InvalidInputError& e) {
      throw InvalidInputError(coords(row, column(name)) + ": " + e.what());
    }
  }

  std::string coords(size_t row, size_t col) const {
    // +2: header line plus 1-based counting.
    return file_ + ":row " + std::to_string(row + 2) + ":col " +
           std::to_string(col + 1);
  }

  const std::string& file() const { return file_; }

 private:
  std::string file_;
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

const char* bool_str(bool b) { return b ? "yes" : "no"; }

template <typename Fn>
void with_row_context(const CsvReader& csv, size_t row, Fn&& fn) {
  try {
    fn();
  } catch (const InvalidInputError& e) {
    std::string what = e.what();
    if (what.find(csv.file()) == std::string::npos) {
      throw InvalidInputError(csv.file() + ":row " + std::to_string(row + 2) +
                              ": " + what);
    }
    throw;
  }
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::string read_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    throw InvalidInputError("cannot open " + file.string());
  }
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::filesystem::path& file, const std::string& text) {
  std::ofstream out(file, std::ios::binary);
  if (!out) {
    throw InvalidInputError("cannot write " + file.string());
  }
  out << text;
}

std::vector<UserProfile> load_profiles_csv(const std::filesystem::path& file,
                                           Role role) {
  CsvReader csv(file);
  std::vector<UserProfile> profiles;
  profiles.reserve(csv.rows());
  std::set<std::string> seen;
  for (size_t r = 0; r < csv.rows(); ++r) {
    with_row_context(csv, r, [&] {
      UserProfile p;
      p.id = csv.cell(r, "id");
      if (!seen.insert(p.id).second) {
        throw InvalidInputError("duplicate id " + p.id);
      }
      p.role = role;
      p.gender = csv.enum_cell(r, "gender", gender_from_string);
      p.age = csv.int_cell(r, "age");
      p.status = csv.enum_cell(r, "status", status_from_string);
      p.pets = csv.bool_cell(r, "pets");
      p.music = csv.bool_cell(r, "music");
      p.smoking = csv.bool_cell(r, "smoking");
      p.social_behavior =
          FeedbackAggregate{csv.double_cell(r, "social_behavior"), 1};
      p.reliability = FeedbackAggregate{csv.double_cell(r, "reliability"), 1};
      if (role == Role::driver) {
        p.vh_range = csv.enum_cell(r, "vh_range", vhrange_from_string);
        p.driving_skills =
            FeedbackAggregate{csv.double_cell(r, "driving_skills"), 1};
      }
      validate(p);
      profiles.push_back(std::move(p));
    });
  }
  return profiles;
}

std::map<std::string, PreferenceSpec> load_preferences_csv(
    const std::filesystem::path& file, Role owner_role) {
  CsvReader csv(file);
  std::map<std::string, PreferenceSpec> prefs;
  for (size_t r = 0; r < csv.rows(); ++r) {
    with_row_context(csv, r, [&] {
      PreferenceSpec p;
      std::string id = csv.cell(r, "id");
      p.gender_pref = csv.enum_cell(r, "gender_pref", gender_from_string);
      p.age_pref = csv.int_cell(r, "age_pref");
      p.age_tolerance = csv.int_cell(r, "age_tolerance");
      p.status_pref = csv.enum_cell(r, "status_pref", status_from_string);
      p.pets_pref = csv.bool_cell(r, "pets_pref");
      p.music_pref = csv.bool_cell(r, "music_pref");
      p.smoking_pref = csv.bool_cell(r, "smoking_pref");
      if (owner_role == Role::passenger) {
        p.vhrange_pref =
            csv.enum_cell(r, "vhrange_pref", vhrange_from_string);
      }
      validate(p, owner_role);
      if (!prefs.emplace(std::move(id), p).second) {
        throw InvalidInputError("duplicate id");
      }
    });
  }
  return prefs;
}

std::map<std::string, WeightVector> load_weights_csv(
    const std::filesystem::path& file, Role owner_role) {
  CsvReader csv(file);
  std::map<std::string, WeightVector> weights;
  for (size_t r = 0; r < csv.rows(); ++r) {
    with_row_context(csv, r, [&] {
      WeightVector w(owner_role);
      std::string id = csv.cell(r, "id");
      for (Criterion c : w.criteria()) {
        w.set(c, csv.int_cell(r, std::string(to_string(c)) + "_w"));
      }
      if (!weights.emplace(std::move(id), std::move(w)).second) {
        throw InvalidInputError("duplicate id");
      }
    });
  }
  return weights;
}

namespace {

void save_profiles_csv(const std::vector<UserProfile>& profiles, Role role,
                       const std::filesystem::path& file) {
  std::ostringstream out;
  if (role == Role::driver) {
    out << "id,gender,age,status,vh_range,pets,music,smoking,"
           "social_behavior,driving_skills,reliability\n";
  } else {
    out << "id,gender,age,status,pets,music,smoking,social_behavior,"
           "reliability\n";
  }
  for (const UserProfile& p : profiles) {
    out << p.id << ',' << to_string(p.gender) << ',' << p.age << ','
        << to_string(p.status) << ',';
    if (role == Role::driver) out << to_string(*p.vh_range) << ',';
    out << bool_str(p.pets) << ',' << bool_str(p.music) << ','
        << bool_str(p.smoking) << ',' << format_double(p.social_behavior.mean)
        << ',';
    if (role == Role::driver) {
      out << format_double(p.driving_skills->mean) << ',';
    }
    out << format_double(p.reliability.mean) << '\n';
  }
  write_file(file, out.str());
}

void save_preferences_csv(const std::map<std::string, PreferenceSpec>& prefs,
                          Role owner_role,
                          const std::filesystem::path& file) {
  std::ostringstream out;
  out << "id,gender_pref,age_pref,age_tolerance,status_pref,";
  if (owner_role == Role::passenger) out << "vhrange_pref,";
  out << "pets_pref,music_pref,smoking_pref\n";
  for (const auto& [id, p] : prefs) {
    out << id << ',' << to_string(p.gender_pref) << ',' << p.age_pref << ','
        << p.age_tolerance << ',' << to_string(p.status_pref) << ',';
    if (owner_role == Role::passenger) out << to_string(*p.vhrange_pref) << ',';
    out << bool_str(p.pets_pref) << ',' << bool_str(p.music_pref) << ','
        << bool_str(p.smoking_pref) << '\n';
  }
  write_file(file, out.str());
}

void save_weights_csv(const std::map<std::string, WeightVector>& weights,
                      Role owner_role, const std::filesystem::path& file) {
  std::ostringstream out;
  out << "id";
  for (Criterion c : criteria_for(owner_role)) {
    out << ',' << to_string(c) << "_w";
  }
  out << '\n';
  for (const auto& [id, w] : weights) {
    out << id;
    for (Criterion c : w.criteria()) {
      out << ',' << w.at(c);
    }
    out << '\n';
  }
  write_file(file, out.str());
}

}  // namespace

void save_population_csv(const Population& population,
                         const std::filesystem::path& directory) {
  std::filesystem::create_directories(directory);
  save_profiles_csv(population.drivers, Role::driver,
                    directory / "DriverProfile.csv");
  save_profiles_csv(population.passengers, Role::passenger,
                    directory / "PassengerProfile.csv");
  save_preferences_csv(population.driver_prefs, Role::driver,
                       directory / "DriverPreferences.csv");
  save_preferences_csv(population.passenger_prefs, Role::passenger,
                       directory / "PassengerPreferences.csv");
  save_weights_csv(population.driver_weights, Role::driver,
                   directory / "DriverWeight.csv");
  save_weights_csv(population.passenger_weights, Role::passenger,
                   directory / "PassengerWeight.csv");
}

Population load_population_csv(const std::filesystem::path& directory) {
  Population pop;
  pop.drivers = load_profiles_csv(directory / "DriverProfile.csv",
                                  Role::driver);
  pop.passengers = load_profiles_csv(directory / "PassengerProfile.csv",
                                     Role::passenger);
  pop.driver_prefs = load_preferences_csv(directory / "DriverPreferences.csv",
                                          Role::driver);
  pop.passenger_prefs = load_preferences_csv(
      directory / "PassengerPreferences.csv", Role::passenger);
  pop.driver_weights =
      load_weights_csv(directory / "DriverWeight.csv", Role::driver);
  pop.passenger_weights =
      load_weights_csv(directory / "PassengerWeight.csv", Role::passenger);
  return pop;
}

LabeledTable load_table_csv(const std::filesystem::path& file) {
  CsvReader csv(file);
  LabeledTable table;
  const auto& header = csv.header();
  if (header.size() < 2) {
    throw InvalidInputError(file.string() +
                            ": table needs an id column plus data columns");
  }
  table.col_ids.assign(header.begin() + 1, header.end());
  table.values = Matrix(csv.rows(), table.col_ids.size());
  for (size_t r = 0; r < csv.rows(); ++r) {
    table.row_ids.push_back(csv.cell(r, 0));
    for (size_t c = 0; c < table.col_ids.size(); ++c) {
      table.values.at(r, c) = csv.double_cell(r, header[c + 1]);
    }
  }
  return table;
}

void save_table_csv(const LabeledTable& table,
                    const std::filesystem::path& file) {
  std::ostringstream out;
  out << "id";
  for (const auto& col : table.col_ids) out << ',' << col;
  out << '\n';
  for (size_t r = 0; r < table.row_ids.size(); ++r) {
    out << table.row_ids[r];
    for (size_t c = 0; c < table.col_ids.size(); ++c) {
      out << ',' << format_double(table.values.at(r, c));
    }
    out << '\n';
  }
  write_file(file, out.str());
}

ValueMatrix value_matrix_from_table(const LabeledTable& table) {
  ValueMatrix values;
  values.passengers = table.row_ids;
  values.drivers = table.col_ids;
  values.values = table.values;
  return values;
}

JudgmentMatrix load_judgment_csv(const std::filesystem::path& file,
                                 const std::string& evaluator_id) {
  CsvReader csv(file);
  JudgmentMatrix m;
  m.evaluator_id = evaluator_id;
  const auto& header = csv.header();
  for (size_t c = 1; c < header.size(); ++c) {
    m.criteria.push_back(criterion_from_string(header[c]));
  }
  for (size_t r = 0; r < csv.rows(); ++r) {
    m.candidate_ids.push_back(csv.cell(r, 0));
    for (size_t c = 1; c < header.size(); ++c) {
      m.entries.push_back(csv.double_cell(r, header[c]));
    }
  }
  return m;
}

std::string to_json(const PreferenceProfileSet& profiles) {
  ordered_json j;
  j["drivers"] = profiles.drivers;
  j["passengers"] = profiles.passengers;
  j["driver_lists"] = ordered_json::object();
  for (const auto& [id, list] : profiles.driver_lists) {
    j["driver_lists"][id] = list;
  }
  j["passenger_lists"] = ordered_json::object();
  for (const auto& [id, list] : profiles.passenger_lists) {
    j["passenger_lists"][id] = list;
  }
  return j.dump(2) + "\n";
}

PreferenceProfileSet profile_set_from_json(const std::string& text) {
  PreferenceProfileSet profiles;
  try {
    ordered_json j = ordered_json::parse(text);
    profiles.drivers = j.at("drivers").get<std::vector<std::string>>();
    profiles.passengers = j.at("passengers").get<std::vector<std::string>>();
    for (const auto& [id, list] : j.at("driver_lists").items()) {
      profiles.driver_lists[id] = list.get<std::vector<std::string>>();
    }
    for (const auto& [id, list] : j.at("passenger_lists").items()) {
      profiles.passenger_lists[id] = list.get<std::vector<std::string>>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInputError(std::string("malformed profile-set JSON: ") +
                            e.what());
  }
  profiles.validate();
  return profiles;
}

PreferenceProfileSet load_profile_set(const std::filesystem::path& file) {
  return profile_set_from_json(read_file(file));
}

void save_profile_set(const PreferenceProfileSet& profiles,
                      const std::filesystem::path& file) {
  write_file(file, to_json(profiles));
}

std::string to_json(const Matching& matching) {
  ordered_json j;
  j["pairs"] = ordered_json::array();
  for (const auto& [d, p] : matching.pairs) {
    j["pairs"].push_back({d, p});
  }
  j["unmatched_drivers"] = matching.unmatched_drivers;
  j["unmatched_passengers"] = matching.unmatched_passengers;
  return j.dump(2) + "\n";
}

Matching matching_from_json(const std::string& text) {
  Matching m;
  try {
    ordered_json j = ordered_json::parse(text);
    for (const auto& pair : j.at("pairs")) {
      m.pairs.emplace_back(pair.at(0).get<std::string>(),
                           pair.at(1).get<std::string>());
    }
    if (j.contains("unmatched_drivers")) {
      m.unmatched_drivers =
          j["unmatched_drivers"].get<std::vector<std::string>>();
    }
    if (j.contains("unmatched_passengers")) {
      m.unmatched_passengers =
          j["unmatched_passengers"].get<std::vector<std::string>>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInputError(std::string("malformed matching JSON: ") +
                            e.what());
  }
  m.normalize();
  return m;
}

Matching load_matching(const std::filesystem::path& file) {
  return matching_from_json(read_file(file));
}

void save_matching(const Matching& matching,
                   const std::filesystem::path& file) {
  write_file(file, to_json(matching));
}

namespace {

ordered_json matrix_to_json(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (size_t i = 0; i < m.rows; ++i) {
    ordered_json row = ordered_json::array();
    for (size_t j = 0; j < m.cols; ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string to_json(const TopsisTrace& trace) {
  ordered_json j;
  j["normalized"] = matrix_to_json(trace.normalized);
  j["weighted"] = matrix_to_json(trace.weighted);
  j["positive_ideal"] = trace.positive_ideal;
  j["negative_ideal"] = trace.negative_ideal;
  j["sep_positive"] = trace.sep_positive;
  j["sep_negative"] = trace.sep_negative;
  j["closeness"] = trace.closeness;
  return j.dump(2) + "\n";
}

std::string to_json(const std::vector<ProposalEvent>& events) {
  ordered_json j = ordered_json::array();
  for (const ProposalEvent& e : events) {
    const char* kind = e.kind == ProposalEvent::Kind::propose  ? "propose"
                       : e.kind == ProposalEvent::Kind::engage ? "engage"
                                                               : "reject";
    j.push_back({{"event", kind}, {"from", e.proposer}, {"to", e.target}});
  }
  return j.dump(2) + "\n";
}

std::string to_json(const RankingResult& result) {
  ordered_json j;
  j["evaluator_id"] = result.evaluator_id;
  j["method"] = std::string(to_string(result.method));
  j["scores"] = ordered_json::object();
  for (const auto& [id, score] : result.scores) {
    j["scores"][id] = score;
  }
  j["preference_list"] = result.preference_list;
  return j.dump(2) + "\n";
}

std::string to_csv(const RankingResult& result) {
  std::ostringstream out;
  out << "evaluator_id,method,rank,candidate_id,score\n";
  for (size_t i = 0; i < result.preference_list.size(); ++i) {
    const std::string& id = result.preference_list[i];
    out << result.evaluator_id << ',' << to_string(result.method) << ','
        << (i + 1) << ',' << id << ',' << format_double(result.scores.at(id))
        << '\n';
  }
  return out.str();
}

std::string metric_csv_header() {
  return "instance_id,algorithm,n_drivers,n_passengers,regret,egalitarian,"
         "egalitarian_norm,sex_equality,sex_equality_norm,objective,delta\n";
}

std::string metric_csv_row(const std::string& instance_id,
                           const std::string& algorithm, size_t n_drivers,
                           size_t n_passengers, const MetricReport& report) {
  std::ostringstream out;
  out << instance_id << ',' << algorithm << ',' << n_drivers << ','
      << n_passengers << ',' << report.regret_cost << ','
      << format_double(report.egalitarian_cost) << ','
      << format_double(report.egalitarian_norm) << ','
      << format_double(report.sex_equality_cost) << ','
      << format_double(report.sex_equality_norm) << ',';
  if (report.objective) out << format_double(*report.objective);
  out << ',';
  if (report.price_of_stability) {
    out << format_double(*report.price_of_stability);
  }
  out << '\n';
  return out.str();
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string file_hash_hex(const std::filesystem::path& file) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a(read_file(file))));
  return buf;
}

void write_manifest(const GenConfig& config,
                    const std::filesystem::path& directory,
                    const std::vector<std::filesystem::path>& files) {
  ordered_json j;
  j["generator"] = Rng::kAlgorithm;
  j["config"] = {
      {"n_drivers", config.n_drivers},
      {"n_passengers", config.n_passengers},
      {"seed", config.seed},
      {"skew", std::string(to_string(config.skew))},
      {"age_min", config.age_min},
      {"age_max", config.age_max},
      {"age_mean", config.age_mean},
      {"age_stddev", config.age_stddev},
      {"feedback_alpha", config.feedback_alpha},
      {"feedback_beta", config.feedback_beta},
      {"n_clusters", config.n_clusters},
      {"cluster_adherence", config.cluster_adherence},
  };
  j["files"] = ordered_json::object();
  for (const auto& file : files) {
    j["files"][file.filename().string()] = "fnv1a:" + file_hash_hex(file);
  }
  write_file(directory / "manifest.json", j.dump(2) + "\n");
}

}  // namespace ridematch::io
