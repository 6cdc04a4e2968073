#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "ridematch/datagen.hpp"
#include "ridematch/matching.hpp"
#include "ridematch/metrics.hpp"
#include "ridematch/topsis.hpp"

namespace ridematch::io {

// CSV conventions shared by all tables: canonical attribute-name headers,
// booleans as yes/no, enums lowercase, decimal point in reals.

// The six population tables: DriverProfile, DriverPreferences, DriverWeight,
// PassengerProfile, PassengerPreferences, PassengerWeight.
void save_population_csv(const Population& population,
                         const std::filesystem::path& directory);
Population load_population_csv(const std::filesystem::path& directory);

// Single-side loaders for partial inputs (e.g. ranking one passenger against
// driver profiles only). Schema violations are reported with row/column
// coordinates.
std::vector<UserProfile> load_profiles_csv(const std::filesystem::path& file,
                                           Role role);
std::map<std::string, PreferenceSpec> load_preferences_csv(
    const std::filesystem::path& file, Role owner_role);
std::map<std::string, WeightVector> load_weights_csv(
    const std::filesystem::path& file, Role owner_role);

// Labeled table CSV, first column = row id, header row = column ids
// (layout of the closeness tables; also used for value matrices with rows =
// passengers, columns = drivers).
LabeledTable load_table_csv(const std::filesystem::path& file);
void save_table_csv(const LabeledTable& table,
                    const std::filesystem::path& file);
ValueMatrix value_matrix_from_table(const LabeledTable& table);

// Judgment matrix CSV: first column Driver-ID/Passenger-ID style row ids,
// criterion-name headers.
JudgmentMatrix load_judgment_csv(const std::filesystem::path& file,
                                 const std::string& evaluator_id);

// Preference-profile JSON: {"drivers": [...], "passengers": [...],
// "driver_lists": {...}, "passenger_lists": {...}}.
std::string to_json(const PreferenceProfileSet& profiles);
PreferenceProfileSet profile_set_from_json(const std::string& text);
PreferenceProfileSet load_profile_set(const std::filesystem::path& file);
void save_profile_set(const PreferenceProfileSet& profiles,
                      const std::filesystem::path& file);

// Matching JSON: pair list plus explicit unmatched sets.
std::string to_json(const Matching& matching);
Matching matching_from_json(const std::string& text);
Matching load_matching(const std::filesystem::path& file);
void save_matching(const Matching& matching,
                   const std::filesystem::path& file);

// TOPSIS trace as a JSON document keyed by step name.
std::string to_json(const TopsisTrace& trace);

// Proposal/rejection event log.
std::string to_json(const std::vector<ProposalEvent>& events);

// Ranking results (scores + list) as JSON or one CSV row per candidate.
std::string to_json(const RankingResult& result);
std::string to_csv(const RankingResult& result);

// Metric rows: one CSV line per (instance, algorithm).
std::string metric_csv_header();
std::string metric_csv_row(const std::string& instance_id,
                           const std::string& algorithm, size_t n_drivers,
                           size_t n_passengers, const MetricReport& report);

// FNV-1a content hash used by generation manifests.
std::uint64_t fnv1a(const std::string& bytes);
std::string file_hash_hex(const std::filesystem::path& file);

// manifest.json next to generated tables: config, seed, generator identity,
// per-file content hashes.
void write_manifest(const GenConfig& config,
                    const std::filesystem::path& directory,
                    const std::vector<std::filesystem::path>& files);

std::string read_file(const std::filesystem::path& file);
void write_file(const std::filesystem::path& file, const std::string& text);

// Deterministic shortest-round-trip formatting for reals in CSV output.
std::string format_double(double value);

}  // namespace ridematch::io
