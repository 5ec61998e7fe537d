#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "mindist/bp.hpp"
#include "mindist/oracle.hpp"
#include "mindist/osd.hpp"

namespace mindist {

/// Machine-readable run record: shared envelope (tool, command, code, file
/// path, timestamps) plus a command-specific result object. The key set is
/// fixed per command; optionals serialize as null, never disappear.
struct RunManifest {
    std::string command;
    std::string code_path;
    std::size_t code_rows = 0, code_cols = 0, code_rank = 0;
    nlohmann::json config;
    std::string started_at, finished_at;
    nlohmann::json result;

    bool operator==(const RunManifest& other) const = default;
};

nlohmann::json to_json(const RunManifest& manifest);
RunManifest manifest_from_json(const nlohmann::json& j);

std::string iso8601_utc_now();

/// Keys callers must ignore when comparing two runs for determinism.
void strip_volatile_fields(nlohmann::json& manifest);

nlohmann::json search_config_json(const SearchConfig& cfg, std::size_t threads);

/// Result object for `search`. Witnesses are lowercase hex with bit 0 as
/// the most significant bit of the first digit, bit length = code length.
nlohmann::json search_result_json(const SearchReport& report);

nlohmann::json calibration_config_json(const BpConfig& bp, double sigma, std::size_t trials,
                                       std::uint64_t seed);
nlohmann::json calibration_result_json(const CalibrationResult& result, const BpConfig& bp,
                                       std::size_t trials);

nlohmann::json oracle_config_json(std::size_t max_dim);
nlohmann::json oracle_result_json(const WeightSpectrumSlice& slice);

/// Per-trial progress table (the only CSV the tool emits).
void write_trial_csv(std::ostream& out, const SearchReport& report);

} // namespace mindist
