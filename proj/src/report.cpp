#include "mindist/report.hpp"

#include <chrono>
#include <ctime>
#include <ostream>

#include "mindist/version.hpp"

namespace mindist {

using nlohmann::json;

json to_json(const RunManifest& manifest) {
    json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = manifest.command;
    j["code_path"] = manifest.code_path;
    j["code"] = {{"rows", manifest.code_rows},
                 {"cols", manifest.code_cols},
                 {"rank", manifest.code_rank}};
    j["config"] = manifest.config;
    j["started_at"] = manifest.started_at;
    j["finished_at"] = manifest.finished_at;
    j["result"] = manifest.result;
    return j;
}

RunManifest manifest_from_json(const json& j) {
    RunManifest m;
    m.command = j.at("command").get<std::string>();
    m.code_path = j.at("code_path").get<std::string>();
    m.code_rows = j.at("code").at("rows").get<std::size_t>();
    m.code_cols = j.at("code").at("cols").get<std::size_t>();
    m.code_rank = j.at("code").at("rank").get<std::size_t>();
    m.config = j.at("config");
    m.started_at = j.at("started_at").get<std::string>();
    m.finished_at = j.at("finished_at").get<std::string>();
    m.result = j.at("result");
    return m;
}

std::string iso8601_utc_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void strip_volatile_fields(json& manifest) {
    manifest.erase("started_at");
    manifest.erase("finished_at");
    if (manifest.contains("result") && manifest["result"].is_object()) {
        manifest["result"].erase("total_ms");
        manifest["result"].erase("trial_ms");
    }
}

json search_config_json(const SearchConfig& cfg, std::size_t threads) {
    return json{{"sigma", cfg.channel.sigma},
                {"seed", cfg.channel.seed},
                {"max_iterations", cfg.bp.max_iterations},
                {"llr_clip", cfg.bp.llr_clip},
                {"early_stop", cfg.bp.early_stop_on_zero_syndrome},
                {"trials", cfg.trials},
                {"order", cfg.order},
                {"alpha", cfg.alpha},
                {"keep_top", cfg.keep_top},
                {"all_pairs_top", cfg.all_pairs_top},
                {"report_every", cfg.report_every},
                {"threads", threads}};
}

json search_result_json(const SearchReport& report) {
    json r;
    const auto entries = report.candidates.entries();
    r["best_weight"] =
        report.candidates.empty() ? json(nullptr) : json(report.candidates.best_weight());
    r["multiplicity"] = entries.size();
    r["truncated"] = report.candidates.truncated();
    json witnesses = json::array();
    json found_at = json::array();
    for (const auto& [codeword, trial] : entries) {
        witnesses.push_back(codeword.to_hex());
        found_at.push_back(trial);
    }
    r["witnesses"] = std::move(witnesses);
    r["found_at_trial"] = std::move(found_at);
    r["first_best_weight_trial"] = report.first_best_weight_trial
                                       ? json(*report.first_best_weight_trial)
                                       : json(nullptr);
    r["earliest_complete_trial"] = report.earliest_complete_trial
                                       ? json(*report.earliest_complete_trial)
                                       : json(nullptr);
    r["trials_run"] = report.trial_records.size();
    r["zero_syndrome_trials"] = report.zero_syndrome_trials;
    r["patterns_per_trial"] =
        report.trial_records.empty() ? 0 : report.trial_records.front().pattern_count;
    r["total_ms"] = report.total_ms;
    json per_trial = json::array();
    for (const TrialRecord& rec : report.trial_records)
        per_trial.push_back(rec.ms);
    r["trial_ms"] = std::move(per_trial);
    return r;
}

json calibration_config_json(const BpConfig& bp, double sigma, std::size_t trials,
                             std::uint64_t seed) {
    return json{{"sigma", sigma},
                {"seed", seed},
                {"max_iterations", bp.max_iterations},
                {"llr_clip", bp.llr_clip},
                {"trials", trials}};
}

json calibration_result_json(const CalibrationResult& result, const BpConfig& bp,
                             std::size_t trials) {
    json histogram = json::object();
    for (int it : result.saturation_iteration) {
        if (it < 0) continue;
        const std::string key = std::to_string(it);
        histogram[key] = histogram.value(key, 0) + 1;
    }
    return json{{"recommended_max_iterations", result.recommended},
                {"trials", trials},
                {"saturated_trials", result.saturated_trials},
                {"histogram", std::move(histogram)},
                {"per_trial_saturation", result.saturation_iteration},
                {"no_saturation_warning", result.saturated_trials == 0},
                {"low_confidence", trials < 2},
                {"configured_max_iterations", bp.max_iterations}};
}

json oracle_config_json(std::size_t max_dim) {
    return json{{"max_dim", max_dim}};
}

json oracle_result_json(const WeightSpectrumSlice& slice) {
    json witnesses = json::array();
    for (const BitVector& w : slice.witnesses)
        witnesses.push_back(w.to_hex());
    return json{{"d_min", slice.d_min},
                {"multiplicity", slice.multiplicity},
                {"dimension", slice.dimension},
                {"witnesses", std::move(witnesses)},
                {"witnesses_capped", slice.witnesses_capped}};
}

void write_trial_csv(std::ostream& out, const SearchReport& report) {
    out << "trial,zero_syndrome,patterns,harvested_weight,best_weight_so_far,new_codewords,ms\n";
    for (std::size_t t = 0; t < report.trial_records.size(); ++t) {
        const TrialRecord& rec = report.trial_records[t];
        out << t << ',' << (rec.zero_syndrome ? 1 : 0) << ',' << rec.pattern_count << ','
            << rec.harvested_weight << ',' << rec.best_weight_so_far << ',' << rec.new_codewords
            << ',' << rec.ms << '\n';
    }
}

} // namespace mindist
