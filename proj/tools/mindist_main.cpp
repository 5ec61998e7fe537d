// Command-line front end: load an alist code, run a search / calibration /
// exhaustive oracle, print a JSON report on stdout (progress goes to stderr).

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <system_error>

#include <CLI11.hpp>
#include <json.hpp>

#include "mindist/alist.hpp"
#include "mindist/bp.hpp"
#include "mindist/oracle.hpp"
#include "mindist/osd.hpp"
#include "mindist/report.hpp"
#include "mindist/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitMissingFile = 2;
constexpr int kExitBadAlist = 3;
constexpr int kExitBadFlags = 4;
constexpr int kExitOverDimension = 5;

struct SearchArgs {
    std::string alist_path;
    double sigma = 0.70;
    std::size_t iters = 5;
    std::size_t trials = 100;
    std::size_t order = 2;
    double alpha = 1.0;
    std::uint64_t seed = 1;
    std::size_t keep_top = 1024;
    std::size_t all_pairs_top = 0;
    double llr_clip = 50.0;
    bool no_early_stop = false;
    std::string format = "json";
    std::size_t progress_every = 0;
    std::size_t threads = 1;
};

struct CalibrateArgs {
    std::string alist_path;
    double sigma = 0.0;
    std::size_t trials = 0;
    std::size_t iters = 30;
    double llr_clip = 50.0;
    std::uint64_t seed = 1;
};

struct OracleArgs {
    std::string alist_path;
    std::size_t max_dim = mindist::kDefaultOracleMaxDim;
};

int run_search_cmd(const SearchArgs& args) {
    const std::string started = mindist::iso8601_utc_now();
    const mindist::ParityCheckMatrix h = mindist::load_alist_file(args.alist_path);

    mindist::SearchConfig cfg;
    cfg.order = args.order;
    cfg.trials = args.trials;
    cfg.channel = {args.sigma, args.seed};
    cfg.bp = {args.iters, args.llr_clip, !args.no_early_stop};
    cfg.alpha = args.alpha;
    cfg.keep_top = args.keep_top;
    cfg.all_pairs_top = args.all_pairs_top;
    cfg.report_every = args.progress_every;

    mindist::ProgressFn progress;
    if (args.progress_every > 0) {
        progress = [&](std::size_t trial, const mindist::TrialRecord& rec) {
            std::fprintf(stderr, "trial %zu/%zu  best=%zu  multiplicity=%zu  (%.2f ms)\n",
                         trial + 1, cfg.trials, rec.best_weight_so_far, rec.new_codewords,
                         rec.ms);
        };
    }

    const mindist::SearchReport report = mindist::run_search(h, cfg, args.threads, progress);

    if (args.format == "csv") {
        mindist::write_trial_csv(std::cout, report);
        return kExitOk;
    }
    mindist::RunManifest manifest;
    manifest.command = "search";
    manifest.code_path = args.alist_path;
    manifest.code_rows = report.code_rows;
    manifest.code_cols = report.code_cols;
    manifest.code_rank = report.code_rank;
    manifest.config = mindist::search_config_json(cfg, args.threads);
    manifest.started_at = started;
    manifest.finished_at = mindist::iso8601_utc_now();
    manifest.result = mindist::search_result_json(report);
    std::cout << mindist::to_json(manifest).dump(2) << '\n';
    return kExitOk;
}

int run_calibrate_cmd(const CalibrateArgs& args) {
    const std::string started = mindist::iso8601_utc_now();
    const mindist::ParityCheckMatrix h = mindist::load_alist_file(args.alist_path);

    const mindist::BpConfig bp{args.iters, args.llr_clip, true};
    const mindist::CalibrationResult result =
        mindist::calibrate_max_iterations(h, args.sigma, bp, args.trials, args.seed);

    if (result.saturated_trials == 0)
        std::fprintf(stderr, "warning: no trial saturated within %zu iterations; "
                             "recommendation falls back to the configured maximum\n",
                     args.iters);
    if (args.trials < 2)
        std::fprintf(stderr, "warning: single-trial calibration, low confidence\n");

    mindist::RunManifest manifest;
    manifest.command = "calibrate";
    manifest.code_path = args.alist_path;
    manifest.code_rows = h.rows();
    manifest.code_cols = h.cols();
    manifest.code_rank = mindist::rank(h.mat);
    manifest.config = mindist::calibration_config_json(bp, args.sigma, args.trials, args.seed);
    manifest.started_at = started;
    manifest.finished_at = mindist::iso8601_utc_now();
    manifest.result = mindist::calibration_result_json(result, bp, args.trials);
    std::cout << mindist::to_json(manifest).dump(2) << '\n';
    return kExitOk;
}

int run_oracle_cmd(const OracleArgs& args) {
    const std::string started = mindist::iso8601_utc_now();
    const mindist::ParityCheckMatrix h = mindist::load_alist_file(args.alist_path);

    const mindist::WeightSpectrumSlice slice =
        mindist::exhaustive_min_weight(h.mat, args.max_dim);

    mindist::RunManifest manifest;
    manifest.command = "oracle";
    manifest.code_path = args.alist_path;
    manifest.code_rows = h.rows();
    manifest.code_cols = h.cols();
    manifest.code_rank = h.cols() - slice.dimension;
    manifest.config = mindist::oracle_config_json(args.max_dim);
    manifest.started_at = started;
    manifest.finished_at = mindist::iso8601_utc_now();
    manifest.result = mindist::oracle_result_json(slice);
    std::cout << mindist::to_json(manifest).dump(2) << '\n';
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimum-weight codeword search for LDPC codes (BP + ordered-statistic "
                 "syndrome reprocessing)"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(mindist::kToolVersion));

    SearchArgs search_args;
    CLI::App* search = app.add_subcommand("search", "run the minimum-weight codeword search");
    search->add_option("--alist", search_args.alist_path, "parity-check matrix (alist format)")
        ->required();
    search->add_option("--sigma", search_args.sigma, "AWGN noise standard deviation");
    search->add_option("--iters", search_args.iters, "BP iterations before reprocessing");
    search->add_option("--trials", search_args.trials, "number of transmitted codewords");
    search->add_option("--order", search_args.order, "reprocessing order (information-set weight budget)");
    search->add_option("--alpha", search_args.alpha, "reliability accumulation decay in (0,1]");
    search->add_option("--seed", search_args.seed, "base RNG seed");
    search->add_option("--keep-top", search_args.keep_top, "max distinct codewords kept");
    search->add_option("--all-pairs-top", search_args.all_pairs_top,
                       "extension: also combine all pairs among this many lightest patterns");
    search->add_option("--llr-clip", search_args.llr_clip, "LLR saturation magnitude");
    search->add_flag("--no-early-stop", search_args.no_early_stop,
                     "run all BP iterations even after the syndrome clears");
    search->add_option("--format", search_args.format, "json | csv (per-trial table)")
        ->check(CLI::IsMember({"json", "csv"}));
    search->add_option("--progress-every", search_args.progress_every,
                       "stderr progress line every N trials (0 = off)");
    search->add_option("--threads", search_args.threads, "worker threads (1 = reference path)")
        ->check(CLI::Range(std::size_t(1), std::size_t(256)));

    CalibrateArgs cal_args;
    CLI::App* calibrate =
        app.add_subcommand("calibrate", "recommend a BP iteration count from LLR saturation");
    calibrate->add_option("--alist", cal_args.alist_path, "parity-check matrix (alist format)")
        ->required();
    calibrate->add_option("--sigma", cal_args.sigma, "AWGN noise standard deviation")->required();
    calibrate->add_option("--trials", cal_args.trials, "number of probe transmissions")
        ->required()
        ->check(CLI::PositiveNumber);
    calibrate->add_option("--iters", cal_args.iters, "probe iteration ceiling");
    calibrate->add_option("--llr-clip", cal_args.llr_clip, "LLR saturation magnitude");
    calibrate->add_option("--seed", cal_args.seed, "base RNG seed");

    OracleArgs oracle_args;
    CLI::App* oracle =
        app.add_subcommand("oracle", "exhaustive minimum weight for small codes");
    oracle->add_option("--alist", oracle_args.alist_path, "parity-check matrix (alist format)")
        ->required();
    oracle->add_option("--max-dim", oracle_args.max_dim,
                       "largest code dimension the enumeration will accept");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadFlags;
    }

    try {
        if (search->parsed())
            return run_search_cmd(search_args);
        if (calibrate->parsed())
            return run_calibrate_cmd(cal_args);
        return run_oracle_cmd(oracle_args);
    } catch (const std::system_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitMissingFile;
    } catch (const mindist::AlistParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitBadAlist;
    } catch (const mindist::AlistIntegrityError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitBadAlist;
    } catch (const mindist::OracleRefusalError& e) {
        std::fprintf(stderr, "error: %s (use --max-dim to override)\n", e.what());
        return kExitOverDimension;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitRuntime;
    }
}
