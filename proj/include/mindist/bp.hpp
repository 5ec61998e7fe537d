#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mindist/bitvec.hpp"
#include "mindist/channel.hpp"
#include "mindist/gf2.hpp"

namespace mindist {

struct BpConfig {
    std::size_t max_iterations = 5;
    double llr_clip = 50.0; // saturation magnitude standing in for "infinite" belief
    bool early_stop_on_zero_syndrome = true;
};

/// Per-iteration posterior record of one decode call. Row 0 holds the
/// channel LLRs; row j the posteriors after iteration j. When early stop
/// fires at iteration j < max_iterations the trace physically ends at row j
/// and llr_row() treats later rows as repeats of it (the converged state is
/// declared a fixed point), which is what reliability accumulation expects.
struct DecodeTrace {
    std::vector<LlrVector> llr_history; // iterations_run + 1 rows
    std::size_t max_iterations = 0;     // configured ceiling the trace was run with
    std::size_t iterations_run = 0;
    BitVector final_hard;     // 1 iff last-row LLR > 0, ties decode to 0
    BitVector final_syndrome; // of final_hard against the decode matrix
    std::optional<std::size_t> saturated_at; // first iteration with |posterior| >= clip

    const LlrVector& llr_row(std::size_t j) const {
        return llr_history[j < iterations_run ? j : iterations_run];
    }
};

/// Flooding sum-product over the Tanner graph of h. All messages and stored
/// posteriors are clamped to [-llr_clip, +llr_clip].
DecodeTrace decode(const ParityCheckMatrix& h, const LlrVector& channel_llr,
                   const BpConfig& cfg);

/// r_i = |sum_{j=0..max_iterations} alpha^(max_iterations-j) * l_i^j| with
/// rows past iterations_run repeating the last row.
std::vector<double> accumulate_reliability(const DecodeTrace& trace, double alpha);

struct CalibrationResult {
    std::size_t recommended = 0;
    // per trial: first iteration whose posterior saturated, -1 if none did
    std::vector<int> saturation_iteration;
    std::size_t saturated_trials = 0;
};

/// Runs seeded all-zero transmissions at the given sigma (early stop
/// disabled so saturation is observable) and recommends the iteration count
/// right below the first saturation: the median of (saturation iteration -
/// 1) over saturating trials, or cfg.max_iterations when none saturate.
CalibrationResult calibrate_max_iterations(const ParityCheckMatrix& h, double sigma,
                                           const BpConfig& cfg, std::size_t trials,
                                           std::uint64_t seed);

} // namespace mindist
