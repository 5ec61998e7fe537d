#include "mindist/bp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mindist {

namespace {

BitVector hard_decision(const LlrVector& llr) {
    BitVector v(llr.size());
    for (std::size_t i = 0; i < llr.size(); ++i)
        if (llr[i] > 0.0)
            v.set(i, true);
    return v;
}

LlrVector clamped(const LlrVector& in, double clip) {
    LlrVector out(in.size());
    for (std::size_t i = 0; i < in.size(); ++i)
        out[i] = std::clamp(in[i], -clip, clip);
    return out;
}

} // namespace

DecodeTrace decode(const ParityCheckMatrix& h, const LlrVector& channel_llr,
                   const BpConfig& cfg) {
    const std::size_t n = h.cols(), m = h.rows();
    if (channel_llr.size() != n)
        throw std::invalid_argument("decode: LLR length does not match column count");
    if (!(cfg.llr_clip > 0.0))
        throw std::invalid_argument("decode: llr_clip must be positive");
    const double clip = cfg.llr_clip;

    DecodeTrace trace;
    trace.max_iterations = cfg.max_iterations;
    const LlrVector l0 = clamped(channel_llr, clip); // history rows may reallocate
    trace.llr_history.push_back(l0);

    BitVector hard = hard_decision(l0);
    BitVector synd = syndrome(h.mat, hard);
    const bool stop_now = cfg.early_stop_on_zero_syndrome && synd.is_zero();

    // edge layout: edges of check m are row_support[m], flattened row-major
    std::vector<std::size_t> row_start(m + 1, 0);
    for (std::size_t r = 0; r < m; ++r)
        row_start[r + 1] = row_start[r] + h.row_support[r].size();
    const std::size_t num_edges = row_start[m];

    std::vector<double> check_to_var(num_edges, 0.0);
    std::vector<double> var_sum(n, 0.0); // sum of incoming check messages per variable
    std::vector<double> tanh_buf, prefix, suffix;

    std::size_t iter = 0;
    if (!stop_now) {
        for (iter = 1; iter <= cfg.max_iterations; ++iter) {
            // check update from a snapshot of the variable sums
            for (std::size_t r = 0; r < m; ++r) {
                const auto& vars = h.row_support[r];
                const std::size_t deg = vars.size();
                if (deg == 0) continue;
                tanh_buf.resize(deg);
                for (std::size_t k = 0; k < deg; ++k) {
                    const std::size_t e = row_start[r] + k;
                    const double q = std::clamp(
                        l0[vars[k]] + var_sum[vars[k]] - check_to_var[e], -clip, clip);
                    tanh_buf[k] = std::tanh(0.5 * q);
                }
                prefix.resize(deg);
                suffix.resize(deg);
                prefix[0] = tanh_buf[0];
                for (std::size_t k = 1; k < deg; ++k)
                    prefix[k] = prefix[k - 1] * tanh_buf[k];
                suffix[deg - 1] = tanh_buf[deg - 1];
                for (std::size_t k = deg - 1; k-- > 0;)
                    suffix[k] = suffix[k + 1] * tanh_buf[k];
                // In the "positive favors 1" convention the product rule
                // carries a (-1)^degree factor (it is the textbook rule after
                // negating both sides).
                const double parity_sign = (deg % 2 == 0) ? 1.0 : -1.0;
                for (std::size_t k = 0; k < deg; ++k) {
                    double excl = 1.0;
                    if (k > 0) excl *= prefix[k - 1];
                    if (k + 1 < deg) excl *= suffix[k + 1];
                    const double msg = parity_sign * 2.0 * std::atanh(excl);
                    check_to_var[row_start[r] + k] = std::clamp(msg, -clip, clip);
                }
            }

            // posterior + saturation scan
            std::fill(var_sum.begin(), var_sum.end(), 0.0);
            for (std::size_t r = 0; r < m; ++r)
                for (std::size_t k = 0; k < h.row_support[r].size(); ++k)
                    var_sum[h.row_support[r][k]] += check_to_var[row_start[r] + k];

            LlrVector posterior(n);
            bool saturated = false;
            for (std::size_t v = 0; v < n; ++v) {
                const double raw = l0[v] + var_sum[v];
                if (std::abs(raw) >= clip)
                    saturated = true;
                posterior[v] = std::clamp(raw, -clip, clip);
            }
            if (saturated && !trace.saturated_at)
                trace.saturated_at = iter;

            trace.llr_history.push_back(std::move(posterior));
            hard = hard_decision(trace.llr_history.back());
            synd = syndrome(h.mat, hard);
            if (cfg.early_stop_on_zero_syndrome && synd.is_zero())
                break;
        }
        if (iter > cfg.max_iterations)
            iter = cfg.max_iterations;
    }

    trace.iterations_run = iter;
    trace.final_hard = std::move(hard);
    trace.final_syndrome = std::move(synd);
    return trace;
}

std::vector<double> accumulate_reliability(const DecodeTrace& trace, double alpha) {
    if (!(alpha > 0.0) || alpha > 1.0)
        throw std::invalid_argument("accumulate_reliability: alpha must be in (0, 1]");
    if (trace.llr_history.empty())
        throw std::invalid_argument("accumulate_reliability: empty trace");

    const std::size_t last = trace.max_iterations;
    const std::size_t n = trace.llr_history.front().size();
    std::vector<double> weight(last + 1);
    weight[last] = 1.0;
    for (std::size_t j = last; j-- > 0;)
        weight[j] = weight[j + 1] * alpha;

    std::vector<double> acc(n, 0.0);
    for (std::size_t j = 0; j <= last; ++j) {
        const LlrVector& row = trace.llr_row(j);
        for (std::size_t i = 0; i < n; ++i)
            acc[i] += weight[j] * row[i];
    }
    for (double& a : acc)
        a = std::abs(a);
    return acc;
}

CalibrationResult calibrate_max_iterations(const ParityCheckMatrix& h, double sigma,
                                           const BpConfig& cfg, std::size_t trials,
                                           std::uint64_t seed) {
    if (trials < 1)
        throw std::invalid_argument("calibrate_max_iterations: trials must be >= 1");

    BpConfig probe = cfg;
    probe.early_stop_on_zero_syndrome = false;

    CalibrationResult result;
    result.saturation_iteration.resize(trials, -1);
    std::vector<std::size_t> below_saturation; // per saturating trial: iteration - 1
    for (std::size_t t = 0; t < trials; ++t) {
        const ReceivedVector y = transmit_all_zero(h.cols(), {sigma, seed}, t);
        const DecodeTrace trace = decode(h, initial_llr(y, sigma), probe);
        if (trace.saturated_at) {
            result.saturation_iteration[t] = static_cast<int>(*trace.saturated_at);
            below_saturation.push_back(*trace.saturated_at - 1);
            ++result.saturated_trials;
        }
    }
    if (below_saturation.empty()) {
        result.recommended = cfg.max_iterations;
    } else {
        std::sort(below_saturation.begin(), below_saturation.end());
        result.recommended = below_saturation[(below_saturation.size() - 1) / 2]; // lower median
    }
    return result;
}

} // namespace mindist
