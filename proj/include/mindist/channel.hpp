#pragma once

#include <cstdint>
#include <vector>

namespace mindist {

struct ChannelConfig {
    double sigma = 0.7;     // noise standard deviation, linear
    std::uint64_t seed = 1; // base seed; each trial uses its own substream
};

using ReceivedVector = std::vector<double>;
using LlrVector = std::vector<double>;

/// BPSK transmission of the all-zero codeword (every symbol -1) through
/// AWGN: y_i = -1 + z_i, z_i ~ N(0, sigma^2). Fully determined by
/// (cfg.seed, stream_index).
ReceivedVector transmit_all_zero(std::size_t n, const ChannelConfig& cfg,
                                 std::uint64_t stream_index);

/// Channel LLRs 2*y_i/sigma^2; positive favors bit value 1.
LlrVector initial_llr(const ReceivedVector& y, double sigma);

} // namespace mindist
