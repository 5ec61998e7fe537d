#include "mindist/channel.hpp"

#include <stdexcept>

#include "mindist/rng.hpp"

namespace mindist {

ReceivedVector transmit_all_zero(std::size_t n, const ChannelConfig& cfg,
                                 std::uint64_t stream_index) {
    if (n == 0)
        throw std::invalid_argument("transmit_all_zero: n must be >= 1");
    if (!(cfg.sigma > 0.0))
        throw std::invalid_argument("transmit_all_zero: sigma must be positive");
    GaussianStream noise(cfg.seed, stream_index);
    ReceivedVector y(n);
    for (double& yi : y)
        yi = -1.0 + cfg.sigma * noise.next();
    return y;
}

LlrVector initial_llr(const ReceivedVector& y, double sigma) {
    if (!(sigma > 0.0))
        throw std::invalid_argument("initial_llr: sigma must be positive");
    const double scale = 2.0 / (sigma * sigma);
    LlrVector l(y.size());
    for (std::size_t i = 0; i < y.size(); ++i)
        l[i] = scale * y[i];
    return l;
}

} // namespace mindist
