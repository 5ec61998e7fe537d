#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mindist/bitvec.hpp"
#include "mindist/gf2.hpp"

namespace mindist {

struct WeightSpectrumSlice {
    std::size_t d_min = 0;       // 0 when the code has no nonzero codeword
    std::size_t multiplicity = 0; // exact count of weight-d_min codewords
    std::vector<BitVector> witnesses; // capped; multiplicity stays exact
    bool witnesses_capped = false;
    std::size_t dimension = 0; // K = cols - rank
};

/// Thrown when an enumeration would be astronomically large.
class OracleRefusalError : public std::runtime_error {
public:
    OracleRefusalError(const std::string& msg, std::size_t dimension)
        : std::runtime_error(msg), dimension(dimension) {}
    std::size_t dimension;
};

inline constexpr std::size_t kDefaultOracleMaxDim = 25;
inline constexpr std::size_t kOracleWitnessCap = 4096;

/// Exhaustive ground truth: derives a generator basis by elimination and
/// walks all 2^K - 1 nonzero codewords in Gray-code order (one basis-row
/// XOR per step). Refuses when K > max_dim.
WeightSpectrumSlice exhaustive_min_weight(const Gf2Matrix& h,
                                          std::size_t max_dim = kDefaultOracleMaxDim);

bool is_codeword(const Gf2Matrix& h, const BitVector& c);

struct BoundedMinWeight {
    std::size_t weight = 0;
    std::size_t multiplicity = 0; // exact
};

/// Exact minimum weight when it is <= max_weight (and its exact
/// multiplicity), or nullopt when every nonzero codeword is heavier.
/// Counts weight-w codewords by meet-in-the-middle over column subsets
/// (pair and triple XOR matching), independent of both the search path and
/// the Gray-code oracle. Each count is derived under "all lighter counts
/// are zero", which holds by construction since scanning stops at the first
/// nonzero weight. max_weight is capped at 6; refuses when the subset space
/// is too large (roughly cols > 2000 for weight 4, cols > 600 for 5 and 6).
std::optional<BoundedMinWeight> bounded_min_weight(const Gf2Matrix& h, std::size_t max_weight);

} // namespace mindist
