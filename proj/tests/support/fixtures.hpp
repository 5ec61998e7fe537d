#pragma once

// Shared test fixtures: tiny reference codes, naive oracles that avoid the
// packed code paths, and seeded random matrix generators.

#include <cstdint>
#include <vector>

#include "mindist/bitvec.hpp"
#include "mindist/gf2.hpp"
#include "mindist/rng.hpp"

namespace testsupport {

inline mindist::Gf2Matrix hamming74() {
    return mindist::Gf2Matrix::from_rows({"1010101", "0110011", "0001111"});
}

inline mindist::Gf2Matrix repetition31() {
    return mindist::Gf2Matrix::from_rows({"110", "011"});
}

/// All 16 Hamming(7,4) codewords, by direct span of the null space.
inline std::vector<mindist::BitVector> hamming74_codewords() {
    const mindist::Gf2Matrix h = hamming74();
    std::vector<mindist::BitVector> words;
    for (unsigned m = 0; m < 128; ++m) {
        mindist::BitVector v(7);
        for (unsigned b = 0; b < 7; ++b)
            if (m & (1u << b))
                v.set(b, true);
        bool ok = true;
        for (std::size_t r = 0; r < 3 && ok; ++r) {
            int parity = 0;
            for (std::size_t c = 0; c < 7; ++c)
                parity ^= (h.get(r, c) && v.get(c)) ? 1 : 0;
            ok = parity == 0;
        }
        if (ok)
            words.push_back(v);
    }
    return words;
}

/// Bit-by-bit syndrome, no packed words involved.
inline std::vector<int> naive_syndrome(const mindist::Gf2Matrix& h,
                                       const mindist::BitVector& e) {
    std::vector<int> s(h.rows(), 0);
    for (std::size_t r = 0; r < h.rows(); ++r)
        for (std::size_t c = 0; c < h.cols(); ++c)
            if (h.get(r, c) && e.get(c))
                s[r] ^= 1;
    return s;
}

/// Textbook elimination on an int matrix.
inline std::size_t naive_rank(const mindist::Gf2Matrix& h) {
    std::vector<std::vector<int>> m(h.rows(), std::vector<int>(h.cols(), 0));
    for (std::size_t r = 0; r < h.rows(); ++r)
        for (std::size_t c = 0; c < h.cols(); ++c)
            m[r][c] = h.get(r, c) ? 1 : 0;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < h.cols() && rank < h.rows(); ++c) {
        std::size_t pivot = rank;
        while (pivot < h.rows() && m[pivot][c] == 0)
            ++pivot;
        if (pivot == h.rows())
            continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = 0; r < h.rows(); ++r)
            if (r != rank && m[r][c])
                for (std::size_t k = 0; k < h.cols(); ++k)
                    m[r][k] ^= m[rank][k];
        ++rank;
    }
    return rank;
}

/// Random matrix with each cell set with probability ~density.
inline mindist::Gf2Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed,
                                        double density = 0.3) {
    mindist::SplitMix64 rng(seed, 7);
    mindist::Gf2Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rng.next_unit() < density)
                m.set(r, c, true);
    return m;
}

/// Column-regular random LDPC matrix (each column picks `col_weight`
/// distinct rows); duplicate columns are allowed on purpose, small minimum
/// distances included.
inline mindist::Gf2Matrix random_regular_ldpc(std::size_t rows, std::size_t cols,
                                              std::size_t col_weight, std::uint64_t seed) {
    mindist::SplitMix64 rng(seed, 11);
    mindist::Gf2Matrix m(rows, cols);
    for (std::size_t c = 0; c < cols; ++c) {
        std::vector<std::uint32_t> picks;
        while (picks.size() < col_weight) {
            const std::uint32_t r = static_cast<std::uint32_t>(rng.next_u64() % rows);
            bool dup = false;
            for (std::uint32_t p : picks)
                dup = dup || p == r;
            if (!dup)
                picks.push_back(r);
        }
        for (std::uint32_t r : picks)
            m.set(r, c, true);
    }
    return m;
}

inline mindist::BitVector random_bitvector(std::size_t n, std::uint64_t seed, double density = 0.5) {
    mindist::SplitMix64 rng(seed, 13);
    mindist::BitVector v(n);
    for (std::size_t i = 0; i < n; ++i)
        if (rng.next_unit() < density)
            v.set(i, true);
    return v;
}

} // namespace testsupport
