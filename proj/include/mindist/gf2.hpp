#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mindist/bitvec.hpp"

namespace mindist {

/// Dense GF(2) matrix, rows packed into 64-bit words (row-major).
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols);

    /// Rows given as '0'/'1' strings, all the same length.
    static Gf2Matrix from_rows(const std::vector<std::string>& rows);
    static Gf2Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return wpr_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool value);

    std::span<std::uint64_t> row(std::size_t r) { return {data_.data() + r * wpr_, wpr_}; }
    std::span<const std::uint64_t> row(std::size_t r) const { return {data_.data() + r * wpr_, wpr_}; }

    void xor_row_into(std::size_t src, std::size_t dst);
    void swap_rows(std::size_t a, std::size_t b);

    BitVector row_vector(std::size_t r) const;
    BitVector column(std::size_t c) const;
    /// All columns as packed (rows()-bit) vectors.
    std::vector<BitVector> columns() const;

    std::size_t count_ones() const;

    bool operator==(const Gf2Matrix& other) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> data_;
};

/// Bijection on [0, N); forward maps old index -> new index.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<std::uint32_t> forward);
    static Permutation identity(std::size_t n);

    std::size_t size() const { return forward_.size(); }
    std::uint32_t operator[](std::size_t i) const { return forward_[i]; }
    const std::vector<std::uint32_t>& forward() const { return forward_; }

    /// out[forward[i]] = in[i]
    BitVector apply(const BitVector& v) const;
    BitVector apply_inverse(const BitVector& v) const;
    Permutation inverse() const;
    /// Composition: i -> next[forward[i]].
    Permutation then(const Permutation& next) const;

    bool operator==(const Permutation& other) const = default;

private:
    std::vector<std::uint32_t> forward_;
};

/// Parity-check matrix with sparse adjacency alongside the packed rows.
/// row_support[m] lists the variable indices of check m; col_support[v]
/// lists the check indices touching variable v.
struct ParityCheckMatrix {
    Gf2Matrix mat;
    std::vector<std::vector<std::uint32_t>> row_support;
    std::vector<std::vector<std::uint32_t>> col_support;

    static ParityCheckMatrix from_matrix(Gf2Matrix m);

    std::size_t rows() const { return mat.rows(); }
    std::size_t cols() const { return mat.cols(); }
    std::size_t edge_count() const;
};

/// s_j = parity of <row j, e>.
BitVector syndrome(const Gf2Matrix& h, const BitVector& e);

/// GF(2) rank; the input is left untouched.
std::size_t rank(const Gf2Matrix& h);

struct ColumnSelection {
    Permutation perm;      // column reordering that brings the kept basis to the front
    Gf2Matrix matrix;      // input with columns reordered by perm
    std::size_t independent = 0; // number of kept columns (= rank of the input)
};

/// Greedy left-to-right scan in `preference` order: a column is kept iff it
/// is independent of the columns already kept. Kept columns land at
/// positions 0..independent-1 in scan order, rejected ones follow in scan
/// order. independent < rows() signals a rank-deficient input.
ColumnSelection select_independent_columns(const Gf2Matrix& h, const Permutation& preference);

struct SystematicForm {
    Gf2Matrix h; // [I_M | P]
    BitVector s; // syndrome with the same row operations applied
};

/// Gauss-Jordan on the leftmost rows() columns, mirroring every row
/// operation on s. Throws std::invalid_argument if the left block is
/// singular (caller should reselect columns).
SystematicForm systematic_reduce(const Gf2Matrix& h2, const BitVector& s);

/// Matrix made of an independent subset of h's rows (same null space).
/// Row order follows the first-seen scan; result has rank(h) rows.
Gf2Matrix independent_row_basis(const Gf2Matrix& h);

/// Columns of h reordered: new column perm[i] is old column i.
Gf2Matrix permute_columns(const Gf2Matrix& h, const Permutation& perm);

} // namespace mindist
