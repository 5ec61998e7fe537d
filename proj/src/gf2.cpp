#include "mindist/gf2.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace mindist {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * wpr_, 0) {
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("Gf2Matrix: rows and cols must be >= 1");
}

Gf2Matrix Gf2Matrix::from_rows(const std::vector<std::string>& rows) {
    if (rows.empty())
        throw std::invalid_argument("Gf2Matrix::from_rows: no rows");
    Gf2Matrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_)
            throw std::invalid_argument("Gf2Matrix::from_rows: ragged rows");
        for (std::size_t c = 0; c < m.cols_; ++c) {
            if (rows[r][c] == '1')
                m.set(r, c, true);
            else if (rows[r][c] != '0')
                throw std::invalid_argument("Gf2Matrix::from_rows: expected '0' or '1'");
        }
    }
    return m;
}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
    Gf2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, true);
    return m;
}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool value) {
    if (r >= rows_ || c >= cols_)
        throw std::out_of_range("Gf2Matrix::set: index out of range");
    const std::uint64_t mask = std::uint64_t(1) << (c & 63);
    if (value)
        data_[r * wpr_ + (c >> 6)] |= mask;
    else
        data_[r * wpr_ + (c >> 6)] &= ~mask;
}

void Gf2Matrix::xor_row_into(std::size_t src, std::size_t dst) {
    const std::uint64_t* s = data_.data() + src * wpr_;
    std::uint64_t* d = data_.data() + dst * wpr_;
    for (std::size_t k = 0; k < wpr_; ++k)
        d[k] ^= s[k];
}

void Gf2Matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(data_.begin() + a * wpr_, data_.begin() + (a + 1) * wpr_,
                     data_.begin() + b * wpr_);
}

BitVector Gf2Matrix::row_vector(std::size_t r) const {
    BitVector v(cols_);
    std::copy_n(data_.data() + r * wpr_, wpr_, v.word_data());
    return v;
}

BitVector Gf2Matrix::column(std::size_t c) const {
    BitVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        if (get(r, c)) v.set(r, true);
    return v;
}

std::vector<BitVector> Gf2Matrix::columns() const {
    std::vector<BitVector> out(cols_, BitVector(rows_));
    for (std::size_t r = 0; r < rows_; ++r) {
        const std::uint64_t* row_words = data_.data() + r * wpr_;
        for (std::size_t k = 0; k < wpr_; ++k) {
            std::uint64_t w = row_words[k];
            while (w) {
                const std::size_t c = k * 64 + static_cast<std::size_t>(std::countr_zero(w));
                out[c].word_data()[r >> 6] |= std::uint64_t(1) << (r & 63);
                w &= w - 1;
            }
        }
    }
    return out;
}

std::size_t Gf2Matrix::count_ones() const {
    std::size_t n = 0;
    for (std::uint64_t w : data_)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

Permutation::Permutation(std::vector<std::uint32_t> forward) : forward_(std::move(forward)) {
    std::vector<bool> seen(forward_.size(), false);
    for (std::uint32_t t : forward_) {
        if (t >= forward_.size() || seen[t])
            throw std::invalid_argument("Permutation: forward map is not a bijection");
        seen[t] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::uint32_t> f(n);
    std::iota(f.begin(), f.end(), 0u);
    return Permutation(std::move(f));
}

BitVector Permutation::apply(const BitVector& v) const {
    if (v.size() != forward_.size())
        throw std::invalid_argument("Permutation::apply: length mismatch");
    BitVector out(v.size());
    for (std::uint32_t i : v.support())
        out.set(forward_[i], true);
    return out;
}

BitVector Permutation::apply_inverse(const BitVector& v) const {
    if (v.size() != forward_.size())
        throw std::invalid_argument("Permutation::apply_inverse: length mismatch");
    BitVector out(v.size());
    std::vector<bool> marked(forward_.size(), false);
    for (std::uint32_t j : v.support())
        marked[j] = true;
    for (std::size_t i = 0; i < forward_.size(); ++i)
        if (marked[forward_[i]])
            out.set(i, true);
    return out;
}

Permutation Permutation::inverse() const {
    std::vector<std::uint32_t> inv(forward_.size());
    for (std::size_t i = 0; i < forward_.size(); ++i)
        inv[forward_[i]] = static_cast<std::uint32_t>(i);
    return Permutation(std::move(inv));
}

Permutation Permutation::then(const Permutation& next) const {
    if (next.size() != size())
        throw std::invalid_argument("Permutation::then: size mismatch");
    std::vector<std::uint32_t> f(size());
    for (std::size_t i = 0; i < size(); ++i)
        f[i] = next.forward_[forward_[i]];
    return Permutation(std::move(f));
}

ParityCheckMatrix ParityCheckMatrix::from_matrix(Gf2Matrix m) {
    ParityCheckMatrix h;
    h.row_support.resize(m.rows());
    h.col_support.resize(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (m.get(r, c)) {
                h.row_support[r].push_back(static_cast<std::uint32_t>(c));
                h.col_support[c].push_back(static_cast<std::uint32_t>(r));
            }
        }
    }
    h.mat = std::move(m);
    return h;
}

std::size_t ParityCheckMatrix::edge_count() const {
    std::size_t n = 0;
    for (const auto& s : row_support)
        n += s.size();
    return n;
}

BitVector syndrome(const Gf2Matrix& h, const BitVector& e) {
    if (e.size() != h.cols())
        throw std::invalid_argument("syndrome: vector length does not match column count");
    BitVector s(h.rows());
    for (std::size_t r = 0; r < h.rows(); ++r) {
        const auto row = h.row(r);
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < row.size(); ++k)
            acc ^= row[k] & e.words()[k];
        if (std::popcount(acc) & 1)
            s.set(r, true);
    }
    return s;
}

std::size_t rank(const Gf2Matrix& h) {
    Gf2Matrix work = h;
    const std::size_t m = work.rows(), n = work.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t pivot = r;
        while (pivot < m && !work.get(pivot, c))
            ++pivot;
        if (pivot == m) continue;
        work.swap_rows(r, pivot);
        for (std::size_t i = r + 1; i < m; ++i)
            if (work.get(i, c))
                work.xor_row_into(r, i);
        ++r;
    }
    return r;
}

namespace {

// Incremental independence test over packed column vectors: reduce the
// candidate against the kept basis; nonzero residue means independent.
struct ColumnBasis {
    std::vector<BitVector> reduced;     // basis vectors in echelon-ish form
    std::vector<std::size_t> pivot_bit; // lowest set bit of each basis vector

    bool try_insert(BitVector col) {
        for (std::size_t k = 0; k < reduced.size(); ++k)
            if (col.get(pivot_bit[k]))
                col.xor_in(reduced[k]);
        if (col.is_zero())
            return false;
        std::size_t pb = 0;
        while (!col.get(pb)) ++pb;
        // keep earlier vectors reduced against the new pivot
        for (std::size_t k = 0; k < reduced.size(); ++k)
            if (reduced[k].get(pb))
                reduced[k].xor_in(col);
        reduced.push_back(std::move(col));
        pivot_bit.push_back(pb);
        return true;
    }
};

} // namespace

ColumnSelection select_independent_columns(const Gf2Matrix& h, const Permutation& preference) {
    if (preference.size() != h.cols())
        throw std::invalid_argument("select_independent_columns: preference size mismatch");

    const std::vector<BitVector> cols = h.columns();
    const Permutation scan = preference.inverse(); // scan[k] = column visited k-th

    ColumnBasis basis;
    std::vector<std::uint32_t> kept, rejected;
    kept.reserve(h.rows());
    for (std::size_t k = 0; k < h.cols(); ++k) {
        const std::uint32_t c = scan[k];
        if (kept.size() < h.rows() && basis.try_insert(cols[c]))
            kept.push_back(c);
        else
            rejected.push_back(c);
    }

    std::vector<std::uint32_t> forward(h.cols());
    std::uint32_t pos = 0;
    for (std::uint32_t c : kept)
        forward[c] = pos++;
    for (std::uint32_t c : rejected)
        forward[c] = pos++;
    ColumnSelection out;
    out.perm = Permutation(std::move(forward));
    out.matrix = permute_columns(h, out.perm);
    out.independent = kept.size();
    return out;
}

SystematicForm systematic_reduce(const Gf2Matrix& h2, const BitVector& s) {
    if (s.size() != h2.rows())
        throw std::invalid_argument("systematic_reduce: syndrome length must equal row count");
    if (h2.cols() < h2.rows())
        throw std::invalid_argument("systematic_reduce: need at least rows() columns");

    SystematicForm out{h2, s};
    const std::size_t m = out.h.rows();
    for (std::size_t c = 0; c < m; ++c) {
        std::size_t pivot = c;
        while (pivot < m && !out.h.get(pivot, c))
            ++pivot;
        if (pivot == m)
            throw std::invalid_argument(
                "systematic_reduce: leftmost block is singular; reselect independent columns");
        if (pivot != c) {
            out.h.swap_rows(c, pivot);
            const bool sc = out.s.get(c), sp = out.s.get(pivot);
            out.s.set(c, sp);
            out.s.set(pivot, sc);
        }
        for (std::size_t r = 0; r < m; ++r) {
            if (r != c && out.h.get(r, c)) {
                out.h.xor_row_into(c, r);
                if (out.s.get(c))
                    out.s.flip(r);
            }
        }
    }
    return out;
}

Gf2Matrix independent_row_basis(const Gf2Matrix& h) {
    ColumnBasis basis;
    std::vector<std::size_t> kept;
    for (std::size_t r = 0; r < h.rows(); ++r)
        if (basis.try_insert(h.row_vector(r)))
            kept.push_back(r);
    if (kept.empty())
        throw std::invalid_argument("independent_row_basis: matrix is zero");
    Gf2Matrix out(kept.size(), h.cols());
    for (std::size_t i = 0; i < kept.size(); ++i)
        std::copy_n(h.row(kept[i]).data(), h.words_per_row(), out.row(i).data());
    return out;
}

Gf2Matrix permute_columns(const Gf2Matrix& h, const Permutation& perm) {
    if (perm.size() != h.cols())
        throw std::invalid_argument("permute_columns: permutation size mismatch");
    Gf2Matrix out(h.rows(), h.cols());
    for (std::size_t r = 0; r < h.rows(); ++r) {
        const auto src = h.row(r);
        for (std::size_t k = 0; k < src.size(); ++k) {
            std::uint64_t w = src[k];
            while (w) {
                const std::size_t c = k * 64 + static_cast<std::size_t>(std::countr_zero(w));
                out.set(r, perm[c], true);
                w &= w - 1;
            }
        }
    }
    return out;
}

} // namespace mindist
