#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mindist {

/// Packed GF(2) vector. Bits at positions >= size() are kept zero in the
/// backing words, so weight/equality/hash can work word-wise.
class BitVector {
public:
    BitVector() = default;

    explicit BitVector(std::size_t length)
        : length_(length), words_((length + 63) / 64, 0) {}

    static BitVector from_string(std::string_view bits) {
        BitVector v(bits.size());
        for (std::size_t i = 0; i < bits.size(); ++i) {
            if (bits[i] == '1')
                v.set(i, true);
            else if (bits[i] != '0')
                throw std::invalid_argument("BitVector::from_string: expected '0' or '1'");
        }
        return v;
    }

    std::size_t size() const { return length_; }
    bool empty() const { return length_ == 0; }

    bool get(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i, bool value) {
        if (i >= length_)
            throw std::out_of_range("BitVector::set: index out of range");
        const std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (value)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    void flip(std::size_t i) {
        if (i >= length_)
            throw std::out_of_range("BitVector::flip: index out of range");
        words_[i >> 6] ^= std::uint64_t(1) << (i & 63);
    }

    std::size_t weight() const {
        std::size_t w = 0;
        for (std::uint64_t word : words_)
            w += static_cast<std::size_t>(std::popcount(word));
        return w;
    }

    bool is_zero() const {
        for (std::uint64_t word : words_)
            if (word != 0)
                return false;
        return true;
    }

    /// In-place XOR with an equal-length vector.
    void xor_in(const BitVector& other) {
        if (other.length_ != length_)
            throw std::invalid_argument("BitVector::xor_in: length mismatch");
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] ^= other.words_[k];
    }

    BitVector operator^(const BitVector& other) const {
        BitVector out = *this;
        out.xor_in(other);
        return out;
    }

    bool operator==(const BitVector& other) const = default;

    const std::vector<std::uint64_t>& words() const { return words_; }
    std::uint64_t* word_data() { return words_.data(); }
    const std::uint64_t* word_data() const { return words_.data(); }
    std::size_t word_count() const { return words_.size(); }

    /// Support (set bit positions) in ascending order.
    std::vector<std::uint32_t> support() const {
        std::vector<std::uint32_t> out;
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                out.push_back(static_cast<std::uint32_t>(k * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
        return out;
    }

    std::string to_string() const {
        std::string s(length_, '0');
        for (std::size_t i = 0; i < length_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

    /// Lowercase hex, most-significant bit of the first digit = bit 0.
    /// Trailing bits of the last digit are zero padding.
    std::string to_hex() const {
        static const char digits[] = "0123456789abcdef";
        std::string s((length_ + 3) / 4, '0');
        for (std::size_t d = 0; d < s.size(); ++d) {
            unsigned nib = 0;
            for (unsigned b = 0; b < 4; ++b) {
                const std::size_t i = d * 4 + b;
                if (i < length_ && get(i))
                    nib |= 8u >> b;
            }
            s[d] = digits[nib];
        }
        return s;
    }

    static BitVector from_hex(std::string_view hex, std::size_t length) {
        if (hex.size() != (length + 3) / 4)
            throw std::invalid_argument("BitVector::from_hex: digit count does not match length");
        BitVector v(length);
        for (std::size_t d = 0; d < hex.size(); ++d) {
            char c = hex[d];
            unsigned nib;
            if (c >= '0' && c <= '9') nib = static_cast<unsigned>(c - '0');
            else if (c >= 'a' && c <= 'f') nib = static_cast<unsigned>(c - 'a' + 10);
            else throw std::invalid_argument("BitVector::from_hex: bad hex digit");
            for (unsigned b = 0; b < 4; ++b) {
                if (!(nib & (8u >> b))) continue;
                const std::size_t i = d * 4 + b;
                if (i >= length)
                    throw std::invalid_argument("BitVector::from_hex: padding bits must be zero");
                v.set(i, true);
            }
        }
        return v;
    }

    std::size_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull ^ length_;
        for (std::uint64_t w : words_) {
            h ^= w;
            h *= 0xbf58476d1ce4e5b9ull;
            h ^= h >> 29;
        }
        return static_cast<std::size_t>(h);
    }

    /// Lexicographic order on bit content (bit 0 most significant); used for
    /// deterministic candidate ordering.
    bool lex_less(const BitVector& other) const {
        const std::size_t n = std::min(words_.size(), other.words_.size());
        for (std::size_t k = 0; k < n; ++k) {
            if (words_[k] != other.words_[k]) {
                // lower bit index = more significant; compare bit-reversed words
                const std::uint64_t diff = words_[k] ^ other.words_[k];
                const int lowest = std::countr_zero(diff);
                return !((words_[k] >> lowest) & 1u);
            }
        }
        return length_ < other.length_;
    }

private:
    std::size_t length_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitVectorLexLess {
    bool operator()(const BitVector& a, const BitVector& b) const { return a.lex_less(b); }
};

struct BitVectorHash {
    std::size_t operator()(const BitVector& v) const { return v.hash(); }
};

} // namespace mindist
