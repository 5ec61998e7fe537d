#include "mindist/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace mindist {

namespace {

// Generator rows for the null space of h: one row per free column of the
// reduced row-echelon form.
std::vector<BitVector> generator_basis(const Gf2Matrix& h) {
    Gf2Matrix work = h;
    const std::size_t m = work.rows(), n = work.cols();
    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(n, false);
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t pr = r;
        while (pr < m && !work.get(pr, c))
            ++pr;
        if (pr == m) continue;
        work.swap_rows(r, pr);
        for (std::size_t i = 0; i < m; ++i)
            if (i != r && work.get(i, c))
                work.xor_row_into(r, i);
        pivot_col.push_back(c);
        is_pivot[c] = true;
        ++r;
    }
    std::vector<BitVector> gens;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        BitVector g(n);
        g.set(f, true);
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            if (work.get(i, f))
                g.set(pivot_col[i], true);
        gens.push_back(std::move(g));
    }
    return gens;
}

} // namespace

WeightSpectrumSlice exhaustive_min_weight(const Gf2Matrix& h, std::size_t max_dim) {
    const std::vector<BitVector> gens = generator_basis(h);
    const std::size_t k = gens.size();
    if (k > max_dim)
        throw OracleRefusalError("exhaustive_min_weight: dimension " + std::to_string(k) +
                                     " exceeds limit " + std::to_string(max_dim) +
                                     "; raise max_dim only if 2^" + std::to_string(k) +
                                     " enumeration is really intended",
                                 k);

    WeightSpectrumSlice slice;
    slice.dimension = k;
    if (k == 0)
        return slice; // trivial code, no nonzero codewords

    BitVector current(h.cols());
    std::size_t best = h.cols() + 1;
    const std::uint64_t total = std::uint64_t(1) << k;
    for (std::uint64_t counter = 1; counter < total; ++counter) {
        // Gray step: codeword(counter) differs from the previous one by
        // exactly generator countr_zero(counter).
        current.xor_in(gens[static_cast<std::size_t>(std::countr_zero(counter))]);
        const std::size_t w = current.weight();
        if (w < best) {
            best = w;
            slice.multiplicity = 1;
            slice.witnesses.clear();
            slice.witnesses_capped = false;
            slice.witnesses.push_back(current);
        } else if (w == best) {
            ++slice.multiplicity;
            if (slice.witnesses.size() < kOracleWitnessCap)
                slice.witnesses.push_back(current);
            else
                slice.witnesses_capped = true;
        }
    }
    slice.d_min = best;
    return slice;
}

bool is_codeword(const Gf2Matrix& h, const BitVector& c) {
    return syndrome(h, c).is_zero();
}

namespace {

std::uint64_t hash_words(const std::uint64_t* words, std::size_t count) {
    std::uint64_t acc = 0x9e3779b97f4a7c15ull;
    for (std::size_t i = 0; i < count; ++i) {
        acc ^= words[i];
        acc *= 0xbf58476d1ce4e5b9ull;
        acc ^= acc >> 29;
    }
    return acc;
}

struct SubsetRec {
    std::uint64_t hash;
    std::uint32_t i, j, k; // k unused for pairs
};

BitVector subset_xor(const std::vector<BitVector>& cols, const SubsetRec& rec, bool triple) {
    BitVector x = cols[rec.i] ^ cols[rec.j];
    if (triple)
        x.xor_in(cols[rec.k]);
    return x;
}

// Splits one run of equal hashes into groups of truly equal XOR values and
// sums C(group, 2) over the groups.
std::size_t equal_pairs_in_run(const std::vector<BitVector>& cols,
                               const std::vector<SubsetRec>& recs, std::size_t begin,
                               std::size_t end, bool triple) {
    std::vector<BitVector> values;
    std::vector<std::size_t> group_size;
    for (std::size_t t = begin; t < end; ++t) {
        const BitVector x = subset_xor(cols, recs[t], triple);
        bool matched = false;
        for (std::size_t g = 0; g < values.size(); ++g) {
            if (values[g] == x) {
                ++group_size[g];
                matched = true;
                break;
            }
        }
        if (!matched) {
            values.push_back(x);
            group_size.push_back(1);
        }
    }
    std::size_t pairs = 0;
    for (std::size_t g : group_size)
        pairs += g * (g - 1) / 2;
    return pairs;
}

} // namespace

std::optional<BoundedMinWeight> bounded_min_weight(const Gf2Matrix& h, std::size_t max_weight) {
    if (max_weight < 1)
        throw std::invalid_argument("bounded_min_weight: max_weight must be >= 1");
    max_weight = std::min<std::size_t>(max_weight, 6);
    const std::size_t n = h.cols();
    if (max_weight >= 3 && n > 2000)
        throw OracleRefusalError("bounded_min_weight: too many columns for pair matching", n);
    if (max_weight >= 5 && n > 600)
        throw OracleRefusalError("bounded_min_weight: too many columns for triple matching", n);

    const std::vector<BitVector> cols = h.columns();
    const std::size_t words = cols[0].word_count();

    // weight 1: zero columns
    std::size_t m1 = 0;
    for (const BitVector& c : cols)
        if (c.is_zero()) ++m1;
    if (m1 > 0)
        return BoundedMinWeight{1, m1};
    if (max_weight < 2)
        return std::nullopt;

    // weight 2: equal column pairs
    std::size_t m2 = 0;
    {
        std::vector<std::pair<std::uint64_t, std::uint32_t>> hs(n);
        for (std::size_t c = 0; c < n; ++c)
            hs[c] = {hash_words(cols[c].word_data(), words), static_cast<std::uint32_t>(c)};
        std::sort(hs.begin(), hs.end());
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n && hs[b].first == hs[a].first; ++b)
                if (cols[hs[a].second] == cols[hs[b].second])
                    ++m2;
    }
    if (m2 > 0)
        return BoundedMinWeight{2, m2};
    if (max_weight < 3)
        return std::nullopt;

    // all pair XORs, sorted by hash
    std::vector<SubsetRec> pairs;
    pairs.reserve(n * (n - 1) / 2);
    {
        BitVector x(h.rows());
        for (std::uint32_t i = 0; i < n; ++i) {
            for (std::uint32_t j = i + 1; j < n; ++j) {
                x = cols[i];
                x.xor_in(cols[j]);
                pairs.push_back({hash_words(x.word_data(), words), i, j, 0});
            }
        }
    }
    std::sort(pairs.begin(), pairs.end(),
              [](const SubsetRec& a, const SubsetRec& b) { return a.hash < b.hash; });
    auto pair_run = [&](std::uint64_t hash) {
        const auto lo = std::lower_bound(
            pairs.begin(), pairs.end(), hash,
            [](const SubsetRec& r, std::uint64_t v) { return r.hash < v; });
        auto hi = lo;
        while (hi != pairs.end() && hi->hash == hash)
            ++hi;
        return std::pair{lo, hi};
    };

    // weight 3: pair XOR equal to a third column. Indices are automatically
    // distinct here: a shared index would force a zero or duplicate column,
    // which weights 1 and 2 already ruled out.
    std::size_t m3_raw = 0;
    for (std::uint32_t c = 0; c < n; ++c) {
        const std::uint64_t hc = hash_words(cols[c].word_data(), words);
        auto [lo, hi] = pair_run(hc);
        for (auto it = lo; it != hi; ++it)
            if (subset_xor(cols, *it, false) == cols[c])
                ++m3_raw;
    }
    if (m3_raw % 3 != 0)
        throw std::logic_error("bounded_min_weight: weight-3 count not divisible by 3");
    if (m3_raw > 0)
        return BoundedMinWeight{3, m3_raw / 3};
    if (max_weight < 4)
        return std::nullopt;

    // weight 4: two disjoint pairs with equal XOR; every 4-set splits into
    // 2+2 in 3 ways, each under a different key
    std::size_t m4_raw = 0;
    for (std::size_t begin = 0; begin < pairs.size();) {
        std::size_t end = begin + 1;
        while (end < pairs.size() && pairs[end].hash == pairs[begin].hash)
            ++end;
        if (end - begin > 1)
            m4_raw += equal_pairs_in_run(cols, pairs, begin, end, false);
        begin = end;
    }
    if (m4_raw % 3 != 0)
        throw std::logic_error("bounded_min_weight: weight-4 count not divisible by 3");
    if (m4_raw > 0)
        return BoundedMinWeight{4, m4_raw / 3};
    if (max_weight < 5)
        return std::nullopt;

    // all triple XORs, sorted by hash
    std::vector<SubsetRec> triples;
    triples.reserve(n * (n - 1) * (n - 2) / 6);
    {
        BitVector x(h.rows()), y(h.rows());
        for (std::uint32_t i = 0; i < n; ++i) {
            for (std::uint32_t j = i + 1; j < n; ++j) {
                x = cols[i];
                x.xor_in(cols[j]);
                for (std::uint32_t k = j + 1; k < n; ++k) {
                    y = x;
                    y.xor_in(cols[k]);
                    triples.push_back({hash_words(y.word_data(), words), i, j, k});
                }
            }
        }
    }
    std::sort(triples.begin(), triples.end(),
              [](const SubsetRec& a, const SubsetRec& b) { return a.hash < b.hash; });

    // weight 5: triple and pair with equal XOR (disjoint since lighter
    // weights are zero); each 5-set appears under C(5,3) = 10 splits
    std::size_t m5_raw = 0;
    for (std::size_t begin = 0; begin < triples.size();) {
        std::size_t end = begin + 1;
        while (end < triples.size() && triples[end].hash == triples[begin].hash)
            ++end;
        auto [plo, phi] = pair_run(triples[begin].hash);
        if (plo != phi) {
            for (std::size_t t = begin; t < end; ++t) {
                const BitVector tx = subset_xor(cols, triples[t], true);
                for (auto it = plo; it != phi; ++it)
                    if (subset_xor(cols, *it, false) == tx)
                        ++m5_raw;
            }
        }
        begin = end;
    }
    if (m5_raw % 10 != 0)
        throw std::logic_error("bounded_min_weight: weight-5 count not divisible by 10");
    if (m5_raw > 0)
        return BoundedMinWeight{5, m5_raw / 10};
    if (max_weight < 6)
        return std::nullopt;

    // weight 6: two disjoint triples with equal XOR; C(6,3)/2 = 10 splits
    std::size_t m6_raw = 0;
    for (std::size_t begin = 0; begin < triples.size();) {
        std::size_t end = begin + 1;
        while (end < triples.size() && triples[end].hash == triples[begin].hash)
            ++end;
        if (end - begin > 1)
            m6_raw += equal_pairs_in_run(cols, triples, begin, end, true);
        begin = end;
    }
    if (m6_raw % 10 != 0)
        throw std::logic_error("bounded_min_weight: weight-6 count not divisible by 10");
    if (m6_raw > 0)
        return BoundedMinWeight{6, m6_raw / 10};
    return std::nullopt;
}

} // namespace mindist
