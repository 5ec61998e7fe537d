#include "mindist/osd.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "mindist/rng.hpp"

namespace mindist {

void CandidateList::update(const Gf2Matrix& h, const std::vector<BitVector>& found,
                           std::size_t trial) {
    if (found.empty())
        return;
    std::size_t found_min = h.cols() + 1;
    for (const BitVector& v : found) {
        if (v.is_zero())
            throw std::logic_error("CandidateList::update: zero vector offered");
        if (!syndrome(h, v).is_zero())
            throw std::logic_error("CandidateList::update: non-codeword offered");
        found_min = std::min(found_min, v.weight());
    }
    if (!codewords_.empty() && found_min > best_weight_)
        return;
    if (codewords_.empty() || found_min < best_weight_) {
        codewords_.clear();
        best_weight_ = found_min;
    }
    for (const BitVector& v : found)
        if (v.weight() == best_weight_)
            codewords_.emplace(v, trial); // first insertion wins
}

void CandidateList::truncate(std::size_t keep_top) {
    if (codewords_.size() <= keep_top)
        return;
    auto ordered = entries();
    codewords_.clear();
    for (std::size_t i = 0; i < keep_top; ++i)
        codewords_.emplace(ordered[i].first, ordered[i].second);
    truncated_ = true;
}

std::vector<std::pair<BitVector, std::size_t>> CandidateList::entries() const {
    std::vector<std::pair<BitVector, std::size_t>> out(codewords_.begin(), codewords_.end());
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.second < b.second; // map order already sorts by bit content
    });
    return out;
}

std::optional<std::size_t> CandidateList::first_found_trial() const {
    std::optional<std::size_t> t;
    for (const auto& [v, trial] : codewords_)
        if (!t || trial < *t)
            t = trial;
    return t;
}

std::optional<std::size_t> CandidateList::complete_at_trial() const {
    std::optional<std::size_t> t;
    for (const auto& [v, trial] : codewords_)
        if (!t || trial > *t)
            t = trial;
    return t;
}

std::pair<PermutationPair, Gf2Matrix> build_permutations(const std::vector<double>& reliability,
                                                         const Gf2Matrix& h) {
    if (reliability.size() != h.cols())
        throw std::invalid_argument("build_permutations: reliability length mismatch");

    std::vector<std::uint32_t> order(h.cols());
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return reliability[a] < reliability[b]; // stable: ties keep ascending index
    });
    std::vector<std::uint32_t> forward(h.cols());
    for (std::uint32_t pos = 0; pos < order.size(); ++pos)
        forward[order[pos]] = pos;
    Permutation sort_perm(std::move(forward));

    const Gf2Matrix h1 = permute_columns(h, sort_perm);
    ColumnSelection repair = select_independent_columns(h1, Permutation::identity(h.cols()));

    PermutationPair pair{std::move(sort_perm), std::move(repair.perm)};
    return {std::move(pair), std::move(repair.matrix)};
}

namespace {

// Pattern emission for one fixed support size, supports in lexicographic
// order; prefix XORs are carried down the recursion.
void emit_size(const std::vector<BitVector>& p_cols, const BitVector& base,
               std::size_t basis_bits, std::size_t total_bits, std::size_t size,
               std::vector<std::uint32_t>& support, std::size_t start,
               std::vector<ErrorPattern>& out) {
    if (support.size() == size) {
        BitVector bits(total_bits);
        std::copy_n(base.word_data(), base.word_count(), bits.word_data());
        for (std::uint32_t idx : support)
            bits.set(basis_bits + idx, true);
        const std::size_t w = base.weight() + support.size();
        out.push_back({std::move(bits), w});
        return;
    }
    for (std::size_t idx = start; idx + (size - support.size()) <= p_cols.size(); ++idx) {
        support.push_back(static_cast<std::uint32_t>(idx));
        const BitVector next = base ^ p_cols[idx];
        emit_size(p_cols, next, basis_bits, total_bits, size, support, idx + 1, out);
        support.pop_back();
    }
}

std::size_t binomial_guarded(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::size_t acc = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        if (acc > (std::size_t(1) << 50))
            throw std::invalid_argument("pattern count too large; lower the order");
        acc = acc * (n - k + i) / i;
    }
    return acc;
}

} // namespace

std::vector<ErrorPattern> enumerate_patterns(const Gf2Matrix& h_sys, const BitVector& s_sys,
                                             std::size_t order) {
    const std::size_t m = h_sys.rows(), n = h_sys.cols();
    if (s_sys.size() != m)
        throw std::invalid_argument("enumerate_patterns: syndrome length mismatch");
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c)
            if (h_sys.get(r, c) != (r == c))
                throw std::invalid_argument("enumerate_patterns: left block is not the identity");

    const std::size_t k = n - m;
    const std::size_t budget = std::min(order, k);

    std::vector<BitVector> all_cols = h_sys.columns();
    std::vector<BitVector> p_cols(std::make_move_iterator(all_cols.begin() + m),
                                  std::make_move_iterator(all_cols.end()));

    std::size_t expected = 0;
    for (std::size_t i = 0; i <= budget; ++i)
        expected += binomial_guarded(k, i);

    std::vector<ErrorPattern> patterns;
    patterns.reserve(expected);
    std::vector<std::uint32_t> support;
    for (std::size_t size = 0; size <= budget; ++size)
        emit_size(p_cols, s_sys, m, n, size, support, 0, patterns);

    // generation order is (support size, lex support); a stable sort by
    // weight alone yields the documented tie order
    std::stable_sort(patterns.begin(), patterns.end(),
                     [](const ErrorPattern& a, const ErrorPattern& b) {
                         return a.weight < b.weight;
                     });
    return patterns;
}

std::vector<BitVector> harvest_codewords(const std::vector<ErrorPattern>& patterns,
                                         bool syndrome_zero, const PermutationPair& perm,
                                         std::size_t all_pairs_top) {
    if (patterns.empty())
        return {};

    std::vector<BitVector> products; // permuted coordinates, minimum weight only
    std::size_t best = SIZE_MAX;
    auto offer = [&](BitVector v, std::size_t w) {
        if (w == 0 || w > best)
            return;
        if (w < best) {
            best = w;
            products.clear();
        }
        products.push_back(std::move(v));
    };

    if (syndrome_zero) {
        // every pattern already solves H2' e = 0, so nonzero ones are codewords
        for (const ErrorPattern& p : patterns)
            offer(p.bits, p.weight);
    } else {
        const ErrorPattern& first = patterns[0];
        for (std::size_t i = 1; i < patterns.size(); ++i) {
            BitVector v = first.bits ^ patterns[i].bits;
            const std::size_t w = v.weight();
            offer(std::move(v), w);
        }
    }
    if (all_pairs_top > 1) {
        const std::size_t top = std::min(all_pairs_top, patterns.size());
        for (std::size_t i = 0; i < top; ++i) {
            for (std::size_t j = i + 1; j < top; ++j) {
                if (!syndrome_zero && i == 0)
                    continue; // first-vs-rest already covered
                BitVector v = patterns[i].bits ^ patterns[j].bits;
                const std::size_t w = v.weight();
                offer(std::move(v), w);
            }
        }
    }

    std::set<BitVector, BitVectorLexLess> unique;
    for (const BitVector& v : products)
        unique.insert(perm.to_original(v));
    return {unique.begin(), unique.end()};
}

namespace {

struct TrialOutcome {
    TrialRecord record;
    std::vector<BitVector> found;
};

void validate_config(const SearchConfig& cfg) {
    if (cfg.trials < 1)
        throw std::invalid_argument("run_search: trials must be >= 1");
    if (cfg.keep_top < 1)
        throw std::invalid_argument("run_search: keep_top must be >= 1");
    if (!(cfg.alpha > 0.0) || cfg.alpha > 1.0)
        throw std::invalid_argument("run_search: alpha must be in (0, 1]");
    if (!(cfg.channel.sigma > 0.0))
        throw std::invalid_argument("run_search: sigma must be positive");
}

} // namespace

SearchReport run_search(const ParityCheckMatrix& h, const SearchConfig& cfg, std::size_t threads,
                        const ProgressFn& progress) {
    validate_config(cfg);
    const auto t_start = std::chrono::steady_clock::now();

    // OSD works on an independent row basis; BP keeps the full Tanner graph.
    const std::size_t h_rank = rank(h.mat);
    const Gf2Matrix h_eff =
        h_rank == h.rows() ? h.mat : independent_row_basis(h.mat);
    const std::size_t k_eff = h.cols() - h_rank;

    std::size_t expected_patterns = 0;
    for (std::size_t i = 0; i <= std::min(cfg.order, k_eff); ++i)
        expected_patterns += binomial_guarded(k_eff, i);

    auto run_trial = [&](std::size_t trial) -> TrialOutcome {
        const auto t0 = std::chrono::steady_clock::now();
        TrialOutcome out;

        const ReceivedVector y = transmit_all_zero(h.cols(), cfg.channel, trial);
        const LlrVector l0 = initial_llr(y, cfg.channel.sigma);
        const DecodeTrace trace = decode(h, l0, cfg.bp);
        const std::vector<double> reliability = accumulate_reliability(trace, cfg.alpha);

        auto [perm, h2] = build_permutations(reliability, h_eff);
        const BitVector s = syndrome(h_eff, trace.final_hard);
        const SystematicForm sys = systematic_reduce(h2, s);
        const std::vector<ErrorPattern> patterns = enumerate_patterns(sys.h, sys.s, cfg.order);

        if (patterns.size() != expected_patterns)
            throw std::logic_error("run_search: pattern count does not match the binomial sum");

        // re-check pattern consistency against the reduced system
        if (cfg.verify_all_patterns) {
            for (const ErrorPattern& p : patterns)
                if (!(syndrome(sys.h, p.bits) == sys.s))
                    throw std::logic_error("run_search: pattern violates the reduced system");
        } else {
            SplitMix64 sampler(cfg.channel.seed ^ 0xa5a5a5a5a5a5a5a5ull, trial);
            for (const ErrorPattern& p : patterns)
                if ((sampler.next_u64() & 127u) == 0 && !(syndrome(sys.h, p.bits) == sys.s))
                    throw std::logic_error("run_search: pattern violates the reduced system");
        }

        out.found = harvest_codewords(patterns, s.is_zero(), perm, cfg.all_pairs_top);
        for (const BitVector& v : out.found)
            if (v.is_zero() || !syndrome(h.mat, v).is_zero())
                throw std::logic_error("run_search: harvested vector is not a nonzero codeword");

        out.record.zero_syndrome = s.is_zero();
        out.record.pattern_count = patterns.size();
        out.record.harvested_weight = out.found.empty() ? 0 : out.found.front().weight();
        out.record.ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
        return out;
    };

    SearchReport report;
    report.config = cfg;
    report.code_rows = h.rows();
    report.code_cols = h.cols();
    report.code_rank = h_rank;
    report.trial_records.resize(cfg.trials);

    std::vector<TrialOutcome> slots;
    const std::size_t workers = std::max<std::size_t>(1, threads);
    const std::size_t chunk = workers == 1 ? cfg.trials : workers * 16;

    for (std::size_t base = 0; base < cfg.trials; base += chunk) {
        const std::size_t count = std::min(chunk, cfg.trials - base);
        slots.assign(count, {});
        if (workers == 1) {
            for (std::size_t i = 0; i < count; ++i)
                slots[i] = run_trial(base + i);
        } else {
            std::vector<std::thread> pool;
            std::atomic<std::size_t> next{0};
            std::exception_ptr error;
            std::mutex error_mutex;
            for (std::size_t w = 0; w < std::min(workers, count); ++w) {
                pool.emplace_back([&]() {
                    try {
                        for (std::size_t i; (i = next.fetch_add(1)) < count;)
                            slots[i] = run_trial(base + i);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(error_mutex);
                        if (!error)
                            error = std::current_exception();
                    }
                });
            }
            for (auto& t : pool)
                t.join();
            if (error)
                std::rethrow_exception(error);
        }

        // merge strictly in trial order so threading cannot change content
        for (std::size_t i = 0; i < count; ++i) {
            const std::size_t trial = base + i;
            TrialOutcome& out = slots[i];
            const std::size_t before = report.candidates.size();
            const std::size_t best_before = report.candidates.best_weight();
            report.candidates.update(h.mat, out.found, trial);
            out.record.new_codewords =
                report.candidates.best_weight() == best_before
                    ? report.candidates.size() - before
                    : report.candidates.size();
            out.record.best_weight_so_far = report.candidates.best_weight();
            if (out.record.zero_syndrome)
                ++report.zero_syndrome_trials;
            report.trial_records[trial] = out.record;
            if (progress && cfg.report_every > 0 && (trial + 1) % cfg.report_every == 0)
                progress(trial, report.trial_records[trial]);
        }
    }

    report.candidates.truncate(cfg.keep_top);
    report.first_best_weight_trial = report.candidates.first_found_trial();
    report.earliest_complete_trial = report.candidates.complete_at_trial();
    report.total_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t_start)
            .count();
    return report;
}

} // namespace mindist
