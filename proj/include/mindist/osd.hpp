#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mindist/bitvec.hpp"
#include "mindist/bp.hpp"
#include "mindist/channel.hpp"
#include "mindist/gf2.hpp"

namespace mindist {

struct SearchConfig {
    std::size_t order = 2;  // error-pattern weight budget on the information set
    std::size_t trials = 100;
    ChannelConfig channel;
    BpConfig bp;
    double alpha = 1.0;
    std::size_t keep_top = 1024; // distinct codewords retained after the final merge
    std::size_t report_every = 0; // 0 disables progress callbacks
    // Extension (off by default): additionally combine all pairs among the
    // lightest all_pairs_top patterns instead of only first-vs-rest.
    std::size_t all_pairs_top = 0;
    // Tests set this; otherwise a deterministic ~1% sample of patterns is
    // re-checked against the reduced system each trial.
    bool verify_all_patterns = false;
};

/// Reliability sort plus independence repair, kept separate so coordinates
/// can be mapped back and forth exactly.
struct PermutationPair {
    Permutation reliability_sort; // ascending-reliability column order
    Permutation basis_repair;     // moves a dependent-free basis to the front

    Permutation combined() const { return reliability_sort.then(basis_repair); }
    BitVector to_original(const BitVector& permuted) const {
        return combined().apply_inverse(permuted);
    }
};

/// Candidate error pattern in permuted coordinates, syndrome-consistent by
/// construction.
struct ErrorPattern {
    BitVector bits;
    std::size_t weight = 0;
};

/// Deduplicated set of the lightest verified codewords seen so far, in
/// original coordinates, with the trial that first produced each.
class CandidateList {
public:
    /// Replaces / extends / ignores `found` depending on how its lightest
    /// weight compares to the current best. Every vector is re-verified;
    /// a zero vector or non-codeword is a logic error.
    void update(const Gf2Matrix& h, const std::vector<BitVector>& found, std::size_t trial);

    bool empty() const { return codewords_.empty(); }
    std::size_t size() const { return codewords_.size(); }
    std::size_t best_weight() const { return best_weight_; } // 0 when empty
    bool truncated() const { return truncated_; }

    /// Keep the keep_top earliest-found codewords (ties by bit content);
    /// meant to run once, after the last update.
    void truncate(std::size_t keep_top);

    /// Entries ordered by (first-found trial, bit content).
    std::vector<std::pair<BitVector, std::size_t>> entries() const;

    std::optional<std::size_t> first_found_trial() const;  // min over entries
    std::optional<std::size_t> complete_at_trial() const;  // max over entries

    bool operator==(const CandidateList& other) const = default;

private:
    std::map<BitVector, std::size_t, BitVectorLexLess> codewords_;
    std::size_t best_weight_ = 0;
    bool truncated_ = false;
};

/// Ascending stable sort of coordinates by reliability (lambda 1), then a
/// greedy independence repair (lambda 2) so the leftmost rank(h) columns of
/// the returned matrix form a basis.
std::pair<PermutationPair, Gf2Matrix> build_permutations(const std::vector<double>& reliability,
                                                         const Gf2Matrix& h);

/// All sum_{i<=order} C(K, i) patterns of the reduced system [I | P] e = s:
/// pick at most `order` information-set bits, complete the basis part as
/// P*info + s. Sorted by total weight, ties by information-support size
/// then by ascending support indices.
std::vector<ErrorPattern> enumerate_patterns(const Gf2Matrix& h_sys, const BitVector& s_sys,
                                             std::size_t order);

/// Step from syndrome-consistent patterns to codewords. Nonzero syndrome:
/// XOR of the first (lightest) pattern with each other pattern; zero
/// syndrome: the nonzero patterns themselves. Only the minimum-weight
/// products survive; results are mapped back to original coordinates.
/// all_pairs_top > 0 additionally tries all pairs among that many lightest
/// patterns. All returned vectors are nonzero and deduplicated.
std::vector<BitVector> harvest_codewords(const std::vector<ErrorPattern>& patterns,
                                         bool syndrome_zero, const PermutationPair& perm,
                                         std::size_t all_pairs_top = 0);

struct TrialRecord {
    bool zero_syndrome = false;
    std::size_t pattern_count = 0;
    std::size_t harvested_weight = 0; // lightest codeword this trial produced, 0 = none
    std::size_t new_codewords = 0;    // how many entered the candidate list
    std::size_t best_weight_so_far = 0;
    double ms = 0.0;
};

struct SearchReport {
    SearchConfig config;
    std::size_t code_rows = 0, code_cols = 0, code_rank = 0;
    CandidateList candidates;
    std::vector<TrialRecord> trial_records;
    std::size_t zero_syndrome_trials = 0;
    std::optional<std::size_t> first_best_weight_trial; // first trial hitting the final weight
    std::optional<std::size_t> earliest_complete_trial; // trial completing the final list
    double total_ms = 0.0;
};

using ProgressFn = std::function<void(std::size_t trial, const TrialRecord&)>;

/// The outer loop: `trials` independent noise realizations, each decoded,
/// reliability-sorted, reduced, reprocessed at the configured order and
/// harvested into the shared candidate list. Deterministic in everything
/// but the timing fields for a fixed (h, cfg), regardless of `threads`.
SearchReport run_search(const ParityCheckMatrix& h, const SearchConfig& cfg,
                        std::size_t threads = 1, const ProgressFn& progress = {});

} // namespace mindist
