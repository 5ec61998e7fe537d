// Acceptance suite. Each test case is one acceptance criterion with its
// thresholds pinned in code; a custom listener prints one PASS/FAIL line
// per criterion when the binary runs.
//
// Criteria 1-3 target the four benchmark codes. The genuine database files
// are used when present under data/codes/mackay/<name>; otherwise the
// bundled surrogates (same size, same column-degree profile, minimum
// distance proven by the exact low-weight census in test_data_codes) stand
// in, and the line says so.

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <set>
#include <string>

#include <json.hpp>

#include "mindist/alist.hpp"
#include "mindist/oracle.hpp"
#include "mindist/osd.hpp"
#include "mindist/report.hpp"
#include "support/fixtures.hpp"

using namespace mindist;

namespace {

struct CriterionReporter : doctest::IReporter {
    const doctest::TestCaseData* current = nullptr;
    bool current_failed = false;

    explicit CriterionReporter(const doctest::ContextOptions&) {}

    void test_case_start(const doctest::TestCaseData& data) override {
        current = &data;
        current_failed = false;
    }
    void test_case_end(const doctest::CurrentTestCaseStats& stats) override {
        if (current)
            std::printf("%s: %s\n", current->m_name,
                        stats.failure_flags == 0 && !current_failed ? "PASS" : "FAIL");
        std::fflush(stdout);
        current = nullptr;
    }
    void log_assert(const doctest::AssertData& data) override {
        if (data.m_failed)
            current_failed = true;
    }

    // unused hooks
    void report_query(const doctest::QueryData&) override {}
    void test_run_start() override {}
    void test_run_end(const doctest::TestRunStats&) override {}
    void test_case_reenter(const doctest::TestCaseData&) override {}
    void test_case_exception(const doctest::TestCaseException&) override { current_failed = true; }
    void subcase_start(const doctest::SubcaseSignature&) override {}
    void subcase_end() override {}
    void log_message(const doctest::MessageData&) override {}
    void test_case_skipped(const doctest::TestCaseData&) override {}
};

DOCTEST_REGISTER_REPORTER("criteria", 1, CriterionReporter);

std::string pick_code(const char* mackay_name, const char* surrogate_rel) {
    const std::string real =
        std::string(MINDIST_DATA_DIR) + "/codes/mackay/" + mackay_name;
    if (std::filesystem::exists(real)) {
        std::printf("  [%s: using the genuine database file]\n", mackay_name);
        return real;
    }
    std::printf("  [%s: database file absent, using the verified surrogate]\n", mackay_name);
    return std::string(MINDIST_DATA_DIR) + "/codes/" + surrogate_rel;
}

SearchConfig table_config(double sigma, std::size_t iters, std::size_t trials,
                          std::uint64_t seed) {
    SearchConfig cfg;
    cfg.order = 2;
    cfg.trials = trials;
    cfg.channel = {sigma, seed};
    cfg.bp = {iters, 50.0, true};
    cfg.alpha = 1.0;
    return cfg;
}

} // namespace

TEST_CASE("criterion 1: benchmark 96x48 code reaches weight 6 across seeds") {
    const ParityCheckMatrix h =
        load_alist_file(pick_code("96.33.964.alist", "codes/c0_96x48.alist"));
    std::size_t seeds_at_6 = 0;
    std::set<BitVector, BitVectorLexLess> distinct;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const SearchReport report = run_search(h, table_config(0.70, 5, 100, seed));
        if (report.candidates.best_weight() == 6) {
            ++seeds_at_6;
            for (const auto& [codeword, trial] : report.candidates.entries()) {
                CHECK(is_codeword(h.mat, codeword));
                CHECK(codeword.weight() == 6);
                distinct.insert(codeword);
            }
        }
    }
    std::printf("  [seeds reporting 6: %zu/10, distinct weight-6 codewords: %zu]\n",
                seeds_at_6, distinct.size());
    CHECK(seeds_at_6 >= 8);
    CHECK(distinct.size() >= 2);
}

TEST_CASE("criterion 2: benchmark 495x62 code reaches weight 4 and accumulates the stratum") {
    const ParityCheckMatrix h =
        load_alist_file(pick_code("495.62.3.2915.alist", "codes/c1_495x62.alist"));
    std::size_t seeds_at_4 = 0;
    std::set<BitVector, BitVectorLexLess> distinct;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const SearchReport report = run_search(h, table_config(0.44, 4, 100, seed));
        if (report.candidates.best_weight() == 4) {
            ++seeds_at_4;
            for (const auto& [codeword, trial] : report.candidates.entries()) {
                CHECK(is_codeword(h.mat, codeword));
                CHECK(codeword.weight() == 4);
                distinct.insert(codeword);
            }
        }
    }
    std::printf("  [seeds reporting 4: %zu/10, distinct weight-4 codewords: %zu]\n",
                seeds_at_4, distinct.size());
    CHECK(seeds_at_4 >= 8);
    CHECK(distinct.size() >= 30);
}

TEST_CASE("criterion 3: 504x252 smoke run stays sound and below weight 26") {
    // The full benchmark rows for the (504,252) and (1008,504) codes need
    // 1000 and 10000 trials; the commands are documented in the README.
    // Desk scale runs 200 trials and checks soundness plus a weight ceiling.
    const ParityCheckMatrix h =
        load_alist_file(pick_code("252.252.3.252.alist", "codes/c2_504x252.alist"));
    const SearchReport report = run_search(h, table_config(0.70, 5, 200, 1));
    std::printf("  [smoke best weight: %zu, multiplicity: %zu]\n",
                report.candidates.best_weight(), report.candidates.size());
    REQUIRE(!report.candidates.empty());
    CHECK(report.candidates.best_weight() <= 26);
    for (const auto& [codeword, trial] : report.candidates.entries())
        CHECK(is_codeword(h.mat, codeword));
}

TEST_CASE("criterion 4: search matches the exhaustive oracle on small codes") {
    struct CodeCase {
        Gf2Matrix h;
        const char* label;
    };
    std::vector<CodeCase> codes;
    codes.push_back({testsupport::hamming74(), "hamming74"});
    codes.push_back({testsupport::repetition31(), "rep31"});
    for (std::uint64_t seed = 0; codes.size() < 22; ++seed) {
        Gf2Matrix h = testsupport::random_regular_ldpc(20, 40, 3, seed);
        if (40 - rank(h) > kDefaultOracleMaxDim)
            continue; // keep the oracle in reach
        codes.push_back({std::move(h), "random 20x40"});
    }

    std::size_t matched = 0, sound = 0;
    for (std::size_t i = 0; i < codes.size(); ++i) {
        const ParityCheckMatrix h = ParityCheckMatrix::from_matrix(codes[i].h);
        const WeightSpectrumSlice truth = exhaustive_min_weight(h.mat);
        REQUIRE(truth.d_min > 0);
        const SearchReport report =
            run_search(h, table_config(0.7, 5, 200, 1000 + i));
        REQUIRE(!report.candidates.empty());
        const std::size_t found = report.candidates.best_weight();
        if (found >= truth.d_min)
            ++sound;
        if (found == truth.d_min)
            ++matched;
    }
    std::printf("  [oracle match: %zu/%zu, soundness: %zu/%zu]\n", matched, codes.size(),
                sound, codes.size());
    CHECK(sound == codes.size());              // 100%: never below the true minimum
    CHECK(matched * 100 >= codes.size() * 95); // >= 95% exact
}

TEST_CASE("criterion 5: pattern count equals the binomial sum exactly") {
    for (std::size_t k = 1; k <= 12; ++k) {
        for (std::size_t p = 0; p <= 2; ++p) {
            // systematic instance with K information columns
            Gf2Matrix h(4, 4 + k);
            for (std::size_t r = 0; r < 4; ++r)
                h.set(r, r, true);
            SplitMix64 rng(k * 31 + p, 41);
            for (std::size_t r = 0; r < 4; ++r)
                for (std::size_t c = 0; c < k; ++c)
                    if (rng.next_u64() & 1)
                        h.set(r, 4 + c, true);
            BitVector s(4);
            for (std::size_t r = 0; r < 4; ++r)
                if (rng.next_u64() & 1)
                    s.set(r, true);

            std::size_t expect = 0;
            for (std::size_t i = 0; i <= std::min(p, k); ++i) {
                std::size_t binom = 1;
                for (std::size_t t = 1; t <= i; ++t)
                    binom = binom * (k - i + t) / t;
                expect += binom;
            }
            CHECK(enumerate_patterns(h, s, p).size() == expect);
        }
    }
}

TEST_CASE("criterion 6: completed patterns satisfy the reduced system exactly") {
    std::size_t verified = 0;
    for (std::uint64_t seed = 0; verified < 10000; ++seed) {
        const std::size_t m = 2 + seed % 6, k = 1 + seed % 9;
        Gf2Matrix h(m, m + k);
        for (std::size_t r = 0; r < m; ++r)
            h.set(r, r, true);
        SplitMix64 rng(seed, 43);
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < k; ++c)
                if (rng.next_u64() & 1)
                    h.set(r, m + c, true);
        BitVector s(m);
        for (std::size_t r = 0; r < m; ++r)
            if (rng.next_u64() & 1)
                s.set(r, true);
        for (const ErrorPattern& p : enumerate_patterns(h, s, 2)) {
            REQUIRE(syndrome(h, p.bits) == s);
            ++verified;
        }
    }
    CHECK(verified >= 10000);
}

TEST_CASE("criterion 7: reliability accumulation matches a direct summation") {
    const ParityCheckMatrix h = ParityCheckMatrix::from_matrix(testsupport::hamming74());
    std::size_t compared = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const ReceivedVector y = transmit_all_zero(7, {0.45 + 0.01 * (seed % 5), seed}, 2);
        const double sigma = 0.45 + 0.01 * (seed % 5);
        const DecodeTrace t = decode(h, initial_llr(y, sigma), {6, 50.0, seed % 2 == 0});
        for (const double alpha : {1.0, 0.5}) {
            const auto fast = accumulate_reliability(t, alpha);
            for (std::size_t i = 0; i < 7; ++i) {
                double direct = 0.0;
                for (std::size_t j = 0; j <= t.max_iterations; ++j)
                    direct += std::pow(alpha, double(t.max_iterations - j)) * t.llr_row(j)[i];
                direct = std::abs(direct);
                ++compared;
                if (direct == 0.0)
                    CHECK(fast[i] == 0.0);
                else
                    CHECK(std::abs(fast[i] - direct) / direct <= 1e-12);
            }
        }
    }
    CHECK(compared == 40 * 2 * 7);
}

TEST_CASE("criterion 8: candidate lists are identical across runs and thread counts") {
    std::vector<Gf2Matrix> codes;
    codes.push_back(testsupport::hamming74());
    codes.push_back(testsupport::repetition31());
    for (std::uint64_t seed = 0; codes.size() < 8; ++seed) {
        Gf2Matrix h = testsupport::random_regular_ldpc(20, 40, 3, seed);
        if (40 - rank(h) > kDefaultOracleMaxDim)
            continue;
        codes.push_back(std::move(h));
    }
    for (std::size_t i = 0; i < codes.size(); ++i) {
        const ParityCheckMatrix h = ParityCheckMatrix::from_matrix(codes[i]);
        const SearchConfig cfg = table_config(0.7, 5, 120, 2000 + i);
        const SearchReport a = run_search(h, cfg, 1);
        const SearchReport b = run_search(h, cfg, 1);
        const SearchReport c = run_search(h, cfg, 8);
        CHECK(a.candidates == b.candidates);
        CHECK(a.candidates == c.candidates);
    }

    // CLI-level double check on one code, stripping only timing fields
    const std::string cli = MINDIST_CLI_PATH;
    const std::string base = cli + " search --alist " + std::string(MINDIST_DATA_DIR) +
                             "/codes/hamming74.alist --sigma 0.6 --trials 60 --seed 5";
    auto capture = [](const std::string& cmd) {
        std::string out;
        std::array<char, 4096> buf{};
        FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
        REQUIRE(pipe != nullptr);
        std::size_t n;
        while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
            out.append(buf.data(), n);
        pclose(pipe);
        return out;
    };
    nlohmann::json a = nlohmann::json::parse(capture(base + " --threads 1"));
    nlohmann::json b = nlohmann::json::parse(capture(base + " --threads 1"));
    nlohmann::json c = nlohmann::json::parse(capture(base + " --threads 8"));
    strip_volatile_fields(a);
    strip_volatile_fields(b);
    strip_volatile_fields(c);
    CHECK(a.dump() == b.dump());
    a.erase("config");
    c.erase("config"); // echoed thread count differs by design
    CHECK(a.dump() == c.dump());
}

TEST_CASE("criterion 9: alist round trip is bit-identical on benchmarks plus 100 random") {
    const std::array<const char*, 4> bundled = {
        "codes/c0_96x48.alist", "codes/c1_495x62.alist", "codes/c2_504x252.alist",
        "codes/c3_1008x504.alist"};
    for (const char* rel : bundled) {
        const std::string primary = std::string(MINDIST_DATA_DIR) + "/" + rel;
        const ParityCheckMatrix h = load_alist_file(primary);
        const ParityCheckMatrix back = parse_alist(write_alist(h));
        CHECK(back.mat == h.mat);
    }
    // genuine database files too, when provided
    const std::array<const char*, 4> mackay = {"96.33.964.alist", "495.62.3.2915.alist",
                                               "252.252.3.252.alist", "504.504.3.504.alist"};
    for (const char* name : mackay) {
        const std::string path = std::string(MINDIST_DATA_DIR) + "/codes/mackay/" + name;
        if (!std::filesystem::exists(path))
            continue;
        const ParityCheckMatrix h = load_alist_file(path);
        CHECK(parse_alist(write_alist(h)).mat == h.mat);
    }
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Gf2Matrix m =
            testsupport::random_matrix(1 + seed % 60, 1 + (seed * 17) % 120, seed, 0.15);
        const ParityCheckMatrix h = ParityCheckMatrix::from_matrix(m);
        CHECK(parse_alist(write_alist(h)).mat == m);
    }
}

int main(int argc, char** argv) {
    doctest::Context context(argc, argv);
    context.setOption("reporters", "criteria");
    context.setOption("no-intro", true);
    return context.run();
}
