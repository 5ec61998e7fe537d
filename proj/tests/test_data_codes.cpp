// Integrity checks for the bundled test codes: sizes, degree profiles,
// rank, and the exact low-weight census that pins down their minimum
// distance. The census runs from scratch here, so a tampered or corrupted
// data file fails loudly.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "mindist/alist.hpp"
#include "mindist/oracle.hpp"

using namespace mindist;

namespace {

// Exact multiplicities pinned from the generation-time census; re-derived
// below on every run.
constexpr std::size_t kC0Weight6Count = 2;
constexpr std::size_t kC1Weight4Count = 60;

ParityCheckMatrix load(const std::string& rel) {
    return load_alist_file(std::string(MINDIST_DATA_DIR) + "/" + rel);
}

void check_column_weight(const ParityCheckMatrix& h, std::size_t weight) {
    for (const auto& support : h.col_support)
        CHECK(support.size() == weight);
}

} // namespace

TEST_CASE("hamming74 and rep31 files") {
    const ParityCheckMatrix hamming = load("codes/hamming74.alist");
    CHECK(hamming.rows() == 3);
    CHECK(hamming.cols() == 7);
    CHECK(exhaustive_min_weight(hamming.mat).d_min == 3);

    const ParityCheckMatrix rep = load("codes/rep31.alist");
    CHECK(rep.rows() == 2);
    CHECK(rep.cols() == 3);
    CHECK(exhaustive_min_weight(rep.mat).d_min == 3);
}

TEST_CASE("c0 surrogate: 48x96, column weight 3, proven minimum weight 6") {
    const ParityCheckMatrix h = load("codes/c0_96x48.alist");
    CHECK(h.rows() == 48);
    CHECK(h.cols() == 96);
    check_column_weight(h, 3);
    CHECK(rank(h.mat) == 48);

    // every codeword has even weight (all columns odd), so a zero census
    // below 6 plus weight-6 witnesses proves d_min = 6 exactly
    const auto census = bounded_min_weight(h.mat, 6);
    REQUIRE(census.has_value());
    CHECK(census->weight == 6);
    CHECK(census->multiplicity == kC0Weight6Count);
}

TEST_CASE("c1 surrogate: 62x495, column weight 3, proven minimum weight 4") {
    const ParityCheckMatrix h = load("codes/c1_495x62.alist");
    CHECK(h.rows() == 62);
    CHECK(h.cols() == 495);
    check_column_weight(h, 3);
    CHECK(rank(h.mat) == 62);

    const auto census = bounded_min_weight(h.mat, 4);
    REQUIRE(census.has_value());
    CHECK(census->weight == 4);
    CHECK(census->multiplicity == kC1Weight4Count);
}

TEST_CASE("c2 surrogate: 252x504, column weight 3, no codeword lighter than 6") {
    const ParityCheckMatrix h = load("codes/c2_504x252.alist");
    CHECK(h.rows() == 252);
    CHECK(h.cols() == 504);
    check_column_weight(h, 3);
    CHECK(rank(h.mat) == 252);
    CHECK(!bounded_min_weight(h.mat, 4).has_value());
}

TEST_CASE("c3 surrogate: 504x1008, column weight 3, no codeword lighter than 6") {
    const ParityCheckMatrix h = load("codes/c3_1008x504.alist");
    CHECK(h.rows() == 504);
    CHECK(h.cols() == 1008);
    check_column_weight(h, 3);
    CHECK(rank(h.mat) == 504);
    CHECK(!bounded_min_weight(h.mat, 4).has_value());
}
