#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "mindist/alist.hpp"
#include "mindist/oracle.hpp"
#include "support/fixtures.hpp"

using namespace mindist;

namespace {

// Hamming(7,4) written by hand in alist form, unpadded (degrees are uniform
// enough that padding never shows up here anyway).
const char* kHammingAlist =
    "7 3\n"
    "3 4\n"
    "1 1 2 1 2 2 3\n"
    "4 4 4\n"
    "1\n"
    "2\n"
    "1 2\n"
    "3\n"
    "1 3\n"
    "2 3\n"
    "1 2 3\n"
    "1 3 5 7\n"
    "2 3 6 7\n"
    "4 5 6 7\n";

} // namespace

TEST_CASE("hand-written hamming alist parses to the right matrix") {
    const ParityCheckMatrix h = parse_alist(std::string(kHammingAlist));
    CHECK(h.rows() == 3);
    CHECK(h.cols() == 7);
    CHECK(h.mat.count_ones() == 12);
    CHECK(rank(h.mat) == 3);
    CHECK(h.mat == testsupport::hamming74());
}

TEST_CASE("integrity failure names the first mismatched entry") {
    // column view: (1,1) (2,2) (2,3); row view claims (2,1) (2,2) instead
    const char* bad =
        "3 2\n"
        "1 2\n"
        "1 1 1\n"
        "1 2\n"
        "1\n"
        "2\n"
        "2\n"
        "1\n"
        "2 1\n";
    CHECK_THROWS_AS(parse_alist(std::string(bad)), AlistIntegrityError);
    try {
        parse_alist(std::string(bad));
    } catch (const AlistIntegrityError& e) {
        CHECK(std::string(e.what()).find("row 2") != std::string::npos);
        CHECK(std::string(e.what()).find("column 1") != std::string::npos);
    }
}

TEST_CASE("truncated stream reports a position") {
    const char* truncated = "7 3\n3 4\n1 1 2 1\n";
    CHECK_THROWS_AS(parse_alist(std::string(truncated)), AlistParseError);
    try {
        parse_alist(std::string(truncated));
    } catch (const AlistParseError& e) {
        CHECK(std::string(e.what()).find("stream ended") != std::string::npos);
    }
}

TEST_CASE("malformed and out-of-range tokens are rejected with positions") {
    CHECK_THROWS_AS(parse_alist(std::string("2 x\n")), AlistParseError);
    try {
        parse_alist(std::string("2 2\n1 1\n1 1\n1 1\n3\n1\n1\n2\n"));
        FAIL("expected parse error");
    } catch (const AlistParseError& e) {
        CHECK(std::string(e.what()).find("out of range") != std::string::npos);
    }
    // extra non-whitespace trailing tokens are rejected
    std::string extra = kHammingAlist;
    extra += "42\n";
    CHECK_THROWS_AS(parse_alist(extra), AlistParseError);
    // trailing whitespace and blank lines are fine
    std::string padded = kHammingAlist;
    padded += "\n   \n\t\n";
    CHECK_NOTHROW(parse_alist(padded));
}

TEST_CASE("zero-padded and unpadded adjacency both parse") {
    // same 2x3 matrix, columns {1},{1,2},{} -> one degree-0 column
    const char* padded =
        "3 2\n"
        "2 2\n"
        "1 2 0\n"
        "2 1\n"
        "1 0\n"
        "1 2\n"
        "0 0\n"
        "1 2\n"
        "2 0\n";
    const char* unpadded =
        "3 2\n"
        "2 2\n"
        "1 2 0\n"
        "2 1\n"
        "1\n"
        "1 2\n"
        "\n"
        "1 2\n"
        "2\n";
    const ParityCheckMatrix a = parse_alist(std::string(padded));
    const ParityCheckMatrix b = parse_alist(std::string(unpadded));
    CHECK(a.mat == b.mat);
    CHECK(a.cols() == 3);
    CHECK(a.mat.count_ones() == 3);

    // degree-0 column round-trips through the canonical writer
    const ParityCheckMatrix again = parse_alist(write_alist(a));
    CHECK(again.mat == a.mat);
}

TEST_CASE("round trip is bit-identical on random sparse matrices up to 64x128") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const std::size_t rows = 1 + seed % 64;
        const std::size_t cols = 1 + (seed * 13) % 128;
        const Gf2Matrix m = testsupport::random_matrix(rows, cols, seed, 0.1);
        const ParityCheckMatrix h = ParityCheckMatrix::from_matrix(m);
        const ParityCheckMatrix back = parse_alist(write_alist(h));
        CHECK(back.mat == m);
        // writer output is canonical: a second pass reproduces the bytes
        CHECK(write_alist(back) == write_alist(h));
    }
}

TEST_CASE("missing file raises a system error") {
    CHECK_THROWS_AS(load_alist_file("/nonexistent/missing.alist"), std::system_error);
}
