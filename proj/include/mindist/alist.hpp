#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "mindist/gf2.hpp"

namespace mindist {

/// Raw fields of an alist file. Adjacency indices are 1-based as on disk.
struct AlistDocument {
    std::size_t n_cols = 0, n_rows = 0;
    std::size_t max_col_deg = 0, max_row_deg = 0;
    std::vector<std::size_t> col_degrees, row_degrees;
    std::vector<std::vector<std::size_t>> col_adjacency, row_adjacency;
};

/// Malformed stream: bad token, truncation, out-of-range index. what()
/// carries the 1-based line/column of the offending token.
class AlistParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Structurally valid file whose column and row adjacency disagree.
class AlistIntegrityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

ParityCheckMatrix parse_alist(std::istream& text);
ParityCheckMatrix parse_alist(const std::string& text);
ParityCheckMatrix load_alist_file(const std::string& path); // throws std::system_error if unreadable

AlistDocument document_from_matrix(const ParityCheckMatrix& h);

/// Canonical form: zero-padded adjacency rows, newline-separated lists,
/// ASCII decimal, 1-based indices.
std::string write_alist(const ParityCheckMatrix& h);
void write_alist(const ParityCheckMatrix& h, std::ostream& out);

} // namespace mindist
