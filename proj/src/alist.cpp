#include "mindist/alist.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>

namespace mindist {

namespace {

// Tokens carry their 1-based line/column so parse errors can point at the
// exact file position.
struct Token {
    long long value = 0;
    std::size_t line = 0, col = 0;
};

class TokenStream {
public:
    explicit TokenStream(std::istream& in) {
        std::size_t line = 1, col = 1;
        std::string tok;
        std::size_t tok_line = 0, tok_col = 0;
        int c;
        auto flush = [&]() {
            if (tok.empty()) return;
            std::size_t used = 0;
            long long v = 0;
            try {
                v = std::stoll(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size())
                throw AlistParseError("alist parse error at line " + std::to_string(tok_line) +
                                      ", column " + std::to_string(tok_col) +
                                      ": expected integer, got '" + tok + "'");
            tokens_.push_back({v, tok_line, tok_col});
            tok.clear();
        };
        while ((c = in.get()) != EOF) {
            if (std::isspace(c)) {
                flush();
                if (c == '\n') {
                    ++line;
                    col = 1;
                } else {
                    ++col;
                }
                continue;
            }
            if (tok.empty()) {
                tok_line = line;
                tok_col = col;
            }
            tok.push_back(static_cast<char>(c));
            ++col;
        }
        flush();
    }

    bool done() const { return pos_ == tokens_.size(); }
    const Token* peek() const { return done() ? nullptr : &tokens_[pos_]; }

    Token require(const char* what) {
        if (done())
            throw AlistParseError(std::string("alist parse error: stream ended while reading ") +
                                  what + " (token " + std::to_string(pos_ + 1) + ")");
        return tokens_[pos_++];
    }

    std::size_t require_count(const char* what, long long min_value, long long max_value) {
        const Token t = require(what);
        if (t.value < min_value || t.value > max_value)
            throw AlistParseError("alist parse error at line " + std::to_string(t.line) +
                                  ", column " + std::to_string(t.col) + ": " + what + " " +
                                  std::to_string(t.value) + " out of range [" +
                                  std::to_string(min_value) + ", " + std::to_string(max_value) +
                                  "]");
        return static_cast<std::size_t>(t.value);
    }

    void skip_zero_padding(std::size_t max_zeros) {
        while (max_zeros-- && !done() && tokens_[pos_].value == 0)
            ++pos_;
    }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

std::vector<std::vector<std::size_t>> read_adjacency(TokenStream& ts, std::size_t count,
                                                     const std::vector<std::size_t>& degrees,
                                                     std::size_t max_degree,
                                                     std::size_t index_limit, const char* what) {
    std::vector<std::vector<std::size_t>> adj(count);
    for (std::size_t i = 0; i < count; ++i) {
        adj[i].reserve(degrees[i]);
        for (std::size_t k = 0; k < degrees[i]; ++k) {
            const std::size_t idx = ts.require_count(what, 1, static_cast<long long>(index_limit));
            adj[i].push_back(idx);
        }
        // zero padding up to the declared maximum is optional in the wild
        ts.skip_zero_padding(max_degree - degrees[i]);
    }
    return adj;
}

} // namespace

ParityCheckMatrix parse_alist(std::istream& text) {
    TokenStream ts(text);

    AlistDocument doc;
    doc.n_cols = ts.require_count("column count", 1, 1ll << 30);
    doc.n_rows = ts.require_count("row count", 1, 1ll << 30);
    doc.max_col_deg = ts.require_count("max column degree", 0, static_cast<long long>(doc.n_rows));
    doc.max_row_deg = ts.require_count("max row degree", 0, static_cast<long long>(doc.n_cols));

    doc.col_degrees.resize(doc.n_cols);
    for (auto& d : doc.col_degrees)
        d = ts.require_count("column degree", 0, static_cast<long long>(doc.max_col_deg));
    doc.row_degrees.resize(doc.n_rows);
    for (auto& d : doc.row_degrees)
        d = ts.require_count("row degree", 0, static_cast<long long>(doc.max_row_deg));

    doc.col_adjacency = read_adjacency(ts, doc.n_cols, doc.col_degrees, doc.max_col_deg,
                                       doc.n_rows, "row index in column list");
    doc.row_adjacency = read_adjacency(ts, doc.n_rows, doc.row_degrees, doc.max_row_deg,
                                       doc.n_cols, "column index in row list");

    if (const Token* extra = ts.peek())
        throw AlistParseError("alist parse error at line " + std::to_string(extra->line) +
                              ", column " + std::to_string(extra->col) +
                              ": extra token after matrix data");

    // cross-validate the two views
    Gf2Matrix from_cols(doc.n_rows, doc.n_cols);
    for (std::size_t c = 0; c < doc.n_cols; ++c)
        for (std::size_t r1 : doc.col_adjacency[c])
            from_cols.set(r1 - 1, c, true);
    Gf2Matrix from_rows(doc.n_rows, doc.n_cols);
    for (std::size_t r = 0; r < doc.n_rows; ++r)
        for (std::size_t c1 : doc.row_adjacency[r])
            from_rows.set(r, c1 - 1, true);
    if (!(from_cols == from_rows)) {
        for (std::size_t r = 0; r < doc.n_rows; ++r)
            for (std::size_t c = 0; c < doc.n_cols; ++c)
                if (from_cols.get(r, c) != from_rows.get(r, c))
                    throw AlistIntegrityError(
                        "alist integrity error: row " + std::to_string(r + 1) + ", column " +
                        std::to_string(c + 1) + " is " +
                        (from_cols.get(r, c) ? "present" : "absent") +
                        " in the column view but " +
                        (from_rows.get(r, c) ? "present" : "absent") + " in the row view");
    }

    return ParityCheckMatrix::from_matrix(std::move(from_cols));
}

ParityCheckMatrix parse_alist(const std::string& text) {
    std::istringstream in(text);
    return parse_alist(in);
}

ParityCheckMatrix load_alist_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::system_error(errno, std::generic_category(), "cannot open " + path);
    return parse_alist(in);
}

AlistDocument document_from_matrix(const ParityCheckMatrix& h) {
    AlistDocument doc;
    doc.n_cols = h.cols();
    doc.n_rows = h.rows();
    doc.col_degrees.resize(doc.n_cols);
    doc.row_degrees.resize(doc.n_rows);
    doc.col_adjacency.resize(doc.n_cols);
    doc.row_adjacency.resize(doc.n_rows);
    for (std::size_t c = 0; c < doc.n_cols; ++c) {
        for (std::uint32_t r : h.col_support[c])
            doc.col_adjacency[c].push_back(r + 1);
        doc.col_degrees[c] = doc.col_adjacency[c].size();
        doc.max_col_deg = std::max(doc.max_col_deg, doc.col_degrees[c]);
    }
    for (std::size_t r = 0; r < doc.n_rows; ++r) {
        for (std::uint32_t c : h.row_support[r])
            doc.row_adjacency[r].push_back(c + 1);
        doc.row_degrees[r] = doc.row_adjacency[r].size();
        doc.max_row_deg = std::max(doc.max_row_deg, doc.row_degrees[r]);
    }
    return doc;
}

void write_alist(const ParityCheckMatrix& h, std::ostream& out) {
    const AlistDocument doc = document_from_matrix(h);
    out << doc.n_cols << ' ' << doc.n_rows << '\n';
    out << doc.max_col_deg << ' ' << doc.max_row_deg << '\n';
    auto write_list = [&out](const std::vector<std::size_t>& xs) {
        for (std::size_t i = 0; i < xs.size(); ++i)
            out << xs[i] << (i + 1 == xs.size() ? '\n' : ' ');
        if (xs.empty())
            out << '\n';
    };
    write_list(doc.col_degrees);
    write_list(doc.row_degrees);
    auto write_padded = [&](const std::vector<std::size_t>& xs, std::size_t width) {
        std::vector<std::size_t> padded = xs;
        padded.resize(width, 0);
        write_list(padded);
    };
    for (const auto& adj : doc.col_adjacency)
        write_padded(adj, doc.max_col_deg);
    for (const auto& adj : doc.row_adjacency)
        write_padded(adj, doc.max_row_deg);
}

std::string write_alist(const ParityCheckMatrix& h) {
    std::ostringstream out;
    write_alist(h, out);
    return out.str();
}

} // namespace mindist
