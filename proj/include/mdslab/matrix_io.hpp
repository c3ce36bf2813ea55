#pragma once

// The matrix file format:
//
//   gf m=<int> poly=0x<hex> n=<int>
//   <n rows of n whitespace-separated lowercase hex elements>
//
// Lines starting with '#' (after optional leading spaces) and blank lines
// are ignored. A file may carry several blocks back to back; parse and
// serialize round-trip bit-exactly.

#include <cctype>
#include <cstdio>
#include <istream>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "mdslab/matrix.hpp"

namespace mdslab {

class MatrixFileParseError : public std::runtime_error {
public:
    MatrixFileParseError(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

struct ParsedMatrix {
    std::shared_ptr<const FieldContext> ctx;
    SquareMatrix matrix;
};

inline std::string element_to_hex(FieldElement e) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "%x", static_cast<unsigned>(e));
    return buf;
}

inline void write_matrix_file(std::ostream& out, const SquareMatrix& m) {
    const auto& f = m.field();
    out << "gf m=" << f.degree() << " poly=" << FieldContext::poly_string(f.poly())
        << " n=" << m.order() << "\n";
    for (std::size_t i = 0; i < m.order(); ++i) {
        for (std::size_t j = 0; j < m.order(); ++j) {
            if (j) out << ' ';
            out << element_to_hex(m(i, j));
        }
        out << "\n";
    }
}

namespace detail {

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size()) break;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        tokens.push_back(Token{line.substr(start, i - start), start + 1});
    }
    return tokens;
}

inline bool is_ignorable(const std::string& line) {
    for (char ch : line) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        return ch == '#';
    }
    return true;  // blank
}

// Reads the next content line; false at end of stream.
inline bool next_content_line(std::istream& in, std::string& line, std::size_t& line_no) {
    while (std::getline(in, line)) {
        ++line_no;
        if (!is_ignorable(line)) return true;
    }
    return false;
}

inline unsigned parse_uint(const Token& tok, const std::string& prefix, std::size_t line_no,
                           unsigned base) {
    if (tok.text.rfind(prefix, 0) != 0) {
        throw MatrixFileParseError("expected '" + prefix + "...', got '" + tok.text + "'",
                                   line_no, tok.column);
    }
    const std::string value = tok.text.substr(prefix.size());
    if (value.empty()) {
        throw MatrixFileParseError("missing value after '" + prefix + "'", line_no, tok.column);
    }
    unsigned out = 0;
    for (char ch : value) {
        unsigned digit;
        if (ch >= '0' && ch <= '9') digit = static_cast<unsigned>(ch - '0');
        else if (base == 16 && ch >= 'a' && ch <= 'f') digit = static_cast<unsigned>(ch - 'a') + 10;
        else {
            throw MatrixFileParseError("bad digit '" + std::string(1, ch) + "' in '" + tok.text +
                                           "'",
                                       line_no, tok.column);
        }
        out = out * base + digit;
        if (out > 0xFFFFFF) {
            throw MatrixFileParseError("value out of range in '" + tok.text + "'", line_no,
                                       tok.column);
        }
    }
    return out;
}

}  // namespace detail

// Parses one matrix block starting at the next content line. line_no is
// advanced across consumed lines.
inline ParsedMatrix read_matrix_block(std::istream& in, std::size_t& line_no) {
    std::string line;
    if (!detail::next_content_line(in, line, line_no)) {
        throw MatrixFileParseError("expected matrix header, found end of input", line_no + 1, 1);
    }
    const auto tokens = detail::tokenize(line);
    if (tokens.size() != 4 || tokens[0].text != "gf") {
        throw MatrixFileParseError("expected header 'gf m=<int> poly=0x<hex> n=<int>'", line_no,
                                   tokens.empty() ? 1 : tokens[0].column);
    }
    const unsigned m = detail::parse_uint(tokens[1], "m=", line_no, 10);
    const unsigned poly = detail::parse_uint(tokens[2], "poly=0x", line_no, 16);
    const unsigned n = detail::parse_uint(tokens[3], "n=", line_no, 10);
    if (n < 1 || n > 64) {
        throw MatrixFileParseError("matrix order must be in [1, 64]", line_no, tokens[3].column);
    }
    std::shared_ptr<const FieldContext> ctx;
    try {
        ctx = std::make_shared<const FieldContext>(m, poly);
    } catch (const std::invalid_argument& ex) {
        throw MatrixFileParseError(ex.what(), line_no, tokens[2].column);
    }

    std::vector<FieldElement> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (unsigned row = 0; row < n; ++row) {
        if (!detail::next_content_line(in, line, line_no)) {
            throw MatrixFileParseError("expected " + std::to_string(n) + " matrix rows, found " +
                                           std::to_string(row),
                                       line_no + 1, 1);
        }
        const auto row_tokens = detail::tokenize(line);
        if (row_tokens.size() != n) {
            throw MatrixFileParseError("expected " + std::to_string(n) + " elements in row, got " +
                                           std::to_string(row_tokens.size()),
                                       line_no, row_tokens.empty() ? 1 : row_tokens[0].column);
        }
        for (const auto& tok : row_tokens) {
            const unsigned value = detail::parse_uint(tok, "", line_no, 16);
            if (value >= ctx->order()) {
                throw MatrixFileParseError("element " + tok.text + " out of range for GF(2^" +
                                               std::to_string(m) + ")",
                                           line_no, tok.column);
            }
            entries.push_back(static_cast<FieldElement>(value));
        }
    }
    SquareMatrix matrix(*ctx, n, std::move(entries));
    return ParsedMatrix{std::move(ctx), std::move(matrix)};
}

// Parses a file holding exactly one matrix.
inline ParsedMatrix read_matrix_file(std::istream& in) {
    std::size_t line_no = 0;
    ParsedMatrix parsed = read_matrix_block(in, line_no);
    std::string line;
    if (detail::next_content_line(in, line, line_no)) {
        throw MatrixFileParseError("unexpected content after matrix block", line_no, 1);
    }
    return parsed;
}

inline std::vector<ParsedMatrix> read_all_matrix_blocks(std::istream& in) {
    std::vector<ParsedMatrix> blocks;
    std::size_t line_no = 0;
    for (;;) {
        // Peek for another content line before committing to a block.
        std::streampos pos = in.tellg();
        std::string line;
        std::size_t probe_line = line_no;
        if (!detail::next_content_line(in, line, probe_line)) break;
        in.seekg(pos);
        blocks.push_back(read_matrix_block(in, line_no));
    }
    return blocks;
}

}  // namespace mdslab
