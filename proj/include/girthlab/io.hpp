#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "girthlab/matrix.hpp"

namespace girthlab {

/// Error with the 1-based line number where parsing failed.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

namespace detail {

inline std::vector<long long> parse_int_line(const std::string& text,
                                             std::size_t lineno) {
    std::istringstream ss(text);
    std::vector<long long> out;
    long long v;
    while (ss >> v) out.push_back(v);
    std::string rest;
    if (ss.clear(), ss >> rest)
        throw ParseError(lineno, "unexpected token '" + rest + "'");
    return out;
}

inline std::string next_line(std::istream& in, std::size_t& lineno) {
    std::string line;
    if (!std::getline(in, line))
        throw ParseError(lineno + 1, "unexpected end of file");
    ++lineno;
    return line;
}

}  // namespace detail

/// alist layout (MacKay sparse variant, 1-indexed, no zero padding):
///   n m
///   max_col_deg max_row_deg
///   n column degrees
///   m row degrees
///   n lines of 1-indexed row positions per column
///   m lines of 1-indexed column positions per row
inline void write_alist(std::ostream& out, const ParityCheckMatrix& h) {
    std::size_t max_col = 0, max_row = 0;
    for (const auto& c : h.columns()) max_col = std::max(max_col, c.size());
    for (const auto& r : h.rows()) max_row = std::max(max_row, r.size());

    auto write_ints = [&out](const auto& values) {
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) out << ' ';
            out << values[i];
        }
        out << '\n';
    };

    out << h.n() << ' ' << h.m() << '\n';
    out << max_col << ' ' << max_row << '\n';
    std::vector<std::size_t> degs;
    for (const auto& c : h.columns()) degs.push_back(c.size());
    write_ints(degs);
    degs.clear();
    for (const auto& r : h.rows()) degs.push_back(r.size());
    write_ints(degs);
    for (const auto& c : h.columns()) {
        std::vector<std::uint32_t> shifted;
        for (std::uint32_t r : c) shifted.push_back(r + 1);
        write_ints(shifted);
    }
    for (const auto& r : h.rows()) {
        std::vector<std::uint32_t> shifted;
        for (std::uint32_t c : r) shifted.push_back(c + 1);
        write_ints(shifted);
    }
}

inline ParityCheckMatrix read_alist(std::istream& in) {
    std::size_t lineno = 0;

    auto header = detail::parse_int_line(detail::next_line(in, lineno), lineno);
    if (header.size() != 2)
        throw ParseError(lineno, "expected 'n m'");
    long long n = header[0], m = header[1];
    if (n < 1 || m < 1) throw ParseError(lineno, "dimensions must be positive");

    auto maxdegs = detail::parse_int_line(detail::next_line(in, lineno), lineno);
    if (maxdegs.size() != 2)
        throw ParseError(lineno, "expected 'max_col_deg max_row_deg'");

    auto col_degs = detail::parse_int_line(detail::next_line(in, lineno), lineno);
    if (col_degs.size() != static_cast<std::size_t>(n))
        throw ParseError(lineno, "expected " + std::to_string(n) + " column degrees");
    auto row_degs = detail::parse_int_line(detail::next_line(in, lineno), lineno);
    if (row_degs.size() != static_cast<std::size_t>(m))
        throw ParseError(lineno, "expected " + std::to_string(m) + " row degrees");

    std::vector<std::vector<std::uint32_t>> cols(n);
    for (long long j = 0; j < n; ++j) {
        auto entries = detail::parse_int_line(detail::next_line(in, lineno), lineno);
        if (entries.size() != static_cast<std::size_t>(col_degs[j]))
            throw ParseError(lineno, "column " + std::to_string(j + 1) + " has " +
                                         std::to_string(entries.size()) +
                                         " entries, degree says " +
                                         std::to_string(col_degs[j]));
        for (long long v : entries) {
            if (v < 1 || v > m)
                throw ParseError(lineno, "row index " + std::to_string(v) +
                                             " out of range");
            cols[j].push_back(static_cast<std::uint32_t>(v - 1));
        }
    }

    ParityCheckMatrix h = [&] {
        try {
            return ParityCheckMatrix::from_columns(m, std::move(cols));
        } catch (const std::exception& e) {
            throw ParseError(lineno, e.what());
        }
    }();

    // the trailing row lists are redundant; verify they match the transpose
    for (long long r = 0; r < m; ++r) {
        auto entries = detail::parse_int_line(detail::next_line(in, lineno), lineno);
        const auto& expect = h.row(r);
        if (entries.size() != static_cast<std::size_t>(row_degs[r]) ||
            entries.size() != expect.size())
            throw ParseError(lineno, "row " + std::to_string(r + 1) +
                                         " entry count mismatch");
        for (std::size_t i = 0; i < entries.size(); ++i)
            if (entries[i] != static_cast<long long>(expect[i]) + 1)
                throw ParseError(lineno, "row " + std::to_string(r + 1) +
                                             " does not match column lists");
    }
    return h;
}

/// m lines of n characters from {0,1}.
inline void write_dense(std::ostream& out, const ParityCheckMatrix& h) {
    for (std::size_t r = 0; r < h.m(); ++r) {
        std::string line(h.n(), '0');
        for (std::uint32_t c : h.row(r)) line[c] = '1';
        out << line << '\n';
    }
}

/// Edge list with header "row,col", 0-indexed, row-major order.
inline void write_csv_edges(std::ostream& out, const ParityCheckMatrix& h) {
    out << "row,col\n";
    for (std::size_t r = 0; r < h.m(); ++r)
        for (std::uint32_t c : h.row(r)) out << r << ',' << c << '\n';
}

}  // namespace girthlab
