#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "girthlab/gf2.hpp"

namespace girthlab {

/// Sparse binary vector: length plus sorted list of positions holding a 1.
struct BinaryVector {
    std::size_t length = 0;
    std::vector<std::uint32_t> support;

    BinaryVector() = default;
    BinaryVector(std::size_t len, std::vector<std::uint32_t> sup)
        : length(len), support(std::move(sup)) {
        for (std::size_t i = 0; i < support.size(); ++i) {
            if (support[i] >= length)
                throw std::out_of_range("index out of bounds");
            if (i > 0 && support[i] <= support[i - 1])
                throw std::invalid_argument("support not strictly sorted");
        }
    }

    std::size_t weight() const { return support.size(); }
    bool is_zero() const { return support.empty(); }

    bool operator==(const BinaryVector&) const = default;
};

/// Sparse binary m x n parity-check matrix. Rows are check nodes, columns
/// variable nodes. Column adjacency is authoritative; row adjacency is
/// derived once at construction. Immutable afterwards, so instances can be
/// shared freely across threads.
class ParityCheckMatrix {
public:
    static ParityCheckMatrix from_columns(std::size_t m,
                                          std::vector<std::vector<std::uint32_t>> cols) {
        if (m < 1 || cols.empty())
            throw std::invalid_argument("matrix dimensions must be positive");
        for (auto& col : cols) {
            std::sort(col.begin(), col.end());
            for (std::size_t i = 0; i < col.size(); ++i) {
                if (col[i] >= m) throw std::out_of_range("index out of bounds");
                if (i > 0 && col[i] == col[i - 1])
                    throw std::invalid_argument("duplicate edge");
            }
        }
        return ParityCheckMatrix(m, std::move(cols));
    }

    static ParityCheckMatrix from_edges(
        std::size_t m, std::size_t n,
        const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
        if (m < 1 || n < 1)
            throw std::invalid_argument("matrix dimensions must be positive");
        std::vector<std::vector<std::uint32_t>> cols(n);
        for (auto [r, c] : edges) {
            if (r >= m || c >= n) throw std::out_of_range("index out of bounds");
            cols[c].push_back(r);
        }
        return from_columns(m, std::move(cols));
    }

    std::size_t m() const { return m_; }
    std::size_t n() const { return cols_.size(); }

    const std::vector<std::uint32_t>& column(std::size_t j) const {
        return cols_[j];
    }
    const std::vector<std::uint32_t>& row(std::size_t r) const {
        return rows_[r];
    }
    const std::vector<std::vector<std::uint32_t>>& columns() const {
        return cols_;
    }
    const std::vector<std::vector<std::uint32_t>>& rows() const {
        return rows_;
    }

    std::size_t edge_count() const { return edges_; }

    /// Matrix with the roles of rows and columns exchanged.
    ParityCheckMatrix transposed() const {
        return ParityCheckMatrix(n(), rows_);
    }

    /// Rows packed as n-bit words, the layout used by GF(2) elimination.
    std::vector<gf2::Bitset> packed_rows() const {
        std::vector<gf2::Bitset> out(m_, gf2::Bitset(n()));
        for (std::size_t r = 0; r < m_; ++r)
            for (std::uint32_t c : rows_[r]) out[r].set(c);
        return out;
    }

    /// Columns packed as m-bit words, used for syndrome accumulation in the
    /// minimum-distance search.
    std::vector<gf2::Bitset> packed_columns() const {
        std::vector<gf2::Bitset> out(n(), gf2::Bitset(m_));
        for (std::size_t j = 0; j < n(); ++j)
            for (std::uint32_t r : cols_[j]) out[j].set(r);
        return out;
    }

    bool operator==(const ParityCheckMatrix& other) const {
        return m_ == other.m_ && cols_ == other.cols_;
    }

private:
    ParityCheckMatrix(std::size_t m, std::vector<std::vector<std::uint32_t>> cols)
        : m_(m), cols_(std::move(cols)), rows_(m) {
        for (std::size_t j = 0; j < cols_.size(); ++j) {
            for (std::uint32_t r : cols_[j]) rows_[r].push_back(static_cast<std::uint32_t>(j));
            edges_ += cols_[j].size();
        }
        // columns were visited in ascending order, so row lists are sorted
    }

    std::size_t m_ = 0;
    std::vector<std::vector<std::uint32_t>> cols_;
    std::vector<std::vector<std::uint32_t>> rows_;
    std::size_t edges_ = 0;
};

/// Syndrome H*x over GF(2): entry r is the parity of the overlap between
/// x's support and row r.
inline BinaryVector syndrome(const ParityCheckMatrix& h, const BinaryVector& x) {
    if (x.length != h.n())
        throw std::invalid_argument("vector length does not match column count");
    std::vector<std::uint8_t> parity(h.m(), 0);
    for (std::uint32_t j : x.support)
        for (std::uint32_t r : h.column(j)) parity[r] ^= 1;
    std::vector<std::uint32_t> sup;
    for (std::size_t r = 0; r < h.m(); ++r)
        if (parity[r]) sup.push_back(static_cast<std::uint32_t>(r));
    return BinaryVector(h.m(), std::move(sup));
}

inline std::size_t gf2_rank(const ParityCheckMatrix& h) {
    return gf2::rank(h.packed_rows(), h.n());
}

/// Basis of the GF(2) nullspace {x : Hx = 0}; has n - rank(H) vectors.
inline std::vector<BinaryVector> gf2_nullspace_basis(const ParityCheckMatrix& h) {
    auto basis = gf2::nullspace_basis(h.packed_rows(), h.n());
    std::vector<BinaryVector> out;
    out.reserve(basis.size());
    for (const auto& b : basis) out.emplace_back(h.n(), b.support());
    return out;
}

}  // namespace girthlab
