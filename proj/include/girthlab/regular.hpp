#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "girthlab/matrix.hpp"

namespace girthlab {

/// Coordinate label of a variable node in the regular construction:
/// the copy index chosen at each replication stage, the branch of the base
/// tree, and the position within the branch (0 marks a first-layer node).
struct CharacteristicArray {
    std::vector<int> copies;  // one entry per stage, each in [1, wr]
    int ell = 0;              // branch, in [1, wr]
    int j = 0;                // 0 first layer, [1, (wc-1)(wr-1)] last layer

    bool operator==(const CharacteristicArray&) const = default;
    bool operator<(const CharacteristicArray& o) const {
        if (copies != o.copies) return copies < o.copies;
        if (ell != o.ell) return ell < o.ell;
        return j < o.j;
    }

    /// Full coordinate list (t_1, ..., t_{wc-2}, ell, j).
    std::vector<int> coordinates() const {
        std::vector<int> out = copies;
        out.push_back(ell);
        out.push_back(j);
        return out;
    }
};

struct CheckRole {
    enum class Kind { root, child, level2, level3 };
    Kind kind = Kind::root;
    int stage = 0;  // meaningful for level3 only, in [1, wc-2]
};

struct LabeledGraph {
    ParityCheckMatrix matrix;
    std::vector<CharacteristicArray> labels;  // one per column, bijective
    std::vector<CheckRole> check_roles;       // one per row
    int wc = 0;
    int wr = 0;
};

namespace detail {

inline long long checked_pow(long long base, int exp) {
    long long v = 1;
    for (int i = 0; i < exp; ++i) {
        if (v > (1LL << 56) / base) throw std::overflow_error("dimensions overflow");
        v *= base;
    }
    return v;
}

}  // namespace detail

/// Dimensions (n, m) the regular construction produces for (wc, wr).
inline std::pair<long long, long long> predicted_dims(int wc, int wr) {
    if (wc < 2 || wr < wc) throw std::invalid_argument("parameters out of range");
    long long copies = detail::checked_pow(wr, wc - 2);
    long long n = copies * (static_cast<long long>(wr) +
                            static_cast<long long>(wr) * (wr - 1) * (wc - 1));
    long long m = copies * (1 + static_cast<long long>(wr) * (wc - 1) +
                            static_cast<long long>(wr - 1) * (wc - 1) * (wc - 1));
    return {n, m};
}

/// Three-layer base tree: a root check of degree wr; wr first-layer
/// variables each holding wc-1 child checks; each child check holding wr-1
/// fresh last-layer variables. Branch i's last-layer variables occupy
/// positions j = 1..(wc-1)(wr-1), split into wc-1 consecutive blocks of
/// wr-1, one block per child check.
inline LabeledGraph build_h_base(int wc, int wr) {
    if (wc < 2 || wr < wc) throw std::invalid_argument("parameters out of range");
    const int J = (wc - 1) * (wr - 1);
    const std::size_t n = static_cast<std::size_t>(wr) * (1 + J);
    const std::size_t m = 1 + static_cast<std::size_t>(wr) * (wc - 1);

    std::vector<std::vector<std::uint32_t>> cols(n);
    std::vector<CharacteristicArray> labels(n);
    std::vector<CheckRole> roles(m);

    auto col_index = [&](int ell, int j) {
        return static_cast<std::size_t>(ell - 1) * (1 + J) + j;
    };
    auto child_index = [&](int ell, int b) {
        return 1 + static_cast<std::size_t>(ell - 1) * (wc - 1) + (b - 1);
    };

    roles[0] = {CheckRole::Kind::root, 0};
    for (int ell = 1; ell <= wr; ++ell) {
        std::size_t first = col_index(ell, 0);
        labels[first] = {{}, ell, 0};
        cols[first].push_back(0);
        for (int b = 1; b <= wc - 1; ++b) {
            std::size_t check = child_index(ell, b);
            roles[check] = {CheckRole::Kind::child, 0};
            cols[first].push_back(static_cast<std::uint32_t>(check));
            for (int leaf = 1; leaf <= wr - 1; ++leaf) {
                int j = (b - 1) * (wr - 1) + leaf;
                std::size_t col = col_index(ell, j);
                labels[col] = {{}, ell, j};
                cols[col].push_back(static_cast<std::uint32_t>(check));
            }
        }
    }

    return {ParityCheckMatrix::from_columns(m, std::move(cols)),
            std::move(labels), std::move(roles), wc, wr};
}

/// Girth-8 (wc, wr)-regular graph. The base tree's last-layer deficit is
/// closed by one tying check per position (level 2) and, for wc >= 3, by
/// wc-2 replication stages that join equal last-layer positions across wr
/// copies of the current graph (level 3). Columns are ordered
/// lexicographically by (copies, ell, j); rows are grouped by role.
inline LabeledGraph build_h_reg(int wc, int wr) {
    if (wc < 2 || wr < wc) throw std::invalid_argument("parameters out of range");
    const int S = wc - 2;            // replication stages
    const int J = (wc - 1) * (wr - 1);  // last-layer positions per branch
    const long long copies = detail::checked_pow(wr, S);
    auto [n_ll, m_ll] = predicted_dims(wc, wr);
    const std::size_t n = static_cast<std::size_t>(n_ll);
    const std::size_t m = static_cast<std::size_t>(m_ll);

    // row blocks: roots | child checks | level-2 checks | stage 1..S checks
    const long long base_child = copies;
    const long long base_l2 = base_child + copies * wr * (wc - 1);
    const long long stage_size = copies * J;  // wr^{S-1} * wr * J
    const long long base_stage = base_l2 + copies * J;

    auto root_row = [&](long long copy_rank) { return copy_rank; };
    auto child_row = [&](long long copy_rank, int ell, int b) {
        return base_child + (copy_rank * wr + (ell - 1)) * (wc - 1) + (b - 1);
    };
    auto l2_row = [&](long long copy_rank, int j) {
        return base_l2 + copy_rank * J + (j - 1);
    };
    // stage-s checks are indexed by the copy tuple with position s removed
    auto stage_row = [&](int s, long long reduced_rank, int ell, int j) {
        return base_stage + (s - 1) * stage_size +
               (reduced_rank * wr + (ell - 1)) * static_cast<long long>(J) +
               (j - 1);
    };

    std::vector<std::vector<std::uint32_t>> cols(n);
    std::vector<CharacteristicArray> labels(n);

    std::vector<int> t(S, 1);  // current copy tuple, odometer order
    std::size_t col = 0;
    while (true) {
        long long copy_rank = 0;
        for (int s = 0; s < S; ++s) copy_rank = copy_rank * wr + (t[s] - 1);

        for (int ell = 1; ell <= wr; ++ell) {
            for (int j = 0; j <= J; ++j, ++col) {
                labels[col] = {t, ell, j};
                auto& rows = cols[col];
                if (j == 0) {
                    rows.push_back(static_cast<std::uint32_t>(root_row(copy_rank)));
                    for (int b = 1; b <= wc - 1; ++b)
                        rows.push_back(
                            static_cast<std::uint32_t>(child_row(copy_rank, ell, b)));
                } else {
                    int b = (j - 1) / (wr - 1) + 1;
                    rows.push_back(
                        static_cast<std::uint32_t>(child_row(copy_rank, ell, b)));
                    rows.push_back(static_cast<std::uint32_t>(l2_row(copy_rank, j)));
                    for (int s = 1; s <= S; ++s) {
                        long long reduced = 0;
                        for (int k = 0; k < S; ++k)
                            if (k != s - 1) reduced = reduced * wr + (t[k] - 1);
                        rows.push_back(static_cast<std::uint32_t>(
                            stage_row(s, reduced, ell, j)));
                    }
                }
            }
        }

        int s = S - 1;
        while (s >= 0 && t[s] == wr) t[s--] = 1;
        if (s < 0) break;
        ++t[s];
    }

    std::vector<CheckRole> roles(m);
    for (long long r = 0; r < base_child; ++r) roles[r] = {CheckRole::Kind::root, 0};
    for (long long r = base_child; r < base_l2; ++r)
        roles[r] = {CheckRole::Kind::child, 0};
    for (long long r = base_l2; r < base_stage; ++r)
        roles[r] = {CheckRole::Kind::level2, 0};
    for (int s = 1; s <= S; ++s)
        for (long long r = 0; r < stage_size; ++r)
            roles[base_stage + (s - 1) * stage_size + r] = {CheckRole::Kind::level3, s};

    return {ParityCheckMatrix::from_columns(m, std::move(cols)),
            std::move(labels), std::move(roles), wc, wr};
}

/// The minimum-weight codeword the construction guarantees: the four
/// last-layer variables at positions 1 and 2 of branches 1 and 2 (which sit
/// under one child check per branch), replicated across stage-1 copies 1
/// and 2 when wc = 3. Needs wr >= 3 so positions 1 and 2 share a block.
inline BinaryVector canonical_min_weight_codeword(const LabeledGraph& g) {
    const int wc = g.wc, wr = g.wr;
    if ((wc != 2 && wc != 3) || wr < 3)
        throw std::invalid_argument("no canonical codeword defined");
    const int J = (wc - 1) * (wr - 1);

    std::vector<std::uint32_t> support;
    auto add = [&](long long copy_rank, int ell, int j) {
        long long idx = (copy_rank * wr + (ell - 1)) * (J + 1) + j;
        support.push_back(static_cast<std::uint32_t>(idx));
    };
    if (wc == 2) {
        for (int ell = 1; ell <= 2; ++ell)
            for (int j = 1; j <= 2; ++j) add(0, ell, j);
    } else {
        for (int t1 = 0; t1 <= 1; ++t1)
            for (int ell = 1; ell <= 2; ++ell)
                for (int j = 1; j <= 2; ++j) add(t1, ell, j);
    }
    std::sort(support.begin(), support.end());
    return BinaryVector(g.matrix.n(), std::move(support));
}

/// CSV export of the column labels: "col,coords", coords dash-separated.
inline void write_labels_csv(std::ostream& out, const LabeledGraph& g) {
    out << "col,coords\n";
    for (std::size_t c = 0; c < g.labels.size(); ++c) {
        out << c << ',';
        auto coords = g.labels[c].coordinates();
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i) out << '-';
            out << coords[i];
        }
        out << '\n';
    }
}

}  // namespace girthlab
