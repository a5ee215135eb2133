#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "girthlab/analysis.hpp"
#include "girthlab/matrix.hpp"
#include "girthlab/regular.hpp"

using girthlab::CharacteristicArray;
using girthlab::CheckRole;
using girthlab::LabeledGraph;

namespace {

/// Position at which two label tuples differ, or -1 unless exactly one.
int single_diff_position(const CharacteristicArray& a, const CharacteristicArray& b) {
    auto ca = a.coordinates(), cb = b.coordinates();
    REQUIRE(ca.size() == cb.size());
    int pos = -1, count = 0;
    for (std::size_t i = 0; i < ca.size(); ++i)
        if (ca[i] != cb[i]) {
            pos = static_cast<int>(i);
            ++count;
        }
    return count == 1 ? pos : -1;
}

}  // namespace

TEST_CASE("predicted dimensions", "[regular]") {
    CHECK(girthlab::predicted_dims(2, 4) == std::pair<long long, long long>{16, 8});
    CHECK(girthlab::predicted_dims(3, 3) == std::pair<long long, long long>{45, 45});
    CHECK(girthlab::predicted_dims(4, 4) == std::pair<long long, long long>{640, 640});
    for (int wr = 3; wr <= 16; ++wr)
        CHECK(girthlab::predicted_dims(2, wr) ==
              std::pair<long long, long long>{static_cast<long long>(wr) * wr, 2 * wr});

    CHECK_THROWS_WITH(girthlab::predicted_dims(1, 4), "parameters out of range");
    CHECK_THROWS_WITH(girthlab::predicted_dims(3, 2), "parameters out of range");
    CHECK_THROWS_WITH(girthlab::predicted_dims(4, 3), "parameters out of range");
}

TEST_CASE("base tree structure", "[regular]") {
    auto g = girthlab::build_h_base(2, 3);
    CHECK(g.matrix.n() == 9);  // 3 first layer + 6 last layer
    CHECK(g.matrix.m() == 4);  // root + 3 child checks
    CHECK_FALSE(girthlab::girth(g.matrix).has_value());

    auto g33 = girthlab::build_h_base(3, 3);
    CHECK(g33.matrix.n() == 15);  // 3 + 3 * 4 last layer
    CHECK(g33.matrix.m() == 7);
    CHECK_FALSE(girthlab::girth(g33.matrix).has_value());

    // first-layer variables already have degree wc, leaves degree 1
    for (std::size_t c = 0; c < g33.matrix.n(); ++c) {
        bool first_layer = g33.labels[c].j == 0;
        CHECK(g33.matrix.column(c).size() == (first_layer ? 3u : 1u));
    }
    // every check in the tree has degree wr except none
    CHECK(g33.matrix.row(0).size() == 3);
    for (std::size_t r = 1; r < g33.matrix.m(); ++r)
        CHECK(g33.matrix.row(r).size() == 3);
}

TEST_CASE("regular construction hits predicted dimensions and degrees", "[regular]") {
    for (int wc = 2; wc <= 4; ++wc) {
        for (int wr = wc; wr <= wc + 3; ++wr) {
            auto g = girthlab::build_h_reg(wc, wr);
            auto [n, m] = girthlab::predicted_dims(wc, wr);
            CHECK(g.matrix.n() == static_cast<std::size_t>(n));
            CHECK(g.matrix.m() == static_cast<std::size_t>(m));
            CHECK(n * wc == m * wr);
            for (const auto& col : g.matrix.columns())
                CHECK(col.size() == static_cast<std::size_t>(wc));
            for (const auto& row : g.matrix.rows())
                CHECK(row.size() == static_cast<std::size_t>(wr));
        }
    }
}

TEST_CASE("regular construction has girth exactly 8", "[regular]") {
    for (auto [wc, wr] : {std::pair{2, 2}, {2, 4}, {2, 7}, {3, 3}, {3, 5}, {4, 4}})
        CHECK(girthlab::girth(girthlab::build_h_reg(wc, wr).matrix) == 8);
}

TEST_CASE("labels are bijective and in range", "[regular]") {
    for (auto [wc, wr] : {std::pair{2, 4}, {3, 3}, {3, 4}, {4, 4}}) {
        auto g = girthlab::build_h_reg(wc, wr);
        std::set<std::vector<int>> seen;
        for (const auto& label : g.labels) {
            CHECK(label.copies.size() == static_cast<std::size_t>(wc - 2));
            for (int t : label.copies) {
                CHECK(t >= 1);
                CHECK(t <= wr);
            }
            CHECK(label.ell >= 1);
            CHECK(label.ell <= wr);
            CHECK(label.j >= 0);
            CHECK(label.j <= (wc - 1) * (wr - 1));
            seen.insert(label.coordinates());
        }
        CHECK(seen.size() == g.matrix.n());

        // canonical ordering: columns appear in lexicographic label order
        CHECK(std::is_sorted(g.labels.begin(), g.labels.end()));
    }
}

TEST_CASE("check roles partition the rows", "[regular]") {
    auto g = girthlab::build_h_reg(3, 4);
    std::size_t roots = 0, children = 0, level2 = 0, level3 = 0;
    for (const auto& role : g.check_roles) {
        switch (role.kind) {
            case CheckRole::Kind::root: ++roots; break;
            case CheckRole::Kind::child: ++children; break;
            case CheckRole::Kind::level2: ++level2; break;
            case CheckRole::Kind::level3:
                ++level3;
                CHECK(role.stage == 1);
                break;
        }
    }
    CHECK(roots == 4);           // one per copy
    CHECK(children == 4 * 4 * 2);
    CHECK(level2 == 4 * 6);
    CHECK(level3 == 4 * 6);
    CHECK(roots + children + level2 + level3 == g.matrix.m());
}

TEST_CASE("neighbors of a check differ in exactly one label coordinate", "[regular]") {
    for (auto [wc, wr] : {std::pair{2, 4}, {3, 3}, {3, 4}, {4, 4}}) {
        auto g = girthlab::build_h_reg(wc, wr);
        for (std::size_t r = 0; r < g.matrix.m(); ++r) {
            const auto& cols = g.matrix.row(r);
            for (std::size_t a = 0; a < cols.size(); ++a)
                for (std::size_t b = a + 1; b < cols.size(); ++b)
                    CHECK(single_diff_position(g.labels[cols[a]], g.labels[cols[b]]) >= 0);
        }
    }
}

// Each check moves its neighbors along one label coordinate. A last-layer
// variable meets every coordinate direction through at most one check. A
// first-layer variable's child checks all move the position coordinate
// (one per block), so only the non-position directions stay unique there;
// the pairwise form below is what rules the short cycles out.
TEST_CASE("per-vertex check directions", "[regular]") {
    for (auto [wc, wr] : {std::pair{2, 4}, {3, 3}, {3, 4}, {4, 4}}) {
        auto g = girthlab::build_h_reg(wc, wr);
        const int jpos = wc - 1;  // index of the position coordinate

        for (std::size_t c = 0; c < g.matrix.n(); ++c) {
            std::vector<int> directions;
            for (std::uint32_t r : g.matrix.column(c)) {
                const auto& members = g.matrix.row(r);
                int dir = -2;
                for (std::uint32_t other : members) {
                    if (other == c) continue;
                    int d = single_diff_position(g.labels[c], g.labels[other]);
                    REQUIRE(d >= 0);
                    if (dir == -2)
                        dir = d;
                    else
                        CHECK(dir == d);  // a check has a single direction
                }
                directions.push_back(dir);
            }
            if (g.labels[c].j != 0) {
                std::set<int> unique(directions.begin(), directions.end());
                CHECK(unique.size() == directions.size());
            } else {
                CHECK(std::count(directions.begin(), directions.end(), jpos) == wc - 1);
                CHECK(std::count(directions.begin(), directions.end(), jpos - 1) == 1);
            }
        }
    }
}

TEST_CASE("no two checks share two columns", "[regular]") {
    for (auto [wc, wr] : {std::pair{2, 4}, {3, 3}, {4, 4}}) {
        auto g = girthlab::build_h_reg(wc, wr);
        std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
        for (std::size_t r = 0; r < g.matrix.m(); ++r) {
            const auto& cols = g.matrix.row(r);
            for (std::size_t a = 0; a < cols.size(); ++a)
                for (std::size_t b = a + 1; b < cols.size(); ++b)
                    CHECK(seen.insert({cols[a], cols[b]}).second);
        }
    }
}

TEST_CASE("canonical minimum-weight codeword", "[regular]") {
    auto g24 = girthlab::build_h_reg(2, 4);
    auto w24 = girthlab::canonical_min_weight_codeword(g24);
    CHECK(w24.weight() == 4);
    CHECK(girthlab::syndrome(g24.matrix, w24).is_zero());

    auto g33 = girthlab::build_h_reg(3, 3);
    auto w33 = girthlab::canonical_min_weight_codeword(g33);
    CHECK(w33.weight() == 8);
    CHECK(girthlab::syndrome(g33.matrix, w33).is_zero());

    auto g23 = girthlab::build_h_reg(2, 3);
    auto w23 = girthlab::canonical_min_weight_codeword(g23);
    CHECK(w23.weight() == 4);
    CHECK(girthlab::syndrome(g23.matrix, w23).is_zero());

    CHECK_THROWS_WITH(girthlab::canonical_min_weight_codeword(girthlab::build_h_reg(4, 4)),
                      "no canonical codeword defined");
    CHECK_THROWS_WITH(girthlab::canonical_min_weight_codeword(girthlab::build_h_reg(2, 2)),
                      "no canonical codeword defined");
}

TEST_CASE("distance of small regular instances", "[regular]") {
    auto g24 = girthlab::build_h_reg(2, 4);
    auto d = girthlab::min_distance(g24.matrix, 8);
    CHECK(d.kind == girthlab::DistanceResult::Kind::exact);
    CHECK(d.value == 4);

    // light certification here; the full weight-7 sweep runs in acceptance
    auto g33 = girthlab::build_h_reg(3, 3);
    auto lb = girthlab::min_distance(g33.matrix, 5,
                                     girthlab::DistanceStrategy::weight_capped_search);
    CHECK(lb.kind == girthlab::DistanceResult::Kind::lower_bound);
    CHECK(lb.value == 6);
}
