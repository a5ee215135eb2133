#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "girthlab/apfree.hpp"
#include "girthlab/matrix.hpp"

namespace girthlab {

/// Parameters of the column-weight-3 construction over n = t^2 columns.
/// The two offsets push each column's second and third 1 into disjoint row
/// levels: c1 = t - 1 and c2 = t - 1 + b_t.
struct SemiRegularSpec {
    long long t = 0;
    ApFreeSequence sequence;

    static SemiRegularSpec make(long long t, ApFreeSequence seq) {
        if (t < 2) throw std::invalid_argument("t must be >= 2");
        if (seq.size() < static_cast<std::size_t>(t))
            throw std::invalid_argument("sequence too short");
        return {t, std::move(seq)};
    }

    long long bt() const { return sequence.terms[t - 1]; }
    long long c1() const { return t - 1; }
    long long c2() const { return t - 1 + bt(); }
    long long n() const { return t * t; }
    long long m() const { return 4 * t + 2 * bt() - 3; }

    /// Row ranges of the three levels, 0-based half-open.
    long long level1_end() const { return t; }
    long long level2_end() const { return 2 * t + bt() - 1; }
};

/// Check count 4t + 2 b_t - 3 of the semi-regular construction.
inline long long predicted_m(long long t, const ApFreeSequence& seq) {
    return SemiRegularSpec::make(t, seq).m();
}

namespace detail {

/// Placement shared by the checked builder and the test-only unchecked
/// variant: column j takes a_j = floor(j/t) (so every level-1 row gets
/// exactly t columns) and i_j = j mod t, a bijection within each level-1
/// block as the second-level rule requires.
inline ParityCheckMatrix place_h_s(long long t,
                                   const std::vector<long long>& terms) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i] < 1) throw std::invalid_argument("terms must be positive");
        if (i > 0 && terms[i] <= terms[i - 1])
            throw std::invalid_argument("terms must be strictly increasing");
    }
    if (t < 2) throw std::invalid_argument("t must be >= 2");
    if (terms.size() < static_cast<std::size_t>(t))
        throw std::invalid_argument("sequence too short");

    const long long bt = terms[t - 1];
    const long long c1 = t - 1;
    const long long c2 = t - 1 + bt;
    const long long n = t * t;
    const long long m = 4 * t + 2 * bt - 3;

    std::vector<std::vector<std::uint32_t>> cols(n);
    for (long long j = 0; j < n; ++j) {
        const long long a = j / t;
        const long long b = terms[j % t];
        const long long r1 = a;
        const long long r2 = c1 + b + r1;
        const long long r3 = c2 + a + r2;
        cols[j] = {static_cast<std::uint32_t>(r1), static_cast<std::uint32_t>(r2),
                   static_cast<std::uint32_t>(r3)};
    }
    return ParityCheckMatrix::from_columns(m, std::move(cols));
}

/// Test-only hook: same placement without the progression-freeness check,
/// for measuring how the girth degrades on a bad sequence.
inline ParityCheckMatrix build_h_s_unchecked(long long t,
                                             const std::vector<long long>& terms) {
    return place_h_s(t, terms);
}

}  // namespace detail

/// Semi-regular girth-8 matrix: n = t^2 columns of weight exactly 3, one 1
/// per row level, m = 4t + 2 b_t - 3. Rejects sequences with a 3-term
/// progression, since those reintroduce 6-cycles.
inline ParityCheckMatrix build_h_s(long long t, const ApFreeSequence& seq) {
    SemiRegularSpec spec = SemiRegularSpec::make(t, seq);
    if (!is_3ap_free(seq.terms))  // aggregate init can bypass the factory
        throw std::invalid_argument("sequence contains 3-AP");
    return detail::place_h_s(spec.t, spec.sequence.terms);
}

}  // namespace girthlab
