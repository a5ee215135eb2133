#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace girthlab {

/// True when no three distinct elements satisfy b_i + b_j = 2 b_k.
/// Input must be strictly increasing and positive. Quadratic in the length:
/// every pair sum is tested for a member midpoint.
inline bool is_3ap_free(const std::vector<long long>& terms) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i] < 1) throw std::invalid_argument("terms must be positive");
        if (i > 0 && terms[i] <= terms[i - 1])
            throw std::invalid_argument("terms must be strictly increasing");
    }
    std::unordered_set<long long> members(terms.begin(), terms.end());
    for (std::size_t i = 0; i < terms.size(); ++i)
        for (std::size_t j = i + 1; j < terms.size(); ++j) {
            long long sum = terms[i] + terms[j];
            if (sum % 2 == 0 && members.count(sum / 2)) return false;
        }
    return true;
}

/// Strictly increasing positive integers with no 3-term arithmetic
/// progression. The factory enforces the invariant.
struct ApFreeSequence {
    std::vector<long long> terms;

    static ApFreeSequence from_terms(std::vector<long long> t) {
        if (!is_3ap_free(t))  // also validates ordering/positivity
            throw std::invalid_argument("sequence contains 3-AP");
        return ApFreeSequence{std::move(t)};
    }

    std::size_t size() const { return terms.size(); }
    long long back() const { return terms.back(); }
};

namespace detail {

/// Incremental greedy extender. A candidate exceeds every member, so it can
/// only complete a progression as the largest endpoint: some member b is the
/// midpoint and 2b - cand is also a member. Membership lives in a growable
/// bitmap, making that test O(|terms|) per candidate.
class GreedyExtender {
public:
    void append_next() {
        long long cand = terms_.empty() ? 1 : terms_.back() + 1;
        while (violates(cand)) ++cand;
        push(cand);
    }
    const std::vector<long long>& terms() const { return terms_; }

private:
    bool contains(long long v) const {
        return v >= 1 && static_cast<std::size_t>(v) < member_.size() &&
               member_[static_cast<std::size_t>(v)];
    }
    bool violates(long long cand) const {
        for (long long b : terms_)
            if (contains(2 * b - cand)) return true;
        return false;
    }
    void push(long long v) {
        if (static_cast<std::size_t>(v) >= member_.size())
            member_.resize(static_cast<std::size_t>(v) * 2 + 16, false);
        member_[static_cast<std::size_t>(v)] = true;
        terms_.push_back(v);
    }

    std::vector<long long> terms_;
    std::vector<bool> member_;
};

}  // namespace detail

/// Greedy sequence: starting from {1, 2}, repeatedly append the smallest
/// integer that keeps the set free of 3-term progressions.
inline ApFreeSequence greedy_3ap_free(std::size_t count) {
    if (count < 1) throw std::invalid_argument("count must be >= 1");
    detail::GreedyExtender ext;
    while (ext.terms().size() < count) ext.append_next();
    return ApFreeSequence{ext.terms()};
}

/// Greedy sequence truncated to terms <= bound.
inline ApFreeSequence greedy_3ap_free_up_to(long long bound) {
    if (bound < 1) throw std::invalid_argument("bound must be >= 1");
    detail::GreedyExtender ext;
    while (ext.terms().empty() || ext.terms().back() <= bound)
        ext.append_next();
    std::vector<long long> t = ext.terms();
    t.pop_back();
    return ApFreeSequence{std::move(t)};
}

/// Sphere construction: digit vectors of length k with digits below d in
/// base 2d-1 (so integer addition never carries) and a fixed sum of squared
/// digits. Equal square sums force x = y whenever x + y = 2z inside one
/// sphere, hence no 3-term progression. The scan keeps the most populous
/// sphere over a small (d, k) grid, truncated to values within [1, M].
inline ApFreeSequence behrend_sequence(long long M) {
    if (M < 10) throw std::invalid_argument("M must be >= 10");

    std::vector<long long> best;
    for (int d = 2; d <= 12; ++d) {
        const long long base = 2 * d - 1;
        for (int k = 1;; ++k) {
            // need some length-k value in range, and a tractable scan
            double count_estimate = std::pow(static_cast<double>(d), k);
            double min_top = std::pow(static_cast<double>(base), k - 1);
            if (min_top > static_cast<double>(M) || count_estimate > 8e6) break;

            // bucket in-range vectors by square sum, then keep the best
            std::vector<std::vector<long long>> spheres(k * (d - 1) * (d - 1) + 1);
            std::vector<int> digits(k, 0);
            while (true) {
                long long value = 0;
                int r = 0;
                for (int i = 0; i < k; ++i) {
                    value = value * base + digits[i];
                    r += digits[i] * digits[i];
                }
                if (value >= 1 && value <= M) spheres[r].push_back(value);
                int pos = k - 1;
                while (pos >= 0 && digits[pos] == d - 1) digits[pos--] = 0;
                if (pos < 0) break;
                ++digits[pos];
            }
            for (auto& sphere : spheres)
                if (sphere.size() > best.size()) best = std::move(sphere);
        }
    }

    std::sort(best.begin(), best.end());
    ApFreeSequence seq = ApFreeSequence::from_terms(std::move(best));
    return seq;
}

/// Sequence files hold one positive integer per line, strictly increasing;
/// sequences containing a 3-term progression are rejected.
inline ApFreeSequence read_sequence(std::istream& in) {
    std::vector<long long> terms;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            std::size_t pos = 0;
            long long v = std::stoll(line, &pos);
            while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos])))
                ++pos;
            if (pos != line.size()) throw std::invalid_argument("trailing characters");
            terms.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": expected one integer per line");
        }
    }
    return ApFreeSequence::from_terms(std::move(terms));
}

inline void write_sequence(std::ostream& out, const ApFreeSequence& seq) {
    for (long long t : seq.terms) out << t << '\n';
}

}  // namespace girthlab
