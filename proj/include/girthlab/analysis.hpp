#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "girthlab/gf2.hpp"
#include "girthlab/matrix.hpp"

namespace girthlab {

struct GraphStats {
    std::size_t m = 0;
    std::size_t n = 0;
    std::optional<int> girth;  // nullopt = acyclic
    std::vector<std::size_t> column_degree_set;
    std::vector<std::size_t> row_degree_set;
    std::optional<std::pair<std::size_t, std::size_t>> regular_pair;
};

struct DistanceResult {
    enum class Kind { exact, lower_bound };
    enum class Strategy { kernel_enumeration, weight_capped_search };

    Kind kind;
    int value = 0;
    std::optional<BinaryVector> witness;  // present iff exact
    Strategy strategy;
    std::optional<int> cap;  // present iff lower_bound
};

enum class DistanceStrategy { automatic, kernel_enumeration, weight_capped_search };

namespace detail {

inline unsigned resolve_threads(unsigned requested, std::size_t work_items) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    unsigned t = requested == 0 ? hw : requested;
    if (work_items < t) t = static_cast<unsigned>(std::max<std::size_t>(work_items, 1));
    return t;
}

}  // namespace detail

/// Exact girth of the bipartite incidence graph: BFS from every variable
/// node; a non-tree edge seen at depths (d_u, d_v) closes a cycle of length
/// d_u + d_v + 1, and the minimum over all roots is the girth. Returns
/// nullopt when the graph is acyclic.
inline std::optional<int> girth(const ParityCheckMatrix& h) {
    const std::size_t n = h.n(), m = h.m();
    const std::size_t V = n + m;  // variables are [0,n), checks [n, n+m)
    std::vector<int> depth(V), parent(V);
    std::size_t best = gf2::Bitset::npos;

    std::vector<std::uint32_t> queue(V);
    for (std::size_t root = 0; root < n; ++root) {
        std::fill(depth.begin(), depth.end(), -1);
        std::size_t head = 0, tail = 0;
        queue[tail++] = static_cast<std::uint32_t>(root);
        depth[root] = 0;
        parent[root] = -1;
        while (head < tail) {
            std::uint32_t u = queue[head++];
            // cycles through deeper vertices cannot beat the current best
            if (best != gf2::Bitset::npos &&
                static_cast<std::size_t>(2 * depth[u]) >= best)
                break;
            const bool is_var = u < n;
            const auto& nbrs = is_var ? h.column(u) : h.row(u - n);
            for (std::uint32_t w : nbrs) {
                std::uint32_t v = is_var ? w + static_cast<std::uint32_t>(n) : w;
                if (depth[v] < 0) {
                    depth[v] = depth[u] + 1;
                    parent[v] = static_cast<int>(u);
                    queue[tail++] = v;
                } else if (parent[u] != static_cast<int>(v) &&
                           parent[v] != static_cast<int>(u)) {
                    std::size_t cand = static_cast<std::size_t>(depth[u]) + depth[v] + 1;
                    best = std::min(best, cand);
                }
            }
        }
    }
    if (best == gf2::Bitset::npos) return std::nullopt;
    return static_cast<int>(best);
}

inline GraphStats stats(const ParityCheckMatrix& h) {
    GraphStats s;
    s.m = h.m();
    s.n = h.n();
    s.girth = girth(h);
    for (const auto& c : h.columns()) s.column_degree_set.push_back(c.size());
    for (const auto& r : h.rows()) s.row_degree_set.push_back(r.size());
    auto dedupe = [](std::vector<std::size_t>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    dedupe(s.column_degree_set);
    dedupe(s.row_degree_set);
    if (s.column_degree_set.size() == 1 && s.row_degree_set.size() == 1)
        s.regular_pair = {s.column_degree_set[0], s.row_degree_set[0]};
    return s;
}

namespace detail {

struct Candidate {
    bool found = false;
    gf2::Bitset word;

    void offer(const gf2::Bitset& w) {
        if (!found) {
            word = w;
            found = true;
            return;
        }
        std::size_t pw = w.popcount(), pb = word.popcount();
        if (pw < pb || (pw == pb && w.support_lex_less(word))) word = w;
    }
    void merge(const Candidate& other) {
        if (other.found) offer(other.word);
    }
};

/// Exhaustive scan over all nonzero kernel elements via a Gray-code walk;
/// the range [begin, end) of Gray indices lets callers partition the walk.
inline Candidate kernel_scan_range(const std::vector<gf2::Bitset>& basis,
                                   std::size_t nbits, std::uint64_t begin,
                                   std::uint64_t end) {
    Candidate best;
    gf2::Bitset current(nbits);
    std::uint64_t g = begin ^ (begin >> 1);
    for (std::size_t b = 0; b < basis.size(); ++b)
        if ((g >> b) & 1) current ^= basis[b];
    if (begin != 0) best.offer(current);
    std::size_t best_weight = begin != 0 ? current.popcount() : nbits + 1;
    for (std::uint64_t i = begin + 1; i < end; ++i) {
        current ^= basis[std::countr_zero(i)];
        std::size_t w = current.popcount();
        if (w < best_weight) {
            best_weight = w;
            best.found = true;
            best.word = current;
        } else if (w == best_weight && best.found &&
                   current.support_lex_less(best.word)) {
            best.word = current;
        }
    }
    return best;
}

/// Lexicographic scan of all weight-w column subsets whose first index lies
/// in [first_lo, first_hi); returns the first zero-syndrome subset found,
/// which by the enumeration order is the lexicographically smallest one.
inline std::optional<std::vector<std::uint32_t>> capped_scan_weight(
    const std::vector<gf2::Bitset>& cols, std::size_t m, int w,
    std::uint32_t first_lo, std::uint32_t first_hi) {
    const std::size_t n = cols.size();
    std::vector<gf2::Bitset> syn(w + 1, gf2::Bitset(m));
    std::vector<std::uint32_t> pick(w);

    // depth d has chosen pick[0..d); syn[d] is their syndrome
    for (std::uint32_t first = first_lo; first < first_hi; ++first) {
        pick[0] = first;
        syn[1] = syn[0];
        syn[1] ^= cols[first];
        if (w == 1) {
            if (!syn[1].any()) return std::vector<std::uint32_t>{first};
            continue;
        }
        int d = 1;
        std::vector<std::uint32_t> next(w);
        next[1] = first + 1;
        while (d >= 1) {
            if (next[d] + (w - d) > n) {  // not enough columns left
                --d;
                if (d >= 1) ++next[d];
                continue;
            }
            std::uint32_t j = next[d];
            pick[d] = j;
            syn[d + 1] = syn[d];
            syn[d + 1] ^= cols[j];
            if (d + 1 == w) {
                if (!syn[d + 1].any())
                    return std::vector<std::uint32_t>(pick.begin(), pick.end());
                ++next[d];
            } else {
                ++d;
                next[d] = j + 1;
            }
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Minimum distance of the code with parity-check matrix h.
///
/// kernel_enumeration walks every nonzero codeword (requires nullity <= 28)
/// and is exact. weight_capped_search exhausts all column subsets of weight
/// <= weight_cap: it returns an exact result if a codeword is found, and
/// otherwise certifies the lower bound weight_cap + 1. The automatic
/// strategy picks kernel enumeration when the nullity allows it.
///
/// Ties among minimum-weight codewords are broken toward the
/// lexicographically smallest support, so results are deterministic and
/// independent of the thread count.
inline DistanceResult min_distance(const ParityCheckMatrix& h, int weight_cap,
                                   DistanceStrategy strategy = DistanceStrategy::automatic,
                                   unsigned threads = 0) {
    if (weight_cap < 1) throw std::invalid_argument("weight cap must be >= 1");
    constexpr std::size_t kKernelLimit = 28;

    auto nullspace = gf2::nullspace_basis(h.packed_rows(), h.n());
    const std::size_t nullity = nullspace.size();

    if (strategy == DistanceStrategy::automatic)
        strategy = nullity <= kKernelLimit ? DistanceStrategy::kernel_enumeration
                                           : DistanceStrategy::weight_capped_search;

    if (strategy == DistanceStrategy::kernel_enumeration) {
        if (nullity > kKernelLimit) throw std::invalid_argument("kernel too large");
        if (nullity == 0)
            throw std::domain_error("code has no nonzero codewords");

        const std::uint64_t total = std::uint64_t{1} << nullity;
        unsigned t = detail::resolve_threads(threads, total / 4096 + 1);
        std::vector<detail::Candidate> results(t);
        {
            std::vector<std::thread> pool;
            std::uint64_t chunk = total / t;
            for (unsigned i = 0; i < t; ++i) {
                std::uint64_t b = i * chunk;
                std::uint64_t e = (i + 1 == t) ? total : b + chunk;
                pool.emplace_back([&, i, b, e] {
                    results[i] = detail::kernel_scan_range(nullspace, h.n(), b, e);
                });
            }
            for (auto& th : pool) th.join();
        }
        detail::Candidate best;
        for (const auto& r : results) best.merge(r);

        DistanceResult out;
        out.kind = DistanceResult::Kind::exact;
        out.value = static_cast<int>(best.word.popcount());
        out.witness = BinaryVector(h.n(), best.word.support());
        out.strategy = DistanceResult::Strategy::kernel_enumeration;
        return out;
    }

    // weight-capped search, one weight class at a time
    auto cols = h.packed_columns();
    const std::size_t n = h.n();
    for (int w = 1; w <= weight_cap && static_cast<std::size_t>(w) <= n; ++w) {
        std::uint32_t max_first = static_cast<std::uint32_t>(n - w + 1);
        unsigned t = detail::resolve_threads(threads, max_first);
        std::vector<std::optional<std::vector<std::uint32_t>>> results(t);
        {
            std::vector<std::thread> pool;
            std::uint32_t chunk = max_first / t;
            for (unsigned i = 0; i < t; ++i) {
                std::uint32_t lo = i * chunk;
                std::uint32_t hi = (i + 1 == t) ? max_first : lo + chunk;
                pool.emplace_back([&, i, lo, hi] {
                    results[i] =
                        detail::capped_scan_weight(cols, h.m(), w, lo, hi);
                });
            }
            for (auto& th : pool) th.join();
        }
        for (const auto& r : results) {
            if (r) {  // smallest first index wins; scan order is lex within
                DistanceResult out;
                out.kind = DistanceResult::Kind::exact;
                out.value = w;
                out.witness = BinaryVector(n, *r);
                out.strategy = DistanceResult::Strategy::weight_capped_search;
                return out;
            }
        }
    }

    DistanceResult out;
    out.kind = DistanceResult::Kind::lower_bound;
    out.value = weight_cap + 1;
    out.strategy = DistanceResult::Strategy::weight_capped_search;
    out.cap = weight_cap;
    return out;
}

}  // namespace girthlab
