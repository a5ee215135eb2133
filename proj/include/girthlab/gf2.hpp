#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace girthlab::gf2 {

/// Fixed-length bit vector packed into 64-bit words, with the XOR/popcount
/// operations needed for GF(2) elimination and codeword enumeration.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) {
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    void operator^=(const Bitset& other) {
        for (std::size_t w = 0; w < words_.size(); ++w)
            words_[w] ^= other.words_[w];
    }

    std::size_t popcount() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (std::uint64_t w : words_)
            if (w) return true;
        return false;
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::size_t lowest_set_bit() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return w * 64 + std::countr_zero(words_[w]);
        return npos;
    }

    std::vector<std::uint32_t> support() const {
        std::vector<std::uint32_t> out;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                out.push_back(
                    static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
        return out;
    }

    bool operator==(const Bitset& other) const {
        return nbits_ == other.nbits_ && words_ == other.words_;
    }

    /// True when this bitset's sorted support list is lexicographically
    /// smaller than other's: the lowest differing index belongs to *this.
    bool support_lex_less(const Bitset& other) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t diff = words_[w] ^ other.words_[w];
            if (diff) {
                std::uint64_t low = diff & (~diff + 1);
                return words_[w] & low;
            }
        }
        return false;
    }

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Rank of a list of row bitsets via forward elimination. Destroys its copy.
inline std::size_t rank(std::vector<Bitset> rows, std::size_t ncols) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t pivot = Bitset::npos;
        for (std::size_t i = r; i < rows.size(); ++i) {
            if (rows[i].test(c)) {
                pivot = i;
                break;
            }
        }
        if (pivot == Bitset::npos) continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i].test(c)) rows[i] ^= rows[r];
        ++r;
    }
    return r;
}

/// Basis of {x : Ax = 0} from the reduced row echelon form of A.
/// Basis vectors come out in increasing order of their free column.
inline std::vector<Bitset> nullspace_basis(std::vector<Bitset> rows,
                                           std::size_t ncols) {
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t pivot = Bitset::npos;
        for (std::size_t i = r; i < rows.size(); ++i) {
            if (rows[i].test(c)) {
                pivot = i;
                break;
            }
        }
        if (pivot == Bitset::npos) continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i].test(c)) rows[i] ^= rows[r];
        pivot_col.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;

    std::vector<Bitset> basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        Bitset x(ncols);
        x.set(f);
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            if (rows[i].test(f)) x.set(pivot_col[i]);
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace girthlab::gf2
