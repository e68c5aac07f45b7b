#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cwc {

/// A length-n bit vector of fixed Hamming weight, packed for fast popcount
/// distance kernels. Bits beyond position n-1 are always zero.
struct Codeword {
    int n = 0;
    std::vector<std::uint64_t> bits;
    int weight = 0;

    static Codeword zeros(int n) {
        Codeword c;
        c.n = n;
        c.bits.assign((n + 63) / 64, 0);
        return c;
    }

    bool test(int pos) const { return (bits[pos >> 6] >> (pos & 63)) & 1u; }

    void set(int pos) {
        std::uint64_t& limb = bits[pos >> 6];
        const std::uint64_t mask = std::uint64_t{1} << (pos & 63);
        if (!(limb & mask)) {
            limb |= mask;
            ++weight;
        }
    }

    int popcount() const {
        int c = 0;
        for (std::uint64_t limb : bits) c += __builtin_popcountll(limb);
        return c;
    }

    bool operator==(const Codeword& o) const { return n == o.n && bits == o.bits; }
    /// Lexicographic on the packed limbs; used for canonical duplicate scans.
    bool operator<(const Codeword& o) const { return bits < o.bits; }
};

inline int distance(const Codeword& a, const Codeword& b) {
    int d = 0;
    for (std::size_t i = 0; i < a.bits.size(); ++i)
        d += __builtin_popcountll(a.bits[i] ^ b.bits[i]);
    return d;
}

inline int support_intersection(const Codeword& a, const Codeword& b) {
    int s = 0;
    for (std::size_t i = 0; i < a.bits.size(); ++i)
        s += __builtin_popcountll(a.bits[i] & b.bits[i]);
    return s;
}

/// Coordinate layout of a w-column grid code: column block i holds the q
/// coordinates [i*q, (i+1)*q), one per field value; coordinate = i*q + value.
/// `columns` carries the block labels (evaluation-point indices for the
/// Reed-Solomon codes, affine-point indices for the curve codes).
struct GridIndex {
    int q = 0;
    std::vector<int> columns;

    int cols() const { return static_cast<int>(columns.size()); }
    int n() const { return q * cols(); }
    int coord(int col_pos, int value) const { return col_pos * q + value; }
};

/// A set of constant-weight codewords with the declared (n, d_claimed, w)
/// and provenance metadata carried as comment lines of the .cwc format.
struct CodeBook {
    int n = 0;
    int w = 0;
    int d_claimed = 0;
    std::vector<Codeword> words;
    std::vector<std::string> meta;

    long long size() const { return static_cast<long long>(words.size()); }
};

} // namespace cwc
