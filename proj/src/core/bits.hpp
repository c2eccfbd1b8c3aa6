#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "core/errors.hpp"

namespace primanal {

// All state vectors live in GF(2)^n with n <= 128; coordinate i of a vector
// is bit i of a 128-bit word, so blocks of a partitioned state occupy
// contiguous bit ranges and projections are shift-and-mask.
using u128 = unsigned __int128;

constexpr int kMaxWidth = 128;

inline u128 width_mask(int width) {
    return width >= 128 ? ~u128{0} : ((u128{1} << width) - 1);
}

inline int popcount128(u128 x) {
    return __builtin_popcountll(static_cast<uint64_t>(x)) +
           __builtin_popcountll(static_cast<uint64_t>(x >> 64));
}

// Lowest set bit; precondition x != 0.
inline int ctz128(u128 x) {
    const uint64_t lo = static_cast<uint64_t>(x);
    if (lo) return __builtin_ctzll(lo);
    return 64 + __builtin_ctzll(static_cast<uint64_t>(x >> 64));
}

inline int parity128(u128 x) {
    return (__builtin_popcountll(static_cast<uint64_t>(x)) ^
            __builtin_popcountll(static_cast<uint64_t>(x >> 64))) &
           1;
}

struct BitVec {
    int width = 0;
    u128 bits = 0;

    BitVec() = default;
    BitVec(int w, u128 b) : width(w), bits(b & width_mask(w)) {
        if (w < 1 || w > kMaxWidth) throw std::invalid_argument("BitVec width out of range");
    }

    static BitVec zero(int w) { return BitVec(w, 0); }
    static BitVec unit(int w, int i) { return BitVec(w, u128{1} << i); }

    bool get(int i) const { return (bits >> i) & 1; }
    bool is_zero() const { return bits == 0; }

    friend bool operator==(const BitVec& a, const BitVec& b) = default;
};

inline BitVec vec_add(const BitVec& a, const BitVec& b) {
    if (a.width != b.width) throw std::invalid_argument("vec_add: width mismatch");
    return BitVec(a.width, a.bits ^ b.bits);
}

inline BitVec operator^(const BitVec& a, const BitVec& b) { return vec_add(a, b); }

inline int dot(const BitVec& a, const BitVec& b) {
    if (a.width != b.width) throw std::invalid_argument("dot: width mismatch");
    return parity128(a.bits & b.bits);
}

// Hex rendering, most-significant bit = highest coordinate, zero-padded to
// ceil(width/4) digits.
std::string to_hex(const BitVec& v);
BitVec vec_from_hex(int width, std::string_view hex);

// Row-major matrix over GF(2); application is row-vector times matrix, so
// row i is the image of basis vector e_i and composition reads left to right.
struct BitMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<BitVec> row;

    static BitMatrix zero(int r, int c);
    static BitMatrix identity(int n);

    friend bool operator==(const BitMatrix& a, const BitMatrix& b) = default;
};

BitVec mat_apply(const BitMatrix& m, const BitVec& v);
BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);
BitMatrix mat_invert(const BitMatrix& m);  // throws SingularMatrixError
bool mat_is_invertible(const BitMatrix& m);

std::vector<std::string> mat_hex_rows(const BitMatrix& m);
BitMatrix mat_from_hex_rows(int cols, const std::vector<std::string>& rows);

}  // namespace primanal
