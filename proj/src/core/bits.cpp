#include "core/bits.hpp"

#include <algorithm>

namespace primanal {

std::string to_hex(const BitVec& v) {
    const int digits = (v.width + 3) / 4;
    std::string s(digits, '0');
    static const char* kHex = "0123456789abcdef";
    for (int d = 0; d < digits; ++d) {
        const unsigned nib = static_cast<unsigned>((v.bits >> (4 * d)) & 0xf);
        s[digits - 1 - d] = kHex[nib];
    }
    return s;
}

BitVec vec_from_hex(int width, std::string_view hex) {
    if (hex.size() >= 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X')) {
        hex.remove_prefix(2);
    }
    if (hex.empty() || hex.size() > 32) throw std::invalid_argument("bad hex vector");
    u128 bits = 0;
    for (char c : hex) {
        int nib;
        if (c >= '0' && c <= '9') nib = c - '0';
        else if (c >= 'a' && c <= 'f') nib = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') nib = c - 'A' + 10;
        else throw std::invalid_argument("bad hex digit in vector");
        bits = (bits << 4) | static_cast<unsigned>(nib);
    }
    if (bits != (bits & width_mask(width))) {
        throw std::invalid_argument("hex vector exceeds width");
    }
    return BitVec(width, bits);
}

BitMatrix BitMatrix::zero(int r, int c) {
    BitMatrix m;
    m.rows = r;
    m.cols = c;
    m.row.assign(r, BitVec::zero(c));
    return m;
}

BitMatrix BitMatrix::identity(int n) {
    BitMatrix m = zero(n, n);
    for (int i = 0; i < n; ++i) m.row[i] = BitVec::unit(n, i);
    return m;
}

BitVec mat_apply(const BitMatrix& m, const BitVec& v) {
    if (v.width != m.rows) throw std::invalid_argument("mat_apply: dimension mismatch");
    u128 acc = 0;
    u128 bits = v.bits;
    while (bits) {
        const int i = ctz128(bits);
        bits &= bits - 1;
        acc ^= m.row[i].bits;
    }
    return BitVec(m.cols, acc);
}

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("mat_mul: dimension mismatch");
    BitMatrix out = BitMatrix::zero(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i) out.row[i] = mat_apply(b, a.row[i]);
    return out;
}

// Gauss-Jordan on [M | I].
BitMatrix mat_invert(const BitMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("mat_invert: matrix not square");
    const int n = m.rows;
    std::vector<u128> left(n), right(n);
    for (int i = 0; i < n; ++i) {
        left[i] = m.row[i].bits;
        right[i] = u128{1} << i;
    }
    int r = 0;
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int i = r; i < n; ++i) {
            if ((left[i] >> c) & 1) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) throw SingularMatrixError("matrix is singular");
        std::swap(left[r], left[pivot]);
        std::swap(right[r], right[pivot]);
        for (int i = 0; i < n; ++i) {
            if (i != r && ((left[i] >> c) & 1)) {
                left[i] ^= left[r];
                right[i] ^= right[r];
            }
        }
        ++r;
    }
    BitMatrix inv = BitMatrix::zero(n, n);
    for (int i = 0; i < n; ++i) inv.row[i] = BitVec(n, right[i]);
    return inv;
}

bool mat_is_invertible(const BitMatrix& m) {
    if (m.rows != m.cols) return false;
    try {
        mat_invert(m);
        return true;
    } catch (const SingularMatrixError&) {
        return false;
    }
}

std::vector<std::string> mat_hex_rows(const BitMatrix& m) {
    std::vector<std::string> out;
    out.reserve(m.rows);
    for (const auto& r : m.row) out.push_back(to_hex(r));
    return out;
}

BitMatrix mat_from_hex_rows(int cols, const std::vector<std::string>& rows) {
    BitMatrix m;
    m.rows = static_cast<int>(rows.size());
    m.cols = cols;
    m.row.reserve(rows.size());
    for (const auto& s : rows) m.row.push_back(vec_from_hex(cols, s));
    return m;
}

}  // namespace primanal
