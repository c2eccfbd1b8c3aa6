#include "core/field.hpp"

namespace primanal {

namespace {

int poly_degree(uint32_t p) {
    return 31 - __builtin_clz(p);  // p != 0
}

uint32_t poly_mod(uint32_t a, uint32_t q) {
    const int dq = poly_degree(q);
    while (a != 0 && poly_degree(a) >= dq) {
        a ^= q << (poly_degree(a) - dq);
    }
    return a;
}

}  // namespace

bool poly_is_irreducible(uint32_t poly, int degree) {
    if (poly == 0 || poly_degree(poly) != degree) return false;
    if ((poly & 1) == 0) return false;  // divisible by x
    for (int d = 1; d <= degree / 2; ++d) {
        for (uint32_t q = uint32_t{1} << d; q < (uint32_t{2} << d); ++q) {
            if (poly_mod(poly, q) == 0) return false;
        }
    }
    return true;
}

FieldSpec::FieldSpec(int m_, uint32_t poly_) : m(m_), poly(poly_) {
    if (m < 2 || m > 8) throw std::invalid_argument("FieldSpec: m must be in 2..8");
    if (!poly_is_irreducible(poly, m)) {
        throw std::invalid_argument("FieldSpec: reduction polynomial not irreducible of degree m");
    }
}

FieldSpec FieldSpec::standard(int m) {
    switch (m) {
        case 2: return FieldSpec(2, 0x7);     // x^2+x+1
        case 3: return FieldSpec(3, 0xb);     // x^3+x+1
        case 4: return FieldSpec(4, 0x13);    // x^4+x+1
        case 5: return FieldSpec(5, 0x25);    // x^5+x^2+1
        case 6: return FieldSpec(6, 0x43);    // x^6+x+1
        case 7: return FieldSpec(7, 0x83);    // x^7+x+1
        case 8: return FieldSpec(8, 0x11b);   // x^8+x^4+x^3+x+1 (Rijndael)
        default: throw std::invalid_argument("FieldSpec::standard: m must be in 2..8");
    }
}

uint32_t field_mul(const FieldSpec& f, uint32_t a, uint32_t b) {
    if (a >= f.size() || b >= f.size()) throw std::invalid_argument("field_mul: element out of range");
    uint32_t r = 0;
    for (int i = 0; i < f.m; ++i) {
        if ((b >> i) & 1) r ^= a << i;
    }
    for (int bit = 2 * f.m - 2; bit >= f.m; --bit) {
        if ((r >> bit) & 1) r ^= f.poly << (bit - f.m);
    }
    return r;
}

uint32_t field_pow(const FieldSpec& f, uint32_t a, uint32_t e) {
    uint32_t r = 1, base = a;
    while (e) {
        if (e & 1) r = field_mul(f, r, base);
        base = field_mul(f, base, base);
        e >>= 1;
    }
    return r;
}

uint32_t field_inv(const FieldSpec& f, uint32_t a) {
    if (a >= f.size()) throw std::invalid_argument("field_inv: element out of range");
    if (a == 0) return 0;
    return field_pow(f, a, f.size() - 2);
}

std::vector<uint32_t> inversion_table(const FieldSpec& f) {
    std::vector<uint32_t> t(f.size());
    for (uint32_t x = 0; x < f.size(); ++x) t[x] = field_inv(f, x);
    return t;
}

std::optional<uint32_t> cube_root_of_unity(const FieldSpec& f) {
    for (uint32_t x = 2; x < f.size(); ++x) {
        if (field_pow(f, x, 3) == 1) return x;
    }
    return std::nullopt;
}

}  // namespace primanal
