#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/errors.hpp"

namespace primanal {

// GF(2^m), 2 <= m <= 8, elements encoded as m-bit coefficient vectors
// (bit i = coefficient of x^i). The reduction polynomial is validated to be
// irreducible at construction by trial division.
struct FieldSpec {
    int m;
    uint32_t poly;  // (m+1)-bit reduction polynomial

    FieldSpec(int m, uint32_t poly);
    static FieldSpec standard(int m);  // conventional polynomial per degree

    uint32_t size() const { return uint32_t{1} << m; }
};

bool poly_is_irreducible(uint32_t poly, int degree);

uint32_t field_mul(const FieldSpec& f, uint32_t a, uint32_t b);
uint32_t field_pow(const FieldSpec& f, uint32_t a, uint32_t e);
// a^(2^m - 2); maps 0 to 0 and nonzero a to its multiplicative inverse.
uint32_t field_inv(const FieldSpec& f, uint32_t a);

// Lookup table x -> field_inv(x); the inversion S-box.
std::vector<uint32_t> inversion_table(const FieldSpec& f);

// An element of multiplicative order 3; exists iff m is even.
std::optional<uint32_t> cube_root_of_unity(const FieldSpec& f);

}  // namespace primanal
