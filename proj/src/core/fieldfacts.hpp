#pragma once

#include <cstdint>
#include <vector>

#include "core/field.hpp"
#include "core/subspace.hpp"

namespace primanal {

// Exhaustive solution set of (x + a)^{-1} + x^{-1} = b over GF(2^m), with
// the S-box convention 0^{-1} = 0. a != 0.
std::vector<uint32_t> solve_difference_equation(const FieldSpec& f, uint32_t a, uint32_t b);

// a + ((a + b^{-1})^{-1} + a^{-1})^{-1} == a*b*a, for a, b nonzero with
// a*b != 1 (subtraction is XOR in characteristic 2; the proviso keeps every
// inner inverse away from 0).
bool hua_identity_check(const FieldSpec& f, uint32_t a, uint32_t b);

struct SubfieldCatalogEntry {
    Subspace subspace;
    bool subfield = false;  // contains 1 and closed under multiplication
};

struct SubfieldCatalog {
    int m = 0;
    uint32_t poly = 0;
    std::vector<SubfieldCatalogEntry> entries;  // nonzero inversion-closed subspaces
    u128 subspaces_swept = 0;
    bool all_subfields = false;
};

// Sweeps every subspace of GF(2)^m and keeps the nonzero ones closed under
// inversion, tagging each with the subfield test.
SubfieldCatalog inversion_closed_subspaces(const FieldSpec& f,
                                           uint64_t budget = kDefaultEnumBudget);

// 1 in S and S closed under field multiplication, pairwise over elements.
bool is_subfield(const Subspace& s, const FieldSpec& f);

struct HuaSweep {
    uint64_t checked = 0;
    uint64_t passed = 0;
};

// Every valid (a, b) pair in the field.
HuaSweep hua_sweep_exhaustive(const FieldSpec& f);

struct AppendixReport {
    SubfieldCatalog catalog;
    HuaSweep hua;
};

AppendixReport run_field_appendix(int m, uint64_t budget = kDefaultEnumBudget);

}  // namespace primanal
