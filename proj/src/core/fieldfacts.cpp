#include "core/fieldfacts.hpp"

namespace primanal {

std::vector<uint32_t> solve_difference_equation(const FieldSpec& f, uint32_t a, uint32_t b) {
    if (a == 0 || a >= f.size() || b >= f.size()) {
        throw std::invalid_argument("solve_difference_equation: need a != 0 in the field");
    }
    const std::vector<uint32_t> inv = inversion_table(f);
    std::vector<uint32_t> solutions;
    for (uint32_t x = 0; x < f.size(); ++x) {
        if ((inv[x ^ a] ^ inv[x]) == b) solutions.push_back(x);
    }
    return solutions;
}

bool hua_identity_check(const FieldSpec& f, uint32_t a, uint32_t b) {
    if (a == 0 || b == 0 || a >= f.size() || b >= f.size() || field_mul(f, a, b) == 1) {
        throw std::invalid_argument("hua_identity_check: need a, b nonzero with a*b != 1");
    }
    const uint32_t inner = field_inv(f, a ^ field_inv(f, b)) ^ field_inv(f, a);
    const uint32_t lhs = a ^ field_inv(f, inner);
    const uint32_t rhs = field_mul(f, field_mul(f, a, b), a);
    return lhs == rhs;
}

bool is_subfield(const Subspace& s, const FieldSpec& f) {
    if (s.is_zero()) throw std::invalid_argument("is_subfield: subspace must be nonzero");
    if (!subspace_contains(s, BitVec(s.width, 1))) return false;
    const std::vector<BitVec> elems = subspace_elements(s);
    for (const BitVec& x : elems) {
        for (const BitVec& y : elems) {
            const uint32_t p = field_mul(f, static_cast<uint32_t>(x.bits),
                                         static_cast<uint32_t>(y.bits));
            if (!subspace_contains(s, BitVec(s.width, p))) return false;
        }
    }
    return true;
}

SubfieldCatalog inversion_closed_subspaces(const FieldSpec& f, uint64_t budget) {
    SubfieldCatalog cat;
    cat.m = f.m;
    cat.poly = f.poly;
    const u128 total = count_all_subspaces(f.m);
    if (total > budget) {
        throw EnumerationTooLargeError("full subspace sweep over budget: " +
                                       u128_to_string(total));
    }
    cat.subspaces_swept = total;

    const std::vector<uint32_t> inv = inversion_table(f);
    for (int k = 1; k <= f.m; ++k) {
        SubspaceEnumerator en(f.m, k, budget);
        Subspace s;
        while (en.next(s)) {
            bool closed = true;
            BitVec x = BitVec::zero(f.m);
            const uint64_t count = uint64_t{1} << k;
            for (uint64_t i = 1; i < count && closed; ++i) {
                x.bits ^= s.basis[__builtin_ctzll(i)].bits;
                closed = subspace_contains(s, BitVec(f.m, inv[static_cast<uint32_t>(x.bits)]));
            }
            if (closed) {
                cat.entries.push_back({s, is_subfield(s, f)});
            }
        }
    }
    cat.all_subfields = true;
    for (const auto& e : cat.entries) {
        if (!e.subfield) cat.all_subfields = false;
    }
    return cat;
}

HuaSweep hua_sweep_exhaustive(const FieldSpec& f) {
    HuaSweep sweep;
    for (uint32_t a = 1; a < f.size(); ++a) {
        for (uint32_t b = 1; b < f.size(); ++b) {
            if (field_mul(f, a, b) == 1) continue;
            ++sweep.checked;
            if (hua_identity_check(f, a, b)) ++sweep.passed;
        }
    }
    return sweep;
}

AppendixReport run_field_appendix(int m, uint64_t budget) {
    const FieldSpec f = FieldSpec::standard(m);
    AppendixReport rep;
    rep.catalog = inversion_closed_subspaces(f, budget);
    rep.hua = hua_sweep_exhaustive(f);
    return rep;
}

}  // namespace primanal
