#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "core/fieldfacts.hpp"
#include "core/rng.hpp"

using namespace primanal;

TEST_CASE("difference equation: four solutions exactly at b = a^{-1}, even degree") {
    const FieldSpec f8 = FieldSpec::standard(8);
    const uint32_t c = *cube_root_of_unity(f8);
    for (uint32_t a : {1u, 2u, 0x53u, 0xffu}) {
        const auto sols = solve_difference_equation(f8, a, field_inv(f8, a));
        REQUIRE(sols.size() == 4);
        std::vector<uint32_t> expected = {0, a, field_mul(f8, a, c),
                                          field_mul(f8, a, field_mul(f8, c, c))};
        std::sort(expected.begin(), expected.end());
        CHECK(sols == expected);
    }
}

TEST_CASE("difference equation in GF(4): all four elements solve a=1, b=1") {
    const FieldSpec f4(2, 0x7);
    CHECK(inversion_table(f4) == std::vector<uint32_t>{0, 1, 3, 2});
    CHECK(solve_difference_equation(f4, 1, 1) == std::vector<uint32_t>{0, 1, 2, 3});
}

TEST_CASE("difference equation in GF(8): no subfield of order 4, so two solutions") {
    const FieldSpec f8_small(3, 0xb);
    CHECK(solve_difference_equation(f8_small, 1, 1) == std::vector<uint32_t>{0, 1});
    for (uint32_t a = 1; a < 8; ++a) {
        for (uint32_t b = 0; b < 8; ++b) {
            CHECK(solve_difference_equation(f8_small, a, b).size() <= 2);
        }
    }
    CHECK_THROWS_AS(solve_difference_equation(f8_small, 0, 1), std::invalid_argument);
}

TEST_CASE("solution counts are 0, 2 or 4 and sum to the field size per a") {
    for (int m : {2, 3, 4, 6}) {
        const FieldSpec f = FieldSpec::standard(m);
        for (uint32_t a = 1; a < f.size(); ++a) {
            uint64_t total = 0;
            for (uint32_t b = 0; b < f.size(); ++b) {
                const size_t n = solve_difference_equation(f, a, b).size();
                CHECK((n == 0 || n == 2 || n == 4));
                if (n == 4) CHECK(b == field_inv(f, a));
                total += n;
            }
            CHECK(total == f.size());  // the difference map is total
        }
    }
}

TEST_CASE("Hua identity on the worked GF(8) instance") {
    const FieldSpec f(3, 0xb);
    // a=2, b=3: both sides come to 7
    const uint32_t inner = field_inv(f, 2 ^ field_inv(f, 3)) ^ field_inv(f, 2);
    CHECK((2 ^ field_inv(f, inner)) == 7);
    CHECK(field_mul(f, field_mul(f, 2, 3), 2) == 7);
    CHECK(hua_identity_check(f, 2, 3));
}

TEST_CASE("Hua identity at b = 1 is the squaring map") {
    for (int m : {3, 4, 8}) {
        const FieldSpec f = FieldSpec::standard(m);
        for (uint32_t a = 2; a < f.size(); ++a) {
            // a*1*a = a^2 and the identity must hold (a*1 != 1 since a != 1)
            CHECK(hua_identity_check(f, a, 1));
        }
    }
}

TEST_CASE("Hua identity preconditions") {
    const FieldSpec f = FieldSpec::standard(4);
    CHECK_THROWS_AS(hua_identity_check(f, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(hua_identity_check(f, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(hua_identity_check(f, 2, field_inv(f, 2)), std::invalid_argument);
}

TEST_CASE("Hua sweep is exhaustive and all-pass in GF(16)") {
    const FieldSpec f = FieldSpec::standard(4);
    const HuaSweep sweep = hua_sweep_exhaustive(f);
    CHECK(sweep.checked == 15 * 15 - 15);  // b = a^{-1} excluded per a
    CHECK(sweep.passed == sweep.checked);
}

TEST_CASE("subfield test") {
    const FieldSpec f4(2, 0x7);
    CHECK(is_subfield(subspace_from_generators(2, {BitVec(2, 1)}), f4));     // {0,1}
    CHECK_FALSE(is_subfield(subspace_from_generators(2, {BitVec(2, 2)}), f4));  // 1 missing
    CHECK_THROWS_AS(is_subfield(zero_subspace(2), f4), std::invalid_argument);
}

TEST_CASE("inversion-closed subspace catalogs per degree") {
    // GF(2^3): only GF(2) and the field itself
    const SubfieldCatalog c3 = inversion_closed_subspaces(FieldSpec::standard(3));
    REQUIRE(c3.entries.size() == 2);
    CHECK(c3.entries[0].subspace.dim() == 1);
    CHECK(c3.entries[1].subspace.dim() == 3);
    CHECK(c3.all_subfields);

    // GF(2^4): dimensions 1, 2, 4; the dim-2 entry is the copy of GF(4)
    const SubfieldCatalog c4 = inversion_closed_subspaces(FieldSpec::standard(4));
    REQUIRE(c4.entries.size() == 3);
    CHECK(c4.entries[0].subspace.dim() == 1);
    CHECK(c4.entries[1].subspace.dim() == 2);
    CHECK(c4.entries[2].subspace.dim() == 4);
    CHECK(c4.all_subfields);
    CHECK(c4.subspaces_swept == 67);  // 1+15+35+15+1

    // dimensions of inversion-closed subspaces divide the degree
    for (int m : {2, 3, 4, 5, 6}) {
        const SubfieldCatalog cat = inversion_closed_subspaces(FieldSpec::standard(m));
        for (const auto& e : cat.entries) {
            CHECK(m % e.subspace.dim() == 0);
            CHECK(e.subfield);
        }
    }
}

TEST_CASE("appendix report for a small degree") {
    const AppendixReport rep = run_field_appendix(4);
    CHECK(rep.catalog.all_subfields);
    CHECK(rep.hua.passed == rep.hua.checked);
}
