#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/bits.hpp"
#include "core/rng.hpp"

using namespace primanal;

TEST_CASE("vector addition is coordinatewise XOR") {
    CHECK(vec_add(BitVec(3, 0b101), BitVec(3, 0b011)) == BitVec(3, 0b110));
    CHECK(vec_add(BitVec(8, 0xab), BitVec(8, 0xab)) == BitVec::zero(8));
    CHECK(vec_add(BitVec(8, 0xab), BitVec::zero(8)) == BitVec(8, 0xab));
    CHECK_THROWS_AS(vec_add(BitVec(3, 1), BitVec(4, 1)), std::invalid_argument);
}

TEST_CASE("bits above the width are masked away") {
    CHECK(BitVec(4, 0xff).bits == 0xf);
    CHECK(BitVec(128, ~u128{0}).bits == ~u128{0});
    CHECK_THROWS_AS(BitVec(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(BitVec(129, 0), std::invalid_argument);
}

TEST_CASE("128-bit helpers") {
    const u128 hi = u128{1} << 100;
    CHECK(popcount128(hi | 1) == 2);
    CHECK(ctz128(hi) == 100);
    CHECK(parity128(hi | 1) == 0);
    CHECK(parity128(hi) == 1);
}

TEST_CASE("matrix application selects rows by the bits of v") {
    CHECK(mat_apply(BitMatrix::identity(4), BitVec(4, 0b1010)) == BitVec(4, 0b1010));
    CHECK(mat_apply(BitMatrix::zero(4, 4), BitVec(4, 0b1111)) == BitVec::zero(4));

    BitMatrix swap = BitMatrix::zero(2, 2);
    swap.row[0] = BitVec::unit(2, 1);
    swap.row[1] = BitVec::unit(2, 0);
    CHECK(mat_apply(swap, BitVec(2, 0b01)) == BitVec(2, 0b10));

    CHECK_THROWS_AS(mat_apply(swap, BitVec(3, 1)), std::invalid_argument);
}

TEST_CASE("matrix inversion") {
    CHECK(mat_invert(BitMatrix::identity(5)) == BitMatrix::identity(5));

    BitMatrix swap = BitMatrix::zero(2, 2);
    swap.row[0] = BitVec::unit(2, 1);
    swap.row[1] = BitVec::unit(2, 0);
    CHECK(mat_invert(swap) == swap);

    CHECK_THROWS_AS(mat_invert(BitMatrix::zero(2, 2)), SingularMatrixError);
}

TEST_CASE("random invertible matrices invert to the identity") {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(12));
        BitMatrix m = BitMatrix::zero(n, n);
        bool ok = false;
        while (!ok) {
            for (int i = 0; i < n; ++i) m.row[i] = BitVec(n, rng.next());
            ok = mat_is_invertible(m);
        }
        const BitMatrix inv = mat_invert(m);
        CHECK(mat_mul(m, inv) == BitMatrix::identity(n));
        CHECK(mat_mul(inv, m) == BitMatrix::identity(n));
    }
}

TEST_CASE("matrix multiplication composes applications left to right") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(10));
        BitMatrix a = BitMatrix::zero(n, n), b = BitMatrix::zero(n, n);
        for (int i = 0; i < n; ++i) {
            a.row[i] = BitVec(n, rng.next());
            b.row[i] = BitVec(n, rng.next());
        }
        const BitMatrix ab = mat_mul(a, b);
        const BitVec v(n, rng.next());
        CHECK(mat_apply(ab, v) == mat_apply(b, mat_apply(a, v)));
    }
}

TEST_CASE("hex rendering round trips, highest coordinate first") {
    CHECK(to_hex(BitVec(8, 0x09)) == "09");
    CHECK(to_hex(BitVec(12, 0xabc)) == "abc");
    CHECK(to_hex(BitVec(3, 0b101)) == "5");
    CHECK(vec_from_hex(8, "0x09") == BitVec(8, 9));
    CHECK(vec_from_hex(128, std::string(32, 'f')) == BitVec(128, ~u128{0}));
    CHECK_THROWS_AS(vec_from_hex(4, "ff"), std::invalid_argument);
    CHECK_THROWS_AS(vec_from_hex(4, "g"), std::invalid_argument);

    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const int w = 1 + static_cast<int>(rng.below(128));
        u128 bits = rng.next();
        bits |= static_cast<u128>(rng.next()) << 64;
        const BitVec v(w, bits);
        CHECK(vec_from_hex(w, to_hex(v)) == v);
    }
}
