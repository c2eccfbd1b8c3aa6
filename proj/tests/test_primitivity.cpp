#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "core/blocksys.hpp"
#include "core/primitivity.hpp"
#include "core/rng.hpp"

using namespace primanal;

TEST_CASE("power condition") {
    CHECK(check_power_condition(inversion_sbox(8), 2));
    CHECK(check_power_condition(identity_sbox(4), 2));
    // the 3-cycle (1 2 3) fixing 0 has order 3
    const SBoxTable cyc(2, {0, 2, 3, 1});
    CHECK_FALSE(check_power_condition(cyc, 2));
    CHECK(check_power_condition(cyc, 3));
    // 0 must be fixed regardless of the order
    CHECK_FALSE(check_power_condition(SBoxTable(2, {1, 0, 2, 3}), 2));
}

TEST_CASE("differential image sizes") {
    const SBoxTable inv8 = inversion_sbox(8);
    for (uint32_t a = 1; a < 256; ++a) {
        CHECK(differential_image_size(inv8, a) == 127);
    }

    const SBoxTable inv3 = inversion_sbox(3);
    CHECK(differential_image_size(inv3, 1) == 4);  // image {1,3,5,7}

    const SBoxTable id4 = identity_sbox(4);
    for (uint32_t a = 1; a < 16; ++a) {
        CHECK(differential_image_size(id4, a) == 1);
    }
    CHECK_THROWS_AS(differential_image_size(id4, 0), std::invalid_argument);
}

TEST_CASE("difference map is constant on pairs, so image size <= 2^(m-1)") {
    Rng rng(4);
    for (int m : {3, 4, 6}) {
        const SBoxTable sbox = random_sbox(m, rng.next());
        for (uint32_t a = 1; a < sbox.size(); ++a) {
            CHECK(differential_image_size(sbox, a) <= static_cast<int>(sbox.size() / 2));
        }
    }
}

TEST_CASE("involution S-boxes give the same image sizes as their inverses") {
    for (int m : {3, 4, 8}) {
        const SBoxTable sbox = inversion_sbox(m);
        SBoxTable inverse_perm = sbox;
        for (uint32_t x = 0; x < sbox.size(); ++x) inverse_perm.table[sbox.table[x]] = x;
        CHECK(inverse_perm.table == sbox.table);  // involution
        for (uint32_t a = 1; a < sbox.size(); ++a) {
            CHECK(differential_image_size(sbox, a) == differential_image_size(inverse_perm, a));
        }
    }
}

TEST_CASE("image-size dichotomy for inversion: 2^(m-1)-1 even m, 2^(m-1) odd m") {
    for (int m : {2, 3, 4, 8}) {
        const SBoxTable sbox = inversion_sbox(m);
        const int expected = (m % 2 == 0) ? (1 << (m - 1)) - 1 : (1 << (m - 1));
        for (uint32_t a = 1; a < sbox.size(); ++a) {
            CHECK(differential_image_size(sbox, a) == expected);
        }
    }
}

TEST_CASE("largest admissible r") {
    CHECK(max_certifiable_r(inversion_sbox(8), 2) == 3);  // 127 > 2^4, r < 4
    CHECK(max_certifiable_r(inversion_sbox(3), 2) == 1);  // 4 > 2, r < 1.5
    CHECK_FALSE(max_certifiable_r(identity_sbox(4), 2).has_value());
}

TEST_CASE("invariant subspaces within a codimension bound") {
    // inversion on GF(2^8): nothing within codimension 2
    CHECK(invariant_subspaces_up_to_codim(inversion_sbox(8), 2).empty());

    // inversion on GF(2^3): exactly {0,1}
    const auto found3 = invariant_subspaces_up_to_codim(inversion_sbox(3), 2);
    REQUIRE(found3.size() == 1);
    CHECK(found3[0] == subspace_from_generators(3, {BitVec(3, 1)}));

    // identity: every hyperplane is invariant
    const auto hyper = invariant_subspaces_up_to_codim(identity_sbox(4), 1);
    CHECK(hyper.size() == 15);

    CHECK_THROWS_AS(invariant_subspaces_up_to_codim(identity_sbox(4), 4),
                    std::invalid_argument);
}

TEST_CASE("lambda-invariant block sums") {
    const CipherSpec id = toy_spec(2, 3, SBoxKind::Identity, LambdaKind::Identity, 1);
    const auto sums_id = lambda_invariant_block_sums(id.lambda, id.part);
    REQUIRE(sums_id.size() == 2);
    CHECK(sums_id[0] == std::vector<int>{0});
    CHECK(sums_id[1] == std::vector<int>{1});

    // block swap: V_0 maps onto V_1 and back, neither alone is invariant
    const CipherSpec rot = toy_spec(2, 3, SBoxKind::Identity, LambdaKind::Rotate, 1);
    CHECK(lambda_invariant_block_sums(rot.lambda, rot.part).empty());

    const CipherSpec mix = toy_spec(4, 3, SBoxKind::Identity, LambdaKind::Mix, 1);
    CHECK(lambda_invariant_block_sums(mix.lambda, mix.part).empty());
}

TEST_CASE("AES preset certifies as primitive with r = 1") {
    const PrimitivityReport rep = verify_primitivity(aes_spec(), 2);
    CHECK(rep.certified);
    CHECK(rep.verdict == "CERTIFIED_PRIMITIVE");
    REQUIRE(rep.achieved_r.has_value());
    CHECK(*rep.achieved_r == 1);
    CHECK(rep.min_image_size == 127);
    CHECK(rep.condition1_pass);
    CHECK(rep.invariant_subspaces_found.empty());
    CHECK(rep.lambda_invariant_sums.empty());
}

TEST_CASE("single-block inversion toy is inconclusive with the codim-2 witness") {
    const CipherSpec spec = toy_spec(1, 3, SBoxKind::Inversion, LambdaKind::Identity, 1);
    const PrimitivityReport rep = verify_primitivity(spec, 2);
    CHECK_FALSE(rep.certified);
    CHECK(rep.verdict == "INCONCLUSIVE");
    CHECK(rep.single_block_policy_fail);
    REQUIRE(rep.invariant_subspaces_found.size() == 1);
    CHECK(rep.invariant_subspaces_found[0].second ==
          subspace_from_generators(3, {BitVec(3, 1)}));
}

TEST_CASE("identity S-box layer is inconclusive: no admissible r") {
    const CipherSpec spec = toy_spec(2, 3, SBoxKind::Identity, LambdaKind::Rotate, 1);
    const PrimitivityReport rep = verify_primitivity(spec, 2);
    CHECK_FALSE(rep.certified);
    CHECK_FALSE(rep.max_image_r.has_value());
    CHECK_FALSE(rep.achieved_r.has_value());
}

TEST_CASE("a certificate implies the constructive search finds nothing") {
    // every toy where the certificate succeeds must have no block system
    const std::vector<CipherSpec> specs = {
        toy_spec(2, 4, SBoxKind::Inversion, LambdaKind::Mix, 2),
        toy_spec(3, 4, SBoxKind::Inversion, LambdaKind::Mix, 3),
        toy_spec(2, 3, SBoxKind::Inversion, LambdaKind::Rotate, 4),
        toy_spec(4, 2, SBoxKind::Inversion, LambdaKind::Mix, 5),
    };
    for (const CipherSpec& spec : specs) {
        const PrimitivityReport rep = verify_primitivity(spec, 2);
        if (rep.certified) {
            CHECK_FALSE(find_linear_block_systems(spec).exists_nontrivial);
        }
    }
}

TEST_CASE("per-block distinct S-boxes are all checked") {
    // one good box and one identity box: the identity's image size drags the
    // whole cipher down to inconclusive
    std::vector<SBoxTable> boxes = {inversion_sbox(3), identity_sbox(3)};
    const CipherSpec spec = make_cipher("mixed", Partition{2, 3}, boxes,
                                        random_invertible_matrix(6, 99));
    const PrimitivityReport rep = verify_primitivity(spec, 2);
    CHECK_FALSE(rep.certified);
    CHECK(rep.min_image_size == 1);
    CHECK(rep.per_sbox_min_image.size() == 2);
}
