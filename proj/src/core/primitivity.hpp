#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/cipher.hpp"
#include "core/subspace.hpp"

namespace primanal {

// Sufficient-condition certificate. The checks can certify primitivity of
// the group generated by the round functions; when any check fails the
// verdict is INCONCLUSIVE, never "imprimitive" (constructive block-system
// search is a separate analysis).
struct PrimitivityReport {
    std::string cipher_name;
    int s = 2;
    int n_t = 0;
    int m = 0;

    bool condition1_pass = false;
    std::vector<std::pair<int, int>> per_sbox_min_image;  // (sbox index, min image size)
    int min_image_size = 0;
    // Largest r in [1, ceil(m/s)-1) range with image sizes above 2^(m-r-1).
    std::optional<int> max_image_r;
    // r used for the certificate when all three conditions hold.
    std::optional<int> achieved_r;
    // Offending S-box-invariant subspaces of codimension <= s*r, per S-box.
    std::vector<std::pair<int, Subspace>> invariant_subspaces_found;
    std::vector<std::vector<int>> lambda_invariant_sums;
    bool single_block_policy_fail = false;

    bool certified = false;
    std::string verdict;  // "CERTIFIED_PRIMITIVE" | "INCONCLUSIVE"
    std::string reason;
};

// table[0] == 0 and the s-fold composition of the table is the identity.
bool check_power_condition(const SBoxTable& sbox, int s);

// |{ table[x^a] ^ table[x] }| over all x; a != 0.
int differential_image_size(const SBoxTable& sbox, uint32_t a);

// Largest r with 1 <= r < m/s whose image-size bound 2^(m-r-1) is cleared by
// every nonzero difference; nullopt if none.
std::optional<int> max_certifiable_r(const SBoxTable& sbox, int s);

// Every proper nonzero subspace of GF(2)^m of codimension <= c mapped onto
// itself by the S-box, found by enumerating dual subspaces of dimension
// 1..c. Invariance is tested pointwise on all elements (the map is
// nonlinear). Canonically ordered.
std::vector<Subspace> invariant_subspaces_up_to_codim(const SBoxTable& sbox, int c,
                                                      uint64_t budget = kDefaultEnumBudget);

// Every nonempty proper subset S of blocks whose direct sum is mapped into
// itself by the mixing layer (n_t <= 24).
std::vector<std::vector<int>> lambda_invariant_block_sums(const BitMatrix& lambda,
                                                          const Partition& part);

PrimitivityReport verify_primitivity(const CipherSpec& spec, int s,
                                     uint64_t budget = kDefaultEnumBudget);

}  // namespace primanal
