#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "core/cipher.hpp"
#include "core/subspace.hpp"

namespace primanal {

// Cipher with a planted difference-invariant subspace U: in a basis adapted
// to U the S-box acts fiberwise over the quotient (a permutation g_w of U
// per quotient point w, and a permutation h of the quotient itself) and the
// mixing layer maps U into U. Invariance is verified exhaustively at build
// time.
struct TrapdoorSpec {
    CipherSpec cipher;
    Subspace planted;
    std::vector<uint32_t> quotient_perm;            // h, on 2^(n-d) points
    std::vector<std::vector<uint32_t>> fiber_perms; // g_w, each on 2^d points
    BitMatrix basis_change;                         // adapted basis -> standard
};

TrapdoorSpec build_trapdoor_cipher(int n_b, int d, uint64_t seed);

// Fraction of sampled (v, u) with u nonzero in U whose round-output
// difference stays in U. 1.0 exactly when U is difference-invariant.
double truncated_distinguisher(const CipherSpec& spec, const Subspace& u_space, int pair_count,
                               uint64_t seed);

struct AttackResult {
    BitVec recovered_key;
    uint64_t trial_count = 0;
    uint64_t theoretical_bound = 0;  // 2^(n-d) + 2^d; equals 2*2^(n/2) at d = n/2
};

// Known-plaintext key recovery against one round v -> rho(v) + k when the
// invariant subspace U is known: find the coset of k by scanning quotient
// representatives, then the key inside the coset. Trial count is bounded by
// 2^(n-d) + 2^d instead of 2^n.
AttackResult coset_key_recovery(const CipherSpec& spec, const Subspace& u_space,
                                const std::vector<std::pair<BitVec, BitVec>>& pairs);

struct TrapdoorDemoReport {
    int n_b = 0;
    int d = 0;
    uint64_t seed = 0;
    Subspace planted;
    int pair_count = 0;
    double distinguisher_trapdoor = 0.0;
    double distinguisher_control = 0.0;
    double control_baseline = 0.0;
    std::string control_name;
    AttackResult attack;
    BitVec withheld_key;
    u128 same_dim_subspace_count = 0;  // how many candidate U an outsider faces
};

TrapdoorDemoReport run_trapdoor_demo(int n_b, int d, uint64_t seed, int pair_count);

}  // namespace primanal
