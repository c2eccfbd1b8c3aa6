#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/bits.hpp"
#include "core/field.hpp"

namespace primanal {

// Per-block S-box, a validated bijection on {0, ..., 2^m - 1}.
struct SBoxTable {
    int m = 0;
    std::vector<uint32_t> table;

    SBoxTable() = default;
    SBoxTable(int m, std::vector<uint32_t> table);

    uint32_t size() const { return uint32_t{1} << m; }
    friend bool operator==(const SBoxTable& a, const SBoxTable& b) = default;
};

// Splitting of the state into n_t blocks of m bits each; block i occupies
// bits [i*m, (i+1)*m).
struct Partition {
    int n_t = 0;
    int m = 0;

    int n_b() const { return n_t * m; }
};

// Key-alternating round permutation: per-block S-boxes followed by a linear
// mixing layer, then key addition. The mixing layer is stored with its
// inverse, both validated at construction.
struct CipherSpec {
    std::string name;
    Partition part;
    std::vector<SBoxTable> sboxes;  // one per block
    BitMatrix lambda;
    BitMatrix lambda_inv;

    int n_b() const { return part.n_b(); }
};

CipherSpec make_cipher(std::string name, Partition part, std::vector<SBoxTable> sboxes,
                       BitMatrix lambda);

uint32_t project_block(const CipherSpec& spec, const BitVec& v, int i);
BitVec apply_gamma(const CipherSpec& spec, const BitVec& v);
BitVec apply_rho(const CipherSpec& spec, const BitVec& v);
// One round: S-box layer, mixing layer, then XOR of the round key.
BitVec round_function(const CipherSpec& spec, const BitVec& v, const BitVec& k);
BitVec encrypt(const CipherSpec& spec, const BitVec& v, const std::vector<BitVec>& keys);

// The basis translations; together with the round permutation they generate
// the round-function group.
std::vector<BitVec> translation_generators(int width);

// Full permutation table of the keyless round (n_b <= 16).
std::vector<uint32_t> rho_table(const CipherSpec& spec);

// Indices of one representative per distinct S-box table.
std::vector<int> distinct_sbox_indices(const CipherSpec& spec);

enum class SBoxKind { Inversion, Random, Identity };
enum class LambdaKind { Identity, Rotate, Random, Mix };

// 16-byte AES round: field inversion per byte, then one 128x128 GF(2) matrix
// combining the S-box linear map, ShiftRows and MixColumns. The affine
// constant of the S-box is folded into key addition and does not appear here.
CipherSpec aes_spec();

// Desk-scale instances, n_t * m <= 16. Random components are seeded.
CipherSpec toy_spec(int n_t, int m, SBoxKind sbox_kind, LambdaKind lambda_kind, uint64_t seed);

// "aes" or "toy:<n_t>x<m>:<sbox>:<lambda>".
CipherSpec cipher_from_preset(const std::string& preset, uint64_t seed);

SBoxTable identity_sbox(int m);
SBoxTable inversion_sbox(int m);
SBoxTable random_sbox(int m, uint64_t seed);
BitMatrix random_invertible_matrix(int n, uint64_t seed);

}  // namespace primanal
