#include "core/cipher.hpp"

#include <algorithm>

#include "core/rng.hpp"

namespace primanal {

SBoxTable::SBoxTable(int m_, std::vector<uint32_t> table_) : m(m_), table(std::move(table_)) {
    if (m < 1 || m > 16) throw std::invalid_argument("SBoxTable: m must be in 1..16");
    const uint32_t n = uint32_t{1} << m;
    if (table.size() != n) throw std::invalid_argument("SBoxTable: table size must be 2^m");
    std::vector<bool> seen(n, false);
    for (uint32_t x : table) {
        if (x >= n || seen[x]) throw std::invalid_argument("SBoxTable: table is not a bijection");
        seen[x] = true;
    }
}

CipherSpec make_cipher(std::string name, Partition part, std::vector<SBoxTable> sboxes,
                       BitMatrix lambda) {
    if (part.n_t < 1 || part.m < 1 || part.n_b() > kMaxWidth) {
        throw std::invalid_argument("cipher partition out of range");
    }
    if (static_cast<int>(sboxes.size()) != part.n_t) {
        throw std::invalid_argument("cipher needs one S-box per block");
    }
    for (const auto& s : sboxes) {
        if (s.m != part.m) throw std::invalid_argument("S-box width does not match partition");
    }
    if (lambda.rows != part.n_b() || lambda.cols != part.n_b()) {
        throw std::invalid_argument("mixing layer has wrong dimensions");
    }
    CipherSpec spec;
    spec.name = std::move(name);
    spec.part = part;
    spec.sboxes = std::move(sboxes);
    spec.lambda_inv = mat_invert(lambda);  // throws if singular
    spec.lambda = std::move(lambda);
    return spec;
}

uint32_t project_block(const CipherSpec& spec, const BitVec& v, int i) {
    if (i < 0 || i >= spec.part.n_t) throw std::invalid_argument("block index out of range");
    if (v.width != spec.n_b()) throw std::invalid_argument("state width mismatch");
    return static_cast<uint32_t>((v.bits >> (i * spec.part.m)) & width_mask(spec.part.m));
}

BitVec apply_gamma(const CipherSpec& spec, const BitVec& v) {
    if (v.width != spec.n_b()) throw std::invalid_argument("state width mismatch");
    const int m = spec.part.m;
    u128 out = 0;
    for (int i = 0; i < spec.part.n_t; ++i) {
        const uint32_t x = static_cast<uint32_t>((v.bits >> (i * m)) & width_mask(m));
        out |= static_cast<u128>(spec.sboxes[i].table[x]) << (i * m);
    }
    return BitVec(v.width, out);
}

BitVec apply_rho(const CipherSpec& spec, const BitVec& v) {
    return mat_apply(spec.lambda, apply_gamma(spec, v));
}

BitVec round_function(const CipherSpec& spec, const BitVec& v, const BitVec& k) {
    return vec_add(apply_rho(spec, v), k);
}

BitVec encrypt(const CipherSpec& spec, const BitVec& v, const std::vector<BitVec>& keys) {
    if (keys.empty()) throw std::invalid_argument("encrypt: key list is empty");
    BitVec state = v;
    for (const BitVec& k : keys) state = round_function(spec, state, k);
    return state;
}

std::vector<BitVec> translation_generators(int width) {
    std::vector<BitVec> gens;
    gens.reserve(width);
    for (int i = 0; i < width; ++i) gens.push_back(BitVec::unit(width, i));
    return gens;
}

std::vector<uint32_t> rho_table(const CipherSpec& spec) {
    const int n = spec.n_b();
    if (n > 16) throw std::invalid_argument("rho_table: state too wide to materialize");
    const uint32_t size = uint32_t{1} << n;
    std::vector<uint32_t> t(size);
    for (uint32_t x = 0; x < size; ++x) {
        t[x] = static_cast<uint32_t>(apply_rho(spec, BitVec(n, x)).bits);
    }
    return t;
}

std::vector<int> distinct_sbox_indices(const CipherSpec& spec) {
    std::vector<int> out;
    for (int i = 0; i < spec.part.n_t; ++i) {
        bool dup = false;
        for (int j : out) {
            if (spec.sboxes[i] == spec.sboxes[j]) {
                dup = true;
                break;
            }
        }
        if (!dup) out.push_back(i);
    }
    return out;
}

SBoxTable identity_sbox(int m) {
    std::vector<uint32_t> t(uint32_t{1} << m);
    for (uint32_t x = 0; x < t.size(); ++x) t[x] = x;
    return SBoxTable(m, std::move(t));
}

SBoxTable inversion_sbox(int m) {
    return SBoxTable(m, inversion_table(FieldSpec::standard(m)));
}

SBoxTable random_sbox(int m, uint64_t seed) {
    Rng rng(seed);
    return SBoxTable(m, rng.random_permutation(uint32_t{1} << m));
}

BitMatrix random_invertible_matrix(int n, uint64_t seed) {
    Rng rng(seed);
    for (;;) {
        BitMatrix m = BitMatrix::zero(n, n);
        for (int i = 0; i < n; ++i) {
            u128 bits = rng.next();
            if (n > 64) bits |= static_cast<u128>(rng.next()) << 64;
            m.row[i] = BitVec(n, bits);
        }
        if (mat_is_invertible(m)) return m;
    }
}

// ---------------------------------------------------------------------------
// AES preset
// ---------------------------------------------------------------------------

namespace {

uint32_t rotl8(uint32_t x, int r) { return ((x << r) | (x >> (8 - r))) & 0xff; }

// Linear part of the AES S-box affine map, one byte: output bit k is the XOR
// of input bits k, k+4, k+5, k+6, k+7 (mod 8), so e_i maps to 0x1f rotated
// left by i.
BitMatrix aes_sbox_linear_128() {
    BitMatrix m = BitMatrix::zero(128, 128);
    for (int byte = 0; byte < 16; ++byte) {
        for (int bit = 0; bit < 8; ++bit) {
            m.row[8 * byte + bit] = BitVec(128, static_cast<u128>(rotl8(0x1f, bit)) << (8 * byte));
        }
    }
    return m;
}

// Byte i sits at row i%4, column i/4 of the state; row r rotates left by r.
BitMatrix aes_shiftrows_128() {
    BitMatrix m = BitMatrix::zero(128, 128);
    for (int col = 0; col < 4; ++col) {
        for (int r = 0; r < 4; ++r) {
            const int in_byte = 4 * col + r;
            const int out_byte = 4 * ((col - r + 4) % 4) + r;
            for (int bit = 0; bit < 8; ++bit) {
                m.row[8 * in_byte + bit] = BitVec::unit(128, 8 * out_byte + bit);
            }
        }
    }
    return m;
}

BitMatrix aes_mixcolumns_128() {
    const FieldSpec f = FieldSpec::standard(8);
    const uint32_t circ[4] = {0x02, 0x03, 0x01, 0x01};
    BitMatrix m = BitMatrix::zero(128, 128);
    for (int col = 0; col < 4; ++col) {
        for (int j = 0; j < 4; ++j) {
            for (int bit = 0; bit < 8; ++bit) {
                u128 img = 0;
                for (int r = 0; r < 4; ++r) {
                    const uint32_t coeff = circ[(j - r + 4) % 4];
                    img |= static_cast<u128>(field_mul(f, coeff, uint32_t{1} << bit))
                           << (8 * (4 * col + r));
                }
                m.row[8 * (4 * col + j) + bit] = BitVec(128, img);
            }
        }
    }
    return m;
}

}  // namespace

CipherSpec aes_spec() {
    Partition part{16, 8};
    std::vector<SBoxTable> sboxes(16, inversion_sbox(8));
    BitMatrix lambda = mat_mul(mat_mul(aes_sbox_linear_128(), aes_shiftrows_128()),
                               aes_mixcolumns_128());
    return make_cipher("aes", part, std::move(sboxes), std::move(lambda));
}

// ---------------------------------------------------------------------------
// toy presets
// ---------------------------------------------------------------------------

namespace {

BitMatrix rotate_lambda(const Partition& p) {
    BitMatrix m = BitMatrix::zero(p.n_b(), p.n_b());
    for (int i = 0; i < p.n_t; ++i) {
        for (int j = 0; j < p.m; ++j) {
            m.row[p.m * i + j] = BitVec::unit(p.n_b(), p.m * ((i + 1) % p.n_t) + j);
        }
    }
    return m;
}

// Diffusing analogue of MixColumns over GF(2^m): output block j is
// x*v_j + v_{j+1}, i.e. block i feeds 02*v_i into block i and v_i into block
// i-1 (indices mod n_t). Singular only when the order of x divides n_t.
BitMatrix mix_lambda(const Partition& p) {
    const FieldSpec f = FieldSpec::standard(p.m);
    BitMatrix m = BitMatrix::zero(p.n_b(), p.n_b());
    for (int i = 0; i < p.n_t; ++i) {
        for (int j = 0; j < p.m; ++j) {
            u128 img = static_cast<u128>(field_mul(f, 0x02, uint32_t{1} << j)) << (p.m * i);
            img ^= static_cast<u128>(uint32_t{1} << j) << (p.m * ((i - 1 + p.n_t) % p.n_t));
            m.row[p.m * i + j] = BitVec(p.n_b(), img);
        }
    }
    if (!mat_is_invertible(m)) {
        throw std::invalid_argument("mix lambda is singular for this (n_t, m)");
    }
    return m;
}

}  // namespace

CipherSpec toy_spec(int n_t, int m, SBoxKind sbox_kind, LambdaKind lambda_kind, uint64_t seed) {
    if (n_t < 1 || m < 1 || n_t * m > 16) {
        throw std::invalid_argument("toy_spec: need n_t*m <= 16");
    }
    Partition part{n_t, m};
    Rng rng(seed);
    Rng sbox_rng = rng.fork(0x5b);
    Rng lambda_rng = rng.fork(0x1a);

    std::vector<SBoxTable> sboxes;
    sboxes.reserve(n_t);
    std::string sbox_name;
    for (int i = 0; i < n_t; ++i) {
        switch (sbox_kind) {
            case SBoxKind::Inversion:
                sboxes.push_back(inversion_sbox(m));
                sbox_name = "inversion";
                break;
            case SBoxKind::Identity:
                sboxes.push_back(identity_sbox(m));
                sbox_name = "identity";
                break;
            case SBoxKind::Random:
                sboxes.push_back(random_sbox(m, sbox_rng.next()));
                sbox_name = "random";
                break;
        }
    }

    BitMatrix lambda;
    std::string lambda_name;
    switch (lambda_kind) {
        case LambdaKind::Identity:
            lambda = BitMatrix::identity(part.n_b());
            lambda_name = "identity";
            break;
        case LambdaKind::Rotate:
            lambda = rotate_lambda(part);
            lambda_name = "rotate";
            break;
        case LambdaKind::Random:
            lambda = random_invertible_matrix(part.n_b(), lambda_rng.next());
            lambda_name = "random";
            break;
        case LambdaKind::Mix:
            lambda = mix_lambda(part);
            lambda_name = "mix";
            break;
    }

    std::string name = "toy:" + std::to_string(n_t) + "x" + std::to_string(m) + ":" +
                       sbox_name + ":" + lambda_name;
    return make_cipher(std::move(name), part, std::move(sboxes), std::move(lambda));
}

CipherSpec cipher_from_preset(const std::string& preset, uint64_t seed) {
    if (preset == "aes") return aes_spec();
    if (preset.rfind("toy:", 0) == 0) {
        // toy:<n_t>x<m>:<sbox>:<lambda>
        std::vector<std::string> parts;
        size_t start = 4;
        while (start <= preset.size()) {
            const size_t colon = preset.find(':', start);
            if (colon == std::string::npos) {
                parts.push_back(preset.substr(start));
                break;
            }
            parts.push_back(preset.substr(start, colon - start));
            start = colon + 1;
        }
        if (parts.size() != 3) throw ParseError("bad toy preset: " + preset);
        const size_t x = parts[0].find('x');
        if (x == std::string::npos) throw ParseError("bad toy geometry: " + parts[0]);
        int n_t, m;
        try {
            n_t = std::stoi(parts[0].substr(0, x));
            m = std::stoi(parts[0].substr(x + 1));
        } catch (const std::exception&) {
            throw ParseError("bad toy geometry: " + parts[0]);
        }
        SBoxKind sk;
        if (parts[1] == "inversion") sk = SBoxKind::Inversion;
        else if (parts[1] == "random") sk = SBoxKind::Random;
        else if (parts[1] == "identity") sk = SBoxKind::Identity;
        else throw ParseError("unknown S-box kind: " + parts[1]);
        LambdaKind lk;
        if (parts[2] == "identity") lk = LambdaKind::Identity;
        else if (parts[2] == "rotate") lk = LambdaKind::Rotate;
        else if (parts[2] == "random") lk = LambdaKind::Random;
        else if (parts[2] == "mix") lk = LambdaKind::Mix;
        else throw ParseError("unknown lambda kind: " + parts[2]);
        return toy_spec(n_t, m, sk, lk, seed);
    }
    throw ParseError("unknown preset: " + preset);
}

}  // namespace primanal
