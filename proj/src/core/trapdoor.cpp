#include "core/trapdoor.hpp"

#include <algorithm>

#include "core/rng.hpp"

namespace primanal {

namespace {

// Random d-dimensional subspace of GF(2)^n; one generator at a time, so the
// dimension never overshoots d.
Subspace random_subspace(int n, int d, Rng& rng) {
    Subspace s = zero_subspace(n);
    while (s.dim() < d) {
        const u128 bits = static_cast<u128>(rng.next()) & width_mask(n);
        if (bits == 0) continue;
        s = subspace_sum(s, subspace_from_generators(n, {BitVec(n, bits)}));
    }
    return s;
}

// Rows 0..d-1 span U; the rest are standard basis vectors completing it.
BitMatrix adapted_basis(const Subspace& u_space) {
    const int n = u_space.width;
    BitMatrix b = BitMatrix::zero(n, n);
    Subspace span = u_space;
    int row = 0;
    for (const BitVec& v : u_space.basis) b.row[row++] = v;
    for (int i = 0; i < n && row < n; ++i) {
        const BitVec e = BitVec::unit(n, i);
        if (!subspace_contains(span, e)) {
            b.row[row++] = e;
            span = subspace_sum(span, subspace_from_generators(n, {e}));
        }
    }
    return b;
}

}  // namespace

TrapdoorSpec build_trapdoor_cipher(int n_b, int d, uint64_t seed) {
    if (n_b < 2 || n_b > 16) {
        throw std::invalid_argument("build_trapdoor_cipher: need 2 <= n_b <= 16");
    }
    if (d <= 0 || d >= n_b) {
        throw std::invalid_argument("build_trapdoor_cipher: need 0 < d < n_b");
    }
    Rng rng(seed);
    Rng u_rng = rng.fork(0x01);
    Rng h_rng = rng.fork(0x02);
    Rng g_rng = rng.fork(0x03);
    Rng l_rng = rng.fork(0x04);

    const Subspace planted = random_subspace(n_b, d, u_rng);
    const BitMatrix basis_change = adapted_basis(planted);
    const BitMatrix basis_change_inv = mat_invert(basis_change);

    const uint32_t fiber = uint32_t{1} << d;
    const uint32_t quot = uint32_t{1} << (n_b - d);

    std::vector<uint32_t> h = h_rng.random_permutation(quot);
    std::vector<std::vector<uint32_t>> g(quot);
    for (uint32_t w = 0; w < quot; ++w) g[w] = g_rng.random_permutation(fiber);

    // S-box in the standard basis: conjugate the fiberwise map by the basis
    // change. In adapted coordinates y = (y_lo, y_hi) it sends
    // (y_lo, y_hi) -> (g_{y_hi}(y_lo), h(y_hi)).
    const uint32_t space = uint32_t{1} << n_b;
    std::vector<uint32_t> table(space);
    for (uint32_t x = 0; x < space; ++x) {
        const uint32_t y =
            static_cast<uint32_t>(mat_apply(basis_change_inv, BitVec(n_b, x)).bits);
        const uint32_t y_lo = y & (fiber - 1);
        const uint32_t y_hi = y >> d;
        const uint32_t out_y = g[y_hi][y_lo] | (h[y_hi] << d);
        table[x] = static_cast<uint32_t>(mat_apply(basis_change, BitVec(n_b, out_y)).bits);
    }

    // Mixing layer: block-triangular in the adapted basis (U maps into U),
    // conjugated back to the standard basis.
    BitMatrix lambda_adapted = BitMatrix::zero(n_b, n_b);
    for (;;) {
        for (int i = 0; i < n_b; ++i) {
            u128 bits = l_rng.next() & width_mask(n_b);
            if (i < d) bits &= width_mask(d);  // rows spanning U stay inside U
            lambda_adapted.row[i] = BitVec(n_b, bits);
        }
        if (mat_is_invertible(lambda_adapted)) break;
    }
    const BitMatrix lambda =
        mat_mul(mat_mul(basis_change_inv, lambda_adapted), basis_change);

    TrapdoorSpec td;
    td.cipher = make_cipher("trapdoor:" + std::to_string(n_b) + ":" + std::to_string(d) + ":" +
                                std::to_string(seed),
                            Partition{1, n_b}, {SBoxTable(n_b, std::move(table))}, lambda);
    td.planted = planted;
    td.quotient_perm = std::move(h);
    td.fiber_perms = std::move(g);
    td.basis_change = basis_change;

    // exhaustive invariance check over all (u, v) pairs
    const std::vector<uint32_t> rho = rho_table(td.cipher);
    for (const BitVec& u : subspace_elements(planted)) {
        const uint32_t uu = static_cast<uint32_t>(u.bits);
        for (uint32_t v = 0; v < space; ++v) {
            const uint32_t diff = rho[v ^ uu] ^ rho[v];
            if (!subspace_contains(planted, BitVec(n_b, diff))) {
                throw std::logic_error("trapdoor construction lost the planted invariance");
            }
        }
    }
    return td;
}

double truncated_distinguisher(const CipherSpec& spec, const Subspace& u_space, int pair_count,
                               uint64_t seed) {
    if (u_space.width != spec.n_b()) throw std::invalid_argument("distinguisher: width mismatch");
    if (u_space.is_zero() || u_space.is_full()) {
        throw std::invalid_argument("distinguisher: U must be a proper nonzero subspace");
    }
    if (pair_count < 1) throw std::invalid_argument("distinguisher: need pair_count >= 1");
    const int n = spec.n_b();
    Rng rng(seed);
    const uint64_t fiber = uint64_t{1} << u_space.dim();
    int hits = 0;
    for (int t = 0; t < pair_count; ++t) {
        u128 vb = rng.next();
        if (n > 64) vb |= static_cast<u128>(rng.next()) << 64;
        const BitVec v(n, vb);
        const BitVec u = subspace_element(u_space, rng.below(fiber - 1) + 1);
        const BitVec d = vec_add(apply_rho(spec, vec_add(v, u)), apply_rho(spec, v));
        if (subspace_contains(u_space, d)) ++hits;
    }
    return static_cast<double>(hits) / pair_count;
}

AttackResult coset_key_recovery(const CipherSpec& spec, const Subspace& u_space,
                                const std::vector<std::pair<BitVec, BitVec>>& pairs) {
    if (pairs.empty()) throw std::invalid_argument("key recovery needs at least one pair");
    if (u_space.width != spec.n_b()) throw std::invalid_argument("key recovery: width mismatch");
    const int n = spec.n_b();
    const int d = u_space.dim();
    if (d <= 0 || d >= n) {
        throw std::invalid_argument("key recovery: U must be a proper nonzero subspace");
    }

    AttackResult res;
    res.theoretical_bound = (uint64_t{1} << (n - d)) + (uint64_t{1} << d);

    const BitVec image0 = apply_rho(spec, pairs[0].first);

    // phase 1: which coset of U does the key live in? The ciphertext must
    // land in rho(p) + k, so k + U is pinned by the coset of c + rho(p).
    BitVec coset_rep = BitVec::zero(n);
    bool coset_found = false;
    for (const BitVec& q : coset_representatives(u_space)) {
        ++res.trial_count;
        if (subspace_contains(u_space, vec_add(vec_add(pairs[0].second, image0), q))) {
            coset_rep = q;
            coset_found = true;
            break;
        }
    }
    if (!coset_found) throw InconsistentOracleError("no key coset matches the first pair");

    // phase 2: brute force inside the identified coset
    for (const BitVec& u : subspace_elements(u_space)) {
        ++res.trial_count;
        const BitVec candidate = vec_add(coset_rep, u);
        bool ok = true;
        for (const auto& [p, c] : pairs) {
            if (round_function(spec, p, candidate) != c) {
                ok = false;
                break;
            }
        }
        if (ok) {
            res.recovered_key = candidate;
            return res;
        }
    }
    throw InconsistentOracleError("no key in the identified coset reproduces every pair");
}

TrapdoorDemoReport run_trapdoor_demo(int n_b, int d, uint64_t seed, int pair_count) {
    TrapdoorDemoReport rep;
    rep.n_b = n_b;
    rep.d = d;
    rep.seed = seed;
    rep.pair_count = pair_count;

    const TrapdoorSpec td = build_trapdoor_cipher(n_b, d, seed);
    rep.planted = td.planted;
    rep.same_dim_subspace_count = count_subspaces(n_b, d);

    Rng rng(Rng::mix(seed, 0xdead));
    rep.distinguisher_trapdoor =
        truncated_distinguisher(td.cipher, td.planted, pair_count, rng.next());

    // control: a primitive-style toy of the same width with an unrelated
    // random subspace of the same dimension
    int m = 1;
    for (int cand : {8, 6, 4, 3, 2}) {
        if (n_b % cand == 0 && n_b / cand >= 2) {
            m = cand;
            break;
        }
    }
    const CipherSpec control =
        m > 1 ? toy_spec(n_b / m, m, SBoxKind::Inversion, LambdaKind::Mix, seed + 1)
              : toy_spec(n_b, 1, SBoxKind::Random, LambdaKind::Random, seed + 1);
    rep.control_name = control.name;
    Rng u_rng = rng.fork(0x11);
    Subspace control_u = td.planted;
    while (control_u == td.planted) {
        control_u = random_subspace(n_b, d, u_rng);
    }
    rep.control_baseline = static_cast<double>((uint64_t{1} << d) - 1) /
                           static_cast<double>((uint64_t{1} << n_b) - 1);
    rep.distinguisher_control =
        truncated_distinguisher(control, control_u, pair_count, rng.next());

    // one-round known-plaintext attack against a withheld key
    const BitVec key(n_b, static_cast<u128>(rng.next()) & width_mask(n_b));
    rep.withheld_key = key;
    std::vector<std::pair<BitVec, BitVec>> pairs;
    for (int i = 0; i < 4; ++i) {
        const BitVec p(n_b, static_cast<u128>(rng.next()) & width_mask(n_b));
        pairs.emplace_back(p, round_function(td.cipher, p, key));
    }
    rep.attack = coset_key_recovery(td.cipher, td.planted, pairs);
    return rep;
}

}  // namespace primanal
