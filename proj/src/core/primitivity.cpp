#include "core/primitivity.hpp"

#include <algorithm>

namespace primanal {

bool check_power_condition(const SBoxTable& sbox, int s) {
    if (s < 2) throw std::invalid_argument("power condition needs s >= 2");
    if (sbox.table[0] != 0) return false;
    for (uint32_t x = 0; x < sbox.size(); ++x) {
        uint32_t y = x;
        for (int i = 0; i < s; ++i) y = sbox.table[y];
        if (y != x) return false;
    }
    return true;
}

int differential_image_size(const SBoxTable& sbox, uint32_t a) {
    if (a == 0 || a >= sbox.size()) throw std::invalid_argument("difference must be nonzero and in range");
    std::vector<uint8_t> seen(sbox.size(), 0);
    int count = 0;
    for (uint32_t x = 0; x < sbox.size(); ++x) {
        const uint32_t d = sbox.table[x ^ a] ^ sbox.table[x];
        if (!seen[d]) {
            seen[d] = 1;
            ++count;
        }
    }
    return count;
}

namespace {

int min_image_over_differences(const SBoxTable& sbox) {
    int min_image = static_cast<int>(sbox.size());
    for (uint32_t a = 1; a < sbox.size(); ++a) {
        min_image = std::min(min_image, differential_image_size(sbox, a));
    }
    return min_image;
}

// r < m/s, i.e. r ranges over 1..(m-1)/s.
int max_r_in_range(int m, int s) { return (m - 1) / s; }

std::optional<int> max_r_for_min_image(int min_image, int m, int s) {
    for (int r = max_r_in_range(m, s); r >= 1; --r) {
        if (min_image > (1 << (m - r - 1))) return r;
    }
    return std::nullopt;
}

}  // namespace

std::optional<int> max_certifiable_r(const SBoxTable& sbox, int s) {
    if (s < 2) throw std::invalid_argument("max_certifiable_r needs s >= 2");
    return max_r_for_min_image(min_image_over_differences(sbox), sbox.m, s);
}

std::vector<Subspace> invariant_subspaces_up_to_codim(const SBoxTable& sbox, int c,
                                                      uint64_t budget) {
    if (c < 0 || c >= sbox.m) throw std::invalid_argument("codimension bound must be in [0, m)");
    std::vector<Subspace> found;
    for (int dual_dim = 1; dual_dim <= c; ++dual_dim) {
        SubspaceEnumerator en(sbox.m, dual_dim, budget);
        Subspace dual;
        while (en.next(dual)) {
            const Subspace s = annihilator(dual);
            bool invariant = true;
            BitVec x = BitVec::zero(s.width);
            const uint64_t n = uint64_t{1} << s.dim();
            for (uint64_t i = 1; i < n && invariant; ++i) {
                x.bits ^= s.basis[__builtin_ctzll(i)].bits;
                const uint32_t y = sbox.table[static_cast<uint32_t>(x.bits)];
                invariant = subspace_contains(s, BitVec(s.width, y));
            }
            if (invariant) found.push_back(s);
        }
    }
    std::sort(found.begin(), found.end(), subspace_less);
    return found;
}

std::vector<std::vector<int>> lambda_invariant_block_sums(const BitMatrix& lambda,
                                                          const Partition& part) {
    if (part.n_t > 24) throw std::invalid_argument("too many blocks for subset sweep");
    if (lambda.rows != part.n_b() || lambda.cols != part.n_b()) {
        throw std::invalid_argument("lambda does not match partition");
    }
    const int n_t = part.n_t;
    const int m = part.m;
    // reach[i]: blocks with a nonzero projection of the image of V_i
    std::vector<uint32_t> reach(n_t, 0);
    for (int i = 0; i < n_t; ++i) {
        for (int j = 0; j < m; ++j) {
            const BitVec img = mat_apply(lambda, BitVec::unit(part.n_b(), m * i + j));
            for (int t = 0; t < n_t; ++t) {
                if ((img.bits >> (m * t)) & width_mask(m)) reach[i] |= uint32_t{1} << t;
            }
        }
    }
    std::vector<std::vector<int>> invariant;
    const uint32_t all = (uint32_t{1} << n_t) - 1;
    for (uint32_t subset = 1; subset < all; ++subset) {
        uint32_t image = 0;
        uint32_t rest = subset;
        while (rest) {
            const int i = __builtin_ctz(rest);
            rest &= rest - 1;
            image |= reach[i];
            if (image & ~subset) break;
        }
        if ((image & ~subset) == 0) {
            std::vector<int> blocks;
            for (int i = 0; i < n_t; ++i) {
                if ((subset >> i) & 1) blocks.push_back(i);
            }
            invariant.push_back(std::move(blocks));
        }
    }
    return invariant;
}

PrimitivityReport verify_primitivity(const CipherSpec& spec, int s, uint64_t budget) {
    if (s < 2) throw std::invalid_argument("verify_primitivity needs s >= 2");
    PrimitivityReport rep;
    rep.cipher_name = spec.name;
    rep.s = s;
    rep.n_t = spec.part.n_t;
    rep.m = spec.part.m;

    const std::vector<int> boxes = distinct_sbox_indices(spec);

    rep.condition1_pass = true;
    for (int i : boxes) {
        if (!check_power_condition(spec.sboxes[i], s)) rep.condition1_pass = false;
    }

    rep.min_image_size = static_cast<int>(spec.sboxes[0].size());
    for (int i : boxes) {
        const int mi = min_image_over_differences(spec.sboxes[i]);
        rep.per_sbox_min_image.emplace_back(i, mi);
        rep.min_image_size = std::min(rep.min_image_size, mi);
    }
    rep.max_image_r = max_r_for_min_image(rep.min_image_size, rep.m, s);

    rep.lambda_invariant_sums = lambda_invariant_block_sums(spec.lambda, spec.part);
    rep.single_block_policy_fail = (spec.part.n_t == 1);

    // Look for one r where both halves of the differential condition hold;
    // smallest first, which keeps the subspace sweep at its cheapest bound.
    std::optional<int> certifying_r;
    if (rep.condition1_pass && rep.max_image_r) {
        for (int r = 1; r <= *rep.max_image_r && !certifying_r; ++r) {
            if (rep.min_image_size <= (1 << (rep.m - r - 1))) continue;
            bool clean = true;
            for (int i : boxes) {
                if (!invariant_subspaces_up_to_codim(spec.sboxes[i], s * r, budget).empty()) {
                    clean = false;
                    break;
                }
            }
            if (clean) certifying_r = r;
        }
        if (!certifying_r) {
            // evidence at the widest admissible bound
            for (int i : boxes) {
                for (const Subspace& sub :
                     invariant_subspaces_up_to_codim(spec.sboxes[i], s * *rep.max_image_r, budget)) {
                    rep.invariant_subspaces_found.emplace_back(i, sub);
                }
            }
        }
    }

    std::string reason;
    if (!rep.condition1_pass) {
        reason = "S-box power condition failed (need table[0]=0 and gamma^s = identity)";
    } else if (!rep.max_image_r) {
        reason = "no admissible r: some difference has image size <= 2^(m-r-1) for every r < m/s";
    } else if (!certifying_r) {
        reason = "S-box has an invariant subspace within codimension s*r for every admissible r";
    } else if (!rep.lambda_invariant_sums.empty()) {
        reason = "mixing layer fixes a proper sum of blocks";
    } else if (rep.single_block_policy_fail) {
        reason = "single-block cipher: the block-sum condition is vacuous, not certified by policy";
    }

    rep.certified = reason.empty();
    if (rep.certified) {
        rep.achieved_r = certifying_r;
        rep.verdict = "CERTIFIED_PRIMITIVE";
        rep.reason = "all three conditions hold";
    } else {
        rep.achieved_r = certifying_r ? certifying_r : rep.max_image_r;
        rep.verdict = "INCONCLUSIVE";
        rep.reason = reason;
    }
    return rep;
}

}  // namespace primanal
