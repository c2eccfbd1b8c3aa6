#include "core/subspace.hpp"

#include <algorithm>

namespace primanal {

namespace {

int pivot_of(const BitVec& v) { return ctz128(v.bits); }

// Insert a (possibly dependent) vector into an RREF basis, keeping the
// canonical form. Returns true if the dimension grew.
bool rref_insert(Subspace& s, BitVec v) {
    for (const BitVec& row : s.basis) {
        if (v.get(pivot_of(row))) v.bits ^= row.bits;
    }
    if (v.is_zero()) return false;
    const int p = pivot_of(v);
    for (BitVec& row : s.basis) {
        if (row.get(p)) row.bits ^= v.bits;
    }
    auto pos = std::find_if(s.basis.begin(), s.basis.end(),
                            [&](const BitVec& row) { return pivot_of(row) > p; });
    s.basis.insert(pos, v);
    return true;
}

}  // namespace

Subspace zero_subspace(int width) {
    if (width < 1 || width > kMaxWidth) throw std::invalid_argument("subspace width out of range");
    Subspace s;
    s.width = width;
    return s;
}

Subspace full_subspace(int width) {
    Subspace s = zero_subspace(width);
    for (int i = 0; i < width; ++i) s.basis.push_back(BitVec::unit(width, i));
    return s;
}

Subspace subspace_from_generators(int width, const std::vector<BitVec>& gens) {
    Subspace s = zero_subspace(width);
    for (const BitVec& g : gens) {
        if (g.width != width) throw std::invalid_argument("generator width mismatch");
        rref_insert(s, g);
        if (s.dim() == width) break;
    }
    return s;
}

bool subspace_contains(const Subspace& s, const BitVec& v) {
    if (v.width != s.width) throw std::invalid_argument("subspace_contains: width mismatch");
    u128 r = v.bits;
    for (const BitVec& row : s.basis) {
        if ((r >> pivot_of(row)) & 1) r ^= row.bits;
    }
    return r == 0;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.width != b.width) throw std::invalid_argument("subspace_sum: width mismatch");
    Subspace s = a;
    for (const BitVec& g : b.basis) {
        rref_insert(s, g);
        if (s.is_full()) break;
    }
    return s;
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
    if (a.width != b.width) throw std::invalid_argument("subspace_intersection: width mismatch");
    // kernel route: (A cap B) = ann(ann(A) + ann(B))
    return annihilator(subspace_sum(annihilator(a), annihilator(b)));
}

Subspace annihilator(const Subspace& s) {
    // Pivot coordinates are determined by the free ones: x_{p_i} = sum of
    // row_i bits over the free coordinates of x.
    std::vector<bool> is_pivot(s.width, false);
    for (const BitVec& row : s.basis) is_pivot[pivot_of(row)] = true;
    std::vector<BitVec> gens;
    gens.reserve(s.width - s.dim());
    for (int f = 0; f < s.width; ++f) {
        if (is_pivot[f]) continue;
        u128 v = u128{1} << f;
        for (const BitVec& row : s.basis) {
            if (row.get(f)) v ^= u128{1} << pivot_of(row);
        }
        gens.emplace_back(s.width, v);
    }
    return subspace_from_generators(s.width, gens);
}

bool subspace_less(const Subspace& a, const Subspace& b) {
    if (a.width != b.width) return a.width < b.width;
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    for (int i = 0; i < a.dim(); ++i) {
        if (a.basis[i].bits != b.basis[i].bits) return a.basis[i].bits < b.basis[i].bits;
    }
    return false;
}

std::vector<BitVec> subspace_elements(const Subspace& s) {
    if (s.dim() > 24) throw std::invalid_argument("subspace too large to materialize");
    const uint64_t count = uint64_t{1} << s.dim();
    std::vector<BitVec> out;
    out.reserve(count);
    BitVec cur = BitVec::zero(s.width);
    out.push_back(cur);
    for (uint64_t i = 1; i < count; ++i) {
        cur.bits ^= s.basis[__builtin_ctzll(i)].bits;  // Gray-code walk
        out.push_back(cur);
    }
    return out;
}

BitVec subspace_element(const Subspace& s, uint64_t idx) {
    u128 acc = 0;
    for (int i = 0; i < s.dim(); ++i) {
        if ((idx >> i) & 1) acc ^= s.basis[i].bits;
    }
    return BitVec(s.width, acc);
}

std::vector<BitVec> coset_representatives(const Subspace& s) {
    if (s.codim() > 24) throw std::invalid_argument("too many cosets to materialize");
    std::vector<bool> is_pivot(s.width, false);
    for (const BitVec& row : s.basis) is_pivot[pivot_of(row)] = true;
    std::vector<int> free_coords;
    for (int i = 0; i < s.width; ++i) {
        if (!is_pivot[i]) free_coords.push_back(i);
    }
    const uint64_t count = uint64_t{1} << free_coords.size();
    std::vector<BitVec> reps;
    reps.reserve(count);
    for (uint64_t idx = 0; idx < count; ++idx) {
        u128 v = 0;
        for (size_t j = 0; j < free_coords.size(); ++j) {
            if ((idx >> j) & 1) v |= u128{1} << free_coords[j];
        }
        reps.emplace_back(s.width, v);
    }
    return reps;
}

std::vector<std::string> subspace_hex_rows(const Subspace& s) {
    std::vector<std::string> out;
    out.reserve(s.basis.size());
    for (const BitVec& row : s.basis) out.push_back(to_hex(row));
    return out;
}

u128 count_subspaces(int n, int k) {
    if (k < 0 || n < 0 || k > n) throw std::invalid_argument("count_subspaces: need 0 <= k <= n");
    if (n > 20) throw std::invalid_argument("count_subspaces: n <= 20 supported");
    // prefix after step j equals [n, j]_2, so every division below is exact
    u128 r = 1;
    for (int j = 0; j < k; ++j) {
        r *= (u128{1} << (n - j)) - 1;
        r /= (u128{1} << (j + 1)) - 1;
    }
    return r;
}

u128 count_all_subspaces(int n) {
    u128 total = 0;
    for (int k = 0; k <= n; ++k) total += count_subspaces(n, k);
    return total;
}

std::string u128_to_string(u128 x) {
    if (x == 0) return "0";
    std::string s;
    while (x > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(x % 10)));
        x /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

SubspaceEnumerator::SubspaceEnumerator(int n, int k, uint64_t budget) : n_(n), k_(k) {
    if (n < 1 || n > 16 || k < 0 || k > n) {
        throw std::invalid_argument("SubspaceEnumerator: need 0 <= k <= n <= 16");
    }
    const u128 total = count_subspaces(n, k);
    if (total > budget) {
        throw EnumerationTooLargeError("subspace enumeration over budget: " +
                                       u128_to_string(total) + " > " + std::to_string(budget));
    }
    pivots_.resize(k);
    for (int i = 0; i < k; ++i) pivots_[i] = i;
    reset_free_slots();
}

void SubspaceEnumerator::reset_free_slots() {
    free_slots_.clear();
    std::vector<bool> is_pivot(n_, false);
    for (int p : pivots_) is_pivot[p] = true;
    for (int i = 0; i < k_; ++i) {
        for (int j = pivots_[i] + 1; j < n_; ++j) {
            if (!is_pivot[j]) free_slots_.emplace_back(i, j);
        }
    }
    counter_ = 0;
    counter_end_ = uint64_t{1} << free_slots_.size();
}

bool SubspaceEnumerator::next(Subspace& out) {
    if (done_) return false;
    if (k_ == 0) {
        out = zero_subspace(n_);
        done_ = true;
        return true;
    }
    out.width = n_;
    out.basis.assign(k_, BitVec::zero(n_));
    for (int i = 0; i < k_; ++i) out.basis[i].bits = u128{1} << pivots_[i];
    for (size_t t = 0; t < free_slots_.size(); ++t) {
        if ((counter_ >> t) & 1) {
            out.basis[free_slots_[t].first].bits |= u128{1} << free_slots_[t].second;
        }
    }
    if (++counter_ >= counter_end_) {
        // advance the pivot combination lexicographically
        int i = k_ - 1;
        while (i >= 0 && pivots_[i] == n_ - k_ + i) --i;
        if (i < 0) {
            done_ = true;
        } else {
            ++pivots_[i];
            for (int j = i + 1; j < k_; ++j) pivots_[j] = pivots_[j - 1] + 1;
            reset_free_slots();
        }
    }
    return true;
}

}  // namespace primanal
