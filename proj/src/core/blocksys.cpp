#include "core/blocksys.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "core/rng.hpp"

namespace primanal {

namespace {

constexpr size_t kTraceCap = 64;

// Adjoin a vector to the running closure state: extend the basis and append
// the new coset to the element list.
void adjoin(Subspace& span, std::vector<uint32_t>& elements, uint32_t d, int width) {
    const size_t old_count = elements.size();
    span = subspace_sum(span, subspace_from_generators(width, {BitVec(width, d)}));
    elements.push_back(d);
    for (size_t i = 0; i < old_count; ++i) elements.push_back(elements[i] ^ d);
}

Subspace closure_with_table(int n, const std::vector<uint32_t>& rho, const BitVec& u) {
    const uint32_t space = uint32_t{1} << n;
    Subspace span = subspace_from_generators(n, {u});
    // worklist of nonzero elements of the closure; every element already
    // swept had all its differences adjoined, and the span only grows
    std::vector<uint32_t> elements{static_cast<uint32_t>(u.bits)};
    for (size_t qi = 0; qi < elements.size(); ++qi) {
        const uint32_t uu = elements[qi];
        for (uint32_t v = 0; v < space; ++v) {
            const uint32_t d = rho[v ^ uu] ^ rho[v];
            if (!subspace_contains(span, BitVec(n, d))) {
                adjoin(span, elements, d, n);
                if (span.is_full()) return span;
            }
        }
    }
    return span;
}

// Heuristic closure for wide states: sweep only the basis vectors against a
// seeded sample of v, then re-sample to confirm stability.
Subspace difference_closure_sampled(const CipherSpec& spec, const BitVec& u,
                                    const ClosureOptions& opts) {
    const int n = spec.n_b();
    Rng rng(Rng::mix(opts.seed, static_cast<uint64_t>(u.bits)));
    Subspace span = subspace_from_generators(n, {u});

    auto random_state = [&]() {
        u128 bits = rng.next();
        if (n > 64) bits |= static_cast<u128>(rng.next()) << 64;
        return BitVec(n, bits);
    };

    for (int pass = 0; pass < 2; ++pass) {  // second pass confirms stability
        bool grew = true;
        while (grew && !span.is_full()) {
            grew = false;
            for (size_t bi = 0; bi < span.basis.size() && !span.is_full(); ++bi) {
                const BitVec uu = span.basis[bi];
                for (uint32_t t = 0; t < opts.samples_per_vector; ++t) {
                    const BitVec v = random_state();
                    const BitVec d = vec_add(apply_rho(spec, vec_add(v, uu)), apply_rho(spec, v));
                    if (!subspace_contains(span, d)) {
                        span = subspace_sum(span, subspace_from_generators(n, {d}));
                        grew = true;
                        if (span.is_full()) break;
                    }
                }
            }
        }
        if (span.is_full()) break;
    }
    return span;
}

// Descend into a nontrivial invariant subspace and return the
// inclusion-minimal invariant subspaces found inside it (the subspace itself
// when nothing smaller shows up). minimal_of(x) must return the smallest
// invariant subspace containing x; the budget caps how many of those get
// computed.
std::vector<Subspace> refine_to_minimal(const Subspace& c,
                                        const std::function<Subspace(const BitVec&)>& minimal_of,
                                        int& budget) {
    std::vector<Subspace> results;
    Subspace span_inside = zero_subspace(c.width);
    bool shrunk = false;
    std::vector<BitVec> elems = subspace_elements(c);
    std::sort(elems.begin(), elems.end(),
              [](const BitVec& a, const BitVec& b) { return a.bits < b.bits; });
    for (const BitVec& x : elems) {
        if (x.is_zero()) continue;
        if (budget <= 0) break;
        if (!span_inside.is_zero() && subspace_contains(span_inside, x)) continue;
        --budget;
        const Subspace d = minimal_of(x);  // contained in c since c is invariant
        if (d.dim() < c.dim()) {
            shrunk = true;
            for (Subspace& s : refine_to_minimal(d, minimal_of, budget)) {
                span_inside = subspace_sum(span_inside, s);
                results.push_back(std::move(s));
            }
        }
    }
    if (!shrunk) return {c};
    return results;
}

void sort_dedup(std::vector<Subspace>& subs) {
    std::sort(subs.begin(), subs.end(), subspace_less);
    subs.erase(std::unique(subs.begin(), subs.end()), subs.end());
}

}  // namespace

Subspace difference_closure(const CipherSpec& spec, const BitVec& u, const ClosureOptions& opts) {
    if (u.width != spec.n_b()) throw std::invalid_argument("difference_closure: width mismatch");
    if (u.is_zero()) throw std::invalid_argument("difference_closure: seed difference must be nonzero");
    if (spec.n_b() <= kExhaustiveWidthCap) {
        return closure_with_table(spec.n_b(), rho_table(spec), u);
    }
    if (!opts.sampled) {
        throw std::invalid_argument("state wider than exhaustive cap: enable sampled mode");
    }
    return difference_closure_sampled(spec, u, opts);
}

BlockSystemReport find_linear_block_systems(const CipherSpec& spec, const ClosureOptions& opts) {
    const int n = spec.n_b();
    BlockSystemReport rep;
    rep.method = "CLOSURE";

    if (n <= kExhaustiveWidthCap) {
        const std::vector<uint32_t> rho = rho_table(spec);
        const auto minimal_of = [&](const BitVec& x) { return closure_with_table(n, rho, x); };
        int refine_budget = opts.refine_budget;
        Subspace span_found = zero_subspace(n);
        const uint32_t space = uint32_t{1} << n;
        for (uint32_t uu = 1; uu < space; ++uu) {
            const BitVec u(n, uu);
            if (!span_found.is_zero() && subspace_contains(span_found, u)) {
                ++rep.seeds_skipped;
                continue;
            }
            ++rep.seeds_examined;
            const Subspace closure = closure_with_table(n, rho, u);
            if (rep.trace.size() < kTraceCap) rep.trace.push_back({u, closure.dim()});
            if (!closure.is_full()) {
                for (Subspace& s : refine_to_minimal(closure, minimal_of, refine_budget)) {
                    rep.invariant_subspaces.push_back(std::move(s));
                }
                span_found = subspace_sum(span_found, closure);
            }
        }
    } else {
        if (!opts.sampled) {
            throw std::invalid_argument("state wider than exhaustive cap: enable sampled mode");
        }
        rep.sampled = true;
        Rng rng(opts.seed);
        Subspace span_found = zero_subspace(n);
        for (int t = 0; t < opts.max_seeds; ++t) {
            u128 bits = rng.next();
            if (n > 64) bits |= static_cast<u128>(rng.next()) << 64;
            bits &= width_mask(n);
            if (bits == 0) continue;
            const BitVec u(n, bits);
            if (!span_found.is_zero() && subspace_contains(span_found, u)) {
                ++rep.seeds_skipped;
                continue;
            }
            ++rep.seeds_examined;
            Subspace closure = difference_closure_sampled(spec, u, opts);
            if (rep.trace.size() < kTraceCap) rep.trace.push_back({u, closure.dim()});
            if (!closure.is_full()) {
                // candidates from sampling must survive a confirmation grid
                // before they count as evidence
                Rng confirm = rng.fork(0xc0);
                bool stable = true;
                for (const BitVec& b : closure.basis) {
                    for (uint32_t i = 0; i < opts.samples_per_vector && stable; ++i) {
                        u128 vb = confirm.next();
                        if (n > 64) vb |= static_cast<u128>(confirm.next()) << 64;
                        const BitVec v(n, vb);
                        const BitVec d =
                            vec_add(apply_rho(spec, vec_add(v, b)), apply_rho(spec, v));
                        stable = subspace_contains(closure, d);
                    }
                    if (!stable) break;
                }
                if (stable) {
                    rep.invariant_subspaces.push_back(closure);
                    span_found = subspace_sum(span_found, closure);
                }
            }
        }
    }

    sort_dedup(rep.invariant_subspaces);
    rep.exists_nontrivial = !rep.invariant_subspaces.empty();
    return rep;
}

// ---------------------------------------------------------------------------
// group action
// ---------------------------------------------------------------------------

namespace {

struct UnionFind {
    std::vector<uint32_t> parent;
    std::vector<uint32_t> size;
    uint32_t max_class = 1;

    explicit UnionFind(uint32_t n) : parent(n), size(n, 1) {
        for (uint32_t i = 0; i < n; ++i) parent[i] = i;
    }

    uint32_t find(uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    // Returns false if already joined.
    bool unite(uint32_t a, uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
        max_class = std::max(max_class, size[a]);
        return true;
    }
};

// Finest partition with 0 ~ alpha that every generator maps onto itself.
// Generators: the basis translations (XOR by e_i) and the round permutation.
// Every united pair gets its generator images united in turn. Aborts to the
// trivial partition as soon as one class exceeds half the points, since the
// final block size must divide 2^n.
UnionFind minimal_block_partition(int n, uint32_t alpha, const std::vector<uint32_t>& rho) {
    const uint32_t space = uint32_t{1} << n;
    UnionFind uf(space);
    std::deque<std::pair<uint32_t, uint32_t>> queue;
    uf.unite(0, alpha);
    queue.emplace_back(0, alpha);
    while (!queue.empty() && uf.max_class <= space / 2) {
        const auto [x, y] = queue.front();
        queue.pop_front();
        for (int g = 0; g <= n; ++g) {
            uint32_t gx, gy;
            if (g < n) {
                gx = x ^ (uint32_t{1} << g);
                gy = y ^ (uint32_t{1} << g);
            } else {
                gx = rho[x];
                gy = rho[y];
            }
            if (uf.unite(gx, gy)) queue.emplace_back(gx, gy);
        }
    }
    return uf;
}

std::vector<uint32_t> block_of_zero(UnionFind& uf, uint32_t space) {
    if (uf.max_class > space / 2) {  // early-exit branch: the whole space
        std::vector<uint32_t> all(space);
        for (uint32_t i = 0; i < space; ++i) all[i] = i;
        return all;
    }
    std::vector<uint32_t> block;
    const uint32_t root = uf.find(0);
    for (uint32_t x = 0; x < space; ++x) {
        if (uf.find(x) == root) block.push_back(x);
    }
    return block;
}

// The block through 0 as a subspace; a non-subspace block would contradict
// the coset structure of these groups, so it is treated as a hard error.
Subspace block_subspace(int n, uint32_t alpha, const std::vector<uint32_t>& rho) {
    UnionFind uf = minimal_block_partition(n, alpha, rho);
    const std::vector<uint32_t> block = block_of_zero(uf, uint32_t{1} << n);
    std::vector<BitVec> gens;
    gens.reserve(block.size());
    for (uint32_t x : block) gens.emplace_back(n, x);
    Subspace s = subspace_from_generators(n, gens);
    if ((uint64_t{1} << s.dim()) != block.size()) {
        throw std::logic_error("group-action block through 0 is not a subspace");
    }
    return s;
}

}  // namespace

std::vector<uint32_t> minimal_block_through(const CipherSpec& spec, const BitVec& alpha) {
    const int n = spec.n_b();
    if (n > kGroupActionWidthCap) {
        throw std::invalid_argument("state too wide to materialize the group action");
    }
    if (alpha.width != n) throw std::invalid_argument("minimal_block_through: width mismatch");
    if (alpha.is_zero()) throw std::invalid_argument("minimal_block_through: alpha must be nonzero");
    UnionFind uf = minimal_block_partition(n, static_cast<uint32_t>(alpha.bits), rho_table(spec));
    return block_of_zero(uf, uint32_t{1} << n);
}

BlockSystemReport find_group_block_systems(const CipherSpec& spec) {
    const int n = spec.n_b();
    if (n > kGroupActionWidthCap) {
        throw std::invalid_argument("state too wide to materialize the group action");
    }
    const std::vector<uint32_t> rho = rho_table(spec);
    const uint32_t space = uint32_t{1} << n;

    BlockSystemReport rep;
    rep.method = "GROUP_ACTION";
    const auto minimal_of = [&](const BitVec& x) {
        return block_subspace(n, static_cast<uint32_t>(x.bits), rho);
    };
    int refine_budget = kDefaultRefineBudget;
    Subspace span_found = zero_subspace(n);
    for (uint32_t alpha = 1; alpha < space; ++alpha) {
        if (!span_found.is_zero() && subspace_contains(span_found, BitVec(n, alpha))) {
            ++rep.seeds_skipped;
            continue;
        }
        ++rep.seeds_examined;
        const Subspace block = block_subspace(n, alpha, rho);
        if (rep.trace.size() < kTraceCap) rep.trace.push_back({BitVec(n, alpha), block.dim()});
        if (!block.is_full()) {
            for (Subspace& s : refine_to_minimal(block, minimal_of, refine_budget)) {
                rep.invariant_subspaces.push_back(std::move(s));
            }
            span_found = subspace_sum(span_found, block);
        }
    }
    sort_dedup(rep.invariant_subspaces);
    rep.exists_nontrivial = !rep.invariant_subspaces.empty();
    return rep;
}

CrosscheckResult crosscheck_block_coset_structure(const CipherSpec& spec, int sample_count,
                                                  uint64_t seed) {
    const int n = spec.n_b();
    if (n > kGroupActionWidthCap) {
        throw std::invalid_argument("state too wide to materialize the group action");
    }
    const std::vector<uint32_t> rho = rho_table(spec);
    const uint32_t space = uint32_t{1} << n;
    Rng rng(seed);
    CrosscheckResult res;
    for (int t = 0; t < sample_count; ++t) {
        const uint32_t alpha = static_cast<uint32_t>(rng.below(space - 1)) + 1;
        UnionFind uf = minimal_block_partition(n, alpha, rho);
        std::vector<uint32_t> block = block_of_zero(uf, space);

        const Subspace closure = closure_with_table(n, rho, BitVec(n, alpha));
        std::vector<uint32_t> closure_points;
        closure_points.reserve(uint64_t{1} << closure.dim());
        for (const BitVec& e : subspace_elements(closure)) {
            closure_points.push_back(static_cast<uint32_t>(e.bits));
        }
        std::sort(closure_points.begin(), closure_points.end());

        ++res.checked;
        if (block != closure_points) {
            res.pass = false;
            res.counterexample = "block through 0 for alpha=" + to_hex(BitVec(n, alpha)) +
                                 " differs from the difference closure";
            return res;
        }
        // blocks must be the translates of the block through 0
        if (block.size() < space) {
            for (int vcheck = 0; vcheck < 4; ++vcheck) {
                const uint32_t v = static_cast<uint32_t>(rng.below(space));
                std::vector<uint32_t> coset;
                coset.reserve(block.size());
                for (uint32_t x : block) coset.push_back(x ^ v);
                std::sort(coset.begin(), coset.end());
                std::vector<uint32_t> cls;
                const uint32_t root = uf.find(v);
                for (uint32_t x = 0; x < space; ++x) {
                    if (uf.find(x) == root) cls.push_back(x);
                }
                if (cls != coset) {
                    res.pass = false;
                    res.counterexample = "class of v=" + to_hex(BitVec(n, v)) +
                                         " is not the coset v + U for alpha=" +
                                         to_hex(BitVec(n, alpha));
                    return res;
                }
            }
        }
    }
    return res;
}

FindBlocksOutcome run_find_blocks(const CipherSpec& spec, const ClosureOptions& opts) {
    FindBlocksOutcome out;
    out.closure = find_linear_block_systems(spec, opts);
    if (spec.n_b() <= kGroupActionWidthCap) {
        out.group = find_group_block_systems(spec);
        out.methods_agree = (out.group->exists_nontrivial == out.closure.exists_nontrivial);
    }
    return out;
}

}  // namespace primanal
