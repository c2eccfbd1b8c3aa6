#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/cipher.hpp"
#include "core/subspace.hpp"

namespace primanal {

constexpr int kDefaultRefineBudget = 1024;

struct ClosureOptions {
    bool sampled = false;            // required above the exhaustive width cap
    uint32_t samples_per_vector = uint32_t{1} << 16;
    int max_seeds = 64;              // seed budget in sampled mode
    uint64_t seed = 1;
    // cap on the per-sweep number of closures spent minimizing found
    // subspaces (descending into their elements)
    int refine_budget = kDefaultRefineBudget;
};

constexpr int kExhaustiveWidthCap = 16;  // full v-loops and rho tables
constexpr int kGroupActionWidthCap = 14; // materialized action on 2^n points

// Smallest subspace containing u that is closed under taking round-function
// output differences; exhaustive below the width cap, heuristic (sampled
// v-loop over the basis) above it.
Subspace difference_closure(const CipherSpec& spec, const BitVec& u,
                            const ClosureOptions& opts = {});

struct SeedTraceEntry {
    BitVec seed;
    int closure_dim = 0;
};

struct BlockSystemReport {
    std::string method;  // "CLOSURE" | "GROUP_ACTION"
    bool exists_nontrivial = false;
    bool sampled = false;  // heuristic evidence only
    std::vector<Subspace> invariant_subspaces;
    std::vector<SeedTraceEntry> trace;  // capped
    uint64_t seeds_examined = 0;
    uint64_t seeds_skipped = 0;
};

// Sweeps seed differences (skipping seeds inside the span of nontrivial
// subspaces already found) and reports every distinct nontrivial closure.
BlockSystemReport find_linear_block_systems(const CipherSpec& spec,
                                            const ClosureOptions& opts = {});

// Minimal block of imprimitivity of <translations, rho> containing
// {0, alpha}: union-find congruence closure over the materialized action.
// Returns the sorted block through 0.
std::vector<uint32_t> minimal_block_through(const CipherSpec& spec, const BitVec& alpha);

// Same sweep as find_linear_block_systems but driven purely by the group
// action; blocks are reported as subspaces.
BlockSystemReport find_group_block_systems(const CipherSpec& spec);

struct CrosscheckResult {
    bool pass = true;
    int checked = 0;
    std::string counterexample;  // empty when pass
};

// For sampled alpha: the group-action block through 0 must equal the
// difference closure of alpha as a point set, and sampled blocks must be its
// cosets.
CrosscheckResult crosscheck_block_coset_structure(const CipherSpec& spec, int sample_count,
                                                  uint64_t seed);

struct FindBlocksOutcome {
    BlockSystemReport closure;
    std::optional<BlockSystemReport> group;  // present when n_b within cap
    bool methods_agree = true;
};

FindBlocksOutcome run_find_blocks(const CipherSpec& spec, const ClosureOptions& opts = {});

}  // namespace primanal
