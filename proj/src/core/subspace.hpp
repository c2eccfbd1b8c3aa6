#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/bits.hpp"

namespace primanal {

// Canonical subspace of GF(2)^width: basis in reduced row-echelon form,
// pivot of a row = its lowest set bit, rows sorted by pivot ascending, each
// pivot bit cleared in every other row. Two subspaces are equal iff their
// basis lists are identical.
struct Subspace {
    int width = 0;
    std::vector<BitVec> basis;

    int dim() const { return static_cast<int>(basis.size()); }
    int codim() const { return width - dim(); }
    bool is_zero() const { return basis.empty(); }
    bool is_full() const { return dim() == width; }

    friend bool operator==(const Subspace& a, const Subspace& b) = default;
};

Subspace zero_subspace(int width);
Subspace full_subspace(int width);
Subspace subspace_from_generators(int width, const std::vector<BitVec>& gens);

bool subspace_contains(const Subspace& s, const BitVec& v);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);

// Dual subspace under the standard dot product; an involution that reverses
// inclusion and complements dimension.
Subspace annihilator(const Subspace& s);

// Total order for deduplication / canonical report listing.
bool subspace_less(const Subspace& a, const Subspace& b);

// All 2^dim elements, Gray-code order (dim <= 24 guard).
std::vector<BitVec> subspace_elements(const Subspace& s);
// Element by index: XOR of basis rows selected by the bits of idx.
BitVec subspace_element(const Subspace& s, uint64_t idx);
// Canonical coset representatives: all vectors supported on the non-pivot
// coordinates (codim <= 24 guard).
std::vector<BitVec> coset_representatives(const Subspace& s);

std::vector<std::string> subspace_hex_rows(const Subspace& s);

// Gaussian binomial [n,k]_2, exact (n <= 20 so products fit in 128 bits).
u128 count_subspaces(int n, int k);
u128 count_all_subspaces(int n);
std::string u128_to_string(u128 x);

constexpr uint64_t kDefaultEnumBudget = uint64_t{1} << 24;

// Streams every k-dimensional subspace of GF(2)^n exactly once by walking
// canonical RREF shapes: pivot-column combinations, then the free entries.
class SubspaceEnumerator {
public:
    SubspaceEnumerator(int n, int k, uint64_t budget = kDefaultEnumBudget);
    bool next(Subspace& out);

private:
    void reset_free_slots();

    int n_;
    int k_;
    bool done_ = false;
    std::vector<int> pivots_;
    std::vector<std::pair<int, int>> free_slots_;  // (row, col)
    uint64_t counter_ = 0;
    uint64_t counter_end_ = 0;
};

}  // namespace primanal
