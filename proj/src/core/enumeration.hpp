#ifndef SPT_ENUMERATION_HPP
#define SPT_ENUMERATION_HPP

#include <cstdint>
#include <vector>

#include "core/tree.hpp"
#include "core/vertex_set.hpp"

namespace spt {

// Per-vertex census of size-t independent sets: counts[x] is the number of
// size-t independent sets containing x (the star centered on x), total is the
// number of size-t independent sets overall. Sum of counts = t * total.
struct StarTable {
    uint32_t t = 0;
    uint64_t total = 0;
    std::vector<uint64_t> counts;
};

// All independent sets of size exactly t, as canonical bit-vectors in
// lexicographic order of their ascending element lists. Empty when t exceeds
// the independence number. t = 0 is rejected.
std::vector<VertexSet> enum_indep_sets(const Tree& tree, uint32_t t);

// Star sizes via size-indexed tree DP (per target vertex: root there, force
// the root in, knapsack-convolve child polynomials). Counts are checked
// 64-bit; overflow raises instead of wrapping. t = 0 is rejected.
StarTable star_sizes(const Tree& tree, uint32_t t);

// Maximum independent set size, two-state tree DP.
uint32_t alpha(const Tree& tree);

// Minimum size of a maximal independent set, by exhaustive search with
// branch-and-bound (desk scale).
uint32_t mu(const Tree& tree);

} // namespace spt

#endif // SPT_ENUMERATION_HPP
