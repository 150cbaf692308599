#ifndef SPT_EKR_HPP
#define SPT_EKR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/tree.hpp"
#include "core/vertex_set.hpp"

namespace spt {

// Exactness-or-refusal limits for the intersecting-family search.
struct SearchBudget {
    uint64_t max_family = 5000;
    uint64_t max_nodes = 10'000'000;
};

struct IntersectingFamilyResult {
    uint64_t size = 0;
    // A maximum pairwise-intersecting subfamily, ascending in set order and
    // lexicographically least among all maximum witnesses.
    std::vector<VertexSet> witness;
};

// Exact maximum size of a pairwise-intersecting subfamily, via bounded
// branch-and-bound clique search on the intersection graph. The family must
// be duplicate-free. Exceeding the budget raises, never approximates.
IntersectingFamilyResult max_intersecting_family(const std::vector<VertexSet>& family,
                                                 const SearchBudget& budget = {});

struct EkrVerdict {
    uint32_t t = 0;
    uint32_t mu = 0;
    uint32_t alpha = 0;
    uint64_t max_intersecting = 0;
    std::vector<VertexSet> witness;
    uint64_t max_star = 0;
    std::vector<uint32_t> argmax_vertices;
    bool is_t_ekr = false;         // max_intersecting <= max_star
    bool in_conjecture_range = false; // 2t <= mu
};

// Ground-truth verdict: compares the largest intersecting subfamily of the
// size-t independent sets against the largest star.
EkrVerdict ekr_check(const Tree& tree, uint32_t t, const SearchBudget& budget = {});

struct ScanEntry {
    uint32_t t = 0;
    bool budget_exceeded = false;
    std::string note; // failure detail when the budget was exceeded
    std::optional<EkrVerdict> verdict;
};

// One verdict per t in 1..floor(mu/2); budget failures are recorded in the
// entry, not thrown. Empty when mu < 2.
std::vector<ScanEntry> holroyd_talbot_scan(const Tree& tree, const SearchBudget& budget = {});

// Same stream shape over an explicit inclusive t range.
std::vector<ScanEntry> ekr_over_range(const Tree& tree, uint32_t t_lo, uint32_t t_hi,
                                      const SearchBudget& budget = {});

struct CenterReport {
    uint64_t max_star = 0;
    std::vector<uint32_t> argmax_vertices;
    bool any_leaf = false; // some argmax vertex has degree <= 1
};

// Which vertices center a maximum star, and whether a leaf is among them.
// Empty argmax when no size-t independent set exists.
CenterReport best_center_report(const Tree& tree, uint32_t t);

} // namespace spt

#endif // SPT_EKR_HPP
