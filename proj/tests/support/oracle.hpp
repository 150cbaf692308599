#ifndef SPT_TESTS_ORACLE_HPP
#define SPT_TESTS_ORACLE_HPP

// Brute-force reference implementations the tests compare the library
// against. Everything enumerates combinations or bitmasks directly; nothing
// here shares code with the DP, the injection maps, or the clique search.

#include <cstdint>
#include <vector>

#include "core/tree.hpp"
#include "core/vertex_set.hpp"

namespace oracle {

inline bool is_independent(const spt::Tree& tree, const std::vector<uint32_t>& vertices) {
    for (size_t a = 0; a < vertices.size(); ++a)
        for (size_t b = a + 1; b < vertices.size(); ++b)
            if (tree.has_edge(vertices[a], vertices[b])) return false;
    return true;
}

// All size-t independent sets as ascending id lists, in lexicographic order.
inline std::vector<std::vector<uint32_t>> independent_sets(const spt::Tree& tree, uint32_t t) {
    std::vector<std::vector<uint32_t>> found;
    uint32_t n = tree.n();
    if (t > n) return found;
    if (t == 0) {
        found.push_back({});
        return found;
    }
    std::vector<uint32_t> pick(t);
    for (uint32_t k = 0; k < t; ++k) pick[k] = k;
    for (;;) {
        if (is_independent(tree, pick)) found.push_back(pick);
        // advance to the next combination in lexicographic order
        uint32_t k = t;
        while (k > 0 && pick[k - 1] == n - t + (k - 1)) --k;
        if (k == 0) break;
        ++pick[k - 1];
        for (uint32_t m = k; m < t; ++m) pick[m] = pick[m - 1] + 1;
    }
    return found;
}

struct StarCensus {
    uint64_t total = 0;
    std::vector<uint64_t> counts;
};

inline StarCensus star_census(const spt::Tree& tree, uint32_t t) {
    StarCensus census;
    census.counts.assign(tree.n(), 0);
    for (const auto& set : independent_sets(tree, t)) {
        ++census.total;
        for (uint32_t v : set) ++census.counts[v];
    }
    return census;
}

inline uint32_t alpha(const spt::Tree& tree) {
    for (uint32_t t = tree.n(); t >= 1; --t)
        if (!independent_sets(tree, t).empty()) return t;
    return 0;
}

// Minimum maximal independent set size by scanning all vertex subsets; keep
// n small (<= 20) at call sites.
inline uint32_t mu(const spt::Tree& tree) {
    uint32_t n = tree.n();
    uint32_t best = n;
    for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
        std::vector<uint32_t> members;
        for (uint32_t v = 0; v < n; ++v)
            if (mask >> v & 1) members.push_back(v);
        if (!is_independent(tree, members)) continue;
        bool maximal = true;
        for (uint32_t u = 0; u < n && maximal; ++u) {
            if (mask >> u & 1) continue;
            bool blocked = false;
            for (uint32_t w : tree.neighbors(u))
                if (mask >> w & 1) blocked = true;
            if (!blocked) maximal = false;
        }
        if (maximal && members.size() < best) best = uint32_t(members.size());
    }
    return best;
}

// Maximum pairwise-intersecting subfamily size by scanning all subfamily
// masks; keep the family small (<= 20) at call sites.
inline uint64_t max_intersecting(const std::vector<spt::VertexSet>& family) {
    size_t m = family.size();
    uint64_t best = 0;
    for (uint64_t mask = 0; mask < (uint64_t(1) << m); ++mask) {
        bool ok = true;
        for (size_t a = 0; a < m && ok; ++a) {
            if (!(mask >> a & 1)) continue;
            for (size_t b = a + 1; b < m && ok; ++b)
                if ((mask >> b & 1) && !family[a].intersects(family[b])) ok = false;
        }
        if (!ok) continue;
        uint64_t size = uint64_t(__builtin_popcountll(mask));
        if (size > best) best = size;
    }
    return best;
}

// Lexicographically least maximum intersecting subfamily, as a list of sets
// ascending in set order. Assumes `family` itself is sorted ascending.
inline std::vector<spt::VertexSet> lex_least_max_intersecting(
    const std::vector<spt::VertexSet>& family) {
    size_t m = family.size();
    uint64_t best = max_intersecting(family);
    std::vector<spt::VertexSet> winner;
    for (uint64_t mask = 0; mask < (uint64_t(1) << m); ++mask) {
        if (uint64_t(__builtin_popcountll(mask)) != best) continue;
        bool ok = true;
        std::vector<spt::VertexSet> candidate;
        for (size_t a = 0; a < m && ok; ++a) {
            if (!(mask >> a & 1)) continue;
            for (size_t b = a + 1; b < m && ok; ++b)
                if ((mask >> b & 1) && !family[a].intersects(family[b])) ok = false;
            candidate.push_back(family[a]);
        }
        if (!ok) continue;
        if (winner.empty() || candidate < winner) winner = std::move(candidate);
    }
    return winner;
}

} // namespace oracle

#endif // SPT_TESTS_ORACLE_HPP
