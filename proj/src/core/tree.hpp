#ifndef SPT_TREE_HPP
#define SPT_TREE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "core/vertex_set.hpp"

namespace spt {

// Undirected tree on vertices 0..n-1 with sorted adjacency lists.
// Construction validates treeness: exactly n-1 edges, no self-loops,
// no duplicate edges, connected.
class Tree {
public:
    static Tree from_edges(uint32_t n,
                           const std::vector<std::pair<uint32_t, uint32_t>>& edges);

    // File format: first line "n <count>", then one "u v" pair per line.
    static Tree load(const std::string& path);

    uint32_t n() const { return n_; }
    const std::vector<uint32_t>& neighbors(uint32_t v) const;
    uint32_t degree(uint32_t v) const { return uint32_t(neighbors(v).size()); }
    bool has_edge(uint32_t u, uint32_t v) const;

    // True iff no edge has both endpoints in s. s must live on this vertex set.
    bool is_independent(const VertexSet& s) const;

    // Vertices of degree <= 1, ascending. On the one-vertex tree this is {0}.
    std::vector<uint32_t> leaves() const;

    const std::vector<std::pair<uint32_t, uint32_t>>& edges() const { return edges_; }

private:
    Tree() = default;

    uint32_t n_ = 0;
    std::vector<std::vector<uint32_t>> adj_;
    std::vector<std::pair<uint32_t, uint32_t>> edges_; // normalized u < v, sorted
};

} // namespace spt

#endif // SPT_TREE_HPP
