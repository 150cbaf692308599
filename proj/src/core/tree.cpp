#include "core/tree.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "core/errors.hpp"

namespace spt {

Tree Tree::from_edges(uint32_t n,
                      const std::vector<std::pair<uint32_t, uint32_t>>& edges) {
    if (n == 0) fail(ErrorCode::invalid_argument, "tree must have at least one vertex");
    if (edges.size() != size_t(n) - 1)
        fail(ErrorCode::invalid_argument,
             "tree on " + std::to_string(n) + " vertices needs " + std::to_string(n - 1) +
                 " edges, got " + std::to_string(edges.size()));

    Tree t;
    t.n_ = n;
    t.adj_.assign(n, {});
    t.edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            fail(ErrorCode::invalid_argument,
                 "edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
        if (u == v)
            fail(ErrorCode::invalid_argument, "self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        t.edges_.emplace_back(u, v);
    }
    std::sort(t.edges_.begin(), t.edges_.end());
    if (std::adjacent_find(t.edges_.begin(), t.edges_.end()) != t.edges_.end())
        fail(ErrorCode::invalid_argument, "duplicate edge");
    for (auto [u, v] : t.edges_) {
        t.adj_[u].push_back(v);
        t.adj_[v].push_back(u);
    }
    for (auto& nb : t.adj_) std::sort(nb.begin(), nb.end());

    // n-1 edges without duplicates: connected iff acyclic; BFS checks both.
    std::vector<char> seen(n, 0);
    std::vector<uint32_t> queue{0};
    seen[0] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
        for (uint32_t w : t.adj_[queue[head]]) {
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
        }
    }
    if (queue.size() != n) fail(ErrorCode::invalid_argument, "edge list is not connected");
    return t;
}

Tree Tree::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::io_error, "cannot open tree file: " + path);

    std::string line;
    uint32_t n = 0;
    size_t edge_count = 0;
    bool got_header = false;
    std::vector<std::pair<uint32_t, uint32_t>> edges;

    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        if (!got_header) {
            std::string tag;
            long long cnt = -1;
            if (!(ls >> tag >> cnt) || tag != "n" || cnt < 0)
                fail(ErrorCode::invalid_argument,
                     path + ":" + std::to_string(line_no) + ": expected header \"n <count>\"");
            n = uint32_t(cnt);
            if (n >= 1) edge_count = size_t(n) - 1;
            got_header = true;
            continue;
        }
        long long u = -1, v = -1;
        if (!(ls >> u)) continue; // blank line
        if (!(ls >> v) || u < 0 || v < 0)
            fail(ErrorCode::invalid_argument,
                 path + ":" + std::to_string(line_no) + ": expected edge \"u v\"");
        std::string rest;
        if (ls >> rest)
            fail(ErrorCode::invalid_argument,
                 path + ":" + std::to_string(line_no) + ": trailing tokens after edge");
        edges.emplace_back(uint32_t(u), uint32_t(v));
    }
    if (!got_header) fail(ErrorCode::invalid_argument, path + ": empty tree file");
    if (edges.size() != edge_count)
        fail(ErrorCode::invalid_argument,
             path + ": header announces " + std::to_string(edge_count) + " edges, file has " +
                 std::to_string(edges.size()));
    return from_edges(n, edges);
}

const std::vector<uint32_t>& Tree::neighbors(uint32_t v) const {
    if (v >= n_) fail(ErrorCode::invalid_argument, "vertex out of range: " + std::to_string(v));
    return adj_[v];
}

bool Tree::has_edge(uint32_t u, uint32_t v) const {
    const auto& nb = neighbors(u);
    if (v >= n_) fail(ErrorCode::invalid_argument, "vertex out of range: " + std::to_string(v));
    return std::binary_search(nb.begin(), nb.end(), v);
}

bool Tree::is_independent(const VertexSet& s) const {
    if (s.universe() != n_)
        fail(ErrorCode::invalid_argument, "vertex set universe does not match tree order");
    for (auto [u, v] : edges_)
        if (s.test(u) && s.test(v)) return false;
    return true;
}

std::vector<uint32_t> Tree::leaves() const {
    std::vector<uint32_t> out;
    for (uint32_t v = 0; v < n_; ++v)
        if (adj_[v].size() <= 1) out.push_back(v);
    return out;
}

} // namespace spt
