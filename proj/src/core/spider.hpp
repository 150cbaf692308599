#ifndef SPT_SPIDER_HPP
#define SPT_SPIDER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "core/tree.hpp"

namespace spt {

// Position in a spider: the head, or (leg, height) with 1-based leg index i
// and height 1..l_i measured outward from the head.
struct Coordinate {
    uint32_t leg = 0;    // 0 means head
    uint32_t height = 0; // 0 iff head

    bool is_head() const { return leg == 0; }
    friend bool operator==(const Coordinate&, const Coordinate&) = default;
};

// Spider: one head vertex with k pendant paths (legs) of lengths l_1..l_k.
// Vertex ids are deterministic: head = 0, then each leg's vertices in height
// order, legs in input order. So v_{i,j} = 1 + l_1 + ... + l_{i-1} + (j-1).
class Spider {
public:
    static Spider make(const std::vector<uint32_t>& legs);
    static Spider from_descriptor(const std::string& descriptor);

    const std::vector<uint32_t>& legs() const { return legs_; }
    uint32_t leg_count() const { return uint32_t(legs_.size()); }
    uint32_t leg_length(uint32_t i) const; // i is 1-based
    uint32_t n() const { return tree_.n(); }
    const Tree& tree() const { return tree_; }

    uint32_t head() const { return 0; }
    uint32_t vertex_id(Coordinate c) const;
    Coordinate coordinate_of(uint32_t id) const;
    uint32_t leaf(uint32_t i) const; // id of v_{i,l_i}

    std::string descriptor() const;
    bool in_spider_order() const;
    Spider ordered() const; // legs permuted into spider order

private:
    Spider() = default;

    std::vector<uint32_t> legs_;
    std::vector<uint32_t> leg_base_; // leg_base_[i-1] + j = id of v_{i,j}
    Tree tree_ = Tree::from_edges(1, {});
};

// Permutes leg lengths into spider order: odd lengths first in nondecreasing
// order, then even lengths in nonincreasing order; equal lengths keep their
// input relative order.
std::vector<uint32_t> spider_order(std::vector<uint32_t> legs);

std::vector<uint32_t> parse_descriptor(const std::string& descriptor);
std::string format_descriptor(const std::vector<uint32_t>& legs);

} // namespace spt

#endif // SPT_SPIDER_HPP
