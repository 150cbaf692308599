#include "core/spider.hpp"

#include <algorithm>
#include <charconv>

#include "core/errors.hpp"

namespace spt {

Spider Spider::make(const std::vector<uint32_t>& legs) {
    if (legs.empty()) fail(ErrorCode::invalid_argument, "spider needs at least one leg");
    uint64_t n = 1;
    for (uint32_t l : legs) {
        if (l == 0) fail(ErrorCode::invalid_argument, "leg lengths must be positive");
        n += l;
    }
    if (n > UINT32_MAX) fail(ErrorCode::invalid_argument, "spider too large");

    Spider s;
    s.legs_ = legs;
    s.leg_base_.reserve(legs.size());
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    edges.reserve(size_t(n) - 1);
    uint32_t next_id = 1;
    for (uint32_t l : legs) {
        s.leg_base_.push_back(next_id - 1); // leg_base + j = id of v_{i,j}
        edges.emplace_back(0u, next_id);
        for (uint32_t j = 1; j < l; ++j) edges.emplace_back(next_id + j - 1, next_id + j);
        next_id += l;
    }
    s.tree_ = Tree::from_edges(uint32_t(n), edges);
    return s;
}

Spider Spider::from_descriptor(const std::string& descriptor) {
    return make(parse_descriptor(descriptor));
}

uint32_t Spider::leg_length(uint32_t i) const {
    if (i < 1 || i > legs_.size())
        fail(ErrorCode::invalid_argument, "leg index out of range: " + std::to_string(i));
    return legs_[i - 1];
}

uint32_t Spider::vertex_id(Coordinate c) const {
    if (c.is_head()) {
        if (c.height != 0)
            fail(ErrorCode::invalid_argument, "head coordinate must have height 0");
        return 0;
    }
    if (c.leg > legs_.size() || c.height < 1 || c.height > legs_[c.leg - 1])
        fail(ErrorCode::invalid_argument,
             "coordinate out of range: (" + std::to_string(c.leg) + "," +
                 std::to_string(c.height) + ")");
    return leg_base_[c.leg - 1] + c.height;
}

Coordinate Spider::coordinate_of(uint32_t id) const {
    if (id >= n()) fail(ErrorCode::invalid_argument, "vertex id out of range: " + std::to_string(id));
    if (id == 0) return {};
    // leg_base_ is strictly increasing; find the leg whose id range contains id.
    auto it = std::upper_bound(leg_base_.begin(), leg_base_.end(), id - 1);
    uint32_t leg = uint32_t(it - leg_base_.begin());
    return {leg, id - leg_base_[leg - 1]};
}

uint32_t Spider::leaf(uint32_t i) const {
    return vertex_id({i, leg_length(i)});
}

std::string Spider::descriptor() const { return format_descriptor(legs_); }

bool Spider::in_spider_order() const {
    bool seen_even = false;
    for (size_t m = 0; m < legs_.size(); ++m) {
        bool even = legs_[m] % 2 == 0;
        if (even) seen_even = true;
        else if (seen_even) return false; // odd after an even
        if (m > 0 && legs_[m - 1] % 2 == legs_[m] % 2) {
            if (even ? legs_[m - 1] < legs_[m] : legs_[m - 1] > legs_[m]) return false;
        }
    }
    return true;
}

Spider Spider::ordered() const { return make(spider_order(legs_)); }

std::vector<uint32_t> spider_order(std::vector<uint32_t> legs) {
    std::stable_sort(legs.begin(), legs.end(), [](uint32_t a, uint32_t b) {
        bool ao = a % 2, bo = b % 2;
        if (ao != bo) return ao;     // odd lengths first
        return ao ? a < b : a > b;   // odds ascending, evens descending
    });
    return legs;
}

std::vector<uint32_t> parse_descriptor(const std::string& descriptor) {
    std::vector<uint32_t> legs;
    size_t pos = 0;
    while (true) {
        size_t comma = descriptor.find(',', pos);
        std::string_view tok(descriptor.data() + pos,
                             (comma == std::string::npos ? descriptor.size() : comma) - pos);
        while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
        while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.remove_suffix(1);
        uint32_t value = 0;
        auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc{} || end != tok.data() + tok.size() || value == 0)
            fail(ErrorCode::invalid_argument,
                 "invalid spider descriptor \"" + descriptor +
                     "\": expected comma-separated positive integers");
        legs.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return legs;
}

std::string format_descriptor(const std::vector<uint32_t>& legs) {
    std::string out;
    for (size_t m = 0; m < legs.size(); ++m) {
        if (m) out += ',';
        out += std::to_string(legs[m]);
    }
    return out;
}

} // namespace spt
