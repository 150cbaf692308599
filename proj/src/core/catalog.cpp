#include "core/catalog.hpp"

namespace spt {
namespace {

void partitions_into(uint32_t remaining, uint32_t max_part, std::vector<uint32_t>& prefix,
                     std::vector<std::vector<uint32_t>>& out) {
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (uint32_t part = std::min(max_part, remaining); part >= 1; --part) {
        prefix.push_back(part);
        partitions_into(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<std::vector<uint32_t>> spider_catalog(uint32_t max_n) {
    std::vector<std::vector<uint32_t>> out;
    std::vector<uint32_t> prefix;
    for (uint32_t n = 2; n <= max_n; ++n)
        partitions_into(n - 1, n - 1, prefix, out);
    return out;
}

} // namespace spt
