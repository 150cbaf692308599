#ifndef SPT_CATALOG_HPP
#define SPT_CATALOG_HPP

#include <cstdint>
#include <vector>

namespace spt {

// Every spider with 2..max_n vertices, one leg multiset each: for each order
// n the entries are the partitions of n-1 with parts descending, listed in
// reverse lexicographic order. Spiders with equal multisets are isomorphic,
// so this is one representative per isomorphism class.
std::vector<std::vector<uint32_t>> spider_catalog(uint32_t max_n);

} // namespace spt

#endif // SPT_CATALOG_HPP
