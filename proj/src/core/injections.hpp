#ifndef SPT_INJECTIONS_HPP
#define SPT_INJECTIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/errors.hpp"
#include "core/spider.hpp"
#include "core/vertex_set.hpp"

namespace spt {

// Height-matched vertex pair across two legs. Full means both endpoints lie
// in the set under analysis.
struct Rung {
    uint32_t h = 0;
    uint32_t v_i = 0;
    uint32_t v_j = 0;
    bool full = false;
};

enum class RungParity { odd, even };

// The rungs of one parity between two legs, in increasing height. Parity is
// even exactly when the head belongs to the set. partial holds the full rungs
// strictly below the first non-full one.
struct Ladder {
    RungParity parity = RungParity::odd;
    std::vector<Rung> rungs;
    std::optional<uint32_t> first_nonfull; // index into rungs
    std::vector<Rung> partial;

    bool is_full() const { return !first_nonfull.has_value(); }
};

Ladder ladder_of(const VertexSet& a, const Spider& s, uint32_t i, uint32_t j);

// Mirrors the trace of a on the subpath v_{i,j}..v_{i,l_i} of leg i, keeping
// the rest of a fixed. Requires v_{i,j} in a and 1 <= j < l_i. The image
// contains the leaf v_{i,l_i}.
VertexSet flip_on_path(const VertexSet& a, const Spider& s, uint32_t i, uint32_t j);

// Mirrors the trace of a on the whole leg v_0,v_{i,1},..,v_{i,l_i}, keeping
// the rest fixed; identity when a already contains the leaf. Requires the
// head in a. The image contains the leaf.
VertexSet flip_on_leg(const VertexSet& a, const Spider& s, uint32_t i);

enum class MapCase { identity, partial_ladder, full_ladder };

struct MapResult {
    VertexSet image;
    MapCase used = MapCase::identity;
};

// Sends a set containing the leaf of leg j to one containing the leaf of
// leg i (i < j, legs in spider order): identity when possible, otherwise a
// slide along the path through the first non-full rung, otherwise (full
// ladder, head necessarily present) a one-step shift through the head
// combined with a flip on the leftover leg segment.
MapResult map_best_leaf(const VertexSet& a, const Spider& s, uint32_t i, uint32_t j);

struct Violation {
    VertexSet input;
    ViolationKind kind = ViolationKind::not_independent;
};

// Outcome of running one injection over one domain star. Verified means no
// violations and image as large as the domain.
struct InjectionReport {
    uint32_t theorem = 0;
    std::string spider;
    uint32_t t = 0;
    uint32_t i = 0; // target leg
    uint32_t j = 0; // path start (thm 1), 0 (thm 2), source leg (thm 3)
    uint64_t domain_size = 0;
    uint64_t image_size = 0;
    std::vector<Violation> violations;

    bool verified() const { return violations.empty() && image_size == domain_size; }
};

// Each verifier applies its map to every member of every admissible domain
// star, in lexicographic set order, records postcondition failures and
// collisions as violations, and returns one report per (i, j) instance.
// Stars above the independence number are empty and verify vacuously.
std::vector<InjectionReport> verify_theorem_1(const Spider& s, uint32_t t);
std::vector<InjectionReport> verify_theorem_2(const Spider& s, uint32_t t);
// Requires legs in spider order.
std::vector<InjectionReport> verify_theorem_3(const Spider& s, uint32_t t);

} // namespace spt

#endif // SPT_INJECTIONS_HPP
