#include "core/injections.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "core/enumeration.hpp"

namespace spt {
namespace {

void require_independent(const Spider& s, const VertexSet& a) {
    if (a.universe() != s.n())
        fail(ErrorCode::invalid_argument, "set universe does not match spider order " +
                                              std::to_string(s.n()));
    if (!s.tree().is_independent(a))
        fail(ErrorCode::invalid_argument, "input set " + a.to_string() + " is not independent");
}

void require_leg(const Spider& s, uint32_t i) {
    if (i < 1 || i > s.leg_count())
        fail(ErrorCode::invalid_argument, "leg index out of range: " + std::to_string(i));
}

// v_{i,h} with the convention v_{i,0} = v_0.
uint32_t leg_vertex(const Spider& s, uint32_t i, uint32_t h) {
    return h == 0 ? s.head() : s.vertex_id({i, h});
}

// Postconditions shared by all three maps.
void assert_image(const Spider& s, const VertexSet& a, const VertexSet& image,
                  uint32_t target) {
    if (image.count() != a.count())
        throw PostconditionError(ViolationKind::wrong_size,
                                 "image " + image.to_string() + " of " + a.to_string() +
                                     " changed size");
    if (!s.tree().is_independent(image))
        throw PostconditionError(ViolationKind::not_independent,
                                 "image " + image.to_string() + " of " + a.to_string() +
                                     " is not independent");
    if (!image.test(target))
        throw PostconditionError(ViolationKind::missing_target_vertex,
                                 "image " + image.to_string() + " of " + a.to_string() +
                                     " misses vertex " + std::to_string(target));
}

// Members of a (viewed along the vertex list path) as positions into path.
std::vector<uint32_t> trace_positions(const VertexSet& a, const std::vector<uint32_t>& path) {
    std::vector<uint32_t> pos;
    for (uint32_t p = 0; p < path.size(); ++p)
        if (a.test(path[p])) pos.push_back(p);
    return pos;
}

// a with its trace on path replaced by the positions new_pos.
VertexSet retrace(const VertexSet& a, const std::vector<uint32_t>& path,
                  const std::vector<uint32_t>& new_pos) {
    VertexSet out = a;
    for (uint32_t v : path) out.reset(v);
    for (uint32_t p : new_pos) out.set(path[p]);
    return out;
}

VertexSet set_minus_legs(const VertexSet& a, const Spider& s, uint32_t i, uint32_t j) {
    VertexSet out = a;
    out.reset(s.head());
    for (uint32_t h = 1; h <= s.leg_length(i); ++h) out.reset(s.vertex_id({i, h}));
    for (uint32_t h = 1; h <= s.leg_length(j); ++h) out.reset(s.vertex_id({j, h}));
    return out;
}

} // namespace

Ladder ladder_of(const VertexSet& a, const Spider& s, uint32_t i, uint32_t j) {
    require_independent(s, a);
    require_leg(s, i);
    require_leg(s, j);
    if (i == j) fail(ErrorCode::invalid_argument, "ladder needs two distinct legs");

    Ladder ladder;
    ladder.parity = a.test(s.head()) ? RungParity::even : RungParity::odd;
    uint32_t top = std::min(s.leg_length(i), s.leg_length(j));
    for (uint32_t h = ladder.parity == RungParity::even ? 2 : 1; h <= top; h += 2) {
        Rung r;
        r.h = h;
        r.v_i = s.vertex_id({i, h});
        r.v_j = s.vertex_id({j, h});
        r.full = a.test(r.v_i) && a.test(r.v_j);
        if (!r.full && !ladder.first_nonfull)
            ladder.first_nonfull = uint32_t(ladder.rungs.size());
        ladder.rungs.push_back(r);
    }
    if (ladder.first_nonfull)
        ladder.partial.assign(ladder.rungs.begin(), ladder.rungs.begin() + *ladder.first_nonfull);
    return ladder;
}

VertexSet flip_on_path(const VertexSet& a, const Spider& s, uint32_t i, uint32_t j) {
    require_independent(s, a);
    require_leg(s, i);
    uint32_t li = s.leg_length(i);
    if (j < 1 || j >= li)
        fail(ErrorCode::invalid_argument,
             "path start must satisfy 1 <= j < leg length, got j=" + std::to_string(j));
    if (!a.test(s.vertex_id({i, j})))
        fail(ErrorCode::invalid_argument,
             "input set " + a.to_string() + " does not contain the path start");

    // P = v_{i,j},..,v_{i,l_i}; mirror the trace: position h goes to
    // position (l_i - j) - h.
    std::vector<uint32_t> path;
    for (uint32_t h = j; h <= li; ++h) path.push_back(s.vertex_id({i, h}));
    std::vector<uint32_t> mirrored;
    for (uint32_t p : trace_positions(a, path)) mirrored.push_back(uint32_t(path.size()) - 1 - p);
    VertexSet image = retrace(a, path, mirrored);
    assert_image(s, a, image, s.leaf(i));
    return image;
}

VertexSet flip_on_leg(const VertexSet& a, const Spider& s, uint32_t i) {
    require_independent(s, a);
    require_leg(s, i);
    if (!a.test(s.head()))
        fail(ErrorCode::invalid_argument,
             "input set " + a.to_string() + " does not contain the head");
    if (a.test(s.leaf(i))) return a; // identity on sets already at the leaf

    std::vector<uint32_t> path;
    for (uint32_t h = 0; h <= s.leg_length(i); ++h) path.push_back(leg_vertex(s, i, h));
    std::vector<uint32_t> mirrored;
    for (uint32_t p : trace_positions(a, path)) mirrored.push_back(uint32_t(path.size()) - 1 - p);
    VertexSet image = retrace(a, path, mirrored);
    assert_image(s, a, image, s.leaf(i));
    return image;
}

MapResult map_best_leaf(const VertexSet& a, const Spider& s, uint32_t i, uint32_t j) {
    if (!s.in_spider_order())
        fail(ErrorCode::invalid_argument,
             "legs (" + s.descriptor() + ") are not in spider order");
    require_leg(s, i);
    require_leg(s, j);
    if (i >= j) fail(ErrorCode::invalid_argument, "legs must satisfy i < j");
    require_independent(s, a);
    if (!a.test(s.leaf(j)))
        fail(ErrorCode::invalid_argument,
             "input set " + a.to_string() + " does not contain the source leaf");

    uint32_t li = s.leg_length(i), lj = s.leg_length(j);
    uint32_t target = s.leaf(i);

    if (a.test(target)) return {a, MapCase::identity};

    Ladder ladder = ladder_of(a, s, i, j);
    VertexSet rest = set_minus_legs(a, s, i, j); // T: off both legs, head excluded

    if (!ladder.is_full()) {
        uint32_t h = ladder.rungs[*ladder.first_nonfull].h;

        // P runs from the source leaf up to the non-full rung, across it,
        // and down to the target leaf.
        std::vector<uint32_t> path;
        for (uint32_t g = lj; g >= h; --g) path.push_back(s.vertex_id({j, g}));
        for (uint32_t g = h; g <= li; ++g) path.push_back(s.vertex_id({i, g}));

        VertexSet partial_vertices(s.n());
        for (const Rung& r : ladder.partial) {
            partial_vertices.set(r.v_i);
            partial_vertices.set(r.v_j);
        }

        // The proof's decomposition: partial-ladder vertices, the trace on P,
        // the off-leg remainder, and possibly the head partition a exactly.
        VertexSet on_path = a;
        on_path.subtract(retrace(a, path, {}));
        VertexSet head_part(s.n());
        if (a.test(s.head())) head_part.set(s.head());
        VertexSet reunion = partial_vertices | on_path | rest | head_part;
        uint64_t pieces = uint64_t(partial_vertices.count()) + on_path.count() + rest.count() +
                          head_part.count();
        if (reunion != a || pieces != a.count())
            fail(ErrorCode::internal_assertion,
                 "partial-ladder decomposition does not partition " + a.to_string());

        std::vector<uint32_t> trace = trace_positions(a, path);
        uint32_t len = uint32_t(path.size());
        uint32_t d = len - 1 - trace.back(); // distance to the target leaf
        std::vector<uint32_t> slid;
        for (uint32_t p : trace) slid.push_back(p + d);

        VertexSet image = retrace(a, path, slid);
        // retrace starts from a, so partial rungs, T and the head carry over.
        if (image.test(s.head()) != a.test(s.head()))
            fail(ErrorCode::internal_assertion, "slide changed head membership");
        assert_image(s, a, image, target);
        return {image, MapCase::partial_ladder};
    }

    // Full ladder: the head must be present (forced by fullness and the
    // parities the spider order allows).
    if (!a.test(s.head()))
        fail(ErrorCode::internal_assertion,
             "full-ladder case reached without the head in " + a.to_string());
    if (li == lj)
        fail(ErrorCode::impossible_case,
             "full-ladder case with equal leg lengths has an empty domain");

    // P threads through the head; Q is the rest of the leaf-to-leaf path.
    std::vector<uint32_t> path, flank;
    if (lj < li) {
        for (uint32_t g = lj; g >= 1; --g) path.push_back(s.vertex_id({j, g}));
        path.push_back(s.head());
        for (uint32_t g = 1; g + 1 <= lj; ++g) path.push_back(s.vertex_id({i, g}));
        for (uint32_t g = lj; g <= li; ++g) flank.push_back(s.vertex_id({i, g}));
    } else {
        for (uint32_t g = li - 1; g >= 1; --g) path.push_back(s.vertex_id({j, g}));
        path.push_back(s.head());
        for (uint32_t g = 1; g <= li; ++g) path.push_back(s.vertex_id({i, g}));
        for (uint32_t g = lj; g >= li; --g) flank.push_back(s.vertex_id({j, g}));
    }

    std::vector<uint32_t> p_trace = trace_positions(a, path);
    if (!p_trace.empty() && p_trace.back() + 1 >= path.size())
        fail(ErrorCode::internal_assertion,
             "one-step shift would leave the path for " + a.to_string());
    std::vector<uint32_t> shifted;
    for (uint32_t p : p_trace) shifted.push_back(p + 1);

    std::vector<uint32_t> q_trace = trace_positions(a, flank);
    std::vector<uint32_t> flipped;
    for (uint32_t p : q_trace) flipped.push_back(uint32_t(flank.size()) - 1 - p);

    VertexSet image = rest;
    for (uint32_t p : shifted) image.set(path[p]);
    for (uint32_t p : flipped) image.set(flank[p]);
    if (image.test(s.head()))
        fail(ErrorCode::internal_assertion, "shift left the head inside the image");
    assert_image(s, a, image, target);
    return {image, MapCase::full_ladder};
}

namespace {

// Shared verifier loop: map every domain-star member, record postcondition
// failures and collisions, count distinct images.
InjectionReport run_star(const Spider& s, uint32_t theorem, uint32_t t, uint32_t i, uint32_t j,
                         const std::vector<VertexSet>& family, uint32_t center,
                         const std::function<VertexSet(const VertexSet&)>& map) {
    InjectionReport report;
    report.theorem = theorem;
    report.spider = s.descriptor();
    report.t = t;
    report.i = i;
    report.j = j;

    std::map<VertexSet, VertexSet> image_of; // image -> first preimage
    for (const VertexSet& a : family) {
        if (!a.test(center)) continue;
        ++report.domain_size;
        VertexSet b;
        try {
            b = map(a);
        } catch (const PostconditionError& e) {
            report.violations.push_back({a, e.kind()});
            continue;
        }
        auto [it, inserted] = image_of.emplace(b, a);
        if (!inserted)
            report.violations.push_back({a, ViolationKind::collision});
    }
    report.image_size = image_of.size();
    return report;
}

} // namespace

std::vector<InjectionReport> verify_theorem_1(const Spider& s, uint32_t t) {
    std::vector<VertexSet> family = enum_indep_sets(s.tree(), t);
    std::vector<InjectionReport> reports;
    for (uint32_t i = 1; i <= s.leg_count(); ++i) {
        for (uint32_t j = 1; j < s.leg_length(i); ++j) {
            reports.push_back(run_star(
                s, 1, t, i, j, family, s.vertex_id({i, j}),
                [&](const VertexSet& a) { return flip_on_path(a, s, i, j); }));
        }
    }
    return reports;
}

std::vector<InjectionReport> verify_theorem_2(const Spider& s, uint32_t t) {
    std::vector<VertexSet> family = enum_indep_sets(s.tree(), t);
    std::vector<InjectionReport> reports;
    for (uint32_t i = 1; i <= s.leg_count(); ++i) {
        reports.push_back(run_star(s, 2, t, i, 0, family, s.head(),
                                   [&](const VertexSet& a) { return flip_on_leg(a, s, i); }));
    }
    return reports;
}

std::vector<InjectionReport> verify_theorem_3(const Spider& s, uint32_t t) {
    if (!s.in_spider_order())
        fail(ErrorCode::invalid_argument,
             "legs (" + s.descriptor() + ") are not in spider order");
    std::vector<VertexSet> family = enum_indep_sets(s.tree(), t);
    std::vector<InjectionReport> reports;
    for (uint32_t i = 1; i <= s.leg_count(); ++i) {
        for (uint32_t j = i + 1; j <= s.leg_count(); ++j) {
            reports.push_back(
                run_star(s, 3, t, i, j, family, s.leaf(j),
                         [&](const VertexSet& a) { return map_best_leaf(a, s, i, j).image; }));
        }
    }
    return reports;
}

} // namespace spt
