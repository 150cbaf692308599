#include "core/ekr.hpp"

#include <algorithm>
#include <numeric>

#include "core/enumeration.hpp"
#include "core/errors.hpp"

namespace spt {
namespace {

// Bounded Tomita-style maximum clique over an adjacency given as bit rows.
// Vertices are indices 0..m-1; determinism comes from fixed index order.
class CliqueSearch {
public:
    CliqueSearch(const std::vector<VertexSet>& adj, uint64_t max_nodes)
        : adj_(adj), max_nodes_(max_nodes) {}

    // Largest clique size within cand, never smaller than lower_bound.
    // Returns early once stop_at is reached, making the (>= stop_at) decision
    // exact while skipping the rest of the search.
    uint32_t run(const VertexSet& cand, uint32_t lower_bound, uint32_t stop_at) {
        best_ = lower_bound;
        stop_at_ = stop_at;
        expand(cand, 0);
        return best_;
    }

private:
    void expand(VertexSet cand, uint32_t cur) {
        if (++nodes_ > max_nodes_)
            fail(ErrorCode::budget_exceeded, "intersecting-family search exceeded its node budget (" +
                                                 std::to_string(max_nodes_) + ")");
        if (cur > best_) best_ = cur;
        if (best_ >= stop_at_ || cand.empty()) return;

        // Greedy coloring: a clique inside the first c color classes has at
        // most c vertices, so cur + color bounds any completion.
        std::vector<std::vector<uint32_t>> classes;
        for (uint32_t v = cand.next(0); v < cand.universe(); v = cand.next(v + 1)) {
            bool placed = false;
            for (auto& cls : classes) {
                bool conflict = false;
                for (uint32_t u : cls)
                    if (adj_[v].test(u)) {
                        conflict = true;
                        break;
                    }
                if (!conflict) {
                    cls.push_back(v);
                    placed = true;
                    break;
                }
            }
            if (!placed) classes.push_back({v});
        }
        std::vector<uint32_t> order, color;
        for (uint32_t c = 0; c < classes.size(); ++c)
            for (uint32_t v : classes[c]) {
                order.push_back(v);
                color.push_back(c + 1);
            }

        for (size_t idx = order.size(); idx-- > 0;) {
            if (best_ >= stop_at_) return;
            if (cur + color[idx] <= best_) return; // no completion can beat best
            uint32_t v = order[idx];
            expand(cand & adj_[v], cur + 1);
            cand.reset(v);
        }
    }

    const std::vector<VertexSet>& adj_;
    uint64_t max_nodes_;
    uint64_t nodes_ = 0;
    uint32_t best_ = 0;
    uint32_t stop_at_ = UINT32_MAX;
};

VertexSet full_mask(uint32_t m) {
    VertexSet s(m);
    for (uint32_t p = 0; p < m; ++p) s.set(p);
    return s;
}

} // namespace

IntersectingFamilyResult max_intersecting_family(const std::vector<VertexSet>& family,
                                                 const SearchBudget& budget) {
    if (family.size() > budget.max_family)
        fail(ErrorCode::budget_exceeded,
             "family of " + std::to_string(family.size()) + " sets exceeds the size budget of " +
                 std::to_string(budget.max_family));
    IntersectingFamilyResult result;
    if (family.empty()) return result;

    // Work in ascending set order so index order is witness order.
    std::vector<VertexSet> sets = family;
    std::sort(sets.begin(), sets.end());
    if (std::adjacent_find(sets.begin(), sets.end()) != sets.end())
        fail(ErrorCode::invalid_argument, "family contains duplicate sets");

    uint32_t m = uint32_t(sets.size());
    std::vector<VertexSet> adj(m, VertexSet(m));
    for (uint32_t p = 0; p < m; ++p)
        for (uint32_t q = p + 1; q < m; ++q)
            if (sets[p].intersects(sets[q])) {
                adj[p].set(q);
                adj[q].set(p);
            }

    // Search in descending intersection-degree order (relabeled), with a
    // greedy clique as the initial bound.
    std::vector<uint32_t> by_degree(m);
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](uint32_t p, uint32_t q) { return adj[p].count() > adj[q].count(); });
    std::vector<uint32_t> to_search(m);
    for (uint32_t p = 0; p < m; ++p) to_search[by_degree[p]] = p;
    std::vector<VertexSet> search_adj(m, VertexSet(m));
    for (uint32_t p = 0; p < m; ++p)
        for (uint32_t q = adj[p].next(0); q < m; q = adj[p].next(q + 1))
            search_adj[to_search[p]].set(to_search[q]);

    uint32_t greedy = 0;
    {
        VertexSet cand = full_mask(m);
        for (uint32_t p = cand.next(0); p < m; p = cand.next(p + 1)) {
            ++greedy;
            cand &= search_adj[p];
        }
    }

    CliqueSearch search(search_adj, budget.max_nodes);
    uint32_t omega = search.run(full_mask(m), greedy, UINT32_MAX);
    result.size = omega;

    // Lexicographically least maximum witness: fix the smallest set (in set
    // order) whose neighborhood still completes to a full-size clique, then
    // recurse into that neighborhood.
    VertexSet cand = full_mask(m); // set-order index space
    uint32_t fixed = 0;
    uint32_t from = 0;
    while (fixed < omega) {
        bool advanced = false;
        for (uint32_t p = cand.next(from); p < m; p = cand.next(p + 1)) {
            uint32_t need = omega - fixed - 1;
            VertexSet rest = cand & adj[p];
            bool completes = true;
            if (need > 0) {
                VertexSet search_rest(m);
                for (uint32_t q = rest.next(0); q < m; q = rest.next(q + 1))
                    search_rest.set(to_search[q]);
                completes = search.run(search_rest, need - 1, need) >= need;
            }
            if (completes) {
                result.witness.push_back(sets[p]);
                ++fixed;
                cand = rest;
                from = p + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced)
            fail(ErrorCode::internal_assertion, "witness reconstruction lost the maximum clique");
    }

    for (size_t p = 0; p < result.witness.size(); ++p)
        for (size_t q = p + 1; q < result.witness.size(); ++q)
            if (!result.witness[p].intersects(result.witness[q]))
                fail(ErrorCode::internal_assertion, "witness family is not intersecting");
    return result;
}

EkrVerdict ekr_check(const Tree& tree, uint32_t t, const SearchBudget& budget) {
    if (t == 0) fail(ErrorCode::invalid_argument, "set size t must be positive");
    EkrVerdict verdict;
    verdict.t = t;
    verdict.mu = mu(tree);
    verdict.alpha = alpha(tree);

    IntersectingFamilyResult mif = max_intersecting_family(enum_indep_sets(tree, t), budget);
    verdict.max_intersecting = mif.size;
    verdict.witness = std::move(mif.witness);

    CenterReport centers = best_center_report(tree, t);
    verdict.max_star = centers.max_star;
    verdict.argmax_vertices = std::move(centers.argmax_vertices);

    verdict.is_t_ekr = verdict.max_intersecting <= verdict.max_star;
    verdict.in_conjecture_range = 2 * uint64_t(t) <= verdict.mu;
    return verdict;
}

std::vector<ScanEntry> ekr_over_range(const Tree& tree, uint32_t t_lo, uint32_t t_hi,
                                      const SearchBudget& budget) {
    if (t_lo == 0) fail(ErrorCode::invalid_argument, "t range must start at 1 or above");
    std::vector<ScanEntry> entries;
    for (uint32_t t = t_lo; t <= t_hi; ++t) {
        ScanEntry entry;
        entry.t = t;
        try {
            entry.verdict = ekr_check(tree, t, budget);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::budget_exceeded) throw;
            entry.budget_exceeded = true;
            entry.note = e.what();
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

std::vector<ScanEntry> holroyd_talbot_scan(const Tree& tree, const SearchBudget& budget) {
    uint32_t m = mu(tree);
    if (m < 2) return {};
    return ekr_over_range(tree, 1, m / 2, budget);
}

CenterReport best_center_report(const Tree& tree, uint32_t t) {
    StarTable table = star_sizes(tree, t);
    CenterReport report;
    if (table.total == 0) return report; // no size-t independent sets
    report.max_star = *std::max_element(table.counts.begin(), table.counts.end());
    for (uint32_t v = 0; v < tree.n(); ++v)
        if (table.counts[v] == report.max_star) report.argmax_vertices.push_back(v);
    for (uint32_t v : report.argmax_vertices)
        if (tree.degree(v) <= 1) {
            report.any_leaf = true;
            break;
        }
    return report;
}

} // namespace spt
