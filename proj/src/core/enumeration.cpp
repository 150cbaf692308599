#include "core/enumeration.hpp"

#include <algorithm>

#include "core/errors.hpp"

namespace spt {
namespace {

uint64_t checked_add(uint64_t a, uint64_t b) {
    uint64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::overflow, "count overflow in addition");
    return r;
}

uint64_t checked_mul(uint64_t a, uint64_t b) {
    uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        fail(ErrorCode::overflow, "count overflow in multiplication");
    return r;
}

// Size-indexed counts: poly[s] = number of independent sets of size s.
using Poly = std::vector<uint64_t>;

Poly convolve(const Poly& a, const Poly& b, uint32_t cap) {
    Poly r(std::min(a.size() + b.size() - 1, size_t(cap) + 1), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size() && i + j <= cap; ++j) {
            if (!b[j]) continue;
            r[i + j] = checked_add(r[i + j], checked_mul(a[i], b[j]));
        }
    }
    return r;
}

struct InOut {
    Poly in;  // root of the subtree included
    Poly out; // root excluded
};

// Rooted DP over the whole tree; polynomials truncated past degree cap.
InOut run_dp(const Tree& tree, uint32_t root, uint32_t cap) {
    uint32_t n = tree.n();
    std::vector<uint32_t> order;
    order.reserve(n);
    std::vector<uint32_t> parent(n, UINT32_MAX);
    std::vector<char> seen(n, 0);
    order.push_back(root);
    seen[root] = 1;
    for (size_t h = 0; h < order.size(); ++h) {
        for (uint32_t w : tree.neighbors(order[h])) {
            if (!seen[w]) {
                seen[w] = 1;
                parent[w] = order[h];
                order.push_back(w);
            }
        }
    }

    std::vector<InOut> f(n);
    // Reverse BFS order puts every child before its parent.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        uint32_t v = *it;
        Poly in{0, 1};
        Poly out{1};
        for (uint32_t w : tree.neighbors(v)) {
            if (w == parent[v]) continue;
            in = convolve(in, f[w].out, cap);
            Poly either = f[w].out; // child in or out
            if (either.size() < f[w].in.size()) either.resize(f[w].in.size(), 0);
            for (size_t s = 0; s < f[w].in.size(); ++s)
                either[s] = checked_add(either[s], f[w].in[s]);
            out = convolve(out, either, cap);
        }
        f[v] = {std::move(in), std::move(out)};
    }
    return std::move(f[root]);
}

uint64_t coeff(const Poly& p, uint32_t s) { return s < p.size() ? p[s] : 0; }

void require_positive_t(uint32_t t) {
    if (t == 0) fail(ErrorCode::invalid_argument, "set size t must be positive");
}

} // namespace

std::vector<VertexSet> enum_indep_sets(const Tree& tree, uint32_t t) {
    require_positive_t(t);
    std::vector<VertexSet> out;
    uint32_t n = tree.n();
    if (t > n) return out;

    VertexSet cur(n);
    std::vector<uint32_t> blocked(n, 0); // chosen-neighbor counts
    uint32_t picked = 0;

    // Extending by ascending vertex id emits ascending element lists in
    // lexicographic order directly.
    auto rec = [&](auto&& self, uint32_t start) -> void {
        if (picked == t) {
            out.push_back(cur);
            return;
        }
        uint32_t need = t - picked;
        for (uint32_t v = start; v + need <= n; ++v) {
            if (blocked[v]) continue;
            cur.set(v);
            ++picked;
            for (uint32_t w : tree.neighbors(v)) ++blocked[w];
            self(self, v + 1);
            for (uint32_t w : tree.neighbors(v)) --blocked[w];
            --picked;
            cur.reset(v);
        }
    };
    rec(rec, 0);
    return out;
}

StarTable star_sizes(const Tree& tree, uint32_t t) {
    require_positive_t(t);
    StarTable table;
    table.t = t;
    table.counts.assign(tree.n(), 0);
    if (t > tree.n()) return table;

    for (uint32_t x = 0; x < tree.n(); ++x)
        table.counts[x] = coeff(run_dp(tree, x, t).in, t);

    InOut whole = run_dp(tree, 0, t);
    table.total = checked_add(coeff(whole.in, t), coeff(whole.out, t));

    uint64_t sum = 0;
    for (uint64_t c : table.counts) sum = checked_add(sum, c);
    if (sum != checked_mul(t, table.total))
        fail(ErrorCode::internal_assertion, "star counts fail the handshake identity");
    return table;
}

uint32_t alpha(const Tree& tree) {
    uint32_t n = tree.n();
    std::vector<uint32_t> order;
    order.reserve(n);
    std::vector<uint32_t> parent(n, UINT32_MAX);
    std::vector<char> seen(n, 0);
    order.push_back(0);
    seen[0] = 1;
    for (size_t h = 0; h < order.size(); ++h) {
        for (uint32_t w : tree.neighbors(order[h])) {
            if (!seen[w]) {
                seen[w] = 1;
                parent[w] = order[h];
                order.push_back(w);
            }
        }
    }
    std::vector<uint32_t> with(n, 1), without(n, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        uint32_t v = *it;
        for (uint32_t w : tree.neighbors(v)) {
            if (w == parent[v]) continue;
            with[v] += without[w];
            without[v] += std::max(with[w], without[w]);
        }
    }
    return std::max(with[0], without[0]);
}

uint32_t mu(const Tree& tree) {
    uint32_t n = tree.n();
    uint32_t best = n; // the whole vertex set is never independent for n >= 2,
                       // but alpha-sized sets are, so a maximal set always exists
    std::vector<uint32_t> blocked(n, 0);
    std::vector<char> in_set(n, 0);

    // Decide vertices in id order; prune once the candidate is no smaller
    // than the best and once an undominated vertex can no longer gain a
    // chosen neighbor.
    auto rec = [&](auto&& self, uint32_t v, uint32_t size) -> void {
        if (size >= best) return;
        if (v == n) {
            for (uint32_t u = 0; u < n; ++u)
                if (!in_set[u] && blocked[u] == 0) return; // not maximal
            best = size;
            return;
        }
        if (blocked[v] == 0) {
            in_set[v] = 1;
            for (uint32_t w : tree.neighbors(v)) ++blocked[w];
            self(self, v + 1, size + 1);
            for (uint32_t w : tree.neighbors(v)) --blocked[w];
            in_set[v] = 0;
        }
        // Excluding v is only viable if v is dominated or can still be:
        // some neighbor is chosen already or is still undecided.
        bool coverable = blocked[v] > 0;
        if (!coverable)
            for (uint32_t w : tree.neighbors(v))
                if (w > v) {
                    coverable = true;
                    break;
                }
        if (coverable) self(self, v + 1, size);
    };
    rec(rec, 0, 0);
    return best;
}

} // namespace spt
