#pragma once

// Simple undirected graphs on vertices 1..N, graph products, and exact
// independence computations (alpha, mu, well-coveredness).

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ekr/bitset.hpp"
#include "ekr/budget.hpp"
#include "ekr/errors.hpp"

namespace ekr {

inline constexpr std::size_t default_product_vertex_budget = 4096;
inline constexpr std::size_t default_set_budget = 1'000'000;

/// Canonical (strictly increasing) list of 1-based vertex labels.
class VertexSet {
public:
    VertexSet() = default;

    /// Sorts; duplicate or non-positive labels are rejected.
    explicit VertexSet(std::vector<int> labels) : labels_(std::move(labels)) {
        std::sort(labels_.begin(), labels_.end());
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            if (labels_[i] < 1)
                throw InputError("vertex label must be positive, got " + std::to_string(labels_[i]));
            if (i > 0 && labels_[i] == labels_[i - 1])
                throw InputError("duplicate vertex label " + std::to_string(labels_[i]));
        }
    }

    const std::vector<int> &labels() const noexcept { return labels_; }
    std::size_t size() const noexcept { return labels_.size(); }
    bool empty() const noexcept { return labels_.empty(); }
    bool contains(int v) const { return std::binary_search(labels_.begin(), labels_.end(), v); }

    friend auto operator<=>(const VertexSet &, const VertexSet &) = default;

private:
    std::vector<int> labels_;
};

/// True iff the two sets share a label.
inline bool intersects(const VertexSet &a, const VertexSet &b) {
    auto i = a.labels().begin();
    auto j = b.labels().begin();
    while (i != a.labels().end() && j != b.labels().end()) {
        if (*i == *j)
            return true;
        if (*i < *j)
            ++i;
        else
            ++j;
    }
    return false;
}

/// Immutable simple graph. Adjacency rows are bit sets indexed from 0
/// (label v lives at bit v-1).
class SimpleGraph {
public:
    SimpleGraph(int vertex_count, const std::vector<std::pair<int, int>> &edges) : n_(vertex_count) {
        if (vertex_count < 1)
            throw InputError("graph must have at least one vertex, got " + std::to_string(vertex_count));
        rows_.assign(static_cast<std::size_t>(n_), DynamicBitset(static_cast<std::size_t>(n_)));
        for (std::size_t e = 0; e < edges.size(); ++e) {
            auto [u, v] = edges[e];
            const std::string where = "edge " + std::to_string(e) + " (" + std::to_string(u) + "," +
                                      std::to_string(v) + ")";
            if (u < 1 || u > n_ || v < 1 || v > n_)
                throw InputError(where + ": endpoint outside 1.." + std::to_string(n_));
            if (u == v)
                throw InputError(where + ": self-loop");
            if (adjacent(u, v))
                throw InputError(where + ": duplicate edge");
            rows_[u - 1].set(v - 1);
            rows_[v - 1].set(u - 1);
            ++edge_count_;
        }
    }

    int vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edge_count_; }

    bool adjacent(int u, int v) const { return rows_[u - 1].test(static_cast<std::size_t>(v - 1)); }

    /// 0-based neighbourhood row of label v.
    const DynamicBitset &row(int v) const { return rows_[v - 1]; }

    int degree(int v) const { return static_cast<int>(rows_[v - 1].count()); }

    std::vector<int> degree_sequence() const {
        std::vector<int> out;
        out.reserve(rows_.size());
        for (int v = 1; v <= n_; ++v)
            out.push_back(degree(v));
        std::sort(out.begin(), out.end(), std::greater<>());
        return out;
    }

    /// Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(edge_count_);
        for (int u = 1; u <= n_; ++u)
            for (std::size_t w = rows_[u - 1].next(static_cast<std::size_t>(u)); w != DynamicBitset::npos;
                 w = rows_[u - 1].next(w + 1))
                out.emplace_back(u, static_cast<int>(w) + 1);
        return out;
    }

private:
    int n_;
    std::size_t edge_count_ = 0;
    std::vector<DynamicBitset> rows_;
};

// ---------------------------------------------------------------------------
// Generators

inline SimpleGraph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            e.emplace_back(u, v);
    return SimpleGraph(n, e);
}

inline SimpleGraph empty_graph(int n) { return SimpleGraph(n, {}); }

/// Path 1-2-...-n.
inline SimpleGraph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < n; ++v)
        e.emplace_back(v, v + 1);
    return SimpleGraph(n, e);
}

inline SimpleGraph cycle_graph(int n) {
    if (n < 3)
        throw InputError("cycle needs at least 3 vertices, got " + std::to_string(n));
    auto e = path_graph(n).edges();
    e.emplace_back(1, n);
    return SimpleGraph(n, e);
}

/// K_{1,leaves}: centre 1 joined to 2..leaves+1.
inline SimpleGraph star_graph(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int v = 2; v <= leaves + 1; ++v)
        e.emplace_back(1, v);
    return SimpleGraph(leaves + 1, e);
}

// ---------------------------------------------------------------------------
// Products. Vertex (g, h) is linearised as (g-1)*|V(H)| + h.

inline int product_label(int g, int h, int h_count) { return (g - 1) * h_count + h; }

namespace detail {

template <typename EdgeRule>
SimpleGraph product(const SimpleGraph &g, const SimpleGraph &h, std::size_t max_vertices, EdgeRule &&rule) {
    const auto total = static_cast<std::size_t>(g.vertex_count()) * static_cast<std::size_t>(h.vertex_count());
    if (total > max_vertices)
        throw ResourceError("product has " + std::to_string(total) + " vertices, budget is " +
                            std::to_string(max_vertices));
    const int hn = h.vertex_count();
    std::vector<std::pair<int, int>> e;
    for (int g1 = 1; g1 <= g.vertex_count(); ++g1)
        for (int h1 = 1; h1 <= hn; ++h1)
            for (int g2 = g1; g2 <= g.vertex_count(); ++g2)
                for (int h2 = 1; h2 <= hn; ++h2) {
                    const int a = product_label(g1, h1, hn);
                    const int b = product_label(g2, h2, hn);
                    if (b > a && rule(g1, h1, g2, h2))
                        e.emplace_back(a, b);
                }
    return SimpleGraph(static_cast<int>(total), e);
}

} // namespace detail

/// G x H: (g1,h1)~(g2,h2) iff g1 = g2 and h1h2 in E(H), or h1 = h2 and g1g2 in E(G).
inline SimpleGraph cartesian_product(const SimpleGraph &g, const SimpleGraph &h,
                                     std::size_t max_vertices = default_product_vertex_budget) {
    return detail::product(g, h, max_vertices, [&](int g1, int h1, int g2, int h2) {
        return (g1 == g2 && h.adjacent(h1, h2)) || (h1 == h2 && g.adjacent(g1, g2));
    });
}

/// G[H]: (x,y)~(a,b) iff xa in E(G), or x = a and yb in E(H).
inline SimpleGraph lexicographic_product(const SimpleGraph &g, const SimpleGraph &h,
                                         std::size_t max_vertices = default_product_vertex_budget) {
    return detail::product(g, h, max_vertices, [&](int g1, int h1, int g2, int h2) {
        return g.adjacent(g1, g2) || (g1 == g2 && h.adjacent(h1, h2));
    });
}

// ---------------------------------------------------------------------------
// Independent sets

inline bool is_independent(const SimpleGraph &g, const VertexSet &s) {
    for (int v : s.labels())
        if (v < 1 || v > g.vertex_count())
            throw InputError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(g.vertex_count()));
    const auto &l = s.labels();
    for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t j = i + 1; j < l.size(); ++j)
            if (g.adjacent(l[i], l[j]))
                return false;
    return true;
}

/// All independent r-subsets in lexicographic order.
inline std::vector<VertexSet> enumerate_independent(const SimpleGraph &g, int r,
                                                    std::size_t max_sets = default_set_budget) {
    if (r < 0)
        throw InputError("r must be nonnegative, got " + std::to_string(r));
    std::vector<VertexSet> out;
    std::vector<int> current;
    current.reserve(static_cast<std::size_t>(r));
    const auto n = static_cast<std::size_t>(g.vertex_count());

    auto rec = [&](auto &&self, const DynamicBitset &candidates) -> void {
        if (static_cast<int>(current.size()) == r) {
            if (out.size() == max_sets)
                throw ResourceError("independent set enumeration exceeds budget of " + std::to_string(max_sets));
            out.emplace_back(current);
            return;
        }
        // Not enough candidates left to complete the set.
        if (candidates.count() < static_cast<std::size_t>(r) - current.size())
            return;
        for (std::size_t v = candidates.first(); v != DynamicBitset::npos; v = candidates.next(v + 1)) {
            DynamicBitset next = candidates;
            next.clear_below(v + 1);
            next.subtract(g.row(static_cast<int>(v) + 1));
            current.push_back(static_cast<int>(v) + 1);
            self(self, next);
            current.pop_back();
        }
    };

    DynamicBitset all(n);
    all.set_all();
    rec(rec, all);
    return out;
}

// ---------------------------------------------------------------------------
// alpha / mu by exhaustive search over single-word masks.

inline constexpr int max_search_vertices = 64;

struct IndependenceBudget {
    int max_vertices = max_search_vertices;
    SearchBudget search{};
};

namespace detail {

inline std::vector<std::uint64_t> word_rows(const SimpleGraph &g, const IndependenceBudget &b) {
    const int limit = std::min(b.max_vertices, max_search_vertices);
    if (g.vertex_count() > limit)
        throw ResourceError("graph has " + std::to_string(g.vertex_count()) +
                            " vertices, exhaustive independence search budget is " + std::to_string(limit));
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v = 1; v <= g.vertex_count(); ++v)
        g.row(v).for_each([&](std::size_t u) { rows[v - 1] |= std::uint64_t{1} << u; });
    return rows;
}

inline std::uint64_t full_mask(int n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

} // namespace detail

/// Independence number by include/exclude branching with the trivial
/// |chosen| + |candidates| bound.
inline int alpha(const SimpleGraph &g, const IndependenceBudget &budget = {}) {
    const auto rows = detail::word_rows(g, budget);
    BudgetMeter meter(budget.search);
    int best = 0;

    auto rec = [&](auto &&self, std::uint64_t candidates, int size) -> void {
        if (!meter.tick())
            throw BudgetExceeded("alpha search exhausted its budget", static_cast<std::uint64_t>(best),
                                 static_cast<std::uint64_t>(g.vertex_count()));
        if (candidates == 0) {
            best = std::max(best, size);
            return;
        }
        if (size + std::popcount(candidates) <= best)
            return;
        const int v = std::countr_zero(candidates);
        const std::uint64_t vbit = std::uint64_t{1} << v;
        self(self, candidates & ~vbit & ~rows[v], size + 1);
        self(self, candidates & ~vbit, size);
    };
    rec(rec, detail::full_mask(g.vertex_count()), 0);
    return best;
}

/// Visits every maximal independent set (as a 0-based bit mask) via
/// Bron-Kerbosch with pivoting on the complement. `visit.descend(R)` returning
/// false prunes every extension of R; `visit.maximal(R)` receives each result.
template <typename Visitor>
void for_each_maximal_independent(const SimpleGraph &g, const IndependenceBudget &budget, Visitor &&visit) {
    const auto rows = detail::word_rows(g, budget);
    BudgetMeter meter(budget.search);
    const int n = g.vertex_count();

    // R: current independent set, P: candidates, X: excluded.
    auto rec = [&](auto &&self, std::uint64_t R, std::uint64_t P, std::uint64_t X) -> void {
        if (!meter.tick())
            throw BudgetExceeded("maximal independent set enumeration exhausted its budget", 0,
                                 static_cast<std::uint64_t>(n));
        if (!visit.descend(R))
            return;
        if (P == 0 && X == 0) {
            visit.maximal(R);
            return;
        }
        // Pivot u maximising |P \ N(u)|; branch only on P ∩ N[u].
        const std::uint64_t PX = P | X;
        int pivot = std::countr_zero(PX);
        int best_cover = -1;
        for (std::uint64_t w = PX; w; w &= w - 1) {
            const int u = std::countr_zero(w);
            const int cover = std::popcount(P & (rows[u] | (std::uint64_t{1} << u)));
            if (cover > best_cover) {
                best_cover = cover;
                pivot = u;
            }
        }
        std::uint64_t branch = P & (rows[pivot] | (std::uint64_t{1} << pivot));
        while (branch) {
            const int v = std::countr_zero(branch);
            const std::uint64_t vbit = std::uint64_t{1} << v;
            branch &= ~vbit;
            self(self, R | vbit, P & ~rows[v] & ~vbit, X & ~rows[v] & ~vbit);
            P &= ~vbit;
            X |= vbit;
        }
    };
    rec(rec, 0, detail::full_mask(n), 0);
}

/// True iff `mask` (0-based) is independent and no outside vertex can be added.
inline bool is_maximal_independent_mask(const SimpleGraph &g, std::uint64_t mask) {
    for (int v = 1; v <= g.vertex_count(); ++v) {
        const bool inside = (mask >> (v - 1)) & 1;
        bool hits = false;
        g.row(v).for_each([&](std::size_t u) {
            if ((mask >> u) & 1)
                hits = true;
        });
        if (inside && hits)
            return false;
        if (!inside && !hits)
            return false;
    }
    return true;
}

/// Size of the smallest maximal independent set. Every set reported by the
/// enumeration is re-checked for maximality before it is counted.
inline int mu(const SimpleGraph &g, const IndependenceBudget &budget = {}) {
    struct Visitor {
        const SimpleGraph &g;
        int best;
        bool descend(std::uint64_t R) const { return std::popcount(R) < best; }
        void maximal(std::uint64_t R) {
            if (!is_maximal_independent_mask(g, R))
                throw std::logic_error("enumerated set is not a maximal independent set");
            best = std::min(best, std::popcount(R));
        }
    } visitor{g, g.vertex_count() + 1};
    for_each_maximal_independent(g, budget, visitor);
    return visitor.best;
}

inline bool is_well_covered(const SimpleGraph &g, const IndependenceBudget &budget = {}) {
    return alpha(g, budget) == mu(g, budget);
}

} // namespace ekr
