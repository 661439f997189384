#pragma once

// Maximum intersecting families and r-EKR verdicts: rook's graphs, general
// graphs, Holroyd-Talbot sweeps and lexicographic-product checks.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ekr/budget.hpp"
#include "ekr/clique.hpp"
#include "ekr/combinatorics.hpp"
#include "ekr/graph.hpp"
#include "ekr/rook.hpp"

namespace ekr {

struct ExtremalOptions {
    SearchBudget budget{};
    unsigned threads = 1;
    std::size_t max_sets = default_set_budget;
    IndependenceBudget independence{};
};

template <typename Set>
struct IntersectingResult {
    std::size_t size = 0;
    /// Lexicographically smallest maximum intersecting subfamily, canonical order.
    std::vector<Set> witness;
};

/// Exact maximum pairwise-intersecting subfamily, as a maximum clique of the
/// graph joining intersecting pairs. Input is canonicalised (sorted,
/// deduplicated) first.
template <typename Set>
IntersectingResult<Set> max_intersecting(std::vector<Set> sets, const SearchBudget &budget = {}, unsigned threads = 1) {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    const std::size_t n = sets.size();
    std::vector<DynamicBitset> adj(n, DynamicBitset(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (intersects(sets[a], sets[b])) {
                adj[a].set(b);
                adj[b].set(a);
            }
    const auto clique = max_clique(adj, budget, threads);
    IntersectingResult<Set> out;
    out.size = clique.size;
    for (auto idx : clique.members)
        out.witness.push_back(sets[idx]);
    return out;
}

/// Rook family overload: witness keeps the family context.
inline Family max_intersecting_family(const Family &f, const SearchBudget &budget = {}, unsigned threads = 1) {
    auto res = max_intersecting(f.members(), budget, threads);
    return Family(f.grid(), f.r(), std::move(res.witness));
}

enum class Verdict { EkrHolds, EkrFails, OutOfTheoremRangeHolds, OutOfTheoremRangeFails };

inline const char *to_string(Verdict v) {
    switch (v) {
    case Verdict::EkrHolds:
        return "EKR_HOLDS";
    case Verdict::EkrFails:
        return "EKR_FAILS";
    case Verdict::OutOfTheoremRangeHolds:
        return "OUT_OF_THEOREM_RANGE_HOLDS";
    case Verdict::OutOfTheoremRangeFails:
        return "OUT_OF_THEOREM_RANGE_FAILS";
    }
    return "?";
}

inline bool holds(Verdict v) { return v == Verdict::EkrHolds || v == Verdict::OutOfTheoremRangeHolds; }

inline Verdict make_verdict(ExactCount max_family, ExactCount best_star, bool in_range) {
    const bool ok = max_family <= best_star;
    if (in_range)
        return ok ? Verdict::EkrHolds : Verdict::EkrFails;
    return ok ? Verdict::OutOfTheoremRangeHolds : Verdict::OutOfTheoremRangeFails;
}

struct EkrReport {
    /// "rook" or a graph descriptor.
    std::string subject;
    int n = 0, m = 0; // rook only
    int vertices = 0; // general graphs only
    int r = 0;
    /// mu(G) for general graphs (the range is r <= mu/2).
    std::optional<int> mu;
    bool in_theorem_range = true;
    ExactCount family_count; // |I^(r)|
    ExactCount max_intersecting;
    ExactCount best_star;
    /// A vertex realising best_star (rook: (1,1); general: smallest label).
    std::optional<int> star_vertex;
    Verdict verdict = Verdict::EkrHolds;
    std::variant<Family, std::vector<VertexSet>> witness{std::vector<VertexSet>{}};
    std::chrono::milliseconds elapsed{0};
};

inline bool witness_is_intersecting(const EkrReport &rep) {
    if (const auto *f = std::get_if<Family>(&rep.witness))
        return is_intersecting(*f);
    const auto &sets = std::get<std::vector<VertexSet>>(rep.witness);
    for (std::size_t a = 0; a < sets.size(); ++a)
        for (std::size_t b = a + 1; b < sets.size(); ++b)
            if (!intersects(sets[a], sets[b]))
                return false;
    return true;
}

inline std::size_t witness_size(const EkrReport &rep) {
    if (const auto *f = std::get_if<Family>(&rep.witness))
        return f->size();
    return std::get<std::vector<VertexSet>>(rep.witness).size();
}

/// Decides whether K_n x K_m is r-EKR by exhaustive search. All stars have
/// the same size (vertex transitivity), so the comparator is the closed form.
inline EkrReport rook_ekr_verdict(int n, int m, int r, const ExtremalOptions &opt = {}) {
    const auto start = std::chrono::steady_clock::now();
    require_dimensions(n, m);
    if (r < 1 || r > std::min(n, m))
        throw InputError("r must lie in 1..min(n,m), got " + std::to_string(r));
    EkrReport rep;
    rep.subject = "rook";
    rep.n = n;
    rep.m = m;
    rep.r = r;
    rep.in_theorem_range = 2 * r <= std::min(n, m);
    const Grid grid{n, m};
    Family all(grid, r, enumerate_rook(n, m, r, opt.max_sets));
    rep.family_count = ExactCount{all.size()};
    Family witness = max_intersecting_family(all, opt.budget, opt.threads);
    rep.max_intersecting = ExactCount{witness.size()};
    rep.best_star = rook_star_count(n, m, r);
    rep.star_vertex = 1;
    rep.verdict = make_verdict(rep.max_intersecting, rep.best_star, rep.in_theorem_range);
    rep.witness = std::move(witness);
    rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return rep;
}

/// r-EKR verdict for a general graph. The comparator is the largest star over
/// all vertices (the definition only asks for one good centre).
inline EkrReport ekr_verdict(const SimpleGraph &g, int r, const ExtremalOptions &opt = {},
                             std::string subject = "graph") {
    const auto start = std::chrono::steady_clock::now();
    if (r < 1)
        throw InputError("r must be at least 1, got " + std::to_string(r));
    EkrReport rep;
    rep.subject = std::move(subject);
    rep.vertices = g.vertex_count();
    rep.r = r;
    rep.mu = mu(g, opt.independence);
    rep.in_theorem_range = 2 * r <= *rep.mu;

    auto sets = enumerate_independent(g, r, opt.max_sets);
    rep.family_count = ExactCount{sets.size()};
    std::vector<std::size_t> star(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    for (const auto &s : sets)
        for (int v : s.labels())
            ++star[v];
    const auto best = std::max_element(star.begin() + 1, star.end());
    rep.best_star = ExactCount{*best};
    rep.star_vertex = static_cast<int>(best - star.begin());

    auto res = max_intersecting(std::move(sets), opt.budget, opt.threads);
    rep.max_intersecting = ExactCount{res.size};
    rep.verdict = make_verdict(rep.max_intersecting, rep.best_star, rep.in_theorem_range);
    rep.witness = std::move(res.witness);
    rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return rep;
}

/// One report per r in 1..floor(mu(G)/2); empty when mu(G) < 2.
inline std::vector<EkrReport> ht_check(const SimpleGraph &g, const ExtremalOptions &opt = {},
                                       const std::string &subject = "graph") {
    const int m = mu(g, opt.independence);
    std::vector<EkrReport> out;
    for (int r = 1; 2 * r <= m; ++r)
        out.push_back(ekr_verdict(g, r, opt, subject));
    return out;
}

struct LexCheck {
    EkrReport premise;
    EkrReport conclusion;
    /// Premise holds yet G[K_k] is not r-EKR: contradicts the product theorem.
    bool theorem_violation = false;
};

inline LexCheck lex_check(const SimpleGraph &g, int k, int r, const ExtremalOptions &opt = {},
                          const std::string &subject = "graph") {
    if (k < 1)
        throw InputError("k must be at least 1, got " + std::to_string(k));
    LexCheck out{ekr_verdict(g, r, opt, subject),
                 ekr_verdict(lexicographic_product(g, complete_graph(k)), r, opt,
                             subject + "[K" + std::to_string(k) + "]"),
                 false};
    out.theorem_violation = holds(out.premise.verdict) && !holds(out.conclusion.verdict);
    return out;
}

} // namespace ekr
