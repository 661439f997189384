#pragma once

// Brute-force oracles used only by the tests. Nothing here calls into the
// library: each routine recomputes its quantity from first principles.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Cell = std::pair<int, int>;
using CellSet = std::vector<Cell>; // sorted

/// All r-subsets of the n*m cells with distinct rows and columns, by testing
/// every r-combination of cells.
inline std::vector<CellSet> rook_sets(int n, int m, int r) {
    std::vector<Cell> cells;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= m; ++b)
            cells.emplace_back(a, b);
    std::vector<CellSet> out;
    CellSet cur;
    auto rec = [&](auto &&self, std::size_t from) -> void {
        if (static_cast<int>(cur.size()) == r) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = from; i < cells.size(); ++i) {
            bool ok = true;
            for (auto &c : cur)
                if (c.first == cells[i].first || c.second == cells[i].second)
                    ok = false;
            if (!ok)
                continue;
            cur.push_back(cells[i]);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

inline bool meet(const CellSet &a, const CellSet &b) {
    for (auto &x : a)
        if (std::find(b.begin(), b.end(), x) != b.end())
            return true;
    return false;
}

/// Interval of the (not necessarily canonical) pair with 0-based start positions.
inline CellSet interval(const std::vector<int> &s1, const std::vector<int> &s2, int i, int j, int r) {
    const int n = static_cast<int>(s1.size()), m = static_cast<int>(s2.size());
    CellSet out;
    for (int k = 0; k < r; ++k)
        out.emplace_back(s1[(i + k) % n], s2[(j + k) % m]);
    std::sort(out.begin(), out.end());
    return out;
}

/// Number of equivalence classes of S_n x S_m under independent cyclic
/// shifts, found by labelling each pair with its orbit minimum.
inline std::size_t count_cyclic_classes(int n, int m) {
    std::set<std::pair<std::vector<int>, std::vector<int>>> classes;
    std::vector<int> s1(n);
    std::iota(s1.begin(), s1.end(), 1);
    do {
        std::vector<int> s2(m);
        std::iota(s2.begin(), s2.end(), 1);
        do {
            std::pair<std::vector<int>, std::vector<int>> best{s1, s2};
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < m; ++j) {
                    std::vector<int> a(n), b(m);
                    for (int x = 0; x < n; ++x)
                        a[x] = s1[(x + i) % n];
                    for (int y = 0; y < m; ++y)
                        b[y] = s2[(y + j) % m];
                    best = std::min(best, std::pair{a, b});
                }
            classes.insert(best);
        } while (std::next_permutation(s2.begin(), s2.end()));
    } while (std::next_permutation(s1.begin(), s1.end()));
    return classes.size();
}

/// Number of cyclic classes in which `a` is an interval: counts all n!m!
/// raw pairs having `a` as an interval and divides by the orbit size n*m.
inline std::uint64_t occurrence_by_raw_pairs(int n, int m, const CellSet &a) {
    const int r = static_cast<int>(a.size());
    std::uint64_t hits = 0;
    std::vector<int> s1(n);
    std::iota(s1.begin(), s1.end(), 1);
    do {
        std::vector<int> s2(m);
        std::iota(s2.begin(), s2.end(), 1);
        do {
            bool found = false;
            for (int i = 0; i < n && !found; ++i)
                for (int j = 0; j < m && !found; ++j)
                    found = interval(s1, s2, i, j, r) == a;
            hits += found ? 1 : 0;
        } while (std::next_permutation(s2.begin(), s2.end()));
    } while (std::next_permutation(s1.begin(), s1.end()));
    return hits / static_cast<std::uint64_t>(n * m);
}

/// Largest pairwise-meeting subfamily by scanning all 2^N subfamilies.
template <typename Meets>
std::size_t max_intersecting_bruteforce(std::size_t count, Meets &&meets) {
    std::vector<std::uint32_t> compat(count, 0);
    for (std::size_t a = 0; a < count; ++a)
        for (std::size_t b = 0; b < count; ++b)
            if (a != b && meets(a, b))
                compat[a] |= 1u << b;
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1u << count); ++mask) {
        const auto size = static_cast<std::size_t>(std::popcount(mask));
        if (size <= best)
            continue;
        bool ok = true;
        for (std::uint32_t w = mask; w && ok; w &= w - 1) {
            const int v = std::countr_zero(w);
            ok = (mask & ~(1u << v) & ~compat[v]) == 0;
        }
        if (ok)
            best = size;
    }
    return best;
}

/// alpha and mu of a graph on <= 20 vertices, by scanning every vertex subset.
struct AlphaMu {
    int alpha;
    int mu;
    std::uint64_t independent_sets;
};

inline AlphaMu alpha_mu_bruteforce(int n, const std::vector<std::pair<int, int>> &edges) {
    std::vector<std::uint32_t> nb(n, 0);
    for (auto [u, v] : edges) {
        nb[u - 1] |= 1u << (v - 1);
        nb[v - 1] |= 1u << (u - 1);
    }
    AlphaMu out{0, n + 1, 0};
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        bool indep = true;
        for (int v = 0; v < n && indep; ++v)
            if (((s >> v) & 1) && (nb[v] & s))
                indep = false;
        if (!indep)
            continue;
        ++out.independent_sets;
        const int size = std::popcount(s);
        out.alpha = std::max(out.alpha, size);
        bool maximal = true;
        for (int v = 0; v < n && maximal; ++v)
            if (!((s >> v) & 1) && !(nb[v] & s))
                maximal = false;
        if (maximal)
            out.mu = std::min(out.mu, size);
    }
    return out;
}

} // namespace oracle
