#pragma once

// Exact maximum clique by branch and bound with a greedy-colouring bound.
//
// The optimum is found first (optionally in parallel over top-level
// branches, sharing only a monotone incumbent size). A second, sequential
// pass then returns the lexicographically smallest clique of that size, so
// the witness never depends on the thread count.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "ekr/bitset.hpp"
#include "ekr/budget.hpp"
#include "ekr/errors.hpp"
#include "ekr/parallel.hpp"

namespace ekr {

struct CliqueResult {
    std::size_t size = 0;
    /// Lexicographically smallest maximum clique, ascending vertex indices.
    std::vector<std::size_t> members;
};

namespace detail {

/// Number of colours used by sequential greedy colouring of `p`.
inline std::size_t greedy_colour_count(const std::vector<DynamicBitset> &adj, DynamicBitset p) {
    std::size_t colours = 0;
    while (p.any()) {
        ++colours;
        DynamicBitset q = p;
        for (std::size_t v = q.first(); v != DynamicBitset::npos; v = q.next(v + 1)) {
            p.reset(v);
            q.subtract(adj[v]);
        }
    }
    return colours;
}

class OptimumSearch {
public:
    OptimumSearch(const std::vector<DynamicBitset> &adj, BudgetMeter &meter, std::atomic<std::size_t> &best)
        : adj_(adj), meter_(meter), best_(best) {}

    /// Colour-sorts p: fills order/colour with vertices grouped by
    /// non-decreasing colour class.
    void colour_sort(DynamicBitset p, std::vector<std::size_t> &order, std::vector<std::size_t> &colour) const {
        order.clear();
        colour.clear();
        std::size_t c = 0;
        while (p.any()) {
            ++c;
            DynamicBitset q = p;
            for (std::size_t v = q.first(); v != DynamicBitset::npos; v = q.next(v + 1)) {
                p.reset(v);
                q.subtract(adj_[v]);
                order.push_back(v);
                colour.push_back(c);
            }
        }
    }

    void expand(std::size_t size, DynamicBitset p) {
        if (!meter_.tick())
            throw BudgetExceeded("clique search exhausted its budget", best_.load(), 0);
        std::vector<std::size_t> order, colour;
        colour_sort(p, order, colour);
        for (std::size_t k = order.size(); k-- > 0;) {
            if (size + colour[k] <= best_.load(std::memory_order_relaxed))
                return;
            const std::size_t v = order[k];
            DynamicBitset next = p & adj_[v];
            if (next.any())
                expand(size + 1, std::move(next));
            else
                raise(size + 1);
            p.reset(v);
        }
    }

    void raise(std::size_t size) {
        std::size_t cur = best_.load();
        while (size > cur && !best_.compare_exchange_weak(cur, size)) {
        }
    }

private:
    const std::vector<DynamicBitset> &adj_;
    BudgetMeter &meter_;
    std::atomic<std::size_t> &best_;
};

} // namespace detail

/// Maximum clique of the graph with 0-based adjacency rows `adj`.
inline CliqueResult max_clique(const std::vector<DynamicBitset> &adj, const SearchBudget &budget = {},
                               unsigned threads = 1) {
    const std::size_t n = adj.size();
    CliqueResult result;
    if (n == 0)
        return result;

    // Renumber by non-increasing degree (ties by index) so bit order is the
    // initial vertex ordering.
    std::vector<std::size_t> by_degree(n);
    std::iota(by_degree.begin(), by_degree.end(), std::size_t{0});
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](std::size_t a, std::size_t b) { return adj[a].count() > adj[b].count(); });
    std::vector<std::size_t> label(n);
    for (std::size_t k = 0; k < n; ++k)
        label[by_degree[k]] = k;
    std::vector<DynamicBitset> radj(n, DynamicBitset(n));
    for (std::size_t v = 0; v < n; ++v)
        adj[v].for_each([&](std::size_t u) { radj[label[v]].set(label[u]); });

    BudgetMeter meter(budget);
    std::atomic<std::size_t> best{1};
    DynamicBitset all(n);
    all.set_all();
    const std::size_t upper = detail::greedy_colour_count(radj, all);

    detail::OptimumSearch search(radj, meter, best);
    std::vector<std::size_t> order, colour;
    search.colour_sort(all, order, colour);

    try {
        // Top-level branch k takes order[k] with candidates among order[0..k-1].
        parallel_for(order.size(), threads, [&](std::size_t t) {
            const std::size_t k = order.size() - 1 - t;
            if (colour[k] <= best.load())
                return;
            DynamicBitset p(n);
            for (std::size_t q = 0; q < k; ++q)
                p.set(order[q]);
            p &= radj[order[k]];
            detail::OptimumSearch local(radj, meter, best);
            if (p.any())
                local.expand(1, std::move(p));
        });
    } catch (const BudgetExceeded &) {
        throw BudgetExceeded("clique search exhausted its budget", best.load(), upper);
    }
    const std::size_t omega = best.load();

    // Lexicographically first clique of size omega, original labels.
    std::vector<std::size_t> chosen;
    auto find = [&](auto &&self, const DynamicBitset &p) -> bool {
        if (chosen.size() == omega)
            return true;
        if (!meter.tick())
            throw BudgetExceeded("clique witness search exhausted its budget", omega, omega);
        if (chosen.size() + p.count() < omega)
            return false;
        for (std::size_t v = p.first(); v != DynamicBitset::npos; v = p.next(v + 1)) {
            DynamicBitset next = p & adj[v];
            next.clear_below(v + 1);
            if (chosen.size() + 1 + detail::greedy_colour_count(adj, next) < omega)
                continue;
            chosen.push_back(v);
            if (self(self, next))
                return true;
            chosen.pop_back();
        }
        return false;
    };
    DynamicBitset original_all(n);
    original_all.set_all();
    if (!find(find, original_all))
        throw std::logic_error("clique of optimum size " + std::to_string(omega) + " not found on witness pass");

    result.size = omega;
    result.members = std::move(chosen);
    return result;
}

} // namespace ekr
