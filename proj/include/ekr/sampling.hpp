#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ekr/combinatorics.hpp"
#include "ekr/rook.hpp"

namespace ekr {

/// Seeded random intersecting family of independent r-sets of K_n x K_m.
///
/// Scans a shuffled copy of all sets and keeps each one that meets every set
/// kept so far, stopping at a random cap in [1, 2 * star size]. Only raw
/// mt19937_64 output is used (no std distributions), so a seed reproduces the
/// same family on every platform.
inline Family random_intersecting_family(const std::vector<IndependentSet> &all, Grid grid, int r,
                                         std::mt19937_64 &rng) {
    std::vector<std::size_t> idx(all.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        idx[i] = i;
    for (std::size_t i = idx.size(); i > 1; --i)
        std::swap(idx[i - 1], idx[rng() % i]);

    const auto star = rook_star_count(grid.n, grid.m, r).value();
    const std::size_t cap = 1 + static_cast<std::size_t>(rng() % (2 * star));

    std::vector<IndependentSet> kept;
    for (auto i : idx) {
        if (kept.size() == cap)
            break;
        bool meets_all = true;
        for (const auto &k : kept)
            if (!intersects(k, all[i])) {
                meets_all = false;
                break;
            }
        if (meets_all)
            kept.push_back(all[i]);
    }
    return Family(grid, r, std::move(kept));
}

} // namespace ekr
