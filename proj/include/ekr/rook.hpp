#pragma once

// Independent sets of the rook's graph K_n x K_m, built directly as partial
// row -> column injections rather than by filtering the product graph.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ekr/bitset.hpp"
#include "ekr/combinatorics.hpp"
#include "ekr/errors.hpp"
#include "ekr/graph.hpp"

namespace ekr {

/// Cell (row, col) of the n x m grid, both 1-based.
struct RookVertex {
    int row = 0;
    int col = 0;

    friend constexpr auto operator<=>(const RookVertex &, const RookVertex &) = default;
};

/// Grid dimensions shared by every set of a family.
struct Grid {
    int n = 0;
    int m = 0;

    bool contains(RookVertex v) const noexcept { return v.row >= 1 && v.row <= n && v.col >= 1 && v.col <= m; }
    std::size_t cell_count() const noexcept { return static_cast<std::size_t>(n) * static_cast<std::size_t>(m); }
    /// 0-based index of a cell, row major.
    std::size_t index(RookVertex v) const noexcept {
        return static_cast<std::size_t>(v.row - 1) * static_cast<std::size_t>(m) + static_cast<std::size_t>(v.col - 1);
    }

    friend constexpr bool operator==(const Grid &, const Grid &) = default;
};

inline std::string to_string(RookVertex v) { return "(" + std::to_string(v.row) + "," + std::to_string(v.col) + ")"; }

/// r pairwise non-attacking cells, stored sorted by row.
class IndependentSet {
public:
    IndependentSet() = default;

    /// Canonicalises and validates; throws InputError naming the offending cell.
    IndependentSet(Grid grid, std::vector<RookVertex> cells) : grid_(grid), cells_(std::move(cells)) {
        require_dimensions(grid.n, grid.m);
        for (std::size_t i = 0; i < cells_.size(); ++i)
            if (!grid.contains(cells_[i]))
                throw InputError("cell " + std::to_string(i) + " " + to_string(cells_[i]) + " outside the " +
                                 std::to_string(grid.n) + "x" + std::to_string(grid.m) + " grid");
        std::sort(cells_.begin(), cells_.end());
        for (std::size_t i = 1; i < cells_.size(); ++i)
            if (cells_[i].row == cells_[i - 1].row)
                throw InputError("cells " + to_string(cells_[i - 1]) + " and " + to_string(cells_[i]) +
                                 " share a row");
        std::vector<int> cols;
        for (auto c : cells_)
            cols.push_back(c.col);
        std::sort(cols.begin(), cols.end());
        if (auto it = std::adjacent_find(cols.begin(), cols.end()); it != cols.end())
            throw InputError("two cells share column " + std::to_string(*it));
    }

    Grid grid() const noexcept { return grid_; }
    int r() const noexcept { return static_cast<int>(cells_.size()); }
    const std::vector<RookVertex> &cells() const noexcept { return cells_; }

    bool contains(RookVertex v) const { return std::binary_search(cells_.begin(), cells_.end(), v); }

    /// Canonical order is lexicographic on the flattened (row, col, row, col, ...) list.
    friend auto operator<=>(const IndependentSet &a, const IndependentSet &b) { return a.cells_ <=> b.cells_; }
    friend bool operator==(const IndependentSet &a, const IndependentSet &b) { return a.cells_ == b.cells_; }

private:
    Grid grid_{};
    std::vector<RookVertex> cells_;
};

/// True iff the sets share a cell (equal row and equal column).
inline bool intersects(const IndependentSet &a, const IndependentSet &b) {
    // Rows are distinct within a set, so a shared cell is a row match with equal column.
    auto i = a.cells().begin();
    auto j = b.cells().begin();
    while (i != a.cells().end() && j != b.cells().end()) {
        if (i->row == j->row) {
            if (i->col == j->col)
                return true;
            ++i;
            ++j;
        } else if (i->row < j->row) {
            ++i;
        } else {
            ++j;
        }
    }
    return false;
}

/// Rows used by A, increasing.
inline std::vector<int> row_projection(const IndependentSet &a) {
    std::vector<int> rows;
    rows.reserve(a.cells().size());
    for (auto c : a.cells())
        rows.push_back(c.row);
    return rows;
}

/// Deduplicated, canonically ordered collection of independent sets sharing (n, m, r).
class Family {
public:
    Family(Grid grid, int r) : grid_(grid), r_(r) {
        require_dimensions(grid.n, grid.m);
        if (r < 0)
            throw InputError("r must be nonnegative, got " + std::to_string(r));
    }

    Family(Grid grid, int r, std::vector<IndependentSet> sets) : Family(grid, r) {
        for (std::size_t i = 0; i < sets.size(); ++i)
            check_member(sets[i], i);
        std::sort(sets.begin(), sets.end());
        sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
        members_ = std::move(sets);
    }

    Grid grid() const noexcept { return grid_; }
    int r() const noexcept { return r_; }
    const std::vector<IndependentSet> &members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }

    /// Inserts keeping canonical order; returns false if already present.
    bool insert(IndependentSet s) {
        check_member(s, members_.size());
        auto it = std::lower_bound(members_.begin(), members_.end(), s);
        if (it != members_.end() && *it == s)
            return false;
        members_.insert(it, std::move(s));
        return true;
    }

    bool contains(const IndependentSet &s) const {
        return std::binary_search(members_.begin(), members_.end(), s);
    }

    friend bool operator==(const Family &, const Family &) = default;

private:
    void check_member(const IndependentSet &s, std::size_t index) const {
        if (!(s.grid() == grid_) || s.r() != r_)
            throw InputError("set " + std::to_string(index) + " does not match family context n=" +
                             std::to_string(grid_.n) + " m=" + std::to_string(grid_.m) + " r=" + std::to_string(r_));
    }

    Grid grid_;
    int r_;
    std::vector<IndependentSet> members_;
};

inline bool is_intersecting(const Family &f) {
    const auto &s = f.members();
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!intersects(s[i], s[j]))
                return false;
    return true;
}

/// Bit mask of the cells of A over the n*m grid.
inline DynamicBitset cell_mask(const IndependentSet &a) {
    DynamicBitset mask(a.grid().cell_count());
    for (auto c : a.cells())
        mask.set(a.grid().index(c));
    return mask;
}

namespace detail {

/// Depth-first generation in canonical order: pick the next row above the
/// previous one, then any unused column. Optionally a cell is forced.
template <typename Sink>
void generate_rook_sets(Grid grid, int r, const RookVertex *forced, Sink &&sink) {
    std::vector<RookVertex> cells;
    std::vector<char> col_used(static_cast<std::size_t>(grid.m) + 1, 0);
    if (forced)
        col_used[forced->col] = 1;

    auto rec = [&](auto &&self, int next_row, bool forced_placed) -> void {
        const int placed = static_cast<int>(cells.size()) + ((forced && !forced_placed) ? 1 : 0);
        if (placed == r) {
            if (forced && !forced_placed) {
                // The forced cell lies in a row after all chosen rows.
                cells.push_back(*forced);
                sink(cells);
                cells.pop_back();
            } else {
                sink(cells);
            }
            return;
        }
        for (int row = next_row; row <= grid.n; ++row) {
            if (forced && !forced_placed && row == forced->row) {
                cells.push_back(*forced);
                self(self, row + 1, true);
                cells.pop_back();
                // Rows past the forced row cannot be chosen before placing it.
                return;
            }
            for (int col = 1; col <= grid.m; ++col) {
                if (col_used[col])
                    continue;
                col_used[col] = 1;
                cells.push_back({row, col});
                self(self, row + 1, forced_placed);
                cells.pop_back();
                col_used[col] = 0;
            }
        }
    };
    rec(rec, 1, false);
}

} // namespace detail

/// Every independent r-set of K_n x K_m in canonical order.
inline std::vector<IndependentSet> enumerate_rook(int n, int m, int r, std::size_t max_sets = default_set_budget) {
    require_dimensions(n, m);
    if (r < 0)
        throw InputError("r must be nonnegative, got " + std::to_string(r));
    const Grid grid{n, m};
    if (r == 0)
        return {IndependentSet(grid, {})};
    const auto total = rook_count(n, m, r).value();
    if (total > max_sets)
        throw ResourceError("K_" + std::to_string(n) + " x K_" + std::to_string(m) + " has " + std::to_string(total) +
                            " independent " + std::to_string(r) + "-sets, budget is " + std::to_string(max_sets));
    std::vector<IndependentSet> out;
    out.reserve(total);
    detail::generate_rook_sets(grid, r, nullptr, [&](const std::vector<RookVertex> &cells) {
        out.emplace_back(grid, cells);
    });
    return out;
}

/// All independent r-sets containing v.
inline Family star_family(int n, int m, int r, RookVertex v, std::size_t max_sets = default_set_budget) {
    require_dimensions(n, m);
    const Grid grid{n, m};
    if (r < 1 || r > std::min(n, m))
        throw InputError("r must lie in 1..min(n,m), got " + std::to_string(r));
    if (!grid.contains(v))
        throw InputError("centre " + to_string(v) + " outside the grid");
    const auto total = rook_star_count(n, m, r).value();
    if (total > max_sets)
        throw ResourceError("star has " + std::to_string(total) + " sets, budget is " + std::to_string(max_sets));
    std::vector<IndependentSet> sets;
    sets.reserve(total);
    detail::generate_rook_sets(grid, r, &v, [&](const std::vector<RookVertex> &cells) {
        sets.emplace_back(grid, cells);
    });
    return Family(grid, r, std::move(sets));
}

/// Label of a cell inside cartesian_product(K_n, K_m).
inline int product_label(RookVertex v, int m) { return product_label(v.row, v.col, m); }

inline RookVertex rook_vertex_from_label(int label, int m) { return {(label - 1) / m + 1, (label - 1) % m + 1}; }

} // namespace ekr
