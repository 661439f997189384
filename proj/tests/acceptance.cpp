// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only if all
// pass. argv[1] is the path to the ekr command-line binary (criterion 11).

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ekr/ekr.hpp"
#include "ekr/sampling.hpp"
#include "oracles.hpp"

using namespace ekr;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;

    void fail(const std::string &why) {
        if (passed)
            detail = why;
        passed = false;
    }
};

struct Criterion {
    int id;
    std::string name;
    std::chrono::seconds limit;
    std::function<Outcome()> body;
};

std::string cli_path;

std::string capture(const std::string &args) {
    const std::string cmd = cli_path + " " + args + " 2>/dev/null";
    FILE *pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return "";
    std::string out;
    char buf[4096];
    while (auto got = fread(buf, 1, sizeof buf, pipe))
        out.append(buf, got);
    pclose(pipe);
    return out;
}

std::string without_timing(const std::string &text) {
    auto doc = json::parse(text);
    doc.erase("elapsed_ms");
    return doc.dump();
}

struct Triple {
    int n, m, r;
    std::uint64_t expected;
};

// Expected maxima are the star sizes C(n-1,r-1)C(m-1,r-1)(r-1)!, confirmed by
// the exact search and, for (4,4,2), by subfamily brute force below.
const std::vector<Triple> rook_cases = {{2, 2, 1, 1}, {3, 3, 1, 1}, {4, 4, 2, 9}, {4, 5, 2, 12}, {5, 5, 2, 16}, {6, 6, 2, 25}};
const std::vector<std::pair<int, int>> lemma_grids = {{4, 4}, {4, 5}, {5, 5}};

Outcome count_formula() {
    Outcome o;
    for (int n = 1; n <= 6; ++n)
        for (int m = n; m <= 6; ++m)
            for (int r = 1; r <= n; ++r) {
                const auto sets = enumerate_rook(n, m, r);
                if (rook_count(n, m, r) != sets.size())
                    o.fail("(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(r) + ")");
            }
    o.detail = o.passed ? "56 triples" : o.detail;
    return o;
}

Outcome star_formula() {
    Outcome o;
    int checked = 0;
    for (int n = 1; n <= 5; ++n)
        for (int m = n; m <= 5; ++m)
            for (int r = 1; r <= n; ++r)
                for (int i = 1; i <= n; ++i)
                    for (int j = 1; j <= m; ++j) {
                        ++checked;
                        if (rook_star_count(n, m, r) != star_family(n, m, r, {i, j}).size())
                            o.fail("(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(r) + ") at " +
                                   to_string(RookVertex{i, j}));
                    }
    if (o.passed)
        o.detail = std::to_string(checked) + " (triple, vertex) pairs";
    return o;
}

Outcome rook_theorem() {
    Outcome o;
    std::ostringstream summary;
    for (const auto &c : rook_cases) {
        const auto rep = rook_ekr_verdict(c.n, c.m, c.r);
        summary << rep.max_intersecting << " ";
        if (rep.max_intersecting != c.expected || rep.best_star != c.expected || rep.verdict != Verdict::EkrHolds ||
            !witness_is_intersecting(rep))
            o.fail("(" + std::to_string(c.n) + "," + std::to_string(c.m) + "," + std::to_string(c.r) + ") max " +
                   std::to_string(rep.max_intersecting.value()));
    }

    // Reduced (4,4,2) instance: the star at (1,1) plus 11 seeded other sets.
    auto star = star_family(4, 4, 2, {1, 1}).members();
    auto all = enumerate_rook(4, 4, 2);
    std::mt19937_64 rng(3);
    std::vector<IndependentSet> reduced = star;
    while (reduced.size() < 20) {
        const auto &s = all[rng() % all.size()];
        if (std::find(reduced.begin(), reduced.end(), s) == reduced.end())
            reduced.push_back(s);
    }
    const auto brute = oracle::max_intersecting_bruteforce(
        reduced.size(), [&](std::size_t a, std::size_t b) { return intersects(reduced[a], reduced[b]); });
    const auto searched = max_intersecting(reduced).size;
    summary << "| reduced 20-set instance: brute " << brute << ", search " << searched;
    if (brute != searched || brute < 9)
        o.fail("reduced instance brute " + std::to_string(brute) + " vs search " + std::to_string(searched));
    if (o.passed)
        o.detail = "maxima " + summary.str();
    return o;
}

Outcome classic_ekr() {
    Outcome o;
    int checked = 0;
    for (int n = 2; n <= 7; ++n)
        for (int r = 1; 2 * r <= n; ++r) {
            ++checked;
            const auto rep = ekr_verdict(empty_graph(n), r);
            if (rep.max_intersecting != binomial(n - 1, r - 1) || !holds(rep.verdict))
                o.fail("E" + std::to_string(n) + " r=" + std::to_string(r));
        }
    if (o.passed)
        o.detail = std::to_string(checked) + " (n, r) pairs";
    return o;
}

Outcome interval_lemma() {
    Outcome o;
    std::size_t checked = 0;
    for (auto [n, m] : lemma_grids)
        for (int r = 1; 2 * r <= std::min(n, m); ++r)
            for (const auto &order : enumerate_orders(n, m)) {
                ++checked;
                const auto res = lemma1_search(order, r);
                if (res.max_size != r)
                    o.fail(order_to_json(order).dump() + " r=" + std::to_string(r) + " max " + std::to_string(res.max_size));
            }
    if (o.passed)
        o.detail = std::to_string(checked) + " (order, r) pairs";
    return o;
}

Outcome occurrence() {
    Outcome o;
    std::size_t checked = 0;
    for (int r = 1; r <= 2; ++r) {
        const auto expected = factorial(r) * factorial(4 - r) * factorial(4 - r);
        for (const auto &a : enumerate_rook(4, 4, r)) {
            ++checked;
            if (orders_containing(a) != expected)
                o.fail("r=" + std::to_string(r) + " set " + cells_to_json(a).dump());
        }
    }
    if (o.passed)
        o.detail = std::to_string(checked) + " sets";
    return o;
}

Outcome double_counting() {
    Outcome o;
    const int n = 4, m = 4, r = 2;
    const std::uint64_t bound = static_cast<std::uint64_t>(r) * 36;
    std::vector<Family> families{star_family(n, m, r, {1, 1})};
    const auto all = enumerate_rook(n, m, r);
    std::mt19937_64 rng(0);
    for (int s = 0; s < 100; ++s)
        families.push_back(random_intersecting_family(all, {n, m}, r, rng));
    std::uint64_t star_lhs = 0;
    for (std::size_t k = 0; k < families.size(); ++k) {
        const auto dc = double_count(families[k]);
        if (k == 0)
            star_lhs = dc.lhs.value();
        if (!is_intersecting(families[k]) || dc.lhs != dc.rhs || dc.lhs.value() > bound)
            o.fail("family " + std::to_string(k));
    }
    if (o.passed)
        o.detail = "101 families, star lhs " + std::to_string(star_lhs) + " <= " + std::to_string(bound);
    return o;
}

Outcome well_covered() {
    Outcome o;
    for (int n = 1; n <= 5; ++n)
        for (int m = 1; m <= 5; ++m) {
            const auto g = cartesian_product(complete_graph(n), complete_graph(m));
            const int a = alpha(g), u = mu(g);
            if (a != std::min(n, m) || u != std::min(n, m))
                o.fail("K" + std::to_string(n) + "xK" + std::to_string(m) + ": alpha " + std::to_string(a) + ", mu " +
                       std::to_string(u));
        }
    if (o.passed)
        o.detail = "25 grids";
    return o;
}

Outcome lex_products() {
    Outcome o;
    const std::vector<std::pair<std::string, SimpleGraph>> graphs = {
        {"E2", empty_graph(2)}, {"E3", empty_graph(3)}, {"E4", empty_graph(4)}, {"P3", path_graph(3)},
        {"P4", path_graph(4)},  {"C4", cycle_graph(4)}, {"C5", cycle_graph(5)}};
    int checked = 0;
    for (const auto &[name, g] : graphs) {
        const int u = mu(g);
        for (int r = 1; 2 * r <= u; ++r) {
            const auto check = lex_check(g, 2, r, {}, name);
            if (!holds(check.premise.verdict))
                continue;
            ++checked;
            if (!holds(check.conclusion.verdict))
                o.fail(name + "[K2] r=" + std::to_string(r) + " " + to_string(check.conclusion.verdict));
        }
    }
    if (o.passed)
        o.detail = std::to_string(checked) + " (G, r) pairs with premise holding";
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    std::mt19937_64 rng(20240601);
    const auto pool_rook = enumerate_rook(5, 5, 2);
    const auto pool_sets = enumerate_independent(cycle_graph(9), 3);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t count = 1 + rng() % 18;
        std::size_t brute = 0, searched = 0;
        if (trial % 2 == 0) {
            std::vector<IndependentSet> sets;
            while (sets.size() < count) {
                const auto &s = pool_rook[rng() % pool_rook.size()];
                if (std::find(sets.begin(), sets.end(), s) == sets.end())
                    sets.push_back(s);
            }
            brute = oracle::max_intersecting_bruteforce(count, [&](std::size_t a, std::size_t b) { return intersects(sets[a], sets[b]); });
            searched = max_intersecting(sets).size;
        } else {
            std::vector<VertexSet> sets;
            while (sets.size() < std::min(count, pool_sets.size())) {
                const auto &s = pool_sets[rng() % pool_sets.size()];
                if (std::find(sets.begin(), sets.end(), s) == sets.end())
                    sets.push_back(s);
            }
            brute = oracle::max_intersecting_bruteforce(sets.size(), [&](std::size_t a, std::size_t b) { return intersects(sets[a], sets[b]); });
            searched = max_intersecting(sets).size;
        }
        if (brute != searched)
            o.fail("trial " + std::to_string(trial) + ": brute " + std::to_string(brute) + ", search " + std::to_string(searched));
    }
    if (o.passed)
        o.detail = "200 inputs";
    return o;
}

Outcome determinism() {
    Outcome o;
    if (cli_path.empty()) {
        o.fail("no CLI path given");
        return o;
    }
    std::vector<std::string> runs;
    for (const auto &c : rook_cases)
        runs.push_back("verify --n " + std::to_string(c.n) + " --m " + std::to_string(c.m) + " --r " + std::to_string(c.r));
    for (auto [n, m] : lemma_grids)
        runs.push_back("lemma1 --n " + std::to_string(n) + " --m " + std::to_string(m));
    for (const auto &args : runs) {
        const auto one = capture(args + " --json --threads 1");
        const auto eight = capture(args + " --json --threads 8");
        try {
            if (without_timing(one) != without_timing(eight))
                o.fail(args + ": reports differ");
        } catch (const json::exception &) {
            o.fail(args + ": no JSON report");
        }
    }
    if (o.passed)
        o.detail = std::to_string(runs.size()) + " commands";
    return o;
}

} // namespace

int main(int argc, char **argv) {
    if (argc > 1)
        cli_path = argv[1];
    using std::chrono::seconds;
    const std::vector<Criterion> criteria = {
        {1, "count formula, 1 <= r <= n <= m <= 6", seconds(60), count_formula},
        {2, "star formula, every vertex, n <= m <= 5", seconds(30), star_formula},
        {3, "rook grids are r-EKR on six instances", seconds(600), rook_theorem},
        {4, "empty graphs give C(n-1, r-1), n <= 7", seconds(60), classic_ekr},
        {5, "interval families per cyclic order have max r", seconds(120), interval_lemma},
        {6, "interval occurrence count at (4,4)", seconds(60), occurrence},
        {7, "double-counting identity and bound", seconds(60), double_counting},
        {8, "alpha = mu = min(n,m) on K_n x K_m", seconds(60), well_covered},
        {9, "lexicographic products G[K_2]", seconds(300), lex_products},
        {10, "search matches subfamily brute force", seconds(120), oracle_equivalence},
        {11, "reports identical for 1 and 8 threads", seconds(1200), determinism},
    };

    int failures = 0;
    for (const auto &c : criteria) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception &e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const auto took = std::chrono::duration<double>(Clock::now() - start);
        if (o.passed && took > c.limit)
            o.fail("took " + std::to_string(took.count()) + " s");
        failures += o.passed ? 0 : 1;
        std::printf("[%s] %2d %-50s %8.2f s / %4lld s  %s\n", o.passed ? "PASS" : "FAIL", c.id, c.name.c_str(),
                    took.count(), static_cast<long long>(c.limit.count()), o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
