#pragma once

// Command-line front end. dispatch() is the whole program; tools/ekr_cli.cpp
// only forwards argv. Every command yields a RunReport:
//
//   {"schema": 1, "command": ..., "parameters": {...}, "result": {...},
//    "counterexample": {...}?, "seed": N?, "elapsed_ms": T}
//
// Exit codes: 0 verified/holds, 1 violation (counterexample attached),
// 2 usage or input error, 3 budget exhausted (inconclusive).

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ekr/combinatorics.hpp"
#include "ekr/cycle_method.hpp"
#include "ekr/errors.hpp"
#include "ekr/extremal.hpp"
#include "ekr/graph.hpp"
#include "ekr/io.hpp"
#include "ekr/rook.hpp"
#include "ekr/sampling.hpp"

namespace ekr::cli {

enum ExitCode : int { Verified = 0, Violation = 1, UsageError = 2, Inconclusive = 3 };

struct Options {
    std::optional<int> n, m, r, k;
    std::optional<std::string> graph, family, out, left, right, report;
    std::string kind = "cartesian";
    bool json = false;
    std::uint64_t seed = 0;
    int samples = 100;
    std::uint64_t budget_nodes = 100'000'000;
    std::uint64_t budget_seconds = 3600;
    unsigned threads = 1;
};

struct Outcome {
    json parameters = json::object();
    json result = json::object();
    std::optional<json> counterexample;
    std::optional<std::uint64_t> seed;
    /// Lines for the plain-text table.
    std::vector<std::pair<std::string, std::string>> table;
    int exit_code = Verified;
};

// ---------------------------------------------------------------------------
// Helpers

inline int need(const std::optional<int> &v, const char *flag) {
    if (!v)
        throw InputError(std::string("missing required flag --") + flag);
    return *v;
}

inline std::string need(const std::optional<std::string> &v, const char *flag) {
    if (!v)
        throw InputError(std::string("missing required flag --") + flag);
    return *v;
}

inline ExtremalOptions extremal_options(const Options &o) {
    ExtremalOptions x;
    x.budget.max_nodes = o.budget_nodes;
    x.budget.max_time = std::chrono::seconds(o.budget_seconds);
    x.threads = o.threads;
    x.independence.search = x.budget;
    return x;
}

/// Named graphs: K<n>, E<n>, P<n>, C<n>, S<n> (= K_{1,n}), and "AxB" for the
/// Cartesian product of two names. Anything else is read as a JSON file.
inline SimpleGraph resolve_graph(const std::string &graph_name) {
    if (std::filesystem::exists(graph_name))
        return parse_graph(read_text_file(graph_name), graph_name);
    if (auto x = graph_name.find('x'); x != std::string::npos)
        return cartesian_product(resolve_graph(graph_name.substr(0, x)), resolve_graph(graph_name.substr(x + 1)));
    if (graph_name.size() >= 2 && std::string("KEPCS").find(graph_name[0]) != std::string::npos &&
        std::all_of(graph_name.begin() + 1, graph_name.end(), [](char c) { return c >= '0' && c <= '9'; }) && graph_name.size() <= 5) {
        const int size = std::stoi(graph_name.substr(1));
        switch (graph_name[0]) {
        case 'K':
            return complete_graph(size);
        case 'E':
            return empty_graph(size);
        case 'P':
            return path_graph(size);
        case 'C':
            return cycle_graph(size);
        case 'S':
            return star_graph(size);
        }
    }
    throw InputError("graph '" + graph_name + "' is neither a readable file nor a known name (K5, E4, P4, C5, S3, K3xK4)");
}

inline void require_grid(const Options &o) {
    require_dimensions(need(o.n, "n"), need(o.m, "m"));
}

inline json order_counterexample_base(const char *kind, const CyclicOrderPair &order, int r) {
    return json{{"kind", kind}, {"n", order.n()}, {"m", order.m()}, {"r", r}, {"order", order_to_json(order)}};
}

/// r values to sweep: the given one, or every r with 2r <= min(n,m).
inline std::vector<int> sweep_lengths(const Options &o, int n, int m, int lowest) {
    if (o.r)
        return {*o.r};
    std::vector<int> out;
    for (int r = lowest; 2 * r <= std::min(n, m); ++r)
        out.push_back(r);
    return out;
}

// ---------------------------------------------------------------------------
// Commands

inline Outcome cmd_count(const Options &o) {
    require_grid(o);
    const int n = *o.n, m = *o.m;
    Outcome out;
    out.parameters = {{"n", n}, {"m", m}};
    out.result["cyclic_orders"] = cyclic_order_count(n, m).value();
    out.result["permutation_pairs"] = (factorial(n) * factorial(m)).value();
    if (o.r) {
        const int r = *o.r;
        out.parameters["r"] = r;
        out.result["independent_sets"] = rook_count(n, m, r).value();
        if (r <= std::min(n, m)) {
            out.result["star"] = rook_star_count(n, m, r).value();
            out.result["interval_occurrences"] = interval_occurrence_count(n, m, r).value();
            out.result["lemma_bound"] = (ExactCount{static_cast<std::uint64_t>(r)} * cyclic_order_count(n, m)).value();
        }
    }
    for (const char *key : {"independent_sets", "star", "cyclic_orders", "interval_occurrences", "permutation_pairs"})
        if (out.result.contains(key))
            out.table.emplace_back(key, out.result[key].dump());
    return out;
}

inline Outcome cmd_enumerate(const Options &o) {
    require_grid(o);
    const int n = *o.n, m = *o.m, r = need(o.r, "r");
    Outcome out;
    out.parameters = {{"n", n}, {"m", m}, {"r", r}};
    Family f({n, m}, r, enumerate_rook(n, m, r));
    out.result["count"] = f.size();
    out.table.emplace_back("count", std::to_string(f.size()));
    if (o.out) {
        write_text_file(*o.out, family_to_json(f).dump() + "\n");
        out.result["file"] = *o.out;
        out.table.emplace_back("file", *o.out);
    } else {
        out.result["family"] = family_to_json(f);
        for (const auto &s : f.members())
            out.table.emplace_back("set", cells_to_json(s).dump());
    }
    return out;
}

inline json graph_violation(const SimpleGraph &g, const EkrReport &rep) {
    json c = {{"kind", "graph_family_exceeds_best_star"}, {"graph", graph_to_json(g)}, {"r", rep.r},
              {"best_star", rep.best_star.value()}};
    c["sets"] = vertex_sets_to_json(std::get<std::vector<VertexSet>>(rep.witness));
    return c;
}

inline void tabulate(Outcome &out, const EkrReport &rep, const std::string &prefix = "") {
    out.table.emplace_back(prefix + "r", std::to_string(rep.r));
    out.table.emplace_back(prefix + "independent_sets", std::to_string(rep.family_count.value()));
    out.table.emplace_back(prefix + "max_intersecting", std::to_string(rep.max_intersecting.value()));
    out.table.emplace_back(prefix + "best_star", std::to_string(rep.best_star.value()));
    out.table.emplace_back(prefix + "verdict", to_string(rep.verdict));
}

inline Outcome cmd_verify(const Options &o) {
    Outcome out;
    const int r = need(o.r, "r");
    const auto x = extremal_options(o);
    if (o.graph) {
        const auto g = resolve_graph(*o.graph);
        out.parameters = {{"graph", *o.graph}, {"r", r}};
        const auto rep = ekr_verdict(g, r, x, *o.graph);
        out.result = report_to_json(rep);
        tabulate(out, rep);
        if (!holds(rep.verdict) && rep.in_theorem_range) {
            out.exit_code = Violation;
            out.counterexample = graph_violation(g, rep);
        }
        return out;
    }
    require_grid(o);
    const int n = *o.n, m = *o.m;
    out.parameters = {{"n", n}, {"m", m}, {"r", r}};
    const auto rep = rook_ekr_verdict(n, m, r, x);
    out.result = report_to_json(rep);
    tabulate(out, rep);
    if (!holds(rep.verdict) && rep.in_theorem_range) {
        out.exit_code = Violation;
        out.counterexample = json{{"kind", "intersecting_family_exceeds_star"}, {"n", n}, {"m", m}, {"r", r},
                                  {"best_star", rep.best_star.value()},
                                  {"sets", sets_to_json(std::get<Family>(rep.witness).members())}};
    }
    return out;
}

inline Outcome cmd_lemma1(const Options &o) {
    require_grid(o);
    const int n = *o.n, m = *o.m;
    Outcome out;
    out.parameters = {{"n", n}, {"m", m}};
    if (o.r)
        out.parameters["r"] = *o.r;
    const auto orders = enumerate_orders(n, m);
    json per_r = json::array();
    for (int r : sweep_lengths(o, n, m, 1)) {
        std::vector<Lemma1Result> results(orders.size());
        parallel_for(orders.size(), o.threads, [&](std::size_t k) { results[k] = lemma1_search(orders[k], r); });
        std::map<int, std::size_t> histogram;
        std::optional<std::size_t> bad;
        for (std::size_t k = 0; k < results.size(); ++k) {
            ++histogram[results[k].max_size];
            if (results[k].max_size != r && !bad)
                bad = k;
        }
        json hist = json::object();
        for (auto [value, count] : histogram)
            hist[std::to_string(value)] = count;
        per_r.push_back({{"r", r}, {"orders", orders.size()}, {"max_histogram", hist}, {"all_equal_r", !bad}});
        out.table.emplace_back("r=" + std::to_string(r), std::to_string(orders.size()) + " orders, " +
                                                             (bad ? "VIOLATION" : "max = r on every order"));
        if (bad && !out.counterexample) {
            out.exit_code = Violation;
            auto c = order_counterexample_base("lemma1_violation", orders[*bad], r);
            c["max"] = results[*bad].max_size;
            c["sets"] = sets_to_json(results[*bad].witness);
            out.counterexample = c;
        }
    }
    out.result["lengths"] = per_r;
    return out;
}

inline Outcome cmd_occurrence(const Options &o) {
    require_grid(o);
    const int n = *o.n, m = *o.m;
    Outcome out;
    out.parameters = {{"n", n}, {"m", m}};
    if (o.r)
        out.parameters["r"] = *o.r;
    require_order_budget(n, m, default_order_budget);
    std::vector<int> lengths;
    if (o.r)
        lengths = {*o.r};
    else
        for (int r = 1; r <= std::min(n, m); ++r)
            lengths.push_back(r);
    json per_r = json::array();
    for (int r : lengths) {
        const auto sets = enumerate_rook(n, m, r);
        const auto expected = interval_occurrence_count(n, m, r);
        std::vector<ExactCount> observed(sets.size());
        parallel_for(sets.size(), o.threads, [&](std::size_t k) { observed[k] = orders_containing(sets[k]); });
        std::optional<std::size_t> bad;
        for (std::size_t k = 0; k < sets.size() && !bad; ++k)
            if (observed[k] != expected)
                bad = k;
        per_r.push_back({{"r", r}, {"sets", sets.size()}, {"expected", expected.value()}, {"all_match", !bad}});
        out.table.emplace_back("r=" + std::to_string(r), std::to_string(sets.size()) + " sets, expected " +
                                                             std::to_string(expected.value()) +
                                                             (bad ? ", MISMATCH" : ", all match"));
        if (bad && !out.counterexample) {
            out.exit_code = Violation;
            out.counterexample = json{{"kind", "occurrence_mismatch"}, {"n", n}, {"m", m}, {"r", r},
                                      {"set", cells_to_json(sets[*bad])}, {"observed", observed[*bad].value()},
                                      {"expected", expected.value()}};
        }
    }
    out.result["lengths"] = per_r;
    return out;
}

inline json double_count_entry(const std::string &label, const Family &f, const DoubleCount &dc, bool intersecting) {
    return json{{"label", label},         {"size", f.size()},         {"intersecting", intersecting},
                {"lhs", dc.lhs.value()},  {"rhs", dc.rhs.value()},    {"lemma_bound", dc.lemma_bound.value()}};
}

inline bool double_count_ok(const DoubleCount &dc, bool intersecting) {
    return dc.lhs == dc.rhs && (!intersecting || dc.lhs <= dc.lemma_bound);
}

inline Outcome cmd_double_count(const Options &o) {
    Outcome out;
    std::vector<std::pair<std::string, Family>> families;
    if (o.family) {
        out.parameters = {{"family", *o.family}};
        families.emplace_back(*o.family, parse_family(read_text_file(*o.family), *o.family));
    } else {
        require_grid(o);
        const int n = *o.n, m = *o.m, r = need(o.r, "r");
        if (r < 1 || r > std::min(n, m))
            throw InputError("r must lie in 1..min(n,m)");
        out.parameters = {{"n", n}, {"m", m}, {"r", r}, {"samples", o.samples}};
        out.seed = o.seed;
        families.emplace_back("star(1,1)", star_family(n, m, r, {1, 1}));
        const auto all = enumerate_rook(n, m, r);
        std::mt19937_64 rng(o.seed);
        for (int s = 0; s < o.samples; ++s)
            families.emplace_back("sample " + std::to_string(s), random_intersecting_family(all, {n, m}, r, rng));
    }
    json entries = json::array();
    std::size_t ok_count = 0;
    for (const auto &[label, f] : families) {
        const auto dc = double_count(f, o.threads);
        const bool intersecting = is_intersecting(f);
        entries.push_back(double_count_entry(label, f, dc, intersecting));
        if (double_count_ok(dc, intersecting)) {
            ++ok_count;
        } else if (!out.counterexample) {
            out.exit_code = Violation;
            out.counterexample = json{{"kind", "double_count_mismatch"}, {"family", family_to_json(f)},
                                      {"lhs", dc.lhs.value()}, {"rhs", dc.rhs.value()}};
        }
    }
    out.result["families"] = entries;
    out.result["all_hold"] = ok_count == families.size();
    out.table.emplace_back("families", std::to_string(families.size()));
    out.table.emplace_back("identity_holds", std::to_string(ok_count) + "/" + std::to_string(families.size()));
    if (!families.empty()) {
        const auto &first = entries.front();
        out.table.emplace_back("first", first["label"].get<std::string>() + ": lhs " + first["lhs"].dump() + ", rhs " +
                                            first["rhs"].dump() + ", bound " + first["lemma_bound"].dump());
    }
    return out;
}

inline Outcome cmd_windows(const Options &o) {
    require_grid(o);
    const int n = *o.n, m = *o.m;
    Outcome out;
    out.parameters = {{"n", n}, {"m", m}};
    if (o.r)
        out.parameters["r"] = *o.r;
    const auto orders = enumerate_orders(n, m);
    json per_r = json::array();
    for (int r : sweep_lengths(o, n, m, 1)) {
        std::vector<std::optional<std::pair<std::pair<int, int>, WindowReport>>> failures(orders.size());
        parallel_for(orders.size(), o.threads, [&](std::size_t k) {
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= m; ++j) {
                    auto rep = window_disjointness_check(orders[k], i, j, r);
                    if (!rep.passed) {
                        failures[k] = {{i, j}, std::move(rep)};
                        return;
                    }
                }
        });
        auto bad = std::find_if(failures.begin(), failures.end(), [](const auto &f) { return f.has_value(); });
        const bool passed = bad == failures.end();
        per_r.push_back({{"r", r},
                         {"orders", orders.size()},
                         {"starts_checked", orders.size() * static_cast<std::size_t>(n * m)},
                         {"passed", passed}});
        out.table.emplace_back("r=" + std::to_string(r), passed ? "pass" : "FAIL");
        if (!passed && !out.counterexample) {
            const auto k = static_cast<std::size_t>(bad - failures.begin());
            const auto &[start, rep] = **bad;
            auto c = order_counterexample_base("window_violation", orders[k], r);
            c["start"] = {start.first, start.second};
            c["clause"] = rep.clause;
            c["detail"] = rep.detail;
            c["sets"] = sets_to_json(rep.witness);
            out.counterexample = c;
            out.exit_code = Violation;
        }
    }
    out.result["lengths"] = per_r;
    out.result["general_set_statement"] = "not_tested";
    return out;
}

inline Outcome cmd_orders(const Options &o) {
    require_grid(o);
    const int n = *o.n, m = *o.m;
    Outcome out;
    out.parameters = {{"n", n}, {"m", m}};
    const auto orders = enumerate_orders(n, m);
    json list = json::array();
    for (const auto &ord : orders) {
        list.push_back(order_to_json(ord));
        out.table.emplace_back("order", order_to_json(ord).dump());
    }
    out.result["count"] = orders.size();
    out.result["expected"] = cyclic_order_count(n, m).value();
    out.result["orders"] = list;
    out.table.insert(out.table.begin(), {"count", std::to_string(orders.size())});
    if (orders.size() != cyclic_order_count(n, m).value()) {
        out.exit_code = Violation;
        out.counterexample = json{{"kind", "order_count_mismatch"}, {"n", n}, {"m", m}, {"observed", orders.size()}};
    }
    return out;
}

inline Outcome cmd_graph_stats(const Options &o) {
    const auto graph_name = need(o.graph, "graph");
    const auto g = resolve_graph(graph_name);
    const auto x = extremal_options(o);
    Outcome out;
    out.parameters = {{"graph", graph_name}};
    const int a = alpha(g, x.independence);
    const int u = mu(g, x.independence);
    out.result = {{"vertices", g.vertex_count()}, {"edges", g.edge_count()}, {"alpha", a}, {"mu", u},
                  {"well_covered", a == u}};
    for (const char *key : {"vertices", "edges", "alpha", "mu", "well_covered"})
        out.table.emplace_back(key, out.result[key].dump());
    return out;
}

inline Outcome cmd_product(const Options &o) {
    const auto left = need(o.left, "left");
    const auto right = need(o.right, "right");
    const auto g = resolve_graph(left), h = resolve_graph(right);
    Outcome out;
    out.parameters = {{"kind", o.kind}, {"left", left}, {"right", right}};
    SimpleGraph p = [&] {
        if (o.kind == "cartesian")
            return cartesian_product(g, h);
        if (o.kind == "lexicographic")
            return lexicographic_product(g, h);
        throw InputError("--kind must be cartesian or lexicographic, got " + o.kind);
    }();
    out.result = {{"vertices", p.vertex_count()}, {"edges", p.edge_count()}};
    if (o.out) {
        write_text_file(*o.out, graph_to_json(p).dump() + "\n");
        out.result["file"] = *o.out;
    } else {
        out.result["graph"] = graph_to_json(p);
    }
    for (const char *key : {"vertices", "edges", "file"})
        if (out.result.contains(key))
            out.table.emplace_back(key, out.result[key].is_string() ? out.result[key].get<std::string>()
                                                                     : out.result[key].dump());
    return out;
}

inline Outcome cmd_ht(const Options &o) {
    const auto graph_name = need(o.graph, "graph");
    const auto g = resolve_graph(graph_name);
    const auto x = extremal_options(o);
    Outcome out;
    out.parameters = {{"graph", graph_name}};
    const int u = mu(g, x.independence);
    const auto reports = ht_check(g, x, graph_name);
    json list = json::array();
    for (const auto &rep : reports) {
        list.push_back(report_to_json(rep));
        tabulate(out, rep, "r" + std::to_string(rep.r) + ".");
        if (!holds(rep.verdict) && !out.counterexample) {
            out.exit_code = Violation;
            out.counterexample = graph_violation(g, rep);
        }
    }
    out.result = {{"mu", u}, {"reports", list}, {"vacuous", reports.empty()}};
    out.table.insert(out.table.begin(), {"mu", std::to_string(u)});
    return out;
}

inline Outcome cmd_lex(const Options &o) {
    const auto graph_name = need(o.graph, "graph");
    const int k = need(o.k, "k");
    const auto g = resolve_graph(graph_name);
    const auto x = extremal_options(o);
    Outcome out;
    out.parameters = {{"graph", graph_name}, {"k", k}};
    std::vector<int> lengths;
    if (o.r) {
        out.parameters["r"] = *o.r;
        lengths = {*o.r};
    } else {
        const int u = mu(g, x.independence);
        for (int r = 1; 2 * r <= u; ++r)
            lengths.push_back(r);
    }
    json list = json::array();
    for (int r : lengths) {
        const auto check = lex_check(g, k, r, x, graph_name);
        list.push_back({{"r", r},
                        {"premise", report_to_json(check.premise)},
                        {"conclusion", report_to_json(check.conclusion)},
                        {"theorem_violation", check.theorem_violation}});
        out.table.emplace_back("r=" + std::to_string(r), std::string("premise ") + to_string(check.premise.verdict) +
                                                             ", conclusion " + to_string(check.conclusion.verdict));
        if (check.theorem_violation && !out.counterexample) {
            out.exit_code = Violation;
            out.counterexample = json{{"kind", "lex_product_violation"}, {"graph", graph_to_json(g)}, {"k", k}, {"r", r}};
        }
    }
    out.result["checks"] = list;
    return out;
}

// ---------------------------------------------------------------------------
// Independent witness checking. Uses only definitional routines (set
// validation, pairwise intersection, interval realisation); never the
// searches that produced the witness.

struct WitnessCheck {
    bool valid = false;
    std::string reason;
};

inline std::vector<VertexSet> vertex_sets_from_json(const json &arr, const SimpleGraph &g) {
    std::vector<VertexSet> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        VertexSet s(arr[i].get<std::vector<int>>());
        if (!is_independent(g, s))
            throw InputError("sets[" + std::to_string(i) + "] is not independent");
        out.push_back(std::move(s));
    }
    return out;
}

template <typename Set>
bool pairwise_intersecting(const std::vector<Set> &sets) {
    for (std::size_t a = 0; a < sets.size(); ++a)
        for (std::size_t b = a + 1; b < sets.size(); ++b)
            if (!intersects(sets[a], sets[b]))
                return false;
    return true;
}

inline std::vector<IndependentSet> rook_sets_from_json(const json &arr, Grid grid, int r) {
    std::vector<IndependentSet> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        auto s = independent_set_from_json(arr[i], grid, "sets[" + std::to_string(i) + "]");
        if (s.r() != r)
            throw InputError("sets[" + std::to_string(i) + "] has the wrong size");
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw InputError("witness repeats a set");
    return out;
}

inline WitnessCheck check_counterexample(const json &c) {
    const std::string kind = c.at("kind").get<std::string>();
    if (kind == "intersecting_family_exceeds_star") {
        const int n = c.at("n"), m = c.at("m"), r = c.at("r");
        const auto sets = rook_sets_from_json(c.at("sets"), {n, m}, r);
        if (!pairwise_intersecting(sets))
            return {false, "sets are not pairwise intersecting"};
        if (ExactCount{sets.size()} <= rook_star_count(n, m, r))
            return {false, "family is no larger than a star"};
        return {true, "intersecting family larger than every star"};
    }
    if (kind == "graph_family_exceeds_best_star") {
        const auto g = graph_from_json(c.at("graph"), "counterexample.graph");
        const int r = c.at("r");
        const auto sets = vertex_sets_from_json(c.at("sets"), g);
        for (const auto &s : sets)
            if (static_cast<int>(s.size()) != r)
                return {false, "set of the wrong size"};
        if (!pairwise_intersecting(sets))
            return {false, "sets are not pairwise intersecting"};
        std::vector<std::size_t> star(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
        for (const auto &s : enumerate_independent(g, r))
            for (int v : s.labels())
                ++star[v];
        if (sets.size() <= *std::max_element(star.begin(), star.end()))
            return {false, "family is no larger than the best star"};
        return {true, "intersecting family larger than every star"};
    }
    if (kind == "lemma1_violation") {
        const auto order = order_from_json(c.at("order"), "counterexample.order");
        const int r = c.at("r");
        const auto sets = rook_sets_from_json(c.at("sets"), order.grid(), r);
        for (const auto &s : sets)
            if (!is_interval_of(order, s))
                return {false, "a witness set is not an interval of the order"};
        if (!pairwise_intersecting(sets))
            return {false, "sets are not pairwise intersecting"};
        if (static_cast<int>(sets.size()) > r)
            return {true, "more than r pairwise intersecting intervals"};
        // A claimed maximum below r is refuted by the r intervals through one cell.
        std::vector<IndependentSet> through;
        for (int k = 0; k < r; ++k)
            through.push_back(interval_at(order, wrap_position(1 - k, order.n()), wrap_position(1 - k, order.m()), r));
        if (c.at("max").get<int>() >= r)
            return {false, "no more than r intervals and no claim below r"};
        if (pairwise_intersecting(through))
            return {false, "r intervals through a common cell intersect, so the maximum is at least r"};
        return {true, "r intervals through a common cell fail to intersect"};
    }
    if (kind == "occurrence_mismatch") {
        const int n = c.at("n"), m = c.at("m"), r = c.at("r");
        const auto a = independent_set_from_json(c.at("set"), {n, m}, "set");
        std::uint64_t count = 0;
        for_each_order(n, m, [&](const CyclicOrderPair &o) {
            bool found = false;
            for (int i = 1; i <= n && !found; ++i)
                for (int j = 1; j <= m && !found; ++j)
                    found = interval_at(o, i, j, r) == a;
            count += found ? 1 : 0;
        });
        if (interval_occurrence_count(n, m, r) == count)
            return {false, "recount agrees with the closed form"};
        return {true, "recount differs from the closed form"};
    }
    if (kind == "double_count_mismatch") {
        const auto f = family_from_json(c.at("family"), "counterexample.family");
        const auto dc = double_count(f);
        const bool intersecting = is_intersecting(f);
        if (double_count_ok(dc, intersecting))
            return {false, "recount satisfies the identity"};
        return {true, "recount violates the identity"};
    }
    if (kind == "window_violation") {
        const auto order = order_from_json(c.at("order"), "counterexample.order");
        const int r = c.at("r");
        const auto &start = c.at("start");
        const auto rep = window_disjointness_check(order, start.at(0), start.at(1), r);
        if (rep.passed)
            return {false, "window structure holds at this start"};
        return {true, "window clause " + rep.clause + " fails"};
    }
    if (kind == "lex_product_violation") {
        const auto g = graph_from_json(c.at("graph"), "counterexample.graph");
        const auto check = lex_check(g, c.at("k"), c.at("r"));
        if (!check.theorem_violation)
            return {false, "product verdict holds on recomputation"};
        return {true, "premise holds but product verdict fails"};
    }
    if (kind == "order_count_mismatch") {
        const int n = c.at("n"), m = c.at("m");
        std::uint64_t count = 0;
        for_each_order(n, m, [&](const CyclicOrderPair &) { ++count; });
        if (cyclic_order_count(n, m) == count)
            return {false, "order count matches"};
        return {true, "order count differs"};
    }
    throw InputError("unknown counterexample kind '" + kind + "'");
}

inline Outcome cmd_check_witness(const Options &o) {
    const auto path = need(o.report, "report");
    const json doc = detail::parse_json(read_text_file(path), path);
    Outcome out;
    out.parameters = {{"report", path}};
    WitnessCheck verdict;
    if (doc.contains("counterexample")) {
        verdict = check_counterexample(doc.at("counterexample"));
        out.result["checked"] = "counterexample";
    } else if (doc.contains("result") && doc.at("result").contains("witness")) {
        // A verification report: the witness must be an intersecting family of the reported size.
        const json &res = doc.at("result");
        const std::size_t claimed = res.at("max_intersecting");
        const json &w = res.at("witness");
        bool ok = false;
        if (res.at("subject") == "rook") {
            const auto sets = rook_sets_from_json(w, {res.at("n"), res.at("m")}, res.at("r"));
            ok = pairwise_intersecting(sets) && sets.size() == claimed;
        } else {
            std::vector<VertexSet> sets;
            for (const auto &s : w)
                sets.emplace_back(s.get<std::vector<int>>());
            ok = pairwise_intersecting(sets) && sets.size() == claimed;
        }
        verdict = {ok, ok ? "witness is an intersecting family of the reported size"
                          : "witness is not an intersecting family of the reported size"};
        out.result["checked"] = "witness";
    } else {
        throw InputError(path + ": report carries neither a counterexample nor a witness");
    }
    out.result["valid"] = verdict.valid;
    out.result["reason"] = verdict.reason;
    out.table.emplace_back("valid", verdict.valid ? "true" : "false");
    out.table.emplace_back("reason", verdict.reason);
    out.exit_code = verdict.valid ? Verified : Violation;
    return out;
}

// ---------------------------------------------------------------------------

inline void emit(std::ostream &os, const std::string &command, const Outcome &o, bool as_json,
                 std::chrono::milliseconds elapsed) {
    if (as_json) {
        json doc;
        doc["schema"] = 1;
        doc["command"] = command;
        doc["parameters"] = o.parameters;
        doc["result"] = o.result;
        if (o.counterexample)
            doc["counterexample"] = *o.counterexample;
        if (o.seed)
            doc["seed"] = *o.seed;
        doc["elapsed_ms"] = elapsed.count();
        os << doc.dump() << "\n";
        return;
    }
    std::size_t width = 0;
    for (const auto &[k, v] : o.table)
        width = std::max(width, k.size());
    for (const auto &[k, v] : o.table)
        os << k << std::string(width - k.size() + 2, ' ') << v << "\n";
    if (o.counterexample)
        os << "counterexample  " << o.counterexample->dump() << "\n";
}

inline void emit_error(std::ostream &out, std::ostream &err, const std::string &command, bool as_json,
                       const std::string &status, const std::string &message, json extra = json::object()) {
    err << "ekr " << (command.empty() ? "" : command + ": ") << message << "\n";
    if (as_json) {
        json doc{{"schema", 1}, {"command", command}, {"status", status}, {"error", message}};
        for (auto it = extra.begin(); it != extra.end(); ++it)
            doc[it.key()] = it.value();
        doc["elapsed_ms"] = 0;
        out << doc.dump() << "\n";
    }
}

/// Parses argv and runs one command. argv[0] is the program name.
inline int dispatch(const std::vector<std::string> &argv, std::ostream &out = std::cout,
                    std::ostream &err = std::cerr) {
    const bool wants_json = std::find(argv.begin(), argv.end(), "--json") != argv.end();

    CLI::App app{"Exact verification toolkit for EKR properties of rook's graphs K_n x K_m"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    Options opt;
    app.add_option("--n", opt.n, "rows of the grid");
    app.add_option("--m", opt.m, "columns of the grid");
    app.add_option("--r", opt.r, "set size");
    app.add_option("--k", opt.k, "clique size for the lexicographic product G[K_k]");
    app.add_option("--graph", opt.graph, "graph JSON file or name (K5, E4, P4, C5, S3, K3xK4)");
    app.add_option("--family", opt.family, "family JSON file");
    app.add_option("--out", opt.out, "output file");
    app.add_option("--left", opt.left, "left product factor");
    app.add_option("--right", opt.right, "right product factor");
    app.add_option("--kind", opt.kind, "product kind: cartesian | lexicographic");
    app.add_option("--report", opt.report, "RunReport JSON to check");
    app.add_flag("--json", opt.json, "emit one JSON RunReport on stdout");
    app.add_option("--seed", opt.seed, "seed for sampled checks (default 0)");
    app.add_option("--samples", opt.samples, "random families for double-count (default 100)");
    app.add_option("--budget-nodes", opt.budget_nodes, "search node budget");
    app.add_option("--budget-seconds", opt.budget_seconds, "search wall-clock budget");
    app.add_option("--threads", opt.threads, "worker threads")->check(CLI::Range(1u, 256u));

    using Handler = Outcome (*)(const Options &);
    const std::vector<std::tuple<const char *, const char *, Handler>> commands = {
        {"count", "closed-form counts", cmd_count},
        {"enumerate", "independent r-sets of K_n x K_m (to --out)", cmd_enumerate},
        {"verify", "exact r-EKR verdict for K_n x K_m or --graph", cmd_verify},
        {"lemma1", "max intersecting interval family, every cyclic order", cmd_lemma1},
        {"occurrence", "cyclic orders containing each set as an interval", cmd_occurrence},
        {"double-count", "double-counting identity on a family or samples", cmd_double_count},
        {"windows", "projection-window structure, every order and start", cmd_windows},
        {"orders", "canonical cyclic orders", cmd_orders},
        {"graph-stats", "alpha, mu and well-coveredness of --graph", cmd_graph_stats},
        {"product", "cartesian or lexicographic product to --out", cmd_product},
        {"ht", "r-EKR for every r <= mu(G)/2", cmd_ht},
        {"lex", "r-EKR of G and G[K_k]", cmd_lex},
        {"check-witness", "independently validate a report's counterexample or witness", cmd_check_witness},
    };
    std::map<std::string, CLI::App *> subs;
    for (const auto &[name, help, handler] : commands)
        subs[name] = app.add_subcommand(name, help);

    std::vector<const char *> raw;
    for (const auto &a : argv)
        raw.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(raw.size()), raw.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return Verified;
    } catch (const CLI::ParseError &e) {
        emit_error(out, err, "", wants_json, "usage_error", e.what());
        err << app.help();
        return UsageError;
    }

    std::string command;
    Handler handler = nullptr;
    for (const auto &[name, help, h] : commands)
        if (subs[name]->parsed()) {
            command = name;
            handler = h;
        }

    const auto start = std::chrono::steady_clock::now();
    try {
        const Outcome o = handler(opt);
        const auto elapsed =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        emit(out, command, o, opt.json, elapsed);
        return o.exit_code;
    } catch (const BudgetExceeded &e) {
        emit_error(out, err, command, opt.json, "inconclusive", e.what(),
                   {{"lower_bound", e.lower_bound()}, {"upper_bound", e.upper_bound()}});
        return Inconclusive;
    } catch (const ResourceError &e) {
        emit_error(out, err, command, opt.json, "inconclusive", e.what());
        return Inconclusive;
    } catch (const InputError &e) {
        emit_error(out, err, command, opt.json, "input_error", e.what());
        return UsageError;
    } catch (const json::exception &e) {
        emit_error(out, err, command, opt.json, "input_error", std::string("malformed report: ") + e.what());
        return UsageError;
    }
}

} // namespace ekr::cli
