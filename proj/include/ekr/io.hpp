#pragma once

// JSON file formats:
//   graph  : {"vertices": N, "edges": [[u, v], ...]}           (1-based)
//   family : {"n": N, "m": M, "r": R, "sets": [[[row, col], ...], ...]}
//   order  : {"sigma1": [...], "sigma2": [...]}                 (canonical)

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ekr/cycle_method.hpp"
#include "ekr/errors.hpp"
#include "ekr/extremal.hpp"
#include "ekr/graph.hpp"
#include "ekr/rook.hpp"

namespace ekr {

using json = nlohmann::json;

namespace detail {

/// Parses text, turning syntax errors into "source:line:col: message".
inline json parse_json(const std::string &text, const std::string &source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        std::size_t line = 1, col = 1;
        const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON (" +
                         e.what() + ")");
    }
}

inline const json &field(const json &obj, const char *key, const std::string &source) {
    if (!obj.is_object())
        throw InputError(source + ": top level must be a JSON object");
    auto it = obj.find(key);
    if (it == obj.end())
        throw InputError(source + ": missing field \"" + key + "\"");
    return *it;
}

inline int as_int(const json &v, const std::string &where) {
    if (!v.is_number_integer())
        throw InputError(where + ": expected an integer");
    const auto x = v.get<long long>();
    if (x < -1'000'000'000LL || x > 1'000'000'000LL)
        throw InputError(where + ": integer out of range");
    return static_cast<int>(x);
}

} // namespace detail

inline std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_text_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw InputError("cannot write " + path);
    out << text;
}

// ---------------------------------------------------------------------------
// Graph

inline json graph_to_json(const SimpleGraph &g) {
    json edges = json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({u, v});
    return json{{"vertices", g.vertex_count()}, {"edges", std::move(edges)}};
}

inline SimpleGraph graph_from_json(const json &doc, const std::string &source = "graph") {
    const int n = detail::as_int(detail::field(doc, "vertices", source), source + ": vertices");
    const json &edges = detail::field(doc, "edges", source);
    if (!edges.is_array())
        throw InputError(source + ": edges must be an array");
    std::vector<std::pair<int, int>> list;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const std::string where = source + ": edges[" + std::to_string(e) + "]";
        if (!edges[e].is_array() || edges[e].size() != 2)
            throw InputError(where + ": expected a pair [u, v]");
        list.emplace_back(detail::as_int(edges[e][0], where + "[0]"), detail::as_int(edges[e][1], where + "[1]"));
    }
    try {
        return SimpleGraph(n, list);
    } catch (const InputError &err) {
        throw InputError(source + ": " + err.what());
    }
}

inline SimpleGraph parse_graph(const std::string &text, const std::string &source = "graph") {
    return graph_from_json(detail::parse_json(text, source), source);
}

// ---------------------------------------------------------------------------
// Rook sets and families

inline json cells_to_json(const IndependentSet &s) {
    json out = json::array();
    for (auto c : s.cells())
        out.push_back({c.row, c.col});
    return out;
}

inline json sets_to_json(const std::vector<IndependentSet> &sets) {
    json out = json::array();
    for (const auto &s : sets)
        out.push_back(cells_to_json(s));
    return out;
}

inline json vertex_sets_to_json(const std::vector<VertexSet> &sets) {
    json out = json::array();
    for (const auto &s : sets)
        out.push_back(s.labels());
    return out;
}

inline json family_to_json(const Family &f) {
    return json{{"n", f.grid().n}, {"m", f.grid().m}, {"r", f.r()}, {"sets", sets_to_json(f.members())}};
}

inline IndependentSet independent_set_from_json(const json &cells, Grid grid, const std::string &where) {
    if (!cells.is_array())
        throw InputError(where + ": expected an array of [row, col] cells");
    std::vector<RookVertex> out;
    for (std::size_t c = 0; c < cells.size(); ++c) {
        const std::string cw = where + "[" + std::to_string(c) + "]";
        if (!cells[c].is_array() || cells[c].size() != 2)
            throw InputError(cw + ": expected [row, col]");
        RookVertex v{detail::as_int(cells[c][0], cw + "[0]"), detail::as_int(cells[c][1], cw + "[1]")};
        if (v.row < 1 || v.row > grid.n)
            throw InputError(cw + ": row " + std::to_string(v.row) + " outside 1.." + std::to_string(grid.n));
        if (v.col < 1 || v.col > grid.m)
            throw InputError(cw + ": column " + std::to_string(v.col) + " outside 1.." + std::to_string(grid.m));
        out.push_back(v);
    }
    try {
        return IndependentSet(grid, std::move(out));
    } catch (const InputError &err) {
        throw InputError(where + ": " + err.what());
    }
}

inline Family family_from_json(const json &doc, const std::string &source = "family",
                               std::size_t max_sets = default_set_budget) {
    const int n = detail::as_int(detail::field(doc, "n", source), source + ": n");
    const int m = detail::as_int(detail::field(doc, "m", source), source + ": m");
    const int r = detail::as_int(detail::field(doc, "r", source), source + ": r");
    if (n < 1 || m < 1)
        throw InputError(source + ": n and m must be positive");
    if (r < 0 || r > std::min(n, m))
        throw InputError(source + ": r must lie in 0..min(n,m)");
    const json &sets = detail::field(doc, "sets", source);
    if (!sets.is_array())
        throw InputError(source + ": sets must be an array");
    if (sets.size() > max_sets)
        throw ResourceError(source + ": " + std::to_string(sets.size()) + " sets exceed the budget of " +
                            std::to_string(max_sets));
    const Grid grid{n, m};
    std::vector<IndependentSet> members;
    members.reserve(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) {
        const std::string where = source + ": sets[" + std::to_string(i) + "]";
        auto s = independent_set_from_json(sets[i], grid, where);
        if (s.r() != r)
            throw InputError(where + ": has " + std::to_string(s.r()) + " cells, expected r=" + std::to_string(r));
        members.push_back(std::move(s));
    }
    return Family(grid, r, std::move(members));
}

inline Family parse_family(const std::string &text, const std::string &source = "family",
                           std::size_t max_sets = default_set_budget) {
    return family_from_json(detail::parse_json(text, source), source, max_sets);
}

// ---------------------------------------------------------------------------
// Orders and reports

inline json order_to_json(const CyclicOrderPair &o) { return json{{"sigma1", o.sigma1()}, {"sigma2", o.sigma2()}}; }

inline CyclicOrderPair order_from_json(const json &doc, const std::string &source = "order") {
    const json &s1 = detail::field(doc, "sigma1", source);
    const json &s2 = detail::field(doc, "sigma2", source);
    auto ints = [&](const json &arr, const std::string &name) {
        if (!arr.is_array())
            throw InputError(source + ": " + name + " must be an array");
        std::vector<int> out;
        for (std::size_t i = 0; i < arr.size(); ++i)
            out.push_back(detail::as_int(arr[i], source + ": " + name + "[" + std::to_string(i) + "]"));
        return out;
    };
    return canonicalize(ints(s1, "sigma1"), ints(s2, "sigma2"));
}

/// Stable JSON for an EkrReport. Elapsed time is deliberately omitted.
inline json report_to_json(const EkrReport &rep) {
    json out;
    out["subject"] = rep.subject;
    if (rep.subject == "rook") {
        out["n"] = rep.n;
        out["m"] = rep.m;
    } else {
        out["vertices"] = rep.vertices;
    }
    out["r"] = rep.r;
    if (rep.mu)
        out["mu"] = *rep.mu;
    out["in_theorem_range"] = rep.in_theorem_range;
    out["independent_sets"] = rep.family_count.value();
    out["max_intersecting"] = rep.max_intersecting.value();
    out["best_star"] = rep.best_star.value();
    if (rep.star_vertex && rep.subject != "rook")
        out["star_vertex"] = *rep.star_vertex;
    out["verdict"] = to_string(rep.verdict);
    if (const auto *f = std::get_if<Family>(&rep.witness))
        out["witness"] = sets_to_json(f->members());
    else
        out["witness"] = vertex_sets_to_json(std::get<std::vector<VertexSet>>(rep.witness));
    return out;
}

} // namespace ekr
