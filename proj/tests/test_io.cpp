#include <gtest/gtest.h>

#include "ekr/io.hpp"

using namespace ekr;

namespace {

std::string error_of(auto &&f) {
    try {
        f();
    } catch (const InputError &e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST(GraphJson, RoundTrip) {
    auto g = cartesian_product(complete_graph(3), complete_graph(2));
    auto back = parse_graph(graph_to_json(g).dump());
    EXPECT_EQ(back.vertex_count(), g.vertex_count());
    EXPECT_EQ(back.edges(), g.edges());
}

TEST(GraphJson, AcceptsUnorderedEdges) {
    auto g = parse_graph(R"({"vertices": 3, "edges": [[2, 1], [3, 2]]})");
    EXPECT_TRUE(g.adjacent(1, 2));
    EXPECT_EQ(g.edge_count(), 2u);
}

TEST(GraphJson, Diagnostics) {
    auto syntax = error_of([] { parse_graph("{\"vertices\": 3,\n \"edges\": [[1, 2],, ]}", "g.json"); });
    EXPECT_NE(syntax.find("g.json:2:"), std::string::npos) << syntax;

    auto dup = error_of([] { parse_graph(R"({"vertices": 3, "edges": [[1, 2], [2, 1]]})", "g.json"); });
    EXPECT_NE(dup.find("duplicate"), std::string::npos) << dup;
    EXPECT_NE(dup.find("edge 1"), std::string::npos) << dup;

    auto range = error_of([] { parse_graph(R"({"vertices": 3, "edges": [[1, 4]]})", "g.json"); });
    EXPECT_NE(range.find("outside"), std::string::npos) << range;

    auto shape = error_of([] { parse_graph(R"({"vertices": 3, "edges": [[1, 2, 3]]})", "g.json"); });
    EXPECT_NE(shape.find("edges[0]"), std::string::npos) << shape;

    EXPECT_FALSE(error_of([] { parse_graph(R"({"edges": []})"); }).empty());
    EXPECT_FALSE(error_of([] { parse_graph(R"({"vertices": 2, "edges": [[1, 1]]})"); }).empty());
}

TEST(FamilyJson, RoundTripCanonicalises) {
    auto f = parse_family(R"({"n": 3, "m": 4, "r": 2,
        "sets": [[[2, 1], [1, 3]], [[1, 1], [2, 2]], [[1, 3], [2, 1]]]})");
    EXPECT_EQ(f.size(), 2u);
    EXPECT_EQ(f.members()[0].cells().front(), (RookVertex{1, 1}));
    auto again = parse_family(family_to_json(f).dump());
    EXPECT_EQ(again, f);
}

TEST(FamilyJson, IndexPreciseDiagnostics) {
    auto col = error_of([] { parse_family(R"({"n": 3, "m": 3, "r": 2, "sets": [[[1, 1], [2, 2]], [[1, 2], [2, 7]]]})", "f.json"); });
    EXPECT_NE(col.find("sets[1][1]"), std::string::npos) << col;
    EXPECT_NE(col.find("column 7"), std::string::npos) << col;

    auto attack = error_of([] { parse_family(R"({"n": 3, "m": 3, "r": 2, "sets": [[[1, 1], [1, 2]]]})", "f.json"); });
    EXPECT_NE(attack.find("sets[0]"), std::string::npos) << attack;
    EXPECT_NE(attack.find("share a row"), std::string::npos) << attack;

    auto size = error_of([] { parse_family(R"({"n": 3, "m": 3, "r": 2, "sets": [[[1, 1]]]})", "f.json"); });
    EXPECT_NE(size.find("expected r=2"), std::string::npos) << size;

    EXPECT_THROW(parse_family(R"({"n": 3, "m": 3, "r": 1, "sets": [[[1,1]], [[2,2]]]})", "f", 1), ResourceError);
}

TEST(OrderJson, CanonicalForm) {
    auto o = order_from_json(json::parse(R"({"sigma1": [2, 1, 3], "sigma2": [3, 1, 2, 4]})"));
    EXPECT_EQ(o.sigma1(), (std::vector<int>{1, 3, 2}));
    EXPECT_EQ(order_to_json(o).dump(), R"({"sigma1":[1,3,2],"sigma2":[1,2,4,3]})");
    EXPECT_THROW(order_from_json(json::parse(R"({"sigma1": [1, 1], "sigma2": [1]})")), InputError);
}

TEST(ReportJson, OmitsTiming) {
    auto rep = rook_ekr_verdict(3, 3, 1);
    auto doc = report_to_json(rep);
    EXPECT_EQ(doc["verdict"], "EKR_HOLDS");
    EXPECT_EQ(doc["max_intersecting"], 1);
    EXPECT_FALSE(doc.contains("elapsed_ms"));
    EXPECT_EQ(doc["witness"], json::parse("[[[1,1]]]"));
}
