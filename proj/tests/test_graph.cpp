#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/graph_io.hpp"
#include "ramsey/random.hpp"

using namespace ramsey;

TEST_CASE("edge ids follow lexicographic order") {
    Graph g(5, {{3, 1}, {0, 4}, {2, 0}, {1, 2}});
    REQUIRE(g.size() == 4);
    for (EdgeId i = 1; i < g.size(); ++i) CHECK(g.edge(i - 1) < g.edge(i));
    CHECK(g.edge(0) == Edge{0, 2});
    CHECK(*g.edge_id(1, 3) == 3);
    CHECK_FALSE(g.edge_id(0, 1).has_value());
}

TEST_CASE("graph construction rejects bad input") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("adjacency is symmetric with zero diagonal") {
    for (std::uint64_t s = 0; s < 30; ++s) {
        Graph g = gnp_sample(11, 0.4, Seed{s, 7});
        std::size_t upper = 0;
        for (int u = 0; u < g.order(); ++u) {
            CHECK_FALSE(g.adjacent(u, u));
            for (int v = 0; v < g.order(); ++v) {
                CHECK(g.adjacent(u, v) == g.adjacent(v, u));
                if (u < v) upper += g.adjacent(u, v);
            }
        }
        CHECK(upper == g.size());
    }
}

TEST_CASE("gnp extremes and determinism") {
    CHECK(gnp_sample(5, 0.0, Seed{3, 0}).size() == 0);
    CHECK(gnp_sample(5, 1.0, Seed{3, 0}).size() == 10);
    CHECK(gnp_sample(30, 0.3, Seed{9, 2}) == gnp_sample(30, 0.3, Seed{9, 2}));
    CHECK_FALSE(gnp_sample(30, 0.3, Seed{9, 2}) == gnp_sample(30, 0.3, Seed{9, 3}));
    CHECK_THROWS_AS(gnp_sample(5, 1.5, Seed{}), std::invalid_argument);
    CHECK_THROWS_AS(gnp_sample(0, 0.5, Seed{}), std::invalid_argument);
}

TEST_CASE("gnp mean edge count at n=100, p=1/2") {
    const int trials = 10000;
    double sum = 0;
    Seed base{2024, 0};
    for (int i = 0; i < trials; ++i) sum += static_cast<double>(gnp_sample(100, 0.5, base.child(i)).size());
    const double mean = sum / trials;
    const double sd_of_mean = std::sqrt(4950 * 0.25 / trials);
    CHECK(std::abs(mean - 2475) < 3 * sd_of_mean);
}

TEST_CASE("union is a set union") {
    Graph a(3, {{0, 1}}), b(3, {{1, 2}}), e(3);
    CHECK(graph_union(a, e) == a);
    CHECK(graph_union(a, a).size() == 1);
    Graph p = graph_union(a, b);
    CHECK(p == named::path(3));
    Graph c(3, {{0, 2}});
    CHECK(graph_union(a, b) == graph_union(b, a));
    CHECK(graph_union(graph_union(a, b), c) == graph_union(a, graph_union(b, c)));
    CHECK_THROWS_AS(graph_union(a, Graph(4)), std::invalid_argument);
}

TEST_CASE("edge counts between vertex sets") {
    Graph k4 = named::complete(4);
    std::vector<int> all{0, 1, 2, 3}, u{0, 1}, w{2, 3};
    CHECK(edge_count_between(k4, all) == 6);
    CHECK(edge_count_between(k4, u, w) == 4);
    Graph c5 = named::cycle(5);
    std::vector<int> u2{0, 2}, w2{1};
    CHECK(edge_count_between(c5, u2, w2) == 2);
    std::vector<int> overlap{1, 2};
    CHECK_THROWS_AS(edge_count_between(c5, u2, overlap), std::invalid_argument);
    std::vector<int> bad{0, 9};
    CHECK_THROWS_AS(edge_count_between(c5, bad), std::invalid_argument);
}

TEST_CASE("edge counts match double loops") {
    Rng rng(Seed{5, 5});
    for (int t = 0; t < 200; ++t) {
        int n = 1 + static_cast<int>(rng.below(12));
        Graph g = gnp_sample(n, rng.uniform01(), Seed{static_cast<std::uint64_t>(t), 1});
        std::vector<int> U, W;
        for (int v = 0; v < n; ++v) {
            auto r = rng.below(3);
            if (r == 0) U.push_back(v);
            if (r == 1) W.push_back(v);
        }
        std::size_t inside = 0, across = 0;
        for (std::size_t i = 0; i < U.size(); ++i)
            for (std::size_t j = i + 1; j < U.size(); ++j) inside += g.adjacent(U[i], U[j]);
        for (int x : U)
            for (int y : W) across += g.adjacent(x, y);
        CHECK(edge_count_between(g, U) == inside);
        CHECK(edge_count_between(g, U, W) == across);
    }
}

TEST_CASE("edge list and graph6 parsing") {
    CHECK(parse_edge_list("3\n0 1\n1 2") == named::path(3));
    CHECK(parse_graph6("Bw") == named::complete(3));
    CHECK(to_graph6(named::complete(3)) == "Bw");
    const std::string canon = "4\n0 1\n0 3\n2 3\n";
    CHECK(to_edge_list(parse_edge_list(canon)) == canon);
    CHECK(parse_graph("Bw") == named::complete(3));
    CHECK(parse_graph(canon) == parse_edge_list(canon));
}

TEST_CASE("parse errors carry byte offsets") {
    try {
        parse_edge_list("3\n0 1\n1 x");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 8);
    }
    CHECK_THROWS_AS(parse_graph6("B"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2\n0 5"), std::invalid_argument);
}

TEST_CASE("serialisation round trips") {
    for (std::uint64_t s = 0; s < 50; ++s) {
        Graph g = gnp_sample(1 + static_cast<int>(s % 40), 0.3, Seed{s, 4});
        CHECK(parse_graph6(to_graph6(g)) == g);
        CHECK(parse_edge_list(to_edge_list(g)) == g);
        CHECK(parse_graph(serialize_graph(g, GraphFormat::Graph6)) == g);
    }
}

TEST_CASE("named graphs") {
    CHECK(parse_named_graph("K5").size() == 10);
    CHECK(parse_named_graph("C7").size() == 7);
    CHECK(parse_named_graph("P4").size() == 3);
    CHECK(parse_named_graph("K4-e").size() == 5);
    CHECK(parse_named_graph("K2,3").size() == 6);
    CHECK_THROWS_AS(parse_named_graph("Q3"), std::invalid_argument);
}

TEST_CASE("rng draws are reproducible and in range") {
    Rng a(Seed{1, 2}), b(Seed{1, 2});
    for (int i = 0; i < 1000; ++i) {
        auto x = a.below(7);
        CHECK(x == b.below(7));
        CHECK(x < 7);
        double u = a.uniform01();
        CHECK(u == b.uniform01());
        CHECK((u >= 0 && u < 1));
    }
    CHECK_FALSE(Seed{1, 2}.child(0) == Seed{1, 2}.child(1));
}
