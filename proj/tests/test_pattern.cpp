#include <doctest.h>

#include "oracles.hpp"
#include "ramsey/pattern.hpp"

using namespace ramsey;

namespace {

Rational naive_d2(std::size_t e, std::size_t v) { return v == 2 ? Rational(1) : rat(long(e) - 1, long(v) - 2); }

// Every edge subset, with the touched vertices as its vertex set.
struct Naive {
    Rational m2;
    bool strictly = true;
};

Naive naive_profile(const Graph& F) {
    const auto m = F.size();
    Naive r;
    r.m2 = 0;
    std::vector<std::pair<Rational, bool>> seen;  // (d2, proper)
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        std::set<int> vs;
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1) {
                vs.insert(F.edge(i).u);
                vs.insert(F.edge(i).v);
            }
        Rational d = naive_d2(std::popcount(mask), vs.size());
        bool proper = mask != (1u << m) - 1 || static_cast<int>(vs.size()) != F.order();
        seen.push_back({d, proper});
        if (d > r.m2) r.m2 = d;
    }
    for (auto [d, proper] : seen)
        if (proper && d >= r.m2) r.strictly = false;
    return r;
}

bool naive_bipartite(const Graph& g) {
    for (std::uint32_t c = 0; c < (1u << g.order()); ++c) {
        bool ok = true;
        for (const auto& e : g.edges()) ok = ok && ((c >> e.u & 1) != (c >> e.v & 1));
        if (ok) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("d2 values") {
    CHECK(d2(named::complete(2)) == 1);
    CHECK(d2(named::complete(3)) == 2);
    CHECK(d2(named::cycle(5)) == Rational(4, 3));
    CHECK_THROWS_AS(d2(Graph(3)), std::invalid_argument);
}

TEST_CASE("m2 of cycles and small cliques") {
    CHECK(m2(named::complete(2)).value == 1);
    CHECK(m2(named::complete(3)).value == 2);
    for (int k = 3; k <= 8; ++k) CHECK(m2(named::cycle(k)).value == Rational(k - 1, k - 2));
    CHECK(m2(named::complete(4)).value == Rational(5, 2));
    CHECK_THROWS_AS(m2(Graph(4)), std::invalid_argument);
}

TEST_CASE("m2 witness ties go to the smallest vertex set") {
    // Two disjoint triangles: both attain 2.
    Graph g(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    auto w = m2(g);
    CHECK(w.value == 2);
    CHECK(w.vertices == std::vector<int>{0, 1, 2});
}

TEST_CASE("classification examples") {
    auto c5 = classify(named::cycle(5));
    CHECK(c5.strictly_balanced);
    CHECK(c5.nearly_bipartite());
    CHECK(c5.threshold_exponent == Rational(3, 4));
    CHECK_FALSE(classify(named::complete(4)).nearly_bipartite());
    CHECK_FALSE(classify(named::complete(2)).nearly_bipartite());
    auto k3 = classify(named::complete(3));
    CHECK(*k3.nearly_bipartite_witness == Edge{0, 1});
    CHECK(k3.bipartite_part().size() == 2);
    CHECK_THROWS(classify(named::complete(4)).bipartite_part());
}

TEST_CASE("classification matches exhaustive subgraph scan") {
    Rng rng(Seed{77, 0});
    int checked = 0;
    while (checked < 150) {
        int v = 2 + static_cast<int>(rng.below(6));
        Graph F = gnp_sample(v, 0.3 + 0.6 * rng.uniform01(), Seed{rng(), 0});
        if (F.empty() || F.size() > 14) continue;
        ++checked;
        auto prof = classify(F);
        auto nv = naive_profile(F);
        CHECK(prof.m2.value == nv.m2);
        CHECK(prof.strictly_balanced == nv.strictly);
        CHECK(prof.balanced == (d2(F) == nv.m2));
        CHECK(prof.threshold_exponent == 1 / nv.m2);
        std::optional<Edge> first;
        if (F.size() >= 2)
            for (EdgeId i = 0; i < F.size() && !first; ++i)
                if (naive_bipartite(F.without_edge(i))) first = F.edge(i);
        CHECK(prof.nearly_bipartite_witness == first);
        if (prof.strictly_balanced && prof.nearly_bipartite()) CHECK(prof.m2.value > 1);
    }
}

TEST_CASE("m2 is monotone under subgraphs") {
    Rng rng(Seed{78, 0});
    for (int t = 0; t < 60; ++t) {
        Graph F = gnp_sample(6, 0.6, Seed{rng(), 0});
        if (F.size() < 2) continue;
        Graph Fp = F.without_edge(static_cast<EdgeId>(rng.below(F.size())));
        CHECK(m2(Fp).value <= m2(F).value);
    }
}

TEST_CASE("pattern size cap") {
    CHECK_THROWS_AS(m2(named::complete(kPatternVertexCap + 1)), std::invalid_argument);
}

TEST_CASE("edge density and booster admissibility") {
    CHECK(edge_density(named::complete(4)) == Rational(3, 2));
    CHECK(booster_admissible(named::cycle(5), named::complete(3)));
    CHECK_FALSE(booster_admissible(named::complete(6), named::complete(3)));
}

TEST_CASE("rooted densities") {
    Graph c4 = named::cycle(4);
    CHECK(rooted_density({0, 2}, c4) == 2);
    CHECK(rooted_density({0, 1}, c4) == Rational(3, 2));
    Graph p3(3, {{0, 2}, {1, 2}});  // K3 minus {0,1}
    CHECK(rooted_density({0, 1}, p3) == 2);
    CHECK(mad({0, 1}, p3).value == 2);
    CHECK_THROWS_AS(rooted_density({0, 1, 2}, p3), std::invalid_argument);
}

TEST_CASE("mad below m2 for strictly balanced patterns") {
    // Root an edge {x1,x2} that stays in F minus another edge f.
    for (int k = 3; k <= 8; ++k) {
        Graph F = named::cycle(k);
        auto prof = classify(F);
        REQUIRE(prof.strictly_balanced);
        for (EdgeId f = 0; f < F.size(); ++f) {
            Graph Fm = F.without_edge(f);
            for (const auto& x : Fm.edges()) CHECK(mad({x.u, x.v}, Fm).value < prof.m2.value);
        }
    }
}
