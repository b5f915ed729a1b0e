#include <doctest.h>

#include "oracles.hpp"
#include "ramsey/counting.hpp"

using namespace ramsey;

namespace {

oracle::Sub as_sub(const Graph& G, const Copy& c) {
    oracle::Sub s;
    s.vertices = c.vertex_set();
    for (auto id : c.edges) s.edges.push_back(G.edge(id));
    return s;
}

oracle::Sub as_sub(const SubgraphRef& r) { return {r.vertices, r.edges}; }

Graph random_host(Rng& rng, int max_n) {
    int n = 3 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n - 2)));
    return gnp_sample(n, 0.3 + 0.5 * rng.uniform01(), Seed{rng(), 0});
}

}  // namespace

TEST_CASE("copy counts in complete graphs") {
    CHECK(count_copies(named::complete(3), named::complete(4)) == 4);
    CHECK(count_copies(named::cycle(4), named::complete(4)) == 3);
    Graph g = gnp_sample(9, 0.5, Seed{1, 0});
    CHECK(count_copies(named::complete(2), g) == g.size());
    CHECK_THROWS_AS(enumerate_copies(named::complete(5), named::complete(4)), std::invalid_argument);
}

TEST_CASE("copies have distinct edge sets and lie in the host") {
    Rng rng(Seed{2, 0});
    for (int t = 0; t < 40; ++t) {
        Graph G = random_host(rng, 9);
        for (Graph F : {named::complete(3), named::cycle(4), named::path(3)}) {
            if (F.order() > G.order()) continue;
            auto fam = enumerate_copies(F, G);
            std::set<std::vector<EdgeId>> seen;
            for (const auto& c : fam.copies) {
                CHECK(seen.insert(c.edges).second);
                for (const auto& e : F.edges()) CHECK(G.adjacent(c.map[e.u], c.map[e.v]));
            }
        }
    }
}

TEST_CASE("anchored copies contain the anchor") {
    Graph G = named::complete(6);
    auto all = enumerate_copies(named::complete(3), G);
    auto through = enumerate_copies(named::complete(3), G, Anchor::edge(1, 4));
    CHECK(through.copies.size() == 4);
    std::size_t expect = 0;
    for (const auto& c : all.copies) {
        auto vs = c.vertex_set();
        expect += std::count(vs.begin(), vs.end(), 1) && std::count(vs.begin(), vs.end(), 4);
    }
    CHECK(through.copies.size() == expect);
    auto pair = enumerate_copies(named::cycle(4), G, Anchor::vertices(0, 1));
    for (const auto& c : pair.copies) {
        auto vs = c.vertex_set();
        CHECK(std::binary_search(vs.begin(), vs.end(), 0));
        CHECK(std::binary_search(vs.begin(), vs.end(), 1));
    }
}

TEST_CASE("copy enumeration matches permutation oracle") {
    Rng rng(Seed{3, 0});
    for (int t = 0; t < 40; ++t) {
        Graph G = random_host(rng, 8);
        for (Graph F : {named::complete(3), named::cycle(4), named::path(4), named::star(3)}) {
            if (F.order() > G.order()) continue;
            std::set<oracle::Sub> mine;
            for (const auto& c : enumerate_copies(F, G).copies) mine.insert(as_sub(G, c));
            CHECK(mine == oracle::copies(F, G));
        }
    }
}

TEST_CASE("F-minus counts") {
    Graph K3 = named::complete(3);
    Graph P3 = named::path(3);
    CHECK(count_f_minus(K3, P3) == 1);
    CHECK(count_f_minus(K3, named::complete(4)) == 12);
    CHECK(count_f_minus_through(K3, P3, P3.edge(0)) == 1);
    CHECK(count_f_minus_through(K3, P3, P3.edge(1)) == 1);
    CHECK_THROWS_AS(count_f_minus_through(K3, P3, Edge{0, 2}), std::invalid_argument);
}

TEST_CASE("F-minus counts match oracle and the edge-sum identity") {
    Rng rng(Seed{4, 0});
    for (int t = 0; t < 30; ++t) {
        Graph Z = random_host(rng, 8);
        for (Graph F : {named::complete(3), named::cycle(4), named::complete_minus_edge(4)}) {
            if (F.order() > Z.order()) continue;
            const auto total = count_f_minus(F, Z);
            CHECK(total == oracle::f_minus(F, Z).size());
            std::size_t sum = 0;
            for (const auto& e : Z.edges()) sum += count_f_minus_through(F, Z, e);
            CHECK(sum == (F.size() - 1) * total);
        }
    }
}

TEST_CASE("P enumeration examples") {
    Graph K3 = named::complete(3);
    CHECK(enumerate_P(K3, Graph(5), Edge{0, 1}, Edge{2, 3}).empty());
    Graph two(4, {{0, 1}, {2, 3}});
    CHECK(enumerate_P(named::cycle(4), two, Edge{0, 2}, Edge{1, 3}).empty());
    CHECK_THROWS_AS(enumerate_P(K3, two, Edge{0, 1}, Edge{0, 1}), std::invalid_argument);
}

TEST_CASE("P enumeration matches pairwise oracle") {
    Rng rng(Seed{5, 0});
    for (int t = 0; t < 50; ++t) {
        Graph F = t % 2 ? named::complete(3) : named::cycle(4);
        Graph Z = gnp_sample(8, 0.5, Seed{rng(), 0});
        Edge e1 = oracle::E(static_cast<int>(rng.below(8)), 0), e2{};
        do {
            int a = static_cast<int>(rng.below(8)), b = static_cast<int>(rng.below(8));
            if (a == b) continue;
            e1 = oracle::E(a, b);
            int c = static_cast<int>(rng.below(8)), d = static_cast<int>(rng.below(8));
            if (c == d) continue;
            e2 = oracle::E(c, d);
        } while (e1 == e2 || e1.u == e1.v || e2.u == e2.v);
        auto mine = enumerate_P(F, Z, e1, e2);
        std::vector<oracle::PEntry> got;
        for (const auto& p : mine) got.push_back({as_sub(p.first), as_sub(p.second), p.s});
        std::sort(got.begin(), got.end());
        CHECK(got == oracle::P(F, Z, e1, e2));
        auto by_s = count_P_by_s(F, Z, e1, e2);
        std::size_t total = 0;
        for (auto c : by_s) total += c;
        CHECK(total == mine.size());
        PCounter pc(F, Z);
        CHECK(pc.count(e1, e2) == mine.size());
    }
}

TEST_CASE("extension counts") {
    Graph H(3, {{0, 2}, {1, 2}});
    CHECK(extension_count({0, 1}, H, {0, 1}, named::complete(5)) == 3);
    CHECK(extension_count({0, 1}, H, {0, 1}, Graph(5)) == 0);
    CHECK_THROWS_AS(extension_count({0, 1, 2}, H, {0, 1, 2}, named::complete(5)), std::invalid_argument);
    CHECK_THROWS_AS(extension_count({0, 1}, H, {3, 3}, named::complete(5)), std::invalid_argument);
    Rng rng(Seed{6, 0});
    for (int t = 0; t < 40; ++t) {
        Graph G = random_host(rng, 9);
        Graph Hc = named::cycle(4);
        std::vector<int> hr{static_cast<int>(rng.below(G.order())), 0};
        hr[1] = (hr[0] + 1 + static_cast<int>(rng.below(G.order() - 1))) % G.order();
        CHECK(extension_count({0, 2}, Hc, hr, G) == oracle::extensions({0, 2}, Hc, hr, G));
        CHECK(extension_count({0, 1}, Hc, hr, G) == oracle::extensions({0, 1}, Hc, hr, G));
    }
}

TEST_CASE("base graphs") {
    auto k3 = classify(named::complete(3));
    Graph p3(3, {{0, 1}, {1, 2}});
    Graph b = base_graph(k3, p3);
    CHECK(b.size() == 1);
    CHECK(b.adjacent(0, 2));
    CHECK(base_graph(k3, Graph(4)).size() == 0);
    auto c4 = classify(named::cycle(4));
    Graph b4 = base_graph(c4, named::path(4));
    CHECK(b4.size() == 1);
    CHECK(b4.adjacent(0, 3));
    CHECK_THROWS(base_graph(classify(named::complete(4)), p3));
    Rng rng(Seed{7, 0});
    for (int t = 0; t < 30; ++t) {
        Graph Gp = random_host(rng, 8);
        for (const auto& prof : {k3, c4, classify(named::cycle(5))}) {
            Graph b = base_graph(prof, Gp);
            std::set<Edge> mine(b.edges().begin(), b.edges().end());
            CHECK(mine == oracle::base_pairs(prof.pattern, *prof.nearly_bipartite_witness, Gp));
        }
    }
}

TEST_CASE("property T checks") {
    auto k3 = classify(named::complete(3));
    Graph k6 = named::complete(6);
    auto t = check_T(k3, k6, k6, Rational(1), Rational(1, 1000));
    CHECK(t.copies_in_base == 20);
    CHECK(t.pass);
    Graph sparse(6, {{0, 1}});
    auto floor = check_T(k3, k6, sparse, Rational(1, 2), Rational(1, 1000));
    CHECK(floor.below_density_floor);
    CHECK(floor.pass);
    auto s = adversarial_T_search(k3, k6, Rational(9, 10), Rational(1, 1000), 100000, Seed{1, 0});
    CHECK(s.exhaustive);
    CHECK(s.check.copies_in_base >= 1);
    CHECK_THROWS_AS(check_T(k3, named::path(6), k6, Rational(1), Rational(1)), std::invalid_argument);
}

TEST_CASE("dense checks") {
    auto full = rho_d_dense_check(named::complete(7), Rational(1, 3), Rational(1), SearchMode::Exact, Seed{});
    CHECK(full.dense);
    auto empty = rho_d_dense_check(Graph(6), Rational(1, 2), Rational(1, 10), SearchMode::Exact, Seed{});
    CHECK_FALSE(empty.dense);
    CHECK(empty.worst.size() >= 3);
    auto c6 = rho_d_dense_check(named::cycle(6), Rational(1, 2), Rational(9, 10), SearchMode::Exact, Seed{});
    CHECK_FALSE(c6.dense);
    CHECK(c6.worst_density < Rational(9, 10));
    auto heur = rho_d_dense_check(named::cycle(6), Rational(1, 2), Rational(9, 10), SearchMode::Heuristic, Seed{3, 0}, 500);
    CHECK_FALSE(heur.dense);
    CHECK_THROWS_AS(rho_d_dense_check(Graph(kDenseExactCap + 1), Rational(1, 2), Rational(1, 2), SearchMode::Exact, Seed{}),
                    std::invalid_argument);
}
