#include <doctest.h>

#include "oracles.hpp"
#include "ramsey/regularity.hpp"

using namespace ramsey;

namespace {

// Complete bipartite graph between 0..a-1 and a..a+b-1.
Graph biclique(int a, int b) {
    std::vector<Edge> es;
    for (int x = 0; x < a; ++x)
        for (int y = a; y < a + b; ++y) es.push_back({x, y});
    return Graph(a + b, es);
}

VertexSet range(int lo, int hi) {
    VertexSet v;
    for (int i = lo; i < hi; ++i) v.push_back(i);
    return v;
}

// Every qualifying sub-pair, with no pruning.
bool naive_regular(const Graph& H, const Rational& p, const VertexSet& X, const VertexSet& Y, const Rational& eps) {
    auto dens = [&](const VertexSet& a, const VertexSet& b) {
        long e = 0;
        for (int x : a)
            for (int y : b) e += H.adjacent(x, y);
        Rational d(e);
        d /= p * static_cast<long>(a.size()) * static_cast<long>(b.size());
        return d;
    };
    const Rational base = dens(X, Y);
    auto subsets = [&](const VertexSet& S) {
        std::vector<VertexSet> out;
        for (std::uint32_t m = 1; m < (1u << S.size()); ++m) {
            VertexSet s;
            for (std::size_t i = 0; i < S.size(); ++i)
                if (m >> i & 1) s.push_back(S[i]);
            if (Rational(static_cast<long>(s.size())) >= eps * static_cast<long>(S.size())) out.push_back(s);
        }
        return out;
    };
    for (const auto& a : subsets(X))
        for (const auto& b : subsets(Y))
            if (abs(dens(a, b) - base) >= eps) return false;
    return true;
}

}  // namespace

TEST_CASE("pair densities") {
    Graph k = biclique(3, 4);
    CHECK(pair_density(k, Rational(1), range(0, 3), range(3, 7)) == 1);
    CHECK(pair_density(Graph(7), Rational(1), range(0, 3), range(3, 7)) == 0);
    CHECK(pair_density(named::complete(4), Rational(1, 2), {0, 1}, {2, 3}) == 2);
    // d p does not depend on p.
    Graph g = gnp_sample(10, 0.5, Seed{1, 0});
    CHECK(pair_density(g, Rational(1, 3), range(0, 5), range(5, 10)) / 3 ==
          pair_density(g, Rational(1), range(0, 5), range(5, 10)));
    CHECK_THROWS_AS(pair_density(k, Rational(1), {}, {3}), std::invalid_argument);
    CHECK_THROWS_AS(pair_density(k, Rational(1), {0, 1}, {1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(pair_density(k, Rational(0), {0}, {3}), std::invalid_argument);
}

TEST_CASE("regularity examples") {
    Graph k = biclique(5, 5);
    auto full = is_eps_p_regular(k, Rational(1), range(0, 5), range(5, 10), Rational(1, 10), RegularityMode::Exact, Seed{});
    CHECK(full.regular);
    CHECK(full.certified);
    auto empty = is_eps_p_regular(Graph(10), Rational(1, 2), range(0, 5), range(5, 10), Rational(1, 10),
                                  RegularityMode::Exact, Seed{});
    CHECK(empty.regular);
    // Half of X fully joined to half of Y, nothing else.
    std::vector<Edge> es;
    for (int x = 0; x < 4; ++x)
        for (int y = 8; y < 12; ++y) es.push_back({x, y});
    Graph half(16, es);
    auto irr = is_eps_p_regular(half, Rational(1), range(0, 8), range(8, 16), Rational(3, 10), RegularityMode::Exact, Seed{});
    CHECK_FALSE(irr.regular);
    REQUIRE(irr.worst);
    CHECK(irr.worst->deviation >= Rational(3, 10));
    auto sampled = is_eps_p_regular(half, Rational(1), range(0, 8), range(8, 16), Rational(3, 10), RegularityMode::Sampled,
                                    Seed{2, 0}, 5000);
    CHECK_FALSE(sampled.regular);
    CHECK_FALSE(sampled.certified);
    CHECK_THROWS_AS(is_eps_p_regular(Graph(40), Rational(1), range(0, 17), range(17, 34), Rational(1, 2),
                                     RegularityMode::Exact, Seed{}),
                    std::invalid_argument);
}

TEST_CASE("exact regularity matches the unpruned check and is monotone in eps") {
    Rng rng(Seed{51, 0});
    for (int t = 0; t < 60; ++t) {
        int a = 2 + static_cast<int>(rng.below(4)), b = 2 + static_cast<int>(rng.below(4));
        Graph H = gnp_sample(a + b, 0.3 + 0.4 * rng.uniform01(), Seed{rng(), 0});
        Rational p(1, 2);
        Rational eps(1 + static_cast<long>(rng.below(9)), 10);
        eps.canonicalize();
        auto X = range(0, a), Y = range(a, a + b);
        auto r = is_eps_p_regular(H, p, X, Y, eps, RegularityMode::Exact, Seed{});
        CHECK(r.regular == naive_regular(H, p, X, Y, eps));
        if (r.regular) {
            auto wider = is_eps_p_regular(H, p, X, Y, eps + Rational(1, 10), RegularityMode::Exact, Seed{});
            CHECK(wider.regular);
        }
    }
}

TEST_CASE("reduced graphs") {
    Partition parts{range(0, 3), range(3, 6), range(6, 9)};
    std::vector<Edge> all;
    for (int x = 0; x < 9; ++x)
        for (int y = x + 1; y < 9; ++y)
            if (x / 3 != y / 3) all.push_back({x, y});
    auto R = reduced_graph(Graph(9, all), Rational(1), parts, Rational(1, 2), Rational(1, 4), RegularityMode::Exact, Seed{});
    CHECK(R.graph.size() == 3);
    auto E = reduced_graph(Graph(9), Rational(1), parts, Rational(1, 2), Rational(1, 4), RegularityMode::Exact, Seed{});
    CHECK(E.graph.size() == 0);
    // One complete pair, one sparse irregular pair.
    std::vector<Edge> es;
    for (int x = 0; x < 3; ++x)
        for (int y = 3; y < 6; ++y) es.push_back({x, y});
    es.push_back({6, 0});
    auto one = reduced_graph(Graph(9, es), Rational(1), parts, Rational(1, 2), Rational(1, 4), RegularityMode::Exact, Seed{});
    CHECK(one.graph.edges() == std::vector<Edge>{{0, 1}});
    for (const auto& e : one.graph.edges())
        CHECK(pair_density(Graph(9, es), Rational(1), parts[e.u], parts[e.v]) >= Rational(1, 2));
}

TEST_CASE("counting lemma check") {
    Graph edge = named::complete(2);
    auto r = counting_lemma_check(edge, {range(0, 3), range(3, 7)}, biclique(3, 4), Rational(1), Rational(1));
    CHECK(r.partite_copies == 12);
    CHECK(r.ratio >= 1);
    CHECK(r.meets_bound);
    const int s = 3;
    Partition cls{range(0, s), range(s, 2 * s), range(2 * s, 3 * s), range(3 * s, 4 * s)};
    std::vector<Edge> all;
    for (int x = 0; x < 4 * s; ++x)
        for (int y = x + 1; y < 4 * s; ++y)
            if (x / s != y / s) all.push_back({x, y});
    auto c4 = counting_lemma_check(named::cycle(4), cls, Graph(4 * s, all), Rational(1), Rational(1, 2));
    CHECK(c4.partite_copies == 81);
    CHECK(c4.bound == Rational(81, 2));
    auto none = counting_lemma_check(named::cycle(4), cls, Graph(4 * s), Rational(1), Rational(1, 2));
    CHECK(none.partite_copies == 0);
    CHECK(none.ratio == 0);
    CHECK_FALSE(none.meets_bound);
    auto verified = counting_lemma_check(edge, {range(0, 3), range(3, 7)}, biclique(3, 4), Rational(1), Rational(1),
                                         PairClaim{Rational(1, 2), Rational(1, 4), Seed{1, 0}});
    REQUIRE(verified.pairs_verified);
    CHECK(*verified.pairs_verified);
    CHECK_THROWS_AS(counting_lemma_check(edge, {range(0, 3)}, biclique(3, 4), Rational(1), Rational(1)),
                    std::invalid_argument);
    // Homomorphism count against plain enumeration.
    Rng rng(Seed{52, 0});
    for (int t = 0; t < 20; ++t) {
        Graph H = gnp_sample(9, 0.5, Seed{rng(), 0});
        Partition tri{range(0, 3), range(3, 6), range(6, 9)};
        std::uint64_t naive = 0;
        for (int a : tri[0])
            for (int b : tri[1])
                for (int c : tri[2]) naive += H.adjacent(a, b) && H.adjacent(b, c) && H.adjacent(a, c);
        CHECK(counting_lemma_check(named::complete(3), tri, H, Rational(1, 2), Rational(1)).partite_copies == naive);
    }
}

TEST_CASE("overlap counts") {
    Graph p3 = named::path(3);
    CHECK(fstar_overlap_count(p3, 0, 2, p3, {0, 2}, 0.5).copies == 1);
    CHECK(fstar_overlap_count(p3, 0, 2, p3, {}, 0.5).copies == 0);
    CHECK_THROWS_AS(fstar_overlap_count(p3, 0, 1, p3, {0, 1}, 0.5), std::invalid_argument);
    Graph c4 = named::cycle(4);
    Rng rng(Seed{53, 0});
    for (int t = 0; t < 50; ++t) {
        Graph G = gnp_sample(8, 0.5, Seed{rng(), 0});
        VertexSet W;
        for (int v = 0; v < 8; ++v)
            if (rng.bernoulli(0.4)) W.push_back(v);
        const Graph& Fs = t % 2 ? c4 : p3;
        CHECK(fstar_overlap_count(Fs, 0, 2, G, W, 0.5).copies == oracle::overlap_copies(Fs, 0, 2, G, W));
    }
}
