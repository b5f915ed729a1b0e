#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "ramsey/hypergraph.hpp"

using namespace ramsey;

namespace {

std::vector<std::vector<int>> random_edges(Rng& rng, int m, int ell, int count) {
    std::set<std::vector<int>> es;
    for (int t = 0; t < count; ++t) {
        std::vector<int> vs(m);
        for (int i = 0; i < m; ++i) vs[i] = i;
        shuffle(vs, rng);
        vs.resize(ell);
        std::sort(vs.begin(), vs.end());
        es.insert(vs);
    }
    return {es.begin(), es.end()};
}

bool close(long double a, long double b) { return std::fabs(a - b) <= 1e-12L * std::max(1.0L, std::fabs(b)); }

}  // namespace

TEST_CASE("hypergraph construction") {
    auto H = make_hypergraph(4, {{2, 0}, {0, 2}, {1, 3}});
    CHECK(H.edges == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
    CHECK(H.merged_duplicates == 1);
    CHECK(H.rank() == 2);
    CHECK(make_hypergraph(3, {}).rank() == 0);
    CHECK_THROWS_AS(make_hypergraph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(make_hypergraph(3, {{}}), std::invalid_argument);
    CHECK_THROWS_AS(make_hypergraph(3, {{1, 1}}), std::invalid_argument);
    CHECK_FALSE(make_hypergraph(3, {{0}, {1, 2}}).uniform());
    CHECK_THROWS(make_hypergraph(3, {{0}, {1, 2}}).rank());
}

TEST_CASE("single two-edge statistics") {
    auto s = hypergraph_stats(make_hypergraph(2, {{0, 1}}), Rational(1, 2));
    CHECK(s.d == 1);
    CHECK(s.delta_j[2] == 2);
    CHECK(s.delta == 2);
    CHECK(s.Delta1 == 1);
    CHECK(s.Delta2 == 1);
    CHECK_THROWS_AS(hypergraph_stats(make_hypergraph(3, {}), Rational(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(hypergraph_stats(make_hypergraph(2, {{0, 1}}), Rational(0)), std::invalid_argument);
}

TEST_CASE("statistics match the exhaustive evaluator") {
    Rng rng(Seed{41, 0});
    for (int t = 0; t < 40; ++t) {
        int m = 3 + static_cast<int>(rng.below(6));
        int ell = 2 + static_cast<int>(rng.below(std::min(3, m - 1)));
        auto es = random_edges(rng, m, ell, 1 + static_cast<int>(rng.below(8)));
        Rational tau(1 + static_cast<long>(rng.below(9)), 10);
        tau.canonicalize();
        auto H = make_hypergraph(m, es);
        auto s = hypergraph_stats(H, tau);
        auto o = oracle::hstats(m, es, static_cast<long double>(to_double(tau)));
        CHECK(close(to_double(s.d), o.d));
        CHECK(s.Delta1 == o.Delta1);
        CHECK(s.Delta2 == o.Delta2);
        for (int j = 2; j <= ell; ++j) CHECK(close(to_double(s.delta_j[j]), o.delta_j[j]));
        CHECK(close(to_double(s.delta), o.delta));
        // d m = ell e and Delta2 <= Delta1 <= e.
        CHECK(s.d * m == Rational(static_cast<long>(ell * es.size())));
        CHECK(s.Delta2 <= s.Delta1);
        CHECK(s.Delta1 <= es.size());
    }
}

TEST_CASE("cores of tiny hypergraphs") {
    auto one = brute_force_cores(make_hypergraph(2, {{0, 1}}));
    CHECK(one.containers == std::vector<std::uint32_t>{1, 2});
    CHECK(one.cores == std::vector<std::uint32_t>{2, 1});
    auto none = brute_force_cores(make_hypergraph(3, {}));
    CHECK(none.containers == std::vector<std::uint32_t>{7});
    CHECK(none.cores == std::vector<std::uint32_t>{0});
    auto rep = verify_core_properties(make_hypergraph(3, {}), none, Rational(0), Rational(1, 2));
    CHECK(rep.minimal_hitting_sets == 1);
    CHECK(rep.uncovered_hitting_sets == 0);
    CHECK(mask_members(0b1010) == std::vector<int>{1, 3});
    CHECK_THROWS_AS(brute_force_cores(make_hypergraph(21, {})), std::invalid_argument);
}

TEST_CASE("every hitting set contains a core") {
    Rng rng(Seed{42, 0});
    for (int t = 0; t < 40; ++t) {
        int m = 2 + static_cast<int>(rng.below(9));
        int ell = 1 + static_cast<int>(rng.below(std::min(3, m)));
        auto H = make_hypergraph(m, random_edges(rng, m, ell, static_cast<int>(rng.below(7))));
        auto C = brute_force_cores(H);
        for (std::size_t i = 0; i < C.containers.size(); ++i) CHECK((C.containers[i] | C.cores[i]) == (1u << m) - 1);
        std::vector<std::uint32_t> em;
        for (const auto& e : H.edges) {
            std::uint32_t x = 0;
            for (int v : e) x |= 1u << v;
            em.push_back(x);
        }
        for (std::uint32_t A = 0; A < (1u << m); ++A) {
            bool hit = std::all_of(em.begin(), em.end(), [&](std::uint32_t e) { return (e & A) != 0; });
            if (!hit) continue;
            bool covered = std::any_of(C.cores.begin(), C.cores.end(), [&](std::uint32_t c) { return (c & A) == c; });
            CHECK(covered);
        }
        auto rep = verify_core_properties(H, C, Rational(0), Rational(1, 2));
        CHECK(rep.uncovered_hitting_sets == 0);
        CHECK(rep.max_container_edges == 0);
        CHECK(rep.size_bound_holds);
    }
}
