#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "ramsey/booster.hpp"

using namespace ramsey;

namespace {

const Graph K3 = named::complete(3);

Embedding random_embedding(int k, int n, Rng& rng) {
    std::vector<int> vs(n);
    for (int i = 0; i < n; ++i) vs[i] = i;
    shuffle(vs, rng);
    vs.resize(k);
    return vs;
}

std::vector<Edge> member_edges(const Graph& Z, const std::vector<EdgeId>& ids) {
    std::vector<Edge> out;
    for (auto id : ids) out.push_back(Z.edge(id));
    return out;
}

// Z = K5 on {0..4}, host has 6 vertices, star centred at 5.
struct Toy {
    Graph Z;
    BoosterSpec spec;
    Embedding h{5, 0, 1, 2, 3, 4};
    Toy() {
        std::vector<Edge> es;
        for (int a = 0; a < 5; ++a)
            for (int b = a + 1; b < 5; ++b) es.push_back({a, b});
        Z = Graph(6, es);
        spec = make_booster(named::star(5), K3);
    }
};

}  // namespace

TEST_CASE("first free colouring") {
    auto k5 = first_free_colouring(named::complete(5), K3);
    REQUIRE(k5);
    CHECK(is_f_free(*k5, named::complete(5), K3).free);
    CHECK_FALSE(first_free_colouring(named::complete(6), K3));
    auto star = first_free_colouring(named::star(4), K3);
    REQUIRE(star);
    CHECK(*star == EdgeColoring(4, 0));
    // Lexicographically first: a triangle-free colouring of K4 starts red, red.
    auto k4 = first_free_colouring(named::complete(4), K3);
    REQUIRE(k4);
    CHECK((*k4)[0] == 0);
    CHECK_THROWS_AS(make_booster(named::complete(6), K3), std::invalid_argument);
}

TEST_CASE("booster embedding validation") {
    Graph img = embed_booster(named::path(3), {4, 1, 2}, 5);
    CHECK(img.size() == 2);
    CHECK(img.adjacent(1, 4));
    CHECK(img.adjacent(1, 2));
    CHECK_THROWS_AS(embed_booster(named::path(3), {1, 1, 2}, 5), std::invalid_argument);
    CHECK_THROWS_AS(embed_booster(named::path(3), {1, 5, 2}, 5), std::invalid_argument);
    CHECK_THROWS_AS(embed_booster(named::path(3), {1, 2}, 5), std::invalid_argument);
}

TEST_CASE("focus set of a single triangle") {
    Graph Z(4, {{1, 2}});
    auto spec = make_booster(named::path(3), K3);
    Embedding h{1, 3, 2};  // edges {1,3}, {2,3}
    auto fs = focus_set(Z, h, spec, K3);
    CHECK(member_edges(Z, fs.members) == std::vector<Edge>{{1, 2}});
    auto flags = classify_bad(Z, h, spec, K3);
    CHECK(flags.b1);
    CHECK(flags.bad());
    Graph far(6, {{4, 5}});
    CHECK(focus_set(far, h, spec, K3).members.empty());
    CHECK_FALSE(classify_bad(far, h, spec, K3).bad());
}

TEST_CASE("focus set of K4 minus an edge") {
    Graph Z(5, {{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    auto spec = make_booster(named::complete(2), K3);
    Embedding h{1, 2};
    auto view = analyse_embedding(Z, h, spec.B, K3);
    CHECK(member_edges(Z, view.members) == std::vector<Edge>{{1, 3}, {1, 4}, {2, 3}, {2, 4}});
    CHECK(view.regular());
    CHECK(view.edge_disjoint);
    CHECK(profile_of(view) == std::vector<EdgeId>(4, 0));
    auto e13 = *Z.edge_id(1, 3), e23 = *Z.edge_id(2, 3), e34 = *Z.edge_id(3, 4);
    auto rel = pair_relations(Z, h, spec, K3, e13, e23);
    CHECK(rel.approx);
    CHECK(rel.sim);
    CHECK_FALSE(pair_relations(view, e13, e34).approx);
    CHECK_THROWS_AS(pair_relations(view, e13, e13), std::invalid_argument);
    CHECK(c_xi(Z, {}, spec, K3, e13, e23) == 0);
    CHECK(c_xi(Z, {h, h}, spec, K3, e13, e23) == 2);
    CHECK_FALSE(classify_bad(view).bad());
    auto H = booster_hypergraph(Z, {h}, spec, K3);
    CHECK(H.m == 5);
    REQUIRE(H.edges.size() == 1);
    CHECK(H.edges[0].size() == 4);
}

TEST_CASE("bad flags and focus sets match the copy oracle") {
    auto spec = make_booster(named::cycle(5), K3);
    for (std::uint64_t s = 0; s < 100; ++s) {
        Graph Z = gnp_sample(10, 0.4, Seed{s, 21});
        Rng rng(Seed{s, 22});
        Embedding h = random_embedding(5, 10, rng);
        auto view = analyse_embedding(Z, h, spec.B, K3);
        auto ms = oracle::mixed_copies(Z, h, spec.B, K3);
        auto want = oracle::bad(ms);
        auto got = classify_bad(view);
        CHECK(got.b1 == want.b1);
        CHECK(got.b2 == want.b2);
        CHECK(got.b3 == want.b3);
        auto foc = oracle::focus(ms);
        std::vector<Edge> keys;
        for (const auto& [z, bs] : foc)
            if (!bs.empty()) keys.push_back(z);
        CHECK(member_edges(Z, view.members) == keys);
        for (std::size_t i = 0; i < view.members.size(); ++i) {
            const auto& t = view.targets[i];
            std::set<std::size_t> ts(t.begin(), t.end());
            CHECK(ts == foc[Z.edge(view.members[i])]);
        }
        // Without B1 and B2, every edge focuses on at most one booster edge, and
        // copies never share Z edges, so |M_h| is a multiple of e(F) - 1.
        if (!got.b1 && !got.b2) {
            CHECK(view.regular());
            if (!got.b3) CHECK(view.members.size() % (K3.size() - 1) == 0);
        }
        for (std::size_t i = 0; i + 1 < view.members.size(); ++i) {
            auto r = pair_relations(view, view.members[i], view.members[i + 1]);
            CHECK(r.approx);
            if (r.sim) CHECK(r.approx);
        }
    }
}

TEST_CASE("interactive pair from K5 and a star") {
    Toy t;
    auto rep = check_interactive_regular(t.Z, {t.h}, t.spec, K3);
    CHECK(rep.z_verdict == Verdict::NotArrows);
    CHECK(rep.b_verdict == Verdict::NotArrows);
    REQUIRE(rep.per_h.size() == 1);
    CHECK(rep.per_h[0].edge_disjoint);
    CHECK(rep.per_h[0].union_verdict == Verdict::Arrows);
    CHECK(rep.per_h[0].interactive);
    CHECK(rep.interactive);
    // Each Z edge lies in a triangle with two star edges.
    CHECK_FALSE(rep.per_h[0].regular);
    CHECK(classify_bad(t.Z, t.h, t.spec, K3).b1);

    auto empty = check_interactive_regular(t.Z, {}, t.spec, K3);
    CHECK(empty.interactive);
    CHECK(empty.regular);

    Graph k6 = named::complete(6);
    Graph z6(7, k6.edges());
    auto arrows_alone = check_interactive_regular(z6, {{6, 0, 1, 2, 3, 4}}, t.spec, K3);
    CHECK(arrows_alone.z_verdict == Verdict::Arrows);
    CHECK_FALSE(arrows_alone.interactive);
}

TEST_CASE("activated set on the K5 instance") {
    Toy t;
    // Two 5-cycles: 0-1-2-3-4 red, the pentagram blue.
    EdgeColoring phi(t.Z.size(), 1);
    for (int i = 0; i < 5; ++i) phi[*t.Z.edge_id(i, (i + 1) % 5)] = 0;
    CHECK(activated_set(t.Z, {}, t.spec, K3, phi).empty());
    auto A = activated_set(t.Z, {t.h}, t.spec, K3, phi);
    CHECK(A.size() == 5);
    auto H = booster_hypergraph(t.Z, {t.h}, t.spec, K3);
    REQUIRE(H.edges.size() == 1);
    bool hits = false;
    for (int v : H.edges[0]) hits = hits || std::binary_search(A.begin(), A.end(), static_cast<EdgeId>(v));
    CHECK(hits);
    EdgeColoring mono(t.Z.size(), 0);
    CHECK_THROWS_AS(activated_set(t.Z, {t.h}, t.spec, K3, mono), std::invalid_argument);
}

TEST_CASE("pools") {
    auto pool = booster_pool(named::path(3), 5);
    CHECK(pool.size() == 30);
    CHECK(std::is_sorted(pool.begin(), pool.end()));
    CHECK(booster_pool(named::complete(3), 5).size() == 10);
    auto s = sampled_booster_pool(named::cycle(5), 9, 40, Seed{3, 0});
    CHECK(s.size() == 40);
    CHECK(std::is_sorted(s.begin(), s.end()));
    CHECK(std::adjacent_find(s.begin(), s.end()) == s.end());
    auto all = booster_pool(named::cycle(5), 9);
    for (const auto& h : s) CHECK(std::binary_search(all.begin(), all.end(), h));
    CHECK(sampled_booster_pool(named::path(3), 4, 1000, Seed{1, 0}).size() == 12);
    CHECK(s == sampled_booster_pool(named::cycle(5), 9, 40, Seed{3, 0}));
}

TEST_CASE("pipeline on Z that arrows alone") {
    auto spec = make_booster(named::complete(2), K3);
    Graph Z(7, named::complete(6).edges());
    PipelineParams pp;
    pp.p = 0.5;
    auto nf = construct_normal_family(Z, spec, K3, pp, Seed{1, 0});
    CHECK(nf.report.z_arrows_alone);
    CHECK(nf.report.z_verdict == Verdict::Arrows);
}

TEST_CASE("pipeline removes the completing star by B1") {
    Toy t;
    PipelineParams pp;
    pp.p = 0.5;
    pp.selection_count = 10;
    auto nf = construct_normal_family(t.Z, t.spec, K3, pp, Seed{1, 0});
    CHECK(nf.report.pool == 6);
    CHECK(nf.report.psi1 == 1);
    CHECK(nf.report.removals["B1"] == 1);
    CHECK(nf.xi0.empty());
    REQUIRE(nf.report.starved_stage);
}

TEST_CASE("pipeline output is deterministic and satisfies its conditions") {
    auto spec = make_booster(named::complete(2), K3);
    Graph Z = gnp_sample(9, 0.45, Seed{5, 0});
    PipelineParams pp;
    pp.p = 0.45;
    pp.D = Rational(4);
    pp.selection_count = 20;
    auto a = construct_normal_family(Z, spec, K3, pp, Seed{9, 1});
    auto b = construct_normal_family(Z, spec, K3, pp, Seed{9, 1});
    CHECK(a.xi0 == b.xi0);
    CHECK(a.report.pool == 36);
    for (std::size_t i = 0; i < a.xi0.size(); ++i) {
        auto view = analyse_embedding(Z, a.xi0[i], spec.B, K3);
        CHECK(view.edge_disjoint);
        CHECK_FALSE(classify_bad(view).bad());
        for (std::size_t j = i + 1; j < a.xi0.size(); ++j) {
            int shared = 0;
            for (int x : a.xi0[i]) shared += std::count(a.xi0[j].begin(), a.xi0[j].end(), x) > 0;
            CHECK(shared <= 1);
        }
    }
}

TEST_CASE("index consistency with a single embedding") {
    Graph Z(5, {{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    auto spec = make_booster(named::complete(2), K3);
    auto r = restrict_index_consistent(Z, {{1, 2}}, spec, K3, 10, Seed{0, 0});
    // One partition draw decides whether the single member set is kept.
    if (!r.xi.empty()) {
        CHECK(r.xi == std::vector<Embedding>{{1, 2}});
        CHECK(r.profile == std::vector<EdgeId>(4, 0));
        CHECK(is_index_consistent(Z, r.xi, spec, K3, r.profile));
    } else {
        CHECK(r.note.find("retry") != std::string::npos);
    }
    auto none = restrict_index_consistent(Z, {{1, 2}}, spec, K3, 3, Seed{0, 0});
    CHECK(none.dropped_long == 1);
    CHECK(none.xi.empty());
    Toy t;
    CHECK_THROWS_AS(restrict_index_consistent(t.Z, {t.h}, t.spec, K3, 100, Seed{}), std::invalid_argument);
}

TEST_CASE("a length-one profile keeps its embedding") {
    Graph Z(4, {{0, 2}, {1, 2}});
    auto spec = make_booster(named::path(3), K3);
    // h(B) = {0,3},{1,3}: no triangle uses a Z edge, so l_h = 0.
    auto r = restrict_index_consistent(Z, {{0, 3, 1}}, spec, K3, 5, Seed{});
    CHECK(r.dropped_empty == 1);
    CHECK(r.note.find("no embedding") != std::string::npos);
}

TEST_CASE("two disjoint focus sets survive at the analytic rate") {
    // Cherries 0-2-1 and 3-5-4 closed by booster edges {0,1} and {3,4}; each focus set has length 2.
    Graph Z(6, {{0, 2}, {1, 2}, {3, 5}, {4, 5}});
    auto spec = make_booster(named::complete(2), K3);
    std::vector<Embedding> xi0{{0, 1}, {3, 4}};
    const int trials = 1000;
    int nonempty = 0;
    for (int s = 0; s < trials; ++s) {
        auto r = restrict_index_consistent(Z, xi0, spec, K3, 10, Seed{static_cast<std::uint64_t>(s), 5});
        if (!r.xi.empty()) {
            ++nonempty;
            CHECK(is_index_consistent(Z, r.xi, spec, K3, r.profile));
        }
    }
    const double keep = 1.0 / 4.0;  // l^-l with l = 2
    const double q = 1 - (1 - keep) * (1 - keep);
    const double sd = std::sqrt(trials * q * (1 - q));
    CHECK(std::abs(nonempty - trials * q) <= 3 * sd);
}

TEST_CASE("restriction output is index consistent on random instances") {
    auto spec = make_booster(named::complete(2), K3);
    int checked = 0;
    for (std::uint64_t s = 0; checked < 500; ++s) {
        Graph Z = gnp_sample(7, 0.5, Seed{s, 31});
        std::vector<Embedding> xi0;
        for (const auto& h : booster_pool(spec.B, 7))
            if (analyse_embedding(Z, h, spec.B, K3).regular()) xi0.push_back(h);
        if (xi0.empty()) continue;
        ++checked;
        auto r = restrict_index_consistent(Z, xi0, spec, K3, 6, Seed{s, 32});
        if (r.xi.empty()) continue;
        CHECK(is_index_consistent(Z, r.xi, spec, K3, r.profile));
        auto H = booster_hypergraph(Z, r.xi, spec, K3);
        for (const auto& e : H.edges) CHECK(e.size() == r.profile.size());
    }
}
