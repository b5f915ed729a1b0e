#include "ramsey/booster.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "ramsey/pattern.hpp"

namespace ramsey {

std::optional<EdgeColoring> first_free_colouring(const Graph& G, const Graph& F) {
    if (F.empty()) throw std::invalid_argument("pattern has no edges");
    const std::size_t m = G.size();
    // Constraints are checked when their last edge receives a colour.
    std::vector<std::vector<std::vector<EdgeId>>> closing(m);
    if (F.order() <= G.order())
        for (auto& c : enumerate_copies(F, G).copies) closing[c.edges.back()].push_back(std::move(c.edges));
    EdgeColoring col(m, 0);
    auto ok_at = [&](std::size_t i) {
        for (const auto& c : closing[i]) {
            bool mono = true;
            for (auto e : c) mono = mono && col[e] == col[i];
            if (mono) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (i == m) return true;
        for (std::uint8_t c = 0; c < 2; ++c) {
            col[i] = c;
            if (ok_at(i) && self(self, i + 1)) return true;
        }
        col[i] = 0;
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return col;
}

BoosterSpec make_booster(const Graph& B, const Graph& F) {
    auto sigma = first_free_colouring(B, F);
    if (!sigma) throw std::invalid_argument("booster graph arrows the pattern; it has no F-free colouring");
    return BoosterSpec{B, std::move(*sigma)};
}

namespace {

void check_embedding(const Graph& B, const Embedding& h, int n) {
    if (static_cast<int>(h.size()) != B.order())
        throw std::invalid_argument("embedding has " + std::to_string(h.size()) + " images for " +
                                    std::to_string(B.order()) + " booster vertices");
    std::vector<char> used(n, 0);
    for (int x : h) {
        if (x < 0 || x >= n) throw std::invalid_argument("embedding image out of range");
        if (used[x]) throw std::invalid_argument("embedding is not injective");
        used[x] = 1;
    }
}

}  // namespace

Graph embed_booster(const Graph& B, const Embedding& h, int n) {
    check_embedding(B, h, n);
    std::vector<Edge> es;
    for (const auto& e : B.edges()) es.push_back(make_edge(h[e.u], h[e.v]));
    return Graph(n, std::move(es));
}

bool EmbeddingView::regular() const {
    return std::all_of(targets.begin(), targets.end(), [](const auto& t) { return t.size() <= 1; });
}

std::optional<std::size_t> EmbeddingView::index_of(EdgeId z) const {
    auto it = std::lower_bound(members.begin(), members.end(), z);
    if (it == members.end() || *it != z) return std::nullopt;
    return static_cast<std::size_t>(it - members.begin());
}

EmbeddingView analyse_embedding(const Graph& Z, const Embedding& h, const Graph& B, const Graph& F) {
    if (F.empty()) throw std::invalid_argument("pattern has no edges");
    EmbeddingView view;
    view.h = h;
    view.image = embed_booster(B, h, Z.order());
    std::map<Edge, EdgeId> booster_id;
    for (EdgeId i = 0; i < B.size(); ++i) {
        Edge e = make_edge(h[B.edge(i).u], h[B.edge(i).v]);
        booster_id[e] = i;
        if (Z.contains(e)) view.edge_disjoint = false;
    }
    Graph U = graph_union(Z, view.image);
    std::set<Embedding> seen;
    std::map<EdgeId, std::set<EdgeId>> focus;
    if (F.order() <= U.order())
        for (const auto& [e, bid] : booster_id) {
            for (const auto& c : enumerate_copies(F, U, Anchor::edge(e.u, e.v)).copies) {
                if (!seen.insert(c.map).second) continue;
                MixedCopy mc;
                for (auto uid : c.edges) {
                    const Edge& ue = U.edge(uid);
                    if (auto it = booster_id.find(ue); it != booster_id.end())
                        mc.b_edges.push_back(it->second);
                    else
                        mc.z_edges.push_back(*Z.edge_id(ue.u, ue.v));
                }
                std::sort(mc.b_edges.begin(), mc.b_edges.end());
                std::sort(mc.z_edges.begin(), mc.z_edges.end());
                for (auto z : mc.z_edges) focus[z].insert(mc.b_edges.begin(), mc.b_edges.end());
                view.copies.push_back(std::move(mc));
            }
        }
    for (auto& [z, bs] : focus) {
        view.members.push_back(z);
        view.targets.emplace_back(bs.begin(), bs.end());
    }
    return view;
}

FocusSet focus_set(const Graph& Z, const Embedding& h, const BoosterSpec& spec, const Graph& F) {
    auto view = analyse_embedding(Z, h, spec.B, F);
    return FocusSet{h, std::move(view.members)};
}

BadFlags classify_bad(const EmbeddingView& view) {
    BadFlags f;
    std::map<EdgeId, std::vector<std::size_t>> through;
    for (std::size_t i = 0; i < view.copies.size(); ++i) {
        const auto& c = view.copies[i];
        if (!c.z_edges.empty() && c.b_edges.size() >= 2) f.b1 = true;
        for (auto z : c.z_edges) through[z].push_back(i);
    }
    for (const auto& [z, ids] : through)
        for (std::size_t a = 0; a < ids.size(); ++a)
            for (std::size_t b = a + 1; b < ids.size(); ++b) {
                const auto& x = view.copies[ids[a]].b_edges;
                const auto& y = view.copies[ids[b]].b_edges;
                // Some f1 in x and f2 in y differ unless both are the same single edge.
                if (!(x.size() == 1 && y.size() == 1 && x[0] == y[0])) f.b2 = true;
                for (auto e : x)
                    if (std::binary_search(y.begin(), y.end(), e)) f.b3 = true;
            }
    return f;
}

BadFlags classify_bad(const Graph& Z, const Embedding& h, const BoosterSpec& spec, const Graph& F) {
    return classify_bad(analyse_embedding(Z, h, spec.B, F));
}

PairRelation pair_relations(const EmbeddingView& view, EdgeId e1, EdgeId e2) {
    if (e1 == e2) throw std::invalid_argument("e1 and e2 coincide");
    PairRelation r;
    auto i = view.index_of(e1), j = view.index_of(e2);
    if (!i || !j) return r;
    r.approx = true;
    std::set<EdgeId> joint(view.targets[*i].begin(), view.targets[*i].end());
    joint.insert(view.targets[*j].begin(), view.targets[*j].end());
    r.sim = joint.size() == 1;
    return r;
}

namespace {

void check_z_edge(const Graph& Z, EdgeId e) {
    if (e >= Z.size()) throw std::invalid_argument("edge id " + std::to_string(e) + " is not an edge of Z");
}

}  // namespace

PairRelation pair_relations(const Graph& Z, const Embedding& h, const BoosterSpec& spec, const Graph& F, EdgeId e1,
                            EdgeId e2) {
    check_z_edge(Z, e1);
    check_z_edge(Z, e2);
    if (e1 == e2) throw std::invalid_argument("e1 and e2 coincide");
    return pair_relations(analyse_embedding(Z, h, spec.B, F), e1, e2);
}

std::size_t c_xi(const Graph& Z, const std::vector<Embedding>& Xi, const BoosterSpec& spec, const Graph& F,
                 EdgeId e1, EdgeId e2) {
    check_z_edge(Z, e1);
    check_z_edge(Z, e2);
    if (e1 == e2) throw std::invalid_argument("e1 and e2 coincide");
    std::size_t c = 0;
    for (const auto& h : Xi) c += pair_relations(analyse_embedding(Z, h, spec.B, F), e1, e2).approx;
    return c;
}

std::vector<EdgeId> profile_of(const EmbeddingView& view) {
    if (!view.regular()) throw std::invalid_argument("profile is only defined for regular embeddings");
    std::vector<EdgeId> out;
    for (const auto& t : view.targets) out.push_back(t.front());
    return out;
}

InteractiveReport check_interactive_regular(const Graph& Z, const std::vector<Embedding>& Xi, const BoosterSpec& spec,
                                            const Graph& F, const ArrowOptions& opts) {
    InteractiveReport rep;
    rep.z_verdict = decide_arrow(Z, F, opts).verdict;
    rep.b_verdict = decide_arrow(spec.B, F, opts).verdict;
    rep.interactive = true;
    rep.regular = true;
    for (const auto& h : Xi) {
        auto view = analyse_embedding(Z, h, spec.B, F);
        EmbeddingCheck chk;
        chk.h = h;
        chk.edge_disjoint = view.edge_disjoint;
        chk.union_verdict = decide_arrow_union(Z, view.image, F, opts).verdict;
        chk.regular = view.regular();
        chk.interactive = chk.edge_disjoint && rep.z_verdict == Verdict::NotArrows &&
                          rep.b_verdict == Verdict::NotArrows && chk.union_verdict == Verdict::Arrows;
        rep.interactive = rep.interactive && chk.interactive;
        rep.regular = rep.regular && chk.regular;
        rep.per_h.push_back(std::move(chk));
    }
    return rep;
}

std::vector<Embedding> booster_pool(const Graph& B, int n) {
    if (B.order() > n) return {};
    std::vector<Embedding> out;
    for (auto& c : enumerate_copies(B, named::complete(n)).copies) out.push_back(std::move(c.map));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Embedding> sampled_booster_pool(const Graph& B, int n, std::size_t size, Seed seed) {
    if (B.order() > n) return {};
    auto auts = automorphisms(B);
    Rng rng(seed);
    std::set<Embedding> pool;
    std::vector<int> perm(n);
    const std::size_t attempts = 50 * size + 100;
    for (std::size_t t = 0; t < attempts && pool.size() < size; ++t) {
        for (int i = 0; i < n; ++i) perm[i] = i;
        Embedding h(B.order());
        for (int i = 0; i < B.order(); ++i) {
            auto j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
            std::swap(perm[i], perm[j]);
            h[i] = perm[i];
        }
        Embedding best = h;
        for (const auto& s : auts) {
            Embedding alt(B.order());
            for (int i = 0; i < B.order(); ++i) alt[i] = h[s[i]];
            best = std::min(best, alt);
        }
        pool.insert(best);
    }
    return {pool.begin(), pool.end()};
}

namespace {

Rational alpha_tilde(int vb) {
    BigInt den = 13 * factorial(static_cast<unsigned long>(vb));
    den *= static_cast<long>(vb) * vb * vb * vb;
    return Rational(BigInt(1), den);
}

std::vector<Edge> image_key(const Graph& image) { return image.edges(); }

}  // namespace

NormalFamily construct_normal_family(const Graph& Z, const BoosterSpec& spec, const Graph& F,
                                     const PipelineParams& params, Seed seed) {
    if (!(params.p > 0 && params.p <= 1)) throw std::invalid_argument("p must be in (0,1]");
    if (params.D <= 0 || params.delta <= 0) throw std::invalid_argument("D and delta must be positive");
    const int n = Z.order();
    NormalFamily out;
    auto& rep = out.report;
    rep.arrow_filter = params.arrow_filter;
    rep.z_verdict = decide_arrow(Z, F, params.arrow).verdict;
    rep.z_arrows_alone = rep.z_verdict == Verdict::Arrows;

    std::vector<Embedding> pool;
    if (params.pool_size) {
        rep.pool_sampled = true;
        pool = sampled_booster_pool(spec.B, n, *params.pool_size, seed.child(0));
    } else {
        pool = booster_pool(spec.B, n);
    }
    rep.pool = pool.size();
    auto starve = [&](const char* stage, std::size_t size) {
        if (size == 0 && !rep.starved_stage) rep.starved_stage = stage;
    };
    starve("pool", pool.size());

    // Psi^1: unions that arrow.
    std::vector<EmbeddingView> stage;
    std::map<std::vector<Edge>, Verdict> memo;
    for (const auto& h : pool) {
        auto view = analyse_embedding(Z, h, spec.B, F);
        if (params.arrow_filter) {
            auto key = image_key(view.image);
            auto it = memo.find(key);
            if (it == memo.end())
                it = memo.emplace(key, decide_arrow_union(Z, view.image, F, params.arrow).verdict).first;
            if (it->second == Verdict::NotArrows) {
                ++rep.removals["not_arrowing"];
                continue;
            }
            if (it->second == Verdict::Undecided) {
                ++rep.removals["undecided"];
                continue;
            }
        }
        stage.push_back(std::move(view));
    }
    rep.psi1 = stage.size();
    starve("psi1", rep.psi1);

    // Psi^2: no bad embeddings.
    std::vector<EmbeddingView> next;
    for (auto& v : stage) {
        auto f = classify_bad(v);
        if (f.b1)
            ++rep.removals["B1"];
        else if (f.b2)
            ++rep.removals["B2"];
        else if (f.b3)
            ++rep.removals["B3"];
        else
            next.push_back(std::move(v));
    }
    stage.swap(next);
    next.clear();
    rep.psi2 = stage.size();
    starve("psi2", rep.psi2);

    // Psi^3: drop h with e1 ~_h e2 at a heavy pair.
    const double nd = std::pow(static_cast<double>(n), to_double(params.delta));
    rep.heavy_threshold = to_double(params.D) / (params.p * nd);
    rep.pair_cap = 1.0 / (params.p * std::sqrt(nd));
    PCounter pc(F, Z);
    std::map<std::pair<EdgeId, EdgeId>, std::size_t> pcount;
    for (auto& v : stage) {
        bool heavy = false;
        for (std::size_t i = 0; i < v.members.size() && !heavy; ++i)
            for (std::size_t j = i + 1; j < v.members.size() && !heavy; ++j) {
                if (!pair_relations(v, v.members[i], v.members[j]).sim) continue;
                auto key = std::make_pair(v.members[i], v.members[j]);
                auto it = pcount.find(key);
                if (it == pcount.end()) it = pcount.emplace(key, pc.count(Z.edge(key.first), Z.edge(key.second))).first;
                heavy = static_cast<double>(it->second) > rep.heavy_threshold;
            }
        if (heavy)
            ++rep.removals["heavy_pair"];
        else
            next.push_back(std::move(v));
    }
    stage.swap(next);
    next.clear();
    rep.psi3 = stage.size();
    starve("psi3", rep.psi3);

    // Selection with repetition.
    BigInt target = ceil(2 * alpha_tilde(spec.B.order()) * (static_cast<long>(n) * n));
    rep.selection_target = params.selection_count ? *params.selection_count
                                                  : std::max<std::size_t>(1, target.get_ui());
    rep.selection_draws = std::min(rep.selection_target, stage.size());
    rep.selection_truncated = rep.selection_target > stage.size();
    Rng rng(seed.child(1));
    std::vector<char> chosen(stage.size(), 0);
    for (std::size_t d = 0; d < rep.selection_draws; ++d) chosen[rng.below(stage.size())] = 1;
    for (std::size_t i = 0; i < stage.size(); ++i)
        if (chosen[i])
            next.push_back(std::move(stage[i]));
        else
            ++rep.removals["not_selected"];
    stage.swap(next);
    next.clear();
    rep.psi4 = stage.size();
    starve("psi4", rep.psi4);

    // Pair cap, greedily in pool order.
    std::map<std::pair<EdgeId, EdgeId>, std::size_t> load;
    for (auto& v : stage) {
        bool fits = true;
        for (std::size_t i = 0; i < v.members.size() && fits; ++i)
            for (std::size_t j = i + 1; j < v.members.size() && fits; ++j)
                fits = static_cast<double>(load[{v.members[i], v.members[j]}] + 1) <= rep.pair_cap;
        if (!fits) {
            ++rep.removals["pair_cap"];
            continue;
        }
        for (std::size_t i = 0; i < v.members.size(); ++i)
            for (std::size_t j = i + 1; j < v.members.size(); ++j) ++load[{v.members[i], v.members[j]}];
        next.push_back(std::move(v));
    }
    stage.swap(next);
    next.clear();
    rep.after_cap = stage.size();
    starve("pair_cap", rep.after_cap);

    // Vertex overlap: both members of a clashing pair go.
    std::vector<char> clash(stage.size(), 0);
    std::vector<std::vector<int>> vsets;
    for (const auto& v : stage) {
        auto s = v.h;
        std::sort(s.begin(), s.end());
        vsets.push_back(std::move(s));
    }
    for (std::size_t a = 0; a < stage.size(); ++a)
        for (std::size_t b = a + 1; b < stage.size(); ++b) {
            std::vector<int> common;
            std::set_intersection(vsets[a].begin(), vsets[a].end(), vsets[b].begin(), vsets[b].end(),
                                  std::back_inserter(common));
            if (common.size() >= 2) clash[a] = clash[b] = 1;
        }
    for (std::size_t i = 0; i < stage.size(); ++i)
        if (clash[i])
            ++rep.removals["overlap"];
        else
            next.push_back(std::move(stage[i]));
    stage.swap(next);
    next.clear();
    rep.after_overlap = stage.size();
    starve("overlap", rep.after_overlap);

    for (auto& v : stage)
        if (!v.edge_disjoint)
            ++rep.removals["edge_clash"];
        else
            out.xi0.push_back(v.h);
    rep.xi0 = out.xi0.size();
    starve("edge_clash", rep.xi0);
    return out;
}

IndexConsistentFamily restrict_index_consistent(const Graph& Z, const std::vector<Embedding>& Xi0,
                                                const BoosterSpec& spec, const Graph& F, std::size_t L, Seed seed) {
    IndexConsistentFamily out;
    std::map<std::vector<EdgeId>, std::vector<std::size_t>> by_profile;
    std::vector<EmbeddingView> views;
    for (const auto& h : Xi0) {
        auto view = analyse_embedding(Z, h, spec.B, F);
        if (!view.regular()) throw std::invalid_argument("input family contains a non-regular embedding");
        views.push_back(std::move(view));
    }
    for (std::size_t i = 0; i < views.size(); ++i) {
        const auto ell = views[i].members.size();
        if (ell == 0) {
            ++out.dropped_empty;
            continue;
        }
        if (ell > L) {
            ++out.dropped_long;
            continue;
        }
        by_profile[profile_of(views[i])].push_back(i);
    }
    if (by_profile.empty()) {
        out.note = "no embedding with 1 <= l_h <= L";
        return out;
    }
    // Largest class; the map order makes ties go to the lexicographically smallest profile.
    auto best = by_profile.begin();
    for (auto it = by_profile.begin(); it != by_profile.end(); ++it)
        if (it->second.size() > best->second.size()) best = it;
    out.profile_class = best->second.size();
    const std::size_t ell = best->first.size();
    Rng rng(seed);
    out.partition.resize(Z.size());
    for (auto& c : out.partition) c = static_cast<int>(rng.below(ell));
    for (auto i : best->second) {
        const auto& mem = views[i].members;
        bool keep = true;
        for (std::size_t k = 0; k < mem.size() && keep; ++k) keep = out.partition[mem[k]] == static_cast<int>(k);
        if (keep) out.xi.push_back(views[i].h);
    }
    if (out.xi.empty())
        out.note = "random partition kept nothing; retry with another seed";
    else
        out.profile = best->first;
    return out;
}

bool is_index_consistent(const Graph& Z, const std::vector<Embedding>& Xi, const BoosterSpec& spec, const Graph& F,
                         const std::vector<EdgeId>& profile) {
    std::map<EdgeId, std::size_t> index;
    for (const auto& h : Xi) {
        auto view = analyse_embedding(Z, h, spec.B, F);
        if (!view.regular() || profile_of(view) != profile) return false;
        for (std::size_t i = 0; i < view.members.size(); ++i) {
            auto [it, fresh] = index.emplace(view.members[i], i);
            if (!fresh && it->second != i) return false;
        }
    }
    return true;
}

std::vector<EdgeId> activated_set(const Graph& Z, const std::vector<Embedding>& Xi, const BoosterSpec& spec,
                                  const Graph& F, const EdgeColoring& phi) {
    if (!is_f_free(phi, Z, F).free) throw std::invalid_argument("phi is not F-free on Z");
    if (!is_f_free(spec.sigma, spec.B, F).free) throw std::invalid_argument("sigma is not F-free on B");
    std::set<EdgeId> out;
    for (const auto& h : Xi) {
        auto view = analyse_embedding(Z, h, spec.B, F);
        for (std::size_t i = 0; i < view.members.size(); ++i)
            for (auto b : view.targets[i])
                if (phi[view.members[i]] == spec.sigma[b]) out.insert(view.members[i]);
    }
    return {out.begin(), out.end()};
}

Hypergraph booster_hypergraph(const Graph& Z, const std::vector<Embedding>& Xi, const BoosterSpec& spec,
                              const Graph& F) {
    std::vector<std::vector<int>> edges;
    for (const auto& h : Xi) {
        auto view = analyse_embedding(Z, h, spec.B, F);
        // An empty focus set is not a hyperedge.
        if (view.members.empty()) continue;
        edges.emplace_back(view.members.begin(), view.members.end());
    }
    return make_hypergraph(static_cast<int>(Z.size()), std::move(edges));
}

}  // namespace ramsey
