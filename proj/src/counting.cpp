#include "ramsey/counting.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ramsey {

namespace {

// Backtracking state for one enumeration. Pattern vertices are placed in a
// fixed order; each position lists the earlier-placed pattern neighbours whose
// host rows are intersected to form the candidate set.
class Matcher {
public:
    Matcher(const Graph& F, const Graph& G, const std::vector<std::pair<int, int>>& fixed,
            const std::function<bool(const Embedding&)>& visit)
        : F_(F), G_(G), visit_(visit), words_(G.words_per_row()) {
        const int k = F.order();
        map_.assign(k, -1);
        used_.assign(words_, 0);
        std::vector<char> placed(k, 0);
        for (auto [a, h] : fixed) {
            if (a < 0 || a >= k) throw std::invalid_argument("fixed pattern vertex out of range");
            if (h < 0 || h >= G.order()) throw std::invalid_argument("fixed host vertex out of range");
            if (placed[a]) throw std::invalid_argument("pattern vertex fixed twice");
            placed[a] = 1;
            order_.push_back(a);
        }
        nfixed_ = fixed.size();
        fixed_ = fixed;
        while (static_cast<int>(order_.size()) < k) {
            int best = -1, best_links = -1, best_deg = -1;
            for (int x = 0; x < k; ++x) {
                if (placed[x]) continue;
                int links = 0;
                for (int y : order_) links += F.adjacent(x, y);
                int deg = F.degree(x);
                if (links > best_links || (links == best_links && deg > best_deg)) {
                    best = x;
                    best_links = links;
                    best_deg = deg;
                }
            }
            placed[best] = 1;
            order_.push_back(best);
        }
        back_.resize(k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < i; ++j)
                if (F.adjacent(order_[i], order_[j])) back_[i].push_back(order_[j]);
        buf_.assign(static_cast<std::size_t>(k) * words_, 0);
        all_.assign(words_, 0);
        for (int v = 0; v < G.order(); ++v) all_[v / 64] |= std::uint64_t{1} << (v % 64);
    }

    void run() {
        if (F_.order() > G_.order()) return;
        for (std::size_t i = 0; i < nfixed_; ++i) {
            auto [a, h] = fixed_[i];
            if (used_[h / 64] >> (h % 64) & 1) return;
            for (int y : back_[i])
                if (!G_.adjacent(h, map_[y])) return;
            map_[a] = h;
            used_[h / 64] |= std::uint64_t{1} << (h % 64);
        }
        extend(nfixed_);
    }

private:
    bool extend(std::size_t depth) {
        if (depth == order_.size()) return visit_(map_);
        const int x = order_[depth];
        std::uint64_t* cand = buf_.data() + depth * words_;
        for (std::size_t w = 0; w < words_; ++w) cand[w] = all_[w] & ~used_[w];
        for (int y : back_[depth]) {
            auto r = G_.row(map_[y]);
            for (std::size_t w = 0; w < words_; ++w) cand[w] &= r[w];
        }
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t bits = cand[w];
            while (bits) {
                int h = static_cast<int>(w * 64 + std::countr_zero(bits));
                bits &= bits - 1;
                map_[x] = h;
                used_[w] |= std::uint64_t{1} << (h % 64);
                bool go_on = extend(depth + 1);
                used_[w] &= ~(std::uint64_t{1} << (h % 64));
                if (!go_on) {
                    map_[x] = -1;
                    return false;
                }
            }
        }
        map_[x] = -1;
        return true;
    }

    const Graph& F_;
    const Graph& G_;
    const std::function<bool(const Embedding&)>& visit_;
    std::size_t words_;
    std::vector<int> order_;
    std::size_t nfixed_ = 0;
    std::vector<std::pair<int, int>> fixed_;
    std::vector<std::vector<int>> back_;
    Embedding map_;
    std::vector<std::uint64_t> used_, buf_, all_;
};

bool is_canonical(const Embedding& emb, const std::vector<Embedding>& auts) {
    const std::size_t k = emb.size();
    for (const auto& s : auts) {
        for (std::size_t i = 0; i < k; ++i) {
            int other = emb[s[i]];
            if (other < emb[i]) return false;
            if (other > emb[i]) break;
        }
    }
    return true;
}

std::vector<EdgeId> image_edges(const Graph& F, const Graph& G, const Embedding& emb) {
    std::vector<EdgeId> out;
    out.reserve(F.size());
    for (const auto& e : F.edges()) out.push_back(*G.edge_id(emb[e.u], emb[e.v]));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<std::pair<int, int>>> anchor_prefixes(const Graph& F, const Anchor& a) {
    std::vector<std::vector<std::pair<int, int>>> out;
    if (a.u == a.v) throw std::invalid_argument("anchor endpoints coincide");
    if (a.kind == Anchor::Kind::Edge) {
        for (const auto& e : F.edges()) {
            out.push_back({{e.u, a.u}, {e.v, a.v}});
            out.push_back({{e.u, a.v}, {e.v, a.u}});
        }
    } else {
        for (int x = 0; x < F.order(); ++x)
            for (int y = 0; y < F.order(); ++y)
                if (x != y) out.push_back({{x, a.u}, {y, a.v}});
    }
    return out;
}

// Calls visit(canonical embedding) once per unlabelled copy.
void for_each_copy(const Graph& F, const Graph& G, std::optional<Anchor> anchor,
                   const std::function<bool(const Embedding&)>& visit) {
    check_pattern_size(F, "copy enumeration");
    if (F.order() > G.order()) throw std::invalid_argument("pattern larger than host");
    auto auts = automorphisms(F);
    auts.erase(auts.begin());  // identity is always first
    bool stop = false;
    auto filter = [&](const Embedding& emb) {
        if (!is_canonical(emb, auts)) return true;
        if (!visit(emb)) {
            stop = true;
            return false;
        }
        return true;
    };
    if (!anchor) {
        for_each_embedding(F, G, {}, filter);
        return;
    }
    if (anchor->u < 0 || anchor->v < 0 || anchor->u >= G.order() || anchor->v >= G.order())
        throw std::invalid_argument("anchor vertex out of range");
    if (anchor->kind == Anchor::Kind::Edge && !G.adjacent(anchor->u, anchor->v)) return;
    for (const auto& prefix : anchor_prefixes(F, *anchor)) {
        for_each_embedding(F, G, prefix, filter);
        if (stop) return;
    }
}

}  // namespace

void for_each_embedding(const Graph& F, const Graph& G, const std::vector<std::pair<int, int>>& fixed,
                        const std::function<bool(const Embedding&)>& visit) {
    Matcher m(F, G, fixed, visit);
    m.run();
}

std::vector<Embedding> automorphisms(const Graph& F) {
    std::vector<Embedding> out;
    for_each_embedding(F, F, {}, [&](const Embedding& e) {
        out.push_back(e);
        return true;
    });
    // Put the identity first so callers can skip it.
    Embedding id(F.order());
    std::iota(id.begin(), id.end(), 0);
    auto it = std::find(out.begin(), out.end(), id);
    std::iter_swap(out.begin(), it);
    return out;
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.order(); ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    bool found = false;
    for_each_embedding(a, b, {}, [&](const Embedding&) {
        found = true;
        return false;
    });
    return found;
}

std::vector<int> Copy::vertex_set() const {
    std::vector<int> vs = map;
    std::sort(vs.begin(), vs.end());
    return vs;
}

CopyFamily enumerate_copies(const Graph& F, const Graph& G, std::optional<Anchor> anchor) {
    CopyFamily fam{F, G, {}};
    for_each_copy(F, G, anchor, [&](const Embedding& emb) {
        fam.copies.push_back(Copy{emb, image_edges(F, G, emb)});
        return true;
    });
    std::sort(fam.copies.begin(), fam.copies.end(), [](const Copy& a, const Copy& b) {
        if (a.edges != b.edges) return a.edges < b.edges;
        return a.vertex_set() < b.vertex_set();
    });
    return fam;
}

std::size_t count_copies(const Graph& F, const Graph& G, std::optional<Anchor> anchor) {
    std::size_t c = 0;
    for_each_copy(F, G, anchor, [&](const Embedding&) {
        ++c;
        return true;
    });
    return c;
}

namespace {

void add_if_new(std::vector<Graph>& members, Graph g) {
    for (const auto& m : members)
        if (isomorphic(m, g)) return;
    members.push_back(std::move(g));
}

}  // namespace

std::vector<Graph> f_minus_members(const Graph& F) {
    if (F.empty()) throw std::invalid_argument("F-minus family of an edgeless graph");
    std::vector<Graph> out;
    for (EdgeId f = 0; f < F.size(); ++f) add_if_new(out, F.without_edge(f));
    return out;
}

std::vector<Graph> f_minus2_members(const Graph& F) {
    if (F.size() < 2) throw std::invalid_argument("doubly deleted family needs two edges");
    std::vector<Graph> out;
    for (EdgeId f = 0; f < F.size(); ++f)
        for (EdgeId g = f + 1; g < F.size(); ++g) add_if_new(out, F.without_edge(g).without_edge(f));
    return out;
}

std::vector<std::pair<std::size_t, Copy>> f_minus_copies(const Graph& F, const Graph& Z, std::optional<Anchor> anchor) {
    std::vector<std::pair<std::size_t, Copy>> out;
    auto members = f_minus_members(F);
    for (std::size_t i = 0; i < members.size(); ++i)
        for (auto& c : enumerate_copies(members[i], Z, anchor).copies) out.emplace_back(i, std::move(c));
    return out;
}

std::size_t count_f_minus(const Graph& F, const Graph& Z) {
    std::size_t c = 0;
    for (const auto& m : f_minus_members(F)) c += count_copies(m, Z);
    return c;
}

std::size_t count_f_minus_through(const Graph& F, const Graph& Z, Edge e) {
    if (!Z.contains(make_edge(e.u, e.v))) throw std::invalid_argument("anchor edge is not an edge of Z");
    std::size_t c = 0;
    for (const auto& m : f_minus_members(F)) c += count_copies(m, Z, Anchor::edge(e.u, e.v));
    return c;
}

PCounter::PCounter(const Graph& F, const Graph& Z) : F_(F), Z_(Z), members_(f_minus2_members(F)) {
    const int v = F.order();
    for (const auto& M : members_) {
        std::vector<std::vector<std::pair<int, int>>> table(static_cast<std::size_t>(v) * v);
        for (int a = 0; a < v; ++a)
            for (int b = a + 1; b < v; ++b) {
                if (M.adjacent(a, b)) continue;
                auto with_e = M.with_edge({a, b});
                for (int c = 0; c < v; ++c)
                    for (int d = c + 1; d < v; ++d) {
                        if ((c == a && d == b) || M.adjacent(c, d)) continue;
                        if (isomorphic(with_e.with_edge({c, d}), F)) table[a * v + b].push_back({c, d});
                    }
            }
        completions_.push_back(std::move(table));
    }
}

const std::vector<PCounter::Candidate>& PCounter::candidates(Edge e) const {
    e = make_edge(e.u, e.v);
    if (auto it = cache_.find(e); it != cache_.end()) return it->second;
    std::vector<Candidate> out;
    const int v = F_.order();
    const auto n = static_cast<std::uint32_t>(Z_.order());
    for (std::size_t mi = 0; mi < members_.size(); ++mi) {
        const Graph& M = members_[mi];
        for_each_copy(M, Z_, Anchor::vertices(e.u, e.v), [&](const Embedding& emb) {
            int a = static_cast<int>(std::find(emb.begin(), emb.end(), e.u) - emb.begin());
            int b = static_cast<int>(std::find(emb.begin(), emb.end(), e.v) - emb.begin());
            if (a > b) std::swap(a, b);
            const auto& comp = completions_[mi][a * v + b];
            if (comp.empty()) return true;
            Candidate c;
            c.vertices = emb;
            std::sort(c.vertices.begin(), c.vertices.end());
            c.edges = image_edges(M, Z_, emb);
            for (auto [x, y] : comp) {
                auto pe = make_edge(emb[x], emb[y]);
                c.completions.push_back(static_cast<std::uint32_t>(pe.u) * n + static_cast<std::uint32_t>(pe.v));
            }
            std::sort(c.completions.begin(), c.completions.end());
            c.completions.erase(std::unique(c.completions.begin(), c.completions.end()), c.completions.end());
            out.push_back(std::move(c));
            return true;
        });
    }
    return cache_.emplace(e, std::move(out)).first->second;
}

namespace {

template <class T>
bool sorted_disjoint(const std::vector<T>& a, const std::vector<T>& b) {
    auto i = a.begin(), j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return false;
        if (*i < *j)
            ++i;
        else
            ++j;
    }
    return true;
}

template <class T>
std::size_t sorted_overlap(const std::vector<T>& a, const std::vector<T>& b) {
    std::size_t c = 0;
    auto i = a.begin(), j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) {
            ++c;
            ++i;
            ++j;
        } else if (*i < *j) {
            ++i;
        } else {
            ++j;
        }
    }
    return c;
}

}  // namespace

std::size_t PCounter::count(Edge e1, Edge e2) const {
    if (make_edge(e1.u, e1.v) == make_edge(e2.u, e2.v)) throw std::invalid_argument("e1 and e2 coincide");
    const auto& c1 = candidates(e1);
    const auto& c2 = candidates(e2);
    std::size_t total = 0;
    for (const auto& a : c1)
        for (const auto& b : c2)
            if (sorted_overlap(a.vertices, b.vertices) >= 2 && sorted_disjoint(a.edges, b.edges) &&
                !sorted_disjoint(a.completions, b.completions))
                ++total;
    return total;
}

std::vector<PPair> enumerate_P(const Graph& F, const Graph& Z, Edge e1, Edge e2) {
    e1 = make_edge(e1.u, e1.v);
    e2 = make_edge(e2.u, e2.v);
    if (e1 == e2) throw std::invalid_argument("e1 and e2 coincide");
    std::vector<PPair> out;
    auto members = f_minus2_members(F);
    struct Cand {
        SubgraphRef ref;
        std::vector<EdgeId> ids;
        std::vector<Edge> comps;
    };
    auto collect = [&](Edge e) {
        std::vector<Cand> list;
        for (const auto& M : members) {
            for_each_copy(M, Z, Anchor::vertices(e.u, e.v), [&](const Embedding& emb) {
                Cand c;
                c.ref.vertices = emb;
                std::sort(c.ref.vertices.begin(), c.ref.vertices.end());
                c.ids = image_edges(M, Z, emb);
                for (auto id : c.ids) c.ref.edges.push_back(Z.edge(id));
                if (std::find(c.ref.edges.begin(), c.ref.edges.end(), e) != c.ref.edges.end()) return true;
                for (int a = 0; a < M.order(); ++a)
                    for (int b = a + 1; b < M.order(); ++b) {
                        Edge x = make_edge(emb[a], emb[b]);
                        if (M.adjacent(a, b) || x == e) continue;
                        auto g = M.with_edge({a, b});
                        int ea = static_cast<int>(std::find(emb.begin(), emb.end(), e.u) - emb.begin());
                        int eb = static_cast<int>(std::find(emb.begin(), emb.end(), e.v) - emb.begin());
                        if (isomorphic(g.with_edge(make_edge(ea, eb)), F)) c.comps.push_back(x);
                    }
                std::sort(c.comps.begin(), c.comps.end());
                if (!c.comps.empty()) list.push_back(std::move(c));
                return true;
            });
        }
        return list;
    };
    auto l1 = collect(e1);
    auto l2 = collect(e2);
    for (const auto& a : l1)
        for (const auto& b : l2) {
            auto s = sorted_overlap(a.ref.vertices, b.ref.vertices);
            if (s < 2 || !sorted_disjoint(a.ids, b.ids)) continue;
            std::vector<Edge> common;
            std::set_intersection(a.comps.begin(), a.comps.end(), b.comps.begin(), b.comps.end(),
                                  std::back_inserter(common));
            if (common.empty()) continue;
            out.push_back(PPair{a.ref, b.ref, static_cast<int>(s), std::move(common)});
        }
    std::sort(out.begin(), out.end(), [](const PPair& x, const PPair& y) {
        return std::tie(x.first, x.second) < std::tie(y.first, y.second);
    });
    return out;
}

std::vector<std::size_t> count_P_by_s(const Graph& F, const Graph& Z, Edge e1, Edge e2) {
    std::vector<std::size_t> out(F.order() + 1, 0);
    for (const auto& pp : enumerate_P(F, Z, e1, e2)) ++out[pp.s];
    return out;
}

std::uint64_t extension_count(const std::vector<int>& roots, const Graph& H, const std::vector<int>& host_roots,
                              const Graph& G) {
    if (roots.size() != host_roots.size()) throw std::invalid_argument("root lists differ in length");
    std::vector<int> r = roots, hr = host_roots;
    std::sort(r.begin(), r.end());
    std::sort(hr.begin(), hr.end());
    if (std::adjacent_find(r.begin(), r.end()) != r.end()) throw std::invalid_argument("repeated root");
    if (std::adjacent_find(hr.begin(), hr.end()) != hr.end()) throw std::invalid_argument("repeated host root");
    if (static_cast<int>(r.size()) >= H.order()) throw std::invalid_argument("roots must be a proper subset of V(H)");
    for (int x : r)
        if (x < 0 || x >= H.order()) throw std::invalid_argument("root out of range");
    std::vector<char> is_root(H.order(), 0);
    for (int x : r) is_root[x] = 1;
    // Edges among roots impose nothing on the host.
    std::vector<Edge> kept;
    for (const auto& e : H.edges())
        if (!(is_root[e.u] && is_root[e.v])) kept.push_back(e);
    Graph Hx(H.order(), kept);
    std::vector<std::pair<int, int>> fixed;
    for (std::size_t i = 0; i < roots.size(); ++i) fixed.emplace_back(roots[i], host_roots[i]);
    std::uint64_t count = 0;
    for_each_embedding(Hx, G, fixed, [&](const Embedding&) {
        ++count;
        return true;
    });
    return count;
}

Graph base_graph(const PatternProfile& F, const Graph& Gp) {
    Graph Fp = F.bipartite_part();
    std::vector<std::pair<int, int>> closing;
    for (int a = 0; a < Fp.order(); ++a)
        for (int b = a + 1; b < Fp.order(); ++b)
            if (!Fp.adjacent(a, b) && isomorphic(Fp.with_edge({a, b}), F.pattern)) closing.emplace_back(a, b);
    std::set<Edge> pairs;
    if (Fp.order() <= Gp.order())
        for_each_copy(Fp, Gp, std::nullopt, [&](const Embedding& emb) {
            for (auto [a, b] : closing) pairs.insert(make_edge(emb[a], emb[b]));
            return true;
        });
    return Graph(Gp.order(), std::vector<Edge>(pairs.begin(), pairs.end()));
}

TCheck check_T(const PatternProfile& F, const Graph& G, const Graph& Gp, const Rational& lambda,
               const Rational& eta) {
    if (!is_subgraph(Gp, G)) throw std::invalid_argument("G' is not a subgraph of G");
    TCheck out;
    out.sub_edges = Gp.size();
    out.below_density_floor = Rational(static_cast<long>(Gp.size())) < lambda * static_cast<long>(G.size());
    Graph base = base_graph(F, Gp);
    out.copies_in_base = F.pattern.order() <= base.order() ? count_copies(F.pattern, base) : 0;
    out.required = eta * pow(Rational(G.order()), static_cast<unsigned long>(F.pattern.order()));
    out.pass = out.below_density_floor || Rational(static_cast<long>(out.copies_in_base)) >= out.required;
    return out;
}

namespace {

Graph subgraph_from_mask(const Graph& G, const std::vector<char>& keep) {
    std::vector<Edge> es;
    for (EdgeId i = 0; i < G.size(); ++i)
        if (keep[i]) es.push_back(G.edge(i));
    return Graph(G.order(), std::move(es));
}

}  // namespace

TSearchResult adversarial_T_search(const PatternProfile& F, const Graph& G, const Rational& lambda,
                                   const Rational& eta, std::uint64_t budget, Seed seed) {
    const std::size_t m = G.size();
    BigInt target_big = ceil(lambda * static_cast<long>(m));
    std::size_t target = target_big <= 0 ? 0 : std::min<std::size_t>(m, target_big.get_ui());
    TSearchResult res;
    std::optional<std::size_t> best;
    auto evaluate = [&](const std::vector<char>& keep) {
        ++res.evaluations;
        Graph sub = subgraph_from_mask(G, keep);
        auto chk = check_T(F, G, sub, lambda, eta);
        if (!best || chk.copies_in_base < *best) {
            best = chk.copies_in_base;
            res.worst = sub;
            res.check = chk;
        }
        return chk.copies_in_base;
    };
    // The basegraph is monotone in G', so the minimum sits at exactly `target` edges.
    BigInt subsets = binomial(m, target);
    if (subsets <= budget) {
        res.exhaustive = true;
        std::vector<std::size_t> idx(target);
        std::iota(idx.begin(), idx.end(), 0);
        for (;;) {
            std::vector<char> keep(m, 0);
            for (auto i : idx) keep[i] = 1;
            evaluate(keep);
            std::size_t i = target;
            while (i > 0 && idx[i - 1] == m - target + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < target; ++j) idx[j] = idx[j - 1] + 1;
        }
        return res;
    }
    Rng rng(seed);
    std::vector<char> keep(m, 1);
    std::size_t current = evaluate(keep);
    std::size_t have = m;
    while (have > target && res.evaluations < budget) {
        // Remove the edge (from a random sample of candidates) whose removal hurts the basegraph most.
        std::vector<std::size_t> present;
        for (std::size_t i = 0; i < m; ++i)
            if (keep[i]) present.push_back(i);
        std::size_t tries = std::min<std::size_t>(present.size(), 8);
        std::size_t pick = present[rng.below(present.size())];
        std::size_t pick_val = SIZE_MAX;
        for (std::size_t t = 0; t < tries && res.evaluations < budget; ++t) {
            std::size_t cand = present[rng.below(present.size())];
            keep[cand] = 0;
            std::size_t val = evaluate(keep);
            keep[cand] = 1;
            if (val < pick_val) {
                pick_val = val;
                pick = cand;
            }
        }
        keep[pick] = 0;
        --have;
        current = pick_val == SIZE_MAX ? current : pick_val;
    }
    if (have == target) current = evaluate(keep);
    while (res.evaluations < budget && have == target && target > 0 && target < m) {
        std::vector<std::size_t> in, out;
        for (std::size_t i = 0; i < m; ++i) (keep[i] ? in : out).push_back(i);
        std::size_t a = in[rng.below(in.size())], b = out[rng.below(out.size())];
        keep[a] = 0;
        keep[b] = 1;
        std::size_t val = evaluate(keep);
        if (val <= current) {
            current = val;
        } else {
            keep[a] = 1;
            keep[b] = 0;
        }
    }
    return res;
}

DenseCheck rho_d_dense_check(const Graph& G0, const Rational& rho, const Rational& d, SearchMode mode, Seed seed,
                             std::uint64_t iterations) {
    const int n = G0.order();
    DenseCheck out;
    out.worst_density = rat(1);
    BigInt floor_big = ceil(rho * n);
    int kmin = std::max(2, floor_big <= 0 ? 0 : static_cast<int>(floor_big.get_si()));
    if (kmin > n) {
        out.exhaustive = true;
        return out;
    }
    // Compare e/C(k,2) ratios exactly by cross-multiplication.
    long best_e = -1, best_c = 1;
    auto consider = [&](const std::vector<int>& W) {
        ++out.sets_checked;
        long e = static_cast<long>(G0.induced_edge_count(W));
        long k = static_cast<long>(W.size());
        long c = k * (k - 1) / 2;
        if (best_e < 0 || e * best_c < best_e * c) {
            best_e = e;
            best_c = c;
            out.worst = W;
        }
        return rat(e, c);
    };
    if (mode == SearchMode::Exact) {
        if (n > kDenseExactCap) throw std::invalid_argument("exact denseness check is capped at 20 vertices");
        out.exhaustive = true;
        std::vector<std::uint32_t> rows(n, 0);
        for (const auto& e : G0.edges()) {
            rows[e.u] |= 1u << e.v;
            rows[e.v] |= 1u << e.u;
        }
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            int k = std::popcount(mask);
            if (k < kmin) continue;
            long twice = 0;
            for (std::uint32_t w = mask; w; w &= w - 1) twice += std::popcount(rows[std::countr_zero(w)] & mask);
            long e = twice / 2, c = static_cast<long>(k) * (k - 1) / 2;
            ++out.sets_checked;
            if (best_e < 0 || e * best_c < best_e * c) {
                best_e = e;
                best_c = c;
                out.worst.clear();
                for (std::uint32_t w = mask; w; w &= w - 1) out.worst.push_back(std::countr_zero(w));
            }
        }
    } else {
        Rng rng(seed);
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 0);
        std::uint64_t used = 0;
        while (used < iterations) {
            int k = kmin + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - kmin + 1)));
            shuffle(all, rng);
            std::vector<int> W(all.begin(), all.begin() + k), rest(all.begin() + k, all.end());
            Rational cur = consider(W);
            ++used;
            bool improved = !rest.empty();
            while (improved && used < iterations) {
                improved = false;
                for (std::size_t i = 0; i < W.size() && used < iterations; ++i)
                    for (std::size_t j = 0; j < rest.size() && used < iterations; ++j) {
                        std::swap(W[i], rest[j]);
                        Rational val = consider(W);
                        ++used;
                        if (val < cur) {
                            cur = val;
                            improved = true;
                        } else {
                            std::swap(W[i], rest[j]);
                        }
                    }
            }
        }
        std::sort(out.worst.begin(), out.worst.end());
    }
    out.worst_density = rat(best_e, best_c);
    out.dense = out.worst_density >= d;
    return out;
}

}  // namespace ramsey
