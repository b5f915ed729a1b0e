#include "ramsey/regularity.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "ramsey/counting.hpp"

namespace ramsey {

namespace {

void check_pair(const Graph& H, const VertexSet& X, const VertexSet& Y) {
    if (X.empty() || Y.empty()) throw std::invalid_argument("vertex sets must be nonempty");
    std::vector<char> seen(H.order(), 0);
    for (int x : X) {
        if (x < 0 || x >= H.order()) throw std::invalid_argument("vertex out of range");
        if (seen[x]) throw std::invalid_argument("repeated vertex " + std::to_string(x));
        seen[x] = 1;
    }
    for (int y : Y) {
        if (y < 0 || y >= H.order()) throw std::invalid_argument("vertex out of range");
        if (seen[y]) throw std::invalid_argument("vertex sets overlap at " + std::to_string(y));
        seen[y] = 2;
    }
}

long min_size(const Rational& eps, std::size_t n) {
    BigInt c = ceil(eps * static_cast<long>(n));
    return std::max<long>(1, c.get_si());
}

}  // namespace

Rational pair_density(const Graph& H, const Rational& p, const VertexSet& X, const VertexSet& Y) {
    if (p <= 0) throw std::invalid_argument("p must be positive");
    check_pair(H, X, Y);
    Rational d(static_cast<long>(edge_count_between(H, X, Y)));
    d /= p * static_cast<long>(X.size()) * static_cast<long>(Y.size());
    d.canonicalize();
    return d;
}

RegularityCheck is_eps_p_regular(const Graph& H, const Rational& p, const VertexSet& X, const VertexSet& Y,
                                 const Rational& eps, RegularityMode mode, Seed seed, std::uint64_t samples) {
    if (eps <= 0) throw std::invalid_argument("eps must be positive");
    RegularityCheck out;
    out.density = pair_density(H, p, X, Y);
    const long xmin = min_size(eps, X.size()), ymin = min_size(eps, Y.size());
    auto record = [&](VertexSet xs, VertexSet ys, long e) {
        ++out.pairs_checked;
        Rational d(e);
        d /= p * static_cast<long>(xs.size()) * static_cast<long>(ys.size());
        d.canonicalize();
        Rational dev = abs(d - out.density);
        if (dev >= eps) out.regular = false;
        if (!out.worst || dev > out.worst->deviation) {
            std::sort(xs.begin(), xs.end());
            std::sort(ys.begin(), ys.end());
            out.worst = RegularityWitness{std::move(xs), std::move(ys), d, dev};
        }
    };
    if (mode == RegularityMode::Exact) {
        if (X.size() > kRegularityExactCap || Y.size() > kRegularityExactCap)
            throw std::invalid_argument("exact regularity check is capped at 16 vertices per side");
        out.certified = true;
        const std::size_t nx = X.size(), ny = Y.size();
        std::vector<std::pair<int, int>> deg(ny);  // (degree into X', index in Y)
        for (std::uint32_t mask = 1; mask < (1u << nx); ++mask) {
            if (std::popcount(mask) < xmin) continue;
            VertexSet xs;
            for (std::size_t i = 0; i < nx; ++i)
                if (mask >> i & 1) xs.push_back(X[i]);
            for (std::size_t j = 0; j < ny; ++j) {
                int c = 0;
                for (int x : xs) c += H.adjacent(x, Y[j]);
                deg[j] = {c, static_cast<int>(j)};
            }
            std::sort(deg.begin(), deg.end());
            long low = 0, high = 0;
            for (std::size_t t = 1; t <= ny; ++t) {
                low += deg[t - 1].first;
                high += deg[ny - t].first;
                if (static_cast<long>(t) < ymin) continue;
                VertexSet lo_set, hi_set;
                for (std::size_t i = 0; i < t; ++i) {
                    lo_set.push_back(Y[deg[i].second]);
                    hi_set.push_back(Y[deg[ny - 1 - i].second]);
                }
                record(xs, std::move(lo_set), low);
                record(xs, std::move(hi_set), high);
            }
        }
        return out;
    }
    Rng rng(seed);
    auto draw = [&](const VertexSet& S, long lo) {
        long k = lo + static_cast<long>(rng.below(static_cast<std::uint64_t>(static_cast<long>(S.size()) - lo + 1)));
        VertexSet pool = S;
        for (long i = 0; i < k; ++i) {
            auto j = i + static_cast<long>(rng.below(static_cast<std::uint64_t>(static_cast<long>(pool.size()) - i)));
            std::swap(pool[i], pool[j]);
        }
        pool.resize(k);
        return pool;
    };
    for (std::uint64_t s = 0; s < samples; ++s) {
        auto xs = draw(X, xmin);
        auto ys = draw(Y, ymin);
        long e = static_cast<long>(edge_count_between(H, xs, ys));
        record(std::move(xs), std::move(ys), e);
    }
    return out;
}

ReducedGraph reduced_graph(const Graph& H, const Rational& p, const Partition& partition, const Rational& d,
                           const Rational& eps, RegularityMode mode, Seed seed) {
    const int t = static_cast<int>(partition.size());
    std::vector<Edge> edges;
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
            auto chk = is_eps_p_regular(H, p, partition[i], partition[j], eps, mode,
                                        seed.child(static_cast<std::uint64_t>(i) * t + j));
            if (chk.regular && chk.density >= d) edges.push_back({i, j});
        }
    return ReducedGraph{partition, d, eps, p, Graph(t, std::move(edges))};
}

namespace {

std::uint64_t partite_count(const Graph& Fp, const Partition& classes, const Graph& H) {
    const int k = Fp.order();
    std::vector<int> order, placed(k, 0);
    // Most-connected-first, as in the copy engine.
    for (int step = 0; step < k; ++step) {
        int best = -1, links = -1;
        for (int x = 0; x < k; ++x) {
            if (placed[x]) continue;
            int l = 0;
            for (int y : order) l += Fp.adjacent(x, y);
            if (l > links) {
                links = l;
                best = x;
            }
        }
        placed[best] = 1;
        order.push_back(best);
    }
    std::vector<int> map(k, -1);
    std::uint64_t count = 0;
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == k) {
            ++count;
            return;
        }
        int x = order[depth];
        for (int h : classes[x]) {
            bool ok = true;
            for (int i = 0; i < depth && ok; ++i) {
                int y = order[i];
                if (Fp.adjacent(x, y) && !H.adjacent(h, map[y])) ok = false;
            }
            if (!ok) continue;
            map[x] = h;
            self(self, depth + 1);
        }
        map[x] = -1;
    };
    rec(rec, 0);
    return count;
}

}  // namespace

CountingReport counting_lemma_check(const Graph& Fp, const Partition& classes, const Graph& H, const Rational& p,
                                    const Rational& xi, std::optional<PairClaim> verify) {
    if (static_cast<int>(classes.size()) != Fp.order())
        throw std::invalid_argument("need one class per pattern vertex: have " + std::to_string(classes.size()) +
                                    ", pattern has " + std::to_string(Fp.order()));
    if (p <= 0) throw std::invalid_argument("p must be positive");
    std::vector<char> seen(H.order(), 0);
    for (const auto& c : classes)
        for (int v : c) {
            if (v < 0 || v >= H.order()) throw std::invalid_argument("vertex out of range");
            if (seen[v]) throw std::invalid_argument("classes overlap at " + std::to_string(v));
            seen[v] = 1;
        }
    CountingReport rep;
    rep.partite_copies = partite_count(Fp, classes, H);
    Rational bound = xi * pow(p, Fp.size());
    for (const auto& c : classes) bound *= static_cast<long>(c.size());
    rep.bound = bound;
    rep.meets_bound = Rational(static_cast<unsigned long>(rep.partite_copies)) >= bound;
    rep.ratio = bound == 0 ? (rep.partite_copies > 0 ? INFINITY : 0.0)
                           : static_cast<double>(rep.partite_copies) / to_double(bound);
    if (verify) {
        bool ok = true;
        for (const auto& e : Fp.edges()) {
            auto chk = is_eps_p_regular(H, p, classes[e.u], classes[e.v], verify->eps, RegularityMode::Sampled,
                                        verify->seed.child(static_cast<std::uint64_t>(e.u) * Fp.order() + e.v), 2000);
            ok = ok && chk.regular && chk.density >= verify->d;
        }
        rep.pairs_verified = ok;
    }
    return rep;
}

OverlapCount fstar_overlap_count(const Graph& Fstar, int a1, int a2, const Graph& G, const VertexSet& W, double p) {
    check_pattern_size(Fstar, "overlap count");
    if (a1 < 0 || a2 < 0 || a1 >= Fstar.order() || a2 >= Fstar.order() || a1 == a2)
        throw std::invalid_argument("marked vertices must be two distinct pattern vertices");
    if (Fstar.adjacent(a1, a2)) throw std::invalid_argument("marked vertices must not be adjacent");
    OverlapCount out;
    out.expected_bound = 2 * std::pow(p, static_cast<double>(Fstar.size())) *
                         std::pow(static_cast<double>(G.order()), Fstar.order() - 2) *
                         static_cast<double>(W.size() * W.size());
    if (W.size() < 2 || Fstar.order() > G.order()) return out;
    std::vector<char> inW(G.order(), 0);
    for (int w : W) {
        if (w < 0 || w >= G.order()) throw std::invalid_argument("vertex out of range");
        if (inW[w]) throw std::invalid_argument("repeated vertex in W");
        inW[w] = 1;
    }
    std::uint64_t labelled = 0;
    for (int w1 : W)
        for (int w2 : W) {
            if (w1 == w2) continue;
            for_each_embedding(Fstar, G, {{a1, w1}, {a2, w2}}, [&](const Embedding& emb) {
                for (int x = 0; x < Fstar.order(); ++x)
                    if (x != a1 && x != a2 && inW[emb[x]]) return true;
                ++labelled;
                return true;
            });
        }
    std::uint64_t stab = 0;
    for (const auto& s : automorphisms(Fstar))
        stab += (s[a1] == a1 && s[a2] == a2) || (s[a1] == a2 && s[a2] == a1);
    out.copies = labelled / stab;
    return out;
}

}  // namespace ramsey
