#include "ramsey/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace ramsey {

bool Hypergraph::uniform() const {
    for (const auto& e : edges)
        if (e.size() != edges.front().size()) return false;
    return true;
}

int Hypergraph::rank() const {
    if (!uniform()) throw std::invalid_argument("hypergraph is not uniform");
    return edges.empty() ? 0 : static_cast<int>(edges.front().size());
}

Hypergraph make_hypergraph(int m, std::vector<std::vector<int>> edges) {
    if (m < 0) throw std::invalid_argument("negative vertex count");
    for (auto& e : edges) {
        if (e.empty()) throw std::invalid_argument("empty hyperedge");
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw std::invalid_argument("repeated vertex in hyperedge");
        if (e.front() < 0 || e.back() >= m) throw std::invalid_argument("hyperedge vertex out of range");
    }
    std::sort(edges.begin(), edges.end());
    const std::size_t before = edges.size();
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    const std::size_t merged = before - edges.size();
    return Hypergraph{m, std::move(edges), merged};
}

namespace {

bool includes(const std::vector<int>& big, const std::vector<int>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

HypergraphStats hypergraph_stats(const Hypergraph& H, const Rational& tau) {
    if (tau <= 0) throw std::invalid_argument("tau must be positive");
    HypergraphStats s;
    s.m = H.m;
    s.e = H.edges.size();
    s.ell = H.rank();
    if (s.e == 0 || s.m == 0) throw std::invalid_argument("zero average degree");
    s.d = Rational(static_cast<long>(s.ell) * static_cast<long>(s.e), s.m);
    s.d.canonicalize();

    std::vector<std::vector<std::size_t>> incident(H.m);
    for (std::size_t i = 0; i < H.edges.size(); ++i)
        for (int v : H.edges[i]) incident[v].push_back(i);
    for (int v = 0; v < H.m; ++v) s.Delta1 = std::max<std::uint64_t>(s.Delta1, incident[v].size());
    // Codegree of {v,w}: edges through v that also hold w.
    for (int v = 0; v < H.m; ++v) {
        std::vector<std::uint64_t> co(H.m, 0);
        for (auto i : incident[v])
            for (int w : H.edges[i])
                if (w > v) s.Delta2 = std::max(s.Delta2, ++co[w]);
    }

    s.dj_sum.assign(s.ell + 1, 0);
    s.delta_j.assign(s.ell + 1, Rational(0));
    // d^(j)(v) is attained by a j-set inside some edge through v (else it is 0).
    for (int v = 0; v < H.m; ++v) {
        std::vector<std::uint64_t> best(s.ell + 1, 0);
        for (auto i : incident[v]) {
            std::vector<int> rest;
            for (int w : H.edges[i])
                if (w != v) rest.push_back(w);
            const int r = static_cast<int>(rest.size());
            for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
                int j = std::popcount(mask) + 1;
                if (j < 2) continue;
                std::vector<int> sigma{v};
                for (int t = 0; t < r; ++t)
                    if (mask >> t & 1) sigma.push_back(rest[t]);
                std::sort(sigma.begin(), sigma.end());
                std::uint64_t deg = 0;
                for (auto k : incident[v]) deg += includes(H.edges[k], sigma);
                best[j] = std::max(best[j], deg);
            }
        }
        for (int j = 2; j <= s.ell; ++j) s.dj_sum[j] += best[j];
    }
    s.delta = 0;
    for (int j = 2; j <= s.ell; ++j) {
        Rational denom = pow(tau, static_cast<unsigned long>(j - 1)) * s.m * s.d;
        s.delta_j[j] = Rational(BigInt(std::to_string(s.dj_sum[j]))) / denom;
        Rational w = pow(Rational(1, 2), static_cast<unsigned long>((j - 1) * (j - 2) / 2));
        s.delta += w * s.delta_j[j];
    }
    const long e2 = static_cast<long>(s.ell) * (s.ell - 1) / 2 - 1;
    s.delta *= e2 >= 0 ? pow(Rational(2), static_cast<unsigned long>(e2)) : Rational(1, 2);
    return s;
}

std::vector<int> mask_members(std::uint32_t mask) {
    std::vector<int> out;
    for (; mask; mask &= mask - 1) out.push_back(std::countr_zero(mask));
    return out;
}

namespace {

std::vector<std::uint32_t> edge_masks(const Hypergraph& H) {
    if (H.m > kCoreVertexCap)
        throw std::invalid_argument("exhaustive core search is capped at " + std::to_string(kCoreVertexCap) +
                                    " vertices");
    std::vector<std::uint32_t> out;
    for (const auto& e : H.edges) {
        std::uint32_t m = 0;
        for (int v : e) m |= 1u << v;
        out.push_back(m);
    }
    return out;
}

bool independent(std::uint32_t set, const std::vector<std::uint32_t>& edges) {
    for (auto e : edges)
        if ((e & set) == e) return false;
    return true;
}

bool hitting(std::uint32_t set, const std::vector<std::uint32_t>& edges) {
    for (auto e : edges)
        if ((e & set) == 0) return false;
    return true;
}

}  // namespace

CoreFamily brute_force_cores(const Hypergraph& H) {
    auto edges = edge_masks(H);
    const std::uint32_t full = H.m == 32 ? ~0u : (1u << H.m) - 1;
    CoreFamily out;
    for (std::uint32_t s = 0;; ++s) {
        if (independent(s, edges)) {
            bool maximal = true;
            for (std::uint32_t rest = full & ~s; rest && maximal; rest &= rest - 1)
                if (independent(s | (rest & -rest), edges)) maximal = false;
            if (maximal) {
                out.containers.push_back(s);
                out.cores.push_back(full & ~s);
            }
        }
        if (s == full) break;
    }
    return out;
}

CoreReport verify_core_properties(const Hypergraph& H, const CoreFamily& C, const Rational& beta,
                                  const Rational& gamma) {
    auto edges = edge_masks(H);
    const std::uint32_t full = (1u << H.m) - 1;
    CoreReport r;
    r.cores = C.cores.size();
    r.min_core_size = H.m;
    for (auto c : C.cores) r.min_core_size = std::min<std::size_t>(r.min_core_size, std::popcount(c));
    r.size_bound_holds = Rational(static_cast<long>(r.min_core_size)) >= beta * H.m;
    r.log_count = r.cores ? std::log(static_cast<double>(r.cores)) : 0.0;
    r.count_bound = std::pow(static_cast<double>(H.m), 1.0 - to_double(gamma));
    r.count_bound_holds = r.log_count <= r.count_bound;
    for (auto j : C.containers) {
        std::size_t inside = 0;
        for (auto e : edges) inside += (e & j) == e;
        r.max_container_edges = std::max(r.max_container_edges, inside);
    }
    for (std::uint32_t s = 0;; ++s) {
        if (hitting(s, edges)) {
            bool minimal = true;
            for (std::uint32_t t = s; t && minimal; t &= t - 1)
                if (hitting(s & ~(t & -t), edges)) minimal = false;
            if (minimal) {
                ++r.minimal_hitting_sets;
                bool covered = std::any_of(C.cores.begin(), C.cores.end(), [&](std::uint32_t c) { return (c & s) == c; });
                r.uncovered_hitting_sets += !covered;
            }
        }
        if (s == full) break;
    }
    return r;
}

}  // namespace ramsey
