#include "ramsey/pattern.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ramsey {

void check_pattern_size(const Graph& F, const char* what) {
    if (F.order() > kPatternVertexCap)
        throw std::invalid_argument(std::string(what) + ": pattern has " + std::to_string(F.order()) +
                                    " vertices, cap is " + std::to_string(kPatternVertexCap));
}

Rational d2(const Graph& F) {
    if (F.empty()) throw std::invalid_argument("d2 of an edgeless graph");
    if (F.order() == 2) return rat(1);
    return rat(static_cast<long>(F.size()) - 1, F.order() - 2);
}

namespace {

std::vector<int> members(unsigned mask, int n) {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (mask >> v & 1) out.push_back(v);
    return out;
}

std::vector<Edge> induced_edges(const Graph& F, unsigned mask) {
    std::vector<Edge> out;
    for (const auto& e : F.edges())
        if ((mask >> e.u & 1) && (mask >> e.v & 1)) out.push_back(e);
    return out;
}

// d2 of the induced subgraph on `mask`, or nullopt if it has no edge.
std::optional<Rational> induced_d2(const Graph& F, unsigned mask) {
    auto es = induced_edges(F, mask);
    if (es.empty()) return std::nullopt;
    int v = std::popcount(mask);
    if (v == 2) return rat(1);
    return rat(static_cast<long>(es.size()) - 1, v - 2);
}

}  // namespace

DensityWitness m2(const Graph& F) {
    check_pattern_size(F, "m2");
    if (F.empty()) throw std::invalid_argument("m2 of an edgeless graph");
    const int n = F.order();
    std::optional<DensityWitness> best;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        auto d = induced_d2(F, mask);
        if (!d) continue;
        auto vs = members(mask, n);
        if (!best || *d > best->value || (*d == best->value && vs < best->vertices))
            best = DensityWitness{*d, vs, induced_edges(F, mask)};
    }
    return *best;
}

Graph PatternProfile::bipartite_part() const {
    if (!nearly_bipartite_witness) throw std::invalid_argument("pattern is not nearly bipartite");
    return pattern.without_edge(*pattern.edge_id(nearly_bipartite_witness->u, nearly_bipartite_witness->v));
}

PatternProfile classify(const Graph& F) {
    PatternProfile prof;
    prof.pattern = F;
    prof.m2 = m2(F);
    const int n = F.order();
    const unsigned full = (1u << n) - 1;
    prof.balanced = d2(F) == prof.m2.value;
    // Dropping edges at a fixed vertex set only lowers d2, so proper subgraphs
    // are dominated by induced subgraphs on proper vertex subsets.
    prof.strictly_balanced = prof.balanced;
    for (unsigned mask = 1; mask < full && prof.strictly_balanced; ++mask) {
        auto d = induced_d2(F, mask);
        if (d && *d >= prof.m2.value) prof.strictly_balanced = false;
    }
    if (F.size() >= 2)
        for (EdgeId id = 0; id < F.size(); ++id)
            if (is_bipartite(F.without_edge(id))) {
                prof.nearly_bipartite_witness = F.edge(id);
                break;
            }
    prof.threshold_exponent = 1 / prof.m2.value;
    return prof;
}

Rational edge_density(const Graph& B) {
    if (B.order() < 1) throw std::invalid_argument("edge density of the empty vertex set");
    return rat(static_cast<long>(B.size()), B.order());
}

bool booster_admissible(const Graph& B, const Graph& F) { return edge_density(B) <= m2(F).value; }

namespace {

std::vector<int> checked_roots(const std::vector<int>& roots, const Graph& H) {
    std::vector<int> r = roots;
    std::sort(r.begin(), r.end());
    if (std::adjacent_find(r.begin(), r.end()) != r.end()) throw std::invalid_argument("repeated root");
    for (int x : r)
        if (x < 0 || x >= H.order()) throw std::invalid_argument("root out of range");
    if (static_cast<int>(r.size()) >= H.order()) throw std::invalid_argument("roots must be a proper subset of V(H)");
    return r;
}

}  // namespace

Rational rooted_density(const std::vector<int>& roots, const Graph& H) {
    auto r = checked_roots(roots, H);
    long inside = static_cast<long>(H.induced_edge_count(r));
    return rat(static_cast<long>(H.size()) - inside, H.order() - static_cast<long>(r.size()));
}

RootedWitness mad(const std::vector<int>& roots, const Graph& H) {
    check_pattern_size(H, "mad");
    auto r = checked_roots(roots, H);
    const int n = H.order();
    unsigned root_mask = 0;
    for (int x : r) root_mask |= 1u << x;
    long root_edges = static_cast<long>(H.induced_edge_count(r));
    std::optional<RootedWitness> best;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if ((mask & root_mask) != root_mask || mask == root_mask) continue;
        auto vs = members(mask, n);
        Rational d = rat(static_cast<long>(H.induced_edge_count(vs)) - root_edges,
                         static_cast<long>(vs.size() - r.size()));
        if (!best || d > best->value || (d == best->value && vs < best->vertices)) best = RootedWitness{d, vs};
    }
    return *best;
}

}  // namespace ramsey
