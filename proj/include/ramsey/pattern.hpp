#pragma once

#include <optional>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/rational.hpp"

namespace ramsey {

/// Subset enumeration over patterns is 2^v; larger patterns are rejected.
inline constexpr int kPatternVertexCap = 10;

void check_pattern_size(const Graph& F, const char* what);

/// (e-1)/(v-2), with the single edge on two vertices defined as 1.
Rational d2(const Graph& F);

struct DensityWitness {
    Rational value;
    std::vector<int> vertices;  // sorted
    std::vector<Edge> edges;    // in the labels of the parent graph
};

/// Maximum d2 over subgraphs with at least one edge, scanning induced subgraphs.
/// Ties resolve to the lexicographically smallest sorted vertex set.
DensityWitness m2(const Graph& F);

struct PatternProfile {
    Graph pattern;
    DensityWitness m2;
    bool balanced = false;
    bool strictly_balanced = false;
    /// Lexicographically first edge e with F - e bipartite, when e(F) >= 2.
    std::optional<Edge> nearly_bipartite_witness;
    Rational threshold_exponent;  // 1/m2

    bool nearly_bipartite() const { return nearly_bipartite_witness.has_value(); }
    /// F minus the witness edge; throws if F is not nearly bipartite.
    Graph bipartite_part() const;
};

PatternProfile classify(const Graph& F);

/// e(B)/v(B).
Rational edge_density(const Graph& B);
/// m(B) <= m2(F): such a B cannot arrow F, as required of a booster.
bool booster_admissible(const Graph& B, const Graph& F);

/// (e(H) - e(H[R])) / (v(H) - |R|).
Rational rooted_density(const std::vector<int>& roots, const Graph& H);

struct RootedWitness {
    Rational value;
    std::vector<int> vertices;  // sorted vertex set S with R strictly inside S
};

/// Maximum rooted density over induced subgraphs H[S] with R a proper subset of S.
RootedWitness mad(const std::vector<int>& roots, const Graph& H);

}  // namespace ramsey
