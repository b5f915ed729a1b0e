#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/random.hpp"
#include "ramsey/rational.hpp"

namespace ramsey {

using VertexSet = std::vector<int>;
using Partition = std::vector<VertexSet>;

/// e(X,Y) / (p |X| |Y|).
Rational pair_density(const Graph& H, const Rational& p, const VertexSet& X, const VertexSet& Y);

enum class RegularityMode { Exact, Sampled };

inline constexpr std::size_t kRegularityExactCap = 16;

struct RegularityWitness {
    VertexSet X, Y;
    Rational density;
    Rational deviation;  // |d(X',Y') - d(X,Y)|
};

struct RegularityCheck {
    bool regular = true;    // in sampled mode: no violation found
    bool certified = false; // true only for exact mode
    Rational density;
    std::optional<RegularityWitness> worst;  // largest deviation seen
    std::uint64_t pairs_checked = 0;
};

/// Checks |d(X',Y') - d(X,Y)| < eps over sub-pairs with |X'| >= eps|X|, |Y'| >= eps|Y|.
/// Exact mode visits every X' and, for each size of Y', only the extremal Y'
/// (top or bottom degrees into X'), which bound every other choice.
RegularityCheck is_eps_p_regular(const Graph& H, const Rational& p, const VertexSet& X, const VertexSet& Y,
                                 const Rational& eps, RegularityMode mode, Seed seed,
                                 std::uint64_t samples = 10000);

struct ReducedGraph {
    Partition partition;
    Rational d, eps, p;
    Graph graph;  // on class indices
};

ReducedGraph reduced_graph(const Graph& H, const Rational& p, const Partition& partition, const Rational& d,
                           const Rational& eps, RegularityMode mode, Seed seed);

struct CountingReport {
    std::uint64_t partite_copies = 0;
    Rational bound;        // xi p^e(F) prod |V_i|
    double ratio = 0;      // copies / bound
    bool meets_bound = false;
    // Filled when pair verification was requested.
    std::optional<bool> pairs_verified;
};

struct PairClaim {
    Rational d, eps;
    Seed seed;
};

/// Maps with pattern vertex i into classes[i] and every edge of F' to an edge of H.
CountingReport counting_lemma_check(const Graph& Fp, const Partition& classes, const Graph& H, const Rational& p,
                                    const Rational& xi, std::optional<PairClaim> verify = std::nullopt);

struct OverlapCount {
    std::uint64_t copies = 0;
    double expected_bound = 0;  // 2 p^e n^(v-2) |W|^2
};

/// Copies of F* (modulo automorphisms fixing {a1,a2}) meeting W in exactly the images of a1, a2.
OverlapCount fstar_overlap_count(const Graph& Fstar, int a1, int a2, const Graph& G, const VertexSet& W, double p);

}  // namespace ramsey
