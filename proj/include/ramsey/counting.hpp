#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/pattern.hpp"
#include "ramsey/random.hpp"
#include "ramsey/rational.hpp"

namespace ramsey {

/// Pattern vertex i maps to host vertex map[i].
using Embedding = std::vector<int>;

/// Restricts enumeration to copies whose image contains a host edge, or both
/// vertices of a host pair (which need not be an edge).
struct Anchor {
    enum class Kind { Edge, Vertices };
    int u = 0;
    int v = 0;
    Kind kind = Kind::Edge;

    static Anchor edge(int a, int b) { return {a, b, Kind::Edge}; }
    static Anchor vertices(int a, int b) { return {a, b, Kind::Vertices}; }
};

/// Calls `visit` for every injective edge-preserving map F -> G (labelled,
/// not deduplicated). Pre-assigned pattern vertices are fixed before the search.
/// Returning false from `visit` stops the enumeration.
void for_each_embedding(const Graph& F, const Graph& G, const std::vector<std::pair<int, int>>& fixed,
                        const std::function<bool(const Embedding&)>& visit);

/// Automorphisms of F as permutations.
std::vector<Embedding> automorphisms(const Graph& F);
bool isomorphic(const Graph& a, const Graph& b);

/// One unlabelled copy: a canonical embedding and the host edge ids it covers.
struct Copy {
    Embedding map;
    std::vector<EdgeId> edges;  // sorted

    std::vector<int> vertex_set() const;  // sorted
    bool operator==(const Copy&) const = default;
};

struct CopyFamily {
    Graph pattern;
    Graph host;
    std::vector<Copy> copies;  // sorted by (edges, vertex set)
};

/// Unlabelled copies of F in G. Two labelled embeddings are the same copy iff
/// they have the same image subgraph (vertex set and edge set), i.e. differ by
/// an automorphism of F; the lexicographically smallest map is kept.
CopyFamily enumerate_copies(const Graph& F, const Graph& G, std::optional<Anchor> anchor = std::nullopt);
std::size_t count_copies(const Graph& F, const Graph& G, std::optional<Anchor> anchor = std::nullopt);

/// Spanning subgraphs F - f, one representative per isomorphism class.
std::vector<Graph> f_minus_members(const Graph& F);
/// Spanning subgraphs F - f - g, one representative per isomorphism class.
std::vector<Graph> f_minus2_members(const Graph& F);

std::size_t count_f_minus(const Graph& F, const Graph& Z);
/// Copies of members of the F-minus family that contain the edge e of Z.
std::size_t count_f_minus_through(const Graph& F, const Graph& Z, Edge e);
/// Every copy of a member, tagged with the member index.
std::vector<std::pair<std::size_t, Copy>> f_minus_copies(const Graph& F, const Graph& Z,
                                                         std::optional<Anchor> anchor = std::nullopt);

/// A subgraph of the host, kept as vertex set and edge list.
struct SubgraphRef {
    std::vector<int> vertices;  // sorted
    std::vector<Edge> edges;    // sorted
    auto operator<=>(const SubgraphRef&) const = default;
};

struct PPair {
    SubgraphRef first;
    SubgraphRef second;
    int s = 0;                            // |V(F1) ∩ V(F2)|
    std::vector<Edge> connecting_pairs;   // all {x1,x2} that complete both sides
};

/// Ordered pairs (F1, F2) of edge-disjoint doubly-edge-deleted copies of F in Z,
/// sharing at least two vertices, with some pair {x1,x2} in the intersection
/// such that F1 + x1x2 + e1 and F2 + x1x2 + e2 are both copies of F.
/// e1 and e2 are vertex pairs and need not be edges of Z.
std::vector<PPair> enumerate_P(const Graph& F, const Graph& Z, Edge e1, Edge e2);
/// |P(Z,e1,e2)| with the result split by s; index s of the vector holds |P_s|.
std::vector<std::size_t> count_P_by_s(const Graph& F, const Graph& Z, Edge e1, Edge e2);

/// Precomputed per-pair candidate lists for evaluating |P(Z,e1,e2)| over many pairs.
class PCounter {
public:
    PCounter(const Graph& F, const Graph& Z);
    std::size_t count(Edge e1, Edge e2) const;

private:
    struct Candidate {
        std::vector<int> vertices;
        std::vector<EdgeId> edges;
        std::vector<std::uint32_t> completions;  // encoded pairs x1*n+x2
    };
    const std::vector<Candidate>& candidates(Edge e) const;

    Graph F_;
    Graph Z_;
    std::vector<Graph> members_;
    // Completing pattern pairs per member, indexed [member][a*v+b] for the anchor pair (a,b).
    std::vector<std::vector<std::vector<std::pair<int, int>>>> completions_;
    mutable std::map<Edge, std::vector<Candidate>> cache_;
};

/// Number of ordered (R,H)-extensions of the host roots in G.
std::uint64_t extension_count(const std::vector<int>& roots, const Graph& H, const std::vector<int>& host_roots,
                              const Graph& G);

/// Pairs {x,y} such that some copy of the bipartite part F' in G' plus {x,y} is a copy of F.
Graph base_graph(const PatternProfile& F, const Graph& Gp);

struct TCheck {
    bool below_density_floor = false;  // e(G') < lambda e(G): quantifier does not apply
    std::size_t sub_edges = 0;
    std::size_t copies_in_base = 0;
    Rational required;                 // eta * n^v(F)
    bool pass = false;
};

TCheck check_T(const PatternProfile& F, const Graph& G, const Graph& Gp, const Rational& lambda,
               const Rational& eta);

struct TSearchResult {
    Graph worst;
    TCheck check;
    bool exhaustive = false;
    std::uint64_t evaluations = 0;
};

/// Looks for a subgraph with at least lambda e(G) edges whose basegraph has few
/// copies of F. Exhaustive when the number of minimum-size subgraphs is at most
/// `budget`, otherwise randomized greedy deletion followed by swap moves.
/// A refuter only: a passing result says nothing about unexplored subgraphs.
TSearchResult adversarial_T_search(const PatternProfile& F, const Graph& G, const Rational& lambda,
                                   const Rational& eta, std::uint64_t budget, Seed seed);

enum class SearchMode { Exact, Heuristic };

struct DenseCheck {
    bool dense = true;
    bool exhaustive = false;
    std::vector<int> worst;      // set minimising e(W)/C(|W|,2)
    Rational worst_density;      // e(W)/C(|W|,2), or 1 if nothing was checked
    std::uint64_t sets_checked = 0;
};

inline constexpr int kDenseExactCap = 20;

/// Every W with |W| >= rho v(G0) and |W| >= 2 spans at least d C(|W|,2) edges.
DenseCheck rho_d_dense_check(const Graph& G0, const Rational& rho, const Rational& d, SearchMode mode, Seed seed,
                             std::uint64_t iterations = 20000);

}  // namespace ramsey
