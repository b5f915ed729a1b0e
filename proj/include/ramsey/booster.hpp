#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/arrowing.hpp"
#include "ramsey/counting.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/hypergraph.hpp"
#include "ramsey/random.hpp"
#include "ramsey/rational.hpp"

namespace ramsey {

/// Booster graph with its edges b_1 < ... < b_K in EdgeId order and an F-free colouring.
struct BoosterSpec {
    Graph B;
    EdgeColoring sigma;
};

/// Lexicographically smallest F-free 2-colouring of G (red = 0 < blue = 1), if any.
std::optional<EdgeColoring> first_free_colouring(const Graph& G, const Graph& F);

/// Pairs B with its first F-free colouring; throws when B -> (F)_2^e.
BoosterSpec make_booster(const Graph& B, const Graph& F);

/// Image h(B) in K_n; h[i] is the host vertex of booster vertex i.
Graph embed_booster(const Graph& B, const Embedding& h, int n);

/// A copy of F in Z ∪ h(B) using at least one booster edge.
struct MixedCopy {
    std::vector<EdgeId> z_edges;  // ids in Z, only edges of Z not in h(B)
    std::vector<EdgeId> b_edges;  // ids in B
};

/// Everything the booster predicates need about one embedding, computed once.
struct EmbeddingView {
    Embedding h;
    Graph image;                               // h(B) on n vertices
    std::vector<MixedCopy> copies;
    std::vector<EdgeId> members;               // M(Z, h(B)), sorted
    std::vector<std::vector<EdgeId>> targets;  // per member: booster edges it focuses on
    bool edge_disjoint = true;                 // E(Z) ∩ E(h(B)) empty

    bool regular() const;
    /// Position of z in `members`, if present.
    std::optional<std::size_t> index_of(EdgeId z) const;
};

EmbeddingView analyse_embedding(const Graph& Z, const Embedding& h, const Graph& B, const Graph& F);

struct FocusSet {
    Embedding h;
    std::vector<EdgeId> members;
};

FocusSet focus_set(const Graph& Z, const Embedding& h, const BoosterSpec& spec, const Graph& F);

struct BadFlags {
    bool b1 = false, b2 = false, b3 = false;
    bool bad() const { return b1 || b2 || b3; }
};

BadFlags classify_bad(const EmbeddingView& view);
BadFlags classify_bad(const Graph& Z, const Embedding& h, const BoosterSpec& spec, const Graph& F);

struct PairRelation {
    bool approx = false;  // both edges lie in M(Z, h(B))
    bool sim = false;     // and together they focus on exactly one booster edge
};

PairRelation pair_relations(const EmbeddingView& view, EdgeId e1, EdgeId e2);
PairRelation pair_relations(const Graph& Z, const Embedding& h, const BoosterSpec& spec, const Graph& F, EdgeId e1,
                            EdgeId e2);
/// Number of h in Xi with e1 ≈_h e2.
std::size_t c_xi(const Graph& Z, const std::vector<Embedding>& Xi, const BoosterSpec& spec, const Graph& F,
                 EdgeId e1, EdgeId e2);

/// Profile of a regular embedding: booster EdgeId targeted by each member in order.
std::vector<EdgeId> profile_of(const EmbeddingView& view);

struct EmbeddingCheck {
    Embedding h;
    bool edge_disjoint = false;
    Verdict union_verdict = Verdict::Undecided;
    bool regular = false;
    bool interactive = false;
};

struct InteractiveReport {
    Verdict z_verdict = Verdict::Undecided;
    Verdict b_verdict = Verdict::Undecided;
    std::vector<EmbeddingCheck> per_h;
    bool interactive = false;  // every h interactive (vacuous for empty Xi)
    bool regular = false;
};

InteractiveReport check_interactive_regular(const Graph& Z, const std::vector<Embedding>& Xi, const BoosterSpec& spec,
                                            const Graph& F, const ArrowOptions& opts = {});

/// Canonical embeddings of B into K_n, one per copy, in lexicographic order.
std::vector<Embedding> booster_pool(const Graph& B, int n);
/// `size` distinct copies drawn uniformly (fewer if the pool is smaller), sorted.
std::vector<Embedding> sampled_booster_pool(const Graph& B, int n, std::size_t size, Seed seed);

struct PipelineParams {
    Rational D{1};
    Rational delta{1, 12};
    double p = 0.5;
    std::optional<std::size_t> selection_count;  // default max(1, ceil(2 alpha_tilde n^2))
    std::optional<std::size_t> pool_size;        // sampled pool; full pool when unset
    bool arrow_filter = true;
    ArrowOptions arrow;
};

struct PipelineReport {
    Verdict z_verdict = Verdict::Undecided;
    bool z_arrows_alone = false;
    bool arrow_filter = true;
    bool pool_sampled = false;
    std::size_t pool = 0, psi1 = 0, psi2 = 0, psi3 = 0, psi4 = 0, after_cap = 0, after_overlap = 0, xi0 = 0;
    std::size_t selection_target = 0;
    std::size_t selection_draws = 0;
    bool selection_truncated = false;
    double heavy_threshold = 0;  // D / (p n^delta)
    double pair_cap = 0;         // 1 / (p n^(delta/2))
    std::map<std::string, std::size_t> removals;
    std::optional<std::string> starved_stage;
};

struct NormalFamily {
    std::vector<Embedding> xi0;
    PipelineReport report;
};

NormalFamily construct_normal_family(const Graph& Z, const BoosterSpec& spec, const Graph& F,
                                     const PipelineParams& params, Seed seed);

struct IndexConsistentFamily {
    std::vector<Embedding> xi;
    std::vector<EdgeId> profile;  // empty when xi is empty
    std::size_t dropped_long = 0;   // l_h > L
    std::size_t dropped_empty = 0;  // l_h = 0
    std::size_t profile_class = 0;  // size of the majority profile class
    std::vector<int> partition;     // class of each Z edge
    std::string note;
};

IndexConsistentFamily restrict_index_consistent(const Graph& Z, const std::vector<Embedding>& Xi0,
                                                const BoosterSpec& spec, const Graph& F, std::size_t L, Seed seed);

/// Every h has `profile` and each shared focus edge has the same index everywhere.
bool is_index_consistent(const Graph& Z, const std::vector<Embedding>& Xi, const BoosterSpec& spec, const Graph& F,
                         const std::vector<EdgeId>& profile);

/// Edges z of Z for which some h in Xi has z focusing on h(b) with phi(z) = sigma(b).
std::vector<EdgeId> activated_set(const Graph& Z, const std::vector<Embedding>& Xi, const BoosterSpec& spec,
                                  const Graph& F, const EdgeColoring& phi);

/// H(Z, Xi): vertices E(Z), one hyperedge M(Z, h(B)) per h (duplicates merged).
Hypergraph booster_hypergraph(const Graph& Z, const std::vector<Embedding>& Xi, const BoosterSpec& spec,
                              const Graph& F);

}  // namespace ramsey
