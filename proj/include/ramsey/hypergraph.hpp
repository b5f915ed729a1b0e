#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ramsey/rational.hpp"

namespace ramsey {

/// Hypergraph on vertices 0..m-1. Hyperedges are sorted vertex lists, kept as
/// a set: identical hyperedges are merged and counted in `merged_duplicates`.
struct Hypergraph {
    int m = 0;
    std::vector<std::vector<int>> edges;  // sorted, lexicographic order
    std::size_t merged_duplicates = 0;

    bool uniform() const;
    /// Common edge size; 0 when there are no edges. Throws if not uniform.
    int rank() const;
};

Hypergraph make_hypergraph(int m, std::vector<std::vector<int>> edges);

struct HypergraphStats {
    int m = 0;
    std::size_t e = 0;
    int ell = 0;
    Rational d;                      // ell e / m
    std::uint64_t Delta1 = 0;        // max vertex degree
    std::uint64_t Delta2 = 0;        // max pair codegree
    std::vector<std::uint64_t> dj_sum;  // index j: sum over v of d^(j)(v), for 2 <= j <= ell
    std::vector<Rational> delta_j;   // index j, for 2 <= j <= ell
    Rational delta;                  // delta(H, tau)
};

/// Container statistics for an ell-uniform hypergraph. tau > 0; requires d > 0.
HypergraphStats hypergraph_stats(const Hypergraph& H, const Rational& tau);

inline constexpr int kCoreVertexCap = 20;

struct CoreFamily {
    std::vector<std::uint32_t> containers;  // maximal independent sets, as bit masks
    std::vector<std::uint32_t> cores;       // complements, same order
};

/// Containers are the maximal independent sets; cores their complements.
CoreFamily brute_force_cores(const Hypergraph& H);

struct CoreReport {
    std::size_t cores = 0;
    std::size_t min_core_size = 0;
    bool size_bound_holds = false;   // |C| >= beta m for all C
    double log_count = 0;            // log |C|
    double count_bound = 0;          // m^(1-gamma)
    bool count_bound_holds = false;
    std::uint64_t minimal_hitting_sets = 0;
    std::uint64_t uncovered_hitting_sets = 0;  // minimal hitting sets containing no core
    std::size_t max_container_edges = 0;       // e(H[J]) over containers
};

CoreReport verify_core_properties(const Hypergraph& H, const CoreFamily& C, const Rational& beta, const Rational& gamma);

std::vector<int> mask_members(std::uint32_t mask);

}  // namespace ramsey
