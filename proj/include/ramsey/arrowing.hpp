#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/counting.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

/// Colour per EdgeId. 0 is red, 1 is blue; further values only with r > 2 colours.
using EdgeColoring = std::vector<std::uint8_t>;

enum class Verdict { Arrows, NotArrows, Undecided };
const char* to_string(Verdict v);

struct ArrowStats {
    std::uint64_t nodes = 0;
    std::uint64_t propagations = 0;
    std::size_t constraints = 0;  // distinct copy edge sets
    std::size_t variables = 0;    // edges lying in at least one copy
    // Filled by decide_arrow_union only.
    std::size_t copies_in_base = 0;
    std::size_t copies_in_addition = 0;
    std::size_t copies_mixed = 0;
};

struct ArrowResult {
    Verdict verdict = Verdict::Undecided;
    std::optional<EdgeColoring> certificate;  // set iff NotArrows
    ArrowStats stats;
};

struct ArrowOptions {
    int colours = 2;
    std::uint64_t node_budget = 20'000'000;
};

struct FreeCheck {
    bool free = true;
    std::optional<Copy> witness;  // first monochromatic copy in enumeration order
};

FreeCheck is_f_free(const EdgeColoring& colouring, const Graph& G, const Graph& F);

/// Exact decision of G -> (F)_r^e by NAE search over the copies of F.
ArrowResult decide_arrow(const Graph& G, const Graph& F, const ArrowOptions& opts = {});

/// Same search on an explicit constraint system: `num_vars` variables, each
/// constraint a set of variables that must not be monochromatic.
ArrowResult solve_nae(std::size_t num_vars, const std::vector<std::vector<std::uint32_t>>& constraints,
                      const ArrowOptions& opts = {});

inline constexpr std::size_t kBruteForceEdgeCap = 24;

/// Tries every 2-colouring of the constrained edges. Independent of the solver.
ArrowResult brute_force_arrow(const Graph& G, const Graph& F);

/// decide_arrow on Z ∪ addition, with the copies split by where their edges lie.
ArrowResult decide_arrow_union(const Graph& Z, const Graph& addition, const Graph& F,
                               const ArrowOptions& opts = {});

/// Two clauses per copy over variables EdgeId+1: a true literal means blue.
std::string to_dimacs(const Graph& G, const Graph& F);

}  // namespace ramsey
