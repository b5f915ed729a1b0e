#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/rational.hpp"

namespace ramsey {

/// A rational that may be too large to materialise. `log10` and `formula` are always set.
struct HugeRational {
    std::optional<Rational> exact;
    double log10 = 0;
    std::string formula;
};

struct ConstantInputs {
    Graph F;
    std::optional<int> booster_vertices;
    std::optional<int> booster_edges;  // K = e(B)
    std::optional<int> ell;            // focus-set length, for the tau exponent
    // Imported constants; each one only feeds the values that use it.
    std::optional<Rational> D, C0, C1, lambda, rho, c0, xi_cl, eps_cl, T0;
    // Passed through untouched.
    std::optional<Rational> zeta, gamma_prime, alpha;
    /// alpha' is computed exactly only when its estimated size stays below this many bits.
    std::size_t exact_bit_cap = std::size_t{1} << 25;
};

struct ConstantChain {
    Rational m2;
    bool strictly_balanced = false;
    bool nearly_bipartite = false;

    Rational delta;  // 1/6 min{1/m2, 1 - 1/m2}
    std::optional<Rational> alpha_tilde;
    std::optional<BigInt> L;
    std::optional<BigInt> K;
    std::optional<HugeRational> alpha_prime;
    std::optional<BigInt> k;
    std::optional<HugeRational> beta;
    std::optional<Rational> gamma;
    Rational eps_container{1, 4};
    std::string tau_formula;
    std::optional<Rational> tau_exponent;  // tau = n^tau_exponent

    std::optional<int> a, b;
    std::optional<Rational> C0_prime, d, gamma_kst, eps_reg, t0, d_cl, eta_cl, eta;

    std::vector<std::string> missing;  // "value: needs x"
    std::vector<std::string> notes;
};

/// Sizes (a, b) of the two classes of F minus the witness edge, with both
/// witness endpoints placed in the first class when the colouring allows it.
std::pair<int, int> witness_bipartition(const Graph& F);

ConstantChain derive_proof_constants(const ConstantInputs& in);

}  // namespace ramsey
