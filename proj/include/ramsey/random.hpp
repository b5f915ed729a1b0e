#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

struct Seed {
    std::uint64_t value = 0;
    std::uint64_t stream = 0;

    /// Child seed for task `index` of this stream; used to key Monte Carlo trials.
    Seed child(std::uint64_t index) const;
    bool operator==(const Seed&) const = default;
};

std::uint64_t splitmix64(std::uint64_t& state);

/// xoshiro256** seeded from splitmix64 over (value, stream).
///
/// All derived draws (uniform01, below, bernoulli) are implemented here rather
/// than through <random> distributions, whose output is library-specific.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(Seed seed);

    std::uint64_t operator()();
    static constexpr std::uint64_t min() { return 0; }
    static constexpr std::uint64_t max() { return ~std::uint64_t{0}; }

    /// Uniform in [0,1) with 53 random bits.
    double uniform01();
    /// Uniform integer in [0, bound); bound > 0. Lemire rejection.
    std::uint64_t below(std::uint64_t bound);
    bool bernoulli(double p) { return uniform01() < p; }

private:
    std::uint64_t s_[4];
};

/// Fisher-Yates from the back; fixed draw sequence on every platform.
template <class T>
void shuffle(std::vector<T>& xs, Rng& rng) {
    for (std::size_t i = xs.size(); i > 1; --i) std::swap(xs[i - 1], xs[rng.below(i)]);
}

/// Binomial random graph: pairs visited in lexicographic order, one draw each.
Graph gnp_sample(int n, double p, Seed seed);

}  // namespace ramsey
