#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramsey/arrowing.hpp"
#include "ramsey/booster.hpp"
#include "ramsey/counting.hpp"
#include "ramsey/random.hpp"
#include "ramsey/rational.hpp"

namespace ramsey {

/// Raised when no trial produced a decided verdict.
class BudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Interval {
    double low = 0;
    double high = 0;
};

/// Wilson score interval for k successes in n trials; [0,1] when n = 0.
Interval wilson_interval(std::size_t k, std::size_t n, double z = 1.96);

struct TrialOutcome {
    Verdict verdict = Verdict::Undecided;
    ArrowStats stats;
};

/// Decides one trial at (n, p) from its own seed. Swappable for synthetic oracles.
using VerdictOracle = std::function<TrialOutcome(int n, double p, Seed seed)>;

/// Samples G(n,p) and runs the arrowing solver.
VerdictOracle solver_oracle(const Graph& F, ArrowOptions opts = {});
/// Arrows iff p > c0 n^(-1/m2).
VerdictOracle step_oracle(double inv_m2, double c0);
/// Arrows with probability 1/(1+exp(-(c-c0)/s)), c = p n^(1/m2), where s is
/// chosen so that (c_0.9 - c_0.1)/c_0.5 equals width(n).
VerdictOracle logistic_oracle(double inv_m2, double c0, std::function<double(int)> width);

struct TrialRecord {
    int n = 0;
    double p = 0;
    Seed seed;
    Verdict verdict = Verdict::Undecided;
    ArrowStats stats;
    double wall_ms = 0;
};

struct ArrowEstimate {
    int n = 0;
    double p = 0;
    std::size_t trials = 0;
    std::size_t arrows = 0;
    std::size_t not_arrows = 0;
    std::size_t undecided = 0;
    double estimate = 0;  // arrows / decided
    Interval ci;
    std::vector<TrialRecord> records;
};

/// Trial i uses seed.child(i); results do not depend on `workers`.
/// Throws BudgetExhausted when every trial is undecided.
ArrowEstimate estimate_with_oracle(const VerdictOracle& oracle, int n, double p, std::size_t trials, Seed seed,
                                   unsigned workers = 1);
ArrowEstimate estimate_arrow_probability(const Graph& F, int n, double p, std::size_t trials, Seed seed,
                                         const ArrowOptions& opts = {}, unsigned workers = 1);

struct BisectOptions {
    double level = 0.5;
    double tol = 1e-3;
    double c_low = 0.05;
    double c_high = 8.0;
    std::size_t max_probes = 64;
    unsigned workers = 1;
};

struct Probe {
    double c = 0;
    double p = 0;
    bool clamped = false;  // c n^(-1/m2) exceeded 1
    ArrowEstimate estimate;
};

struct BisectResult {
    double c_hat = 0;
    double p_hat = 0;
    bool clamped = false;  // some probe had p capped at 1
    std::vector<Probe> probes;
};

/// p = c n^(-1/m2). The bracket ends are probed first and must straddle `level`.
BisectResult bisect_threshold_constant(const Rational& m2, int n, std::size_t trials, const VerdictOracle& oracle,
                                       Seed seed, const BisectOptions& opts = {});

struct WindowRow {
    int n = 0;
    double c10 = 0, c50 = 0, c90 = 0;
    double width = 0;  // (c90 - c10) / c50
    bool clamped = false;
};

struct WindowTable {
    std::vector<WindowRow> rows;
    std::string trend;  // "narrowing", "widening" or "mixed"
};

WindowTable sharpness_window(const Rational& m2, const std::vector<int>& ns, std::size_t trials,
                             const VerdictOracle& oracle, Seed seed, BisectOptions opts = {});

struct ZOptions {
    Rational D{1};
    double zeta = 0.1;
    Rational delta{1, 12};
    std::size_t pair_samples = 0;       // 0: every pair of Z edges
    std::size_t embedding_samples = 200;
    unsigned workers = 1;
};

struct ZSample {
    std::size_t edges = 0;
    std::size_t fminus = 0;
    std::size_t max_fminus_edge = 0;
    double fminus_per_n2 = 0;
    double max_fminus_edge_p = 0;
    std::size_t pairs_checked = 0;
    std::size_t heavy_pairs = 0;
    double heavy_fraction = 0;
    std::size_t embeddings_checked = 0;
    std::size_t bad_embeddings = 0;
    bool z[5] = {false, false, false, false, false};
};

struct ZRate {
    std::size_t passes = 0;
    double rate = 0;
    Interval ci;
};

struct ZReport {
    int n = 0;
    double p = 0;
    bool degenerate = false;  // p = 0: every bound holds trivially
    double heavy_threshold = 0;   // D/(p n^delta)
    double heavy_allowance = 0;   // D p n^2 / n^delta
    double bad_allowance = 0;     // n^-zeta
    ZRate rates[5];
    std::vector<ZSample> samples;
};

ZReport z_property_rates(const Graph& F, const BoosterSpec& spec, int n, double p, std::size_t trials, Seed seed,
                         const ZOptions& opts = {});
/// Statistics of one host graph; exposed for the stability checks.
ZSample z_sample(const Graph& F, const BoosterSpec& spec, const Graph& Z, double p, Seed seed, const ZOptions& opts);

struct JansonResult {
    Rational mu;
    Rational Delta;  // ordered pairs of distinct copies sharing an edge, q^e(union)
    double bound = 1;
    bool vacuous = false;
};

/// bound = min(1, exp(-mu + Delta/2)); q in (0,1].
JansonResult janson_bound(const CopyFamily& family, const Rational& q);

}  // namespace ramsey
