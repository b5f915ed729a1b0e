#include "ramsey/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <thread>

namespace ramsey {

Interval wilson_interval(std::size_t k, std::size_t n, double z) {
    if (n == 0) return {0, 1};
    const double N = static_cast<double>(n), ph = static_cast<double>(k) / N, z2 = z * z;
    const double denom = 1 + z2 / N;
    const double centre = (ph + z2 / (2 * N)) / denom;
    const double half = z * std::sqrt(ph * (1 - ph) / N + z2 / (4 * N * N)) / denom;
    return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

namespace {

// Runs fn(i) for i < count on up to `workers` threads; each index is written once.
template <class Fn>
void run_indexed(std::size_t count, unsigned workers, Fn&& fn) {
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) fn(i);
        });
    for (auto& t : pool) t.join();
}

void check_probability(double p) {
    if (!(p >= 0 && p <= 1)) throw std::invalid_argument("p must lie in [0,1]");
}

}  // namespace

VerdictOracle solver_oracle(const Graph& F, ArrowOptions opts) {
    return [F, opts](int n, double p, Seed seed) {
        auto r = decide_arrow(gnp_sample(n, p, seed), F, opts);
        return TrialOutcome{r.verdict, r.stats};
    };
}

VerdictOracle step_oracle(double inv_m2, double c0) {
    return [=](int n, double p, Seed) {
        const double p0 = c0 * std::pow(static_cast<double>(n), -inv_m2);
        return TrialOutcome{p > p0 ? Verdict::Arrows : Verdict::NotArrows, {}};
    };
}

VerdictOracle logistic_oracle(double inv_m2, double c0, std::function<double(int)> width) {
    return [=](int n, double p, Seed seed) {
        const double c = p * std::pow(static_cast<double>(n), inv_m2);
        const double s = width(n) * c0 / (2 * std::log(9.0));
        const double prob = 1 / (1 + std::exp(-(c - c0) / s));
        Rng rng(seed);
        return TrialOutcome{rng.uniform01() < prob ? Verdict::Arrows : Verdict::NotArrows, {}};
    };
}

ArrowEstimate estimate_with_oracle(const VerdictOracle& oracle, int n, double p, std::size_t trials, Seed seed,
                                   unsigned workers) {
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    check_probability(p);
    ArrowEstimate est;
    est.n = n;
    est.p = p;
    est.trials = trials;
    est.records.resize(trials);
    run_indexed(trials, workers, [&](std::size_t i) {
        auto& r = est.records[i];
        r.n = n;
        r.p = p;
        r.seed = seed.child(i);
        auto t0 = std::chrono::steady_clock::now();
        auto out = oracle(n, p, r.seed);
        r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        r.verdict = out.verdict;
        r.stats = out.stats;
    });
    for (const auto& r : est.records) {
        est.arrows += r.verdict == Verdict::Arrows;
        est.not_arrows += r.verdict == Verdict::NotArrows;
        est.undecided += r.verdict == Verdict::Undecided;
    }
    const std::size_t decided = est.arrows + est.not_arrows;
    if (decided == 0)
        throw BudgetExhausted("all " + std::to_string(trials) + " trials exceeded the solver budget at n=" +
                              std::to_string(n) + ", p=" + std::to_string(p));
    est.estimate = static_cast<double>(est.arrows) / static_cast<double>(decided);
    est.ci = wilson_interval(est.arrows, decided);
    return est;
}

ArrowEstimate estimate_arrow_probability(const Graph& F, int n, double p, std::size_t trials, Seed seed,
                                         const ArrowOptions& opts, unsigned workers) {
    return estimate_with_oracle(solver_oracle(F, opts), n, p, trials, seed, workers);
}

BisectResult bisect_threshold_constant(const Rational& m2, int n, std::size_t trials, const VerdictOracle& oracle,
                                       Seed seed, const BisectOptions& opts) {
    if (m2 <= 0) throw std::invalid_argument("m2 must be positive");
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (!(opts.c_low > 0 && opts.c_low < opts.c_high)) throw std::invalid_argument("need 0 < c_low < c_high");
    if (!(opts.tol > 0)) throw std::invalid_argument("tol must be positive");
    const double scale = std::pow(static_cast<double>(n), -1 / to_double(m2));
    BisectResult res;
    auto probe = [&](double c) {
        Probe pr;
        pr.c = c;
        pr.p = c * scale;
        if (pr.p > 1) {
            pr.p = 1;
            pr.clamped = true;
            res.clamped = true;
        }
        pr.estimate = estimate_with_oracle(oracle, n, pr.p, trials, seed.child(res.probes.size()), opts.workers);
        pr.estimate.records.clear();
        res.probes.push_back(pr);
        return pr.estimate.estimate >= opts.level;
    };
    double lo = opts.c_low, hi = opts.c_high;
    if (probe(lo) || !probe(hi))
        throw std::invalid_argument("no bracket in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                                    "] straddles level " + std::to_string(opts.level));
    while (hi - lo > opts.tol && res.probes.size() < opts.max_probes) {
        const double mid = (lo + hi) / 2;
        (probe(mid) ? hi : lo) = mid;
    }
    res.c_hat = (lo + hi) / 2;
    res.p_hat = std::min(1.0, res.c_hat * scale);
    return res;
}

WindowTable sharpness_window(const Rational& m2, const std::vector<int>& ns, std::size_t trials,
                             const VerdictOracle& oracle, Seed seed, BisectOptions opts) {
    WindowTable t;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        WindowRow row;
        row.n = ns[i];
        double* slot[3] = {&row.c10, &row.c50, &row.c90};
        const double levels[3] = {0.1, 0.5, 0.9};
        for (int j = 0; j < 3; ++j) {
            opts.level = levels[j];
            auto r = bisect_threshold_constant(m2, ns[i], trials, oracle, seed.child(3 * i + j), opts);
            *slot[j] = r.c_hat;
            row.clamped = row.clamped || r.clamped;
        }
        row.width = (row.c90 - row.c10) / row.c50;
        t.rows.push_back(row);
    }
    bool down = true, up = true;
    for (std::size_t i = 1; i < t.rows.size(); ++i) {
        down = down && t.rows[i].width < t.rows[i - 1].width;
        up = up && t.rows[i].width > t.rows[i - 1].width;
    }
    t.trend = t.rows.size() < 2 ? "single" : down ? "narrowing" : up ? "widening" : "mixed";
    return t;
}

namespace {

Embedding random_embedding(int vb, int n, Rng& rng) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    Embedding h(vb);
    for (int i = 0; i < vb; ++i) {
        std::swap(perm[i], perm[i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)))]);
        h[i] = perm[i];
    }
    return h;
}

double inf_if_zero(double num, double den) { return den == 0 ? INFINITY : num / den; }

}  // namespace

ZSample z_sample(const Graph& F, const BoosterSpec& spec, const Graph& Z, double p, Seed seed, const ZOptions& opts) {
    const int n = Z.order();
    const double n2 = static_cast<double>(n) * n;
    const double D = to_double(opts.D);
    const double nd = std::pow(static_cast<double>(n), to_double(opts.delta));
    ZSample s;
    s.edges = Z.size();
    s.z[0] = p * n2 / 4 <= static_cast<double>(s.edges) && static_cast<double>(s.edges) <= p * n2;

    std::vector<std::size_t> through(Z.size(), 0);
    auto copies = f_minus_copies(F, Z);
    s.fminus = copies.size();
    for (const auto& [member, c] : copies)
        for (auto e : c.edges) ++through[e];
    for (auto t : through) s.max_fminus_edge = std::max(s.max_fminus_edge, t);
    s.fminus_per_n2 = n2 > 0 ? static_cast<double>(s.fminus) / n2 : 0;
    s.max_fminus_edge_p = static_cast<double>(s.max_fminus_edge) * p;
    s.z[1] = static_cast<double>(s.fminus) <= D * n2;
    s.z[2] = static_cast<double>(s.max_fminus_edge) <= inf_if_zero(D, p);

    Rng rng(seed);
    const std::size_t m = Z.size();
    const std::size_t all_pairs = m * (m - (m > 0)) / 2;
    const double threshold = inf_if_zero(D, p * nd);
    if (all_pairs > 0) {
        PCounter pc(F, Z);
        auto heavy = [&](std::size_t i, std::size_t j) {
            ++s.pairs_checked;
            s.heavy_pairs += static_cast<double>(pc.count(Z.edge(i), Z.edge(j))) > threshold;
        };
        if (opts.pair_samples == 0) {
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = i + 1; j < m; ++j) heavy(i, j);
        } else {
            for (std::size_t t = 0; t < opts.pair_samples; ++t) {
                auto i = rng.below(m), j = rng.below(m - 1);
                if (j >= i) ++j;
                heavy(std::min(i, j), std::max(i, j));
            }
        }
        s.heavy_fraction = static_cast<double>(s.heavy_pairs) / static_cast<double>(s.pairs_checked);
    }
    const double heavy_estimate = s.heavy_fraction * static_cast<double>(all_pairs);
    s.z[3] = heavy_estimate <= D * p * n2 / nd;

    if (spec.B.order() <= n && opts.embedding_samples > 0) {
        for (std::size_t t = 0; t < opts.embedding_samples; ++t) {
            auto h = random_embedding(spec.B.order(), n, rng);
            s.bad_embeddings += classify_bad(analyse_embedding(Z, h, spec.B, F)).bad();
            ++s.embeddings_checked;
        }
        s.z[4] = static_cast<double>(s.bad_embeddings) / static_cast<double>(s.embeddings_checked) <=
                 std::pow(static_cast<double>(n), -opts.zeta);
    } else {
        s.z[4] = true;
    }
    return s;
}

ZReport z_property_rates(const Graph& F, const BoosterSpec& spec, int n, double p, std::size_t trials, Seed seed,
                         const ZOptions& opts) {
    check_probability(p);
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    auto prof = classify(F);
    const Rational inv = 1 / prof.m2.value;
    if (!(opts.delta > 0 && opts.delta < min(inv, 1 - inv)))
        throw std::invalid_argument("delta must lie in (0, min(1/m2, 1-1/m2)) = (0, " + to_string(min(inv, 1 - inv)) +
                                    ")");
    ZReport rep;
    rep.n = n;
    rep.p = p;
    rep.degenerate = p == 0;
    const double nd = std::pow(static_cast<double>(n), to_double(opts.delta));
    rep.heavy_threshold = inf_if_zero(to_double(opts.D), p * nd);
    rep.heavy_allowance = to_double(opts.D) * p * n * n / nd;
    rep.bad_allowance = std::pow(static_cast<double>(n), -opts.zeta);
    rep.samples.resize(trials);
    run_indexed(trials, opts.workers, [&](std::size_t i) {
        const Seed s = seed.child(i);
        rep.samples[i] = z_sample(F, spec, gnp_sample(n, p, s.child(0)), p, s.child(1), opts);
    });
    for (int k = 0; k < 5; ++k) {
        for (const auto& s : rep.samples) rep.rates[k].passes += s.z[k];
        rep.rates[k].rate = static_cast<double>(rep.rates[k].passes) / static_cast<double>(trials);
        rep.rates[k].ci = wilson_interval(rep.rates[k].passes, trials);
    }
    return rep;
}

JansonResult janson_bound(const CopyFamily& family, const Rational& q) {
    if (!(q > 0 && q <= 1)) throw std::invalid_argument("q must lie in (0,1]");
    JansonResult r;
    r.mu = 0;
    r.Delta = 0;
    const auto& cs = family.copies;
    if (cs.empty()) {
        r.vacuous = true;
        r.bound = 1;
        return r;
    }
    for (const auto& c : cs) r.mu += pow(q, c.edges.size());
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = 0; j < cs.size(); ++j) {
            if (i == j) continue;
            std::vector<EdgeId> common;
            std::set_intersection(cs[i].edges.begin(), cs[i].edges.end(), cs[j].edges.begin(), cs[j].edges.end(),
                                  std::back_inserter(common));
            if (common.empty()) continue;
            r.Delta += pow(q, cs[i].edges.size() + cs[j].edges.size() - common.size());
        }
    r.bound = std::min(1.0, std::exp(-to_double(r.mu) + to_double(r.Delta) / 2));
    return r;
}

}  // namespace ramsey
