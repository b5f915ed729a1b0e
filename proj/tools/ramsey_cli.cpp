#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "ramsey/arrowing.hpp"
#include "ramsey/booster.hpp"
#include "ramsey/constants.hpp"
#include "ramsey/counting.hpp"
#include "ramsey/experiments.hpp"
#include "ramsey/graph_io.hpp"
#include "ramsey/hypergraph.hpp"
#include "ramsey/pattern.hpp"
#include "ramsey/regularity.hpp"

using json = nlohmann::ordered_json;
using namespace ramsey;

namespace {

constexpr const char* kVersion = "0.3.0";

constexpr int kOk = 0;
constexpr int kInvalid = 2;
constexpr int kBudget = 3;

struct Common {
    std::uint64_t seed = 1;
    std::uint64_t budget_nodes = ArrowOptions{}.node_budget;
    unsigned workers = 1;
    std::string out;
    std::string format = "json";
    std::string config;
};

struct Output {
    json result;
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;
    bool partial = false;
};

// ---- small helpers ----

Rational rational_arg(const std::string& text, const char* name) {
    try {
        return parse_rational(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("--") + name + ": " + e.what());
    }
}

std::optional<Rational> optional_rational(const std::string& text, const char* name) {
    if (text.empty()) return std::nullopt;
    return rational_arg(text, name);
}

json edges_json(const Graph& g) {
    json a = json::array();
    for (const auto& e : g.edges()) a.push_back({e.u, e.v});
    return a;
}

json graph_json(const Graph& g) { return {{"n", g.order()}, {"m", g.size()}, {"edges", edges_json(g)}}; }

json stats_json(const ArrowStats& s) {
    return {{"nodes", s.nodes},
            {"propagations", s.propagations},
            {"constraints", s.constraints},
            {"variables", s.variables},
            {"copiesInBase", s.copies_in_base},
            {"copiesInAddition", s.copies_in_addition},
            {"copiesMixed", s.copies_mixed}};
}

json interval_json(const Interval& i) { return {i.low, i.high}; }

std::string fmt(double x) {
    std::ostringstream os;
    os << std::setprecision(10) << x;
    return os.str();
}

ArrowOptions arrow_opts(const Common& c) {
    ArrowOptions o;
    o.node_budget = c.budget_nodes;
    return o;
}

Graph require_graph(const std::string& spec, const char* name) {
    if (spec.empty()) throw std::invalid_argument(std::string("--") + name + " is required");
    return load_graph(spec);
}

double probability_from(const std::string& p, const std::string& c, const Graph& F, int n) {
    if (!p.empty() && !c.empty()) throw std::invalid_argument("give --p or --c, not both");
    if (!p.empty()) {
        double v = to_double(rational_arg(p, "p"));
        if (v < 0 || v > 1) throw std::invalid_argument("--p must lie in [0,1]");
        return v;
    }
    if (c.empty()) throw std::invalid_argument("one of --p or --c is required");
    if (F.empty()) throw std::invalid_argument("--c needs a pattern with edges");
    double v = to_double(rational_arg(c, "c")) * std::pow(static_cast<double>(n), -to_double(classify(F).threshold_exponent));
    return std::min(1.0, v);
}

Hypergraph read_hypergraph(const std::string& path) {
    if (path.empty()) throw std::invalid_argument("--hypergraph is required");
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::string line;
    int m = -1;
    std::vector<std::vector<int>> edges;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::vector<int> e;
        std::string tok;
        while (ls >> tok) {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument("bad vertex '" + tok + "' in " + path);
            e.push_back(v);
        }
        if (m < 0) {
            if (e.size() != 1) throw std::invalid_argument("first line of a hypergraph file is the vertex count");
            m = e[0];
        } else if (!e.empty()) {
            edges.push_back(std::move(e));
        }
    }
    if (m < 0) throw std::invalid_argument("empty hypergraph file");
    return make_hypergraph(m, std::move(edges));
}

json hypergraph_json(const Hypergraph& H) {
    return {{"m", H.m}, {"edges", H.edges}, {"mergedDuplicates", H.merged_duplicates}};
}

// Exact values longer than `max_chars` are left out; log10 and the formula remain.
json huge_json(const std::optional<HugeRational>& h, std::size_t max_chars) {
    if (!h) return nullptr;
    json j{{"log10", h->log10}, {"formula", h->formula}};
    j["exact"] = nullptr;
    if (h->exact) {
        std::string text = to_string(*h->exact);
        if (text.size() <= max_chars)
            j["exact"] = text;
        else
            j["exactOmittedChars"] = text.size();
    }
    return j;
}

template <class T>
json opt_json(const std::optional<T>& v) {
    if (!v) return nullptr;
    if constexpr (std::is_same_v<T, Rational>)
        return to_string(*v);
    else if constexpr (std::is_same_v<T, BigInt>)
        return v->get_str();
    else
        return *v;
}

std::vector<int> parse_int_list(const std::string& s, const char* name) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        int v;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (tok.empty() || used != tok.size()) throw std::invalid_argument(std::string("--") + name + ": bad integer '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

Partition parse_partition(const std::string& s) {
    Partition p;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ';')) p.push_back(parse_int_list(part, "partition"));
    return p;
}

// ---- subcommands ----

struct PatternArgs {
    std::string pattern;
};

Output run_pattern(const PatternArgs& a) {
    Graph F = require_graph(a.pattern, "pattern");
    auto prof = classify(F);
    Output o;
    json w{{"vertices", prof.m2.vertices}};
    json we = json::array();
    for (auto e : prof.m2.edges) we.push_back({e.u, e.v});
    w["edges"] = we;
    o.result = {{"pattern", graph_json(F)},
                {"d2", to_string(d2(F))},
                {"m2", to_string(prof.m2.value)},
                {"m2Witness", w},
                {"thresholdExponent", "-" + to_string(prof.threshold_exponent)},
                {"balanced", prof.balanced},
                {"strictlyBalanced", prof.strictly_balanced},
                {"nearlyBipartite", prof.nearly_bipartite()}};
    o.result["nearlyBipartiteWitness"] =
        prof.nearly_bipartite_witness ? json{prof.nearly_bipartite_witness->u, prof.nearly_bipartite_witness->v}
                                      : json(nullptr);
    return o;
}

struct SampleArgs {
    int n = 0;
    std::string p, c, pattern;
};

Output run_sample(const SampleArgs& a, const Common& c) {
    if (a.n < 0) throw std::invalid_argument("--n must be non-negative");
    Graph F = a.pattern.empty() ? Graph() : load_graph(a.pattern);
    double p = probability_from(a.p, a.c, F, a.n);
    Graph G = gnp_sample(a.n, p, Seed{c.seed, 0});
    Output o;
    o.result = {{"n", a.n}, {"p", p}, {"graph", graph_json(G)}};
    o.result["graph6"] = to_graph6(G);
    o.csv_header = {"u", "v"};
    for (const auto& e : G.edges()) o.csv_rows.push_back({std::to_string(e.u), std::to_string(e.v)});
    return o;
}

struct ArrowsArgs {
    std::string host, pattern, dimacs;
    int colours = 2;
};

Output run_arrows(const ArrowsArgs& a, const Common& c) {
    Graph G = require_graph(a.host, "host");
    Graph F = require_graph(a.pattern, "pattern");
    auto opts = arrow_opts(c);
    opts.colours = a.colours;
    auto r = decide_arrow(G, F, opts);
    if (!a.dimacs.empty()) {
        std::ofstream d(a.dimacs);
        if (!d) throw std::invalid_argument("cannot write " + a.dimacs);
        d << to_dimacs(G, F);
    }
    Output o;
    o.result = {{"verdict", to_string(r.verdict)}, {"host", graph_json(G)}, {"stats", stats_json(r.stats)}};
    if (r.certificate) {
        json col = json::array();
        for (auto x : *r.certificate) col.push_back(x);
        o.result["certificate"] = col;
    }
    o.partial = r.verdict == Verdict::Undecided;
    return o;
}

json estimate_json(const ArrowEstimate& e) {
    return {{"n", e.n},          {"p", e.p},           {"trials", e.trials},       {"arrows", e.arrows},
            {"notArrows", e.not_arrows}, {"undecided", e.undecided}, {"estimate", e.estimate}, {"ci", interval_json(e.ci)}};
}

const std::vector<std::string> kCurveHeader{"n", "c", "p", "estimate", "low", "high", "undecided", "trials"};

std::vector<std::string> curve_row(double c, const ArrowEstimate& e) {
    return {std::to_string(e.n), fmt(c),           fmt(e.p),
            fmt(e.estimate),     fmt(e.ci.low),    fmt(e.ci.high),
            std::to_string(e.undecided), std::to_string(e.trials)};
}

struct ThresholdArgs {
    std::string pattern, p;
    std::vector<std::string> c;
    int n = 0;
    std::size_t trials = 100;
    bool bisect = false;
    double level = 0.5, tol = 1e-2, c_low = 0.05, c_high = 8.0;
};

Output run_threshold(const ThresholdArgs& a, const Common& cm) {
    Graph F = require_graph(a.pattern, "pattern");
    if (a.n < 1) throw std::invalid_argument("--n must be positive");
    auto prof = classify(F);
    const double scale = std::pow(static_cast<double>(a.n), -to_double(prof.threshold_exponent));
    auto oracle = solver_oracle(F, arrow_opts(cm));
    const Seed seed{cm.seed, 0};
    Output o;
    o.csv_header = kCurveHeader;
    o.result["m2"] = to_string(prof.m2.value);
    if (a.bisect) {
        BisectOptions bo;
        bo.level = a.level;
        bo.tol = a.tol;
        bo.c_low = a.c_low;
        bo.c_high = a.c_high;
        bo.workers = cm.workers;
        auto r = bisect_threshold_constant(prof.m2.value, a.n, a.trials, oracle, seed, bo);
        json probes = json::array();
        for (const auto& pr : r.probes) {
            json j = estimate_json(pr.estimate);
            j["c"] = pr.c;
            j["clamped"] = pr.clamped;
            probes.push_back(j);
            o.csv_rows.push_back(curve_row(pr.c, pr.estimate));
        }
        o.result["bisection"] = {{"level", a.level}, {"cHat", r.c_hat}, {"pHat", r.p_hat}, {"clamped", r.clamped}, {"probes", probes}};
        return o;
    }
    if (a.c.empty() && a.p.empty()) throw std::invalid_argument("threshold needs --c values, --p or --bisect");
    json points = json::array();
    std::size_t idx = 0;
    auto point = [&](double c, double p) {
        bool clamped = p > 1;
        p = std::min(p, 1.0);
        auto e = estimate_with_oracle(oracle, a.n, p, a.trials, seed.child(idx++), cm.workers);
        json j = estimate_json(e);
        j["c"] = c;
        j["clamped"] = clamped;
        points.push_back(j);
        o.csv_rows.push_back(curve_row(c, e));
    };
    if (!a.p.empty()) {
        double p = to_double(rational_arg(a.p, "p"));
        if (p < 0 || p > 1) throw std::invalid_argument("--p must lie in [0,1]");
        point(p / scale, p);
    }
    for (const auto& cs : a.c) {
        double c = to_double(rational_arg(cs, "c"));
        if (c < 0) throw std::invalid_argument("--c must be non-negative");
        point(c, c * scale);
    }
    o.result["points"] = points;
    return o;
}

struct WindowArgs {
    std::string pattern, ns;
    std::size_t trials = 100;
    double tol = 1e-2, c_low = 0.05, c_high = 8.0;
};

Output run_window(const WindowArgs& a, const Common& cm) {
    Graph F = require_graph(a.pattern, "pattern");
    auto prof = classify(F);
    auto ns = parse_int_list(a.ns, "ns");
    for (int n : ns)
        if (n < 1) throw std::invalid_argument("--ns entries must be positive");
    BisectOptions bo;
    bo.tol = a.tol;
    bo.c_low = a.c_low;
    bo.c_high = a.c_high;
    bo.workers = cm.workers;
    auto t = sharpness_window(prof.m2.value, ns, a.trials, solver_oracle(F, arrow_opts(cm)), Seed{cm.seed, 0}, bo);
    Output o;
    o.csv_header = {"n", "c10", "c50", "c90", "width", "clamped"};
    json rows = json::array();
    for (const auto& r : t.rows) {
        rows.push_back({{"n", r.n}, {"c10", r.c10}, {"c50", r.c50}, {"c90", r.c90}, {"width", r.width}, {"clamped", r.clamped}});
        o.csv_rows.push_back({std::to_string(r.n), fmt(r.c10), fmt(r.c50), fmt(r.c90), fmt(r.width), r.clamped ? "1" : "0"});
    }
    o.result = {{"m2", to_string(prof.m2.value)}, {"rows", rows}, {"trend", t.trend}};
    return o;
}

struct ZArgs {
    std::string pattern, booster, p, c, D = "1", delta = "1/12";
    int n = 0;
    double zeta = 0.1;
    std::size_t trials = 10, pair_samples = 0, embedding_samples = 200;
};

Output run_zcheck(const ZArgs& a, const Common& cm) {
    Graph F = require_graph(a.pattern, "pattern");
    auto spec = make_booster(require_graph(a.booster, "booster"), F);
    double p = probability_from(a.p, a.c, F, a.n);
    ZOptions zo;
    zo.D = rational_arg(a.D, "D");
    zo.delta = rational_arg(a.delta, "delta");
    zo.zeta = a.zeta;
    zo.pair_samples = a.pair_samples;
    zo.embedding_samples = a.embedding_samples;
    zo.workers = cm.workers;
    auto r = z_property_rates(F, spec, a.n, p, a.trials, Seed{cm.seed, 0}, zo);
    Output o;
    json rates = json::object();
    const char* names[5] = {"Z1", "Z2", "Z3", "Z4", "Z5"};
    for (int k = 0; k < 5; ++k)
        rates[names[k]] = {{"passes", r.rates[k].passes}, {"rate", r.rates[k].rate}, {"ci", interval_json(r.rates[k].ci)}};
    o.csv_header = {"trial", "edges", "fminus_per_n2", "max_fminus_edge_p", "pairs", "heavy_fraction", "embeddings",
                    "bad", "Z1", "Z2", "Z3", "Z4", "Z5"};
    json samples = json::array();
    for (std::size_t i = 0; i < r.samples.size(); ++i) {
        const auto& s = r.samples[i];
        samples.push_back({{"edges", s.edges}, {"fminus", s.fminus}, {"maxFminusEdge", s.max_fminus_edge},
                           {"fminusPerN2", s.fminus_per_n2}, {"maxFminusEdgeTimesP", s.max_fminus_edge_p},
                           {"pairsChecked", s.pairs_checked}, {"heavyPairs", s.heavy_pairs},
                           {"heavyFraction", s.heavy_fraction}, {"embeddingsChecked", s.embeddings_checked},
                           {"badEmbeddings", s.bad_embeddings}});
        std::vector<std::string> row{std::to_string(i), std::to_string(s.edges), fmt(s.fminus_per_n2),
                                     fmt(s.max_fminus_edge_p), std::to_string(s.pairs_checked), fmt(s.heavy_fraction),
                                     std::to_string(s.embeddings_checked), std::to_string(s.bad_embeddings)};
        for (bool z : s.z) row.push_back(z ? "1" : "0");
        o.csv_rows.push_back(row);
    }
    o.result = {{"n", r.n},
                {"p", r.p},
                {"degenerate", r.degenerate},
                {"heavyThreshold", std::isinf(r.heavy_threshold) ? json("inf") : json(r.heavy_threshold)},
                {"heavyAllowance", r.heavy_allowance},
                {"badAllowance", r.bad_allowance},
                {"rates", rates},
                {"samples", samples}};
    return o;
}

struct BoosterArgs {
    std::string host, pattern, booster, p = "1/2", D = "1", delta = "1/12";
    int n = 0;
    std::size_t selection = 0, pool_size = 0, L = 0;
    bool no_arrow_filter = false;
};

json embeddings_json(const std::vector<Embedding>& xs) {
    json a = json::array();
    for (const auto& h : xs) a.push_back(h);
    return a;
}

Output run_booster(const BoosterArgs& a, const Common& cm) {
    Graph F = require_graph(a.pattern, "pattern");
    auto spec = make_booster(require_graph(a.booster, "booster"), F);
    PipelineParams pp;
    pp.D = rational_arg(a.D, "D");
    pp.delta = rational_arg(a.delta, "delta");
    pp.p = to_double(rational_arg(a.p, "p"));
    if (pp.p <= 0 || pp.p > 1) throw std::invalid_argument("--p must lie in (0,1]");
    if (a.selection) pp.selection_count = a.selection;
    if (a.pool_size) pp.pool_size = a.pool_size;
    pp.arrow_filter = !a.no_arrow_filter;
    pp.arrow = arrow_opts(cm);
    Graph Z = a.host.empty() ? gnp_sample(a.n, pp.p, Seed{cm.seed, 1}) : load_graph(a.host);
    auto fam = construct_normal_family(Z, spec, F, pp, Seed{cm.seed, 0});
    const auto& r = fam.report;
    json stages{{"pool", r.pool},     {"psi1", r.psi1},         {"psi2", r.psi2},
                {"psi3", r.psi3},     {"psi4", r.psi4},         {"afterPairCap", r.after_cap},
                {"afterOverlap", r.after_overlap}, {"xi0", r.xi0}};
    json sigma = json::array();
    for (auto x : spec.sigma) sigma.push_back(x);
    Output o;
    o.result = {{"Z", graph_json(Z)},
                {"booster", graph_json(spec.B)},
                {"sigma", sigma},
                {"zVerdict", to_string(r.z_verdict)},
                {"zArrowsAlone", r.z_arrows_alone},
                {"arrowFilter", r.arrow_filter},
                {"poolSampled", r.pool_sampled},
                {"stages", stages},
                {"removals", r.removals},
                {"selection", {{"target", r.selection_target}, {"draws", r.selection_draws}, {"truncated", r.selection_truncated}}},
                {"heavyThreshold", r.heavy_threshold},
                {"pairCap", r.pair_cap},
                {"starvedStage", r.starved_stage ? json(*r.starved_stage) : json(nullptr)},
                {"xi0", embeddings_json(fam.xi0)}};
    if (a.L) {
        auto ic = restrict_index_consistent(Z, fam.xi0, spec, F, a.L, Seed{cm.seed, 2});
        o.result["indexConsistent"] = {{"xi", embeddings_json(ic.xi)},     {"profile", ic.profile},
                                       {"droppedLong", ic.dropped_long},  {"droppedEmpty", ic.dropped_empty},
                                       {"profileClass", ic.profile_class}, {"note", ic.note}};
        o.result["hypergraph"] = hypergraph_json(booster_hypergraph(Z, ic.xi, spec, F));
    }
    o.partial = r.removals.count("undecided") > 0;
    return o;
}

struct HArgs {
    std::string hypergraph, tau = "1/2", beta = "0", gamma = "0";
};

Output run_hstats(const HArgs& a) {
    auto H = read_hypergraph(a.hypergraph);
    auto s = hypergraph_stats(H, rational_arg(a.tau, "tau"));
    json dj = json::object(), dsum = json::object();
    for (int j = 2; j <= s.ell; ++j) {
        dj[std::to_string(j)] = to_string(s.delta_j[j]);
        dsum[std::to_string(j)] = s.dj_sum[j];
    }
    Output o;
    o.result = {{"hypergraph", hypergraph_json(H)}, {"ell", s.ell},  {"d", to_string(s.d)},
                {"Delta1", s.Delta1},               {"Delta2", s.Delta2}, {"djSum", dsum},
                {"deltaJ", dj},                     {"delta", to_string(s.delta)}};
    return o;
}

Output run_cores(const HArgs& a) {
    auto H = read_hypergraph(a.hypergraph);
    auto C = brute_force_cores(H);
    auto r = verify_core_properties(H, C, rational_arg(a.beta, "beta"), rational_arg(a.gamma, "gamma"));
    json cores = json::array(), containers = json::array();
    for (std::size_t i = 0; i < C.cores.size(); ++i) {
        cores.push_back(mask_members(C.cores[i]));
        containers.push_back(mask_members(C.containers[i]));
    }
    Output o;
    o.result = {{"hypergraph", hypergraph_json(H)},
                {"cores", cores},
                {"containers", containers},
                {"minCoreSize", r.min_core_size},
                {"sizeBoundHolds", r.size_bound_holds},
                {"logCount", r.log_count},
                {"countBound", r.count_bound},
                {"countBoundHolds", r.count_bound_holds},
                {"minimalHittingSets", r.minimal_hitting_sets},
                {"uncoveredHittingSets", r.uncovered_hitting_sets},
                {"maxContainerEdges", r.max_container_edges}};
    return o;
}

struct BaseArgs {
    std::string pattern, host, sub, lambda, eta;
    std::uint64_t search_budget = 2000;
};

json tcheck_json(const TCheck& t) {
    return {{"belowDensityFloor", t.below_density_floor}, {"subEdges", t.sub_edges},
            {"copiesInBase", t.copies_in_base},           {"required", to_string(t.required)},
            {"pass", t.pass}};
}

Output run_basegraph(const BaseArgs& a) {
    auto prof = classify(require_graph(a.pattern, "pattern"));
    Graph G = require_graph(a.host, "host");
    Graph Gp = a.sub.empty() ? G : load_graph(a.sub);
    Output o;
    o.result["base"] = graph_json(base_graph(prof, Gp));
    if (!a.lambda.empty() || !a.eta.empty())
        o.result["check"] = tcheck_json(check_T(prof, G, Gp, rational_arg(a.lambda, "lambda"), rational_arg(a.eta, "eta")));
    return o;
}

Output run_tprop(const BaseArgs& a, const Common& cm) {
    auto prof = classify(require_graph(a.pattern, "pattern"));
    Graph G = require_graph(a.host, "host");
    auto r = adversarial_T_search(prof, G, rational_arg(a.lambda, "lambda"), rational_arg(a.eta, "eta"),
                                  a.search_budget, Seed{cm.seed, 0});
    Output o;
    o.result = {{"worst", graph_json(r.worst)},
                {"check", tcheck_json(r.check)},
                {"exhaustive", r.exhaustive},
                {"evaluations", r.evaluations}};
    return o;
}

struct RegArgs {
    std::string host, p = "1", eps = "1/4", x, y, partition, d = "0", mode = "exact";
    std::uint64_t samples = 10000;
};

Output run_regularity(const RegArgs& a, const Common& cm) {
    Graph H = require_graph(a.host, "host");
    Rational p = rational_arg(a.p, "p"), eps = rational_arg(a.eps, "eps");
    if (a.mode != "exact" && a.mode != "sampled") throw std::invalid_argument("--mode must be exact or sampled");
    auto mode = a.mode == "exact" ? RegularityMode::Exact : RegularityMode::Sampled;
    Output o;
    if (!a.partition.empty()) {
        auto rg = reduced_graph(H, p, parse_partition(a.partition), rational_arg(a.d, "d"), eps, mode, Seed{cm.seed, 0});
        o.result = {{"classes", rg.partition}, {"reduced", graph_json(rg.graph)}};
        return o;
    }
    if (a.x.empty() || a.y.empty()) throw std::invalid_argument("regularity needs --x and --y, or --partition");
    auto X = parse_int_list(a.x, "x"), Y = parse_int_list(a.y, "y");
    auto r = is_eps_p_regular(H, p, X, Y, eps, mode, Seed{cm.seed, 0}, a.samples);
    o.result = {{"regular", r.regular},
                {"certified", r.certified},
                {"density", to_string(r.density)},
                {"pairsChecked", r.pairs_checked}};
    if (r.worst)
        o.result["worst"] = {{"X", r.worst->X},
                             {"Y", r.worst->Y},
                             {"density", to_string(r.worst->density)},
                             {"deviation", to_string(r.worst->deviation)}};
    return o;
}

struct JansonArgs {
    std::string pattern, host, q;
};

Output run_janson(const JansonArgs& a) {
    Graph F = require_graph(a.pattern, "pattern");
    Graph G = require_graph(a.host, "host");
    if (a.q.empty()) throw std::invalid_argument("--q is required");
    auto fam = enumerate_copies(F, G);
    auto r = janson_bound(fam, rational_arg(a.q, "q"));
    Output o;
    o.result = {{"copies", fam.copies.size()},
                {"mu", to_string(r.mu)},
                {"Delta", to_string(r.Delta)},
                {"bound", r.bound},
                {"vacuous", r.vacuous}};
    return o;
}

struct ConstArgs {
    std::string pattern, D, C0, C1, lambda, rho, c0, xi_cl, eps_cl, T0, zeta, gamma_prime, alpha;
    int booster_vertices = 0, booster_edges = 0, ell = 0;
    std::size_t max_chars = 4096;
};

Output run_constants(const ConstArgs& a) {
    ConstantInputs in;
    in.F = require_graph(a.pattern, "pattern");
    if (a.booster_vertices) in.booster_vertices = a.booster_vertices;
    if (a.booster_edges) in.booster_edges = a.booster_edges;
    if (a.ell) in.ell = a.ell;
    in.D = optional_rational(a.D, "D");
    in.C0 = optional_rational(a.C0, "C0");
    in.C1 = optional_rational(a.C1, "C1");
    in.lambda = optional_rational(a.lambda, "lambda");
    in.rho = optional_rational(a.rho, "rho");
    in.c0 = optional_rational(a.c0, "c0");
    in.xi_cl = optional_rational(a.xi_cl, "xi-cl");
    in.eps_cl = optional_rational(a.eps_cl, "eps-cl");
    in.T0 = optional_rational(a.T0, "T0");
    in.zeta = optional_rational(a.zeta, "zeta");
    in.gamma_prime = optional_rational(a.gamma_prime, "gamma-prime");
    in.alpha = optional_rational(a.alpha, "alpha");
    auto c = derive_proof_constants(in);
    Output o;
    o.result = {{"m2", to_string(c.m2)},
                {"strictlyBalanced", c.strictly_balanced},
                {"nearlyBipartite", c.nearly_bipartite},
                {"delta", to_string(c.delta)},
                {"alpha_tilde", opt_json(c.alpha_tilde)},
                {"L", opt_json(c.L)},
                {"K", opt_json(c.K)},
                {"alpha_prime", huge_json(c.alpha_prime, a.max_chars)},
                {"k", opt_json(c.k)},
                {"beta", huge_json(c.beta, a.max_chars)},
                {"gamma", opt_json(c.gamma)},
                {"eps_container", to_string(c.eps_container)},
                {"tau", {{"formula", c.tau_formula}, {"exponent", opt_json(c.tau_exponent)}}},
                {"a", opt_json(c.a)},
                {"b", opt_json(c.b)},
                {"C0_prime", opt_json(c.C0_prime)},
                {"d", opt_json(c.d)},
                {"gamma_kst", opt_json(c.gamma_kst)},
                {"eps_reg", opt_json(c.eps_reg)},
                {"t0", opt_json(c.t0)},
                {"d_cl", opt_json(c.d_cl)},
                {"eta_cl", opt_json(c.eta_cl)},
                {"eta", opt_json(c.eta)},
                {"passthrough", {{"zeta", opt_json(in.zeta)}, {"gamma_prime", opt_json(in.gamma_prime)}, {"alpha", opt_json(in.alpha)}}},
                {"missing", c.missing},
                {"notes", c.notes}};
    return o;
}

// ---- config plumbing ----

std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number()) return v.dump();
    if (v.is_array()) {
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : ",") + scalar_text(x);
        return s;
    }
    throw std::invalid_argument("unsupported config value " + v.dump());
}

// Folds a JSON config file into the argument list. A key that is also on the
// command line must carry the same value; anything else is an error.
std::vector<std::string> merge_config(std::vector<std::string> args) {
    std::string path;
    for (std::size_t i = 1; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
        if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
    }
    if (path.empty()) return args;
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config " + path);
    json cfg;
    try {
        cfg = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("config " + path + ": " + e.what());
    }
    if (!cfg.is_object()) throw std::invalid_argument("config must be a JSON object");
    if (cfg.contains("subcommand") && cfg["subcommand"] != args[0])
        throw std::invalid_argument("config is for subcommand " + cfg["subcommand"].dump());
    const json& opts = cfg.contains("options") ? cfg["options"] : cfg;
    for (const auto& [key, value] : opts.items()) {
        if (key == "subcommand" || key == "options" || key == "config") continue;
        const std::string flag = "--" + key;
        std::vector<std::string> given;
        bool present = false;
        for (std::size_t i = 1; i < args.size(); ++i) {
            if (args[i] == flag) {
                present = true;
                if (i + 1 < args.size() && args[i + 1].rfind("--", 0) != 0) given.push_back(args[i + 1]);
            } else if (args[i].rfind(flag + "=", 0) == 0) {
                present = true;
                given.push_back(args[i].substr(flag.size() + 1));
            }
        }
        if (value.is_boolean()) {
            if (present != value.get<bool>())
                throw std::invalid_argument("config sets " + key + "=" + value.dump() + " but the command line disagrees");
            continue;
        }
        std::string text = scalar_text(value);
        if (present) {
            std::string joined;
            for (const auto& g : given) joined += (joined.empty() ? "" : ",") + g;
            if (joined != text)
                throw std::invalid_argument("config sets " + key + "=" + text + " but the command line gives " + joined);
            continue;
        }
        if (value.is_array()) {
            for (const auto& x : value) {
                args.push_back(flag);
                args.push_back(scalar_text(x));
            }
        } else {
            args.push_back(flag);
            args.push_back(text);
        }
    }
    return args;
}

json effective_config(const CLI::App* sub) {
    json cfg = json::object();
    cfg["subcommand"] = sub->get_name();
    json opts = json::object();
    for (const auto* opt : sub->get_options()) {
        const std::string name = opt->get_lnames().empty() ? opt->get_name() : opt->get_lnames().front();
        if (name == "help" || name == "config" || name == "out") continue;
        if (opt->count() > 0) {
            auto res = opt->results();
            if (opt->get_type_size() == 0)
                opts[name] = true;
            else if (res.size() == 1 && opt->get_expected_max() <= 1)
                opts[name] = res.front();
            else
                opts[name] = res;
        } else if (!opt->get_default_str().empty()) {
            opts[name] = opt->get_default_str();
        }
    }
    cfg["options"] = opts;
    return cfg;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return out + "\"";
}

std::string now_iso() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

void emit(const Output& o, const json& config, const Common& c, double seconds) {
    std::string text;
    if (c.format == "csv") {
        if (o.csv_header.empty()) throw std::invalid_argument("--format csv is only available for sample, threshold, window and zcheck");
        json meta{{"tool", "ramsey"}, {"version", kVersion}, {"config", config}, {"partial", o.partial}};
        text = "# " + meta.dump() + "\n";
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) text += (i ? "," : "") + csv_escape(cells[i]);
            text += "\n";
        };
        line(o.csv_header);
        for (const auto& r : o.csv_rows) line(r);
    } else {
        json doc{{"tool", "ramsey"}, {"version", kVersion}, {"config", config}, {"partial", o.partial}, {"result", o.result}};
        doc["run"] = {{"timestamp", now_iso()}, {"wallSeconds", seconds}};
        text = doc.dump(2) + "\n";
    }
    if (c.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(c.out);
        if (!f) throw std::invalid_argument("cannot write " + c.out);
        f << text;
    }
}

void add_common(CLI::App* sub, Common& c, bool seeded = true, bool solver = false) {
    if (seeded) sub->add_option("--seed", c.seed, "master seed")->capture_default_str();
    if (solver) {
        sub->add_option("--budget-nodes", c.budget_nodes, "search nodes per arrowing decision")->capture_default_str();
        sub->add_option("--workers", c.workers, "worker threads; results do not depend on it")
            ->check(CLI::Range(1u, 256u))
            ->capture_default_str();
    }
    sub->add_option("--out", c.out, "output file (default stdout)");
    sub->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    sub->add_option("--config", c.config, "JSON config; keys are flag names, conflicts with flags are errors");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ramsey properties of random graphs: arrowing, thresholds, boosters, containers"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);
    Common common;

    PatternArgs pa;
    auto* s_pattern = app.add_subcommand("pattern", "densities and classification of a pattern");
    s_pattern->add_option("spec", pa.pattern, "named pattern or graph file");
    s_pattern->add_option("--pattern", pa.pattern, "named pattern or graph file");
    add_common(s_pattern, common, false);

    SampleArgs sa;
    auto* s_sample = app.add_subcommand("sample", "draw G(n,p)");
    s_sample->add_option("--n", sa.n)->required();
    s_sample->add_option("--p", sa.p, "edge probability (rational or decimal)");
    s_sample->add_option("--c", sa.c, "scale: p = c n^(-1/m2(F))");
    s_sample->add_option("--pattern", sa.pattern, "pattern used with --c");
    add_common(s_sample, common);

    ArrowsArgs aa;
    auto* s_arrows = app.add_subcommand("arrows", "decide G -> (F)_r^e");
    s_arrows->add_option("--host", aa.host)->required();
    s_arrows->add_option("--pattern", aa.pattern)->required();
    s_arrows->add_option("--colours", aa.colours)->check(CLI::Range(1, 8))->capture_default_str();
    s_arrows->add_option("--dimacs", aa.dimacs, "also write the 2-colour CNF here");
    add_common(s_arrows, common, false, true);

    ThresholdArgs ta;
    auto* s_thr = app.add_subcommand("threshold", "arrow probability on a c grid, or bisection for c_hat");
    s_thr->add_option("--pattern", ta.pattern)->required();
    s_thr->add_option("--n", ta.n)->required();
    s_thr->add_option("--c", ta.c, "grid values of c")->delimiter(',');
    s_thr->add_option("--p", ta.p, "single probability");
    s_thr->add_option("--trials", ta.trials)->check(CLI::PositiveNumber)->capture_default_str();
    s_thr->add_flag("--bisect", ta.bisect, "bisect for the c where the estimate crosses --level");
    s_thr->add_option("--level", ta.level)->check(CLI::Range(0.0, 1.0))->capture_default_str();
    s_thr->add_option("--tol", ta.tol)->check(CLI::PositiveNumber)->capture_default_str();
    s_thr->add_option("--c-low", ta.c_low)->capture_default_str();
    s_thr->add_option("--c-high", ta.c_high)->capture_default_str();
    add_common(s_thr, common, true, true);

    WindowArgs wa;
    auto* s_win = app.add_subcommand("window", "c at levels 0.1/0.5/0.9 for several n");
    s_win->add_option("--pattern", wa.pattern)->required();
    s_win->add_option("--ns", wa.ns, "comma-separated n values")->required();
    s_win->add_option("--trials", wa.trials)->check(CLI::PositiveNumber)->capture_default_str();
    s_win->add_option("--tol", wa.tol)->check(CLI::PositiveNumber)->capture_default_str();
    s_win->add_option("--c-low", wa.c_low)->capture_default_str();
    s_win->add_option("--c-high", wa.c_high)->capture_default_str();
    add_common(s_win, common, true, true);

    ZArgs za;
    auto* s_z = app.add_subcommand("zcheck", "empirical rates of the five host properties");
    s_z->add_option("--pattern", za.pattern)->required();
    s_z->add_option("--booster", za.booster)->required();
    s_z->add_option("--n", za.n)->required();
    s_z->add_option("--p", za.p);
    s_z->add_option("--c", za.c);
    s_z->add_option("--trials", za.trials)->check(CLI::PositiveNumber)->capture_default_str();
    s_z->add_option("--D", za.D)->capture_default_str();
    s_z->add_option("--zeta", za.zeta)->capture_default_str();
    s_z->add_option("--delta", za.delta)->capture_default_str();
    s_z->add_option("--pair-samples", za.pair_samples, "0 checks every pair")->capture_default_str();
    s_z->add_option("--embedding-samples", za.embedding_samples)->capture_default_str();
    add_common(s_z, common, true, true);

    BoosterArgs ba;
    auto* s_b = app.add_subcommand("booster", "normal family pipeline on a host Z");
    s_b->add_option("--host", ba.host, "Z; sampled from G(n,p) when absent");
    s_b->add_option("--n", ba.n);
    s_b->add_option("--pattern", ba.pattern)->required();
    s_b->add_option("--booster", ba.booster)->required();
    s_b->add_option("--p", ba.p)->capture_default_str();
    s_b->add_option("--D", ba.D)->capture_default_str();
    s_b->add_option("--delta", ba.delta)->capture_default_str();
    s_b->add_option("--selection", ba.selection, "draws with repetition (default from v(B) and n)");
    s_b->add_option("--pool-size", ba.pool_size, "sample this many booster copies instead of all");
    s_b->add_option("--L", ba.L, "also restrict to an index-consistent family with l_h <= L");
    s_b->add_flag("--no-arrow-filter", ba.no_arrow_filter);
    add_common(s_b, common, true, true);

    HArgs ha;
    auto* s_h = app.add_subcommand("hstats", "container statistics of a uniform hypergraph");
    s_h->add_option("--hypergraph", ha.hypergraph, "file: vertex count, then one hyperedge per line")->required();
    s_h->add_option("--tau", ha.tau)->capture_default_str();
    add_common(s_h, common, false);

    HArgs ca;
    auto* s_c = app.add_subcommand("cores", "exhaustive containers and cores");
    s_c->add_option("--hypergraph", ca.hypergraph)->required();
    s_c->add_option("--beta", ca.beta)->capture_default_str();
    s_c->add_option("--gamma", ca.gamma)->capture_default_str();
    add_common(s_c, common, false);

    BaseArgs bga;
    auto* s_bg = app.add_subcommand("basegraph", "closing pairs of the bipartite part, optional T check");
    s_bg->add_option("--pattern", bga.pattern)->required();
    s_bg->add_option("--host", bga.host)->required();
    s_bg->add_option("--sub", bga.sub, "subgraph G' (default: the host)");
    s_bg->add_option("--lambda", bga.lambda);
    s_bg->add_option("--eta", bga.eta);
    add_common(s_bg, common, false);

    BaseArgs tpa;
    auto* s_tp = app.add_subcommand("tprop", "search for a subgraph whose base graph has few copies");
    s_tp->add_option("--pattern", tpa.pattern)->required();
    s_tp->add_option("--host", tpa.host)->required();
    s_tp->add_option("--lambda", tpa.lambda)->required();
    s_tp->add_option("--eta", tpa.eta)->required();
    s_tp->add_option("--search-budget", tpa.search_budget)->capture_default_str();
    add_common(s_tp, common);

    RegArgs ra;
    auto* s_r = app.add_subcommand("regularity", "(eps,p)-regularity of a pair, or a reduced graph");
    s_r->add_option("--host", ra.host)->required();
    s_r->add_option("--p", ra.p)->capture_default_str();
    s_r->add_option("--eps", ra.eps)->capture_default_str();
    s_r->add_option("--x", ra.x, "comma-separated vertices");
    s_r->add_option("--y", ra.y, "comma-separated vertices");
    s_r->add_option("--partition", ra.partition, "classes separated by ';'");
    s_r->add_option("--d", ra.d, "density floor for reduced-graph edges")->capture_default_str();
    s_r->add_option("--mode", ra.mode, "exact or sampled")->capture_default_str();
    s_r->add_option("--samples", ra.samples)->capture_default_str();
    add_common(s_r, common);

    JansonArgs ja;
    auto* s_j = app.add_subcommand("janson", "Janson bound for the copies of F in a host");
    s_j->add_option("--pattern", ja.pattern)->required();
    s_j->add_option("--host", ja.host)->required();
    s_j->add_option("--q", ja.q)->required();
    add_common(s_j, common, false);

    ConstArgs ka;
    auto* s_k = app.add_subcommand("constants", "explicit constant chain");
    s_k->add_option("--pattern", ka.pattern)->required();
    s_k->add_option("--booster-vertices", ka.booster_vertices);
    s_k->add_option("--booster-edges", ka.booster_edges);
    s_k->add_option("--ell", ka.ell);
    for (auto [flag, slot] : {std::pair{"--D", &ka.D}, {"--C0", &ka.C0}, {"--C1", &ka.C1}, {"--lambda", &ka.lambda},
                              {"--rho", &ka.rho}, {"--c0", &ka.c0}, {"--xi-cl", &ka.xi_cl}, {"--eps-cl", &ka.eps_cl},
                              {"--T0", &ka.T0}, {"--zeta", &ka.zeta}, {"--gamma-prime", &ka.gamma_prime},
                              {"--alpha", &ka.alpha}})
        s_k->add_option(flag, *slot);
    s_k->add_option("--max-chars", ka.max_chars, "longest exact value printed in full")->capture_default_str();
    add_common(s_k, common, false);

    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        if (!args.empty() && args[0].rfind("-", 0) != 0) args = merge_config(args);
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInvalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }

    CLI::App* sub = app.get_subcommands().front();
    const auto t0 = std::chrono::steady_clock::now();
    try {
        Output o;
        const std::string name = sub->get_name();
        if (name == "pattern") o = run_pattern(pa);
        else if (name == "sample") o = run_sample(sa, common);
        else if (name == "arrows") o = run_arrows(aa, common);
        else if (name == "threshold") o = run_threshold(ta, common);
        else if (name == "window") o = run_window(wa, common);
        else if (name == "zcheck") o = run_zcheck(za, common);
        else if (name == "booster") o = run_booster(ba, common);
        else if (name == "hstats") o = run_hstats(ha);
        else if (name == "cores") o = run_cores(ca);
        else if (name == "basegraph") o = run_basegraph(bga);
        else if (name == "tprop") o = run_tprop(tpa, common);
        else if (name == "regularity") o = run_regularity(ra, common);
        else if (name == "janson") o = run_janson(ja);
        else o = run_constants(ka);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        emit(o, effective_config(sub), common, secs);
        return o.partial ? kBudget : kOk;
    } catch (const BudgetExhausted& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        Output o;
        o.partial = true;
        o.result = {{"error", e.what()}};
        o.csv_header = {"error"};
        o.csv_rows = {{e.what()}};
        try {
            emit(o, effective_config(sub), common, 0);
        } catch (const std::exception&) {
        }
        return kBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
}
