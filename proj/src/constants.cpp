#include "ramsey/constants.hpp"

#include <cmath>
#include <stdexcept>

#include "ramsey/pattern.hpp"

namespace ramsey {

std::pair<int, int> witness_bipartition(const Graph& F) {
    auto prof = classify(F);
    if (!prof.nearly_bipartite()) throw std::invalid_argument("pattern is not nearly bipartite");
    Graph Fp = prof.bipartite_part();
    const Edge w = *prof.nearly_bipartite_witness;
    std::vector<int> side(Fp.order(), -1);
    auto bfs = [&](int root) {
        if (side[root] != -1) return;
        side[root] = 0;
        std::vector<int> queue{root};
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (int y : Fp.neighbours(queue[i]))
                if (side[y] == -1) {
                    side[y] = 1 - side[queue[i]];
                    queue.push_back(y);
                }
    };
    bfs(w.u);
    bfs(w.v);
    for (int v = 0; v < Fp.order(); ++v) bfs(v);
    int a = 0;
    for (int s : side) a += s == 0;
    return {a, Fp.order() - a};
}

namespace {

double log10_int(const BigInt& z) { return log10_abs(Rational(z)); }

void need(ConstantChain& c, const char* value, std::initializer_list<std::pair<const char*, bool>> inputs, bool& ok) {
    ok = true;
    for (auto [name, present] : inputs)
        if (!present) {
            c.missing.push_back(std::string(value) + ": needs " + name);
            ok = false;
        }
}

void check_positive(const std::optional<Rational>& q, const char* name) {
    if (q && *q <= 0) throw std::invalid_argument(std::string(name) + " must be positive");
}

}  // namespace

ConstantChain derive_proof_constants(const ConstantInputs& in) {
    const Graph& F = in.F;
    if (F.size() < 2) throw std::invalid_argument("constant chain needs a pattern with at least two edges");
    for (auto [q, name] : {std::pair{&in.D, "D"}, {&in.C0, "C0"}, {&in.C1, "C1"}, {&in.lambda, "lambda"},
                           {&in.rho, "rho"}, {&in.c0, "c0"}, {&in.xi_cl, "xi_CL"}, {&in.eps_cl, "eps_CL"},
                           {&in.T0, "T0"}})
        check_positive(*q, name);
    if (in.booster_vertices && *in.booster_vertices < 1) throw std::invalid_argument("v(B) must be positive");
    if (in.booster_edges && *in.booster_edges < 1) throw std::invalid_argument("e(B) must be positive");
    if (in.ell && *in.ell < 2) throw std::invalid_argument("ell must be at least 2");

    ConstantChain c;
    auto prof = classify(F);
    c.m2 = prof.m2.value;
    c.strictly_balanced = prof.strictly_balanced;
    c.nearly_bipartite = prof.nearly_bipartite();
    if (!c.strictly_balanced) c.notes.push_back("pattern is not strictly balanced; values are formal");
    const long v = F.order();
    const long e = static_cast<long>(F.size());

    Rational inv = 1 / c.m2;
    c.delta = min(inv, 1 - inv) / 6;

    bool ok;
    need(c, "alpha_tilde", {{"booster vertices", in.booster_vertices.has_value()}}, ok);
    if (ok) {
        const long vb = *in.booster_vertices;
        BigInt den = 13 * factorial(static_cast<unsigned long>(vb));
        den *= vb * vb;
        den *= vb * vb;
        c.alpha_tilde = Rational(BigInt(1), den);
    }
    need(c, "L", {{"alpha_tilde", c.alpha_tilde.has_value()}, {"D", in.D.has_value()}}, ok);
    if (ok) c.L = ceil(Rational(e - 1) * (2 / *c.alpha_tilde) * (v * v) * *in.D);
    if (in.booster_edges) c.K = BigInt(*in.booster_edges);

    need(c, "alpha_prime", {{"L", c.L.has_value()}, {"booster edges", c.K.has_value()}}, ok);
    if (ok) {
        const BigInt KL = *c.K * *c.L;
        HugeRational ap;
        ap.formula = "alpha_tilde/(2L(KL)^L) with L=" + c.L->get_str() + ", K=" + c.K->get_str();
        ap.log10 = log10_abs(*c.alpha_tilde) - log10_int(2 * *c.L) - c.L->get_d() * log10_int(KL);
        double bits = c.L->get_d() * std::log2(KL.get_d());
        if (c.L->fits_ulong_p() && bits < static_cast<double>(in.exact_bit_cap)) {
            Rational denom = pow(Rational(KL), c.L->get_ui());
            denom *= 2 * *c.L;
            ap.exact = *c.alpha_tilde / denom;
        } else {
            c.notes.push_back("alpha_prime kept symbolic: about " + std::to_string(static_cast<long long>(bits)) +
                              " bits");
        }
        c.alpha_prime = ap;
    }
    if (c.L) {
        if (!c.L->fits_ulong_p()) throw std::invalid_argument("L too large");
        c.k = binomial(c.L->get_ui(), static_cast<unsigned long>(e - 1)) * binomial(v, 2);
        c.gamma = c.delta / (10 * Rational(*c.L));
    }
    need(c, "beta", {{"alpha_prime", c.alpha_prime.has_value()}, {"k", c.k.has_value()}, {"D", in.D.has_value()}},
         ok);
    if (ok) {
        HugeRational beta;
        Rational scale = *in.D * Rational(*c.k) * (v * v);
        beta.formula = "alpha_prime/(D k v(F)^2)";
        beta.log10 = c.alpha_prime->log10 - log10_abs(scale);
        if (c.alpha_prime->exact) beta.exact = *c.alpha_prime->exact / scale;
        c.beta = beta;
    }
    c.tau_formula = "n^(-delta/(4(ell-1)))";
    if (in.ell) c.tau_exponent = -c.delta / (4 * Rational(*in.ell - 1));

    if (!c.nearly_bipartite) {
        c.notes.push_back("pattern is not nearly bipartite; the regularity chain is skipped");
        return c;
    }
    auto [a, b] = witness_bipartition(F);
    c.a = a;
    c.b = b;
    const unsigned long ua = a, ub = b;
    if (in.C0) c.C0_prime = min(Rational(1), pow(*in.C0, e - 1));
    if (in.lambda) {
        const Rational l6 = *in.lambda / 6;
        c.gamma_kst = pow(l6, (ua - 1) * ub) / (2 * pow(Rational(a - 1), ua - 1) * pow(Rational(b), ub));
        c.t0 = 48 * Rational(a * b) / *in.lambda;
        c.d_cl = *in.lambda / 4;
    } else {
        c.missing.push_back("gamma_kst, t0, d_CL: need lambda");
    }
    need(c, "d",
         {{"lambda", in.lambda.has_value()}, {"xi_CL", in.xi_cl.has_value()}, {"C0", in.C0.has_value()},
          {"C1", in.C1.has_value()}},
         ok);
    if (ok) {
        Rational num = pow(*in.lambda / 6, 2 * (ua - 1) * ub) * pow(*in.xi_cl, 2) * pow(*in.C0, 2 * (e - 1)) *
                       *c.C0_prime;
        Rational den = 64 * pow(Rational(a), 2 * ua) * pow(Rational(b), 2 * ub) *
                       pow(Rational(v + 1), static_cast<unsigned long>(v)) * pow(*in.C1, 2 * (e - 1));
        c.d = num / den;
    }
    need(c, "eps_reg", {{"rho", in.rho.has_value()}, {"eps_CL", in.eps_cl.has_value()}, {"lambda", in.lambda.has_value()}},
         ok);
    if (ok) c.eps_reg = min(*in.rho * *in.eps_cl / 4, *in.lambda / 48);
    need(c, "eta_CL", {{"rho", in.rho.has_value()}, {"T0", in.T0.has_value()}}, ok);
    if (ok) c.eta_cl = *in.rho / (2 * *in.T0);
    need(c, "eta", {{"c0", in.c0.has_value()}, {"T0", in.T0.has_value()}}, ok);
    if (ok) c.eta = *in.c0 / pow(*in.T0, static_cast<unsigned long>(v));
    return c;
}

}  // namespace ramsey
