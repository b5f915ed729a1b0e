#include "ramsey/arrowing.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ramsey {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Arrows: return "arrows";
        case Verdict::NotArrows: return "not_arrows";
        case Verdict::Undecided: return "undecided";
    }
    return "?";
}

FreeCheck is_f_free(const EdgeColoring& colouring, const Graph& G, const Graph& F) {
    if (colouring.size() != G.size())
        throw std::invalid_argument("colouring covers " + std::to_string(colouring.size()) + " of " +
                                    std::to_string(G.size()) + " edges");
    FreeCheck out;
    if (F.empty()) throw std::invalid_argument("pattern has no edges");
    if (F.order() > G.order()) return out;
    for (auto& c : enumerate_copies(F, G).copies) {
        auto col = colouring[c.edges.front()];
        bool mono = std::all_of(c.edges.begin(), c.edges.end(), [&](EdgeId e) { return colouring[e] == col; });
        if (mono) {
            out.free = false;
            out.witness = std::move(c);
            return out;
        }
    }
    return out;
}

namespace {

class NaeSolver {
public:
    NaeSolver(std::size_t n, std::vector<std::vector<std::uint32_t>> cons, const ArrowOptions& opts)
        : n_(n), cons_(std::move(cons)), r_(opts.colours), budget_(opts.node_budget) {
        occ_.resize(n_);
        for (std::uint32_t k = 0; k < cons_.size(); ++k)
            for (auto v : cons_[k]) occ_[v].push_back(k);
        value_.assign(n_, -1);
        full_ = static_cast<std::uint16_t>((1u << r_) - 1);
        domain_.assign(n_, full_);
        cnt_.assign(cons_.size() * r_, 0);
        free_.resize(cons_.size());
        for (std::size_t k = 0; k < cons_.size(); ++k) free_[k] = static_cast<std::uint32_t>(cons_[k].size());
    }

    ArrowResult run() {
        ArrowResult res;
        res.stats.constraints = cons_.size();
        for (std::size_t v = 0; v < n_; ++v) res.stats.variables += !occ_[v].empty();
        for (const auto& c : cons_)
            if (c.size() < 2 || r_ == 1) {
                res.verdict = Verdict::Arrows;
                return res;
            }
        // Independent components of the constraint hypergraph are solved one at a
        // time; colour symmetry can be broken in each.
        std::vector<std::uint32_t> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::uint32_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& c : cons_)
            for (std::size_t i = 1; i < c.size(); ++i) parent[find(c[i])] = find(c[0]);
        std::vector<std::vector<std::uint32_t>> comps;
        std::vector<int> comp_of(n_, -1);
        for (std::uint32_t v = 0; v < n_; ++v) {
            if (occ_[v].empty()) continue;
            auto root = find(v);
            if (comp_of[root] < 0) {
                comp_of[root] = static_cast<int>(comps.size());
                comps.emplace_back();
            }
            comps[comp_of[root]].push_back(v);
        }
        for (const auto& comp : comps) {
            first_decision_ = true;
            Outcome o = search(comp);
            if (o != Outcome::Sat) {
                res.verdict = o == Outcome::Unsat ? Verdict::Arrows : Verdict::Undecided;
                res.stats.nodes = nodes_;
                res.stats.propagations = props_;
                return res;
            }
        }
        res.verdict = Verdict::NotArrows;
        EdgeColoring col(n_, 0);
        for (std::size_t v = 0; v < n_; ++v) col[v] = static_cast<std::uint8_t>(value_[v] < 0 ? 0 : value_[v]);
        res.certificate = std::move(col);
        res.stats.nodes = nodes_;
        res.stats.propagations = props_;
        return res;
    }

private:
    enum class Outcome { Sat, Unsat, Budget };
    struct Event {
        std::uint32_t var;
        int old_domain;  // -1 marks an assignment
    };

    bool satisfied(std::uint32_t k) const {
        int seen = 0;
        for (int c = 0; c < r_; ++c) seen += cnt_[k * r_ + c] > 0;
        return seen >= 2;
    }

    // Assigns and propagates to fixpoint; false on conflict.
    bool assign(std::uint32_t var, int colour) {
        queue_.clear();
        queue_.push_back({var, colour});
        for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
            auto [v, c] = queue_[qi];
            if (value_[v] >= 0) {
                if (value_[v] != c) return false;
                continue;
            }
            if (!(domain_[v] >> c & 1)) return false;
            if (qi > 0) ++props_;
            value_[v] = c;
            trail_.push_back({v, -1});
            // Counters first, so that undo stays symmetric even if a check fails below.
            for (auto k : occ_[v]) {
                ++cnt_[k * r_ + c];
                --free_[k];
            }
            for (auto k : occ_[v]) {
                const auto cc = cnt_[k * r_ + c];
                const auto size = cons_[k].size();
                if (cc == size) return false;
                if (free_[k] == 1 && cc == size - 1) {
                    for (auto w : cons_[k]) {
                        if (value_[w] >= 0) continue;
                        if (domain_[w] >> c & 1) {
                            trail_.push_back({w, domain_[w]});
                            domain_[w] = static_cast<std::uint16_t>(domain_[w] & ~(1u << c));
                            if (domain_[w] == 0) return false;
                            if (std::has_single_bit(static_cast<unsigned>(domain_[w])))
                                queue_.push_back({w, std::countr_zero(static_cast<unsigned>(domain_[w]))});
                        }
                        break;
                    }
                }
            }
        }
        return true;
    }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            Event e = trail_.back();
            trail_.pop_back();
            if (e.old_domain >= 0) {
                domain_[e.var] = static_cast<std::uint16_t>(e.old_domain);
                continue;
            }
            int c = value_[e.var];
            for (auto k : occ_[e.var]) {
                --cnt_[k * r_ + c];
                ++free_[k];
            }
            value_[e.var] = -1;
        }
    }

    Outcome search(const std::vector<std::uint32_t>& comp) {
        if (++nodes_ > budget_) return Outcome::Budget;
        std::int64_t best = -1;
        std::uint32_t pick = 0;
        for (auto v : comp) {
            if (value_[v] >= 0) continue;
            std::int64_t score = 0;
            for (auto k : occ_[v]) score += !satisfied(k);
            if (score > best) {
                best = score;
                pick = v;
            }
        }
        if (best < 0) return Outcome::Sat;
        if (best == 0) {
            // Every constraint is already satisfied; any admissible colours will do.
            for (auto v : comp)
                if (value_[v] < 0) {
                    value_[v] = std::countr_zero(static_cast<unsigned>(domain_[v]));
                    trail_.push_back({v, -1});
                    for (auto k : occ_[v]) {
                        ++cnt_[k * r_ + value_[v]];
                        --free_[k];
                    }
                }
            return Outcome::Sat;
        }
        std::uint16_t dom = domain_[pick];
        if (first_decision_) {
            first_decision_ = false;
            dom &= 1;
        }
        for (int c = 0; c < r_; ++c) {
            if (!(dom >> c & 1)) continue;
            auto mark = trail_.size();
            if (assign(pick, c)) {
                Outcome o = search(comp);
                if (o != Outcome::Unsat) return o;
            }
            undo(mark);
        }
        return Outcome::Unsat;
    }

    std::size_t n_;
    std::vector<std::vector<std::uint32_t>> cons_;
    int r_;
    std::uint64_t budget_;
    std::vector<std::vector<std::uint32_t>> occ_;
    std::vector<int> value_;
    std::vector<std::uint16_t> domain_;
    std::uint16_t full_ = 3;
    std::vector<std::uint32_t> cnt_;
    std::vector<std::uint32_t> free_;
    std::vector<Event> trail_;
    std::vector<std::pair<std::uint32_t, int>> queue_;
    std::uint64_t nodes_ = 0, props_ = 0;
    bool first_decision_ = true;
};

std::vector<std::vector<std::uint32_t>> copy_constraints(const Graph& G, const Graph& F) {
    if (F.empty()) throw std::invalid_argument("pattern has no edges");
    check_pattern_size(F, "arrowing");
    std::vector<std::vector<std::uint32_t>> cons;
    if (F.order() > G.order()) return cons;
    for (auto& c : enumerate_copies(F, G).copies) cons.push_back(std::move(c.edges));
    std::sort(cons.begin(), cons.end());
    cons.erase(std::unique(cons.begin(), cons.end()), cons.end());
    return cons;
}

}  // namespace

ArrowResult solve_nae(std::size_t num_vars, const std::vector<std::vector<std::uint32_t>>& constraints,
                      const ArrowOptions& opts) {
    if (opts.colours < 1 || opts.colours > 8) throw std::invalid_argument("colours must be in [1,8]");
    auto cons = constraints;
    for (auto& c : cons) {
        if (c.empty()) throw std::invalid_argument("empty constraint");
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        if (c.back() >= num_vars) throw std::invalid_argument("constraint variable out of range");
    }
    std::sort(cons.begin(), cons.end());
    cons.erase(std::unique(cons.begin(), cons.end()), cons.end());
    return NaeSolver(num_vars, std::move(cons), opts).run();
}

ArrowResult decide_arrow(const Graph& G, const Graph& F, const ArrowOptions& opts) {
    return solve_nae(G.size(), copy_constraints(G, F), opts);
}

ArrowResult brute_force_arrow(const Graph& G, const Graph& F) {
    auto cons = copy_constraints(G, F);
    std::vector<EdgeId> vars;
    for (const auto& c : cons) vars.insert(vars.end(), c.begin(), c.end());
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    if (vars.size() > kBruteForceEdgeCap)
        throw std::invalid_argument("brute force capped at " + std::to_string(kBruteForceEdgeCap) +
                                    " constrained edges, have " + std::to_string(vars.size()));
    std::vector<std::uint32_t> masks;
    for (const auto& c : cons) {
        std::uint32_t m = 0;
        for (auto e : c) m |= 1u << (std::lower_bound(vars.begin(), vars.end(), e) - vars.begin());
        masks.push_back(m);
    }
    ArrowResult res;
    res.stats.constraints = cons.size();
    res.stats.variables = vars.size();
    // Bit i set means vars[i] is blue; vars[0] stays red by colour symmetry.
    const std::uint64_t total = vars.empty() ? 1 : std::uint64_t{1} << (vars.size() - 1);
    for (std::uint64_t half = 0; half < total; ++half) {
        std::uint32_t col = static_cast<std::uint32_t>(half << 1);
        ++res.stats.nodes;
        bool ok = true;
        for (auto m : masks)
            if ((col & m) == 0 || (col & m) == m) {
                ok = false;
                break;
            }
        if (ok) {
            EdgeColoring out(G.size(), 0);
            for (std::size_t i = 0; i < vars.size(); ++i) out[vars[i]] = col >> i & 1;
            res.verdict = Verdict::NotArrows;
            res.certificate = std::move(out);
            return res;
        }
    }
    res.verdict = Verdict::Arrows;
    return res;
}

ArrowResult decide_arrow_union(const Graph& Z, const Graph& addition, const Graph& F, const ArrowOptions& opts) {
    if (Z.order() != addition.order()) throw std::invalid_argument("union of graphs on different vertex sets");
    Graph U = graph_union(Z, addition);
    auto cons = copy_constraints(U, F);
    ArrowResult res = solve_nae(U.size(), cons, opts);
    for (const auto& c : cons) {
        bool in_z = true, in_add = true;
        for (auto e : c) {
            const Edge& ed = U.edge(e);
            in_z = in_z && Z.adjacent(ed.u, ed.v);
            in_add = in_add && addition.adjacent(ed.u, ed.v);
        }
        if (in_z)
            ++res.stats.copies_in_base;
        else if (in_add)
            ++res.stats.copies_in_addition;
        else
            ++res.stats.copies_mixed;
    }
    return res;
}

std::string to_dimacs(const Graph& G, const Graph& F) {
    auto cons = copy_constraints(G, F);
    std::ostringstream out;
    out << "c NAE encoding: true = blue, two clauses per copy\n";
    out << "p cnf " << G.size() << ' ' << 2 * cons.size() << '\n';
    for (const auto& c : cons) {
        for (auto e : c) out << '-' << e + 1 << ' ';
        out << "0\n";
        for (auto e : c) out << e + 1 << ' ';
        out << "0\n";
    }
    return out.str();
}

}  // namespace ramsey
