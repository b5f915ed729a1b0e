#include "ramsey/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <stdexcept>

namespace ramsey {

Edge make_edge(int a, int b) {
    if (a == b) throw std::invalid_argument("loop at vertex " + std::to_string(a));
    return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    words_ = (static_cast<std::size_t>(n) + 63) / 64;
    adj_.assign(static_cast<std::size_t>(n) * words_, 0);
    for (auto& e : edges) {
        e = make_edge(e.u, e.v);
        check_vertex(e.u);
        check_vertex(e.v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("repeated edge");
    edges_ = std::move(edges);
    for (const auto& e : edges_) {
        adj_[e.u * words_ + e.v / 64] |= std::uint64_t{1} << (e.v % 64);
        adj_[e.v * words_ + e.u / 64] |= std::uint64_t{1} << (e.u % 64);
    }
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u * words_ + v / 64] >> (v % 64)) & 1;
}

std::optional<EdgeId> Graph::edge_id(int u, int v) const {
    if (u == v) return std::nullopt;
    Edge e = make_edge(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<EdgeId>(it - edges_.begin());
}

std::span<const std::uint64_t> Graph::row(int v) const {
    check_vertex(v);
    return {adj_.data() + v * words_, words_};
}

int Graph::degree(int v) const {
    int d = 0;
    for (auto w : row(v)) d += std::popcount(w);
    return d;
}

std::vector<int> Graph::neighbours(int v) const {
    std::vector<int> out;
    auto r = row(v);
    for (std::size_t i = 0; i < words_; ++i) {
        auto w = r[i];
        while (w) {
            out.push_back(static_cast<int>(i * 64 + std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

Graph Graph::induced(std::span<const int> vertices) const {
    std::vector<int> pos(n_, -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        check_vertex(vertices[i]);
        if (pos[vertices[i]] != -1) throw std::invalid_argument("repeated vertex in induced()");
        pos[vertices[i]] = static_cast<int>(i);
    }
    std::vector<Edge> es;
    for (const auto& e : edges_)
        if (pos[e.u] >= 0 && pos[e.v] >= 0) es.push_back(make_edge(pos[e.u], pos[e.v]));
    return Graph(static_cast<int>(vertices.size()), std::move(es));
}

Graph Graph::without_edge(EdgeId id) const {
    if (id >= edges_.size()) throw std::out_of_range("edge id");
    std::vector<Edge> es = edges_;
    es.erase(es.begin() + id);
    return Graph(n_, std::move(es));
}

Graph Graph::with_edge(Edge e) const {
    e = make_edge(e.u, e.v);
    if (adjacent(e.u, e.v)) return *this;
    std::vector<Edge> es = edges_;
    es.push_back(e);
    return Graph(n_, std::move(es));
}

std::size_t Graph::induced_edge_count(std::span<const int> vertices) const {
    std::vector<std::uint64_t> mask(words_, 0);
    for (int v : vertices) {
        check_vertex(v);
        mask[v / 64] |= std::uint64_t{1} << (v % 64);
    }
    std::size_t twice = 0;
    for (std::size_t i = 0; i < words_; ++i) {
        auto w = mask[i];
        while (w) {
            int v = static_cast<int>(i * 64 + std::countr_zero(w));
            w &= w - 1;
            auto r = row(v);
            for (std::size_t j = 0; j < words_; ++j) twice += std::popcount(r[j] & mask[j]);
        }
    }
    return twice / 2;
}

Graph graph_union(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) throw std::invalid_argument("union of graphs with different vertex counts");
    std::vector<Edge> es;
    es.reserve(a.size() + b.size());
    std::set_union(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end(),
                   std::back_inserter(es));
    return Graph(a.order(), std::move(es));
}

bool is_subgraph(const Graph& sub, const Graph& super) {
    if (sub.order() != super.order()) return false;
    return std::includes(super.edges().begin(), super.edges().end(), sub.edges().begin(), sub.edges().end());
}

namespace {

std::vector<char> membership(const Graph& g, std::span<const int> U) {
    std::vector<char> in(g.order(), 0);
    for (int u : U) {
        if (u < 0 || u >= g.order()) throw std::invalid_argument("vertex " + std::to_string(u) + " out of range");
        in[u] = 1;
    }
    return in;
}

}  // namespace

std::size_t edge_count_between(const Graph& g, std::span<const int> U) {
    auto in = membership(g, U);
    std::size_t c = 0;
    for (const auto& e : g.edges()) c += in[e.u] && in[e.v];
    return c;
}

std::size_t edge_count_between(const Graph& g, std::span<const int> U, std::span<const int> W) {
    auto inU = membership(g, U);
    auto inW = membership(g, W);
    for (int v = 0; v < g.order(); ++v)
        if (inU[v] && inW[v]) throw std::invalid_argument("vertex sets overlap at " + std::to_string(v));
    std::size_t c = 0;
    for (const auto& e : g.edges()) c += (inU[e.u] && inW[e.v]) || (inW[e.u] && inU[e.v]);
    return c;
}

bool is_bipartite(const Graph& g) {
    std::vector<int> side(g.order(), -1);
    std::vector<int> stack;
    for (int s = 0; s < g.order(); ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbours(v)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    stack.push_back(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace named {

Graph empty(int n) { return Graph(n); }

Graph complete(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.push_back({i, j});
    return Graph(n, std::move(es));
}

Graph cycle(int k) {
    if (k < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> es;
    for (int i = 0; i < k; ++i) es.push_back(make_edge(i, (i + 1) % k));
    return Graph(k, std::move(es));
}

Graph path(int k) {
    if (k < 1) throw std::invalid_argument("path needs at least 1 vertex");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < k; ++i) es.push_back({i, i + 1});
    return Graph(k, std::move(es));
}

Graph complete_minus_edge(int k) {
    if (k < 2) throw std::invalid_argument("K_k-e needs k >= 2");
    auto g = complete(k);
    return g.without_edge(0);
}

Graph complete_bipartite(int a, int b) {
    std::vector<Edge> es;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) es.push_back({i, a + j});
    return Graph(a + b, std::move(es));
}

Graph star(int k) { return complete_bipartite(1, k); }

}  // namespace named

namespace {

bool parse_int(std::string_view s, int& out) {
    if (s.empty()) return false;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && p == s.data() + s.size() && out >= 0;
}

constexpr int kNamedLimit = 4096;

}  // namespace

Graph parse_named_graph(const std::string& name) {
    auto bad = [&] { return std::invalid_argument("unrecognised graph name '" + name + "'"); };
    if (name.size() < 2) throw bad();
    std::string_view body(name);
    char kind = body[0];
    body.remove_prefix(1);
    int k = 0;
    if (kind == 'K') {
        if (body.ends_with("-e")) {
            if (!parse_int(body.substr(0, body.size() - 2), k) || k < 2 || k > kNamedLimit) throw bad();
            return named::complete_minus_edge(k);
        }
        if (auto comma = body.find(','); comma != std::string_view::npos) {
            int a = 0, b = 0;
            if (!parse_int(body.substr(0, comma), a) || !parse_int(body.substr(comma + 1), b) || a < 1 || b < 1 ||
                a + b > kNamedLimit)
                throw bad();
            return named::complete_bipartite(a, b);
        }
        if (!parse_int(body, k) || k < 1 || k > kNamedLimit) throw bad();
        return named::complete(k);
    }
    if (kind == 'C') {
        if (!parse_int(body, k) || k < 3 || k > kNamedLimit) throw bad();
        return named::cycle(k);
    }
    if (kind == 'P') {
        if (!parse_int(body, k) || k < 1 || k > kNamedLimit) throw bad();
        return named::path(k);
    }
    if (kind == 'E') {
        if (!parse_int(body, k) || k < 1 || k > kNamedLimit) throw bad();
        return named::empty(k);
    }
    throw bad();
}

bool is_named_graph(const std::string& name) {
    try {
        parse_named_graph(name);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

}  // namespace ramsey
