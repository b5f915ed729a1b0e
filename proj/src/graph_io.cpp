#include "ramsey/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace ramsey {

ParseError::ParseError(const std::string& what, std::size_t offset)
    : std::invalid_argument(what + " at byte " + std::to_string(offset)), offset_(offset) {}

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim_right(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    std::size_t base = 0;
    if (text.starts_with(kGraph6Header)) base = kGraph6Header.size();
    std::string_view s = trim_right(text.substr(base));
    std::size_t i = 0;
    auto byte = [&](std::size_t at) -> int {
        if (at >= s.size()) throw ParseError("truncated graph6", base + at);
        int c = static_cast<unsigned char>(s[at]);
        if (c < 63 || c > 126) throw ParseError("invalid graph6 byte", base + at);
        return c - 63;
    };
    if (s.empty()) throw ParseError("empty graph6", base);
    long long n = 0;
    if (s[0] != 126) {
        n = byte(0);
        i = 1;
    } else if (s.size() > 1 && s[1] != 126) {
        for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | byte(k);
        i = 4;
    } else {
        for (std::size_t k = 2; k <= 7; ++k) n = (n << 6) | byte(k);
        i = 8;
    }
    if (n > (1 << 20)) throw ParseError("graph6 vertex count too large", base);
    std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t need = (bits + 5) / 6;
    if (s.size() - i < need) throw ParseError("truncated graph6", base + s.size());
    if (s.size() - i > need) throw ParseError("trailing data after graph6", base + i + need);
    std::vector<Edge> es;
    std::size_t k = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++k) {
            int chunk = byte(i + k / 6);
            if ((chunk >> (5 - k % 6)) & 1) es.push_back({u, v});
        }
    for (; k < need * 6; ++k)
        if ((byte(i + k / 6) >> (5 - k % 6)) & 1) throw ParseError("nonzero graph6 padding", base + i + k / 6);
    return Graph(static_cast<int>(n), std::move(es));
}

std::string to_graph6(const Graph& g) {
    std::string out;
    long long n = g.order();
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int sh = 12; sh >= 0; sh -= 6) out.push_back(static_cast<char>(63 + ((n >> sh) & 63)));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int sh = 30; sh >= 0; sh -= 6) out.push_back(static_cast<char>(63 + ((n >> sh) & 63)));
    }
    int acc = 0, filled = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = filled = 0;
            }
        }
    if (filled) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_int = [&](const char* what) -> long long {
        skip_ws();
        if (pos >= text.size()) throw ParseError(std::string("expected ") + what, pos);
        std::size_t start = pos;
        long long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > (1LL << 31)) throw ParseError("integer too large", start);
            ++pos;
        }
        if (pos == start || (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))))
            throw ParseError(std::string("malformed ") + what, pos == start ? start : pos);
        return v;
    };
    long long n = read_int("vertex count");
    if (n > (1 << 20)) throw ParseError("vertex count too large", 0);
    std::vector<Edge> es;
    std::vector<std::size_t> offsets;
    for (;;) {
        skip_ws();
        if (pos >= text.size()) break;
        std::size_t at = pos;
        long long u = read_int("edge endpoint");
        long long v = read_int("edge endpoint");
        if (u >= n || v >= n) throw ParseError("edge endpoint out of range", at);
        if (u == v) throw ParseError("loop edge", at);
        es.push_back(make_edge(static_cast<int>(u), static_cast<int>(v)));
        offsets.push_back(at);
    }
    std::vector<std::size_t> order(es.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return es[a] < es[b] || (es[a] == es[b] && a < b); });
    for (std::size_t k = 1; k < order.size(); ++k)
        if (es[order[k]] == es[order[k - 1]]) throw ParseError("repeated edge", offsets[order[k]]);
    return Graph(static_cast<int>(n), std::move(es));
}

std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + "\n";
    for (const auto& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

Graph parse_graph(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    bool edge_list = j > i && (j == text.size() || std::isspace(static_cast<unsigned char>(text[j])));
    if (edge_list) return parse_edge_list(text);
    return parse_graph6(text.substr(i));
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
    return format == GraphFormat::Graph6 ? to_graph6(g) + "\n" : to_edge_list(g);
}

Graph read_graph_file(const std::string& path) {
    std::string data;
    if (path == "-") {
        data.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw std::invalid_argument("cannot open graph file '" + path + "'");
        data.assign(std::istreambuf_iterator<char>(in), {});
    }
    return parse_graph(data);
}

Graph load_graph(const std::string& spec) {
    if (is_named_graph(spec)) return parse_named_graph(spec);
    return read_graph_file(spec);
}

}  // namespace ramsey
