#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ramsey/graph.hpp"

namespace ramsey {

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t offset);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

enum class GraphFormat { Graph6, EdgeList };

Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// "n" on the first line, then one "u v" pair per line. Any whitespace is accepted.
Graph parse_edge_list(std::string_view text);
/// Canonical edge list: edges in sorted order, one per line, trailing newline.
std::string to_edge_list(const Graph& g);

/// Edge lists start with a decimal vertex count; anything else is read as graph6.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g, GraphFormat format = GraphFormat::EdgeList);

Graph read_graph_file(const std::string& path);
/// Named graph ("K6", "C5", ...), a file path, or "-" for standard input.
Graph load_graph(const std::string& spec);

}  // namespace ramsey
