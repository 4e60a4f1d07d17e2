#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "homdual/digraph.hpp"

namespace homdual {

// Text graph format:
//
//   # comment
//   digraph 5        (or: graph 5)
//   0 1
//   2 1
//
// The header is the first non-blank, non-comment line. Every later line is
// an arc u->v (digraph) or an edge {u,v} (graph). `#` starts a comment
// anywhere on a line.
using AnyGraph = std::variant<Digraph, UndirectedGraph>;

// Throws ValidationError with the offending line number.
AnyGraph parse_graph(std::string_view text);
AnyGraph read_graph_file(const std::filesystem::path& path);

// Convenience wrappers that also reject the wrong kind of graph.
Digraph read_digraph_file(const std::filesystem::path& path);
UndirectedGraph read_undirected_file(const std::filesystem::path& path);

// Header plus one sorted arc/edge per line; parse_graph(format_graph(g)) == g.
std::string format_graph(const Digraph& g);
std::string format_graph(const UndirectedGraph& g);
std::string format_graph(const AnyGraph& g);

}  // namespace homdual
