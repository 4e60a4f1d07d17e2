#include "homdual/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "homdual/error.hpp"

namespace homdual {

namespace {

std::string_view strip(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  const auto first = line.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = line.find_last_not_of(" \t\r");
  return line.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) tokens.push_back(s.substr(i, j - i));
    i = j;
  }
  return tokens;
}

int to_int(std::string_view token, std::size_t line_no) {
  int value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ValidationError("line " + std::to_string(line_no) + ": '" + std::string(token) + "' is not an integer");
  }
  return value;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw ValidationError("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

AnyGraph parse_graph(std::string_view text) {
  enum class Kind { None, Directed, Undirected } kind = Kind::None;
  int order = 0;
  std::vector<std::pair<int, int>> pairs;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    ++line_no;
    const std::string_view line = strip(text.substr(pos, nl - pos));
    pos = nl + 1;
    if (line.empty()) continue;
    const auto tokens = split_ws(line);
    if (kind == Kind::None) {
      if (tokens.size() != 2 || (tokens[0] != "digraph" && tokens[0] != "graph")) {
        fail(line_no, "expected header 'digraph N' or 'graph N'");
      }
      kind = tokens[0] == "digraph" ? Kind::Directed : Kind::Undirected;
      order = to_int(tokens[1], line_no);
      if (order < 0) fail(line_no, "vertex count must be non-negative");
      continue;
    }
    if (tokens.size() != 2) fail(line_no, "expected a vertex pair 'u v'");
    const int u = to_int(tokens[0], line_no);
    const int v = to_int(tokens[1], line_no);
    if (u < 0 || u >= order || v < 0 || v >= order) {
      fail(line_no, "vertex out of range [0, " + std::to_string(order) + ")");
    }
    if (u == v) fail(line_no, "loop at vertex " + std::to_string(u) + " is not allowed");
    pairs.emplace_back(u, v);
  }
  if (kind == Kind::None) throw ValidationError("graph text has no 'digraph N' / 'graph N' header");
  if (kind == Kind::Directed) {
    std::vector<Arc> arcs;
    arcs.reserve(pairs.size());
    for (auto [u, v] : pairs) arcs.push_back({u, v});
    return Digraph(order, std::move(arcs));
  }
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) edges.push_back({u, v});
  return UndirectedGraph(order, std::move(edges));
}

AnyGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read graph file '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_graph(buffer.str());
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

Digraph read_digraph_file(const std::filesystem::path& path) {
  auto g = read_graph_file(path);
  if (auto* d = std::get_if<Digraph>(&g)) return std::move(*d);
  throw ValidationError(path.string() + ": expected a digraph, found an undirected graph");
}

UndirectedGraph read_undirected_file(const std::filesystem::path& path) {
  auto g = read_graph_file(path);
  if (auto* u = std::get_if<UndirectedGraph>(&g)) return std::move(*u);
  throw ValidationError(path.string() + ": expected an undirected graph, found a digraph");
}

std::string format_graph(const Digraph& g) {
  std::string out = "digraph " + std::to_string(g.order()) + "\n";
  for (const Arc& a : g.arcs()) out += std::to_string(a.from) + " " + std::to_string(a.to) + "\n";
  return out;
}

std::string format_graph(const UndirectedGraph& g) {
  std::string out = "graph " + std::to_string(g.order()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

std::string format_graph(const AnyGraph& g) {
  return std::visit([](const auto& x) { return format_graph(x); }, g);
}

}  // namespace homdual
