#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace homdual {

using Vertex = int;
inline constexpr Vertex kNoVertex = -1;

struct Arc {
  Vertex from = 0;
  Vertex to = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

struct Edge {
  Vertex u = 0;  // u < v after normalisation
  Vertex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Finite loopless digraph on vertices 0..order-1. Arcs are kept sorted and
// unique; symmetric pairs (u,v),(v,u) are allowed. Immutable once built.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int order);
  // Throws ValidationError on loops or endpoints outside [0, order).
  // Duplicate arcs collapse.
  Digraph(int order, std::vector<Arc> arcs);

  int order() const noexcept { return order_; }
  std::size_t arc_count() const noexcept { return arcs_.size(); }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }

  bool has_arc(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return has_arc(u, v) || has_arc(v, u); }

  std::span<const Vertex> out_neighbours(Vertex v) const { return out_[static_cast<std::size_t>(v)]; }
  std::span<const Vertex> in_neighbours(Vertex v) const { return in_[static_cast<std::size_t>(v)]; }
  int out_degree(Vertex v) const { return static_cast<int>(out_[static_cast<std::size_t>(v)].size()); }
  int in_degree(Vertex v) const { return static_cast<int>(in_[static_cast<std::size_t>(v)].size()); }

  // Sorted, duplicate-free union of in- and out-neighbours.
  std::vector<Vertex> neighbours(Vertex v) const;

  // True when no symmetric pair is present.
  bool is_oriented() const noexcept { return !symmetric_.has_value(); }
  // Lexicographically first (u,v), u < v, with both (u,v) and (v,u) present.
  std::optional<Arc> symmetric_pair() const noexcept { return symmetric_; }

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.order_ == b.order_ && a.arcs_ == b.arcs_;
  }

 private:
  int order_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::optional<Arc> symmetric_;
};

// A Digraph with no symmetric pair. Family constructors return this type.
class OrientedGraph : public Digraph {
 public:
  OrientedGraph() = default;
  explicit OrientedGraph(Digraph g);
  OrientedGraph(int order, std::vector<Arc> arcs);
};

class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(int order);
  // Edges are normalised to u < v; duplicates collapse. Self-edges and
  // out-of-range endpoints throw ValidationError.
  UndirectedGraph(int order, std::vector<Edge> edges);

  int order() const noexcept { return order_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool has_edge(Vertex u, Vertex v) const;
  std::span<const Vertex> neighbours(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

  friend bool operator==(const UndirectedGraph& a, const UndirectedGraph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  int order_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

enum class Step : std::uint8_t { Forward, Backward };

struct Pattern {
  std::vector<Step> steps;

  std::size_t size() const noexcept { return steps.size(); }
  bool empty() const noexcept { return steps.empty(); }
  // "F"/"B" string, e.g. "FFBFF".
  std::string to_string() const;
  // Inverse of to_string; throws ValidationError on other characters.
  static Pattern parse(std::string_view text);
  // Same path read from the other end: reversed and every symbol flipped.
  Pattern reversed() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;
};

// v_1 a_1 v_2 ... v_k; steps[i] says whether a_i is (v_i, v_{i+1}) or
// (v_{i+1}, v_i). Vertices may repeat.
struct SemiWalk {
  std::vector<Vertex> vertices;
  std::vector<Step> steps;

  friend bool operator==(const SemiWalk&, const SemiWalk&) = default;
};

struct LevelAssignment {
  std::vector<int> level;
  int height = 0;
};

// Reason the walk is not a semi-walk of g, or nullopt when it is.
std::optional<std::string> walk_violation(const Digraph& g, const SemiWalk& walk);
inline bool is_walk_in(const Digraph& g, const SemiWalk& walk) { return !walk_violation(g, walk); }

// Direction sequence of a walk with at least two vertices.
Pattern pattern_of(const SemiWalk& walk);

// Forward minus backward arcs along a traversal that uses every arc of the
// host exactly once (a path from one end to the other, or a closed cycle).
int net_length(const Digraph& path_or_cycle, const SemiWalk& traversal);

// max - min of the cumulative level along an oriented path. The path maps
// into the directed path on k vertices iff level_spread <= k - 1.
int level_spread(const Digraph& path);

bool is_balanced(const Digraph& g);
// Requires g connected and balanced; normalised so the minimum level is 0.
LevelAssignment levels(const Digraph& g);

// Semi-walk whose pattern is p, or nullopt. Layered reachability with one
// stored predecessor per vertex and layer (smallest id wins), so the result
// is deterministic. Runs in O(|p| * (|V| + |A|)).
std::optional<SemiWalk> find_pattern_walk(const Digraph& g, const Pattern& p);

// Weak components, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Digraph& g);
std::vector<std::vector<Vertex>> connected_components(const UndirectedGraph& g);
bool is_connected(const Digraph& g);
bool is_connected(const UndirectedGraph& g);

// Subgraph induced on `vertices`, relabelled so vertices[i] becomes i.
Digraph induced_subgraph(const Digraph& g, std::span<const Vertex> vertices);
Digraph converse(const Digraph& g);
UndirectedGraph underlying(const Digraph& g);
// Both arcs for every edge; used to run digraph searches on graphs.
Digraph symmetric_digraph(const UndirectedGraph& g);

bool is_oriented_path(const Digraph& g);
bool is_oriented_cycle(const Digraph& g);
bool is_oriented_tree(const Digraph& g);
bool has_directed_cycle(const Digraph& g);

// Traversal of an oriented path starting at its smallest-id end vertex;
// a single vertex gives a one-vertex walk. Throws ValidationError otherwise.
SemiWalk path_traversal(const Digraph& path);
// Closed traversal of an oriented cycle starting at vertex 0 and moving
// first towards its smaller neighbour. Throws ValidationError otherwise.
SemiWalk cycle_traversal(const Digraph& cycle);

}  // namespace homdual
