#include "homdual/digraph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

#include "homdual/error.hpp"

namespace homdual {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

void check_order(int order) {
  if (order < 0) throw ValidationError("graph order must be non-negative");
}

void check_endpoint(Vertex v, int order) {
  if (v < 0 || v >= order) {
    throw ValidationError("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(order) + ")");
  }
}

}  // namespace

Digraph::Digraph(int order) : Digraph(order, {}) {}

Digraph::Digraph(int order, std::vector<Arc> arcs) : order_(order) {
  check_order(order);
  for (const Arc& a : arcs) {
    check_endpoint(a.from, order);
    check_endpoint(a.to, order);
    if (a.from == a.to) throw ValidationError("loop at vertex " + std::to_string(a.from) + ": loops are not allowed");
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  arcs_ = std::move(arcs);
  out_.assign(idx(order), {});
  in_.assign(idx(order), {});
  for (const Arc& a : arcs_) {
    out_[idx(a.from)].push_back(a.to);
    in_[idx(a.to)].push_back(a.from);
  }
  // arcs_ is sorted by (from, to) so out_ lists are sorted already.
  for (auto& list : in_) std::sort(list.begin(), list.end());
  for (const Arc& a : arcs_) {
    if (a.from < a.to && has_arc(a.to, a.from)) {
      symmetric_ = a;
      break;
    }
  }
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
  if (u < 0 || u >= order_ || v < 0 || v >= order_) return false;
  const auto& list = out_[idx(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Vertex> Digraph::neighbours(Vertex v) const {
  std::vector<Vertex> result;
  const auto& out = out_[idx(v)];
  const auto& in = in_[idx(v)];
  result.reserve(out.size() + in.size());
  std::set_union(out.begin(), out.end(), in.begin(), in.end(), std::back_inserter(result));
  return result;
}

OrientedGraph::OrientedGraph(Digraph g) : Digraph(std::move(g)) {
  if (auto pair = symmetric_pair()) {
    throw ValidationError("symmetric arc pair " + std::to_string(pair->from) + " <-> " + std::to_string(pair->to) +
                          ": oriented graphs admit at most one arc per vertex pair");
  }
}

OrientedGraph::OrientedGraph(int order, std::vector<Arc> arcs) : OrientedGraph(Digraph(order, std::move(arcs))) {}

UndirectedGraph::UndirectedGraph(int order) : UndirectedGraph(order, {}) {}

UndirectedGraph::UndirectedGraph(int order, std::vector<Edge> edges) : order_(order) {
  check_order(order);
  for (Edge& e : edges) {
    check_endpoint(e.u, order);
    check_endpoint(e.v, order);
    if (e.u == e.v) throw ValidationError("self-edge at vertex " + std::to_string(e.u) + ": not allowed");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  adj_.assign(idx(order), {});
  for (const Edge& e : edges_) {
    adj_[idx(e.u)].push_back(e.v);
    adj_[idx(e.v)].push_back(e.u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

bool UndirectedGraph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || u >= order_ || v < 0 || v >= order_) return false;
  const auto& list = adj_[idx(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

std::string Pattern::to_string() const {
  std::string s;
  s.reserve(steps.size());
  for (Step st : steps) s.push_back(st == Step::Forward ? 'F' : 'B');
  return s;
}

Pattern Pattern::parse(std::string_view text) {
  Pattern p;
  p.steps.reserve(text.size());
  for (char c : text) {
    if (c == 'F') {
      p.steps.push_back(Step::Forward);
    } else if (c == 'B') {
      p.steps.push_back(Step::Backward);
    } else {
      throw ValidationError(std::string("pattern symbol '") + c + "' is not F or B");
    }
  }
  return p;
}

Pattern Pattern::reversed() const {
  Pattern p;
  p.steps.assign(steps.rbegin(), steps.rend());
  for (Step& st : p.steps) st = st == Step::Forward ? Step::Backward : Step::Forward;
  return p;
}

std::optional<std::string> walk_violation(const Digraph& g, const SemiWalk& walk) {
  if (walk.vertices.empty()) return "walk has no vertices";
  if (walk.steps.size() + 1 != walk.vertices.size()) {
    return "walk has " + std::to_string(walk.vertices.size()) + " vertices but " + std::to_string(walk.steps.size()) +
           " direction symbols";
  }
  for (Vertex v : walk.vertices) {
    if (v < 0 || v >= g.order()) return "walk vertex " + std::to_string(v) + " is not a vertex of the graph";
  }
  for (std::size_t i = 0; i < walk.steps.size(); ++i) {
    const Vertex a = walk.vertices[i];
    const Vertex b = walk.vertices[i + 1];
    const bool forward = walk.steps[i] == Step::Forward;
    const bool ok = forward ? g.has_arc(a, b) : g.has_arc(b, a);
    if (!ok) {
      return "step " + std::to_string(i) + " needs arc " + std::to_string(forward ? a : b) + "->" +
             std::to_string(forward ? b : a) + ", which is absent";
    }
  }
  return std::nullopt;
}

Pattern pattern_of(const SemiWalk& walk) {
  if (walk.vertices.size() < 2) throw ValidationError("empty pattern: a walk needs at least two vertices");
  if (walk.steps.size() + 1 != walk.vertices.size()) throw ValidationError("walk step count does not match vertices");
  return Pattern{walk.steps};
}

int net_length(const Digraph& host, const SemiWalk& traversal) {
  if (auto why = walk_violation(host, traversal)) throw ValidationError("invalid traversal: " + *why);
  if (traversal.steps.size() != host.arc_count()) {
    throw ValidationError("invalid traversal: it uses " + std::to_string(traversal.steps.size()) +
                          " arcs but the graph has " + std::to_string(host.arc_count()));
  }
  std::vector<Arc> used;
  used.reserve(traversal.steps.size());
  int net = 0;
  for (std::size_t i = 0; i < traversal.steps.size(); ++i) {
    const Vertex a = traversal.vertices[i];
    const Vertex b = traversal.vertices[i + 1];
    if (traversal.steps[i] == Step::Forward) {
      used.push_back({a, b});
      ++net;
    } else {
      used.push_back({b, a});
      --net;
    }
  }
  std::sort(used.begin(), used.end());
  if (std::adjacent_find(used.begin(), used.end()) != used.end()) {
    throw ValidationError("invalid traversal: an arc is used more than once");
  }
  return net;
}

int level_spread(const Digraph& path) {
  const SemiWalk walk = path_traversal(path);
  int level = 0;
  int lo = 0;
  int hi = 0;
  for (Step st : walk.steps) {
    level += st == Step::Forward ? 1 : -1;
    lo = std::min(lo, level);
    hi = std::max(hi, level);
  }
  return hi - lo;
}

namespace {

// Potential per vertex such that every arc climbs by exactly one, computed
// by BFS per component. nullopt when some cycle has non-zero net length.
std::optional<std::vector<int>> potentials(const Digraph& g) {
  constexpr int kUnset = std::numeric_limits<int>::min();
  std::vector<int> level(idx(g.order()), kUnset);
  std::queue<Vertex> queue;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (level[idx(s)] != kUnset) continue;
    level[idx(s)] = 0;
    queue.push(s);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop();
      const int lu = level[idx(u)];
      for (Vertex w : g.out_neighbours(u)) {
        if (level[idx(w)] == kUnset) {
          level[idx(w)] = lu + 1;
          queue.push(w);
        } else if (level[idx(w)] != lu + 1) {
          return std::nullopt;
        }
      }
      for (Vertex w : g.in_neighbours(u)) {
        if (level[idx(w)] == kUnset) {
          level[idx(w)] = lu - 1;
          queue.push(w);
        } else if (level[idx(w)] != lu - 1) {
          return std::nullopt;
        }
      }
    }
  }
  return level;
}

}  // namespace

bool is_balanced(const Digraph& g) { return potentials(g).has_value(); }

LevelAssignment levels(const Digraph& g) {
  if (g.order() == 0) throw ValidationError("levels: graph is empty");
  if (!is_connected(g)) throw ValidationError("levels: graph is not connected");
  auto pot = potentials(g);
  if (!pot) throw ValidationError("levels: graph is not balanced (some cycle has non-zero net length)");
  const int lo = *std::min_element(pot->begin(), pot->end());
  LevelAssignment result;
  result.level = std::move(*pot);
  for (int& l : result.level) l -= lo;
  result.height = *std::max_element(result.level.begin(), result.level.end());
  return result;
}

std::optional<SemiWalk> find_pattern_walk(const Digraph& g, const Pattern& p) {
  const int n = g.order();
  if (n == 0) return std::nullopt;
  const std::size_t layers = p.size() + 1;
  // pred[k][v]: predecessor of v in layer k, or kNoVertex when unreachable.
  // Layer 0 marks every vertex reachable with itself as predecessor.
  std::vector<std::vector<Vertex>> pred(layers, std::vector<Vertex>(idx(n), kNoVertex));
  for (Vertex v = 0; v < n; ++v) pred[0][idx(v)] = v;
  for (std::size_t k = 0; k < p.size(); ++k) {
    bool any = false;
    const bool forward = p.steps[k] == Step::Forward;
    for (Vertex u = 0; u < n; ++u) {
      if (pred[k][idx(u)] == kNoVertex) continue;
      for (Vertex w : forward ? g.out_neighbours(u) : g.in_neighbours(u)) {
        if (pred[k + 1][idx(w)] == kNoVertex) {
          pred[k + 1][idx(w)] = u;
          any = true;
        }
      }
    }
    if (!any) return std::nullopt;
  }
  Vertex end = kNoVertex;
  for (Vertex v = 0; v < n && end == kNoVertex; ++v) {
    if (pred[layers - 1][idx(v)] != kNoVertex) end = v;
  }
  SemiWalk walk;
  walk.vertices.assign(layers, kNoVertex);
  walk.steps = p.steps;
  Vertex cur = end;
  for (std::size_t k = layers; k-- > 0;) {
    walk.vertices[k] = cur;
    cur = pred[k][idx(cur)];
  }
  return walk;
}

namespace {

template <typename NeighbourFn>
std::vector<std::vector<Vertex>> components_impl(int order, NeighbourFn&& neighbours_of) {
  std::vector<char> seen(idx(order), 0);
  std::vector<std::vector<Vertex>> result;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < order; ++s) {
    if (seen[idx(s)]) continue;
    std::vector<Vertex> comp;
    seen[idx(s)] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      neighbours_of(u, [&](Vertex w) {
        if (!seen[idx(w)]) {
          seen[idx(w)] = 1;
          stack.push_back(w);
        }
      });
    }
    std::sort(comp.begin(), comp.end());
    result.push_back(std::move(comp));
  }
  return result;
}

}  // namespace

std::vector<std::vector<Vertex>> connected_components(const Digraph& g) {
  return components_impl(g.order(), [&](Vertex u, auto&& visit) {
    for (Vertex w : g.out_neighbours(u)) visit(w);
    for (Vertex w : g.in_neighbours(u)) visit(w);
  });
}

std::vector<std::vector<Vertex>> connected_components(const UndirectedGraph& g) {
  return components_impl(g.order(), [&](Vertex u, auto&& visit) {
    for (Vertex w : g.neighbours(u)) visit(w);
  });
}

bool is_connected(const Digraph& g) { return connected_components(g).size() <= 1; }
bool is_connected(const UndirectedGraph& g) { return connected_components(g).size() <= 1; }

Digraph induced_subgraph(const Digraph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> position(idx(g.order()), kNoVertex);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    check_endpoint(vertices[i], g.order());
    if (position[idx(vertices[i])] != kNoVertex) throw ValidationError("induced_subgraph: repeated vertex");
    position[idx(vertices[i])] = static_cast<Vertex>(i);
  }
  std::vector<Arc> arcs;
  for (Vertex u : vertices) {
    for (Vertex w : g.out_neighbours(u)) {
      if (position[idx(w)] != kNoVertex) arcs.push_back({position[idx(u)], position[idx(w)]});
    }
  }
  return Digraph(static_cast<int>(vertices.size()), std::move(arcs));
}

Digraph converse(const Digraph& g) {
  std::vector<Arc> arcs;
  arcs.reserve(g.arc_count());
  for (const Arc& a : g.arcs()) arcs.push_back({a.to, a.from});
  return Digraph(g.order(), std::move(arcs));
}

UndirectedGraph underlying(const Digraph& g) {
  std::vector<Edge> edges;
  edges.reserve(g.arc_count());
  for (const Arc& a : g.arcs()) edges.push_back({a.from, a.to});
  return UndirectedGraph(g.order(), std::move(edges));
}

Digraph symmetric_digraph(const UndirectedGraph& g) {
  std::vector<Arc> arcs;
  arcs.reserve(2 * g.edge_count());
  for (const Edge& e : g.edges()) {
    arcs.push_back({e.u, e.v});
    arcs.push_back({e.v, e.u});
  }
  return Digraph(g.order(), std::move(arcs));
}

bool is_oriented_path(const Digraph& g) {
  if (g.order() == 0 || !g.is_oriented() || !is_connected(g)) return false;
  if (g.arc_count() + 1 != static_cast<std::size_t>(g.order())) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.in_degree(v) + g.out_degree(v) > 2) return false;
  }
  return true;
}

bool is_oriented_cycle(const Digraph& g) {
  if (g.order() < 3 || !g.is_oriented() || !is_connected(g)) return false;
  if (g.arc_count() != static_cast<std::size_t>(g.order())) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.in_degree(v) + g.out_degree(v) != 2) return false;
  }
  return true;
}

bool is_oriented_tree(const Digraph& g) {
  return g.order() > 0 && g.is_oriented() && is_connected(g) && g.arc_count() + 1 == static_cast<std::size_t>(g.order());
}

bool has_directed_cycle(const Digraph& g) {
  // Kahn's algorithm: a cycle remains iff some vertex never reaches in-degree 0.
  std::vector<int> indeg(idx(g.order()));
  std::vector<Vertex> ready;
  for (Vertex v = 0; v < g.order(); ++v) {
    indeg[idx(v)] = g.in_degree(v);
    if (indeg[idx(v)] == 0) ready.push_back(v);
  }
  int removed = 0;
  while (!ready.empty()) {
    const Vertex u = ready.back();
    ready.pop_back();
    ++removed;
    for (Vertex w : g.out_neighbours(u)) {
      if (--indeg[idx(w)] == 0) ready.push_back(w);
    }
  }
  return removed != g.order();
}

namespace {

// Walk a connected max-degree-2 graph from `start`, leaving through the
// smaller neighbour. Closed traversals return to `start` on the last step.
SemiWalk trace(const Digraph& g, Vertex start, bool closed) {
  SemiWalk walk;
  walk.vertices.push_back(start);
  Vertex prev = kNoVertex;
  Vertex cur = start;
  const std::size_t steps = g.arc_count();
  for (std::size_t k = 0; k < steps; ++k) {
    Vertex next = kNoVertex;
    for (Vertex w : g.neighbours(cur)) {
      if (w != prev) {
        next = w;
        break;
      }
    }
    if (closed && k + 1 == steps) next = start;
    walk.steps.push_back(g.has_arc(cur, next) ? Step::Forward : Step::Backward);
    walk.vertices.push_back(next);
    prev = cur;
    cur = next;
  }
  return walk;
}

}  // namespace

SemiWalk path_traversal(const Digraph& path) {
  if (!is_oriented_path(path)) throw ValidationError("path_traversal: graph is not an oriented path");
  if (path.order() == 1) return SemiWalk{{0}, {}};
  Vertex start = kNoVertex;
  for (Vertex v = 0; v < path.order() && start == kNoVertex; ++v) {
    if (path.in_degree(v) + path.out_degree(v) == 1) start = v;
  }
  return trace(path, start, false);
}

SemiWalk cycle_traversal(const Digraph& cycle) {
  if (!is_oriented_cycle(cycle)) throw ValidationError("cycle_traversal: graph is not an oriented cycle");
  return trace(cycle, 0, true);
}

}  // namespace homdual
