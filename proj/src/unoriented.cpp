#include "homdual/unoriented.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "homdual/ac_decider.hpp"
#include "homdual/error.hpp"
#include "homdual/families.hpp"

namespace homdual {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

// Member vertices in BFS order, so each one after the first in its component
// is adjacent to an earlier one.
std::vector<Vertex> bfs_order(const Digraph& g) {
  std::vector<Vertex> order;
  std::vector<char> seen(idx(g.order()), 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[idx(s)]) continue;
    seen[idx(s)] = 1;
    std::size_t head = order.size();
    order.push_back(s);
    while (head < order.size()) {
      for (Vertex w : g.neighbours(order[head++])) {
        if (!seen[idx(w)]) {
          seen[idx(w)] = 1;
          order.push_back(w);
        }
      }
    }
  }
  return order;
}

// Injective arc-preserving map of `member` into `host`. If `apart` is set,
// every non-adjacent member pair must land on a pair it accepts.
std::optional<std::vector<Vertex>> embed(const Digraph& member, const Digraph& host,
                                         const std::function<bool(Vertex, Vertex)>* apart) {
  const int k = member.order();
  const int n = host.order();
  if (k > n || member.arc_count() > host.arc_count()) return std::nullopt;
  const std::vector<Vertex> order = bfs_order(member);
  std::vector<Vertex> map(idx(k), kNoVertex);
  std::vector<char> used(idx(n), 0);
  auto fits = [&](std::size_t depth, Vertex y) {
    const Vertex u = order[depth];
    if (member.out_degree(u) > host.out_degree(y) || member.in_degree(u) > host.in_degree(y)) return false;
    for (std::size_t d = 0; d < depth; ++d) {
      const Vertex w = order[d];
      const Vertex z = map[idx(w)];
      if (member.has_arc(u, w) && !host.has_arc(y, z)) return false;
      if (member.has_arc(w, u) && !host.has_arc(z, y)) return false;
      if (apart && !member.adjacent(u, w) && !(*apart)(y, z)) return false;
    }
    return true;
  };
  auto recurse = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == idx(k)) return true;
    for (Vertex y = 0; y < n; ++y) {
      if (used[idx(y)] || !fits(depth, y)) continue;
      map[idx(order[depth])] = y;
      used[idx(y)] = 1;
      if (self(self, depth + 1)) return true;
      used[idx(y)] = 0;
    }
    map[idx(order[depth])] = kNoVertex;
    return false;
  };
  if (!recurse(recurse, 0)) return std::nullopt;
  return map;
}

std::optional<ForbiddenWitness> find_member(const Digraph& o, const std::vector<OrientedGraph>& members,
                                            const std::function<bool(Vertex, Vertex)>* apart) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (auto e = embed(members[i], o, apart)) return ForbiddenWitness{i, std::move(*e)};
  }
  return std::nullopt;
}

std::optional<std::vector<Vertex>> two_colouring(const UndirectedGraph& g) {
  std::vector<Vertex> colour(idx(g.order()), kNoVertex);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (colour[idx(s)] != kNoVertex) continue;
    colour[idx(s)] = 0;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbours(u)) {
        if (colour[idx(w)] == kNoVertex) {
          colour[idx(w)] = 1 - colour[idx(u)];
          stack.push_back(w);
        } else if (colour[idx(w)] == colour[idx(u)]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

std::optional<Orientation> search_with_limit(const UndirectedGraph& g, const std::function<bool(const Digraph&)>& dead,
                                             const std::function<bool(const Digraph&)>& accept, std::size_t limit) {
  if (g.edge_count() > limit) {
    throw GuardError("orientation search supports at most " + std::to_string(limit) + " edges, got " +
                     std::to_string(g.edge_count()));
  }
  const int n = g.order();
  // Edge order: BFS from the highest-degree unvisited vertex.
  std::vector<Edge> order;
  std::vector<char> seen(idx(n), 0);
  std::vector<std::vector<char>> listed(idx(n), std::vector<char>(idx(n), 0));
  while (true) {
    Vertex start = kNoVertex;
    for (Vertex v = 0; v < n; ++v) {
      if (!seen[idx(v)] && (start == kNoVertex || g.degree(v) > g.degree(start))) start = v;
    }
    if (start == kNoVertex) break;
    seen[idx(start)] = 1;
    std::vector<Vertex> queue{start};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (Vertex w : g.neighbours(u)) {
        if (!listed[idx(u)][idx(w)]) {
          listed[idx(u)][idx(w)] = listed[idx(w)][idx(u)] = 1;
          order.push_back({std::min(u, w), std::max(u, w)});
        }
        if (!seen[idx(w)]) {
          seen[idx(w)] = 1;
          queue.push_back(w);
        }
      }
    }
  }
  std::vector<Arc> arcs;
  std::optional<Orientation> found;
  auto recurse = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == order.size()) {
      const Digraph d(n, arcs);
      if (!accept(d)) return false;
      found = Orientation::of(g, d);
      return true;
    }
    const Edge e = order[depth];
    for (const Arc a : {Arc{e.u, e.v}, Arc{e.v, e.u}}) {
      arcs.push_back(a);
      if (!dead(Digraph(n, arcs)) && self(self, depth + 1)) return true;
      arcs.pop_back();
    }
    return false;
  };
  recurse(recurse, 0);
  return found;
}

}  // namespace

std::optional<std::vector<Vertex>> undirected_hom(const UndirectedGraph& g, const UndirectedGraph& h,
                                                  std::size_t guard) {
  auto hom = exists_hom(symmetric_digraph(g), symmetric_digraph(h), guard);
  if (!hom) return std::nullopt;
  return std::move(hom->map);
}

OrientedGraph Orientation::digraph() const {
  if (forward.size() != host.edge_count()) throw ValidationError("orientation does not match its host");
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < forward.size(); ++i) {
    const Edge& e = host.edges()[i];
    arcs.push_back(forward[i] ? Arc{e.u, e.v} : Arc{e.v, e.u});
  }
  return OrientedGraph(host.order(), std::move(arcs));
}

Orientation Orientation::of(const UndirectedGraph& host, const Digraph& d) {
  if (d.order() != host.order() || d.arc_count() != host.edge_count()) {
    throw ValidationError("digraph is not an orientation of the host graph");
  }
  Orientation o{host, {}};
  for (const Edge& e : host.edges()) {
    const bool f = d.has_arc(e.u, e.v);
    if (f == d.has_arc(e.v, e.u)) throw ValidationError("digraph is not an orientation of the host graph");
    o.forward.push_back(f);
  }
  return o;
}

const ImageSet& cached_images(int n) {
  static std::mutex mutex;
  static std::map<int, ImageSet> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, surjective_images(make_q_path(n))).first;
  return it->second;
}

ForbiddenSet image_forbidden_set(int n, Containment mode) { return {cached_images(n).members, mode, false}; }

ForbiddenSet acyclic_forbidden_set(int n, Containment mode) {
  ForbiddenSet f{{}, mode, true};
  const OrientedGraph c3 = make_directed_cycle(3);
  const OrientedGraph c4 = make_directed_cycle(4);
  for (const OrientedGraph& g : cached_images(n).members) {
    if (!isomorphic(g, c3) && !isomorphic(g, c4)) f.members.push_back(g);
  }
  return f;
}

std::optional<ForbiddenWitness> contains_forbidden(const Digraph& o, const ForbiddenSet& f) {
  if (f.mode == Containment::Subgraph) return find_member(o, f.members, nullptr);
  const std::function<bool(Vertex, Vertex)> apart = [&](Vertex y, Vertex z) { return !o.adjacent(y, z); };
  return find_member(o, f.members, &apart);
}

std::optional<Orientation> search_orientations(const UndirectedGraph& g,
                                               const std::function<bool(const Digraph&)>& dead,
                                               const std::function<bool(const Digraph&)>& accept) {
  return search_with_limit(g, dead, accept, kMaxOrientationEdges);
}

std::optional<Orientation> find_f_free_orientation(const UndirectedGraph& g, const ForbiddenSet& f) {
  // In induced mode a member stays induced only if its non-adjacent pairs
  // sit on non-edges of g, which later arcs cannot fill.
  const std::function<bool(Vertex, Vertex)> non_edge = [&](Vertex y, Vertex z) { return !g.has_edge(y, z); };
  auto dead = [&](const Digraph& d) {
    if (f.acyclic_required && has_directed_cycle(d)) return true;
    return find_member(d, f.members, f.mode == Containment::Induced ? &non_edge : nullptr).has_value();
  };
  auto accept = [&](const Digraph& d) {
    if (f.acyclic_required && has_directed_cycle(d)) return false;
    return !contains_forbidden(d, f).has_value();
  };
  return search_orientations(g, dead, accept);
}

ColourResult cycle_colourable(const UndirectedGraph& g, int k, ColourMethod method) {
  if (k < 3) throw ValidationError("cycle colouring needs a cycle of order >= 3, got " + std::to_string(k));
  ColourResult r;
  if (method == ColourMethod::Hom) {
    if (auto map = undirected_hom(g, make_undirected_cycle(k))) {
      r.colourable = true;
      r.mapping = std::move(*map);
    }
    return r;
  }
  if (k % 2 == 0) {
    if (auto colour = two_colouring(g)) {
      r.colourable = true;
      r.mapping = std::move(*colour);
    }
    return r;
  }
  if (method == ColourMethod::Orientation) {
    r.orientation = find_f_free_orientation(g, image_forbidden_set(k + 1));
  } else {
    const Pattern q = q_pattern(k + 1);
    auto dead = [&](const Digraph& d) { return find_pattern_walk(d, q).has_value(); };
    auto accept = [&](const Digraph& d) { return !find_pattern_walk(d, q).has_value(); };
    r.orientation = search_orientations(g, dead, accept);
  }
  if (!r.orientation) return r;
  r.colourable = true;
  // AC_k has the same vertex numbering as C_k, so a map into AC_k colours g.
  const Certificate cert = decide_ac(r.orientation->digraph(), k);
  if (cert.verdict == Verdict::Yes) {
    r.mapping = cert.mapping;
  } else if (method == ColourMethod::Pattern) {
    throw ContractError("orientation without a Q-pattern walk was refused by decide_ac");
  }
  return r;
}

RghvResult rghv_colourability(const UndirectedGraph& g, int k) {
  if (k < 1) throw ValidationError("rghv needs k >= 1");
  if (g.order() > kMaxRghvOrder) {
    throw GuardError("rghv supports at most " + std::to_string(kMaxRghvOrder) + " vertices");
  }
  RghvResult r;
  if (auto colouring = undirected_hom(g, make_complete_graph(k), kNoGuard)) {
    r.colourable = true;
    r.colouring = std::move(*colouring);
  }
  const Pattern path{std::vector<Step>(idx(k), Step::Forward)};
  auto dead = [&](const Digraph& d) { return find_pattern_walk(d, path).has_value(); };
  auto accept = [&](const Digraph& d) { return !find_pattern_walk(d, path).has_value(); };
  r.orientation = search_orientations(g, dead, accept);
  r.orientation_found = r.orientation.has_value();
  return r;
}

}  // namespace homdual
