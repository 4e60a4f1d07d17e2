#include "homdual/families.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>

#include "homdual/error.hpp"
#include "homdual/hom_search.hpp"

namespace homdual {

namespace {

void require_min(int n, int min, std::string_view what) {
  if (n < min) {
    throw ValidationError(std::string(what) + " needs n >= " + std::to_string(min) + ", got " + std::to_string(n));
  }
}

OrientedGraph path_from_pattern(const Pattern& p) {
  std::vector<Arc> arcs;
  arcs.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Vertex a = static_cast<Vertex>(i);
    if (p.steps[i] == Step::Forward) {
      arcs.push_back({a, a + 1});
    } else {
      arcs.push_back({a + 1, a});
    }
  }
  return OrientedGraph(static_cast<int>(p.size()) + 1, std::move(arcs));
}

constexpr std::array<FamilyTag, 7> kAllTags = {
    FamilyTag::DirectedPath, FamilyTag::DirectedCycle,        FamilyTag::AlternatingPath, FamilyTag::QPath,
    FamilyTag::ACCycle,      FamilyTag::TransitiveTournament, FamilyTag::UndirectedCycle,
};

}  // namespace

std::string_view family_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::DirectedPath: return "dipath";
    case FamilyTag::DirectedCycle: return "dicycle";
    case FamilyTag::AlternatingPath: return "altpath";
    case FamilyTag::QPath: return "qpath";
    case FamilyTag::ACCycle: return "accycle";
    case FamilyTag::TransitiveTournament: return "tt";
    case FamilyTag::UndirectedCycle: return "cycle";
  }
  return "?";
}

std::optional<FamilyTag> parse_family_name(std::string_view name) {
  for (FamilyTag t : kAllTags) {
    if (family_name(t) == name) return t;
  }
  return std::nullopt;
}

int family_minimum(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::QPath:
    case FamilyTag::ACCycle:
    case FamilyTag::DirectedCycle:
    case FamilyTag::UndirectedCycle: return 3;
    default: return 1;
  }
}

std::string to_string(const FamilyId& id) { return std::string(family_name(id.tag)) + " " + std::to_string(id.n); }

OrientedGraph make_directed_path(int n) {
  require_min(n, 1, "directed path");
  return path_from_pattern(Pattern{std::vector<Step>(static_cast<std::size_t>(n - 1), Step::Forward)});
}

OrientedGraph make_directed_cycle(int n) {
  require_min(n, 3, "directed cycle");
  std::vector<Arc> arcs;
  for (Vertex i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n});
  return OrientedGraph(n, std::move(arcs));
}

OrientedGraph make_alternating_path(int n) {
  require_min(n, 1, "alternating path");
  Pattern p;
  for (int i = 0; i + 1 < n; ++i) p.steps.push_back(i % 2 == 0 ? Step::Forward : Step::Backward);
  return path_from_pattern(p);
}

Pattern q_pattern(int n) {
  require_min(n, 3, "Q path");
  // Arc i joins q_i and q_{i+1}; arcs 1..n-3 lie in the alternating middle.
  Pattern p;
  p.steps.push_back(Step::Forward);
  for (int i = 1; i <= n - 3; ++i) p.steps.push_back(i % 2 == 1 ? Step::Forward : Step::Backward);
  p.steps.push_back(n == 3 ? Step::Forward : p.steps.back());
  return p;
}

OrientedGraph make_q_path(int n) { return path_from_pattern(q_pattern(n)); }

OrientedGraph make_ac_cycle(int n) {
  require_min(n, 3, "AC cycle");
  std::vector<Arc> arcs;
  for (Vertex i = 0; i < n; ++i) {
    const Vertex j = (i + 1) % n;
    if (i % 2 == 0) {
      arcs.push_back({i, j});
    } else {
      arcs.push_back({j, i});
    }
  }
  return OrientedGraph(n, std::move(arcs));
}

OrientedGraph make_transitive_tournament(int n) {
  require_min(n, 1, "transitive tournament");
  std::vector<Arc> arcs;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) arcs.push_back({i, j});
  }
  return OrientedGraph(n, std::move(arcs));
}

UndirectedGraph make_undirected_cycle(int n) {
  require_min(n, 3, "undirected cycle");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return UndirectedGraph(n, std::move(edges));
}

UndirectedGraph make_complete_graph(int n) {
  require_min(n, 1, "complete graph");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return UndirectedGraph(n, std::move(edges));
}

OrientedGraph make_family(const FamilyId& id) {
  switch (id.tag) {
    case FamilyTag::DirectedPath: return make_directed_path(id.n);
    case FamilyTag::DirectedCycle: return make_directed_cycle(id.n);
    case FamilyTag::AlternatingPath: return make_alternating_path(id.n);
    case FamilyTag::QPath: return make_q_path(id.n);
    case FamilyTag::ACCycle: return make_ac_cycle(id.n);
    case FamilyTag::TransitiveTournament: return make_transitive_tournament(id.n);
    case FamilyTag::UndirectedCycle: break;
  }
  throw ValidationError("make_family: the undirected cycle is not a digraph family");
}

std::vector<Vertex> q_path_fold(int n) {
  require_min(n, 5, "Q path fold");
  std::vector<Vertex> map(static_cast<std::size_t>(n));
  for (Vertex i = 0; i < n; ++i) map[static_cast<std::size_t>(i)] = i <= 2 ? i : i - 2;
  return map;
}

bool is_minimal_pattern(const Pattern& p) {
  const int len = static_cast<int>(p.size());
  std::vector<int> prefix(static_cast<std::size_t>(len) + 1, 0);
  for (int i = 0; i < len; ++i) {
    prefix[static_cast<std::size_t>(i) + 1] =
        prefix[static_cast<std::size_t>(i)] + (p.steps[static_cast<std::size_t>(i)] == Step::Forward ? 1 : -1);
  }
  const int target = std::abs(prefix.back());
  for (int i = 0; i <= len; ++i) {
    for (int j = i; j <= len; ++j) {
      if (i == 0 && j == len) continue;
      if (std::abs(prefix[static_cast<std::size_t>(j)] - prefix[static_cast<std::size_t>(i)]) == target) return false;
    }
  }
  return true;
}

bool is_minimal_path(const Digraph& path) {
  const SemiWalk walk = path_traversal(path);
  return is_minimal_pattern(Pattern{walk.steps});
}

bool is_b_cycle(const Digraph& cycle) {
  if (!is_oriented_cycle(cycle)) throw ValidationError("is_b_cycle: graph is not an oriented cycle");
  const int m = cycle.order();
  if (m > 20) throw GuardError("is_b_cycle: cycles above 20 vertices are not supported");
  const Pattern around = Pattern{cycle_traversal(cycle).steps};
  for (const Pattern& base : {around, around.reversed()}) {
    for (int r = 0; r < m; ++r) {
      // s[i] is the direction of the arc between c_i and c_{i+1}.
      std::vector<Step> s(static_cast<std::size_t>(m));
      for (int i = 0; i < m; ++i) s[static_cast<std::size_t>(i)] = base.steps[static_cast<std::size_t>((r + i) % m)];
      for (int k = 1; k < m; ++k) {
        if (s[static_cast<std::size_t>(k) - 1] != Step::Forward) break;
        // (c_0, c_{m-1}, ..., c_k) walks the remaining arcs backwards.
        Pattern complement{std::vector<Step>(s.begin() + k, s.end())};
        complement = complement.reversed();
        int net = 0;
        for (Step st : complement.steps) net += st == Step::Forward ? 1 : -1;
        if (net == k - 1 && is_minimal_pattern(complement)) return true;
      }
    }
  }
  return false;
}

namespace {

bool cyclic_match(const Pattern& a, const Pattern& b) {
  if (a.size() != b.size()) return false;
  const std::size_t m = a.size();
  for (const Pattern& cand : {b, b.reversed()}) {
    for (std::size_t r = 0; r < m; ++r) {
      bool ok = true;
      for (std::size_t i = 0; i < m && ok; ++i) ok = a.steps[i] == cand.steps[(r + i) % m];
      if (ok) return true;
    }
  }
  return false;
}

bool structural_match(const Digraph& g, FamilyTag tag) {
  const int n = g.order();
  switch (tag) {
    case FamilyTag::DirectedPath:
    case FamilyTag::AlternatingPath:
    case FamilyTag::QPath: {
      if (!is_oriented_path(g)) return false;
      if (tag == FamilyTag::QPath && n < 3) return false;
      const Pattern p{path_traversal(g).steps};
      const Pattern want{path_traversal(make_family({tag, n})).steps};
      return p == want || p == want.reversed();
    }
    case FamilyTag::DirectedCycle:
    case FamilyTag::ACCycle: {
      if (!is_oriented_cycle(g)) return false;
      return cyclic_match(Pattern{cycle_traversal(g).steps}, Pattern{cycle_traversal(make_family({tag, n})).steps});
    }
    case FamilyTag::TransitiveTournament: {
      if (!g.is_oriented() || g.arc_count() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2) {
        return false;
      }
      std::vector<int> outdeg;
      for (Vertex v = 0; v < n; ++v) outdeg.push_back(g.out_degree(v));
      std::sort(outdeg.begin(), outdeg.end());
      for (int i = 0; i < n; ++i) {
        if (outdeg[static_cast<std::size_t>(i)] != i) return false;
      }
      return true;
    }
    case FamilyTag::UndirectedCycle: return false;
  }
  return false;
}

}  // namespace

std::optional<FamilyId> recognize_family(const Digraph& g) {
  const int n = g.order();
  if (n == 0) return std::nullopt;
  for (FamilyTag tag : kAllTags) {
    if (tag == FamilyTag::UndirectedCycle || n < family_minimum(tag)) continue;
    if (n <= kDefaultIsoGuard) {
      const OrientedGraph candidate = make_family({tag, n});
      if (candidate.arc_count() == g.arc_count() && isomorphic(g, candidate)) return FamilyId{tag, n};
    } else if (structural_match(g, tag)) {
      return FamilyId{tag, n};
    }
  }
  return std::nullopt;
}

std::optional<FamilyId> recognize_family(const UndirectedGraph& g) {
  const int n = g.order();
  if (n < 3 || g.edge_count() != static_cast<std::size_t>(n) || !is_connected(g)) return std::nullopt;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != 2) return std::nullopt;
  }
  return FamilyId{FamilyTag::UndirectedCycle, n};
}

}  // namespace homdual
