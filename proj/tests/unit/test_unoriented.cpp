#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homdual/ac_decider.hpp"
#include "homdual/error.hpp"
#include "homdual/families.hpp"
#include "homdual/hom_search.hpp"
#include "homdual/unoriented.hpp"

using namespace homdual;

namespace {

UndirectedGraph petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({i, i + 5});
    e.push_back({i + 5, (i + 2) % 5 + 5});
  }
  return UndirectedGraph(10, e);
}

// All maps V -> V_h, odometer order.
bool brute_undirected_hom(const UndirectedGraph& g, const UndirectedGraph& h) {
  const int n = g.order();
  if (n == 0) return true;
  std::vector<Vertex> map(static_cast<std::size_t>(n), 0);
  while (true) {
    bool ok = true;
    for (const Edge& e : g.edges()) {
      if (!h.has_edge(map[static_cast<std::size_t>(e.u)], map[static_cast<std::size_t>(e.v)])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
    int i = 0;
    while (i < n && ++map[static_cast<std::size_t>(i)] == h.order()) map[static_cast<std::size_t>(i++)] = 0;
    if (i == n) return false;
  }
}

bool proper_edge_map(const UndirectedGraph& g, const UndirectedGraph& h, const std::vector<Vertex>& map) {
  if (map.size() != static_cast<std::size_t>(g.order())) return false;
  for (const Edge& e : g.edges()) {
    if (!h.has_edge(map[static_cast<std::size_t>(e.u)], map[static_cast<std::size_t>(e.v)])) return false;
  }
  return true;
}

// Longest directed path, counted in vertices, on an acyclic digraph.
int longest_path_vertices(const Digraph& d) {
  std::vector<int> best(static_cast<std::size_t>(d.order()), 1);
  int top = d.order() == 0 ? 0 : 1;
  for (int round = 0; round < d.order(); ++round) {
    for (const Arc& a : d.arcs()) {
      best[static_cast<std::size_t>(a.to)] =
          std::max(best[static_cast<std::size_t>(a.to)], best[static_cast<std::size_t>(a.from)] + 1);
    }
  }
  for (int b : best) top = std::max(top, b);
  return top;
}

}  // namespace

TEST_CASE("undirected_hom examples") {
  CHECK(undirected_hom(make_undirected_cycle(7), make_undirected_cycle(5)).has_value());
  CHECK_FALSE(undirected_hom(make_complete_graph(3), make_undirected_cycle(5)).has_value());
  const auto id = undirected_hom(make_undirected_cycle(5), make_undirected_cycle(5));
  REQUIRE(id.has_value());
  CHECK(proper_edge_map(make_undirected_cycle(5), make_undirected_cycle(5), *id));
}

TEST_CASE("Petersen graph against C_5") {
  const UndirectedGraph p = petersen();
  CHECK(p.edge_count() == 15);
  const bool brute = brute_undirected_hom(p, make_undirected_cycle(5));
  const auto hom = undirected_hom(p, make_undirected_cycle(5), kNoGuard);
  CHECK(hom.has_value() == brute);
  if (hom) CHECK(proper_edge_map(p, make_undirected_cycle(5), *hom));
  CHECK(cycle_colourable(p, 5, ColourMethod::Hom).colourable == brute);
  CHECK(undirected_hom(p, make_complete_graph(3), kNoGuard).has_value());
}

TEST_CASE("orientations") {
  const UndirectedGraph c4 = make_undirected_cycle(4);
  const Orientation o{c4, {true, false, true, false}};
  const OrientedGraph d = o.digraph();
  CHECK(d.arc_count() == 4);
  CHECK(Orientation::of(c4, d).forward == o.forward);
  CHECK_THROWS_AS(Orientation::of(c4, make_directed_path(4)), ValidationError);
}

TEST_CASE("contains_forbidden examples") {
  const ForbiddenSet f6 = image_forbidden_set(6);
  CHECK(f6.members.size() == 10);
  const auto tt = contains_forbidden(make_transitive_tournament(3), f6);
  REQUIRE(tt.has_value());
  CHECK(isomorphic(f6.members[tt->member], make_transitive_tournament(3)));
  const auto c3 = contains_forbidden(make_directed_cycle(3), f6);
  REQUIRE(c3.has_value());
  CHECK(isomorphic(f6.members[c3->member], make_directed_cycle(3)));
  CHECK_FALSE(contains_forbidden(make_directed_path(2), f6).has_value());
  CHECK_FALSE(contains_forbidden(make_ac_cycle(5), f6).has_value());
  const ForbiddenSet acyclic = acyclic_forbidden_set(6);
  CHECK(acyclic.members.size() == 8);
  CHECK(acyclic.acyclic_required);
}

TEST_CASE("subgraph containment matches Q_6 homomorphisms") {
  const ForbiddenSet f6 = image_forbidden_set(6);
  for (int order = 1; order <= 5; ++order) {
    for (const OrientedGraph& d : enumerate_oriented_graphs(order, false)) {
      CHECK(contains_forbidden(d, f6).has_value() == exists_hom(make_q_path(6), d, kNoGuard).has_value());
    }
  }
}

TEST_CASE("find_f_free_orientation examples") {
  const ForbiddenSet f6 = image_forbidden_set(6);
  const auto c5 = find_f_free_orientation(make_undirected_cycle(5), f6);
  REQUIRE(c5.has_value());
  CHECK(decide_ac(c5->digraph(), 5).verdict == Verdict::Yes);
  CHECK_FALSE(find_f_free_orientation(make_complete_graph(3), f6).has_value());
  CHECK(find_f_free_orientation(make_complete_graph(2), f6).has_value());
  CHECK_THROWS_AS(find_f_free_orientation(make_complete_graph(7), f6), GuardError);
}

TEST_CASE("cycle_colourable examples") {
  for (ColourMethod m : {ColourMethod::Hom, ColourMethod::Orientation, ColourMethod::Pattern}) {
    const ColourResult r = cycle_colourable(make_undirected_cycle(5), 5, m);
    CHECK(r.colourable);
    CHECK(proper_edge_map(make_undirected_cycle(5), make_undirected_cycle(5), r.mapping));
    CHECK_FALSE(cycle_colourable(make_complete_graph(3), 5, m).colourable);
    CHECK(cycle_colourable(make_undirected_cycle(6), 4, m).colourable);
    CHECK_FALSE(cycle_colourable(make_undirected_cycle(5), 4, m).colourable);
  }
  CHECK_THROWS_AS(cycle_colourable(make_undirected_cycle(5), 2, ColourMethod::Hom), ValidationError);
}

TEST_CASE("four statements agree on small graphs") {
  const UndirectedGraph c5 = make_undirected_cycle(5);
  const ForbiddenSet acyclic = acyclic_forbidden_set(6);
  for (int order = 1; order <= 5; ++order) {
    for (const UndirectedGraph& g : enumerate_undirected_graphs(order, false)) {
      const bool hom = undirected_hom(g, c5, kNoGuard).has_value();
      const ColourResult pattern = cycle_colourable(g, 5, ColourMethod::Pattern);
      const ColourResult free = cycle_colourable(g, 5, ColourMethod::Orientation);
      const bool star = find_f_free_orientation(g, acyclic).has_value();
      CHECK(hom == brute_undirected_hom(g, c5));
      CHECK(pattern.colourable == hom);
      CHECK(free.colourable == hom);
      CHECK(star == hom);
      if (free.colourable) {
        REQUIRE(free.orientation.has_value());
        const Certificate cert = decide_ac(free.orientation->digraph(), 5);
        CHECK(cert.verdict == Verdict::Yes);
        CHECK(proper_edge_map(g, c5, cert.mapping));
        CHECK(proper_edge_map(g, c5, free.mapping));
      }
      if (pattern.colourable) CHECK(proper_edge_map(g, c5, pattern.mapping));
    }
  }
}

TEST_CASE("C_7 colouring against F_8-free orientations") {
  const UndirectedGraph c7 = make_undirected_cycle(7);
  const ForbiddenSet f8 = image_forbidden_set(8);
  int checked = 0;
  for (int order = 3; order <= 6; ++order) {
    for (const UndirectedGraph& g : enumerate_undirected_graphs(order, true)) {
      if (g.edge_count() > 9) continue;
      const bool hom = undirected_hom(g, c7, kNoGuard).has_value();
      CHECK(find_f_free_orientation(g, f8).has_value() == hom);
      ++checked;
    }
  }
  for (int k : {3, 5, 7, 9}) {
    CHECK(find_f_free_orientation(make_undirected_cycle(k), f8).has_value() == (k >= 7 || k % 2 == 0));
  }
  CHECK(checked > 50);
}

TEST_CASE("rghv examples") {
  CHECK(rghv_colourability(make_complete_graph(3), 3).colourable);
  CHECK(rghv_colourability(make_complete_graph(3), 3).agree());
  CHECK_FALSE(rghv_colourability(make_complete_graph(3), 2).colourable);
  CHECK(rghv_colourability(make_complete_graph(3), 2).agree());
  const RghvResult c5 = rghv_colourability(make_undirected_cycle(5), 3);
  CHECK(c5.colourable);
  CHECK(c5.orientation_found);
}

TEST_CASE("rghv sides agree up to 6 vertices") {
  for (int order = 1; order <= 6; ++order) {
    for (const UndirectedGraph& g : enumerate_undirected_graphs(order, false)) {
      for (int k : {2, 3, 4}) {
        const RghvResult r = rghv_colourability(g, k);
        CHECK(r.agree());
        CHECK(r.colourable == brute_undirected_hom(g, make_complete_graph(k)));
        if (r.colourable) {
          CHECK(proper_edge_map(g, make_complete_graph(k), r.colouring));
          REQUIRE(r.orientation.has_value());
          const OrientedGraph d = r.orientation->digraph();
          REQUIRE_FALSE(has_directed_cycle(d));
          CHECK(longest_path_vertices(d) <= k);
          CHECK_FALSE(find_pattern_walk(d, Pattern{std::vector<Step>(static_cast<std::size_t>(k), Step::Forward)}));
        }
      }
    }
  }
}
