#include "homdual/duality.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "homdual/error.hpp"
#include "homdual/families.hpp"

namespace homdual {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

nlohmann::ordered_json graph_json(const Digraph& g) {
  nlohmann::ordered_json j;
  j["order"] = g.order();
  auto arcs = nlohmann::ordered_json::array();
  for (const Arc& a : g.arcs()) arcs.push_back({a.from, a.to});
  j["arcs"] = arcs;
  return j;
}

}  // namespace

std::string DualityReport::to_text() const {
  std::ostringstream out;
  out << "checked " << checked << " instances: exhaustive up to order " << exhaustive_up_to << ", " << sampled
      << " sampled\n";
  out << "counterexamples: " << counterexamples.size() << "\n";
  for (const auto& c : counterexamples) {
    out << "  order " << c.instance.order() << " arcs";
    for (const Arc& a : c.instance.arcs()) out << " " << a.from << "->" << a.to;
    out << (c.left_maps ? "; left maps" : "; left does not map") << (c.right_maps ? ", maps to right" : ", no map to right")
        << (c.sampled ? " (sampled)" : "") << "\n";
  }
  return out.str();
}

std::string DualityReport::to_json() const {
  nlohmann::ordered_json j;
  j["checked"] = checked;
  j["exhaustive_up_to"] = exhaustive_up_to;
  j["sampled"] = sampled;
  auto list = nlohmann::ordered_json::array();
  for (const auto& c : counterexamples) {
    auto item = graph_json(c.instance);
    item["left_maps"] = c.left_maps;
    item["right_maps"] = c.right_maps;
    item["sampled"] = c.sampled;
    list.push_back(item);
  }
  j["counterexamples"] = list;
  return j.dump();
}

DualityReport check_duality_pair(const Digraph& left, const Digraph& right, int max_order, const SampleSpec& samples,
                                 std::size_t guard) {
  if (max_order < 0 || max_order > 5) {
    throw ValidationError("duality sweeps enumerate orders up to 5, got max_order " + std::to_string(max_order));
  }
  if (samples.samples < 0 || (samples.samples > 0 && (samples.min_order < 1 || samples.min_order > samples.max_order))) {
    throw ValidationError("sample orders must satisfy 1 <= min_order <= max_order");
  }
  DualityReport report;
  report.exhaustive_up_to = max_order;
  auto test = [&](const Digraph& l, bool sampled) {
    const bool left_maps = exists_hom(left, l, guard).has_value();
    const bool right_maps = exists_hom(l, right, guard).has_value();
    ++report.checked;
    if (left_maps == right_maps) report.counterexamples.push_back({l, left_maps, right_maps, sampled});
  };
  if (max_order >= 1) {
    for (const OrientedGraph& l : enumerate_oriented_graphs_up_to(max_order, false)) test(l, false);
  }
  std::mt19937_64 rng(samples.seed);
  const auto span = static_cast<std::uint64_t>(samples.max_order - samples.min_order + 1);
  for (int i = 0; i < samples.samples; ++i) {
    const int order = samples.min_order + static_cast<int>(rng() % span);
    const int percent = 10 + static_cast<int>(rng() % 50);
    test(random_connected_oriented_graph(order, percent, rng), true);
    ++report.sampled;
  }
  std::sort(report.counterexamples.begin(), report.counterexamples.end(),
            [](const DualityCounterexample& a, const DualityCounterexample& b) {
              if (a.instance.order() != b.instance.order()) return a.instance.order() < b.instance.order();
              return a.instance.arcs() < b.instance.arcs();
            });
  return report;
}

CycleKind classify_cycle(const Digraph& c) {
  if (!is_oriented_cycle(c)) throw ValidationError("classify_cycle: not an oriented cycle");
  if (auto id = recognize_family(c); id && id->tag == FamilyTag::ACCycle) return CycleKind::ACCycle;
  if (is_b_cycle(c)) return CycleKind::BCycle;
  return CycleKind::Other;
}

PathDualityReport check_path_duality(const Digraph& c, const Digraph& g, const PathDualityOptions& options) {
  if (!is_oriented_cycle(c)) throw ValidationError("check_path_duality: c is not an oriented cycle");
  PathDualityReport report;
  report.kind = classify_cycle(c);
  if (report.kind == CycleKind::Other && options.require_recognized) {
    throw ValidationError("check_path_duality: c is neither a B-cycle nor an AC-cycle");
  }
  report.max_path_arcs = options.max_path_arcs > 0 ? options.max_path_arcs : 2 * c.order();
  report.maps_to_cycle = exists_hom(g, c, kNoGuard).has_value();
  report.paths_pass = true;
  // Every oriented path is the pattern of its traversal; the one-vertex path
  // maps to any nonempty digraph and is skipped.
  for (int len = 1; len <= report.max_path_arcs && report.paths_pass; ++len) {
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << len); ++bits) {
      Pattern p;
      for (int i = 0; i < len; ++i) p.steps.push_back((bits >> i) & 1U ? Step::Backward : Step::Forward);
      if (find_pattern_walk(g, p) && !find_pattern_walk(c, p)) {
        report.paths_pass = false;
        report.witness = p;
        break;
      }
    }
  }
  if (report.kind == CycleKind::ACCycle) {
    report.q_path_passes = !find_pattern_walk(g, q_pattern(c.order() + 1)).has_value();
  }
  return report;
}

int tree_height(const Digraph& t) {
  if (!is_oriented_tree(t)) throw ValidationError("tree_height: input is not a connected oriented tree");
  return levels(t).height;
}

OrientedGraph tree_dual(const Digraph& t) {
  const int h = tree_height(t);
  if (h == 0) throw ValidationError("tree_dual: height-0 trees have no dual here");
  if (h > 3) throw ValidationError("tree_dual: height " + std::to_string(h) + " exceeds 3");
  if (h == 1) return make_transitive_tournament(1);
  if (h == 2) return make_transitive_tournament(2);
  const Digraph core = core_of(t);
  const int k = core.order();
  if (k >= 4 && k % 2 == 0 && isomorphic(core, make_q_path(k))) return make_ac_cycle(k - 1);
  throw ContractError("tree_dual: the core of a height-3 tree is not a Q path of even order");
}

OrientedGraph random_oriented_tree(int order, int height_cap, std::uint64_t seed) {
  if (order < 1) throw ValidationError("random_oriented_tree needs order >= 1");
  if (order > 1 && height_cap < 1) throw ValidationError("a tree with an arc has height at least 1");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> parent(idx(order), kNoVertex);
  for (Vertex v = 1; v < order; ++v) parent[idx(v)] = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(v));
  while (true) {
    std::vector<Arc> arcs;
    for (Vertex v = 1; v < order; ++v) {
      if (rng() % 2 == 0) {
        arcs.push_back({parent[idx(v)], v});
      } else {
        arcs.push_back({v, parent[idx(v)]});
      }
    }
    OrientedGraph t(order, std::move(arcs));
    if (levels(t).height <= height_cap) return t;
  }
}

OrientedGraph random_connected_oriented_graph(int order, int extra_arc_percent, std::mt19937_64& rng) {
  if (order < 1) throw ValidationError("random graphs need order >= 1");
  std::vector<Arc> arcs;
  std::vector<std::vector<char>> joined(idx(order), std::vector<char>(idx(order), 0));
  auto add = [&](Vertex u, Vertex v) {
    joined[idx(u)][idx(v)] = joined[idx(v)][idx(u)] = 1;
    if (rng() % 2 == 0) {
      arcs.push_back({u, v});
    } else {
      arcs.push_back({v, u});
    }
  };
  for (Vertex v = 1; v < order; ++v) add(static_cast<Vertex>(rng() % static_cast<std::uint64_t>(v)), v);
  for (Vertex u = 0; u < order; ++u) {
    for (Vertex v = u + 1; v < order; ++v) {
      if (!joined[idx(u)][idx(v)] && static_cast<int>(rng() % 100) < extra_arc_percent) add(u, v);
    }
  }
  return OrientedGraph(order, std::move(arcs));
}

}  // namespace homdual
