// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "certificate_oracle.hpp"
#include "cover_oracle.hpp"
#include "homdual/ac_decider.hpp"
#include "homdual/duality.hpp"
#include "homdual/families.hpp"
#include "homdual/graph_io.hpp"
#include "homdual/hom_search.hpp"
#include "homdual/unoriented.hpp"
#include "test_support.hpp"

using namespace homdual;
namespace t = homdual::testing;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  failures += ok ? 0 : 1;
}

void guarded(int id, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(id, false, std::string("exception: ") + e.what());
  }
}

std::string num(std::size_t x) { return std::to_string(x); }

// All oriented graphs with <= 4 vertices plus 500 seeded connected ones on
// 5..8 vertices.
std::vector<Digraph> sweep_instances() {
  std::vector<Digraph> out;
  for (const auto& g : enumerate_oriented_graphs_up_to(4, false)) out.push_back(g);
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 500; ++i) {
    const int order = 5 + static_cast<int>(rng() % 4);
    out.push_back(random_connected_oriented_graph(order, 10 + static_cast<int>(rng() % 50), rng));
  }
  return out;
}

void criterion1(const std::vector<Digraph>& instances) {
  const auto start = std::chrono::steady_clock::now();
  std::size_t checked = 0;
  std::size_t bad = 0;
  for (int n = 3; n <= 7; ++n) {
    const OrientedGraph q = make_q_path(n + 1);
    const OrientedGraph ac = make_ac_cycle(n);
    for (const Digraph& l : instances) {
      const bool left = exists_hom(q, l, kNoGuard).has_value();
      const bool right = exists_hom(l, ac, kNoGuard).has_value();
      bad += left == right;
      ++checked;
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(1, bad == 0 && secs < 300.0,
         "(Q_{n+1}, AC_n) for n=3..7 on " + num(instances.size()) + " graphs: " + num(checked) + " checks, " +
             num(bad) + " counterexamples, " + std::to_string(secs) + " s");
}

void criterion2(const std::vector<Digraph>& instances) {
  std::size_t disagree = 0;
  std::size_t unverified = 0;
  std::size_t unsound = 0;
  std::size_t emitted = 0;
  std::vector<std::pair<std::size_t, Certificate>> pool;
  for (int n = 3; n <= 7; ++n) {
    const OrientedGraph ac = make_ac_cycle(n);
    for (std::size_t i = 0; i < instances.size(); ++i) {
      const Digraph& g = instances[i];
      const Certificate c = decide_ac(g, n);
      ++emitted;
      disagree += (c.verdict == Verdict::Yes) != exists_hom(g, ac, kNoGuard).has_value();
      unverified += !verify_certificate(g, n, c).ok;
      unsound += !t::certificate_sound(g, n, c);
      if (g.arc_count() > 0) pool.emplace_back(i, c);
    }
  }

  // Each corruption is confirmed invalid by the hand-written oracle before
  // it counts.
  std::mt19937_64 rng(99);
  int corrupted = 0;
  int rejected = 0;
  while (corrupted < 100) {
    const auto& [index, original] = pool[rng() % pool.size()];
    const Digraph& g = instances[index];
    Certificate c = original;
    if (c.verdict == Verdict::Yes) {
      const Arc a = g.arcs()[rng() % g.arc_count()];
      if (rng() % 2 == 0) {
        c.mapping[static_cast<std::size_t>(a.from)] = c.mapping[static_cast<std::size_t>(a.to)];
      } else {
        c.mapping[static_cast<std::size_t>(a.to)] = (c.mapping[static_cast<std::size_t>(a.to)] + 2) % c.n;
      }
    } else {
      switch (rng() % 4) {
        case 0: c.l += 1; break;
        case 1: {
          Step& s = c.walk.steps[rng() % c.walk.steps.size()];
          s = s == Step::Forward ? Step::Backward : Step::Forward;
          break;
        }
        case 2:
          c.walk.vertices.pop_back();
          c.walk.steps.pop_back();
          break;
        default: c.walk.vertices[rng() % c.walk.vertices.size()] = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(g.order())); break;
      }
    }
    if (t::certificate_sound(g, c.n, c)) continue;
    ++corrupted;
    rejected += !verify_certificate(g, c.n, c).ok;
  }
  report(2, disagree == 0 && unverified == 0 && unsound == 0 && rejected == corrupted,
         num(emitted) + " certificates: " + num(disagree) + " verdict disagreements, " + num(unverified) +
             " rejected by verify_certificate, " + num(unsound) + " rejected by the independent check; " +
             std::to_string(rejected) + "/" + std::to_string(corrupted) + " corrupted certificates rejected");
}

void criterion3() {
  const int n = 5;
  const OrientedGraph ac = make_ac_cycle(n);
  const OrientedGraph q = make_q_path(n + 1);
  std::size_t graphs = 0;
  std::size_t bad = 0;
  for (int order = 1; order <= 5; ++order) {
    for (const auto& g : enumerate_oriented_graphs(order, true)) {
      ++graphs;
      const bool item1 = exists_hom(g, ac, kNoGuard).has_value();
      const bool item2 = cover_induced_hom(build_cyclic_cover(g, n).cover, g).has_value();
      bool item3 = true;
      for (int l = 4; l <= n + 1; l += 2) item3 = item3 && !find_pattern_walk(g, q_pattern(l)).has_value();
      const bool item4 = !exists_hom(q, g, kNoGuard).has_value();
      bad += !(item1 == item2 && item2 == item3 && item3 == item4);
    }
  }
  report(3, bad == 0, num(graphs) + " connected oriented graphs, n=5: " + num(bad) + " disagreements");
}

void criterion4() {
  const ImageSet set = surjective_images(make_q_path(6));
  const OrientedGraph d5(6, {{1, 0}, {1, 2}, {3, 2}, {4, 3}, {4, 0}, {0, 5}});
  const std::vector<std::pair<std::string, Digraph>> expected{
      {"C3", make_directed_cycle(3)},
      {"TT3", make_transitive_tournament(3)},
      {"P4", make_directed_path(4)},
      {"C4", make_directed_cycle(4)},
      {"C'4", OrientedGraph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})},
      {"Q6", make_q_path(6)},
      {"D5", d5},
      {"reversed D5", converse(d5)},
  };
  bool ok = set.members.size() == 8;
  std::string missing;
  for (const auto& [name, e] : expected) {
    int hits = 0;
    for (const auto& m : set.members) hits += isomorphic(m, e);
    if (hits != 1) {
      ok = false;
      missing += " " + name;
    }
  }
  std::string extra;
  for (const auto& m : set.members) {
    bool known = false;
    for (const auto& [name, e] : expected) known = known || isomorphic(m, e);
    if (known) continue;
    extra += " [";
    for (const Arc& a : m.arcs()) extra += " " + num(a.from) + ">" + num(a.to);
    extra += " ]";
  }
  report(4, ok,
         num(set.members.size()) + " classes" + (missing.empty() ? ", all 8 matched" : "; unmatched:" + missing) +
             (extra.empty() ? "" : "; not in the expected list:" + extra));
}

void criterion5() {
  const UndirectedGraph c5 = make_undirected_cycle(5);
  const ForbiddenSet f6_induced = image_forbidden_set(6, Containment::Induced);
  const ForbiddenSet star_sub = acyclic_forbidden_set(6, Containment::Subgraph);
  const ForbiddenSet star_induced = acyclic_forbidden_set(6, Containment::Induced);
  std::size_t graphs = 0;
  std::size_t bad = 0;
  std::size_t induced_bad = 0;
  for (int order = 1; order <= 6; ++order) {
    for (const UndirectedGraph& g : enumerate_undirected_graphs(order, false)) {
      ++graphs;
      const bool hom = undirected_hom(g, c5, kNoGuard).has_value();
      const bool pattern = cycle_colourable(g, 5, ColourMethod::Pattern).colourable;
      const bool free = cycle_colourable(g, 5, ColourMethod::Orientation).colourable;
      const bool star = find_f_free_orientation(g, star_sub).has_value();
      bad += !(hom == pattern && pattern == free && free == star);
      const bool free_i = find_f_free_orientation(g, f6_induced).has_value();
      const bool star_i = find_f_free_orientation(g, star_induced).has_value();
      induced_bad += !(hom == free_i && hom == star_i);
    }
  }
  report(5, bad == 0,
         num(graphs) + " graphs, subgraph mode: " + num(bad) + " disagreements (induced mode, informational: " +
             num(induced_bad) + " disagreements)");
}

void criterion6() {
  std::mt19937_64 rng(6);
  std::size_t covers = 0;
  std::size_t bad = 0;
  for (int n : {5, 7, 9}) {
    for (int i = 0; i < 1000; ++i) {
      const int order = 2 + static_cast<int>(rng() % 29);
      const OrientedGraph g = random_connected_oriented_graph(order, static_cast<int>(rng() % 30), rng);
      const CoverResult r = build_cyclic_cover(g, n);
      ++covers;
      bad += t::cover_problem(g, r.cover).has_value() || cover_violation(g, r.cover).has_value();
    }
  }
  // Work per (|V| + |A|) at three sizes; sparse graphs with about 2|V| arcs.
  std::vector<double> ratios;
  std::string sizes;
  for (int order : {10, 100, 1000}) {
    double worst = 0.0;
    for (int rep = 0; rep < 5; ++rep) {
      const OrientedGraph g = random_connected_oriented_graph(order, std::max(1, 200 / order), rng);
      const CoverResult r = build_cyclic_cover(g, 7);
      worst = std::max(worst, static_cast<double>(r.cover.work) / static_cast<double>(g.order() + static_cast<int>(g.arc_count())));
    }
    ratios.push_back(worst);
    sizes += " " + std::to_string(order) + ":" + std::to_string(worst);
  }
  const double spread = *std::max_element(ratios.begin(), ratios.end()) / *std::min_element(ratios.begin(), ratios.end());
  report(6, bad == 0 && spread <= 2.0,
         num(covers) + " covers, " + num(bad) + " violations; work/(V+A) at" + sizes + ", spread " +
             std::to_string(spread));
}

void criterion7() {
  std::size_t bad = 0;
  std::size_t checked = 0;
  for (int n = 2; n <= 4; ++n) {
    const DualityReport r = check_duality_pair(make_directed_path(n + 1), make_transitive_tournament(n), 4);
    bad += r.counterexamples.size();
    checked += r.checked;
  }
  report(7, bad == 0, "(P_{n+1}, TT_n) for n=2..4: " + num(checked) + " checks, " + num(bad) + " counterexamples");
}

void criterion8() {
  int trees = 0;
  int bad = 0;
  int by_height[4] = {0, 0, 0, 0};
  for (std::uint64_t seed = 1; trees < 50; ++seed) {
    const int order = 2 + static_cast<int>(seed % 8);
    const OrientedGraph tree = random_oriented_tree(order, 3, seed);
    const int h = tree_height(tree);
    ++trees;
    ++by_height[h];
    const OrientedGraph dual = tree_dual(tree);
    const bool pair = check_duality_pair(tree, dual, 4).ok();
    const bool smaller = dual.order() < core_of(tree).order();
    bad += !(pair && smaller);
  }
  report(8, bad == 0,
         std::to_string(trees) + " trees (heights 1/2/3: " + std::to_string(by_height[1]) + "/" +
             std::to_string(by_height[2]) + "/" + std::to_string(by_height[3]) + "), " + std::to_string(bad) +
             " failures");
}

void criterion9() {
  int bad = 0;
  int checks = 0;
  auto expect = [&](bool ok) {
    ++checks;
    bad += !ok;
  };
  for (int n = 5; n <= 12; ++n) expect(exists_hom(make_q_path(n), make_q_path(n - 2), kNoGuard).has_value());
  for (int n = 4; n <= 12; ++n) {
    expect(hom_equivalent(make_q_path(n), make_directed_path(3), kNoGuard) == (n % 2 == 1));
    expect(hom_equivalent(make_ac_cycle(n), make_directed_path(2), kNoGuard) == (n % 2 == 0));
  }
  for (int n = 4; n <= 9; ++n) expect(!exists_hom(make_q_path(n + 1), make_ac_cycle(n), kNoGuard).has_value());
  // Height-3 members of the families, plus every height-3 connected oriented
  // graph on at most 5 vertices.
  std::vector<Digraph> height3;
  for (int n = 6; n <= 12; n += 2) height3.push_back(make_q_path(n));
  height3.push_back(make_directed_path(4));
  for (int order = 4; order <= 5; ++order) {
    for (const auto& g : enumerate_oriented_graphs(order, true)) {
      if (is_balanced(g) && levels(g).height == 3) height3.push_back(g);
    }
  }
  for (const Digraph& g : height3) {
    expect(levels(g).height == 3);
    expect(exists_hom(make_directed_path(3), g, kNoGuard).has_value());
    expect(exists_hom(g, make_directed_path(4), kNoGuard).has_value());
  }
  report(9, bad == 0, std::to_string(checks) + " oracle checks, " + std::to_string(bad) + " failures");
}

void criterion10() {
  std::vector<Digraph> instances;
  for (const auto& g : enumerate_oriented_graphs_up_to(4, false)) instances.push_back(g);
  const std::vector<std::pair<std::string, Digraph>> cycles{
      {"directed C_3", make_directed_cycle(3)},
      {"directed C_4", make_directed_cycle(4)},
      {"AC_5", make_ac_cycle(5)},
      {"AC_7", make_ac_cycle(7)},
  };
  bool all = true;
  std::string summary;
  for (const auto& [name, c] : cycles) {
    PathDualityOptions options;
    // The directed cycles are neither B-cycles nor AC-cycles, so they are
    // run without the recognition check.
    options.require_recognized = classify_cycle(c) != CycleKind::Other;
    std::size_t bad = 0;
    std::string first;
    for (const Digraph& g : instances) {
      const PathDualityReport r = check_path_duality(c, g, options);
      if (!r.holds()) {
        if (bad == 0) first = format_graph(g);
        ++bad;
      }
    }
    for (char& ch : first) ch = ch == '\n' ? ';' : ch;
    std::printf("  %s: %zu/%zu graphs violate the path-duality equivalence%s%s\n", name.c_str(), bad, instances.size(),
                bad ? ", first: " : "", first.c_str());
    all = all && bad == 0;
    summary += " " + name + "=" + num(bad);
  }
  report(10, all, "path bound 2|V_c| arcs, violations per cycle:" + summary);
}

}  // namespace

int main() {
  const std::vector<Digraph> instances = sweep_instances();
  guarded(1, [&] { criterion1(instances); });
  guarded(2, [&] { criterion2(instances); });
  guarded(3, criterion3);
  guarded(4, criterion4);
  guarded(5, criterion5);
  guarded(6, criterion6);
  guarded(7, criterion7);
  guarded(8, criterion8);
  guarded(9, criterion9);
  guarded(10, criterion10);
  return failures;
}
