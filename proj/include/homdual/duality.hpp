#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "homdual/digraph.hpp"
#include "homdual/hom_search.hpp"

namespace homdual {

// Seeded random instances for a duality sweep. Orders are drawn uniformly
// from [min_order, max_order].
struct SampleSpec {
  int samples = 0;
  int min_order = 5;
  int max_order = 8;
  std::uint64_t seed = 0;
};

struct DualityCounterexample {
  Digraph instance;
  bool left_maps = false;   // left -> instance
  bool right_maps = false;  // instance -> right
  bool sampled = false;
};

struct DualityReport {
  std::size_t checked = 0;
  int exhaustive_up_to = 0;
  std::size_t sampled = 0;
  // Sorted by order, then arc list.
  std::vector<DualityCounterexample> counterexamples;

  bool ok() const { return counterexamples.empty(); }
  std::string to_text() const;
  // {"checked":..,"exhaustive_up_to":..,"sampled":..,"counterexamples":[..]}
  std::string to_json() const;
};

// For every oriented graph L with at most max_order <= 5 vertices, and each
// sample, exactly one of left -> L and L -> right must hold.
DualityReport check_duality_pair(const Digraph& left, const Digraph& right, int max_order,
                                 const SampleSpec& samples = {}, std::size_t guard = kDefaultHomGuard);

enum class CycleKind { BCycle, ACCycle, Other };

struct PathDualityOptions {
  // 0 means 2 * |V_c|.
  int max_path_arcs = 0;
  // Throw on a cycle that is neither a B-cycle nor an AC-cycle.
  bool require_recognized = true;
};

struct PathDualityReport {
  CycleKind kind = CycleKind::Other;
  int max_path_arcs = 0;
  bool maps_to_cycle = false;  // g -> c
  bool paths_pass = false;     // every short path mapping to g maps to c
  // First path pattern mapping to g but not to c.
  std::optional<Pattern> witness;
  // AC_n only: Q_{n+1} -/-> g.
  std::optional<bool> q_path_passes;

  bool holds() const {
    return maps_to_cycle == paths_pass && (!q_path_passes || *q_path_passes == maps_to_cycle);
  }
};

// g -> c against "every oriented path P with at most max_path_arcs arcs and
// P -> g also has P -> c". Path homomorphisms are decided by pattern walks.
PathDualityReport check_path_duality(const Digraph& c, const Digraph& g, const PathDualityOptions& options = {});

CycleKind classify_cycle(const Digraph& c);

// Height of a connected oriented tree. Throws ValidationError otherwise.
int tree_height(const Digraph& t);

// Dual of an oriented tree of height 1..3: TT_1, TT_2, or AC_{k-1} where
// the core of t is Q_k. Throws ContractError if a height-3 core is no Q path.
OrientedGraph tree_dual(const Digraph& t);

// Random attachment tree with fresh orientations drawn until the height is
// at most height_cap. Deterministic per seed.
OrientedGraph random_oriented_tree(int order, int height_cap, std::uint64_t seed);

// Random spanning tree plus each remaining pair with probability
// extra_arc_percent / 100, every arc oriented at random.
OrientedGraph random_connected_oriented_graph(int order, int extra_arc_percent, std::mt19937_64& rng);

}  // namespace homdual
