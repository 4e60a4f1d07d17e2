#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "homdual/digraph.hpp"
#include "homdual/hom_search.hpp"

namespace homdual {

inline constexpr std::size_t kMaxOrientationEdges = 20;
inline constexpr int kMaxRghvOrder = 10;

// Edge-preserving map g -> h, or nullopt.
std::optional<std::vector<Vertex>> undirected_hom(const UndirectedGraph& g, const UndirectedGraph& h,
                                                  std::size_t guard = kDefaultHomGuard);

// forward[i] orients host.edges()[i] = {u, v}, u < v, as u -> v.
struct Orientation {
  UndirectedGraph host;
  std::vector<bool> forward;

  OrientedGraph digraph() const;
  // Inverse of digraph(); throws ValidationError unless d orients host.
  static Orientation of(const UndirectedGraph& host, const Digraph& d);
};

enum class Containment { Subgraph, Induced };

struct ForbiddenSet {
  std::vector<OrientedGraph> members;
  Containment mode = Containment::Subgraph;
  bool acyclic_required = false;
};

// Members of the image set of Q_n, computed once per n.
const ImageSet& cached_images(int n);
ForbiddenSet image_forbidden_set(int n, Containment mode = Containment::Subgraph);
// The image set of Q_n without the directed 3- and 4-cycles, acyclic
// orientations only.
ForbiddenSet acyclic_forbidden_set(int n, Containment mode = Containment::Subgraph);

struct ForbiddenWitness {
  std::size_t member = 0;
  std::vector<Vertex> embedding;  // member vertex -> host vertex
};

// Injective map of some member into o that preserves arcs; in Induced mode
// non-adjacent member pairs must also go to non-adjacent pairs.
std::optional<ForbiddenWitness> contains_forbidden(const Digraph& o, const ForbiddenSet& f);
inline std::optional<ForbiddenWitness> contains_forbidden(const Orientation& o, const ForbiddenSet& f) {
  return contains_forbidden(o.digraph(), f);
}

// Edges are fixed in BFS order from a highest-degree vertex, u -> v with
// u < v tried first. A partial orientation is abandoned as soon as it holds a
// member that no later choice can remove. At most 20 edges.
std::optional<Orientation> find_f_free_orientation(const UndirectedGraph& g, const ForbiddenSet& f);

// Depth-first search over orientations in the order above. `dead` sees each
// partial orientation and must be monotone (true stays true as arcs are
// added); `accept` sees complete orientations.
std::optional<Orientation> search_orientations(const UndirectedGraph& g,
                                               const std::function<bool(const Digraph&)>& dead,
                                               const std::function<bool(const Digraph&)>& accept);

enum class ColourMethod { Hom, Orientation, Pattern };

struct ColourResult {
  bool colourable = false;
  std::vector<Vertex> mapping;             // into the cycle, when colourable
  std::optional<Orientation> orientation;  // orientation and pattern methods
};

// g -> C_k. hom: direct search. orientation: an orientation free of the
// image set of Q_{k+1}. pattern: an orientation with no semi-walk following
// Q_{k+1}, turned into a colouring by decide_ac. Even k reduces to a
// 2-colouring for the last two methods.
ColourResult cycle_colourable(const UndirectedGraph& g, int k, ColourMethod method);

struct RghvResult {
  bool colourable = false;        // proper k-colouring exists
  bool orientation_found = false; // orientation with no directed path on k+1 vertices
  std::vector<int> colouring;
  std::optional<Orientation> orientation;
  bool agree() const { return colourable == orientation_found; }
};

// Both sides of the longest-path characterisation of k-colourability,
// computed independently. At most 10 vertices.
RghvResult rghv_colourability(const UndirectedGraph& g, int k);

}  // namespace homdual
