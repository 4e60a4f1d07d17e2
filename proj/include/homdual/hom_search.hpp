#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "homdual/digraph.hpp"

namespace homdual {

// |V_g| * |V_h| above this makes exists_hom throw GuardError.
inline constexpr std::size_t kDefaultHomGuard = 200;
inline constexpr std::size_t kNoGuard = 0;
inline constexpr int kDefaultCoreGuard = 12;
inline constexpr int kDefaultIsoGuard = 10;
inline constexpr int kImageGuard = 10;
inline constexpr int kMaxEnumerationOrder = 6;

struct Homomorphism {
  int source_order = 0;
  int target_order = 0;
  std::vector<Vertex> map;
};

// Names the first arc whose image is not an arc of h, or a size problem.
std::optional<std::string> homomorphism_violation(const Digraph& g, const Digraph& h, const std::vector<Vertex>& map);
inline bool is_homomorphism(const Digraph& g, const Digraph& h, const std::vector<Vertex>& map) {
  return !homomorphism_violation(g, h, map);
}

// f : a -> b, then g : b -> c.
Homomorphism compose(const Homomorphism& first, const Homomorphism& second);

// Complete backtracking search with arc-consistency preprocessing and
// forward checking. Variables in descending total degree, values in
// ascending id, so witnesses are deterministic. guard = kNoGuard disables
// the size check.
std::optional<Homomorphism> exists_hom(const Digraph& g, const Digraph& h, std::size_t guard = kDefaultHomGuard);
// As exists_hom, restricted to maps hitting every vertex of h.
std::optional<Homomorphism> exists_surjective_hom(const Digraph& g, const Digraph& h,
                                                  std::size_t guard = kDefaultHomGuard);
bool hom_equivalent(const Digraph& g, const Digraph& h, std::size_t guard = kDefaultHomGuard);

// Smallest induced subgraph g maps onto, relabelled in increasing vertex
// order. Unique up to isomorphism.
Digraph core_of(const Digraph& g, int guard = kDefaultCoreGuard);

// Bijection p with (u,v) in g iff (p[u], p[v]) in h.
std::optional<std::vector<Vertex>> find_isomorphism(const Digraph& g, const Digraph& h, int guard = kDefaultIsoGuard);
inline bool isomorphic(const Digraph& g, const Digraph& h, int guard = kDefaultIsoGuard) {
  return find_isomorphism(g, h, guard).has_value();
}
bool isomorphic(const UndirectedGraph& g, const UndirectedGraph& h, int guard = kDefaultIsoGuard);

// Isomorphism-invariant key: order, arc count, sorted (out, in) degrees.
// Equal keys are necessary, not sufficient, for isomorphism.
std::vector<int> invariant_key(const Digraph& g);

// Canonical form: lexicographically least pair code over relabellings that
// respect a refined degree partition. One code per isomorphism class.
// Pair (i, j), i < j, is coded 0 (none), 1 (i->j), 2 (j->i), 3 (both).
std::vector<std::uint8_t> canonical_code(const Digraph& g);
Digraph from_canonical_code(int order, const std::vector<std::uint8_t>& code);

// Homomorphic images that are vertex- and arc-surjective: quotients of g by
// vertex partitions with independent blocks and no symmetric pair created.
// Pairwise non-isomorphic.
std::vector<OrientedGraph> quotient_images(const Digraph& g, int guard = kImageGuard);

// The set F(g) of surjective homomorphic images of g, taken up to
// induced-subgraph minimality: oriented graphs H with a vertex-surjective
// homomorphism g -> H such that g maps to no H - v. An oriented graph D
// contains an induced (equivalently, any) copy of a member iff g -> D.
// For g = Q_6 this is the eight-member set C3, TT3, P4, C4, C4', Q6, D5
// and its converse.
struct ImageSet {
  int source_order = 0;
  std::vector<OrientedGraph> members;
};
ImageSet surjective_images(const Digraph& g, int guard = kImageGuard);

// One representative per isomorphism class, in canonical labelling, sorted
// by canonical code. order <= 6.
std::vector<OrientedGraph> enumerate_oriented_graphs(int order, bool connected_only);
// All oriented graphs with 1..max_order vertices.
std::vector<OrientedGraph> enumerate_oriented_graphs_up_to(int max_order, bool connected_only);
std::vector<UndirectedGraph> enumerate_undirected_graphs(int order, bool connected_only);

}  // namespace homdual
