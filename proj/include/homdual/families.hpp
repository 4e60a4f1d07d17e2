#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "homdual/digraph.hpp"

namespace homdual {

enum class FamilyTag {
  DirectedPath,
  DirectedCycle,
  AlternatingPath,
  QPath,
  ACCycle,
  TransitiveTournament,
  UndirectedCycle,
};

struct FamilyId {
  FamilyTag tag = FamilyTag::DirectedPath;
  int n = 1;
  friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

// CLI names: dipath, dicycle, altpath, qpath, accycle, tt, cycle.
std::string_view family_name(FamilyTag tag);
std::optional<FamilyTag> parse_family_name(std::string_view name);
// Smallest n each family accepts.
int family_minimum(FamilyTag tag);
std::string to_string(const FamilyId& id);

// Canonical labellings: vertex i is p_i / a_i / q_i of the usual drawings.

// Arcs (i, i+1). n >= 1.
OrientedGraph make_directed_path(int n);
// Arcs (i, i+1 mod n). n >= 3.
OrientedGraph make_directed_cycle(int n);
// Starts with a forward arc, then alternates; n = 1 is a single vertex.
OrientedGraph make_alternating_path(int n);
// q_0..q_{n-1}: two forward arcs, alternating middle section q_1..q_{n-2},
// last two arcs equal. Q_3 and Q_4 are directed paths. n >= 3.
OrientedGraph make_q_path(int n);
// A_{n+1} with its end vertices identified. For odd n the only
// same-direction consecutive pair is a_{n-1} -> a_0 -> a_1. n >= 3.
OrientedGraph make_ac_cycle(int n);
// Arcs (i, j) for i < j. n >= 1.
OrientedGraph make_transitive_tournament(int n);
// Edges {i, i+1 mod n}. n >= 3.
UndirectedGraph make_undirected_cycle(int n);
UndirectedGraph make_complete_graph(int n);

OrientedGraph make_family(const FamilyId& id);

// Pattern of Q_n read from q_0.
Pattern q_pattern(int n);

// Fold of Q_n onto Q_{n-2} identifying q_3 ~ q_1 and q_4 ~ q_2 (so
// q_i -> q_{i-2} for i >= 3). A valid homomorphism for n >= 6; for n = 5 the
// last arc of Q_5 points the wrong way and the fold is not arc-preserving.
std::vector<Vertex> q_path_fold(int n);

// True iff no proper contiguous subpath P' has |net length(P')| equal to
// |net length(P)|. Single vertices count as subpaths of net length 0.
bool is_minimal_path(const Digraph& path);
bool is_minimal_pattern(const Pattern& p);

// Hell-Zhu B-cycle: some rotation/reflection (c_0, ..., c_k, ..., c_{m-1})
// has (c_0..c_k) a forward directed path and (c_0, c_{m-1}, ..., c_k) a
// minimal path of net length k-1 read in that order. Such cycles have net
// length exactly 1. Order capped at 20.
bool is_b_cycle(const Digraph& cycle);

// Identifies g up to isomorphism as a member of one family. Families are
// tried in FamilyTag order, so the single arc is DirectedPath 2, Q_4 is
// DirectedPath 4 and TT_3 comes back as ACCycle 3. Brute-force isomorphism
// up to order 10, exact structural checks above.
std::optional<FamilyId> recognize_family(const Digraph& g);
std::optional<FamilyId> recognize_family(const UndirectedGraph& g);

}  // namespace homdual
