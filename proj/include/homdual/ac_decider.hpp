#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homdual/digraph.hpp"
#include "homdual/hom_search.hpp"

namespace homdual {

// The n-cyclic cover (A_0, A_1, ..., A_m, D_m, ..., D_1) of a connected
// oriented graph, n odd >= 5, m = (n-1)/2.
//
// Class parity: for odd i, A_i holds sinks and D_i sources; for even i >= 2,
// A_i holds sources and D_i sinks. Position in the cyclic order is i for A_i
// and n - i for D_i, which is also the AC_n vertex the class maps to.
struct CyclicCover {
  int n = 0;
  int m = 0;
  // Step 1 applied: no vertex has both in- and out-neighbours. Then only
  // a_classes[0] (sources and isolated vertices) and a_classes[1] (sinks)
  // are used.
  bool bipartition = false;
  std::vector<std::vector<Vertex>> a_classes;  // index 0..m
  std::vector<std::vector<Vertex>> d_classes;  // index 1..m; [0] stays empty
  std::vector<int> position;                   // per vertex
  // Vertex visits plus adjacency entries scanned while building.
  std::uint64_t work = 0;

  // Classes in cyclic order; two entries for a bipartition.
  std::vector<std::vector<Vertex>> ordered() const;
};

// l(x), r(x) for x in A_0: smallest in- and out-neighbour. p(x) for x
// outside A_0: smallest neighbour in the previous class. A vertex of A_m or
// D_m with no neighbour in class m-1 has p(x) = kNoVertex. All entries are
// kNoVertex for a bipartition.
struct SelectorFunctions {
  std::vector<Vertex> left;
  std::vector<Vertex> right;
  std::vector<Vertex> parent;
};

struct CoverResult {
  CyclicCover cover;
  SelectorFunctions selectors;
};

// Steps 1-7 with smallest-id selectors. Throws ValidationError when g is
// disconnected, has a symmetric pair, or n is even or below 5.
CoverResult build_cyclic_cover(const Digraph& g, int n);

// Checks the four cover properties: class parity, disjoint cover, "all
// classes independent iff A_0 independent", and every arc inside A_0,
// between consecutive classes, or between D_i and A_i with 1 <= i <= m-1.
// Returns the first violation.
std::optional<std::string> cover_violation(const Digraph& g, const CyclicCover& cover);

// phi(x) = position of x's class, when A_0 is independent and no arc joins
// A_i and D_i for 1 <= i <= m-1. The map is validated before it is returned.
std::optional<Homomorphism> cover_induced_hom(const CyclicCover& cover, const Digraph& g);

struct NoCertificate {
  SemiWalk walk;
  int l = 0;
};

// Semi-walk with the pattern of Q_4 (arc inside A_0) or Q_{2k+4} (arc between
// A_k and D_k). Throws ContractError if the cover induces a homomorphism.
NoCertificate extract_no_certificate(const Digraph& g, const CoverResult& cover);

enum class Verdict { Yes, No };

struct Certificate {
  Verdict verdict = Verdict::Yes;
  int n = 0;
  std::vector<Vertex> mapping;  // yes: vertex -> AC_n index
  SemiWalk walk;                // no
  int l = 0;                    // no
};

// Decides g -> AC_n for any digraph g and n >= 3, with a certificate.
// Symmetric pair: a walk back and forth on it. Even n: g -> AC_n iff no
// vertex has both in- and out-neighbours; otherwise a walk x, y, z, y, z, ...
// realising Q_{n+1}. n = 3: directed 3-walk or longest-path ranks. Odd
// n >= 5: the cover, one weak component at a time.
Certificate decide_ac(const Digraph& g, int n);

// Allowed no-certificate lengths: even 4 <= l <= n+1 for odd n, l = n+1 for
// even n.
bool certificate_length_allowed(int n, int l);

struct VerifyResult {
  bool ok = false;
  std::string reason;
};

// Checks a certificate against g alone: a yes mapping must preserve arcs into
// AC_n; a no walk must lie in g with the pattern of Q_l for an allowed l.
VerifyResult verify_certificate(const Digraph& g, int n, const Certificate& cert);

// {"verdict":"yes","n":..,"mapping":[..]} or
// {"verdict":"no","n":..,"walk":[..],"directions":"FF..","l":..}
std::string certificate_to_json(const Certificate& cert);
// Throws ValidationError naming the missing or malformed field.
Certificate certificate_from_json(const std::string& text);

}  // namespace homdual
