#pragma once

// Independent check of the cyclic-cover properties, written against the
// class lists only (not the position array the builder fills in).

#include <optional>
#include <string>
#include <vector>

#include "homdual/ac_decider.hpp"

namespace homdual::testing {

inline std::optional<std::string> cover_problem(const Digraph& g, const CyclicCover& c) {
  const int n = c.n;
  const int m = c.m;
  if (n % 2 == 0 || m != (n - 1) / 2) return "bad parameters";
  std::vector<int> where(static_cast<std::size_t>(g.order()), -1);
  auto place = [&](const std::vector<Vertex>& cls, int pos) -> std::optional<std::string> {
    for (Vertex v : cls) {
      if (v < 0 || v >= g.order()) return "vertex out of range";
      if (where[static_cast<std::size_t>(v)] != -1) return "vertex " + std::to_string(v) + " in two classes";
      where[static_cast<std::size_t>(v)] = pos;
    }
    return std::nullopt;
  };
  if (c.bipartition) {
    if (c.a_classes.size() < 2) return "bipartition needs two classes";
    if (auto e = place(c.a_classes[0], 0)) return e;
    if (auto e = place(c.a_classes[1], 1)) return e;
    for (std::size_t i = 2; i < c.a_classes.size(); ++i) {
      if (!c.a_classes[i].empty()) return "extra class in a bipartition";
    }
    for (const auto& d : c.d_classes) {
      if (!d.empty()) return "extra class in a bipartition";
    }
  } else {
    if (c.a_classes.size() != static_cast<std::size_t>(m + 1) || c.d_classes.size() != static_cast<std::size_t>(m + 1)) {
      return "wrong number of classes";
    }
    if (!c.d_classes[0].empty()) return "D_0 must be empty";
    for (int i = 0; i <= m; ++i) {
      if (auto e = place(c.a_classes[static_cast<std::size_t>(i)], i)) return e;
    }
    for (int i = 1; i <= m; ++i) {
      if (auto e = place(c.d_classes[static_cast<std::size_t>(i)], n - i)) return e;
    }
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (where[static_cast<std::size_t>(v)] == -1) return "vertex " + std::to_string(v) + " uncovered";
  }

  auto source = [&](Vertex v) { return g.in_degree(v) == 0; };
  auto sink = [&](Vertex v) { return g.out_degree(v) == 0; };
  if (c.bipartition) {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.in_degree(v) > 0 && g.out_degree(v) > 0) return "bipartition with a middle vertex";
      if (where[static_cast<std::size_t>(v)] == 0 && !source(v)) return "A_0 member with an in-neighbour";
      if (where[static_cast<std::size_t>(v)] == 1 && !(sink(v) && !source(v))) return "A_1 member is not a sink";
    }
    for (const Arc& a : g.arcs()) {
      if (where[static_cast<std::size_t>(a.from)] != 0 || where[static_cast<std::size_t>(a.to)] != 1) {
        return "bipartition arc not from A_0 to A_1";
      }
    }
    return std::nullopt;
  }

  for (Vertex v = 0; v < g.order(); ++v) {
    const bool middle = g.in_degree(v) > 0 && g.out_degree(v) > 0;
    const int pos = where[static_cast<std::size_t>(v)];
    if (middle != (pos == 0)) return "A_0 is not the set of vertices with in- and out-neighbours";
    if (pos == 0) continue;
    const bool is_a = pos <= m;
    const int i = is_a ? pos : n - pos;
    // Odd i: A_i sinks, D_i sources. Even i: A_i sources, D_i sinks.
    const bool want_sink = (i % 2 == 1) == is_a;
    if (want_sink && !sink(v)) return "vertex " + std::to_string(v) + " should be a sink";
    if (!want_sink && !source(v)) return "vertex " + std::to_string(v) + " should be a source";
  }
  for (const Arc& a : g.arcs()) {
    const int p = where[static_cast<std::size_t>(a.from)];
    const int q = where[static_cast<std::size_t>(a.to)];
    if (p == q) {
      if (p != 0) return "arc inside a class other than A_0";
      continue;
    }
    const int diff = (p - q + n) % n;
    if (diff == 1 || diff == n - 1) continue;
    const int lo = std::min(p, q);
    const int hi = std::max(p, q);
    if (lo >= 1 && lo <= m - 1 && hi == n - lo) continue;
    return "arc " + std::to_string(a.from) + "->" + std::to_string(a.to) + " joins non-consecutive classes";
  }
  return std::nullopt;
}

}  // namespace homdual::testing
