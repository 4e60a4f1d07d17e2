#include "homdual/hom_search.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "homdual/error.hpp"

namespace homdual {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

void check_guard(const Digraph& g, const Digraph& h, std::size_t guard) {
  const std::size_t product = static_cast<std::size_t>(g.order()) * static_cast<std::size_t>(h.order());
  if (guard != kNoGuard && product > guard) {
    throw GuardError("homomorphism search guard exceeded: |V_g| * |V_h| = " + std::to_string(product) + " > " +
                     std::to_string(guard));
  }
}

// Backtracking over bitset domains. Rows of `table` are the current domains
// of the source vertices; each level works on its own copy of the table.
class HomSolver {
 public:
  HomSolver(const Digraph& g, const Digraph& h, bool surjective)
      : g_(g), h_(h), surjective_(surjective), ng_(g.order()), nh_(h.order()), words_((h.order() + 63) / 64) {
    out_mask_.assign(idx(nh_) * words_, 0);
    in_mask_.assign(idx(nh_) * words_, 0);
    for (const Arc& a : h_.arcs()) {
      set_bit(&out_mask_[idx(a.from) * words_], a.to);
      set_bit(&in_mask_[idx(a.to) * words_], a.from);
    }
    order_.resize(idx(ng_));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
      return g_.in_degree(a) + g_.out_degree(a) > g_.in_degree(b) + g_.out_degree(b);
    });
    assigned_.assign(idx(ng_), kNoVertex);
    used_.assign(idx(nh_), 0);
  }

  std::optional<std::vector<Vertex>> solve() {
    if (ng_ == 0) {
      if (surjective_ && nh_ > 0) return std::nullopt;
      return std::vector<Vertex>{};
    }
    if (nh_ == 0) return std::nullopt;
    if (surjective_ && nh_ > ng_) return std::nullopt;
    std::vector<std::uint64_t> table(idx(ng_) * words_, 0);
    for (Vertex u = 0; u < ng_; ++u) {
      std::uint64_t* row = &table[idx(u) * words_];
      for (Vertex x = 0; x < nh_; ++x) {
        if (g_.out_degree(u) > 0 && h_.out_degree(x) == 0) continue;
        if (g_.in_degree(u) > 0 && h_.in_degree(x) == 0) continue;
        set_bit(row, x);
      }
    }
    if (!arc_consistency(table)) return std::nullopt;
    uncovered_ = nh_;
    if (!search(0, table)) return std::nullopt;
    return assigned_;
  }

 private:
  static void set_bit(std::uint64_t* row, Vertex x) { row[idx(x) / 64] |= std::uint64_t{1} << (idx(x) % 64); }
  static bool test_bit(const std::uint64_t* row, Vertex x) { return (row[idx(x) / 64] >> (idx(x) % 64)) & 1U; }
  static void clear_bit(std::uint64_t* row, Vertex x) { row[idx(x) / 64] &= ~(std::uint64_t{1} << (idx(x) % 64)); }

  bool empty_row(const std::uint64_t* row) const {
    for (std::size_t w = 0; w < words_; ++w) {
      if (row[w]) return false;
    }
    return true;
  }

  bool intersects(const std::uint64_t* a, const std::uint64_t* b) const {
    for (std::size_t w = 0; w < words_; ++w) {
      if (a[w] & b[w]) return true;
    }
    return false;
  }

  // Prune to a fixpoint: x stays in D(u) only if every arc at u has support.
  bool arc_consistency(std::vector<std::uint64_t>& table) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Arc& a : g_.arcs()) {
        std::uint64_t* du = &table[idx(a.from) * words_];
        std::uint64_t* dv = &table[idx(a.to) * words_];
        for (Vertex x = 0; x < nh_; ++x) {
          if (test_bit(du, x) && !intersects(&out_mask_[idx(x) * words_], dv)) {
            clear_bit(du, x);
            changed = true;
          }
          if (test_bit(dv, x) && !intersects(&in_mask_[idx(x) * words_], du)) {
            clear_bit(dv, x);
            changed = true;
          }
        }
        if (empty_row(du) || empty_row(dv)) return false;
      }
    }
    return true;
  }

  bool search(std::size_t depth, const std::vector<std::uint64_t>& table) {
    if (depth == idx(ng_)) return !surjective_ || uncovered_ == 0;
    if (surjective_ && static_cast<int>(idx(ng_) - depth) < uncovered_) return false;
    const Vertex u = order_[depth];
    const std::uint64_t* row = &table[idx(u) * words_];
    std::vector<std::uint64_t> next;
    for (Vertex x = 0; x < nh_; ++x) {
      if (!test_bit(row, x)) continue;
      next = table;
      bool ok = true;
      for (Vertex w : g_.out_neighbours(u)) {
        if (assigned_[idx(w)] != kNoVertex || w == u) continue;
        std::uint64_t* dw = &next[idx(w) * words_];
        const std::uint64_t* mask = &out_mask_[idx(x) * words_];
        for (std::size_t k = 0; k < words_; ++k) dw[k] &= mask[k];
        if (empty_row(dw)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        for (Vertex w : g_.in_neighbours(u)) {
          if (assigned_[idx(w)] != kNoVertex || w == u) continue;
          std::uint64_t* dw = &next[idx(w) * words_];
          const std::uint64_t* mask = &in_mask_[idx(x) * words_];
          for (std::size_t k = 0; k < words_; ++k) dw[k] &= mask[k];
          if (empty_row(dw)) {
            ok = false;
            break;
          }
        }
      }
      if (!ok) continue;
      assigned_[idx(u)] = x;
      if (used_[idx(x)]++ == 0) --uncovered_;
      if (search(depth + 1, next)) return true;
      if (--used_[idx(x)] == 0) ++uncovered_;
      assigned_[idx(u)] = kNoVertex;
    }
    return false;
  }

  const Digraph& g_;
  const Digraph& h_;
  bool surjective_;
  int ng_;
  int nh_;
  std::size_t words_;
  std::vector<std::uint64_t> out_mask_;
  std::vector<std::uint64_t> in_mask_;
  std::vector<Vertex> order_;
  std::vector<Vertex> assigned_;
  std::vector<int> used_;
  int uncovered_ = 0;
};

std::optional<Homomorphism> run_solver(const Digraph& g, const Digraph& h, bool surjective, std::size_t guard) {
  check_guard(g, h, guard);
  HomSolver solver(g, h, surjective);
  auto map = solver.solve();
  if (!map) return std::nullopt;
  return Homomorphism{g.order(), h.order(), std::move(*map)};
}

}  // namespace

std::optional<std::string> homomorphism_violation(const Digraph& g, const Digraph& h, const std::vector<Vertex>& map) {
  if (map.size() != idx(g.order())) {
    return "mapping has " + std::to_string(map.size()) + " entries for " + std::to_string(g.order()) + " vertices";
  }
  for (std::size_t v = 0; v < map.size(); ++v) {
    if (map[v] < 0 || map[v] >= h.order()) {
      return "vertex " + std::to_string(v) + " maps to " + std::to_string(map[v]) + ", outside [0, " +
             std::to_string(h.order()) + ")";
    }
  }
  for (const Arc& a : g.arcs()) {
    const Vertex x = map[idx(a.from)];
    const Vertex y = map[idx(a.to)];
    if (!h.has_arc(x, y)) {
      return "arc " + std::to_string(a.from) + "->" + std::to_string(a.to) + " maps to " + std::to_string(x) + "->" +
             std::to_string(y) + ", which is not an arc of the target";
    }
  }
  return std::nullopt;
}

Homomorphism compose(const Homomorphism& first, const Homomorphism& second) {
  if (first.target_order != second.source_order) throw ValidationError("compose: orders do not chain");
  Homomorphism out{first.source_order, second.target_order, {}};
  out.map.reserve(first.map.size());
  for (Vertex v : first.map) out.map.push_back(second.map[idx(v)]);
  return out;
}

std::optional<Homomorphism> exists_hom(const Digraph& g, const Digraph& h, std::size_t guard) {
  return run_solver(g, h, false, guard);
}

std::optional<Homomorphism> exists_surjective_hom(const Digraph& g, const Digraph& h, std::size_t guard) {
  return run_solver(g, h, true, guard);
}

bool hom_equivalent(const Digraph& g, const Digraph& h, std::size_t guard) {
  return exists_hom(g, h, guard).has_value() && exists_hom(h, g, guard).has_value();
}

Digraph core_of(const Digraph& g, int guard) {
  const int n = g.order();
  if (n > guard) {
    throw GuardError("core_of guard exceeded: order " + std::to_string(n) + " > " + std::to_string(guard));
  }
  for (int k = 1; k < n; ++k) {
    std::vector<Vertex> subset(idx(k));
    std::iota(subset.begin(), subset.end(), 0);
    while (true) {
      Digraph candidate = induced_subgraph(g, subset);
      if (exists_hom(g, candidate, kNoGuard)) return candidate;
      // Next k-combination of 0..n-1 in lexicographic order.
      int i = k - 1;
      while (i >= 0 && subset[idx(i)] == n - k + i) --i;
      if (i < 0) break;
      ++subset[idx(i)];
      for (int j = i + 1; j < k; ++j) subset[idx(j)] = subset[idx(j) - 1] + 1;
    }
  }
  return g;
}

std::vector<int> invariant_key(const Digraph& g) {
  std::vector<int> key{g.order(), static_cast<int>(g.arc_count())};
  std::vector<std::pair<int, int>> degrees;
  for (Vertex v = 0; v < g.order(); ++v) degrees.emplace_back(g.out_degree(v), g.in_degree(v));
  std::sort(degrees.begin(), degrees.end());
  for (auto [o, i] : degrees) {
    key.push_back(o);
    key.push_back(i);
  }
  return key;
}

std::optional<std::vector<Vertex>> find_isomorphism(const Digraph& g, const Digraph& h, int guard) {
  const int n = g.order();
  if (n > guard) {
    throw GuardError("isomorphism guard exceeded: order " + std::to_string(n) + " > " + std::to_string(guard));
  }
  if (invariant_key(g) != invariant_key(h)) return std::nullopt;
  std::vector<char> ga(idx(n) * idx(n), 0);
  std::vector<char> ha(idx(n) * idx(n), 0);
  for (const Arc& a : g.arcs()) ga[idx(a.from) * idx(n) + idx(a.to)] = 1;
  for (const Arc& a : h.arcs()) ha[idx(a.from) * idx(n) + idx(a.to)] = 1;

  // BFS order from the highest-degree vertex keeps each new vertex adjacent
  // to already-mapped ones, which is where the pruning comes from.
  std::vector<Vertex> order;
  std::vector<char> seen(idx(n), 0);
  while (static_cast<int>(order.size()) < n) {
    Vertex start = kNoVertex;
    for (Vertex v = 0; v < n; ++v) {
      if (seen[idx(v)]) continue;
      if (start == kNoVertex ||
          g.in_degree(v) + g.out_degree(v) > g.in_degree(start) + g.out_degree(start)) {
        start = v;
      }
    }
    std::size_t head = order.size();
    order.push_back(start);
    seen[idx(start)] = 1;
    while (head < order.size()) {
      const Vertex u = order[head++];
      for (Vertex w : g.neighbours(u)) {
        if (!seen[idx(w)]) {
          seen[idx(w)] = 1;
          order.push_back(w);
        }
      }
    }
  }

  std::vector<Vertex> map(idx(n), kNoVertex);
  std::vector<char> used(idx(n), 0);
  auto consistent = [&](std::size_t depth, Vertex y) {
    const Vertex u = order[depth];
    if (g.out_degree(u) != h.out_degree(y) || g.in_degree(u) != h.in_degree(y)) return false;
    for (std::size_t d = 0; d < depth; ++d) {
      const Vertex w = order[d];
      const Vertex z = map[idx(w)];
      if (ga[idx(u) * idx(n) + idx(w)] != ha[idx(y) * idx(n) + idx(z)]) return false;
      if (ga[idx(w) * idx(n) + idx(u)] != ha[idx(z) * idx(n) + idx(y)]) return false;
    }
    return true;
  };
  auto recurse = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == idx(n)) return true;
    const Vertex u = order[depth];
    for (Vertex y = 0; y < n; ++y) {
      if (used[idx(y)] || !consistent(depth, y)) continue;
      map[idx(u)] = y;
      used[idx(y)] = 1;
      if (self(self, depth + 1)) return true;
      used[idx(y)] = 0;
      map[idx(u)] = kNoVertex;
    }
    return false;
  };
  if (!recurse(recurse, 0)) return std::nullopt;
  return map;
}

bool isomorphic(const UndirectedGraph& g, const UndirectedGraph& h, int guard) {
  return isomorphic(symmetric_digraph(g), symmetric_digraph(h), guard);
}

std::vector<std::uint8_t> canonical_code(const Digraph& g) {
  const int n = g.order();
  if (n > 8) throw GuardError("canonical_code supports at most 8 vertices");
  std::vector<std::vector<int>> signature(idx(n));
  for (Vertex v = 0; v < n; ++v) {
    auto& s = signature[idx(v)];
    s = {g.out_degree(v), g.in_degree(v)};
    std::vector<std::pair<int, int>> outs;
    std::vector<std::pair<int, int>> ins;
    for (Vertex w : g.out_neighbours(v)) outs.emplace_back(g.out_degree(w), g.in_degree(w));
    for (Vertex w : g.in_neighbours(v)) ins.emplace_back(g.out_degree(w), g.in_degree(w));
    std::sort(outs.begin(), outs.end());
    std::sort(ins.begin(), ins.end());
    for (auto [a, b] : outs) s.insert(s.end(), {a, b});
    s.push_back(-1);
    for (auto [a, b] : ins) s.insert(s.end(), {a, b});
  }
  std::vector<Vertex> sorted(idx(n));
  std::iota(sorted.begin(), sorted.end(), 0);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [&](Vertex a, Vertex b) { return signature[idx(a)] < signature[idx(b)]; });
  // Class boundaries: positions with equal signature form one class.
  std::vector<std::pair<std::size_t, std::size_t>> classes;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && signature[idx(sorted[j])] == signature[idx(sorted[i])]) ++j;
    classes.emplace_back(i, j);
    i = j;
  }
  auto code_for = [&](const std::vector<Vertex>& ord) {
    std::vector<std::uint8_t> code;
    code.reserve(idx(n) * idx(n - 1) / 2);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const bool f = g.has_arc(ord[idx(i)], ord[idx(j)]);
        const bool b = g.has_arc(ord[idx(j)], ord[idx(i)]);
        code.push_back(static_cast<std::uint8_t>((f ? 1 : 0) + (b ? 2 : 0)));
      }
    }
    return code;
  };
  std::vector<std::uint8_t> best;
  bool have_best = false;
  std::vector<Vertex> ord = sorted;
  auto permute = [&](auto&& self, std::size_t c) -> void {
    if (c == classes.size()) {
      auto code = code_for(ord);
      if (!have_best || code < best) {
        best = std::move(code);
        have_best = true;
      }
      return;
    }
    auto [lo, hi] = classes[c];
    std::sort(ord.begin() + static_cast<std::ptrdiff_t>(lo), ord.begin() + static_cast<std::ptrdiff_t>(hi));
    do {
      self(self, c + 1);
    } while (std::next_permutation(ord.begin() + static_cast<std::ptrdiff_t>(lo),
                                   ord.begin() + static_cast<std::ptrdiff_t>(hi)));
  };
  permute(permute, 0);
  return best;
}

Digraph from_canonical_code(int order, const std::vector<std::uint8_t>& code) {
  std::vector<Arc> arcs;
  std::size_t k = 0;
  for (Vertex i = 0; i < order; ++i) {
    for (Vertex j = i + 1; j < order; ++j, ++k) {
      if (k >= code.size()) throw ValidationError("canonical code too short for the order");
      if (code[k] & 1U) arcs.push_back({i, j});
      if (code[k] & 2U) arcs.push_back({j, i});
    }
  }
  return Digraph(order, std::move(arcs));
}

namespace {

// Isomorphism-class store bucketed by invariant_key.
class ClassStore {
 public:
  explicit ClassStore(int iso_guard) : iso_guard_(iso_guard) {}

  bool insert(const Digraph& g) {
    auto& bucket = buckets_[invariant_key(g)];
    for (std::size_t i : bucket) {
      if (isomorphic(items_[i], g, iso_guard_)) return false;
    }
    bucket.push_back(items_.size());
    items_.push_back(g);
    return true;
  }

  const std::vector<Digraph>& items() const { return items_; }

 private:
  int iso_guard_;
  std::map<std::vector<int>, std::vector<std::size_t>> buckets_;
  std::vector<Digraph> items_;
};

}  // namespace

std::vector<OrientedGraph> quotient_images(const Digraph& g, int guard) {
  const int n = g.order();
  if (n > guard) {
    throw GuardError("image enumeration guard exceeded: order " + std::to_string(n) + " > " + std::to_string(guard));
  }
  if (!g.is_oriented()) throw ValidationError("quotient_images: source has a symmetric arc and maps to no oriented graph");
  ClassStore store(n);
  std::vector<int> block(idx(n), -1);
  // cnt[b][c]: arcs of g running from block b to block c.
  std::vector<std::vector<int>> cnt(idx(n), std::vector<int>(idx(n), 0));
  int blocks = 0;
  auto dfs = [&](auto&& self, Vertex v) -> void {
    if (v == n) {
      std::vector<Arc> arcs;
      for (int b = 0; b < blocks; ++b) {
        for (int c = 0; c < blocks; ++c) {
          if (cnt[idx(b)][idx(c)] > 0) arcs.push_back({b, c});
        }
      }
      store.insert(Digraph(blocks, std::move(arcs)));
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      bool ok = true;
      for (Vertex w : g.neighbours(v)) {
        if (w < v && block[idx(w)] == b) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      std::vector<std::pair<int, int>> added;
      for (Vertex w : g.out_neighbours(v)) {
        if (w < v) added.emplace_back(b, block[idx(w)]);
      }
      for (Vertex w : g.in_neighbours(v)) {
        if (w < v) added.emplace_back(block[idx(w)], b);
      }
      for (auto [x, y] : added) ++cnt[idx(x)][idx(y)];
      for (auto [x, y] : added) {
        if (cnt[idx(y)][idx(x)] > 0) ok = false;
      }
      if (ok) {
        block[idx(v)] = b;
        const bool fresh = b == blocks;
        if (fresh) ++blocks;
        self(self, v + 1);
        if (fresh) --blocks;
        block[idx(v)] = -1;
      }
      for (auto [x, y] : added) --cnt[idx(x)][idx(y)];
    }
  };
  dfs(dfs, 0);
  std::vector<OrientedGraph> result;
  for (const Digraph& d : store.items()) result.emplace_back(d);
  return result;
}

ImageSet surjective_images(const Digraph& g, int guard) {
  const auto quotients = quotient_images(g, guard);
  ClassStore store(g.order());

  auto critical = [&](const Digraph& h) {
    for (Vertex v = 0; v < h.order(); ++v) {
      std::vector<Vertex> rest;
      for (Vertex w = 0; w < h.order(); ++w) {
        if (w != v) rest.push_back(w);
      }
      if (exists_hom(g, induced_subgraph(h, rest), kNoGuard)) return false;
    }
    return true;
  };

  for (const OrientedGraph& base : quotients) {
    const int k = base.order();
    std::vector<Edge> open;
    for (Vertex i = 0; i < k; ++i) {
      for (Vertex j = i + 1; j < k; ++j) {
        if (!base.adjacent(i, j)) open.push_back({i, j});
      }
    }
    std::vector<Arc> arcs = base.arcs();
    // Adding arcs only enlarges every H - v, so a non-critical H prunes the
    // whole subtree below it.
    auto extend = [&](auto&& self, std::size_t pos, bool check) -> void {
      if (check) {
        Digraph h(k, arcs);
        if (!critical(h)) return;
      }
      if (pos == open.size()) {
        store.insert(Digraph(k, arcs));
        return;
      }
      self(self, pos + 1, false);
      const Edge e = open[pos];
      for (const Arc a : {Arc{e.u, e.v}, Arc{e.v, e.u}}) {
        arcs.push_back(a);
        self(self, pos + 1, true);
        arcs.pop_back();
      }
    };
    extend(extend, 0, true);
  }

  ImageSet out;
  out.source_order = g.order();
  for (const Digraph& d : store.items()) out.members.emplace_back(d);
  std::stable_sort(out.members.begin(), out.members.end(), [](const OrientedGraph& a, const OrientedGraph& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.arc_count() < b.arc_count();
  });
  return out;
}

namespace {

// Representatives by canonical code for every order up to `order`. Each
// order-k class extends some order-(k-1) class by one vertex.
const std::set<std::vector<std::uint8_t>>& classes_of_order(int order, bool undirected) {
  static std::mutex mutex;
  static std::vector<std::set<std::vector<std::uint8_t>>> tables[2];
  std::lock_guard lock(mutex);
  auto& table = tables[undirected ? 1 : 0];
  if (table.empty()) {
    table.resize(2);
    table[1].insert(canonical_code(Digraph(1)));
  }
  const int states = undirected ? 2 : 3;
  while (static_cast<int>(table.size()) <= order) {
    const int k = static_cast<int>(table.size());
    std::set<std::vector<std::uint8_t>> next;
    for (const auto& code : table[idx(k - 1)]) {
      const Digraph base = from_canonical_code(k - 1, code);
      std::vector<int> choice(idx(k - 1), 0);
      while (true) {
        std::vector<Arc> arcs = base.arcs();
        for (Vertex i = 0; i < k - 1; ++i) {
          const int c = choice[idx(i)];
          if (undirected) {
            if (c == 1) {
              arcs.push_back({i, k - 1});
              arcs.push_back({k - 1, i});
            }
          } else if (c == 1) {
            arcs.push_back({i, k - 1});
          } else if (c == 2) {
            arcs.push_back({k - 1, i});
          }
        }
        next.insert(canonical_code(Digraph(k, std::move(arcs))));
        int pos = 0;
        while (pos < k - 1 && ++choice[idx(pos)] == states) choice[idx(pos++)] = 0;
        if (pos == k - 1) break;
      }
    }
    table.push_back(std::move(next));
  }
  return table[idx(order)];
}

void check_enumeration_order(int order) {
  if (order < 1 || order > kMaxEnumerationOrder) {
    throw ValidationError("graph enumeration supports orders 1.." + std::to_string(kMaxEnumerationOrder) + ", got " +
                          std::to_string(order));
  }
}

}  // namespace

std::vector<OrientedGraph> enumerate_oriented_graphs(int order, bool connected_only) {
  check_enumeration_order(order);
  std::vector<OrientedGraph> result;
  for (const auto& code : classes_of_order(order, false)) {
    OrientedGraph g(from_canonical_code(order, code));
    if (!connected_only || is_connected(g)) result.push_back(std::move(g));
  }
  return result;
}

std::vector<OrientedGraph> enumerate_oriented_graphs_up_to(int max_order, bool connected_only) {
  std::vector<OrientedGraph> result;
  for (int k = 1; k <= max_order; ++k) {
    auto part = enumerate_oriented_graphs(k, connected_only);
    result.insert(result.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return result;
}

std::vector<UndirectedGraph> enumerate_undirected_graphs(int order, bool connected_only) {
  check_enumeration_order(order);
  std::vector<UndirectedGraph> result;
  for (const auto& code : classes_of_order(order, true)) {
    const UndirectedGraph g = underlying(from_canonical_code(order, code));
    if (!connected_only || is_connected(g)) result.push_back(g);
  }
  return result;
}

}  // namespace homdual
