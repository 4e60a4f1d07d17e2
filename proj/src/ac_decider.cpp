#include "homdual/ac_decider.hpp"

#include <algorithm>
#include <json.hpp>

#include "homdual/error.hpp"
#include "homdual/families.hpp"

namespace homdual {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

// Class index i of a cyclic position, and whether it is an A class.
struct ClassRef {
  bool is_a = true;
  int i = 0;
};

ClassRef class_at(int position, int n, int m) {
  if (position <= m) return {true, position};
  return {false, n - position};
}

// Position of the class a vertex's p-chain steps into.
int previous_position(int position, int n, int m) {
  const ClassRef c = class_at(position, n, m);
  if (c.i == 1) return 0;
  return c.is_a ? c.i - 1 : n - (c.i - 1);
}

void require_odd_n(int n) {
  if (n < 5 || n % 2 == 0) {
    throw ValidationError("the cyclic cover needs an odd n >= 5, got " + std::to_string(n));
  }
}

// Semi-walk through `vertices`, directions read off the oriented graph g.
SemiWalk walk_through(const Digraph& g, std::vector<Vertex> vertices) {
  SemiWalk w;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    w.steps.push_back(g.has_arc(vertices[i], vertices[i + 1]) ? Step::Forward : Step::Backward);
  }
  w.vertices = std::move(vertices);
  return w;
}

// Walk with the pattern of Q_l whose k-th vertex is chosen by its level:
// level 0 -> x, 1 -> y, 2 -> z.
SemiWalk leveled_walk(int l, Vertex x, Vertex y, Vertex z) {
  const Pattern p = q_pattern(l);
  const Vertex by_level[3] = {x, y, z};
  SemiWalk w;
  int level = 0;
  w.vertices.push_back(x);
  for (Step s : p.steps) {
    level += s == Step::Forward ? 1 : -1;
    if (level < 0 || level > 2) throw ContractError("Q path of odd order left levels 0..2");
    w.vertices.push_back(by_level[level]);
    w.steps.push_back(s);
  }
  return w;
}

Certificate no_certificate(int n, SemiWalk walk, int l) {
  Certificate c;
  c.verdict = Verdict::No;
  c.n = n;
  c.walk = std::move(walk);
  c.l = l;
  return c;
}

Certificate yes_certificate(int n, std::vector<Vertex> mapping) {
  Certificate c;
  c.verdict = Verdict::Yes;
  c.n = n;
  c.mapping = std::move(mapping);
  return c;
}

}  // namespace

std::vector<std::vector<Vertex>> CyclicCover::ordered() const {
  if (bipartition) return {a_classes.at(0), a_classes.at(1)};
  std::vector<std::vector<Vertex>> out(a_classes.begin(), a_classes.end());
  for (int i = m; i >= 1; --i) out.push_back(d_classes[idx(i)]);
  return out;
}

CoverResult build_cyclic_cover(const Digraph& g, int n) {
  require_odd_n(n);
  if (!g.is_oriented()) throw ValidationError("the cyclic cover needs an oriented graph");
  if (g.order() == 0 || !is_connected(g)) throw ValidationError("the cyclic cover needs a connected graph");
  const int order = g.order();
  CoverResult result;
  CyclicCover& c = result.cover;
  SelectorFunctions& s = result.selectors;
  c.n = n;
  c.m = (n - 1) / 2;
  const int m = c.m;
  c.position.assign(idx(order), -1);
  s.left.assign(idx(order), kNoVertex);
  s.right.assign(idx(order), kNoVertex);
  s.parent.assign(idx(order), kNoVertex);

  std::vector<Vertex> a0;
  for (Vertex v = 0; v < order; ++v) {
    ++c.work;
    if (g.in_degree(v) > 0 && g.out_degree(v) > 0) a0.push_back(v);
  }

  // Step 1. Isolated vertices count as sources.
  if (a0.empty()) {
    c.bipartition = true;
    c.a_classes.assign(2, {});
    c.d_classes.assign(2, {});
    for (Vertex v = 0; v < order; ++v) {
      ++c.work;
      const int p = g.in_degree(v) == 0 ? 0 : 1;
      c.position[idx(v)] = p;
      c.a_classes[idx(p)].push_back(v);
    }
    return result;
  }

  c.a_classes.assign(idx(m) + 1, {});
  c.d_classes.assign(idx(m) + 1, {});
  for (Vertex v : a0) c.position[idx(v)] = 0;
  c.a_classes[0] = std::move(a0);

  auto place = [&](Vertex w, int pos, std::vector<Vertex>& into, int rival) {
    ++c.work;
    const int cur = c.position[idx(w)];
    if (cur == -1) {
      c.position[idx(w)] = pos;
      into.push_back(w);
    } else if (cur == rival) {
      throw ContractError("vertex " + std::to_string(w) + " reached both A and D classes at one step");
    }
  };

  // Step 3.
  for (Vertex x : c.a_classes[0]) {
    for (Vertex w : g.out_neighbours(x)) place(w, 1, c.a_classes[1], n - 1);
    for (Vertex w : g.in_neighbours(x)) place(w, n - 1, c.d_classes[1], 1);
  }
  // Step 4.
  for (int i = 2; i <= m - 1; ++i) {
    for (Vertex x : c.a_classes[idx(i) - 1]) {
      for (Vertex w : g.out_neighbours(x)) place(w, i, c.a_classes[idx(i)], n - i);
      for (Vertex w : g.in_neighbours(x)) place(w, i, c.a_classes[idx(i)], n - i);
    }
    for (Vertex x : c.d_classes[idx(i) - 1]) {
      for (Vertex w : g.out_neighbours(x)) place(w, n - i, c.d_classes[idx(i)], i);
      for (Vertex w : g.in_neighbours(x)) place(w, n - i, c.d_classes[idx(i)], i);
    }
  }
  // Steps 5 and 6. With A_{m-1} and D_{m-1} both empty nothing is left over.
  bool step5 = true;
  for (Vertex x : c.a_classes[idx(m) - 1]) {
    ++c.work;
    if (g.out_degree(x) != 0) step5 = false;
  }
  for (Vertex x : c.d_classes[idx(m) - 1]) {
    ++c.work;
    if (g.in_degree(x) != 0) step5 = false;
  }
  for (Vertex v = 0; v < order; ++v) {
    ++c.work;
    if (c.position[idx(v)] != -1) continue;
    const bool to_d = step5 ? g.out_degree(v) == 0 : g.in_degree(v) == 0;
    const bool to_a = step5 ? g.in_degree(v) == 0 : g.out_degree(v) == 0;
    if (to_d) {
      c.position[idx(v)] = n - m;
      c.d_classes[idx(m)].push_back(v);
    } else if (to_a) {
      c.position[idx(v)] = m;
      c.a_classes[idx(m)].push_back(v);
    } else {
      throw ContractError("vertex " + std::to_string(v) + " has in- and out-neighbours outside A_0");
    }
  }
  for (auto& cls : c.a_classes) std::sort(cls.begin(), cls.end());
  for (auto& cls : c.d_classes) std::sort(cls.begin(), cls.end());

  // Selectors. Neighbour lists are sorted, so the first match is the smallest.
  for (Vertex v = 0; v < order; ++v) {
    const int pos = c.position[idx(v)];
    if (pos == 0) {
      c.work += 2;
      s.left[idx(v)] = g.in_neighbours(v).front();
      s.right[idx(v)] = g.out_neighbours(v).front();
      continue;
    }
    const int prev = previous_position(pos, n, m);
    for (Vertex w : g.neighbours(v)) {
      ++c.work;
      if (c.position[idx(w)] == prev) {
        s.parent[idx(v)] = w;
        break;
      }
    }
  }
  return result;
}

std::optional<std::string> cover_violation(const Digraph& g, const CyclicCover& cover) {
  const int order = g.order();
  const int n = cover.n;
  const int m = cover.m;
  if (cover.position.size() != idx(order)) return "position table has the wrong size";

  // Disjoint cover, consistent with the position table.
  std::vector<int> seen(idx(order), 0);
  const auto classes = cover.ordered();
  for (std::size_t k = 0; k < classes.size(); ++k) {
    // D_i sits at index n - i of the cyclic order, so index and position agree.
    const int pos = static_cast<int>(k);
    for (Vertex v : classes[k]) {
      if (v < 0 || v >= order) return "class member " + std::to_string(v) + " out of range";
      if (++seen[idx(v)] > 1) return "vertex " + std::to_string(v) + " lies in two classes";
      if (cover.position[idx(v)] != pos) return "vertex " + std::to_string(v) + " has an inconsistent position";
    }
  }
  for (Vertex v = 0; v < order; ++v) {
    if (seen[idx(v)] == 0) return "vertex " + std::to_string(v) + " is in no class";
  }

  // Degree conditions.
  if (cover.bipartition) {
    for (Vertex v = 0; v < order; ++v) {
      if (g.in_degree(v) > 0 && g.out_degree(v) > 0) {
        return "bipartition although vertex " + std::to_string(v) + " has in- and out-neighbours";
      }
    }
    for (Vertex v : cover.a_classes[0]) {
      if (g.in_degree(v) != 0) return "bipartition source " + std::to_string(v) + " has an in-neighbour";
    }
    for (Vertex v : cover.a_classes[1]) {
      if (g.out_degree(v) != 0) return "bipartition sink " + std::to_string(v) + " has an out-neighbour";
    }
  } else {
    for (Vertex v = 0; v < order; ++v) {
      const bool both = g.in_degree(v) > 0 && g.out_degree(v) > 0;
      if (both != (cover.position[idx(v)] == 0)) {
        return "A_0 membership of vertex " + std::to_string(v) + " disagrees with its degrees";
      }
    }
    for (int i = 1; i <= m; ++i) {
      const bool odd = i % 2 == 1;
      for (Vertex v : cover.a_classes[idx(i)]) {
        if ((odd ? g.out_degree(v) : g.in_degree(v)) != 0) {
          return "vertex " + std::to_string(v) + " of A_" + std::to_string(i) + " breaks the class parity";
        }
      }
      for (Vertex v : cover.d_classes[idx(i)]) {
        if ((odd ? g.in_degree(v) : g.out_degree(v)) != 0) {
          return "vertex " + std::to_string(v) + " of D_" + std::to_string(i) + " breaks the class parity";
        }
      }
    }
  }

  // Independence and arc placement. Only A_0 may contain arcs, so every
  // class is independent iff A_0 is.
  for (const Arc& a : g.arcs()) {
    const int pu = cover.position[idx(a.from)];
    const int pv = cover.position[idx(a.to)];
    if (pu == pv) {
      if (pu != 0 || cover.bipartition) {
        return "arc " + std::to_string(a.from) + "->" + std::to_string(a.to) + " lies inside a class other than A_0";
      }
      continue;
    }
    if (cover.bipartition) continue;
    const int diff = ((pu - pv) % n + n) % n;
    if (diff == 1 || diff == n - 1) continue;
    const int lo = std::min(pu, pv);
    const int hi = std::max(pu, pv);
    if (lo + hi == n && lo >= 1 && lo <= m - 1) continue;
    return "arc " + std::to_string(a.from) + "->" + std::to_string(a.to) + " joins non-consecutive classes at positions " +
           std::to_string(pu) + " and " + std::to_string(pv);
  }
  return std::nullopt;
}

std::optional<Homomorphism> cover_induced_hom(const CyclicCover& cover, const Digraph& g) {
  if (cover.position.size() != idx(g.order())) throw ValidationError("cover does not belong to this graph");
  const int n = cover.n;
  const int m = cover.m;
  if (!cover.bipartition) {
    for (const Arc& a : g.arcs()) {
      const int pu = cover.position[idx(a.from)];
      const int pv = cover.position[idx(a.to)];
      if (pu == 0 && pv == 0) return std::nullopt;
      const int lo = std::min(pu, pv);
      if (pu + pv == n && lo >= 1 && lo <= m - 1) return std::nullopt;
    }
  }
  Homomorphism h{g.order(), n, cover.position};
  if (auto why = homomorphism_violation(g, make_ac_cycle(n), h.map)) {
    throw ContractError("cover-induced map is not a homomorphism: " + *why);
  }
  return h;
}

NoCertificate extract_no_certificate(const Digraph& g, const CoverResult& result) {
  const CyclicCover& c = result.cover;
  const SelectorFunctions& s = result.selectors;
  if (c.bipartition) throw ContractError("a directed bipartition always induces a homomorphism");
  const int n = c.n;
  const int m = c.m;
  NoCertificate out;
  std::optional<Arc> inside_a0;
  std::optional<Arc> across;
  for (const Arc& a : g.arcs()) {
    const int pu = c.position[idx(a.from)];
    const int pv = c.position[idx(a.to)];
    if (pu == 0 && pv == 0) {
      inside_a0 = a;
      break;
    }
    const int lo = std::min(pu, pv);
    if (!across && pu + pv == n && lo >= 1 && lo <= m - 1) across = a;
  }
  if (inside_a0) {
    const Arc a = *inside_a0;
    out.walk = walk_through(g, {s.left[idx(a.from)], a.from, a.to, s.right[idx(a.to)]});
    out.l = 4;
  } else if (across) {
    const Vertex x = across->from;
    const Vertex y = across->to;
    const bool x_is_a = c.position[idx(x)] <= m;
    const Vertex a = x_is_a ? x : y;
    const Vertex d = x_is_a ? y : x;
    const int k = std::min(c.position[idx(x)], c.position[idx(y)]);
    // Chains a_0 .. a_k and d_0 .. d_k through p, then l(a_0) and r(d_0).
    std::vector<Vertex> chain_a{a};
    std::vector<Vertex> chain_d{d};
    for (int i = 0; i < k; ++i) {
      chain_a.push_back(s.parent[idx(chain_a.back())]);
      chain_d.push_back(s.parent[idx(chain_d.back())]);
    }
    std::vector<Vertex> vertices{s.left[idx(chain_a.back())]};
    vertices.insert(vertices.end(), chain_a.rbegin(), chain_a.rend());
    vertices.insert(vertices.end(), chain_d.begin(), chain_d.end());
    vertices.push_back(s.right[idx(chain_d.back())]);
    out.walk = walk_through(g, std::move(vertices));
    out.l = 2 * k + 4;
  } else {
    throw ContractError("extract_no_certificate: the cover induces a homomorphism");
  }
  if (auto why = walk_violation(g, out.walk)) throw ContractError("no-certificate walk is invalid: " + *why);
  if (pattern_of(out.walk) != q_pattern(out.l)) {
    throw ContractError("no-certificate walk does not follow the pattern of Q_" + std::to_string(out.l));
  }
  return out;
}

Certificate decide_ac(const Digraph& g, int n) {
  if (n < 3) throw ValidationError("decide_ac needs n >= 3, got " + std::to_string(n));
  const int order = g.order();
  if (order == 0) return yes_certificate(n, {});

  if (auto pair = g.symmetric_pair()) {
    const int l = n % 2 == 1 ? 4 : n + 1;
    SemiWalk w;
    for (int i = 0; i < l; ++i) w.vertices.push_back(i % 2 == 0 ? pair->from : pair->to);
    w.steps = q_pattern(l).steps;
    return no_certificate(n, std::move(w), l);
  }

  if (n % 2 == 0) {
    for (Vertex v = 0; v < order; ++v) {
      if (g.in_degree(v) > 0 && g.out_degree(v) > 0) {
        return no_certificate(n, leveled_walk(n + 1, g.in_neighbours(v).front(), v, g.out_neighbours(v).front()), n + 1);
      }
    }
    std::vector<Vertex> mapping(idx(order));
    for (Vertex v = 0; v < order; ++v) mapping[idx(v)] = g.in_degree(v) > 0 ? 1 : 0;
    return yes_certificate(n, std::move(mapping));
  }

  if (n == 3) {
    if (auto w = find_pattern_walk(g, Pattern::parse("FFF"))) return no_certificate(n, std::move(*w), 4);
    // No directed walk of three arcs: acyclic, longest path ranks 0..2.
    std::vector<int> rank(idx(order), 0);
    std::vector<int> pending(idx(order));
    std::vector<Vertex> queue;
    for (Vertex v = 0; v < order; ++v) {
      pending[idx(v)] = g.in_degree(v);
      if (pending[idx(v)] == 0) queue.push_back(v);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (Vertex w : g.out_neighbours(u)) {
        rank[idx(w)] = std::max(rank[idx(w)], rank[idx(u)] + 1);
        if (--pending[idx(w)] == 0) queue.push_back(w);
      }
    }
    // AC_3 is a_2 -> a_0 -> a_1 plus a_2 -> a_1.
    constexpr Vertex kByRank[3] = {2, 0, 1};
    std::vector<Vertex> mapping(idx(order));
    for (Vertex v = 0; v < order; ++v) mapping[idx(v)] = kByRank[rank[idx(v)]];
    return yes_certificate(n, std::move(mapping));
  }

  std::vector<Vertex> mapping(idx(order), kNoVertex);
  for (const auto& comp : connected_components(g)) {
    const Digraph sub = induced_subgraph(g, comp);
    const CoverResult cover = build_cyclic_cover(sub, n);
    if (auto h = cover_induced_hom(cover.cover, sub)) {
      for (std::size_t i = 0; i < comp.size(); ++i) mapping[idx(comp[i])] = h->map[i];
      continue;
    }
    NoCertificate no = extract_no_certificate(sub, cover);
    for (Vertex& v : no.walk.vertices) v = comp[idx(v)];
    return no_certificate(n, std::move(no.walk), no.l);
  }
  return yes_certificate(n, std::move(mapping));
}

bool certificate_length_allowed(int n, int l) {
  if (n % 2 == 0) return l == n + 1;
  return l % 2 == 0 && l >= 4 && l <= n + 1;
}

VerifyResult verify_certificate(const Digraph& g, int n, const Certificate& cert) {
  auto fail = [](std::string why) { return VerifyResult{false, std::move(why)}; };
  if (n < 3) return fail("n must be at least 3");
  if (cert.n != n) return fail("certificate is for n = " + std::to_string(cert.n) + ", expected " + std::to_string(n));
  if (cert.verdict == Verdict::Yes) {
    if (auto why = homomorphism_violation(g, make_ac_cycle(n), cert.mapping)) return fail(*why);
    return {true, {}};
  }
  const int l = cert.l;
  if (!certificate_length_allowed(n, l)) {
    return fail("l = " + std::to_string(l) +
                (n % 2 == 0 ? " but even n requires l = n + 1" : " is not an even number in [4, n + 1]"));
  }
  if (cert.walk.vertices.size() != idx(l)) {
    return fail("walk has " + std::to_string(cert.walk.vertices.size()) + " vertices, expected l = " + std::to_string(l));
  }
  if (cert.walk.steps.size() + 1 != cert.walk.vertices.size()) return fail("walk has the wrong number of directions");
  if (Pattern{cert.walk.steps} != q_pattern(l)) {
    return fail("directions " + Pattern{cert.walk.steps}.to_string() + " differ from the pattern " +
                q_pattern(l).to_string() + " of Q_" + std::to_string(l));
  }
  if (auto why = walk_violation(g, cert.walk)) return fail(*why);
  return {true, {}};
}

std::string certificate_to_json(const Certificate& cert) {
  nlohmann::ordered_json j;
  j["verdict"] = cert.verdict == Verdict::Yes ? "yes" : "no";
  j["n"] = cert.n;
  if (cert.verdict == Verdict::Yes) {
    j["mapping"] = cert.mapping;
  } else {
    j["walk"] = cert.walk.vertices;
    j["directions"] = Pattern{cert.walk.steps}.to_string();
    j["l"] = cert.l;
  }
  return j.dump();
}

Certificate certificate_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("certificate is not valid JSON: ") + e.what());
  }
  auto need = [&](const char* key) -> const nlohmann::json& {
    if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("certificate lacks field '") + key + "'");
    return j.at(key);
  };
  auto int_array = [&](const char* key) {
    const auto& a = need(key);
    if (!a.is_array()) throw ValidationError(std::string("certificate field '") + key + "' must be an array");
    std::vector<Vertex> out;
    for (const auto& x : a) {
      if (!x.is_number_integer()) throw ValidationError(std::string("certificate field '") + key + "' holds a non-integer");
      out.push_back(x.get<Vertex>());
    }
    return out;
  };
  auto integer = [&](const char* key) {
    const auto& x = need(key);
    if (!x.is_number_integer()) throw ValidationError(std::string("certificate field '") + key + "' must be an integer");
    return x.get<int>();
  };
  Certificate c;
  const auto& verdict = need("verdict");
  if (verdict == "yes") {
    c.verdict = Verdict::Yes;
    c.mapping = int_array("mapping");
  } else if (verdict == "no") {
    c.verdict = Verdict::No;
    c.walk.vertices = int_array("walk");
    const auto& dirs = need("directions");
    if (!dirs.is_string()) throw ValidationError("certificate field 'directions' must be a string");
    c.walk.steps = Pattern::parse(dirs.get<std::string>()).steps;
    if (c.walk.steps.size() + 1 != c.walk.vertices.size()) {
      throw ValidationError("certificate needs one direction per walk step");
    }
    c.l = integer("l");
  } else {
    throw ValidationError("certificate verdict must be \"yes\" or \"no\"");
  }
  c.n = integer("n");
  return c;
}

}  // namespace homdual
