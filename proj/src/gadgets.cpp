#include "spp/gadgets.hpp"

#include <algorithm>
#include <stdexcept>

#include "spp/errors.hpp"
#include "spp/rng.hpp"

namespace spp {

namespace {

std::vector<std::string> h_vertex_labels(const Digraph& h) {
  if (h.names()) return *h.names();
  std::vector<std::string> labels;
  labels.reserve(h.n());
  for (int v = 0; v < h.n(); ++v) labels.push_back("h" + std::to_string(v));
  return labels;
}

}  // namespace

LinkageInstance make_linkage_instance(Digraph h, int s1, int t1, int s2, int t2) {
  const int n = h.n();
  for (int v : {s1, t1, s2, t2}) {
    if (v < 0 || v >= n) throw input_error("linkage terminal out of range");
  }
  const int terminals[4] = {s1, t1, s2, t2};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (terminals[i] == terminals[j]) throw input_error("linkage terminals must be distinct");
    }
  }
  return LinkageInstance{std::move(h), s1, t1, s2, t2};
}

GadgetOutput build_internal_gadget(const LinkageInstance& inst, int k, int ell) {
  if (k < 3) throw input_error("gadget needs k >= 3");
  if (ell < 2) throw input_error("gadget needs ell >= 2");
  if (!inst.h.is_eulerian()) throw input_error("gadget input must be Eulerian");
  make_linkage_instance(inst.h, inst.s1, inst.t1, inst.s2, inst.t2);

  const int h = inst.h.n();
  // Layout: H keeps 0..h-1; x_i at h+i-1; r1, r2 next; then the subdivision
  // vertices grouped by ring position.
  const auto x = [&](int i) { return h + i - 1; };
  const int r1 = h + k;
  const int r2 = h + k + 1;

  std::vector<std::string> names = h_vertex_labels(inst.h);
  for (int i = 1; i <= k; ++i) names.push_back("x" + std::to_string(i));
  names.push_back("r1");
  names.push_back("r2");

  std::vector<std::pair<int, int>> arcs;
  for (const Arc& a : inst.h.arcs()) arcs.emplace_back(a.tail, a.head);
  arcs.emplace_back(x(1), inst.s1);
  arcs.emplace_back(inst.t1, x(2));
  arcs.emplace_back(x(k - 1), inst.s2);
  arcs.emplace_back(inst.t2, x(k));
  arcs.emplace_back(inst.s1, r1);
  arcs.emplace_back(r1, inst.t2);
  arcs.emplace_back(inst.s2, r2);
  arcs.emplace_back(r2, inst.t1);

  // Ring connections x_i -> x_{i+1}, each realized as parallel length-2
  // detours through fresh vertices; the positions bridged by H get one copy
  // fewer, the bridge standing in for the missing copy.
  int next = h + k + 2;
  for (int i = 1; i <= k; ++i) {
    const int succ = i % k + 1;
    const int copies = (i == 1 || i == k - 1) ? ell - 1 : ell;
    for (int j = 1; j <= copies; ++j) {
      const int z = next++;
      names.push_back("z" + std::to_string(j) + "_" + std::to_string(i) + "_" +
                      std::to_string(succ));
      arcs.emplace_back(x(i), z);
      arcs.emplace_back(z, x(succ));
    }
  }

  GadgetOutput out;
  out.d = Digraph::from_arc_list(next, arcs, names);
  std::vector<int> terminals;
  for (int i = 1; i <= k; ++i) terminals.push_back(x(i));
  out.spec = make_terminal_spec(out.d, terminals, x(1));
  out.name_map = std::move(names);
  return out;
}

std::pair<GadgetOutput, SplitMap> build_arc_gadget(const LinkageInstance& inst, int k, int ell) {
  GadgetOutput base = build_internal_gadget(inst, k, ell);
  const int h = inst.h.n();
  const int n = base.d.n();

  // Split each H-vertex u into u_minus (keeps index u) and u_plus (n + u):
  // arcs into u land on u_minus, arcs out of u leave u_plus.
  const auto plus = [&](int v) { return v < h ? n + v : v; };
  std::vector<std::pair<int, int>> arcs;
  for (const Arc& a : base.d.arcs()) arcs.emplace_back(plus(a.tail), a.head);
  for (int u = 0; u < h; ++u) arcs.emplace_back(u, n + u);

  std::vector<std::string> names = base.name_map;
  for (int u = 0; u < h; ++u) {
    names.push_back(names[u] + "+");
    names[u] += "-";
  }

  GadgetOutput out;
  out.d = Digraph::from_arc_list(n + h, arcs, names);
  out.spec = make_terminal_spec(out.d, base.spec.S, base.spec.r);
  out.name_map = std::move(names);

  SplitMap split;
  for (int u = 0; u < h; ++u) split.pairs.emplace_back(u, n + u);
  return {std::move(out), std::move(split)};
}

std::optional<std::pair<DirectedPath, DirectedPath>> solve_2linkage_exact(
    const LinkageInstance& inst, int enum_cap) {
  const Digraph& h = inst.h;
  if (h.n() > enum_cap) {
    throw resource_error("linkage instance exceeds enumeration cap " +
                         std::to_string(enum_cap));
  }
  make_linkage_instance(h, inst.s1, inst.t1, inst.s2, inst.t2);

  std::vector<char> used(h.n(), 0);
  DirectedPath first, second;

  // Lexicographic DFS for one simple path from v to t avoiding used vertices.
  auto find_path = [&](auto&& self, DirectedPath& path, int v, int t) -> bool {
    if (v == t) return true;
    for (int w : h.out(v)) {
      if (used[w]) continue;
      used[w] = 1;
      path.push_back(w);
      if (self(self, path, w, t)) return true;
      path.pop_back();
      used[w] = 0;
    }
    return false;
  };

  // Enumerate s1->t1 paths in lex order; for each, search for any disjoint
  // s2->t2 path.
  auto search = [&](auto&& self, int v) -> bool {
    if (v == inst.t1) {
      if (used[inst.s2] || used[inst.t2]) return false;
      used[inst.s2] = 1;
      second.assign(1, inst.s2);
      if (find_path(find_path, second, inst.s2, inst.t2)) return true;
      used[inst.s2] = 0;
      return false;
    }
    for (int w : h.out(v)) {
      if (used[w]) continue;
      used[w] = 1;
      first.push_back(w);
      if (self(self, w)) return true;
      first.pop_back();
      used[w] = 0;
    }
    return false;
  };

  used[inst.s1] = 1;
  first.assign(1, inst.s1);
  if (search(search, inst.s1)) return std::make_pair(first, second);
  return std::nullopt;
}

Digraph random_eulerian_digraph(int n, int cycles, std::uint64_t seed) {
  if (n < 3) throw input_error("random Eulerian digraph needs n >= 3");
  if (cycles < 1) throw input_error("random Eulerian digraph needs at least one cycle");
  Rng rng(seed);
  std::vector<char> arc_set(static_cast<std::size_t>(n) * n, 0);
  std::vector<char> touched(n, 0);
  std::vector<std::pair<int, int>> arcs;
  bool any = false;

  for (int c = 0; c < cycles; ++c) {
    constexpr int kMaxTries = 500;
    for (int attempt = 0; attempt < kMaxTries; ++attempt) {
      const int len = 2 + rng.next_below(n - 1);
      std::vector<int> cycle = rng.sample(n, len);
      if (any) {
        // Keep the non-isolated part weakly connected: the cycle must touch
        // an already-used vertex.
        const bool meets = std::any_of(cycle.begin(), cycle.end(),
                                       [&](int v) { return touched[v]; });
        if (!meets) continue;
      }
      bool fresh = true;
      for (std::size_t i = 0; i < cycle.size() && fresh; ++i) {
        const int u = cycle[i];
        const int v = cycle[(i + 1) % cycle.size()];
        if (arc_set[static_cast<std::size_t>(u) * n + v]) fresh = false;
      }
      if (!fresh) continue;
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        const int u = cycle[i];
        const int v = cycle[(i + 1) % cycle.size()];
        arc_set[static_cast<std::size_t>(u) * n + v] = 1;
        arcs.emplace_back(u, v);
        touched[u] = 1;
      }
      any = true;
      break;
    }
  }

  Digraph d = Digraph::from_arc_list(n, arcs);
  if (!d.is_eulerian()) throw std::logic_error("cycle composition produced a non-Eulerian digraph");
  return d;
}

}  // namespace spp
