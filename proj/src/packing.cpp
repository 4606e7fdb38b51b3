#include "spp/packing.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <iterator>
#include <limits>
#include <mutex>
#include <numeric>

#include "parallel.hpp"
#include "spp/errors.hpp"

namespace spp {

namespace {

constexpr std::size_t kMaxEnumeratedPaths = 200'000;
constexpr std::size_t kMaxCliqueVertices = 30'000;

std::uint64_t vertex_mask(const std::vector<int>& vs) {
  std::uint64_t m = 0;
  for (int v : vs) m |= std::uint64_t{1} << v;
  return m;
}

// Per-path bitmasks: one word of visited vertices, and an arc bitmap over
// tail*n+head indexed into `words` 64-bit words per path.
struct PathMasks {
  int words = 0;
  std::vector<std::uint64_t> vertex;  // one per path
  std::vector<std::uint64_t> arc;     // words per path, contiguous

  const std::uint64_t* arc_row(std::size_t i) const { return arc.data() + i * words; }
};

PathMasks build_masks(const Digraph& d, const std::vector<DirectedPath>& paths) {
  PathMasks m;
  const int n = d.n();
  m.words = (n * n + 63) / 64;
  m.vertex.reserve(paths.size());
  m.arc.assign(paths.size() * m.words, 0);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    m.vertex.push_back(vertex_mask(paths[i]));
    std::uint64_t* row = m.arc.data() + i * m.words;
    for (std::size_t j = 0; j + 1 < paths[i].size(); ++j) {
      const int id = paths[i][j] * n + paths[i][j + 1];
      row[id / 64] |= std::uint64_t{1} << (id % 64);
    }
  }
  return m;
}

bool masked_arc_disjoint(const PathMasks& m, std::size_t i, std::size_t j) {
  const std::uint64_t* a = m.arc_row(i);
  const std::uint64_t* b = m.arc_row(j);
  for (int w = 0; w < m.words; ++w) {
    if (a[w] & b[w]) return false;
  }
  return true;
}

bool compatible(const PathMasks& m, std::uint64_t s_mask, PackingMode mode, std::size_t i,
                std::size_t j) {
  if (mode == PackingMode::kInternal && (m.vertex[i] & m.vertex[j]) != s_mask) return false;
  return masked_arc_disjoint(m, i, j);
}

// Branch-and-bound maximum clique with greedy coloring bounds. `stop_at`
// makes the search exit as soon as a clique that large is known; `hard_ub`
// is a proven ceiling so reaching it also ends the search exactly.
class CliqueSolver {
 public:
  CliqueSolver(std::size_t n, int stop_at, int hard_ub)
      : n_(n), words_((n + 63) / 64), adj_(n * words_, 0), stop_at_(stop_at),
        hard_ub_(hard_ub) {}

  void add_edge(std::size_t i, std::size_t j) {
    adj_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
    adj_[j * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
  }

  // Returns min(max clique size, stop_at); fills best_set with a clique of
  // the returned size when that size was actually attained.
  int solve(std::vector<int>* best_set) {
    seed_greedy();
    if (!done()) {
      std::vector<std::uint64_t> cand(words_, 0);
      for (std::size_t v = 0; v < n_; ++v) cand[v / 64] |= std::uint64_t{1} << (v % 64);
      expand(cand);
    }
    if (best_set) *best_set = best_set_;
    return std::min(best_, stop_at_);
  }

 private:
  bool done() const { return best_ >= hard_ub_ || best_ >= stop_at_; }

  const std::uint64_t* row(std::size_t v) const { return adj_.data() + v * words_; }

  void seed_greedy() {
    std::vector<int> clique;
    for (std::size_t v = 0; v < n_ && !done(); ++v) {
      bool ok = true;
      for (int u : clique) {
        if (!(row(v)[u / 64] >> (u % 64) & 1)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        clique.push_back(static_cast<int>(v));
        if (static_cast<int>(clique.size()) > best_) {
          best_ = static_cast<int>(clique.size());
          best_set_ = clique;
        }
      }
    }
  }

  void expand(std::vector<std::uint64_t>& cand) {
    if (done()) return;
    // Greedy coloring of the candidates; vertices listed in ascending color.
    order_.clear();
    colors_.clear();
    std::vector<std::uint64_t> uncolored = cand;
    int color = 0;
    while (true) {
      std::size_t start = order_.size();
      std::vector<std::uint64_t> avail = uncolored;
      bool any = false;
      ++color;
      for (int w = 0; w < words_; ++w) {
        while (avail[w]) {
          const std::size_t v = w * 64 + std::countr_zero(avail[w]);
          any = true;
          order_.push_back(v);
          colors_.push_back(color);
          uncolored[v / 64] &= ~(std::uint64_t{1} << (v % 64));
          for (int x = w; x < words_; ++x) avail[x] &= ~row(v)[x];
          avail[w] &= ~(std::uint64_t{1} << (v % 64));
        }
      }
      (void)start;
      if (!any) break;
    }
    if (order_.empty()) return;

    std::vector<std::size_t> order = std::move(order_);
    std::vector<int> colors = std::move(colors_);
    std::vector<std::uint64_t> sub(words_);
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (static_cast<int>(current_.size()) + colors[idx] <= best_) return;
      const std::size_t v = order[idx];
      cand[v / 64] &= ~(std::uint64_t{1} << (v % 64));
      for (int w = 0; w < words_; ++w) sub[w] = cand[w] & row(v)[w];
      current_.push_back(static_cast<int>(v));
      bool empty = true;
      for (int w = 0; w < words_; ++w) {
        if (sub[w]) {
          empty = false;
          break;
        }
      }
      if (empty) {
        if (static_cast<int>(current_.size()) > best_) {
          best_ = static_cast<int>(current_.size());
          best_set_ = current_;
        }
      } else {
        std::vector<std::uint64_t> sub_copy = sub;
        expand(sub_copy);
      }
      current_.pop_back();
      if (done()) return;
    }
  }

  std::size_t n_;
  int words_;
  std::vector<std::uint64_t> adj_;
  int stop_at_;
  int hard_ub_;
  int best_ = 0;
  std::vector<int> best_set_;
  std::vector<int> current_;
  std::vector<std::size_t> order_;
  std::vector<int> colors_;
};

// Paths sharing their first arc can never be packed together; neither can
// paths sharing their last arc. The smaller class count is a valid ceiling.
int structural_upper_bound(const Digraph& d, const std::vector<DirectedPath>& paths) {
  const int n = d.n();
  std::vector<char> first_seen(static_cast<std::size_t>(n) * n, 0);
  std::vector<char> last_seen(static_cast<std::size_t>(n) * n, 0);
  int firsts = 0, lasts = 0;
  for (const auto& p : paths) {
    const int f = p[0] * n + p[1];
    const int l = p[p.size() - 2] * n + p.back();
    if (!first_seen[f]) first_seen[f] = 1, ++firsts;
    if (!last_seen[l]) last_seen[l] = 1, ++lasts;
  }
  return std::min(firsts, lasts);
}

int clique_value(const Digraph& d, const TerminalSpec& spec,
                 const std::vector<DirectedPath>& paths, PackingMode mode, int stop_at,
                 std::vector<int>* best_set) {
  if (paths.empty()) {
    if (best_set) best_set->clear();
    return 0;
  }
  // Single-arc special case is common enough not to bother the solver with.
  if (paths.size() == 1) {
    if (best_set) *best_set = {0};
    return std::min(1, stop_at);
  }
  if (paths.size() > kMaxCliqueVertices) {
    throw resource_error("packing search too large: " + std::to_string(paths.size()) +
                         " candidate paths");
  }
  const PathMasks masks = build_masks(d, paths);
  const std::uint64_t s_mask = vertex_mask(spec.S);
  CliqueSolver solver(paths.size(), stop_at, structural_upper_bound(d, paths));
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      if (compatible(masks, s_mask, mode, i, j)) solver.add_edge(i, j);
    }
  }
  return solver.solve(best_set);
}

struct SweepEntry {
  std::uint64_t s_mask;
  int r;
};

std::vector<int> mask_to_set(std::uint64_t mask) {
  std::vector<int> out;
  while (mask) {
    const int v = std::countr_zero(mask);
    out.push_back(v);
    mask &= mask - 1;
  }
  return out;
}

// All (S, r) with |S| = k in lexicographic order of S as a sorted vertex
// list, roots ascending within each S.
std::vector<SweepEntry> sweep_entries(int n, int k) {
  std::vector<SweepEntry> entries;
  std::vector<int> comb(k);
  std::iota(comb.begin(), comb.end(), 0);
  while (true) {
    std::uint64_t mask = 0;
    for (int v : comb) mask |= std::uint64_t{1} << v;
    for (int v : comb) entries.push_back({mask, v});
    int i = k - 1;
    while (i >= 0 && comb[i] == n - k + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
  return entries;
}

ParameterResult sweep_parameter(const Digraph& d, int k, PackingMode mode, int enum_cap,
                                int jobs) {
  const int n = d.n();
  if (k < 2 || k > n) {
    throw input_error("terminal set size must be between 2 and n");
  }
  if (n > enum_cap) {
    throw resource_error("digraph exceeds enumeration cap " + std::to_string(enum_cap));
  }

  const std::vector<SweepEntry> entries = sweep_entries(n, k);
  const std::vector<std::uint64_t> reach = d.reachability();

  const auto [dout, din] = d.min_degrees();
  const int initial_stop = std::min(dout, din) + 1;

  struct ChunkResult {
    int value = std::numeric_limits<int>::max();
    std::size_t index = 0;
  };
  std::vector<ChunkResult> results;
  std::mutex results_lock;

  const std::size_t chunk_size =
      jobs <= 1 ? entries.size() : std::max<std::size_t>(1, entries.size() / (4 * jobs));
  internal::run_chunks(entries.size(), jobs, chunk_size, [&](std::size_t lo, std::size_t hi) {
    ChunkResult local;
    int stop = initial_stop;
    for (std::size_t i = lo; i < hi; ++i) {
      const SweepEntry& e = entries[i];
      int value;
      if ((reach[e.r] & e.s_mask) != e.s_mask) {
        value = 0;  // some terminal unreachable from the root, no path exists
      } else {
        TerminalSpec spec{mask_to_set(e.s_mask), e.r};
        const auto paths = enumerate_sr_paths(d, spec, enum_cap);
        value = clique_value(d, spec, paths, mode, stop, nullptr);
      }
      if (value < stop) {
        stop = value;
        local = {value, i};
        if (value == 0) break;
      }
    }
    std::lock_guard<std::mutex> guard(results_lock);
    results.push_back(local);
  });

  ChunkResult best;
  for (const ChunkResult& r : results) {
    if (r.value < best.value || (r.value == best.value && r.index < best.index)) best = r;
  }
  if (best.value == std::numeric_limits<int>::max()) {
    // Unreachable in practice: the minimum over all (S, r) never exceeds
    // min(delta_out, delta_in), because paths from the minimum-out-degree
    // root use distinct first arcs and paths through a minimum-in-degree
    // terminal use distinct entering arcs. Kept as a defensive exact pass.
    const int bound = initial_stop - 1;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const SweepEntry& e = entries[i];
      TerminalSpec spec{mask_to_set(e.s_mask), e.r};
      const auto paths = enumerate_sr_paths(d, spec, enum_cap);
      if (clique_value(d, spec, paths, mode, bound + 1, nullptr) == bound) {
        return {bound, spec};
      }
    }
    throw input_error("internal error: packing sweep found no attaining terminal set");
  }
  const SweepEntry& e = entries[best.index];
  return {best.value, TerminalSpec{mask_to_set(e.s_mask), e.r}};
}

}  // namespace

TerminalSpec make_terminal_spec(const Digraph& d, std::vector<int> S, int r) {
  std::sort(S.begin(), S.end());
  S.erase(std::unique(S.begin(), S.end()), S.end());
  if (S.size() < 2) throw input_error("terminal set needs at least 2 vertices");
  for (int v : S) {
    if (v < 0 || v >= d.n()) throw input_error("terminal out of range: " + std::to_string(v));
  }
  if (!std::binary_search(S.begin(), S.end(), r)) {
    throw input_error("root must belong to the terminal set");
  }
  return TerminalSpec{std::move(S), r};
}

bool is_path(const Digraph& d, const DirectedPath& p) {
  if (p.empty()) return false;
  std::vector<char> seen(d.n(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0 || p[i] >= d.n()) return false;
    if (seen[p[i]]) return false;
    seen[p[i]] = 1;
    if (i > 0 && !d.has_arc(p[i - 1], p[i])) return false;
  }
  return true;
}

bool is_sr_path(const Digraph& d, const DirectedPath& p, const TerminalSpec& spec) {
  if (!is_path(d, p)) return false;
  if (p.front() != spec.r) return false;
  std::vector<char> seen(d.n(), 0);
  for (int v : p) seen[v] = 1;
  for (int s : spec.S) {
    if (!seen[s]) return false;
  }
  return true;
}

bool arc_disjoint(const DirectedPath& a, const DirectedPath& b) {
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    for (std::size_t j = 0; j + 1 < b.size(); ++j) {
      if (a[i] == b[j] && a[i + 1] == b[j + 1]) return false;
    }
  }
  return true;
}

bool internally_disjoint(const DirectedPath& a, const DirectedPath& b,
                         const std::vector<int>& S) {
  std::vector<int> va = a, vb = b, vs = S;
  std::sort(va.begin(), va.end());
  std::sort(vb.begin(), vb.end());
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  std::vector<int> common;
  std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(),
                        std::back_inserter(common));
  return common == vs && arc_disjoint(a, b);
}

std::vector<DirectedPath> enumerate_sr_paths(const Digraph& d, const TerminalSpec& spec,
                                             int enum_cap) {
  const int n = d.n();
  if (n > enum_cap) {
    throw resource_error("digraph exceeds enumeration cap " + std::to_string(enum_cap));
  }
  if (n > 64) throw resource_error("path enumeration requires n <= 64");

  const std::uint64_t s_mask = vertex_mask(spec.S);
  std::vector<DirectedPath> out;
  DirectedPath stack{spec.r};
  std::uint64_t visited = std::uint64_t{1} << spec.r;

  // Depth-first over simple extensions. Once every terminal is on the stack
  // no extension can ever end at an unvisited terminal again, so the branch
  // either emits here (current vertex terminal) or is dead.
  auto dfs = [&](auto&& self, int v) -> void {
    if ((visited & s_mask) == s_mask) {
      if (s_mask >> v & 1) {
        out.push_back(stack);
        if (out.size() > kMaxEnumeratedPaths) {
          throw resource_error("path enumeration exceeded " +
                               std::to_string(kMaxEnumeratedPaths) + " paths");
        }
      }
      return;
    }
    for (int w : d.out(v)) {
      if (visited >> w & 1) continue;
      visited |= std::uint64_t{1} << w;
      stack.push_back(w);
      self(self, w);
      stack.pop_back();
      visited &= ~(std::uint64_t{1} << w);
    }
  };
  dfs(dfs, spec.r);
  return out;
}

std::string to_string(PackingMode mode) {
  return mode == PackingMode::kInternal ? "internal" : "arc";
}

PackingMode packing_mode_from_string(const std::string& text) {
  if (text == "internal") return PackingMode::kInternal;
  if (text == "arc") return PackingMode::kArc;
  throw input_error("unknown packing mode: " + text);
}

bool validate_certificate(const Digraph& d, const PackingCertificate& cert) {
  for (const auto& p : cert.paths) {
    if (!is_sr_path(d, p, cert.spec)) return false;
  }
  for (std::size_t i = 0; i < cert.paths.size(); ++i) {
    for (std::size_t j = i + 1; j < cert.paths.size(); ++j) {
      const bool ok = cert.mode == PackingMode::kInternal
                          ? internally_disjoint(cert.paths[i], cert.paths[j], cert.spec.S)
                          : arc_disjoint(cert.paths[i], cert.paths[j]);
      if (!ok) return false;
    }
  }
  return true;
}

PackingCertificate max_packing(const Digraph& d, const TerminalSpec& spec, PackingMode mode,
                               int enum_cap) {
  const auto paths = enumerate_sr_paths(d, spec, enum_cap);
  std::vector<int> best_set;
  clique_value(d, spec, paths, mode, std::numeric_limits<int>::max(), &best_set);
  PackingCertificate cert{mode, spec, {}};
  cert.paths.reserve(best_set.size());
  for (int i : best_set) cert.paths.push_back(paths[i]);
  std::sort(cert.paths.begin(), cert.paths.end());
  return cert;
}

int packing_value(const Digraph& d, const TerminalSpec& spec, PackingMode mode, int stop_at,
                  int enum_cap) {
  const auto paths = enumerate_sr_paths(d, spec, enum_cap);
  return clique_value(d, spec, paths, mode, stop_at, nullptr);
}

ParameterResult kappa_p_k(const Digraph& d, int k, int enum_cap, int jobs) {
  return sweep_parameter(d, k, PackingMode::kInternal, enum_cap, jobs);
}

ParameterResult lambda_p_k(const Digraph& d, int k, int enum_cap, int jobs) {
  return sweep_parameter(d, k, PackingMode::kArc, enum_cap, jobs);
}

}  // namespace spp
