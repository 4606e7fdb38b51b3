#include "spp/symmetric.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <limits>
#include <mutex>

#include "parallel.hpp"
#include "spp/errors.hpp"

namespace spp {

namespace {

std::vector<char> membership(int n, const std::vector<int>& vs) {
  std::vector<char> m(n, 0);
  for (int v : vs) m[v] = 1;
  return m;
}

// Arc set of a skeleton as a flat tail*n+head bitmap.
std::vector<char> skeleton_arc_map(int n, const Skeleton& sk) {
  std::vector<char> m(static_cast<std::size_t>(n) * n, 0);
  for (std::size_t i = 0; i + 1 < sk.order.size(); ++i) {
    m[static_cast<std::size_t>(sk.order[i]) * n + sk.order[i + 1]] = 1;
  }
  return m;
}

// Backtracking router. Pairs are attacked in increasing shortest-path-length
// order; before committing a path, every pending pair must still be
// reachable through the unclaimed vertices.
class Router {
 public:
  Router(const Digraph& d, const RoutingRequest& request)
      : d_(d), pairs_(request.pairs), blocked_(d.n(), 0), used_(d.n(), 0) {
    for (int v : request.forbidden) blocked_[v] = 1;
    for (const auto& [s, t] : pairs_) {
      blocked_[s] = 1;
      blocked_[t] = 1;
    }
    order_.resize(pairs_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
  }

  std::optional<std::vector<DirectedPath>> run() {
    std::vector<int> lengths(pairs_.size());
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      lengths[i] = bfs_length(pairs_[i].first, pairs_[i].second);
      if (lengths[i] < 0) return std::nullopt;
    }
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return lengths[a] < lengths[b]; });
    results_.assign(pairs_.size(), {});
    if (!solve(0)) return std::nullopt;
    return results_;
  }

 private:
  // Shortest s->t hop count through currently free interior vertices, or -1.
  int bfs_length(int s, int t) const {
    if (s == t) return 0;
    std::vector<int> dist(d_.n(), -1);
    dist[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : d_.out(u)) {
        if (v == t) return dist[u] + 1;
        if (dist[v] < 0 && !blocked_[v] && !used_[v]) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }
    return -1;
  }

  bool pending_feasible(std::size_t from) const {
    for (std::size_t i = from; i < order_.size(); ++i) {
      if (bfs_length(pairs_[order_[i]].first, pairs_[order_[i]].second) < 0) return false;
    }
    return true;
  }

  bool solve(std::size_t idx) {
    if (idx == order_.size()) return true;
    const auto [s, t] = pairs_[order_[idx]];
    path_.assign(1, s);
    return extend(idx, s, t);
  }

  bool extend(std::size_t idx, int v, int t) {
    if (v == t) return commit(idx);
    for (int w : d_.out(v)) {
      if (w == t) {
        path_.push_back(w);
        if (commit(idx)) return true;
        path_.pop_back();
        continue;
      }
      if (blocked_[w] || used_[w]) continue;
      used_[w] = 1;
      path_.push_back(w);
      if (extend(idx, w, t)) return true;
      path_.pop_back();
      used_[w] = 0;
    }
    return false;
  }

  bool commit(std::size_t idx) {
    if (!pending_feasible(idx + 1)) return false;
    results_[order_[idx]] = path_;
    std::vector<int> saved = path_;
    const bool ok = solve(idx + 1);
    if (!ok) {
      path_ = saved;  // solve() clobbers the scratch path
      results_[order_[idx]].clear();
    }
    return ok;
  }

  const Digraph& d_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<char> blocked_;
  std::vector<char> used_;
  std::vector<std::size_t> order_;
  std::vector<DirectedPath> results_;
  DirectedPath path_;
};

// Lexicographically first simple path from spec.r covering spec.S, if any.
std::optional<DirectedPath> find_single_path(const Digraph& d, const TerminalSpec& spec) {
  const std::vector<char> terminal = membership(d.n(), spec.S);
  std::vector<char> visited(d.n(), 0);
  DirectedPath path{spec.r};
  visited[spec.r] = 1;
  int missing = 0;
  for (int s : spec.S) {
    if (s != spec.r) ++missing;
  }

  // Every still-missing terminal must remain reachable through unvisited
  // vertices for the branch to stay alive.
  auto viable = [&](int v) {
    std::vector<char> seen = visited;
    seen[v] = 1;
    int need = missing;
    std::deque<int> queue{v};
    while (!queue.empty() && need > 0) {
      const int u = queue.front();
      queue.pop_front();
      for (int w : d.out(u)) {
        if (!seen[w]) {
          seen[w] = 1;
          if (terminal[w]) --need;
          queue.push_back(w);
        }
      }
    }
    return need == 0;
  };

  auto dfs = [&](auto&& self, int v) -> bool {
    if (missing == 0) return true;
    if (!viable(v)) return false;
    for (int w : d.out(v)) {
      if (visited[w]) continue;
      visited[w] = 1;
      path.push_back(w);
      if (terminal[w]) --missing;
      if (self(self, w)) return true;
      if (terminal[w]) ++missing;
      path.pop_back();
      visited[w] = 0;
    }
    return false;
  };
  if (dfs(dfs, spec.r)) {
    // Cut the tail after the last terminal (nothing follows it here by
    // construction, since the search stops once coverage is complete).
    return path;
  }
  return std::nullopt;
}

// Maximum internally disjoint r->t paths via unit vertex capacities, stopping
// after `want` augmentations. Returns the paths found.
std::vector<DirectedPath> local_vertex_flow(const Digraph& d, int r, int t, int want) {
  const int n = d.n();
  const int big = want + 1;
  const int size = 2 * n;
  std::vector<std::vector<int>> cap(size, std::vector<int>(size, 0));
  for (int v = 0; v < n; ++v) cap[2 * v][2 * v + 1] = (v == r || v == t) ? big : 1;
  for (const Arc& a : d.arcs()) cap[2 * a.tail + 1][2 * a.head] = 1;

  const int source = 2 * r + 1;
  const int sink = 2 * t;
  std::vector<std::vector<int>> flow(size, std::vector<int>(size, 0));
  int value = 0;
  std::vector<int> parent(size);
  while (value < want) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[source] = source;
    std::deque<int> queue{source};
    while (!queue.empty() && parent[sink] < 0) {
      const int u = queue.front();
      queue.pop_front();
      for (int v = 0; v < size; ++v) {
        if (parent[v] < 0 && cap[u][v] - flow[u][v] + flow[v][u] > 0) {
          parent[v] = u;
          queue.push_back(v);
        }
      }
    }
    if (parent[sink] < 0) break;
    for (int v = sink; v != source; v = parent[v]) {
      const int u = parent[v];
      if (flow[v][u] > 0) {
        --flow[v][u];
      } else {
        ++flow[u][v];
      }
    }
    ++value;
  }

  std::vector<DirectedPath> paths;
  for (int i = 0; i < value; ++i) {
    DirectedPath p{r};
    int node = source;
    while (node != sink) {
      int next = -1;
      for (int v = 0; v < size; ++v) {
        if (flow[node][v] > 0) {
          next = v;
          break;
        }
      }
      --flow[node][next];
      node = next;
      if (node % 2 == 0 && node / 2 != p.back()) p.push_back(node / 2);
    }
    paths.push_back(std::move(p));
  }
  std::sort(paths.begin(), paths.end());
  return paths;
}

PackingCertificate checked(const Digraph& d, PackingCertificate cert) {
  if (!validate_certificate(d, cert)) {
    throw std::logic_error("decision certificate failed validation");
  }
  return cert;
}

}  // namespace

Skeleton skeleton_of(const DirectedPath& p, const std::vector<int>& S) {
  if (p.empty()) throw input_error("skeleton of an empty path");
  std::vector<int> sorted = S;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Skeleton sk;
  for (int v : p) {
    if (std::binary_search(sorted.begin(), sorted.end(), v)) sk.order.push_back(v);
  }
  if (sk.order.size() != sorted.size()) {
    throw input_error("path does not cover the terminal set");
  }
  if (p.front() != sk.order.front()) {
    throw input_error("path must start at a terminal");
  }
  return sk;
}

std::vector<Skeleton> enumerate_skeletons(const TerminalSpec& spec) {
  std::vector<int> tail;
  for (int v : spec.S) {
    if (v != spec.r) tail.push_back(v);
  }
  std::sort(tail.begin(), tail.end());
  std::vector<Skeleton> out;
  do {
    Skeleton sk;
    sk.order.reserve(tail.size() + 1);
    sk.order.push_back(spec.r);
    sk.order.insert(sk.order.end(), tail.begin(), tail.end());
    out.push_back(std::move(sk));
  } while (std::next_permutation(tail.begin(), tail.end()));
  return out;
}

PartitionEnumerator::PartitionEnumerator(std::vector<Arc> arcs, int ell)
    : arcs_(std::move(arcs)), ell_(ell) {
  if (ell_ < 1) throw input_error("partition enumeration needs ell >= 1");
  std::sort(arcs_.begin(), arcs_.end());
  const std::uint64_t base = static_cast<std::uint64_t>(ell_) + 1;
  total_ = 1;
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    if (total_ > std::numeric_limits<std::uint64_t>::max() / base) {
      throw resource_error("partition space overflows 64 bits");
    }
    total_ *= base;
  }
}

ArcPartition PartitionEnumerator::at(std::uint64_t index) const {
  ArcPartition p;
  p.parts.assign(ell_ + 1, {});
  const std::uint64_t base = static_cast<std::uint64_t>(ell_) + 1;
  for (std::size_t i = arcs_.size(); i-- > 0;) {
    p.parts[index % base].push_back(arcs_[i]);
    index /= base;
  }
  for (auto& part : p.parts) std::reverse(part.begin(), part.end());
  return p;
}

std::optional<ArcPartition> PartitionEnumerator::next() {
  if (cursor_ >= total_) return std::nullopt;
  return at(cursor_++);
}

std::optional<std::vector<DirectedPath>> route_disjoint(const Digraph& d,
                                                        const RoutingRequest& request,
                                                        int pair_bound) {
  if (static_cast<int>(request.pairs.size()) > pair_bound) {
    throw resource_error("routing request exceeds pair bound " + std::to_string(pair_bound));
  }
  for (const auto& [s, t] : request.pairs) {
    if (s < 0 || s >= d.n() || t < 0 || t >= d.n()) {
      throw input_error("routing endpoint out of range");
    }
  }
  if (!d.is_symmetric()) {
    throw input_error("routing requires a symmetric digraph");
  }
  Router router(d, request);
  return router.run();
}

std::optional<PackingCertificate> decide_partition(const Digraph& d, const TerminalSpec& spec,
                                                   int ell, const ArcPartition& partition) {
  if (!d.is_symmetric()) throw input_error("decision procedure requires a symmetric digraph");
  if (ell < 1) throw input_error("decide_partition needs ell >= 1");
  if (static_cast<int>(partition.parts.size()) != ell + 1) {
    throw input_error("partition must have exactly ell+1 parts");
  }
  const int n = d.n();
  const std::vector<Arc> in_s = d.induced_arcs(spec.S);
  {
    std::vector<Arc> all;
    for (const auto& part : partition.parts) all.insert(all.end(), part.begin(), part.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
      throw input_error("partition parts overlap");
    }
    std::vector<Arc> expect = in_s;
    std::sort(expect.begin(), expect.end());
    if (all != expect) throw input_error("partition must cover exactly the arcs inside S");
  }

  const std::vector<Skeleton> skeletons = enumerate_skeletons(spec);
  std::vector<std::vector<char>> sk_arcs;
  sk_arcs.reserve(skeletons.size());
  for (const Skeleton& sk : skeletons) sk_arcs.push_back(skeleton_arc_map(n, sk));

  // A part is consistent with a skeleton when all of its arcs appear on the
  // skeleton. Skeleton arcs left out of the part get routed externally, so
  // containment the other way is not required.
  std::vector<std::vector<std::size_t>> candidates(ell);
  for (int i = 0; i < ell; ++i) {
    for (std::size_t s = 0; s < skeletons.size(); ++s) {
      bool ok = true;
      for (const Arc& a : partition.parts[i + 1]) {
        if (!sk_arcs[s][static_cast<std::size_t>(a.tail) * n + a.head]) {
          ok = false;
          break;
        }
      }
      if (ok) candidates[i].push_back(s);
    }
    if (candidates[i].empty()) return std::nullopt;
  }

  const Digraph routing_digraph = d.remove_arcs(in_s);

  std::vector<std::size_t> choice(ell, 0);
  while (true) {
    // Assemble the routing request for this tuple of skeletons: every
    // skeleton arc not claimed by the path's own part must be realized as a
    // detour outside S.
    RoutingRequest request;
    request.forbidden = spec.S;
    std::vector<std::vector<char>> direct(ell);
    for (int i = 0; i < ell; ++i) {
      const Skeleton& sk = skeletons[candidates[i][choice[i]]];
      std::vector<char> part_map(static_cast<std::size_t>(n) * n, 0);
      for (const Arc& a : partition.parts[i + 1]) {
        part_map[static_cast<std::size_t>(a.tail) * n + a.head] = 1;
      }
      direct[i] = part_map;
      for (std::size_t j = 0; j + 1 < sk.order.size(); ++j) {
        const int u = sk.order[j], v = sk.order[j + 1];
        if (!part_map[static_cast<std::size_t>(u) * n + v]) {
          request.pairs.emplace_back(u, v);
        }
      }
    }

    const auto routed = route_disjoint(routing_digraph, request);
    if (routed) {
      PackingCertificate cert{PackingMode::kInternal, spec, {}};
      std::size_t seg = 0;
      for (int i = 0; i < ell; ++i) {
        const Skeleton& sk = skeletons[candidates[i][choice[i]]];
        DirectedPath path{sk.order.front()};
        for (std::size_t j = 0; j + 1 < sk.order.size(); ++j) {
          const int u = sk.order[j], v = sk.order[j + 1];
          if (direct[i][static_cast<std::size_t>(u) * n + v]) {
            path.push_back(v);
          } else {
            const DirectedPath& piece = (*routed)[seg++];
            path.insert(path.end(), piece.begin() + 1, piece.end());
          }
        }
        cert.paths.push_back(std::move(path));
      }
      return checked(d, std::move(cert));
    }

    int pos = ell - 1;
    while (pos >= 0 && choice[pos] + 1 == candidates[pos].size()) {
      choice[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++choice[pos];
  }
  return std::nullopt;
}

DecisionResult decide_kappa_at_least(const Digraph& d, const TerminalSpec& spec, int ell,
                                     const DecideOptions& opts) {
  if (!d.is_symmetric()) throw input_error("decision procedure requires a symmetric digraph");

  if (ell <= 0) return {true, PackingCertificate{PackingMode::kInternal, spec, {}}};

  // Degree ceiling: paths leave the root by distinct arcs and enter every
  // other terminal by distinct arcs.
  int ceiling = static_cast<int>(d.out(spec.r).size());
  for (int v : spec.S) {
    if (v != spec.r) ceiling = std::min(ceiling, static_cast<int>(d.in(v).size()));
  }
  if (ell > ceiling) return {false, std::nullopt};

  if (ell == 1) {
    auto path = find_single_path(d, spec);
    if (!path) return {false, std::nullopt};
    return {true, checked(d, PackingCertificate{PackingMode::kInternal, spec, {*path}})};
  }

  if (spec.S.size() == 2) {
    const int other = spec.S[0] == spec.r ? spec.S[1] : spec.S[0];
    auto paths = local_vertex_flow(d, spec.r, other, ell);
    if (static_cast<int>(paths.size()) < ell) return {false, std::nullopt};
    return {true,
            checked(d, PackingCertificate{PackingMode::kInternal, spec, std::move(paths)})};
  }

  PartitionEnumerator partitions(d.induced_arcs(spec.S), ell);

  if (opts.deterministic || opts.jobs <= 1) {
    while (auto partition = partitions.next()) {
      if (auto cert = decide_partition(d, spec, ell, *partition)) {
        return {true, std::move(*cert)};
      }
    }
    return {false, std::nullopt};
  }

  // Racy mode: workers race over partition chunks and any success wins.
  std::atomic<bool> found{false};
  std::optional<PackingCertificate> result;
  std::mutex result_lock;
  const std::uint64_t total = partitions.total();
  internal::run_chunks(total, opts.jobs, std::max<std::uint64_t>(1, total / (4 * opts.jobs)),
                       [&](std::size_t lo, std::size_t hi) {
                         for (std::size_t i = lo; i < hi; ++i) {
                           if (found.load(std::memory_order_relaxed)) return;
                           if (auto cert = decide_partition(d, spec, ell,
                                                            partitions.at(i))) {
                             std::lock_guard<std::mutex> guard(result_lock);
                             if (!found.exchange(true)) result = std::move(*cert);
                             return;
                           }
                         }
                       });
  if (result) return {true, std::move(result)};
  return {false, std::nullopt};
}

}  // namespace spp
