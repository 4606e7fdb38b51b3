#include "spp/digraph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

#include "spp/errors.hpp"

namespace spp {

namespace {

// Dense-matrix Edmonds-Karp, adequate for the vertex counts this library
// targets. Capacities are mutated into the residual network by max_flow so a
// minimum cut can be read off afterwards.
class FlowNetwork {
 public:
  explicit FlowNetwork(int size) : size_(size), cap_(static_cast<std::size_t>(size) * size, 0) {}

  int& cap(int u, int v) { return cap_[static_cast<std::size_t>(u) * size_ + v]; }

  int max_flow(int s, int t) {
    int flow = 0;
    std::vector<int> parent(size_);
    while (true) {
      std::fill(parent.begin(), parent.end(), -1);
      parent[s] = s;
      std::deque<int> queue{s};
      while (!queue.empty() && parent[t] < 0) {
        const int u = queue.front();
        queue.pop_front();
        for (int v = 0; v < size_; ++v) {
          if (parent[v] < 0 && cap(u, v) > 0) {
            parent[v] = u;
            queue.push_back(v);
          }
        }
      }
      if (parent[t] < 0) return flow;
      int bottleneck = std::numeric_limits<int>::max();
      for (int v = t; v != s; v = parent[v]) {
        bottleneck = std::min(bottleneck, cap(parent[v], v));
      }
      for (int v = t; v != s; v = parent[v]) {
        cap(parent[v], v) -= bottleneck;
        cap(v, parent[v]) += bottleneck;
      }
      flow += bottleneck;
    }
  }

  // Source side of the cut in the residual network left by max_flow.
  std::vector<char> source_side(int s) const {
    std::vector<char> seen(size_, 0);
    seen[s] = 1;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v = 0; v < size_; ++v) {
        if (!seen[v] && cap_[static_cast<std::size_t>(u) * size_ + v] > 0) {
          seen[v] = 1;
          queue.push_back(v);
        }
      }
    }
    return seen;
  }

 private:
  int size_;
  std::vector<int> cap_;
};

// Vertex-splitting network for internally disjoint u->v paths: vertex w
// becomes w_in = 2w, w_out = 2w+1 joined by a unit-capacity edge (unbounded
// at the two endpoints). Real arcs are uncuttable so that every finite cut
// consists of split edges only and reads back as a vertex set.
FlowNetwork split_network(const Digraph& d, int s, int t) {
  const int n = d.n();
  FlowNetwork net(2 * n);
  const int big = n + 1;
  for (int v = 0; v < n; ++v) {
    net.cap(2 * v, 2 * v + 1) = (v == s || v == t) ? big : 1;
  }
  for (const Arc& a : d.arcs()) {
    net.cap(2 * a.tail + 1, 2 * a.head) = big;
  }
  return net;
}

FlowNetwork arc_network(const Digraph& d) {
  FlowNetwork net(d.n());
  for (const Arc& a : d.arcs()) net.cap(a.tail, a.head) = 1;
  return net;
}

}  // namespace

Digraph Digraph::from_arc_list(int n, const std::vector<std::pair<int, int>>& pairs) {
  if (n < 0) throw input_error("vertex count must be non-negative");
  Digraph d;
  d.n_ = n;
  d.arcs_.reserve(pairs.size());
  for (const auto& [tail, head] : pairs) {
    if (tail < 0 || tail >= n || head < 0 || head >= n) {
      throw input_error("arc endpoint out of range: (" + std::to_string(tail) + "," +
                        std::to_string(head) + ") with n=" + std::to_string(n));
    }
    if (tail == head) {
      throw input_error("loops are not allowed: (" + std::to_string(tail) + "," +
                        std::to_string(head) + ")");
    }
    d.arcs_.push_back(Arc{tail, head});
  }
  std::sort(d.arcs_.begin(), d.arcs_.end());
  d.arcs_.erase(std::unique(d.arcs_.begin(), d.arcs_.end()), d.arcs_.end());
  d.build_indexes();
  return d;
}

Digraph Digraph::from_arc_list(int n, const std::vector<std::pair<int, int>>& pairs,
                               std::vector<std::string> names) {
  Digraph d = from_arc_list(n, pairs);
  if (static_cast<int>(names.size()) != n) {
    throw input_error("names must have one entry per vertex");
  }
  d.names_ = std::move(names);
  return d;
}

void Digraph::build_indexes() {
  out_.assign(n_, {});
  in_.assign(n_, {});
  adj_.assign(static_cast<std::size_t>(n_) * n_, false);
  for (const Arc& a : arcs_) {
    out_[a.tail].push_back(a.head);
    in_[a.head].push_back(a.tail);
    adj_[static_cast<std::size_t>(a.tail) * n_ + a.head] = true;
  }
  for (auto& v : in_) std::sort(v.begin(), v.end());
}

Digraph Digraph::complement() const {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n_; ++u) {
    for (int v = 0; v < n_; ++v) {
      if (u != v && !has_arc(u, v)) pairs.emplace_back(u, v);
    }
  }
  if (names_) return from_arc_list(n_, pairs, *names_);
  return from_arc_list(n_, pairs);
}

Digraph Digraph::remove_arcs(const std::vector<Arc>& remove) const {
  std::vector<Arc> gone = remove;
  std::sort(gone.begin(), gone.end());
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(arcs_.size());
  for (const Arc& a : arcs_) {
    if (!std::binary_search(gone.begin(), gone.end(), a)) {
      pairs.emplace_back(a.tail, a.head);
    }
  }
  if (names_) return from_arc_list(n_, pairs, *names_);
  return from_arc_list(n_, pairs);
}

bool Digraph::is_symmetric() const {
  for (const Arc& a : arcs_) {
    if (!has_arc(a.head, a.tail)) return false;
  }
  return true;
}

bool Digraph::is_eulerian() const {
  for (int v = 0; v < n_; ++v) {
    if (out_[v].size() != in_[v].size()) return false;
  }
  if (arcs_.empty()) return true;
  // Weak connectivity over the vertices that carry arcs.
  std::vector<char> seen(n_, 0);
  std::deque<int> queue{arcs_.front().tail};
  seen[arcs_.front().tail] = 1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : out_[u]) {
      if (!seen[v]) seen[v] = 1, queue.push_back(v);
    }
    for (int v : in_[u]) {
      if (!seen[v]) seen[v] = 1, queue.push_back(v);
    }
  }
  for (int v = 0; v < n_; ++v) {
    if (!seen[v] && !(out_[v].empty() && in_[v].empty())) return false;
  }
  return true;
}

bool Digraph::is_strong() const {
  if (n_ <= 1) return true;
  for (const auto adjacency : {&out_, &in_}) {
    std::vector<char> seen(n_, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int count = 1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : (*adjacency)[u]) {
        if (!seen[v]) seen[v] = 1, ++count, queue.push_back(v);
      }
    }
    if (count != n_) return false;
  }
  return true;
}

std::pair<int, int> Digraph::min_degrees() const {
  if (n_ == 0) return {0, 0};
  std::size_t dout = out_[0].size();
  std::size_t din = in_[0].size();
  for (int v = 1; v < n_; ++v) {
    dout = std::min(dout, out_[v].size());
    din = std::min(din, in_[v].size());
  }
  return {static_cast<int>(dout), static_cast<int>(din)};
}

std::vector<Arc> Digraph::induced_arcs(const std::vector<int>& s) const {
  std::vector<char> member(n_, 0);
  for (int v : s) {
    if (v < 0 || v >= n_) throw input_error("vertex set member out of range");
    member[v] = 1;
  }
  std::vector<Arc> result;
  for (const Arc& a : arcs_) {
    if (member[a.tail] && member[a.head]) result.push_back(a);
  }
  return result;
}

std::vector<std::uint64_t> Digraph::reachability() const {
  if (n_ > 64) throw resource_error("reachability bitmasks require n <= 64");
  std::vector<std::uint64_t> reach(n_, 0);
  for (int s = 0; s < n_; ++s) {
    std::uint64_t seen = std::uint64_t{1} << s;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : out_[u]) {
        if (!(seen >> v & 1)) {
          seen |= std::uint64_t{1} << v;
          queue.push_back(v);
        }
      }
    }
    reach[s] = seen;
  }
  return reach;
}

int vertex_connectivity(const Digraph& d) { return vertex_connectivity_witness(d).value; }

int arc_connectivity(const Digraph& d) { return arc_connectivity_witness(d).value; }

VertexCut vertex_connectivity_witness(const Digraph& d) {
  const int n = d.n();
  if (n < 2) throw input_error("connectivity requires at least 2 vertices");
  if (!d.is_strong()) return {0, {}};
  if (d.arc_count() == n * (n - 1)) return {n - 1, {}};

  int best = std::numeric_limits<int>::max();
  int best_s = -1, best_t = -1;
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      if (s == t || d.has_arc(s, t)) continue;
      FlowNetwork net = split_network(d, s, t);
      const int flow = net.max_flow(2 * s + 1, 2 * t);
      if (flow < best) {
        best = flow;
        best_s = s;
        best_t = t;
      }
    }
  }

  FlowNetwork net = split_network(d, best_s, best_t);
  net.max_flow(2 * best_s + 1, 2 * best_t);
  const std::vector<char> side = net.source_side(2 * best_s + 1);
  std::vector<int> cut;
  for (int v = 0; v < n; ++v) {
    if (side[2 * v] && !side[2 * v + 1]) cut.push_back(v);
  }
  return {best, cut};
}

ArcCut arc_connectivity_witness(const Digraph& d) {
  const int n = d.n();
  if (n < 2) throw input_error("connectivity requires at least 2 vertices");
  if (!d.is_strong()) return {0, {}};

  // A global minimum arc cut separates vertex 0 from some vertex on the other
  // side, in one direction or the other, so 2(n-1) flows suffice.
  int best = std::numeric_limits<int>::max();
  int best_s = -1, best_t = -1;
  for (int v = 1; v < n; ++v) {
    for (const auto& [s, t] : {std::pair{0, v}, std::pair{v, 0}}) {
      FlowNetwork net = arc_network(d);
      const int flow = net.max_flow(s, t);
      if (flow < best) {
        best = flow;
        best_s = s;
        best_t = t;
      }
    }
  }

  FlowNetwork net = arc_network(d);
  net.max_flow(best_s, best_t);
  const std::vector<char> side = net.source_side(best_s);
  std::vector<Arc> cut;
  for (const Arc& a : d.arcs()) {
    if (side[a.tail] && !side[a.head]) cut.push_back(a);
  }
  return {best, cut};
}

}  // namespace spp
