#include "spp/constructions.hpp"

#include <algorithm>
#include <string>

#include "spp/errors.hpp"

namespace spp {

namespace {

// Rotational decomposition for odd n: the classical zigzag Hamiltonian cycles
// of K_n on Z_{n-1} plus a hub vertex, each undirected cycle contributing its
// two directed rotations.
std::vector<std::vector<int>> odd_decomposition(int n) {
  const int m = n - 1;
  const int hub = n - 1;
  std::vector<std::vector<int>> cycles;
  for (int i = 0; i < m / 2; ++i) {
    std::vector<int> cycle{hub};
    for (int j = 0; j < m; ++j) {
      int v;
      if (j == 0) {
        v = i;
      } else if (j % 2 == 1) {
        v = (i + (j + 1) / 2) % m;
      } else {
        v = ((i - j / 2) % m + m) % m;
      }
      cycle.push_back(v);
    }
    std::vector<int> reversed{hub};
    reversed.insert(reversed.end(), cycle.rbegin(), cycle.rend() - 1);
    cycles.push_back(std::move(cycle));
    cycles.push_back(std::move(reversed));
  }
  return cycles;
}

// Backtracking search for even n. Cycle #0 is pinned to the canonical
// rotation (0,1,...,n-1); every later cycle is pinned to the smallest unused
// out-arc of vertex 0, and the search prunes whenever some vertex no longer
// has enough free out- or in-arcs for the cycles still to build.
class EvenSearch {
 public:
  explicit EvenSearch(int n)
      : n_(n),
        avail_(n, std::vector<char>(n, 1)),
        outdeg_(n, n - 1),
        indeg_(n, n - 1),
        visited_(n, 0) {
    for (int v = 0; v < n_; ++v) avail_[v][v] = 0;
  }

  std::vector<std::vector<int>> run() {
    std::vector<int> first;
    for (int v = 0; v < n_; ++v) {
      take(v, (v + 1) % n_);
      first.push_back(v);
    }
    cycles_.push_back(std::move(first));
    if (!build_all(2)) {
      throw std::logic_error("decomposition search failed unexpectedly");
    }
    return cycles_;
  }

 private:
  void take(int u, int v) {
    avail_[u][v] = 0;
    --outdeg_[u];
    --indeg_[v];
  }

  void give(int u, int v) {
    avail_[u][v] = 1;
    ++outdeg_[u];
    ++indeg_[v];
  }

  bool degree_ok(int cycles_left) const {
    for (int v = 0; v < n_; ++v) {
      if (outdeg_[v] < cycles_left || indeg_[v] < cycles_left) return false;
    }
    return true;
  }

  bool build_all(int j) {
    if (j == n_) return true;
    if (!degree_ok(n_ - j) || !avail_[0][j]) return false;
    take(0, j);
    cur_.assign(1, 0);
    cur_.push_back(j);
    std::fill(visited_.begin(), visited_.end(), 0);
    visited_[0] = visited_[j] = 1;
    const bool ok = extend(2, j);
    give(0, j);
    return ok;
  }

  bool extend(int depth, int j) {
    const int u = cur_.back();
    if (depth == n_) {
      if (!avail_[u][0]) return false;
      take(u, 0);
      cycles_.push_back(cur_);
      // build_all clobbers cur_/visited_, so save them around the recursion
      std::vector<int> cur_save = cur_;
      std::vector<char> vis_save = visited_;
      const bool ok = build_all(j + 1);
      if (!ok) {
        cycles_.pop_back();
        cur_ = std::move(cur_save);
        visited_ = std::move(vis_save);
      }
      give(u, 0);
      return ok;
    }
    for (int w = 1; w < n_; ++w) {
      if (visited_[w] || !avail_[u][w]) continue;
      take(u, w);
      visited_[w] = 1;
      cur_.push_back(w);
      if (extend(depth + 1, j)) return true;
      cur_.pop_back();
      visited_[w] = 0;
      give(u, w);
    }
    return false;
  }

  int n_;
  std::vector<std::vector<char>> avail_;
  std::vector<int> outdeg_;
  std::vector<int> indeg_;
  std::vector<char> visited_;
  std::vector<int> cur_;
  std::vector<std::vector<int>> cycles_;
};

}  // namespace

Digraph complete_symmetric(int n) {
  if (n < 1) throw input_error("complete_symmetric needs n >= 1");
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(static_cast<std::size_t>(n) * (n - 1));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v) arcs.emplace_back(u, v);
    }
  }
  return Digraph::from_arc_list(n, arcs);
}

HamiltonianDecomposition tillson_decomposition(int n) {
  if (n < 3) throw input_error("decomposition needs n >= 3");
  if (n == 4 || n == 6) {
    throw input_error("no decomposition exists for n = " + std::to_string(n));
  }
  HamiltonianDecomposition decomp;
  decomp.n = n;
  if (n % 2 == 1) {
    decomp.cycles = odd_decomposition(n);
  } else if (n <= 10) {
    decomp.cycles = EvenSearch(n).run();
  } else {
    throw resource_error("decomposition for even n > 10 not implemented at this scale");
  }
  return decomp;
}

bool is_hamiltonian_decomposition(const HamiltonianDecomposition& decomp) {
  const int n = decomp.n;
  if (n < 2) return false;
  if (static_cast<int>(decomp.cycles.size()) != n - 1) return false;
  std::vector<char> arc_seen(static_cast<std::size_t>(n) * n, 0);
  for (const auto& cycle : decomp.cycles) {
    if (static_cast<int>(cycle.size()) != n) return false;
    std::vector<char> vertex_seen(n, 0);
    for (int v : cycle) {
      if (v < 0 || v >= n || vertex_seen[v]) return false;
      vertex_seen[v] = 1;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int u = cycle[i];
      const int v = cycle[(i + 1) % cycle.size()];
      auto& slot = arc_seen[static_cast<std::size_t>(u) * n + v];
      if (slot) return false;
      slot = 1;
    }
  }
  // (n-1) cycles of n distinct non-loop arcs each cover all n(n-1) pairs.
  return true;
}

PackingCertificate decomposition_to_sr_packing(const HamiltonianDecomposition& decomp,
                                               const std::vector<int>& S, int r) {
  if (!is_hamiltonian_decomposition(decomp)) throw input_error("invalid decomposition");
  const Digraph k_n = complete_symmetric(decomp.n);
  const TerminalSpec spec = make_terminal_spec(k_n, S, r);

  PackingCertificate cert{PackingMode::kArc, spec, {}};
  for (const auto& cycle : decomp.cycles) {
    const auto at = std::find(cycle.begin(), cycle.end(), r);
    std::vector<int> rotation;
    rotation.insert(rotation.end(), at, cycle.end());
    rotation.insert(rotation.end(), cycle.begin(), at);
    std::size_t last = 0;
    for (std::size_t i = 0; i < rotation.size(); ++i) {
      if (std::binary_search(spec.S.begin(), spec.S.end(), rotation[i])) last = i;
    }
    rotation.resize(last + 1);
    cert.paths.push_back(std::move(rotation));
  }
  std::sort(cert.paths.begin(), cert.paths.end());
  if (!validate_certificate(k_n, cert)) {
    throw std::logic_error("decomposition packing failed validation");
  }
  return cert;
}

Digraph example1() {
  const std::vector<std::string> names{"x1", "x2", "y1", "y2", "y3", "z1", "z2", "z3"};
  const int x[2] = {0, 1};
  const int y[3] = {2, 3, 4};
  const int z[3] = {5, 6, 7};
  std::vector<std::pair<int, int>> arcs;
  for (int zi : z) {
    for (int xi : x) arcs.emplace_back(zi, xi);
    for (int yi : y) arcs.emplace_back(zi, yi);
  }
  for (int xi : x) {
    for (int yi : y) arcs.emplace_back(xi, yi);
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i != j) arcs.emplace_back(y[i], z[j]);
    }
  }
  return Digraph::from_arc_list(8, arcs, names);
}

Digraph transitive_tournament(int n) {
  if (n < 2) throw input_error("transitive_tournament needs n >= 2");
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) arcs.emplace_back(i, j);
  }
  return Digraph::from_arc_list(n, arcs);
}

Digraph half_decomposition_digraph(int n) {
  if (n % 2 == 0) throw input_error("half_decomposition_digraph needs odd n");
  const HamiltonianDecomposition decomp = tillson_decomposition(n);
  std::vector<std::pair<int, int>> arcs;
  for (int c = 0; c < (n - 1) / 2; ++c) {
    const auto& cycle = decomp.cycles[c];
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      arcs.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
    }
  }
  return Digraph::from_arc_list(n, arcs);
}

}  // namespace spp
