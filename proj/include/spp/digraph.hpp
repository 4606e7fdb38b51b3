#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace spp {

struct Arc {
  int tail = 0;
  int head = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
  friend std::strong_ordering operator<=>(const Arc&, const Arc&) = default;
};

// Immutable strict digraph: no loops, no parallel arcs. Arcs are kept sorted
// lexicographically, which fixes iteration order everywhere downstream.
class Digraph {
 public:
  Digraph() = default;

  static Digraph from_arc_list(int n, const std::vector<std::pair<int, int>>& pairs);
  static Digraph from_arc_list(int n, const std::vector<std::pair<int, int>>& pairs,
                               std::vector<std::string> names);

  int n() const { return n_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<int>& out(int v) const { return out_[v]; }
  const std::vector<int>& in(int v) const { return in_[v]; }
  const std::optional<std::vector<std::string>>& names() const { return names_; }

  bool has_arc(int u, int v) const {
    return adj_[static_cast<std::size_t>(u) * n_ + v];
  }

  Digraph complement() const;
  // Same vertex set, listed arcs removed (arcs absent from the digraph are
  // ignored). Names carry over.
  Digraph remove_arcs(const std::vector<Arc>& remove) const;

  bool is_symmetric() const;
  // Balanced at every vertex and all arcs in one weak component; isolated
  // vertices are permitted. An arcless digraph qualifies.
  bool is_eulerian() const;
  bool is_strong() const;
  std::pair<int, int> min_degrees() const;  // (min out-degree, min in-degree)
  std::vector<Arc> induced_arcs(const std::vector<int>& s) const;

  // reach[u] bit v set iff a directed path u -> v exists. Requires n <= 64.
  std::vector<std::uint64_t> reachability() const;

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  std::vector<bool> adj_;
  std::optional<std::vector<std::string>> names_;

  void build_indexes();
};

// Minimum number of vertices whose deletion leaves a non-strong digraph, with
// the complete-digraph convention n-1 and 0 for non-strong inputs.
int vertex_connectivity(const Digraph& d);
// Minimum number of arcs whose deletion leaves a non-strong digraph; 0 for
// non-strong inputs.
int arc_connectivity(const Digraph& d);

struct VertexCut {
  int value = 0;
  // Empty when no cut exists (complete digraph) or the input is already
  // non-strong; otherwise deleting these vertices destroys strongness.
  std::vector<int> vertices;
};

struct ArcCut {
  int value = 0;
  std::vector<Arc> arcs;
};

VertexCut vertex_connectivity_witness(const Digraph& d);
ArcCut arc_connectivity_witness(const Digraph& d);

}  // namespace spp
