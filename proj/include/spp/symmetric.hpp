#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "spp/digraph.hpp"
#include "spp/packing.hpp"

namespace spp {

// The terminal-order trace of an (S,r)-path: the subsequence of its vertices
// that lie in S. Always a permutation of S starting at r.
struct Skeleton {
  std::vector<int> order;

  friend bool operator==(const Skeleton&, const Skeleton&) = default;
};

// Requires S to be covered by p and p to start at a vertex of S.
Skeleton skeleton_of(const DirectedPath& p, const std::vector<int>& S);

// All (k-1)! candidate skeletons for the terminal spec, in lexicographic
// order of the tail permutation.
std::vector<Skeleton> enumerate_skeletons(const TerminalSpec& spec);

// parts[0] holds the arcs assigned to no path; parts[1..ell] belong to the
// prospective paths. Parts are disjoint and cover the given arc set.
struct ArcPartition {
  std::vector<std::vector<Arc>> parts;
};

// Streams every assignment of `arcs` into ell+1 labeled parts, odometer
// style: the assignment vector counts up lexicographically, so consumers see
// a deterministic order. total() = (ell+1)^|arcs|.
class PartitionEnumerator {
 public:
  PartitionEnumerator(std::vector<Arc> arcs, int ell);

  std::optional<ArcPartition> next();
  std::uint64_t total() const { return total_; }
  // Random access used to split the sweep across threads.
  ArcPartition at(std::uint64_t index) const;

 private:
  std::vector<Arc> arcs_;
  int ell_;
  std::uint64_t total_;
  std::uint64_t cursor_ = 0;
};

struct RoutingRequest {
  // Endpoint pairs to connect. Pairs may share endpoints, and endpoints may
  // lie in `forbidden` (the restriction applies to path interiors only).
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> forbidden;
};

inline constexpr int kDefaultPairBound = 16;

// Finds one s->t path per pair such that path interiors avoid the forbidden
// vertices, the endpoints of every pair, and each other. Exact backtracking;
// std::nullopt when no such family exists.
std::optional<std::vector<DirectedPath>> route_disjoint(const Digraph& d,
                                                        const RoutingRequest& request,
                                                        int pair_bound = kDefaultPairBound);

// One inner step of the symmetric decision procedure: given a labeled
// partition of the arcs inside S, try every tuple of skeletons consistent
// with it and route the missing skeleton arcs outside S. Returns a validated
// certificate of ell internally disjoint (S,r)-paths, or std::nullopt.
std::optional<PackingCertificate> decide_partition(const Digraph& d, const TerminalSpec& spec,
                                                   int ell, const ArcPartition& partition);

struct DecisionResult {
  bool yes = false;
  std::optional<PackingCertificate> certificate;
};

struct DecideOptions {
  // Deterministic mode scans partitions in order and reports the first
  // success; racy mode lets worker threads race to any success.
  bool deterministic = true;
  int jobs = 1;
};

// Decides whether ell internally disjoint (S,r)-paths exist in a symmetric
// digraph. ell <= 1 is answered by direct path search; |S| = 2 reduces to
// a single max-flow between the root and the other terminal; the general
// case sweeps labeled partitions through decide_partition.
DecisionResult decide_kappa_at_least(const Digraph& d, const TerminalSpec& spec, int ell,
                                     const DecideOptions& opts = {});

}  // namespace spp
