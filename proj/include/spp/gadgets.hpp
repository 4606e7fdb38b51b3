#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spp/digraph.hpp"
#include "spp/packing.hpp"

namespace spp {

// A Directed 2-Linkage instance: find vertex-disjoint paths s1->t1 and
// s2->t2 in H (fully disjoint, endpoints included).
struct LinkageInstance {
  Digraph h;
  int s1 = 0;
  int t1 = 0;
  int s2 = 0;
  int t2 = 0;
};

LinkageInstance make_linkage_instance(Digraph h, int s1, int t1, int s2, int t2);

// A reduction output: the built digraph, its terminal spec (S = {x_1..x_k},
// r = x_1), and a role label per vertex. The labels are also installed as the
// digraph's vertex names.
struct GadgetOutput {
  Digraph d;
  TerminalSpec spec;
  std::vector<std::string> name_map;
};

// For each original H-vertex u, its images (u_minus, u_plus) after splitting.
struct SplitMap {
  std::vector<std::pair<int, int>> pairs;
};

// Reduction to internal path packing: ring x_1..x_k of subdivided parallel
// connections plus a detour of H between x_1, x_2 and between x_{k-1}, x_k,
// wired so that ell internally disjoint (S,r)-paths exist iff the linkage
// instance is feasible.
GadgetOutput build_internal_gadget(const LinkageInstance& inst, int k, int ell);

// Reduction to arc-disjoint packing: the internal gadget with every H-vertex
// u split into u_minus -> u_plus, so vertex-disjointness inside H becomes
// arc-disjointness.
std::pair<GadgetOutput, SplitMap> build_arc_gadget(const LinkageInstance& inst, int k, int ell);

// Exhaustive Directed 2-Linkage oracle: lexicographically first pair of fully
// vertex-disjoint paths s1->t1, s2->t2 if one exists.
std::optional<std::pair<DirectedPath, DirectedPath>> solve_2linkage_exact(
    const LinkageInstance& inst, int enum_cap = kDefaultEnumCap);

// Union of `cycles` random directed cycles on random vertex subsets, each
// sharing a vertex with the previous ones, so the result is balanced and
// weakly connected on its non-isolated vertices. Deterministic per seed.
Digraph random_eulerian_digraph(int n, int cycles, std::uint64_t seed);

}  // namespace spp
