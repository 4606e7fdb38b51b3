#pragma once

#include <vector>

#include "spp/digraph.hpp"
#include "spp/packing.hpp"

namespace spp {

// Partition of the arcs of the complete symmetric digraph on n vertices into
// n-1 directed Hamiltonian cycles. Each cycle is a cyclic vertex order; the
// closing arc back to the first vertex is implicit.
struct HamiltonianDecomposition {
  int n = 0;
  std::vector<std::vector<int>> cycles;
};

// Complete symmetric digraph on n vertices: all n(n-1) ordered pairs.
Digraph complete_symmetric(int n);

// Hamiltonian decomposition of the complete symmetric digraph. Exists for
// every n >= 3 except n in {4, 6}. Odd n uses the rotational construction;
// even n in {8, 10} uses a pruned backtracking search; larger even n is
// rejected as out of scale.
HamiltonianDecomposition tillson_decomposition(int n);

// Exact-cover checker: every cycle Hamiltonian, cycles pairwise arc-disjoint,
// and the union of their arcs is exactly the complete symmetric arc set.
bool is_hamiltonian_decomposition(const HamiltonianDecomposition& decomp);

// Turns a decomposition into an arc-disjoint path packing: from each cycle,
// the path that starts at spec.r, follows the cycle, and stops at the last
// terminal encountered. Yields a validated arc-mode certificate of value n-1.
PackingCertificate decomposition_to_sr_packing(const HamiltonianDecomposition& decomp,
                                               const std::vector<int>& S, int r);

// Fixed 8-vertex digraph on X = {x1,x2}, Y = {y1,y2,y3}, Z = {z1,z2,z3} with
// all arcs Z->X, Z->Y, X->Y and all Y->Z arcs except y_i -> z_i. Its packing
// parameters separate from classical connectivity: kappa = 2 while the
// 4-terminal internal packing number drops to 1.
Digraph example1();

// Transitive tournament: arc i -> j iff i < j. Non-strong, and its complement
// (the arc reversal) is non-strong too.
Digraph transitive_tournament(int n);

// Union of the first (n-1)/2 cycles of tillson_decomposition(n) for odd n.
// Its complement is the union of the remaining cycles.
Digraph half_decomposition_digraph(int n);

}  // namespace spp
