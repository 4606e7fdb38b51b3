#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spp/digraph.hpp"
#include "spp/packing.hpp"

namespace spp {

// One audited inequality. `applied` records whether the claim's side
// condition held; a skipped claim still passes. A failing claim carries a
// witness terminal spec whose brute-force recomputation reproduces the
// violation.
struct ClaimResult {
  std::string name;
  bool applied = true;
  bool pass = true;
  std::string detail;
  std::optional<TerminalSpec> witness;
};

struct AuditReport {
  int n = 0;
  int arc_count = 0;
  std::vector<int> k_values;
  std::vector<ClaimResult> claims;
  bool pass() const;
};

// Checks, for 2 <= k <= kmax: the arc parameter never grows with k, neither
// parameter grows when arcs are deleted (tested on one seeded random spanning
// subdigraph), the internal parameter is at most the arc parameter which is
// at most min degree, and the k=2 parameters equal classical vertex and arc
// connectivity.
AuditReport audit_monotonicity(const Digraph& d, int kmax, std::uint64_t seed,
                               int enum_cap = kDefaultEnumCap);

// Checks the internal parameter against classical connectivity: at most
// vertex connectivity whenever n >= kappa + k (recorded as not applied
// otherwise), and at most arc connectivity unconditionally.
AuditReport audit_upper_bounds(const Digraph& d, int k, int enum_cap = kDefaultEnumCap);

// Checks the complement bounds on the arc parameter: sum at most n-1 and
// product at most floor(((n-1)/2)^2). Asserted for n >= 7; smaller digraphs
// are reported informatively with applied = false.
AuditReport audit_nordhaus_gaddum(const Digraph& d, int k, int enum_cap = kDefaultEnumCap);

// Each ordered pair becomes an arc independently with probability p;
// deterministic per seed.
Digraph random_digraph(int n, double p, std::uint64_t seed);

// Keeps each arc independently with probability 1/2; deterministic per seed.
Digraph random_spanning_subdigraph(const Digraph& d, std::uint64_t seed);

}  // namespace spp
