#pragma once

#include <string>
#include <vector>

#include "spp/digraph.hpp"

namespace spp {

// Vertex-count ceiling for exhaustive path enumeration. Callers working with
// deliberately larger instances (e.g. reduction outputs) pass an explicit cap.
inline constexpr int kDefaultEnumCap = 12;

// Terminal set S with a designated root r in S, |S| >= 2. S is kept sorted.
struct TerminalSpec {
  std::vector<int> S;
  int r = 0;
};

// Validates membership, range, and size; sorts and deduplicates S.
TerminalSpec make_terminal_spec(const Digraph& d, std::vector<int> S, int r);

using DirectedPath = std::vector<int>;

bool is_path(const Digraph& d, const DirectedPath& p);
// True iff p is a directed path of d starting at spec.r whose vertex set
// contains spec.S. The path may continue past the last terminal.
bool is_sr_path(const Digraph& d, const DirectedPath& p, const TerminalSpec& spec);
bool arc_disjoint(const DirectedPath& a, const DirectedPath& b);
// Arc-disjoint and sharing exactly the vertices of S.
bool internally_disjoint(const DirectedPath& a, const DirectedPath& b,
                         const std::vector<int>& S);

// All simple paths that start at spec.r, cover spec.S, and end at a vertex of
// S. Every S-covering path in d has exactly one of these as a prefix (cut at
// its last terminal), so packings over this set attain the same values as
// packings over all S-covering paths. Lexicographic emission order.
std::vector<DirectedPath> enumerate_sr_paths(const Digraph& d, const TerminalSpec& spec,
                                             int enum_cap = kDefaultEnumCap);

enum class PackingMode { kInternal, kArc };

std::string to_string(PackingMode mode);
PackingMode packing_mode_from_string(const std::string& text);

struct PackingCertificate {
  PackingMode mode = PackingMode::kInternal;
  TerminalSpec spec;
  std::vector<DirectedPath> paths;

  int value() const { return static_cast<int>(paths.size()); }
};

// Re-checks a certificate from scratch: every path an (S,r)-path, pairwise
// compatible under the certificate's mode.
bool validate_certificate(const Digraph& d, const PackingCertificate& cert);

// Exact maximum packing of pairwise-compatible (S,r)-paths, computed as a
// maximum clique over the enumerated path set.
PackingCertificate max_packing(const Digraph& d, const TerminalSpec& spec, PackingMode mode,
                               int enum_cap = kDefaultEnumCap);

// Value-only variant with early exit: returns the exact packing value if it
// is below stop_at, and stop_at otherwise.
int packing_value(const Digraph& d, const TerminalSpec& spec, PackingMode mode, int stop_at,
                  int enum_cap = kDefaultEnumCap);

struct ParameterResult {
  int value = 0;
  TerminalSpec witness;
};

// Minimum of the (S,r) packing value over all |S|=k and r in S, with the
// witness attaining it (lexicographically smallest S, then smallest r, among
// attainers). jobs > 1 splits the sweep; the result does not depend on jobs.
ParameterResult kappa_p_k(const Digraph& d, int k, int enum_cap = kDefaultEnumCap,
                          int jobs = 1);
ParameterResult lambda_p_k(const Digraph& d, int k, int enum_cap = kDefaultEnumCap,
                           int jobs = 1);

}  // namespace spp
