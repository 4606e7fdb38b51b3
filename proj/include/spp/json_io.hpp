#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "spp/audit.hpp"
#include "spp/constructions.hpp"
#include "spp/digraph.hpp"
#include "spp/gadgets.hpp"
#include "spp/packing.hpp"

namespace spp {

// Digraph schema: {"n": int, "arcs": [[tail, head], ...] sorted, "names"?:
// [string]}. Unknown keys are ignored on input; output is canonical (sorted
// keys, sorted arcs).
nlohmann::json digraph_to_json(const Digraph& d);

// Parses and validates a digraph. Loops and out-of-range endpoints are
// rejected; duplicate arcs are dropped with a warning to `warnings` when
// given.
Digraph digraph_from_json(const nlohmann::json& j, std::ostream* warnings = nullptr);

// Certificate schema: {"S", "mode", "paths", "r", "value"}.
nlohmann::json certificate_to_json(const PackingCertificate& cert);
PackingCertificate certificate_from_json(const Digraph& d, const nlohmann::json& j);

nlohmann::json report_to_json(const AuditReport& report);

// Decomposition output: the complete symmetric digraph plus its cycle list.
nlohmann::json decomposition_to_json(const HamiltonianDecomposition& decomp);

// Reduction output: {"digraph", "S", "r", "name_map"} plus "split" when a
// split map is given.
nlohmann::json gadget_to_json(const GadgetOutput& out, const SplitMap* split = nullptr);

// Canonical text form: 2-space indent, sorted keys, trailing newline.
std::string to_canonical_text(const nlohmann::json& j);

}  // namespace spp
