#include "spp/json_io.hpp"

#include <ostream>
#include <set>
#include <utility>
#include <vector>

#include "spp/errors.hpp"

namespace spp {

namespace {

int require_int(const nlohmann::json& j, const char* what) {
  if (!j.is_number_integer()) throw input_error(std::string(what) + " must be an integer");
  return j.get<int>();
}

}  // namespace

nlohmann::json digraph_to_json(const Digraph& d) {
  nlohmann::json j;
  j["n"] = d.n();
  auto arcs = nlohmann::json::array();
  for (const Arc& a : d.arcs()) arcs.push_back(nlohmann::json::array({a.tail, a.head}));
  j["arcs"] = std::move(arcs);
  if (d.names()) j["names"] = *d.names();
  return j;
}

Digraph digraph_from_json(const nlohmann::json& j, std::ostream* warnings) {
  if (!j.is_object()) throw input_error("digraph JSON must be an object");
  if (!j.contains("n")) throw input_error("digraph JSON lacks \"n\"");
  if (!j.contains("arcs") || !j["arcs"].is_array()) {
    throw input_error("digraph JSON lacks an \"arcs\" array");
  }
  const int n = require_int(j["n"], "\"n\"");
  if (n < 0) throw input_error("\"n\" must be nonnegative");

  std::vector<std::pair<int, int>> arcs;
  std::set<std::pair<int, int>> seen;
  int duplicates = 0;
  for (const auto& entry : j["arcs"]) {
    if (!entry.is_array() || entry.size() != 2) {
      throw input_error("each arc must be a [tail, head] pair");
    }
    const int tail = require_int(entry[0], "arc tail");
    const int head = require_int(entry[1], "arc head");
    if (seen.emplace(tail, head).second) {
      arcs.emplace_back(tail, head);
    } else {
      ++duplicates;
    }
  }
  if (duplicates > 0 && warnings) {
    *warnings << "warning: dropped " << duplicates << " duplicate arc"
              << (duplicates == 1 ? "" : "s") << "\n";
  }

  if (j.contains("names")) {
    if (!j["names"].is_array() || static_cast<int>(j["names"].size()) != n) {
      throw input_error("\"names\" must list one string per vertex");
    }
    std::vector<std::string> names;
    for (const auto& name : j["names"]) {
      if (!name.is_string()) throw input_error("\"names\" must list one string per vertex");
      names.push_back(name.get<std::string>());
    }
    return Digraph::from_arc_list(n, arcs, names);
  }
  return Digraph::from_arc_list(n, arcs);
}

nlohmann::json certificate_to_json(const PackingCertificate& cert) {
  nlohmann::json j;
  j["mode"] = to_string(cert.mode);
  j["value"] = cert.value();
  j["S"] = cert.spec.S;
  j["r"] = cert.spec.r;
  j["paths"] = cert.paths;
  return j;
}

PackingCertificate certificate_from_json(const Digraph& d, const nlohmann::json& j) {
  if (!j.is_object()) throw input_error("certificate JSON must be an object");
  for (const char* key : {"mode", "S", "r", "paths"}) {
    if (!j.contains(key)) throw input_error(std::string("certificate JSON lacks \"") + key + "\"");
  }
  PackingCertificate cert;
  cert.mode = packing_mode_from_string(j["mode"].get<std::string>());
  cert.spec = make_terminal_spec(d, j["S"].get<std::vector<int>>(), require_int(j["r"], "\"r\""));
  cert.paths = j["paths"].get<std::vector<DirectedPath>>();
  return cert;
}

nlohmann::json report_to_json(const AuditReport& report) {
  nlohmann::json j;
  j["n"] = report.n;
  j["arc_count"] = report.arc_count;
  j["k_values"] = report.k_values;
  j["pass"] = report.pass();
  auto claims = nlohmann::json::array();
  for (const ClaimResult& claim : report.claims) {
    nlohmann::json c;
    c["name"] = claim.name;
    c["applied"] = claim.applied;
    c["pass"] = claim.pass;
    c["detail"] = claim.detail;
    if (claim.witness) {
      c["witness"] = {{"S", claim.witness->S}, {"r", claim.witness->r}};
    }
    claims.push_back(std::move(c));
  }
  j["claims"] = std::move(claims);
  return j;
}

nlohmann::json decomposition_to_json(const HamiltonianDecomposition& decomp) {
  nlohmann::json j = digraph_to_json(complete_symmetric(decomp.n));
  j["cycles"] = decomp.cycles;
  return j;
}

nlohmann::json gadget_to_json(const GadgetOutput& out, const SplitMap* split) {
  nlohmann::json j;
  j["digraph"] = digraph_to_json(out.d);
  j["S"] = out.spec.S;
  j["r"] = out.spec.r;
  j["name_map"] = out.name_map;
  if (split) {
    auto pairs = nlohmann::json::array();
    for (const auto& [minus, plus] : split->pairs) {
      pairs.push_back(nlohmann::json::array({minus, plus}));
    }
    j["split"] = std::move(pairs);
  }
  return j;
}

std::string to_canonical_text(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace spp
