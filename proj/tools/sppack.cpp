#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spp/audit.hpp"
#include "spp/constructions.hpp"
#include "spp/digraph.hpp"
#include "spp/errors.hpp"
#include "spp/gadgets.hpp"
#include "spp/json_io.hpp"
#include "spp/packing.hpp"
#include "spp/symmetric.hpp"

namespace {

using nlohmann::json;

spp::Digraph load_digraph(const std::string& path) {
  json j;
  try {
    if (path.empty() || path == "-") {
      j = json::parse(std::cin);
    } else {
      std::ifstream in(path);
      if (!in) throw spp::input_error("cannot open " + path);
      j = json::parse(in);
    }
  } catch (const json::parse_error& e) {
    throw spp::input_error(std::string("malformed JSON: ") + e.what());
  }
  return spp::digraph_from_json(j, &std::cerr);
}

int resolve_cap(int flag_cap) {
  if (flag_cap > 0) return flag_cap;
  if (const char* env = std::getenv("SPPACK_ENUM_CAP")) {
    try {
      const int value = std::stoi(env);
      if (value > 0) return value;
    } catch (const std::exception&) {
    }
    throw spp::input_error("SPPACK_ENUM_CAP must be a positive integer");
  }
  return spp::kDefaultEnumCap;
}

void emit(const json& j, const std::string& out_path) {
  const std::string text = spp::to_canonical_text(j);
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw spp::input_error("cannot write " + out_path);
    out << text;
  }
}

json parameter_json(const spp::ParameterResult& result) {
  return json{{"value", result.value}, {"S", result.witness.S}, {"r", result.witness.r}};
}

int run_compute(const std::string& input, int k, int cap, int jobs) {
  const spp::Digraph d = load_digraph(input);
  json out;
  out["n"] = d.n();
  out["arc_count"] = d.arc_count();
  const auto [dplus, dminus] = d.min_degrees();
  out["min_out_degree"] = dplus;
  out["min_in_degree"] = dminus;
  const auto kappa = spp::vertex_connectivity_witness(d);
  out["kappa"] = kappa.value;
  out["kappa_cut"] = kappa.vertices;
  const auto lambda = spp::arc_connectivity_witness(d);
  out["lambda"] = lambda.value;
  json cut_arcs = json::array();
  for (const spp::Arc& a : lambda.arcs) cut_arcs.push_back(json::array({a.tail, a.head}));
  out["lambda_cut"] = std::move(cut_arcs);
  out["k"] = k;
  out["kappa_p"] = parameter_json(spp::kappa_p_k(d, k, cap, jobs));
  out["lambda_p"] = parameter_json(spp::lambda_p_k(d, k, cap, jobs));
  emit(out, "");
  return 0;
}

int run_packing(const std::string& input, const std::vector<int>& s, int r,
                const std::string& mode, int cap) {
  const spp::Digraph d = load_digraph(input);
  const spp::TerminalSpec spec = spp::make_terminal_spec(d, s, r);
  const spp::PackingCertificate cert =
      spp::max_packing(d, spec, spp::packing_mode_from_string(mode), cap);
  if (!spp::validate_certificate(d, cert)) {
    throw std::logic_error("computed certificate failed validation");
  }
  emit(spp::certificate_to_json(cert), "");
  return 0;
}

int run_decide(const std::string& input, const std::vector<int>& s, int r, int ell,
               const std::string& expect, bool deterministic, int jobs) {
  const spp::Digraph d = load_digraph(input);
  const spp::TerminalSpec spec = spp::make_terminal_spec(d, s, r);
  spp::DecideOptions opts;
  opts.deterministic = deterministic;
  opts.jobs = jobs;
  const spp::DecisionResult result = spp::decide_kappa_at_least(d, spec, ell, opts);
  json out;
  out["ell"] = ell;
  out["yes"] = result.yes;
  if (result.certificate) {
    if (!spp::validate_certificate(d, *result.certificate)) {
      throw std::logic_error("decision certificate failed validation");
    }
    out["certificate"] = spp::certificate_to_json(*result.certificate);
  } else {
    out["certificate"] = nullptr;
  }
  emit(out, "");
  if (!expect.empty()) {
    const bool expected = expect == "true";
    if (result.yes != expected) return 1;
  }
  return 0;
}

int run_reduce(const std::string& input, const std::string& variant,
               const std::vector<int>& terminals, int k, int ell, const std::string& out_path) {
  const spp::Digraph h = load_digraph(input);
  const spp::LinkageInstance inst =
      spp::make_linkage_instance(h, terminals[0], terminals[1], terminals[2], terminals[3]);
  if (variant == "internal") {
    const spp::GadgetOutput gadget = spp::build_internal_gadget(inst, k, ell);
    emit(spp::gadget_to_json(gadget), out_path);
  } else {
    const auto [gadget, split] = spp::build_arc_gadget(inst, k, ell);
    emit(spp::gadget_to_json(gadget, &split), out_path);
  }
  return 0;
}

int run_audit(const std::string& input, const std::vector<double>& random_spec, int k,
              const std::vector<std::string>& claims, std::uint64_t seed, int cap) {
  std::vector<std::pair<std::string, spp::Digraph>> instances;
  if (!input.empty() && !random_spec.empty()) {
    throw spp::input_error("pass either --input or --random, not both");
  }
  if (!random_spec.empty()) {
    if (random_spec.size() != 4) throw spp::input_error("--random needs n,p,count,seed");
    const int n = static_cast<int>(random_spec[0]);
    const double p = random_spec[1];
    const int count = static_cast<int>(random_spec[2]);
    const auto base_seed = static_cast<std::uint64_t>(random_spec[3]);
    if (count < 1) throw spp::input_error("--random count must be positive");
    for (int i = 0; i < count; ++i) {
      instances.emplace_back("random[" + std::to_string(i) + "]",
                             spp::random_digraph(n, p, base_seed + i));
    }
  } else {
    instances.emplace_back("input", load_digraph(input));
  }

  const auto wants = [&](const std::string& name) {
    return claims.empty() || std::find(claims.begin(), claims.end(), name) != claims.end();
  };

  json results = json::array();
  bool all_pass = true;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const spp::Digraph& d = instances[i].second;
    json entry;
    entry["source"] = instances[i].first;
    entry["n"] = d.n();
    entry["arc_count"] = d.arc_count();
    if (wants("mono")) {
      const spp::AuditReport r = spp::audit_monotonicity(d, k, seed + i, cap);
      all_pass = all_pass && r.pass();
      entry["monotonicity"] = spp::report_to_json(r);
    }
    if (wants("bounds")) {
      const spp::AuditReport r = spp::audit_upper_bounds(d, k, cap);
      all_pass = all_pass && r.pass();
      entry["upper_bounds"] = spp::report_to_json(r);
    }
    if (wants("ng")) {
      const spp::AuditReport r = spp::audit_nordhaus_gaddum(d, k, cap);
      all_pass = all_pass && r.pass();
      entry["nordhaus_gaddum"] = spp::report_to_json(r);
    }
    results.push_back(std::move(entry));
  }

  json out;
  out["digraphs"] = instances.size();
  out["pass"] = all_pass;
  out["results"] = std::move(results);
  emit(out, "");
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Directed Steiner path packing toolkit"};
  app.require_subcommand(1);

  std::string input;
  std::string out_path;
  int k = 2;
  int ell = 2;
  int cap_flag = 0;
  int jobs = 1;
  bool deterministic = true;
  std::vector<int> s_list;
  int root = 0;
  std::string mode = "internal";
  std::string expect;
  std::string variant;
  std::vector<int> terminals;
  std::vector<double> random_spec;
  std::vector<std::string> claims;
  std::uint64_t seed = 1;
  int construct_n = 0;

  int exit_code = 0;

  auto* compute = app.add_subcommand("compute", "Connectivity and packing parameters");
  compute->add_option("--input", input, "digraph JSON file (default: standard input)");
  compute->add_option("--k", k, "terminal set size")->check(CLI::Range(2, 64));
  compute->add_option("--cap", cap_flag, "enumeration cap override");
  compute->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));
  compute->add_flag("--deterministic,!--racy", deterministic, "stable output order (default)");
  compute->callback([&] { exit_code = run_compute(input, k, resolve_cap(cap_flag), jobs); });

  auto* packing = app.add_subcommand("packing", "Maximum disjoint path packing certificate");
  packing->add_option("--input", input, "digraph JSON file (default: standard input)");
  packing->add_option("--s", s_list, "terminal vertices")->delimiter(',')->required();
  packing->add_option("--r", root, "root vertex")->required();
  packing->add_option("--mode", mode, "internal|arc")
      ->check(CLI::IsMember({"internal", "arc"}));
  packing->add_option("--cap", cap_flag, "enumeration cap override");
  packing->add_flag("--deterministic,!--racy", deterministic, "stable output order (default)");
  packing->callback(
      [&] { exit_code = run_packing(input, s_list, root, mode, resolve_cap(cap_flag)); });

  auto* decide = app.add_subcommand("decide-kappa",
                                    "Decide internal packing value >= ell (symmetric digraphs)");
  decide->add_option("--input", input, "digraph JSON file (default: standard input)");
  decide->add_option("--s", s_list, "terminal vertices")->delimiter(',')->required();
  decide->add_option("--r", root, "root vertex")->required();
  decide->add_option("--ell", ell, "threshold")->required();
  decide->add_option("--expect", expect, "fail (exit 1) unless the answer matches")
      ->check(CLI::IsMember({"true", "false"}));
  decide->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));
  decide->add_flag("--deterministic,!--racy", deterministic,
                   "first-found certificate in a fixed order (default)");
  decide->callback(
      [&] { exit_code = run_decide(input, s_list, root, ell, expect, deterministic, jobs); });

  auto* reduce = app.add_subcommand("reduce", "Build a 2-linkage reduction gadget");
  reduce->add_option("--input", input, "Eulerian digraph JSON file (default: standard input)");
  reduce->add_option("--variant", variant, "internal|arc")
      ->check(CLI::IsMember({"internal", "arc"}))
      ->required();
  reduce->add_option("--terminals", terminals, "s1,t1,s2,t2")
      ->delimiter(',')
      ->expected(4)
      ->required();
  reduce->add_option("--k", k, "terminal count of the gadget")->default_val(3);
  reduce->add_option("--ell", ell, "packing threshold of the gadget")->default_val(2);
  reduce->add_option("--out", out_path, "output file (default: standard output)");
  reduce->add_flag("--deterministic,!--racy", deterministic, "accepted for uniformity");
  reduce->callback(
      [&] { exit_code = run_reduce(input, variant, terminals, k, ell, out_path); });

  auto* construct = app.add_subcommand("construct", "Built-in digraph families");
  construct->require_subcommand(1);
  auto add_n = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("--n", construct_n, "vertex count");
    if (required) opt->required();
  };
  auto* c_complete = construct->add_subcommand("complete", "complete symmetric digraph");
  add_n(c_complete);
  c_complete->callback([&] { emit(spp::digraph_to_json(spp::complete_symmetric(construct_n)), ""); });
  auto* c_tillson = construct->add_subcommand("tillson", "Hamiltonian decomposition");
  add_n(c_tillson);
  c_tillson->callback(
      [&] { emit(spp::decomposition_to_json(spp::tillson_decomposition(construct_n)), ""); });
  auto* c_example = construct->add_subcommand("example1", "8-vertex layered digraph");
  c_example->callback([&] { emit(spp::digraph_to_json(spp::example1()), ""); });
  auto* c_tournament = construct->add_subcommand("tournament", "transitive tournament");
  add_n(c_tournament);
  c_tournament->callback(
      [&] { emit(spp::digraph_to_json(spp::transitive_tournament(construct_n)), ""); });
  auto* c_half = construct->add_subcommand("half", "half of a Hamiltonian decomposition");
  add_n(c_half);
  c_half->callback(
      [&] { emit(spp::digraph_to_json(spp::half_decomposition_digraph(construct_n)), ""); });
  for (auto* sub : {c_complete, c_tillson, c_example, c_tournament, c_half}) {
    sub->add_flag("--deterministic,!--racy", deterministic, "accepted for uniformity");
  }

  auto* audit = app.add_subcommand("audit", "Check the parameter inequalities");
  audit->add_option("--input", input, "digraph JSON file");
  audit->add_option("--random", random_spec, "n,p,count,seed instance generator")
      ->delimiter(',')
      ->expected(4);
  audit->add_option("--k", k, "terminal set size (and kmax for monotonicity)")
      ->check(CLI::Range(2, 64));
  audit->add_option("--claims", claims, "subset of mono,bounds,ng (default: all)")
      ->delimiter(',')
      ->check(CLI::IsMember({"mono", "bounds", "ng"}));
  audit->add_option("--seed", seed, "seed for the spanning-subdigraph check");
  audit->add_option("--cap", cap_flag, "enumeration cap override");
  audit->add_flag("--deterministic,!--racy", deterministic, "accepted for uniformity");
  audit->callback([&] {
    exit_code = run_audit(input, random_spec, k, claims, seed, resolve_cap(cap_flag));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const spp::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const spp::resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
