#include "spp/audit.hpp"

#include <algorithm>

#include "spp/errors.hpp"
#include "spp/rng.hpp"

namespace spp {

namespace {

std::string spec_text(const TerminalSpec& spec) {
  std::string out = "S={";
  for (std::size_t i = 0; i < spec.S.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(spec.S[i]);
  }
  out += "}, r=" + std::to_string(spec.r);
  return out;
}

ClaimResult comparison(std::string name, int lhs, int rhs, std::string detail,
                       std::optional<TerminalSpec> witness) {
  ClaimResult claim;
  claim.name = std::move(name);
  claim.pass = lhs <= rhs;
  claim.detail = std::move(detail);
  if (!claim.pass) claim.witness = std::move(witness);
  return claim;
}

}  // namespace

bool AuditReport::pass() const {
  return std::all_of(claims.begin(), claims.end(),
                     [](const ClaimResult& c) { return c.pass; });
}

AuditReport audit_monotonicity(const Digraph& d, int kmax, std::uint64_t seed, int enum_cap) {
  if (kmax < 2) throw input_error("monotonicity audit needs kmax >= 2");
  if (kmax > d.n()) throw input_error("kmax exceeds vertex count");

  AuditReport report;
  report.n = d.n();
  report.arc_count = d.arc_count();
  for (int k = 2; k <= kmax; ++k) report.k_values.push_back(k);

  std::vector<ParameterResult> kappa(kmax + 1), lambda(kmax + 1);
  for (int k = 2; k <= kmax; ++k) {
    kappa[k] = kappa_p_k(d, k, enum_cap);
    lambda[k] = lambda_p_k(d, k, enum_cap);
  }

  for (int k = 2; k < kmax; ++k) {
    report.claims.push_back(comparison(
        "lambda-monotone-k" + std::to_string(k), lambda[k + 1].value, lambda[k].value,
        "lambda_p_" + std::to_string(k + 1) + "=" + std::to_string(lambda[k + 1].value) +
            " <= lambda_p_" + std::to_string(k) + "=" + std::to_string(lambda[k].value),
        lambda[k].witness));
  }

  const Digraph sub = random_spanning_subdigraph(d, seed);
  for (int k = 2; k <= kmax; ++k) {
    const ParameterResult sub_kappa = kappa_p_k(sub, k, enum_cap);
    const ParameterResult sub_lambda = lambda_p_k(sub, k, enum_cap);
    report.claims.push_back(comparison(
        "subdigraph-kappa-k" + std::to_string(k), sub_kappa.value, kappa[k].value,
        "subdigraph (" + std::to_string(sub.arc_count()) + " arcs, seed " +
            std::to_string(seed) + ") kappa_p=" + std::to_string(sub_kappa.value) +
            " <= " + std::to_string(kappa[k].value),
        kappa[k].witness));
    report.claims.push_back(comparison(
        "subdigraph-lambda-k" + std::to_string(k), sub_lambda.value, lambda[k].value,
        "subdigraph (" + std::to_string(sub.arc_count()) + " arcs, seed " +
            std::to_string(seed) + ") lambda_p=" + std::to_string(sub_lambda.value) +
            " <= " + std::to_string(lambda[k].value),
        lambda[k].witness));
  }

  const auto [dplus, dminus] = d.min_degrees();
  const int min_degree = std::min(dplus, dminus);
  for (int k = 2; k <= kmax; ++k) {
    report.claims.push_back(comparison(
        "kappa-le-lambda-k" + std::to_string(k), kappa[k].value, lambda[k].value,
        "kappa_p=" + std::to_string(kappa[k].value) +
            " <= lambda_p=" + std::to_string(lambda[k].value) + " (" +
            spec_text(kappa[k].witness) + ")",
        kappa[k].witness));
    report.claims.push_back(comparison(
        "lambda-le-mindeg-k" + std::to_string(k), lambda[k].value, min_degree,
        "lambda_p=" + std::to_string(lambda[k].value) +
            " <= min degree=" + std::to_string(min_degree),
        lambda[k].witness));
  }

  {
    const int classic = vertex_connectivity(d);
    ClaimResult claim;
    claim.name = "kappa2-definition";
    claim.pass = kappa[2].value == classic;
    claim.detail = "kappa_p_2=" + std::to_string(kappa[2].value) +
                   " == kappa=" + std::to_string(classic);
    if (!claim.pass) claim.witness = kappa[2].witness;
    report.claims.push_back(std::move(claim));
  }
  {
    const int classic = arc_connectivity(d);
    ClaimResult claim;
    claim.name = "lambda2-definition";
    claim.pass = lambda[2].value == classic;
    claim.detail = "lambda_p_2=" + std::to_string(lambda[2].value) +
                   " == lambda=" + std::to_string(classic);
    if (!claim.pass) claim.witness = lambda[2].witness;
    report.claims.push_back(std::move(claim));
  }

  return report;
}

AuditReport audit_upper_bounds(const Digraph& d, int k, int enum_cap) {
  AuditReport report;
  report.n = d.n();
  report.arc_count = d.arc_count();
  report.k_values.push_back(k);

  const ParameterResult kp = kappa_p_k(d, k, enum_cap);
  const int kappa = vertex_connectivity(d);
  const int lambda = arc_connectivity(d);

  {
    ClaimResult claim;
    claim.name = "kappa-bound";
    claim.applied = d.n() >= kappa + k;
    claim.pass = !claim.applied || kp.value <= kappa;
    claim.detail = "kappa_p_" + std::to_string(k) + "=" + std::to_string(kp.value) +
                   " <= kappa=" + std::to_string(kappa) +
                   (claim.applied ? "" : " (skipped: n < kappa + k)");
    if (!claim.pass) claim.witness = kp.witness;
    report.claims.push_back(std::move(claim));
  }
  report.claims.push_back(comparison(
      "lambda-bound", kp.value, lambda,
      "kappa_p_" + std::to_string(k) + "=" + std::to_string(kp.value) +
          " <= lambda=" + std::to_string(lambda),
      kp.witness));
  return report;
}

AuditReport audit_nordhaus_gaddum(const Digraph& d, int k, int enum_cap) {
  AuditReport report;
  report.n = d.n();
  report.arc_count = d.arc_count();
  report.k_values.push_back(k);

  const Digraph comp = d.complement();
  const ParameterResult own = lambda_p_k(d, k, enum_cap);
  const ParameterResult other = lambda_p_k(comp, k, enum_cap);
  const int n = d.n();
  const bool asserted = n >= 7;
  const int sum = own.value + other.value;
  const int product = own.value * other.value;
  const int sum_cap = n - 1;
  const int product_cap = (n - 1) * (n - 1) / 4;

  {
    ClaimResult claim;
    claim.name = "complement-sum";
    claim.applied = asserted;
    claim.pass = !asserted || sum <= sum_cap;
    claim.detail = std::to_string(own.value) + " + " + std::to_string(other.value) + " = " +
                   std::to_string(sum) + " <= " + std::to_string(sum_cap) +
                   (asserted ? "" : " (informative: n < 7)");
    if (!claim.pass) claim.witness = own.witness;
    report.claims.push_back(std::move(claim));
  }
  {
    ClaimResult claim;
    claim.name = "complement-product";
    claim.applied = asserted;
    claim.pass = !asserted || product <= product_cap;
    claim.detail = std::to_string(own.value) + " * " + std::to_string(other.value) + " = " +
                   std::to_string(product) + " <= " + std::to_string(product_cap) +
                   (asserted ? "" : " (informative: n < 7)");
    if (!claim.pass) claim.witness = own.witness;
    report.claims.push_back(std::move(claim));
  }
  return report;
}

Digraph random_digraph(int n, double p, std::uint64_t seed) {
  if (n < 1) throw input_error("random digraph needs n >= 1");
  if (p < 0.0 || p > 1.0) throw input_error("arc probability must lie in [0,1]");
  Rng rng(seed);
  std::vector<std::pair<int, int>> arcs;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      if (rng.next_unit() < p) arcs.emplace_back(u, v);
    }
  }
  return Digraph::from_arc_list(n, arcs);
}

Digraph random_spanning_subdigraph(const Digraph& d, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::pair<int, int>> arcs;
  for (const Arc& a : d.arcs()) {
    if (rng.next_bool(0.5)) arcs.emplace_back(a.tail, a.head);
  }
  return Digraph::from_arc_list(d.n(), arcs);
}

}  // namespace spp
