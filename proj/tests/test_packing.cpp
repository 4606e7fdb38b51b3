#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "spp/audit.hpp"
#include "spp/constructions.hpp"
#include "spp/digraph.hpp"
#include "spp/errors.hpp"
#include "spp/packing.hpp"

using spp::Digraph;
using spp::PackingMode;

namespace {

Digraph sample(std::uint64_t seed, int n, double p) { return spp::random_digraph(n, p, seed); }

}  // namespace

TEST_SUITE("packing") {
  TEST_CASE("terminal spec validation") {
    const Digraph d = spp::complete_symmetric(4);
    const auto spec = spp::make_terminal_spec(d, {3, 1, 3}, 3);
    CHECK(spec.S == std::vector<int>{1, 3});
    CHECK(spec.r == 3);
    CHECK_THROWS_AS(spp::make_terminal_spec(d, {0, 1}, 2), spp::input_error);   // r not in S
    CHECK_THROWS_AS(spp::make_terminal_spec(d, {0, 4}, 0), spp::input_error);   // out of range
    CHECK_THROWS_AS(spp::make_terminal_spec(d, {2, 2}, 2), spp::input_error);   // |S| < 2
  }

  TEST_CASE("path predicates") {
    const Digraph d = Digraph::from_arc_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
    CHECK(spp::is_path(d, {0, 1, 2, 3}));
    CHECK(spp::is_path(d, {2}));
    CHECK_FALSE(spp::is_path(d, {}));
    CHECK_FALSE(spp::is_path(d, {0, 2, 1}));     // missing arc 2->1
    CHECK_FALSE(spp::is_path(d, {0, 1, 2, 3, 0}));  // repeated vertex

    const auto spec = spp::make_terminal_spec(d, {0, 2}, 0);
    CHECK(spp::is_sr_path(d, {0, 1, 2}, spec));
    CHECK(spp::is_sr_path(d, {0, 2, 3}, spec));  // may continue past the last terminal
    CHECK_FALSE(spp::is_sr_path(d, {0, 1}, spec));
    CHECK_FALSE(spp::is_sr_path(d, {1, 2}, spec));

    CHECK(spp::arc_disjoint({0, 1, 2}, {0, 2, 3}));
    CHECK_FALSE(spp::arc_disjoint({0, 1, 2}, {3, 0, 1}));

    CHECK(spp::internally_disjoint({0, 1, 2}, {0, 2}, {0, 2}));
    CHECK_FALSE(spp::internally_disjoint({0, 1, 2}, {0, 1, 2}, {0, 2}));  // shares arcs
    CHECK_FALSE(spp::internally_disjoint({0, 1, 2}, {3, 1, 0, 2}, {0, 2}));  // shares 1
  }

  TEST_CASE("enumeration matches the oracle path set") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      const Digraph d = sample(seed * 5, 6, 0.35);
      const auto spec = spp::make_terminal_spec(d, {0, 1 + static_cast<int>(seed % 5)}, 0);
      const auto mine = spp::enumerate_sr_paths(d, spec);
      CHECK(std::is_sorted(mine.begin(), mine.end()));

      const auto all = oracle::sr_paths(d, spec.S, spec.r);
      std::set<std::vector<int>> expected;
      for (const auto& p : all) {
        if (std::binary_search(spec.S.begin(), spec.S.end(), p.back())) expected.insert(p);
      }
      CHECK(std::set<std::vector<int>>(mine.begin(), mine.end()) == expected);

      // Every covering path truncates onto an enumerated one.
      std::set<std::vector<int>> mine_set(mine.begin(), mine.end());
      for (auto p : all) {
        while (!std::binary_search(spec.S.begin(), spec.S.end(), p.back())) p.pop_back();
        CHECK(mine_set.count(p) == 1);
      }
    }
  }

  TEST_CASE("enumeration cap") {
    std::vector<std::pair<int, int>> ring;
    for (int v = 0; v < 13; ++v) ring.emplace_back(v, (v + 1) % 13);
    const Digraph big = Digraph::from_arc_list(13, ring);
    const auto spec = spp::make_terminal_spec(big, {0, 1}, 0);
    CHECK_THROWS_AS(spp::enumerate_sr_paths(big, spec), spp::resource_error);
    CHECK(spp::enumerate_sr_paths(big, spec, 13).size() == 1);
    CHECK_THROWS_AS(spp::kappa_p_k(big, 2), spp::resource_error);
  }

  TEST_CASE("certificate validation") {
    const Digraph d = spp::complete_symmetric(5);
    const auto spec = spp::make_terminal_spec(d, {0, 2}, 0);
    spp::PackingCertificate good{PackingMode::kInternal, spec, {{0, 2}, {0, 1, 2}, {0, 3, 2}}};
    CHECK(spp::validate_certificate(d, good));

    spp::PackingCertificate wrong_root{PackingMode::kInternal, spec, {{2, 0}}};
    CHECK_FALSE(spp::validate_certificate(d, wrong_root));

    spp::PackingCertificate missing_terminal{PackingMode::kInternal, spec, {{0, 1}}};
    CHECK_FALSE(spp::validate_certificate(d, missing_terminal));

    spp::PackingCertificate shared_arc{PackingMode::kArc, spec, {{0, 1, 2}, {0, 1, 3, 2}}};
    CHECK_FALSE(spp::validate_certificate(d, shared_arc));

    // Arc-disjoint but meeting at the interior vertex 1: a valid arc-mode
    // packing that internal mode must reject.
    spp::PackingCertificate shared_internal{PackingMode::kInternal, spec,
                                            {{0, 1, 2}, {0, 3, 1, 4, 2}}};
    CHECK_FALSE(spp::validate_certificate(d, shared_internal));
    spp::PackingCertificate arc_ok{PackingMode::kArc, spec, {{0, 1, 2}, {0, 3, 1, 4, 2}}};
    CHECK(spp::validate_certificate(d, arc_ok));

    spp::PackingCertificate not_a_path{PackingMode::kArc, spec, {{0, 2, 2}}};
    CHECK_FALSE(spp::validate_certificate(d, not_a_path));
  }

  TEST_CASE("max packing agrees with the take-skip oracle") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      const Digraph d = sample(seed * 17 + 3, 6, 0.3 + 0.01 * static_cast<double>(seed % 4));
      const int other = 1 + static_cast<int>(seed % 5);
      const auto spec = spp::make_terminal_spec(d, {0, other, (other % 5) + 1 == other ? 5 : (other % 5) + 1}, 0);
      for (const PackingMode mode : {PackingMode::kInternal, PackingMode::kArc}) {
        const auto cert = spp::max_packing(d, spec, mode);
        CHECK(spp::validate_certificate(d, cert));
        CHECK(cert.value() == oracle::max_packing(d, spec.S, spec.r, mode));
        CHECK(std::is_sorted(cert.paths.begin(), cert.paths.end()));
      }
    }
  }

  TEST_CASE("packing_value clamps at stop_at") {
    const Digraph d = spp::complete_symmetric(6);
    const auto spec = spp::make_terminal_spec(d, {0, 3}, 0);
    const int exact = spp::max_packing(d, spec, PackingMode::kInternal).value();
    CHECK(exact == 5);
    CHECK(spp::packing_value(d, spec, PackingMode::kInternal, 3) == 3);
    CHECK(spp::packing_value(d, spec, PackingMode::kInternal, 5) == 5);
    CHECK(spp::packing_value(d, spec, PackingMode::kInternal, 99) == 5);
    CHECK(spp::packing_value(d, spec, PackingMode::kInternal, 0) == 0);
  }

  TEST_CASE("parameter sweep agrees with the oracle") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
      const Digraph d = sample(seed * 29 + 7, 5, 0.35);
      for (int k = 2; k <= 4; ++k) {
        CHECK(spp::kappa_p_k(d, k).value == oracle::kappa_p_k(d, k));
        CHECK(spp::lambda_p_k(d, k).value == oracle::lambda_p_k(d, k));
      }
    }
  }

  TEST_CASE("parameter witness attains the minimum") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
      const Digraph d = sample(seed * 41 + 11, 6, 0.3);
      for (int k = 2; k <= 3; ++k) {
        const auto kp = spp::kappa_p_k(d, k);
        CHECK(spp::max_packing(d, kp.witness, PackingMode::kInternal).value() == kp.value);
        const auto lp = spp::lambda_p_k(d, k);
        CHECK(spp::max_packing(d, lp.witness, PackingMode::kArc).value() == lp.value);
      }
    }
  }

  TEST_CASE("k=2 parameters equal classical connectivity") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      const Digraph d = sample(seed * 101 + 13, 6, 0.2 + 0.05 * static_cast<double>(seed % 7));
      CHECK(spp::kappa_p_k(d, 2).value == spp::vertex_connectivity(d));
      CHECK(spp::lambda_p_k(d, 2).value == spp::arc_connectivity(d));
    }
  }

  TEST_CASE("sweep is independent of the job count") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
      const Digraph d = sample(seed * 59 + 5, 7, 0.3);
      for (int k : {2, 3}) {
        const auto solo_k = spp::kappa_p_k(d, k, spp::kDefaultEnumCap, 1);
        const auto multi_k = spp::kappa_p_k(d, k, spp::kDefaultEnumCap, 4);
        CHECK(solo_k.value == multi_k.value);
        CHECK(solo_k.witness.S == multi_k.witness.S);
        CHECK(solo_k.witness.r == multi_k.witness.r);
        const auto solo_l = spp::lambda_p_k(d, k, spp::kDefaultEnumCap, 1);
        const auto multi_l = spp::lambda_p_k(d, k, spp::kDefaultEnumCap, 4);
        CHECK(solo_l.value == multi_l.value);
        CHECK(solo_l.witness.S == multi_l.witness.S);
        CHECK(solo_l.witness.r == multi_l.witness.r);
      }
    }
  }

  TEST_CASE("parameter bounds and edge digraphs") {
    const Digraph arcless = Digraph::from_arc_list(5, {});
    CHECK(spp::kappa_p_k(arcless, 2).value == 0);
    CHECK(spp::lambda_p_k(arcless, 3).value == 0);
    CHECK(spp::kappa_p_k(spp::transitive_tournament(4), 3).value == 0);

    const Digraph k5 = spp::complete_symmetric(5);
    for (int k = 2; k <= 5; ++k) {
      CHECK(spp::lambda_p_k(k5, k).value == 4);
    }
    CHECK_THROWS_AS(spp::kappa_p_k(k5, 1), spp::input_error);
    CHECK_THROWS_AS(spp::kappa_p_k(k5, 6), spp::input_error);
  }
}
