#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "spp/constructions.hpp"
#include "spp/digraph.hpp"
#include "spp/errors.hpp"
#include "spp/packing.hpp"
#include "spp/rng.hpp"
#include "spp/symmetric.hpp"

using spp::Arc;
using spp::Digraph;

namespace {

// Random symmetric digraph: each unordered pair becomes a digon with
// probability p.
Digraph random_symmetric(int n, double p, std::uint64_t seed) {
  spp::Rng rng(seed);
  std::vector<std::pair<int, int>> arcs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.next_unit() < p) {
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
      }
    }
  }
  return Digraph::from_arc_list(n, arcs);
}

}  // namespace

TEST_SUITE("symmetric") {
  TEST_CASE("skeleton extraction") {
    const auto sk = spp::skeleton_of({2, 5, 0, 3, 1}, {2, 0, 1});
    CHECK(sk.order == std::vector<int>{2, 0, 1});
    CHECK_THROWS_AS(spp::skeleton_of({2, 5, 3}, {2, 0}), spp::input_error);  // 0 missing
    CHECK_THROWS_AS(spp::skeleton_of({5, 2, 0}, {2, 0}), spp::input_error);  // starts off S
    CHECK_THROWS_AS(spp::skeleton_of({}, {0}), spp::input_error);
  }

  TEST_CASE("skeleton enumeration is lexicographic over the tail") {
    const Digraph d = spp::complete_symmetric(5);
    const auto spec = spp::make_terminal_spec(d, {1, 2, 4}, 2);
    const auto sks = spp::enumerate_skeletons(spec);
    REQUIRE(sks.size() == 2);
    CHECK(sks[0].order == std::vector<int>{2, 1, 4});
    CHECK(sks[1].order == std::vector<int>{2, 4, 1});

    const auto spec4 = spp::make_terminal_spec(d, {0, 1, 2, 3}, 1);
    const auto sks4 = spp::enumerate_skeletons(spec4);
    CHECK(sks4.size() == 6);
    for (const auto& sk : sks4) CHECK(sk.order.front() == 1);
    CHECK(std::all_of(sks4.begin(), sks4.end(), [](const spp::Skeleton& sk) {
      return std::set<int>(sk.order.begin(), sk.order.end()).size() == 4;
    }));
  }

  TEST_CASE("partition enumerator covers the labeled space") {
    const std::vector<Arc> arcs{Arc{0, 1}, Arc{1, 0}, Arc{1, 2}};
    spp::PartitionEnumerator parts(arcs, 2);
    CHECK(parts.total() == 27);
    std::set<std::vector<std::size_t>> seen;
    int count = 0;
    while (auto p = parts.next()) {
      REQUIRE(p->parts.size() == 3);
      std::vector<std::size_t> signature;
      std::size_t placed = 0;
      for (const auto& part : p->parts) {
        signature.push_back(part.size());
        placed += part.size();
        CHECK(std::is_sorted(part.begin(), part.end()));
      }
      CHECK(placed == arcs.size());
      ++count;
      // Signature alone is not unique; fold in the first part's content.
      std::vector<std::size_t> key = signature;
      for (const Arc& a : p->parts[0]) {
        key.push_back(static_cast<std::size_t>(a.tail * 10 + a.head));
      }
      seen.insert(key);
    }
    CHECK(count == 27);
    CHECK(parts.at(0).parts[0].size() == 3);  // first assignment: everything unused
    CHECK_THROWS_AS(spp::PartitionEnumerator({}, 0), spp::input_error);
  }

  TEST_CASE("routing finds disjoint detours and respects bounds") {
    // Two disjoint two-hop routes plus a direct arc.
    const Digraph d = Digraph::from_arc_list(
        7, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {4, 5}, {2, 0}, {1, 2}, {3, 0}, {1, 3}, {5, 4}});
    spp::RoutingRequest two;
    two.pairs = {{0, 1}, {0, 1}};
    const auto routed = spp::route_disjoint(d, two);
    REQUIRE(routed.has_value());
    CHECK((*routed)[0].front() == 0);
    CHECK((*routed)[0].back() == 1);
    std::set<int> internals;
    for (const auto& path : *routed) {
      for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        CHECK(internals.insert(path[i]).second);  // internally disjoint
      }
    }

    spp::RoutingRequest three;
    three.pairs = {{0, 1}, {0, 1}, {0, 1}};
    CHECK_FALSE(spp::route_disjoint(d, three).has_value());

    spp::RoutingRequest direct;
    direct.pairs = {{4, 5}};
    const auto single = spp::route_disjoint(d, direct);
    REQUIRE(single.has_value());
    CHECK((*single)[0] == spp::DirectedPath{4, 5});

    spp::RoutingRequest forbidden;
    forbidden.pairs = {{0, 1}};
    forbidden.forbidden = {2, 3};
    CHECK_FALSE(spp::route_disjoint(d, forbidden).has_value());

    spp::RoutingRequest overflow;
    for (int i = 0; i < 17; ++i) overflow.pairs.emplace_back(0, 1);
    CHECK_THROWS_AS(spp::route_disjoint(d, overflow), spp::resource_error);

    CHECK_THROWS_AS(spp::route_disjoint(spp::transitive_tournament(3), direct),
                    spp::input_error);  // not symmetric
  }

  TEST_CASE("decide_partition validates its partition") {
    const Digraph d = spp::complete_symmetric(5);
    const auto spec = spp::make_terminal_spec(d, {0, 1, 2}, 0);
    const auto in_s = d.induced_arcs(spec.S);

    // One path, no arcs inside S: it must detour through 3 and 4.
    spp::ArcPartition all_unused;
    all_unused.parts.assign(2, {});
    all_unused.parts[0] = in_s;
    const auto detoured = spp::decide_partition(d, spec, 1, all_unused);
    REQUIRE(detoured.has_value());
    REQUIRE(detoured->paths.size() == 1);
    for (std::size_t i = 0; i + 1 < detoured->paths[0].size(); ++i) {
      const int u = detoured->paths[0][i], v = detoured->paths[0][i + 1];
      CHECK((u > 2 || v > 2));  // no arc with both endpoints in S
    }

    spp::ArcPartition missing;
    missing.parts.assign(3, {});
    CHECK_THROWS_AS(spp::decide_partition(d, spec, 2, missing), spp::input_error);

    spp::ArcPartition doubled;
    doubled.parts.assign(3, {});
    doubled.parts[0] = in_s;
    doubled.parts[1] = {in_s.front()};
    CHECK_THROWS_AS(spp::decide_partition(d, spec, 2, doubled), spp::input_error);

    spp::ArcPartition wrong_count;
    wrong_count.parts.assign(2, {});
    wrong_count.parts[0] = in_s;
    CHECK_THROWS_AS(spp::decide_partition(d, spec, 2, wrong_count), spp::input_error);

    const auto tt_spec = spp::make_terminal_spec(spp::transitive_tournament(5), {0, 1, 2}, 0);
    spp::ArcPartition tt_parts;
    tt_parts.parts.assign(3, {});
    CHECK_THROWS_AS(
        spp::decide_partition(spp::transitive_tournament(5), tt_spec, 2, tt_parts),
        spp::input_error);  // not symmetric
  }

  TEST_CASE("partition sweep matches the packing value") {
    // Bidirected 5-cycle, S = {0,1,4}: every covering path is Hamiltonian, so
    // two of them always share interior vertices and the true value is 1.
    std::vector<std::pair<int, int>> arcs;
    for (int v = 0; v < 5; ++v) {
      arcs.emplace_back(v, (v + 1) % 5);
      arcs.emplace_back((v + 1) % 5, v);
    }
    const Digraph c5 = Digraph::from_arc_list(5, arcs);
    const auto spec = spp::make_terminal_spec(c5, {0, 1, 4}, 0);
    const auto in_s = c5.induced_arcs(spec.S);  // 0<->1 and 0<->4
    REQUIRE(in_s.size() == 4);

    spp::PartitionEnumerator single(in_s, 1);
    bool any_yes = false;
    while (auto partition = single.next()) {
      const auto cert = spp::decide_partition(c5, spec, 1, *partition);
      if (!cert) continue;
      any_yes = true;
      REQUIRE(cert->paths.size() == 1);
      CHECK(spp::validate_certificate(c5, *cert));
    }
    CHECK(any_yes);

    spp::PartitionEnumerator doubled(in_s, 2);
    while (auto partition = doubled.next()) {
      CHECK_FALSE(spp::decide_partition(c5, spec, 2, *partition).has_value());
    }
    CHECK(spp::decide_kappa_at_least(c5, spec, 1).yes);
    CHECK_FALSE(spp::decide_kappa_at_least(c5, spec, 2).yes);
  }

  TEST_CASE("trivial thresholds") {
    const Digraph d = spp::complete_symmetric(4);
    const auto spec = spp::make_terminal_spec(d, {0, 2, 3}, 0);
    const auto zero = spp::decide_kappa_at_least(d, spec, 0);
    CHECK(zero.yes);
    REQUIRE(zero.certificate.has_value());
    CHECK(zero.certificate->paths.empty());
    CHECK(spp::decide_kappa_at_least(d, spec, -3).yes);

    // Degree ceiling: no vertex of C4 has out-degree 3.
    std::vector<std::pair<int, int>> arcs;
    for (int v = 0; v < 4; ++v) {
      arcs.emplace_back(v, (v + 1) % 4);
      arcs.emplace_back((v + 1) % 4, v);
    }
    const Digraph c4 = Digraph::from_arc_list(4, arcs);
    const auto cspec = spp::make_terminal_spec(c4, {0, 1}, 0);
    CHECK_FALSE(spp::decide_kappa_at_least(c4, cspec, 3).yes);
  }

  TEST_CASE("decision agrees with brute force") {
    int yes_count = 0, no_count = 0;
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      const int n = 5 + static_cast<int>(seed % 3);
      const double p = 0.35 + 0.08 * static_cast<double>(seed % 5);
      const Digraph d = random_symmetric(n, p, seed * 1009 + 17);
      spp::Rng picker(seed * 31 + 7);
      for (int trial = 0; trial < 3; ++trial) {
        const int size = 2 + picker.next_below(2);
        const auto chosen = picker.sample(n, size);
        const auto spec = spp::make_terminal_spec(d, chosen, chosen[0]);
        const int brute =
            spp::packing_value(d, spec, spp::PackingMode::kInternal, 5);
        for (int ell = 1; ell <= 4; ++ell) {
          const auto result = spp::decide_kappa_at_least(d, spec, ell);
          CHECK(result.yes == (brute >= ell));
          if (result.yes) {
            ++yes_count;
            REQUIRE(result.certificate.has_value());
            CHECK(result.certificate->value() >= ell);
            CHECK(spp::validate_certificate(d, *result.certificate));
          } else {
            ++no_count;
            CHECK_FALSE(result.certificate.has_value());
          }
        }
      }
    }
    // Make sure the sweep exercised both outcomes.
    CHECK(yes_count > 20);
    CHECK(no_count > 20);
  }

  TEST_CASE("racy mode returns the same answers") {
    spp::DecideOptions racy;
    racy.deterministic = false;
    racy.jobs = 3;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const Digraph d = random_symmetric(6, 0.5, seed * 2027 + 5);
      const auto spec = spp::make_terminal_spec(d, {0, 1, 2}, 0);
      for (int ell = 2; ell <= 3; ++ell) {
        const auto base = spp::decide_kappa_at_least(d, spec, ell);
        const auto raced = spp::decide_kappa_at_least(d, spec, ell, racy);
        CHECK(base.yes == raced.yes);
        if (raced.yes) {
          REQUIRE(raced.certificate.has_value());
          CHECK(spp::validate_certificate(d, *raced.certificate));
        }
      }
    }
  }

  TEST_CASE("rejects non-symmetric digraphs") {
    const Digraph t = spp::transitive_tournament(4);
    const auto spec = spp::make_terminal_spec(t, {0, 1, 2}, 0);
    CHECK_THROWS_AS(spp::decide_kappa_at_least(t, spec, 2), spp::input_error);
  }
}
