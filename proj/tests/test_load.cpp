#include "lomax/load.hpp"

#include <stdexcept>

#include "doctest.h"
#include "lomax/rng.hpp"
#include "support/oracles.hpp"

using namespace lomax;
namespace t = lomax::testing;

namespace {
std::int64_t pairs_of(std::int64_t m) { return m * (m - 1) / 2; }
}  // namespace

TEST_SUITE("load") {

TEST_CASE("flow capacity of small closed forms") {
  CHECK(flow_capacity(t::complete_graph(3), 0) == 2);
  CHECK(flow_capacity(t::path_graph(3), 1) == 1);  // a - k - b
  for (int n = 3; n <= 12; ++n)
    CHECK(flow_capacity(t::cycle_graph(n), 0) == 2 * pairs_of(n - 1));
}

TEST_CASE("unknown key is rejected") {
  CHECK_THROWS_AS(flow_capacity(t::complete_graph(3), 9), std::invalid_argument);
  CHECK_THROWS_AS(load(t::complete_graph(3), -1), std::invalid_argument);
}

TEST_CASE("cycle loads match the closed form") {
  CHECK(load(t::complete_graph(3), 0) == 1);
  for (int n = 3; n <= 14; ++n) {
    const Graph g = t::cycle_graph(n);
    const std::int64_t expected = n == 3 ? 1 : pairs_of(n - 1);
    for (Vertex k : g.vertices()) CHECK(load(g, k) == expected);
  }
}

TEST_CASE("leaves carry no load") {
  Rng rng(0x1eaf);
  for (int round = 0; round < 20; ++round) {
    const Graph g = t::random_tree(rng, 3 + static_cast<int>(rng.below(30)));
    for (Vertex v : g.vertices())
      if (g.degree(v) == 1) CHECK(load(g, v) == 0);
  }
}

TEST_CASE("load is non-negative and capacity shrinks under deletion") {
  Rng rng(0x10ad);
  for (int round = 0; round < 25; ++round) {
    const Graph g = t::random_connected(rng, 4, 12);
    const auto& ids = g.vertices();
    const Vertex k = ids[rng.below(ids.size())];
    CHECK(load(g, k) >= 0);
    Vertex v;
    do {
      v = ids[rng.below(ids.size())];
    } while (v == k);
    CHECK(flow_capacity(delete_vertices(g, {v}), k) <= flow_capacity(g, k));
  }
}

TEST_CASE("empty deletions have zero effect") {
  Rng rng(0x0e0e);
  const Graph g = t::random_connected(rng, 5, 9);
  CHECK(load_effect(g, g.vertices().front(), {}) == 0);
}

TEST_CASE("single deletions on a cycle never help") {
  for (int n = 4; n <= 9; ++n) {
    const Graph g = t::cycle_graph(n);
    for (Vertex i = 1; i < n; ++i) CHECK(load_effect(g, 0, {i}) <= 0);
  }
}

TEST_CASE("deleting the key is rejected") {
  const Graph g = t::complete_graph(4);
  CHECK_THROWS_AS(load_effect(g, 1, {1}), std::invalid_argument);
  CHECK_THROWS_AS(load_effect(g, 1, VertexSet{0, 1, 2}), std::invalid_argument);
}

TEST_CASE("bridge construction loses exactly the product of cut-off counts") {
  for (int s = 1; s <= 4; ++s) {
    for (int p = 1; p <= 5; ++p) {
      const auto inst = t::bridge_instance(4, s, p);
      CHECK(load_effect(inst.graph, inst.key, {inst.target}) ==
            -static_cast<std::int64_t>(s) * p);
    }
  }
}

TEST_CASE("report fields are consistent") {
  Rng rng(0x5e77);
  for (int round = 0; round < 10; ++round) {
    const Graph g = t::random_connected(rng, 5, 10);
    const Vertex k = g.vertices()[rng.below(g.vertices().size())];
    const LoadReport report = load_report(g, k, /*with_single_effects=*/true);
    CHECK(report.load == report.z_base - report.z_without_key);
    CHECK(report.load >= 0);
    CHECK(report.z_base >= report.z_without_key);
    CHECK(report.effects.size() == g.vertices().size() - 1);
    for (const auto& [v, effect] : report.effects)
      CHECK(effect == load_effect(g, k, {v}));
  }
}

TEST_CASE("evaluator matches the free function") {
  Rng rng(0xe7a1);
  const Graph g = t::random_connected(rng, 6, 10);
  const Vertex k = g.vertices().front();
  const LoadEvaluator evaluator(g, k);
  CHECK(evaluator.base_load() == load(g, k));
  for (Vertex v : g.vertices()) {
    if (v == k) continue;
    CHECK(evaluator.effect(v) == load_effect(g, k, {v}));
  }
}

}  // TEST_SUITE
