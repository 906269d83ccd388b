#include "lomax/load.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "lomax/gomory_hu.hpp"

namespace lomax {
namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n), non_key(n, 0) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  std::vector<std::size_t> parent;
  std::vector<std::int64_t> non_key;
};

// Sum of tree-path minima over unordered non-key pairs: merge tree edges in
// descending weight; an edge joining sets A and B is the path minimum for
// every pair across them.
std::int64_t pair_sum(const GomoryHuTree& tree, Vertex k) {
  const auto& vs = tree.vertices();
  const std::size_t n = vs.size();
  std::vector<int> index(static_cast<std::size_t>(vs.empty() ? 0 : vs.back() + 1), -1);
  for (std::size_t i = 0; i < n; ++i) index[static_cast<std::size_t>(vs[i])] = static_cast<int>(i);

  std::vector<std::pair<int, Vertex>> edges;  // (cut value, child vertex)
  edges.reserve(n);
  for (Vertex v : tree.tree_edges()) edges.emplace_back(tree.cut_value(v), v);
  std::sort(edges.begin(), edges.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });

  DisjointSets sets(n);
  for (std::size_t i = 0; i < n; ++i) sets.non_key[i] = vs[i] == k ? 0 : 1;

  std::int64_t total = 0;
  for (const auto& [w, child] : edges) {
    const auto a = sets.find(static_cast<std::size_t>(index[static_cast<std::size_t>(child)]));
    const auto b = sets.find(
        static_cast<std::size_t>(index[static_cast<std::size_t>(tree.parent(child))]));
    total += static_cast<std::int64_t>(w) * sets.non_key[a] * sets.non_key[b];
    sets.parent[a] = b;
    sets.non_key[b] += sets.non_key[a];
  }
  return total;
}

// Pair sums over V \ {k} stay well-defined after k itself has been
// deleted, so this skips the membership check the public entry point makes.
std::int64_t capacity_with_respect_to(const Graph& g, Vertex k) {
  std::int64_t total = 0;
  if (is_connected(g)) {
    if (g.vertex_count() >= 2) total = pair_sum(gomory_hu(g), k);
    return total;
  }
  for (const auto& comp : connected_components(g)) {
    if (comp.size() < 2) continue;
    total += pair_sum(gomory_hu(g.induced(comp)), k);
  }
  return total;
}

}  // namespace

std::int64_t flow_capacity(const Graph& g, Vertex k) {
  if (!g.has_vertex(k)) throw std::invalid_argument("flow_capacity: unknown key vertex");
  return capacity_with_respect_to(g, k);
}

std::int64_t load(const Graph& g, Vertex k) {
  if (!g.has_vertex(k)) throw std::invalid_argument("load: unknown key vertex");
  return capacity_with_respect_to(g, k) - capacity_with_respect_to(g.without({k}), k);
}

std::int64_t load_effect(const Graph& g, Vertex k, const VertexSet& s) {
  if (s.contains(k)) throw std::invalid_argument("load_effect: subset contains the key vertex");
  return load(g.without(s), k) - load(g, k);
}

LoadReport load_report(const Graph& g, Vertex k, bool with_single_effects) {
  if (!g.has_vertex(k)) throw std::invalid_argument("load_report: unknown key vertex");
  LoadReport report;
  report.key = k;
  report.z_base = flow_capacity(g, k);
  report.z_without_key = capacity_with_respect_to(g.without({k}), k);
  report.load = report.z_base - report.z_without_key;
  if (with_single_effects) {
    for (Vertex i : g.vertices()) {
      if (i == k) continue;
      report.effects[i] = load(g.without({i}), k) - report.load;
    }
  }
  return report;
}

LoadEvaluator::LoadEvaluator(const Graph& g, Vertex k)
    : graph_(&g), key_(k), base_load_(load(g, k)) {}

std::int64_t LoadEvaluator::effect(const VertexSet& s) const {
  if (s.contains(key_))
    throw std::invalid_argument("load_effect: subset contains the key vertex");
  if (s.empty()) return 0;
  return load(graph_->without(s), key_) - base_load_;
}

std::int64_t LoadEvaluator::effect(Vertex i) const { return effect(VertexSet{i}); }

}  // namespace lomax
