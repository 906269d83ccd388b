#include "lomax/single_lomax.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "lomax/gomory_hu.hpp"
#include "lomax/load.hpp"
#include "lomax/max_flow.hpp"
#include "lomax/rng.hpp"

namespace lomax {
namespace {

void note_best(SingleResult& result, Vertex v, std::int64_t effect) {
  if (!result.best_vertex || effect > result.best_effect ||
      (effect == result.best_effect && v < *result.best_vertex)) {
    result.best_vertex = v;
    result.best_effect = effect;
  }
}

// Boundary vertices of `side`: endpoints of edges leaving the side.
std::vector<Vertex> boundary_of(const Graph& g, const std::vector<char>& in_side,
                                const std::vector<Vertex>& side) {
  std::vector<Vertex> boundary;
  for (Vertex v : side)
    for (Vertex w : g.neighbors(v))
      if (!in_side[static_cast<std::size_t>(w)]) {
        boundary.push_back(v);
        break;
      }
  return boundary;
}

// Max flow from boundary[0] to every other boundary vertex inside `sub`.
// Returns false as soon as one flow drops below `need`; optionally collects
// the vertices lying on the flow paths.
bool boundary_flows_hold(const Graph& sub, const std::vector<Vertex>& boundary, int need,
                         std::set<Vertex>* on_paths) {
  if (boundary.size() < 2 || need <= 0) return true;
  FlowNetwork net(sub);
  for (std::size_t j = 1; j < boundary.size(); ++j) {
    if (net.max_flow(boundary[0], boundary[j]) < need) return false;
    if (on_paths) {
      for (const auto& path : net.unit_paths())
        for (Vertex v : path) on_paths->insert(v);
    }
  }
  return true;
}

}  // namespace

std::string rule_name(EliminationRule rule) {
  switch (rule) {
    case EliminationRule::KeyDegreeTwo: return "key-degree-2";
    case EliminationRule::SinglePath: return "single-path";
    case EliminationRule::CutDetour: return "cut-detour";
  }
  return "?";
}

SingleResult brute_force(const Graph& g, Vertex k) {
  if (!g.has_vertex(k)) throw std::invalid_argument("single-lomax: unknown key vertex");
  LoadEvaluator evaluator(g, k);
  SingleResult result;
  result.key = k;
  result.base_load = evaluator.base_load();
  for (Vertex i : g.vertices()) {
    if (i == k) continue;
    const std::int64_t effect = evaluator.effect(i);
    result.effects[i] = effect;
    ++result.evaluations;
    note_best(result, i, effect);
  }
  return result;
}

std::vector<EliminatedVertex> eliminate_by_theorems(const Graph& g, Vertex k, int max_cut) {
  if (!g.has_vertex(k)) throw std::invalid_argument("single-lomax: unknown key vertex");
  if (max_cut < 1) throw std::invalid_argument("single-lomax: max_cut must be >= 1");
  if (!is_connected(g)) throw std::invalid_argument("single-lomax: graph must be connected");

  std::vector<char> flagged(static_cast<std::size_t>(g.id_limit()), 0);
  std::vector<EliminatedVertex> out;
  auto flag = [&](Vertex v, EliminationRule rule) {
    if (!flagged[static_cast<std::size_t>(v)]) {
      flagged[static_cast<std::size_t>(v)] = 1;
      out.push_back({v, rule});
    }
  };

  // A degree-2 key turns into a leaf when either neighbor disappears.
  if (g.degree(k) == 2)
    for (Vertex v : g.neighbors(k)) flag(v, EliminationRule::KeyDegreeTwo);

  if (g.vertex_count() < 2) return out;
  const GomoryHuTree tree = gomory_hu(g);

  // Single edge-disjoint path to the key: no cycle through both, so no
  // flow can be diverted.
  for (Vertex i : g.vertices())
    if (i != k && tree.query(k, i) == 1) flag(i, EliminationRule::SinglePath);

  // Boundary-detour screen over the n-1 tree cuts. Tree edges of a
  // flow-equivalent tree need not be minimum cuts, so the cut size is the
  // actual number of crossing edges; the screen is sound for any
  // separating cut.
  std::vector<char> in_side(static_cast<std::size_t>(g.id_limit()), 0);
  for (Vertex child : tree.tree_edges()) {
    const std::vector<Vertex> subtree = tree.side_of(child);
    std::fill(in_side.begin(), in_side.end(), 0);
    for (Vertex v : subtree) in_side[static_cast<std::size_t>(v)] = 1;
    const bool key_in_subtree = in_side[static_cast<std::size_t>(k)] != 0;

    std::vector<Vertex> key_side, far_side;
    for (Vertex v : g.vertices())
      (in_side[static_cast<std::size_t>(v)] == (key_in_subtree ? 1 : 0) ? key_side : far_side)
          .push_back(v);

    int crossing = 0;
    for (Vertex v : subtree)
      for (Vertex w : g.neighbors(v))
        if (!in_side[static_cast<std::size_t>(w)]) ++crossing;
    if (crossing > max_cut) continue;
    const int need = crossing / 2;

    std::vector<char> in_key_side(static_cast<std::size_t>(g.id_limit()), 0);
    for (Vertex v : key_side) in_key_side[static_cast<std::size_t>(v)] = 1;
    std::vector<char> in_far_side(static_cast<std::size_t>(g.id_limit()), 0);
    for (Vertex v : far_side) in_far_side[static_cast<std::size_t>(v)] = 1;

    const std::vector<Vertex> key_boundary = boundary_of(g, in_key_side, key_side);
    if (std::find(key_boundary.begin(), key_boundary.end(), k) != key_boundary.end())
      continue;  // cuts touching the key are out of the theorem's scope
    const std::vector<Vertex> far_boundary = boundary_of(g, in_far_side, far_side);

    // Key side must keep its boundary pairs connected without the key.
    std::vector<Vertex> key_side_without_key;
    for (Vertex v : key_side)
      if (v != k) key_side_without_key.push_back(v);
    if (!boundary_flows_hold(g.induced(key_side_without_key), key_boundary, need, nullptr))
      continue;

    const Graph far_graph = g.induced(far_side);
    std::set<Vertex> on_paths;
    if (!boundary_flows_hold(far_graph, far_boundary, need, &on_paths)) continue;

    std::vector<char> is_boundary(static_cast<std::size_t>(g.id_limit()), 0);
    for (Vertex v : far_boundary) is_boundary[static_cast<std::size_t>(v)] = 1;

    for (Vertex candidate : far_side) {
      if (is_boundary[static_cast<std::size_t>(candidate)]) continue;
      if (flagged[static_cast<std::size_t>(candidate)]) continue;
      if (on_paths.contains(candidate)) {
        // The candidate carries boundary flow; keep it only if the flows
        // survive its removal.
        std::vector<Vertex> rest;
        for (Vertex v : far_side)
          if (v != candidate) rest.push_back(v);
        if (!boundary_flows_hold(g.induced(rest), far_boundary, need, nullptr)) continue;
      }
      flag(candidate, EliminationRule::CutDetour);
    }
  }

  std::sort(out.begin(), out.end(),
            [](const EliminatedVertex& a, const EliminatedVertex& b) {
              return a.vertex < b.vertex;
            });
  return out;
}

SingleResult eliminate_then_brute_force(const Graph& g, Vertex k, int max_cut) {
  SingleResult result;
  result.key = k;
  result.eliminated = eliminate_by_theorems(g, k, max_cut);
  std::vector<char> skip(static_cast<std::size_t>(g.id_limit()), 0);
  for (const auto& e : result.eliminated) skip[static_cast<std::size_t>(e.vertex)] = 1;

  LoadEvaluator evaluator(g, k);
  result.base_load = evaluator.base_load();
  for (Vertex i : g.vertices()) {
    if (i == k || skip[static_cast<std::size_t>(i)]) continue;
    const std::int64_t effect = evaluator.effect(i);
    result.effects[i] = effect;
    ++result.evaluations;
    note_best(result, i, effect);
  }
  return result;
}

SingleResult divide_and_conquer(const Graph& g, Vertex k, int subset_size, int top_t,
                                std::uint64_t seed) {
  if (!g.has_vertex(k)) throw std::invalid_argument("single-lomax: unknown key vertex");
  if (subset_size < 2) throw std::invalid_argument("divide-and-conquer: subset_size >= 2");
  if (top_t < 1) throw std::invalid_argument("divide-and-conquer: top_t >= 1");

  LoadEvaluator evaluator(g, k);
  SingleResult result;
  result.key = k;
  result.base_load = evaluator.base_load();

  std::vector<Vertex> candidates;
  for (Vertex v : g.vertices())
    if (v != k) candidates.push_back(v);
  if (candidates.empty()) return result;

  Rng rng(seed);
  rng.shuffle(candidates);

  std::vector<std::vector<Vertex>> subsets;
  for (std::size_t at = 0; at < candidates.size(); at += static_cast<std::size_t>(subset_size))
    subsets.emplace_back(candidates.begin() + static_cast<std::ptrdiff_t>(at),
                         candidates.begin() +
                             static_cast<std::ptrdiff_t>(
                                 std::min(at + static_cast<std::size_t>(subset_size),
                                          candidates.size())));

  std::vector<std::pair<std::int64_t, std::size_t>> scored;  // (effect, subset index)
  for (std::size_t s = 0; s < subsets.size(); ++s) {
    scored.emplace_back(evaluator.effect(VertexSet(subsets[s])), s);
    ++result.evaluations;
  }
  std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;  // earlier subset wins ties
  });

  const std::size_t explore = std::min<std::size_t>(static_cast<std::size_t>(top_t),
                                                    scored.size());
  for (std::size_t rank = 0; rank < explore; ++rank) {
    for (Vertex i : subsets[scored[rank].second]) {
      const std::int64_t effect = evaluator.effect(i);
      result.effects[i] = effect;
      ++result.evaluations;
      note_best(result, i, effect);
    }
  }
  return result;
}

}  // namespace lomax
