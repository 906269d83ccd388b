#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lomax/graph.hpp"

namespace lomax {

/// Why a vertex was ruled out without evaluating its load effect. Every
/// rule is conservative: a flagged vertex provably has effect <= 0.
enum class EliminationRule {
  KeyDegreeTwo,  // neighbor of a degree-2 key vertex
  SinglePath,    // only one edge-disjoint path between the vertex and the key
  CutDetour,     // enough boundary detours across a small separating cut
};

std::string rule_name(EliminationRule rule);

struct EliminatedVertex {
  Vertex vertex;
  EliminationRule rule;
  bool operator==(const EliminatedVertex&) const = default;
};

struct SingleResult {
  Vertex key = -1;
  std::int64_t base_load = 0;               // load on the key in the input graph
  std::map<Vertex, std::int64_t> effects;   // evaluated candidates only
  std::optional<Vertex> best_vertex;        // unset when nothing was evaluated
  std::int64_t best_effect = 0;             // valid iff best_vertex is set
  std::vector<EliminatedVertex> eliminated; // sorted by vertex id
  long long evaluations = 0;                // load-effect computations performed
};

/// Evaluates every single-vertex deletion i != k; ties for best break to
/// the lowest id. Requires a connected graph.
SingleResult brute_force(const Graph& g, Vertex k);

/// Vertices provably unable to increase the key's load: neighbors of a
/// degree-2 key, vertices with a single edge-disjoint path to the key
/// (read off the Gomory-Hu tree), and survivors of the boundary-detour
/// screen applied to tree cuts of size <= max_cut. Sorted by vertex id.
std::vector<EliminatedVertex> eliminate_by_theorems(const Graph& g, Vertex k,
                                                    int max_cut = 5);

/// Elimination prepass followed by brute force over the remaining
/// candidates.
SingleResult eliminate_then_brute_force(const Graph& g, Vertex k, int max_cut = 5);

/// Partitions the candidates into random subsets of `subset_size`
/// (remainder forms one smaller final subset), scores each subset's joint
/// load effect, then evaluates every member of the `top_t` best subsets
/// individually. Evaluation count = #subsets + members examined.
SingleResult divide_and_conquer(const Graph& g, Vertex k, int subset_size, int top_t,
                                std::uint64_t seed);

}  // namespace lomax
