#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lomax/graph.hpp"

namespace lomax {

/// Raised when a generator cannot produce a connected instance within the
/// retry budget.
struct GenerationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class GraphFamily {
  ErdosRenyi,
  WattsStrogatz,
  BarabasiAlbert,
  HolmeKim,
  CentralizedPowerLaw,
};

std::string family_name(GraphFamily family);

struct GeneratorSpec {
  GraphFamily family = GraphFamily::ErdosRenyi;
  int n = 0;
  double p = 0.0;         // er: edge probability
  int k_ring = 0;         // ws: neighbors per side in the start ring
  double p_rewire = 0.0;  // ws
  int m0 = 0;             // ba, hk: seed vertices
  int m = 0;              // ba, hk: edges per new vertex
  double triad_p = 0.75;  // hk: probability of the clustering step
  int leaders = 0;            // cpl: size of the leadership core (a)
  int groups = 0;             // cpl: satellite groups (b)
  int unassigned = 0;         // cpl: leaders assigned to no group (c)
  int max_edges_per_vertex = 0;  // cpl: upper bound on a new vertex's edges
  std::uint64_t seed = 0;

  /// Parses CLI-facing spec strings, e.g. "er:n=100,p=0.1" or
  /// "cpl:n=100,a=15,b=3,c=0,maxe=4". The seed is set separately.
  static GeneratorSpec parse(std::string_view text);

  std::string short_label() const;  // er, ws, ba, hk, cpl
  std::string describe() const;     // spec string round-trip
};

/// Members of the centralized power-law construction, for callers that need
/// to inspect group structure.
struct CplLayout {
  std::vector<int> group_of;                       // per id; -1 for core vertices
  std::vector<std::vector<Vertex>> group_leaders;  // per group, sorted core ids
};

/// Deterministic in the spec (seed included). Retries with derived
/// sub-seeds until connected, up to 100 attempts, then throws
/// GenerationError. Invalid parameters throw std::invalid_argument.
Graph generate(const GeneratorSpec& spec);

/// Centralized power-law variant that also reports the group layout.
Graph generate_centralized(const GeneratorSpec& spec, CplLayout* layout);

struct GraphStats {
  double density = 0.0;
  double avg_path_length = 0.0;
  double clustering_coefficient = 0.0;  // mean local clustering
};

/// Requires a connected graph with at least 2 vertices.
GraphStats summarize(const Graph& g);

}  // namespace lomax
