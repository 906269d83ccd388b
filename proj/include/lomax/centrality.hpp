#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lomax/graph.hpp"

namespace lomax {

/// Per-vertex centrality metrics plus rank vectors. Rank 1 is the most
/// central vertex under each metric; ties share the mean of the occupied
/// ranks. Betweenness is the raw count of shortest paths between non-v
/// pairs with v in the interior (not a normalized fraction); closeness is
/// the mean distance to all other vertices, so lower is more central.
struct CentralityTable {
  std::vector<Vertex> vertices;
  std::vector<int> degree;
  std::vector<std::uint64_t> betweenness;
  std::vector<double> closeness;
  std::vector<double> degree_rank;
  std::vector<double> betweenness_rank;
  std::vector<double> closeness_rank;
  std::vector<double> mean_rank;
};

/// Requires a connected graph with at least 2 vertices.
CentralityTable centrality_table(const Graph& g);

/// Count over unordered pairs {s, t} (s, t != v) of shortest s-t paths
/// passing through v. Pairs without a connecting path contribute 0.
std::uint64_t betweenness_count(const Graph& g, Vertex v);

/// The vertex with the best (lowest) mean rank across degree (descending),
/// betweenness (descending) and closeness (ascending); ties break to the
/// lowest id. Requires a connected graph.
Vertex select_key_vertex(const Graph& g);

/// betweenness_count(g \ {i}, k) - betweenness_count(g, k). Diagnostic
/// metric only; i must differ from k.
std::int64_t betweenness_effect(const Graph& g, Vertex k, Vertex i);

/// CSV with columns id,degree,betweenness,closeness,mean_rank.
std::string centrality_csv(const Graph& g);

/// Average of the ranks that a block of tied values occupies; exposed for
/// reuse by the key-vertex rule. `descending` ranks large values first.
std::vector<double> tied_ranks(const std::vector<double>& values, bool descending);

}  // namespace lomax
