#pragma once

#include <cstdint>
#include <map>

#include "lomax/graph.hpp"

namespace lomax {

/// Load summary for one graph / key-vertex pair.
struct LoadReport {
  Vertex key = -1;
  std::int64_t z_base = 0;         // flow capacity of the graph w.r.t. key
  std::int64_t z_without_key = 0;  // flow capacity once the key is deleted
  std::int64_t load = 0;           // z_base - z_without_key, always >= 0
  std::map<Vertex, std::int64_t> effects;  // per-candidate single deletions
};

/// Sum of max_flow(s, t) over unordered pairs {s, t} excluding k. Pairs in
/// different components contribute 0; each component is summed through one
/// Gomory-Hu tree.
std::int64_t flow_capacity(const Graph& g, Vertex k);

/// Number of edge-disjoint paths between non-key pairs that must pass
/// through k: flow_capacity(g, k) - flow_capacity(g \ {k}, k).
std::int64_t load(const Graph& g, Vertex k);

/// Change in k's load caused by deleting s: load(g \ s, k) - load(g, k).
/// Positive means flow was diverted through k. Requires k not in s.
std::int64_t load_effect(const Graph& g, Vertex k, const VertexSet& s);

/// Builds the summary; with_single_effects fills `effects` with the load
/// effect of every single-vertex deletion i != k.
LoadReport load_report(const Graph& g, Vertex k, bool with_single_effects = false);

/// Caches the base load so many candidate deletions against one graph pay
/// for only their own side of the difference. Pure queries; safe to share
/// across threads.
class LoadEvaluator {
 public:
  LoadEvaluator(const Graph& g, Vertex k);

  Vertex key() const { return key_; }
  std::int64_t base_load() const { return base_load_; }

  std::int64_t effect(const VertexSet& s) const;
  std::int64_t effect(Vertex i) const;

 private:
  const Graph* graph_;
  Vertex key_;
  std::int64_t base_load_;
};

}  // namespace lomax
