#pragma once

#include <vector>

#include "lomax/graph.hpp"

namespace lomax {

/// All-pairs max-flow tree over a connected graph, built Gusfield-style
/// (no contraction) with exactly n-1 max-flow runs. The minimum edge
/// weight on the tree path between s and t equals max_flow(g, s, t).
class GomoryHuTree {
 public:
  Vertex root() const { return root_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }

  Vertex parent(Vertex v) const;
  int cut_value(Vertex v) const;  // flow between v and parent(v); v != root

  /// Max flow between s and t, read off the tree.
  int query(Vertex s, Vertex t) const;

  /// Edge-disjoint paths realizing cut_value(v) between v and parent(v)
  /// in the underlying graph. Populated only when requested at build time.
  const std::vector<std::vector<Vertex>>& flow_paths(Vertex v) const;
  bool has_flow_paths() const { return with_paths_; }

  /// v's side of the bipartition obtained by removing tree edge
  /// (v, parent(v)): the vertices of v's subtree, sorted.
  std::vector<Vertex> side_of(Vertex v) const;

  /// Tree edges as child vertices (every vertex except the root).
  std::vector<Vertex> tree_edges() const;

  int flow_computations() const { return flow_computations_; }

 private:
  friend GomoryHuTree gomory_hu(const Graph& g, bool with_flow_paths);

  int index_of(Vertex v) const;

  Vertex root_ = -1;
  std::vector<Vertex> vertices_;
  std::vector<int> id_to_index_;
  std::vector<Vertex> parent_;
  std::vector<int> cut_value_;
  std::vector<int> depth_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<std::vector<std::vector<Vertex>>> flow_paths_;
  bool with_paths_ = false;
  int flow_computations_ = 0;
};

/// Builds the tree; throws std::invalid_argument on a disconnected graph
/// or a graph with fewer than one vertex.
GomoryHuTree gomory_hu(const Graph& g, bool with_flow_paths = false);

}  // namespace lomax
