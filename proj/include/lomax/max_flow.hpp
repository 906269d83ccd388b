#pragma once

#include <vector>

#include "lomax/graph.hpp"

namespace lomax {

/// Unit-capacity s-t max flow on an undirected graph, i.e. the number of
/// pairwise edge-disjoint s-t paths. Dinic on the bidirected network.
///
/// One instance serves many queries against the same graph; capacities are
/// reset at the start of each run, and the buffers are reused.
class FlowNetwork {
 public:
  explicit FlowNetwork(const Graph& g);

  int max_flow(Vertex s, Vertex t);

  /// Vertices reachable from s in the residual network of the last run:
  /// the source side of a minimum cut.
  std::vector<Vertex> source_side() const;

  /// Same set, written as by_id[v] = 1 into a caller-provided buffer of at
  /// least the graph's id_limit; untouched entries keep their value.
  void source_side_mask(std::vector<char>& by_id) const;

  /// The last run's flow decomposed into vertex-simple, pairwise
  /// edge-disjoint s-t paths over original ids; size equals the flow value.
  std::vector<std::vector<Vertex>> unit_paths() const;

  int runs() const { return runs_; }

 private:
  struct Arc {
    int to;
    int cap;
    int rev;  // index of the reverse arc
  };

  // How the last run's min-cut side is encoded: via residual BFS levels, or
  // analytically when the flow saturated an endpoint's degree.
  enum class CutMode { Levels, OnlySource, AllButSink };

  bool build_levels();
  int augment(int u);

  std::vector<Vertex> index_to_id_;
  std::vector<int> id_to_index_;

  std::vector<Arc> arcs_;        // grouped by tail node (CSR layout)
  std::vector<int> arc_begin_;   // node i owns arcs_[arc_begin_[i], arc_begin_[i+1])

  std::vector<int> level_;
  std::vector<int> next_arc_;
  std::vector<int> queue_;

  int src_ = -1;
  int dst_ = -1;
  int level_dst_cap_ = 0;  // sink's level in the current BFS, for early exit
  CutMode cut_mode_ = CutMode::Levels;
  int runs_ = 0;
};

/// One-shot convenience wrapper. s and t must be distinct graph vertices.
int max_flow(const Graph& g, Vertex s, Vertex t);

}  // namespace lomax
