#include "lomax/max_flow.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace lomax {

FlowNetwork::FlowNetwork(const Graph& g) {
  const int n = g.vertex_count();
  index_to_id_.assign(g.vertices().begin(), g.vertices().end());
  id_to_index_.assign(static_cast<std::size_t>(g.id_limit()), -1);
  for (int i = 0; i < n; ++i)
    id_to_index_[static_cast<std::size_t>(index_to_id_[static_cast<std::size_t>(i)])] = i;

  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (Vertex u : g.vertices())
    deg[static_cast<std::size_t>(id_to_index_[static_cast<std::size_t>(u)])] =
        g.degree(u);
  arc_begin_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i)
    arc_begin_[static_cast<std::size_t>(i) + 1] =
        arc_begin_[static_cast<std::size_t>(i)] + deg[static_cast<std::size_t>(i)];
  arcs_.resize(static_cast<std::size_t>(arc_begin_.back()));

  std::vector<int> cursor(arc_begin_.begin(), arc_begin_.end() - 1);
  for (Vertex u : g.vertices()) {
    const int ui = id_to_index_[static_cast<std::size_t>(u)];
    for (Vertex v : g.neighbors(u)) {
      if (u >= v) continue;
      const int vi = id_to_index_[static_cast<std::size_t>(v)];
      const int a = cursor[static_cast<std::size_t>(ui)]++;
      const int b = cursor[static_cast<std::size_t>(vi)]++;
      arcs_[static_cast<std::size_t>(a)] = {vi, 1, b};
      arcs_[static_cast<std::size_t>(b)] = {ui, 1, a};
    }
  }

  level_.resize(static_cast<std::size_t>(n));
  next_arc_.resize(static_cast<std::size_t>(n));
  queue_.resize(static_cast<std::size_t>(n));
}

bool FlowNetwork::build_levels() {
  std::fill(level_.begin(), level_.end(), -1);
  int head = 0, tail = 0;
  queue_[tail++] = src_;
  level_[static_cast<std::size_t>(src_)] = 0;
  while (head < tail) {
    const int u = queue_[head++];
    const int ulevel = level_[static_cast<std::size_t>(u)];
    if (ulevel >= level_dst_cap_) break;  // nothing past the sink's level matters
    const int end = arc_begin_[static_cast<std::size_t>(u) + 1];
    for (int j = arc_begin_[static_cast<std::size_t>(u)]; j < end; ++j) {
      const Arc& arc = arcs_[static_cast<std::size_t>(j)];
      if (arc.cap > 0 && level_[static_cast<std::size_t>(arc.to)] < 0) {
        level_[static_cast<std::size_t>(arc.to)] = ulevel + 1;
        if (arc.to == dst_) level_dst_cap_ = ulevel + 1;
        queue_[tail++] = arc.to;
      }
    }
  }
  return level_[static_cast<std::size_t>(dst_)] >= 0;
}

int FlowNetwork::augment(int u) {
  if (u == dst_) return 1;
  const int end = arc_begin_[static_cast<std::size_t>(u) + 1];
  for (int& j = next_arc_[static_cast<std::size_t>(u)]; j < end; ++j) {
    Arc& arc = arcs_[static_cast<std::size_t>(j)];
    if (arc.cap > 0 && level_[static_cast<std::size_t>(arc.to)] ==
                           level_[static_cast<std::size_t>(u)] + 1 &&
        augment(arc.to)) {
      arc.cap -= 1;
      arcs_[static_cast<std::size_t>(arc.rev)].cap += 1;
      return 1;
    }
  }
  return 0;
}

int FlowNetwork::max_flow(Vertex s, Vertex t) {
  if (s == t) throw std::invalid_argument("max_flow: s and t must differ");
  if (s < 0 || t < 0 || static_cast<std::size_t>(s) >= id_to_index_.size() ||
      static_cast<std::size_t>(t) >= id_to_index_.size() ||
      id_to_index_[static_cast<std::size_t>(s)] < 0 ||
      id_to_index_[static_cast<std::size_t>(t)] < 0)
    throw std::invalid_argument("max_flow: endpoint not in graph");

  for (Arc& arc : arcs_) arc.cap = 1;
  src_ = id_to_index_[static_cast<std::size_t>(s)];
  dst_ = id_to_index_[static_cast<std::size_t>(t)];
  ++runs_;

  const int src_degree = arc_begin_[static_cast<std::size_t>(src_) + 1] -
                         arc_begin_[static_cast<std::size_t>(src_)];
  const int dst_degree = arc_begin_[static_cast<std::size_t>(dst_) + 1] -
                         arc_begin_[static_cast<std::size_t>(dst_)];
  const int degree_bound = std::min(src_degree, dst_degree);

  int flow = 0;
  cut_mode_ = CutMode::Levels;
  level_dst_cap_ = std::numeric_limits<int>::max();
  while (flow < degree_bound && build_levels()) {
    std::copy(arc_begin_.begin(), arc_begin_.end() - 1, next_arc_.begin());
    while (flow < degree_bound && augment(src_)) ++flow;
    level_dst_cap_ = std::numeric_limits<int>::max();
  }
  if (flow == degree_bound) {
    // Saturated one endpoint: the trivial cut around it is minimum, no
    // certifying BFS needed.
    cut_mode_ = flow == src_degree ? CutMode::OnlySource : CutMode::AllButSink;
  }
  // Otherwise the failed final BFS exhausted the residual-reachable set,
  // so level_ doubles as the min-cut side marker.
  return flow;
}

void FlowNetwork::source_side_mask(std::vector<char>& by_id) const {
  switch (cut_mode_) {
    case CutMode::OnlySource:
      by_id[static_cast<std::size_t>(index_to_id_[static_cast<std::size_t>(src_)])] = 1;
      return;
    case CutMode::AllButSink:
      for (std::size_t i = 0; i < index_to_id_.size(); ++i)
        if (static_cast<int>(i) != dst_) by_id[static_cast<std::size_t>(index_to_id_[i])] = 1;
      return;
    case CutMode::Levels:
      for (std::size_t i = 0; i < index_to_id_.size(); ++i)
        if (level_[i] >= 0) by_id[static_cast<std::size_t>(index_to_id_[i])] = 1;
      return;
  }
}

std::vector<Vertex> FlowNetwork::source_side() const {
  std::vector<char> mask(static_cast<std::size_t>(
                             *std::max_element(index_to_id_.begin(), index_to_id_.end()) + 1),
                         0);
  source_side_mask(mask);
  std::vector<Vertex> side;
  for (std::size_t v = 0; v < mask.size(); ++v)
    if (mask[v]) side.push_back(static_cast<Vertex>(v));
  return side;
}

std::vector<std::vector<Vertex>> FlowNetwork::unit_paths() const {
  // Net flow per undirected edge is -1, 0 or +1; walking it from the source
  // and excising any loops yields vertex-simple edge-disjoint paths.
  const int n = static_cast<int>(index_to_id_.size());
  std::vector<std::vector<std::pair<int, int>>> out(static_cast<std::size_t>(n));
  std::vector<int> excess(static_cast<std::size_t>(n), 0);
  std::vector<char> alive;  // per canonical arc index (the lower of the pair)
  alive.assign(arcs_.size(), 0);
  for (int u = 0; u < n; ++u) {
    const int end = arc_begin_[static_cast<std::size_t>(u) + 1];
    for (int j = arc_begin_[static_cast<std::size_t>(u)]; j < end; ++j) {
      const Arc& arc = arcs_[static_cast<std::size_t>(j)];
      if (j > arc.rev) continue;  // handle each undirected edge once
      const int fwd = 1 - arc.cap;                                // u -> to
      const int bwd = 1 - arcs_[static_cast<std::size_t>(arc.rev)].cap;  // to -> u
      const int net = fwd - bwd;
      if (net == 0) continue;
      const int from = net > 0 ? u : arc.to;
      const int to = net > 0 ? arc.to : u;
      out[static_cast<std::size_t>(from)].emplace_back(to, j);
      ++excess[static_cast<std::size_t>(from)];
      --excess[static_cast<std::size_t>(to)];
      alive[static_cast<std::size_t>(j)] = 1;
    }
  }
  const int value = excess[static_cast<std::size_t>(src_)];

  std::vector<std::vector<Vertex>> paths;
  std::vector<std::size_t> cursor(static_cast<std::size_t>(n), 0);
  std::vector<int> pos_in_walk(static_cast<std::size_t>(n), -1);
  for (int p = 0; p < value; ++p) {
    std::vector<int> walk{src_};
    pos_in_walk[static_cast<std::size_t>(src_)] = 0;
    int u = src_;
    while (u != dst_) {
      auto& outs = out[static_cast<std::size_t>(u)];
      auto& c = cursor[static_cast<std::size_t>(u)];
      while (c < outs.size() && !alive[static_cast<std::size_t>(outs[c].second)]) ++c;
      // Flow conservation guarantees an unused out-arc here.
      const auto [w, e] = outs[c];
      alive[static_cast<std::size_t>(e)] = 0;
      if (pos_in_walk[static_cast<std::size_t>(w)] >= 0) {
        // Loop back onto the walk: drop the cycle, keep walking from w.
        for (std::size_t i = static_cast<std::size_t>(pos_in_walk[static_cast<std::size_t>(w)]) + 1;
             i < walk.size(); ++i)
          pos_in_walk[static_cast<std::size_t>(walk[i])] = -1;
        walk.resize(static_cast<std::size_t>(pos_in_walk[static_cast<std::size_t>(w)]) + 1);
      } else {
        walk.push_back(w);
        pos_in_walk[static_cast<std::size_t>(w)] = static_cast<int>(walk.size()) - 1;
      }
      u = w;
    }
    std::vector<Vertex> path;
    path.reserve(walk.size());
    for (int node : walk) {
      pos_in_walk[static_cast<std::size_t>(node)] = -1;
      path.push_back(index_to_id_[static_cast<std::size_t>(node)]);
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

int max_flow(const Graph& g, Vertex s, Vertex t) {
  if (!g.has_vertex(s) || !g.has_vertex(t))
    throw std::invalid_argument("max_flow: endpoint not in graph");
  if (s == t) throw std::invalid_argument("max_flow: s and t must differ");
  FlowNetwork net(g);
  return net.max_flow(s, t);
}

}  // namespace lomax
