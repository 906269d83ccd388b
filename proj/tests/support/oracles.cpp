#include "support/oracles.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "lomax/centrality.hpp"

namespace lomax::testing {

int oracle_max_flow(const Graph& g, Vertex s, Vertex t) {
  const auto& ids = g.vertices();
  const int n = static_cast<int>(ids.size());
  std::vector<int> index(static_cast<std::size_t>(g.id_limit()), -1);
  for (int i = 0; i < n; ++i) index[static_cast<std::size_t>(ids[static_cast<std::size_t>(i)])] = i;

  std::vector<std::vector<int>> cap(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n), 0));
  for (auto [u, v] : g.edges()) {
    cap[static_cast<std::size_t>(index[static_cast<std::size_t>(u)])]
       [static_cast<std::size_t>(index[static_cast<std::size_t>(v)])] = 1;
    cap[static_cast<std::size_t>(index[static_cast<std::size_t>(v)])]
       [static_cast<std::size_t>(index[static_cast<std::size_t>(u)])] = 1;
  }

  const int src = index[static_cast<std::size_t>(s)];
  const int dst = index[static_cast<std::size_t>(t)];
  int flow = 0;
  while (true) {
    std::vector<int> prev(static_cast<std::size_t>(n), -1);
    std::queue<int> queue;
    queue.push(src);
    prev[static_cast<std::size_t>(src)] = src;
    while (!queue.empty() && prev[static_cast<std::size_t>(dst)] < 0) {
      const int u = queue.front();
      queue.pop();
      for (int w = 0; w < n; ++w) {
        if (cap[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] > 0 &&
            prev[static_cast<std::size_t>(w)] < 0) {
          prev[static_cast<std::size_t>(w)] = u;
          queue.push(w);
        }
      }
    }
    if (prev[static_cast<std::size_t>(dst)] < 0) return flow;
    for (int w = dst; w != src; w = prev[static_cast<std::size_t>(w)]) {
      const int u = prev[static_cast<std::size_t>(w)];
      cap[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] -= 1;
      cap[static_cast<std::size_t>(w)][static_cast<std::size_t>(u)] += 1;
    }
    ++flow;
  }
}

std::uint64_t oracle_betweenness(const Graph& g, Vertex v) {
  // Enumerate every shortest path between every unordered non-v pair and
  // count the ones with v in the interior.
  const auto& ids = g.vertices();
  std::uint64_t count = 0;
  for (std::size_t a = 0; a < ids.size(); ++a) {
    for (std::size_t b = a + 1; b < ids.size(); ++b) {
      const Vertex s = ids[a], t = ids[b];
      if (s == v || t == v) continue;

      // BFS distances from s.
      std::vector<int> dist(static_cast<std::size_t>(g.id_limit()), -1);
      std::queue<Vertex> queue;
      queue.push(s);
      dist[static_cast<std::size_t>(s)] = 0;
      while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop();
        for (Vertex w : g.neighbors(u)) {
          if (dist[static_cast<std::size_t>(w)] < 0) {
            dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
            queue.push(w);
          }
        }
      }
      if (dist[static_cast<std::size_t>(t)] < 0) continue;

      // Walk all shortest paths backwards from t.
      std::function<void(Vertex, bool)> walk = [&](Vertex u, bool through_v) {
        if (u == s) {
          if (through_v) ++count;
          return;
        }
        for (Vertex w : g.neighbors(u))
          if (dist[static_cast<std::size_t>(w)] == dist[static_cast<std::size_t>(u)] - 1)
            walk(w, through_v || w == v);
      };
      walk(t, false);
    }
  }
  return count;
}

Vertex oracle_select_key(const Graph& g) {
  // Straightforward restatement of the rule: rank each metric with mean
  // ranks on ties, pick the lowest mean, break ties to the lowest id.
  const auto& ids = g.vertices();
  const std::size_t n = ids.size();
  std::vector<double> deg(n), btw(n), clo(n);
  for (std::size_t i = 0; i < n; ++i) {
    deg[i] = g.degree(ids[i]);
    btw[i] = static_cast<double>(oracle_betweenness(g, ids[i]));
    std::vector<int> dist(static_cast<std::size_t>(g.id_limit()), -1);
    std::queue<Vertex> queue;
    queue.push(ids[i]);
    dist[static_cast<std::size_t>(ids[i])] = 0;
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop();
      for (Vertex w : g.neighbors(u))
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
          queue.push(w);
        }
    }
    double total = 0;
    for (Vertex w : ids)
      if (w != ids[i]) total += dist[static_cast<std::size_t>(w)];
    clo[i] = total / static_cast<double>(n - 1);
  }

  auto rank_of = [&](const std::vector<double>& values, bool descending) {
    std::vector<double> ranks(n);
    for (std::size_t i = 0; i < n; ++i) {
      double better = 0, equal = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (values[j] == values[i]) {
          ++equal;
        } else if (descending ? values[j] > values[i] : values[j] < values[i]) {
          ++better;
        }
      }
      ranks[i] = better + (equal + 1.0) / 2.0;  // mean of the tied block
    }
    return ranks;
  };
  const auto rd = rank_of(deg, true);
  const auto rb = rank_of(btw, true);
  const auto rc = rank_of(clo, false);

  std::size_t best = 0;
  double best_rank = (rd[0] + rb[0] + rc[0]) / 3.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double r = (rd[i] + rb[i] + rc[i]) / 3.0;
    if (r < best_rank) {
      best = i;
      best_rank = r;
    }
  }
  return ids[best];
}

Graph random_connected(Rng& rng, int n_min, int n_max, double p_min, double p_max) {
  while (true) {
    const int n = rng.range(n_min, n_max);
    const double p = p_min + (p_max - p_min) * rng.unit();
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng.unit() < p) edges.emplace_back(u, v);
    Graph g(n, edges);
    if (is_connected(g)) return g;
  }
}

Graph random_tree(Rng& rng, int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 1; v < n; ++v)
    edges.emplace_back(v, static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(v))));
  return Graph(n, edges);
}

Graph path_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph star_graph(int leaves) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, edges);
}

BridgeInstance bridge_instance(int clique, int cut_off_k, int cut_off_i) {
  // Layout: [0, clique) key-side clique with key = 0; bridge from vertex 1
  // to the far clique [clique, 2*clique); target = clique. Pendants:
  // cut_off_k vertices adjacent only to the key, then cut_off_i - 1
  // vertices adjacent only to the target.
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < clique; ++u)
    for (Vertex v = u + 1; v < clique; ++v) edges.emplace_back(u, v);
  for (Vertex u = clique; u < 2 * clique; ++u)
    for (Vertex v = u + 1; v < 2 * clique; ++v) edges.emplace_back(u, v);
  edges.emplace_back(1, clique + 1);  // the single bridge, away from key and target

  Vertex next = 2 * clique;
  for (int j = 0; j < cut_off_k; ++j) edges.emplace_back(0, next++);
  for (int j = 0; j < cut_off_i - 1; ++j) edges.emplace_back(clique, next++);

  BridgeInstance out;
  out.graph = Graph(next, edges);
  out.key = 0;
  out.target = clique;
  out.cut_off_k = cut_off_k;
  out.cut_off_i = cut_off_i;
  return out;
}

PositiveInstance positive_instance(int clique) {
  // Cliques A = [0, c), B = [c, 2c); midpoints: key (a0-b0), rival
  // (a1-b1), spare (a2-b2). All A-B flow crosses the three midpoints, so
  // removing the rival forces pairs that used it to route via the key.
  const int c = clique;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < c; ++u)
    for (Vertex v = u + 1; v < c; ++v) edges.emplace_back(u, v);
  for (Vertex u = c; u < 2 * c; ++u)
    for (Vertex v = u + 1; v < 2 * c; ++v) edges.emplace_back(u, v);
  const Vertex key = static_cast<Vertex>(2 * c);
  const Vertex rival = static_cast<Vertex>(2 * c + 1);
  const Vertex spare = static_cast<Vertex>(2 * c + 2);
  edges.emplace_back(0, key);
  edges.emplace_back(key, c);
  edges.emplace_back(1, rival);
  edges.emplace_back(rival, c + 1);
  edges.emplace_back(2, spare);
  edges.emplace_back(spare, c + 2);

  PositiveInstance out;
  out.graph = Graph(2 * c + 3, edges);
  out.key = key;
  out.rival = rival;
  return out;
}

PositiveInstance dominant_instance(int clique, int pair_count) {
  // Clique [0, clique); key and rival each adjacent to clique vertices 0
  // and 1; gadget j = (m_j, b_j) with m_j on a clique anchor and b_j, and
  // b_j on the key and the rival only.
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < clique; ++u)
    for (Vertex v = u + 1; v < clique; ++v) edges.emplace_back(u, v);
  const Vertex key = static_cast<Vertex>(clique);
  const Vertex rival = static_cast<Vertex>(clique + 1);
  edges.emplace_back(key, 0);
  edges.emplace_back(key, 1);
  edges.emplace_back(rival, 0);
  edges.emplace_back(rival, 1);
  for (int j = 0; j < pair_count; ++j) {
    const Vertex m = static_cast<Vertex>(clique + 2 + 2 * j);
    const Vertex b = static_cast<Vertex>(clique + 3 + 2 * j);
    edges.emplace_back(m, static_cast<Vertex>((2 + j) % clique));
    edges.emplace_back(m, b);
    edges.emplace_back(b, key);
    edges.emplace_back(b, rival);
  }
  PositiveInstance out;
  out.graph = Graph(clique + 2 + 2 * pair_count, edges);
  out.key = key;
  out.rival = rival;
  return out;
}

std::vector<VertexSet> subsets_up_to(const std::vector<Vertex>& candidates, int max_size) {
  std::vector<VertexSet> out;
  std::vector<Vertex> current;
  std::function<void(std::size_t)> expand = [&](std::size_t from) {
    if (!current.empty()) out.emplace_back(current);
    if (static_cast<int>(current.size()) == max_size) return;
    for (std::size_t i = from; i < candidates.size(); ++i) {
      current.push_back(candidates[i]);
      expand(i + 1);
      current.pop_back();
    }
  };
  expand(0);
  return out;
}

}  // namespace lomax::testing
