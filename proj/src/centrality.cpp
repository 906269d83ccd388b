#include "lomax/centrality.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace lomax {
namespace {

// dist and sigma (shortest-path counts) from src over compact indices.
void bfs_count(const std::vector<std::vector<int>>& adj, int src,
               std::vector<int>& dist, std::vector<std::uint64_t>& sigma) {
  const std::size_t n = adj.size();
  dist.assign(n, -1);
  sigma.assign(n, 0);
  std::vector<int> queue;
  queue.reserve(n);
  dist[static_cast<std::size_t>(src)] = 0;
  sigma[static_cast<std::size_t>(src)] = 1;
  queue.push_back(src);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    for (int w : adj[static_cast<std::size_t>(u)]) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(w);
      }
      if (dist[static_cast<std::size_t>(w)] == dist[static_cast<std::size_t>(u)] + 1)
        sigma[static_cast<std::size_t>(w)] += sigma[static_cast<std::size_t>(u)];
    }
  }
}

struct CompactGraph {
  std::vector<Vertex> ids;
  std::vector<std::vector<int>> adj;
};

CompactGraph compact(const Graph& g) {
  CompactGraph c;
  c.ids = g.vertices();
  std::vector<int> index(static_cast<std::size_t>(g.id_limit()), -1);
  for (std::size_t i = 0; i < c.ids.size(); ++i)
    index[static_cast<std::size_t>(c.ids[i])] = static_cast<int>(i);
  c.adj.resize(c.ids.size());
  for (std::size_t i = 0; i < c.ids.size(); ++i)
    for (Vertex w : g.neighbors(c.ids[i]))
      c.adj[i].push_back(index[static_cast<std::size_t>(w)]);
  return c;
}

std::vector<std::uint64_t> betweenness_all(const CompactGraph& c) {
  const std::size_t n = c.ids.size();
  std::vector<std::vector<int>> dist(n);
  std::vector<std::vector<std::uint64_t>> sigma(n);
  for (std::size_t s = 0; s < n; ++s) bfs_count(c.adj, static_cast<int>(s), dist[s], sigma[s]);

  std::vector<std::uint64_t> count(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s + 1; t < n; ++t) {
      if (dist[s][t] < 0) continue;
      for (std::size_t v = 0; v < n; ++v) {
        if (v == s || v == t) continue;
        if (dist[s][v] < 0 || dist[t][v] < 0) continue;
        if (dist[s][v] + dist[t][v] == dist[s][t])
          count[v] += sigma[s][v] * sigma[t][v];
      }
    }
  }
  return count;
}

}  // namespace

std::vector<double> tied_ranks(const std::vector<double>& values, bool descending) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return descending ? values[a] > values[b] : values[a] < values[b];
  });
  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double mean_rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t p = i; p <= j; ++p) ranks[order[p]] = mean_rank;
    i = j + 1;
  }
  return ranks;
}

CentralityTable centrality_table(const Graph& g) {
  if (g.vertex_count() < 2)
    throw std::invalid_argument("centrality: need at least 2 vertices");
  if (!is_connected(g)) throw std::invalid_argument("centrality: graph must be connected");

  const CompactGraph c = compact(g);
  const std::size_t n = c.ids.size();

  CentralityTable table;
  table.vertices = c.ids;
  table.degree.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    table.degree[i] = static_cast<int>(c.adj[i].size());
  table.betweenness = betweenness_all(c);

  table.closeness.resize(n);
  std::vector<int> dist;
  std::vector<std::uint64_t> sigma;
  for (std::size_t i = 0; i < n; ++i) {
    bfs_count(c.adj, static_cast<int>(i), dist, sigma);
    std::int64_t total = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) total += dist[j];
    table.closeness[i] = static_cast<double>(total) / static_cast<double>(n - 1);
  }

  std::vector<double> deg_values(n), btw_values(n);
  for (std::size_t i = 0; i < n; ++i) {
    deg_values[i] = table.degree[i];
    btw_values[i] = static_cast<double>(table.betweenness[i]);
  }
  table.degree_rank = tied_ranks(deg_values, /*descending=*/true);
  table.betweenness_rank = tied_ranks(btw_values, /*descending=*/true);
  table.closeness_rank = tied_ranks(table.closeness, /*descending=*/false);
  table.mean_rank.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    table.mean_rank[i] =
        (table.degree_rank[i] + table.betweenness_rank[i] + table.closeness_rank[i]) / 3.0;
  return table;
}

std::uint64_t betweenness_count(const Graph& g, Vertex v) {
  if (!g.has_vertex(v)) throw std::invalid_argument("betweenness: unknown vertex");
  const CompactGraph c = compact(g);
  const auto counts = betweenness_all(c);
  for (std::size_t i = 0; i < c.ids.size(); ++i)
    if (c.ids[i] == v) return counts[i];
  return 0;
}

Vertex select_key_vertex(const Graph& g) {
  const CentralityTable table = centrality_table(g);
  std::size_t best = 0;
  for (std::size_t i = 1; i < table.vertices.size(); ++i)
    if (table.mean_rank[i] < table.mean_rank[best]) best = i;
  return table.vertices[best];  // vertices sorted, so first minimum = lowest id
}

std::int64_t betweenness_effect(const Graph& g, Vertex k, Vertex i) {
  if (i == k) throw std::invalid_argument("betweenness_effect: i must differ from k");
  const std::int64_t before = static_cast<std::int64_t>(betweenness_count(g, k));
  const std::int64_t after = static_cast<std::int64_t>(betweenness_count(g.without({i}), k));
  return after - before;
}

std::string centrality_csv(const Graph& g) {
  const CentralityTable table = centrality_table(g);
  std::string out = "id,degree,betweenness,closeness,mean_rank\n";
  char row[128];
  for (std::size_t i = 0; i < table.vertices.size(); ++i) {
    std::snprintf(row, sizeof(row), "%d,%d,%llu,%.6f,%.4f\n", table.vertices[i],
                  table.degree[i],
                  static_cast<unsigned long long>(table.betweenness[i]),
                  table.closeness[i], table.mean_rank[i]);
    out += row;
  }
  return out;
}

}  // namespace lomax
