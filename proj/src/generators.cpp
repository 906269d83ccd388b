#include "lomax/generators.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "lomax/rng.hpp"

namespace lomax {
namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

void validate(const GeneratorSpec& s) {
  if (s.n < 3) throw std::invalid_argument("generator: n must be at least 3");
  switch (s.family) {
    case GraphFamily::ErdosRenyi:
      if (s.p < 0.0 || s.p > 1.0) throw std::invalid_argument("er: p must be in [0,1]");
      break;
    case GraphFamily::WattsStrogatz:
      if (s.k_ring < 1 || 2 * s.k_ring >= s.n)
        throw std::invalid_argument("ws: need 1 <= k and 2k < n");
      if (s.p_rewire < 0.0 || s.p_rewire > 1.0)
        throw std::invalid_argument("ws: p must be in [0,1]");
      break;
    case GraphFamily::BarabasiAlbert:
    case GraphFamily::HolmeKim:
      if (s.m0 < 2 || s.m0 >= s.n) throw std::invalid_argument("ba/hk: need 2 <= m0 < n");
      if (s.m < 1 || s.m > s.m0) throw std::invalid_argument("ba/hk: need 1 <= m <= m0");
      if (s.triad_p < 0.0 || s.triad_p > 1.0)
        throw std::invalid_argument("hk: triad probability must be in [0,1]");
      break;
    case GraphFamily::CentralizedPowerLaw:
      if (s.leaders < 3 || s.leaders > s.n)
        throw std::invalid_argument("cpl: need 3 <= a <= n");
      if (s.groups < 1) throw std::invalid_argument("cpl: need b >= 1");
      if (s.unassigned < 0 || s.leaders - s.unassigned < s.groups)
        throw std::invalid_argument("cpl: need a - c >= b so every group has a leader");
      if (s.max_edges_per_vertex < 1)
        throw std::invalid_argument("cpl: need maxe >= 1");
      break;
  }
}

EdgeList erdos_renyi_edges(int n, double p, Rng& rng) {
  EdgeList edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.chance(p)) edges.emplace_back(u, v);
  return edges;
}

EdgeList watts_strogatz_edges(int n, int k, double p_rewire, Rng& rng) {
  // Ring lattice joining each vertex to its k nearest on each side, then
  // each lattice edge keeps its lower endpoint and is re-targeted with
  // probability p_rewire (no self-loops, no duplicates).
  std::vector<std::set<Vertex>> adj(static_cast<std::size_t>(n));
  for (Vertex u = 0; u < n; ++u) {
    for (int d = 1; d <= k; ++d) {
      const Vertex v = static_cast<Vertex>((u + d) % n);
      adj[static_cast<std::size_t>(u)].insert(v);
      adj[static_cast<std::size_t>(v)].insert(u);
    }
  }
  for (Vertex u = 0; u < n; ++u) {
    for (int d = 1; d <= k; ++d) {
      const Vertex v = static_cast<Vertex>((u + d) % n);
      if (!adj[static_cast<std::size_t>(u)].contains(v)) continue;  // already rewired away
      if (!rng.chance(p_rewire)) continue;
      if (adj[static_cast<std::size_t>(u)].size() >= static_cast<std::size_t>(n - 1))
        continue;  // u is saturated, nothing valid to rewire to
      Vertex t;
      do {
        t = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
      } while (t == u || adj[static_cast<std::size_t>(u)].contains(t));
      adj[static_cast<std::size_t>(u)].erase(v);
      adj[static_cast<std::size_t>(v)].erase(u);
      adj[static_cast<std::size_t>(u)].insert(t);
      adj[static_cast<std::size_t>(t)].insert(u);
    }
  }
  EdgeList edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : adj[static_cast<std::size_t>(u)])
      if (u < v) edges.emplace_back(u, v);
  return edges;
}

// Draws `count` distinct vertices with probability proportional to degree,
// represented by the endpoint multiset.
std::vector<Vertex> preferential_targets(const std::vector<Vertex>& endpoints, int count,
                                         Rng& rng) {
  std::vector<Vertex> targets;
  while (static_cast<int>(targets.size()) < count) {
    const Vertex t = endpoints[rng.below(endpoints.size())];
    if (std::find(targets.begin(), targets.end(), t) == targets.end())
      targets.push_back(t);
  }
  return targets;
}

EdgeList barabasi_albert_edges(int n, int m0, int m, Rng& rng) {
  EdgeList edges;
  std::vector<Vertex> endpoints;  // one entry per edge endpoint
  for (Vertex v = 1; v < m0; ++v) {  // seed path keeps the start connected
    edges.emplace_back(v - 1, v);
    endpoints.push_back(v - 1);
    endpoints.push_back(v);
  }
  for (Vertex v = m0; v < n; ++v) {
    const auto targets = preferential_targets(endpoints, m, rng);
    for (Vertex t : targets) {
      edges.emplace_back(t, v);
      endpoints.push_back(t);
      endpoints.push_back(v);
    }
  }
  return edges;
}

EdgeList holme_kim_edges(int n, int m0, int m, double triad_p, Rng& rng) {
  std::vector<std::set<Vertex>> adj(static_cast<std::size_t>(n));
  std::vector<Vertex> endpoints;
  EdgeList edges;
  auto link = [&](Vertex a, Vertex b) {
    edges.emplace_back(a, b);
    adj[static_cast<std::size_t>(a)].insert(b);
    adj[static_cast<std::size_t>(b)].insert(a);
    endpoints.push_back(a);
    endpoints.push_back(b);
  };
  for (Vertex v = 1; v < m0; ++v) link(v - 1, v);

  for (Vertex v = m0; v < n; ++v) {
    Vertex last_target = -1;
    for (int e = 0; e < m; ++e) {
      Vertex t = -1;
      if (e > 0 && rng.chance(triad_p)) {
        // Clustering step: close a triangle with a neighbor of the vertex
        // reached by the previous attachment, when one is free.
        std::vector<Vertex> options;
        for (Vertex w : adj[static_cast<std::size_t>(last_target)])
          if (w != v && !adj[static_cast<std::size_t>(v)].contains(w)) options.push_back(w);
        if (!options.empty()) t = options[rng.below(options.size())];
      }
      if (t < 0) {
        do {
          t = endpoints[rng.below(endpoints.size())];
        } while (t == v || adj[static_cast<std::size_t>(v)].contains(t));
      }
      link(v, t);
      last_target = t;
    }
  }
  return edges;
}

Graph build_centralized(const GeneratorSpec& s, Rng& rng, CplLayout* layout) {
  const int a = s.leaders, b = s.groups, c = s.unassigned;
  // Leadership core evolves by preferential attachment (m0=3, m=2); with
  // a == 3 that is just the seed path.
  EdgeList edges = barabasi_albert_edges(a, 3, 2, rng);

  std::vector<int> group_of(static_cast<std::size_t>(s.n), -1);
  std::vector<std::vector<Vertex>> group_members(static_cast<std::size_t>(b));
  std::vector<std::vector<Vertex>> group_leaders(static_cast<std::size_t>(b));
  for (Vertex leader = 0; leader < a - c; ++leader) {
    const int group = leader % b;
    group_members[static_cast<std::size_t>(group)].push_back(leader);
    group_leaders[static_cast<std::size_t>(group)].push_back(leader);
  }

  std::vector<int> degree(static_cast<std::size_t>(s.n), 0);
  for (auto [u, v] : edges) {
    ++degree[static_cast<std::size_t>(u)];
    ++degree[static_cast<std::size_t>(v)];
  }

  for (Vertex v = a; v < s.n; ++v) {
    const int group = static_cast<int>(rng.below(static_cast<std::uint64_t>(b)));
    auto& members = group_members[static_cast<std::size_t>(group)];
    const int want = rng.range(1, s.max_edges_per_vertex);
    const int count = std::min<int>(want, static_cast<int>(members.size()));
    // Preferential attachment within the group; leaders start with their
    // core degree, satellite members with degree at least 1.
    std::vector<Vertex> chosen;
    for (int e = 0; e < count; ++e) {
      std::int64_t total = 0;  // every group member has degree >= 1 already
      for (Vertex w : members)
        if (std::find(chosen.begin(), chosen.end(), w) == chosen.end())
          total += degree[static_cast<std::size_t>(w)];
      std::int64_t roll = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(total)));
      Vertex t = -1;
      for (Vertex w : members) {
        if (std::find(chosen.begin(), chosen.end(), w) != chosen.end()) continue;
        roll -= degree[static_cast<std::size_t>(w)];
        if (roll < 0) {
          t = w;
          break;
        }
      }
      chosen.push_back(t);
      edges.emplace_back(t, v);
      ++degree[static_cast<std::size_t>(t)];
      ++degree[static_cast<std::size_t>(v)];
    }
    members.push_back(v);
    group_of[static_cast<std::size_t>(v)] = group;
  }

  if (layout) {
    layout->group_of = std::move(group_of);
    layout->group_leaders = std::move(group_leaders);
  }
  return Graph(s.n, edges);
}

Graph build_once(const GeneratorSpec& s, Rng& rng, CplLayout* layout) {
  switch (s.family) {
    case GraphFamily::ErdosRenyi:
      return Graph(s.n, erdos_renyi_edges(s.n, s.p, rng));
    case GraphFamily::WattsStrogatz:
      return Graph(s.n, watts_strogatz_edges(s.n, s.k_ring, s.p_rewire, rng));
    case GraphFamily::BarabasiAlbert:
      return Graph(s.n, barabasi_albert_edges(s.n, s.m0, s.m, rng));
    case GraphFamily::HolmeKim:
      return Graph(s.n, holme_kim_edges(s.n, s.m0, s.m, s.triad_p, rng));
    case GraphFamily::CentralizedPowerLaw:
      return build_centralized(s, rng, layout);
  }
  throw std::logic_error("unreachable");
}

Graph generate_impl(const GeneratorSpec& spec, CplLayout* layout) {
  validate(spec);
  constexpr int kMaxAttempts = 100;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Rng rng(derive_seed(spec.seed, static_cast<std::uint64_t>(attempt)));
    Graph g = build_once(spec, rng, layout);
    if (is_connected(g)) return g;
  }
  throw GenerationError("generator: no connected instance within " +
                        std::to_string(kMaxAttempts) + " attempts (" + spec.describe() + ")");
}

double parse_number(const std::string& value, const std::string& key) {
  try {
    std::size_t used = 0;
    const double out = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return out;
  } catch (const std::exception&) {
    throw std::invalid_argument("generator spec: bad value for '" + key + "': " + value);
  }
}

}  // namespace

std::string family_name(GraphFamily family) {
  switch (family) {
    case GraphFamily::ErdosRenyi: return "erdos_renyi";
    case GraphFamily::WattsStrogatz: return "watts_strogatz";
    case GraphFamily::BarabasiAlbert: return "barabasi_albert";
    case GraphFamily::HolmeKim: return "holme_kim";
    case GraphFamily::CentralizedPowerLaw: return "centralized_power_law";
  }
  return "?";
}

GeneratorSpec GeneratorSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("generator spec: expected '<family>:k=v,...'");
  const std::string family(text.substr(0, colon));

  GeneratorSpec spec;
  if (family == "er") spec.family = GraphFamily::ErdosRenyi;
  else if (family == "ws") spec.family = GraphFamily::WattsStrogatz;
  else if (family == "ba") spec.family = GraphFamily::BarabasiAlbert;
  else if (family == "hk") spec.family = GraphFamily::HolmeKim;
  else if (family == "cpl") spec.family = GraphFamily::CentralizedPowerLaw;
  else throw std::invalid_argument("generator spec: unknown family '" + family + "'");

  std::map<std::string, std::string> kv;
  std::stringstream rest{std::string(text.substr(colon + 1))};
  std::string item;
  while (std::getline(rest, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("generator spec: expected key=value, got '" + item + "'");
    kv[item.substr(0, eq)] = item.substr(eq + 1);
  }

  auto take_int = [&](const char* key, int& out) {
    auto it = kv.find(key);
    if (it == kv.end()) return false;
    out = static_cast<int>(parse_number(it->second, key));
    kv.erase(it);
    return true;
  };
  auto take_double = [&](const char* key, double& out) {
    auto it = kv.find(key);
    if (it == kv.end()) return false;
    out = parse_number(it->second, key);
    kv.erase(it);
    return true;
  };

  if (!take_int("n", spec.n)) throw std::invalid_argument("generator spec: missing n");
  switch (spec.family) {
    case GraphFamily::ErdosRenyi:
      if (!take_double("p", spec.p)) throw std::invalid_argument("er spec: missing p");
      break;
    case GraphFamily::WattsStrogatz:
      if (!take_int("k", spec.k_ring)) throw std::invalid_argument("ws spec: missing k");
      if (!take_double("p", spec.p_rewire)) throw std::invalid_argument("ws spec: missing p");
      break;
    case GraphFamily::BarabasiAlbert:
      if (!take_int("m0", spec.m0)) throw std::invalid_argument("ba spec: missing m0");
      if (!take_int("m", spec.m)) throw std::invalid_argument("ba spec: missing m");
      break;
    case GraphFamily::HolmeKim:
      if (!take_int("m0", spec.m0)) throw std::invalid_argument("hk spec: missing m0");
      if (!take_int("m", spec.m)) throw std::invalid_argument("hk spec: missing m");
      take_double("pt", spec.triad_p);
      break;
    case GraphFamily::CentralizedPowerLaw:
      if (!take_int("a", spec.leaders)) throw std::invalid_argument("cpl spec: missing a");
      if (!take_int("b", spec.groups)) throw std::invalid_argument("cpl spec: missing b");
      if (!take_int("c", spec.unassigned)) throw std::invalid_argument("cpl spec: missing c");
      if (!take_int("maxe", spec.max_edges_per_vertex))
        throw std::invalid_argument("cpl spec: missing maxe");
      break;
  }
  if (!kv.empty())
    throw std::invalid_argument("generator spec: unknown key '" + kv.begin()->first + "'");
  return spec;
}

std::string GeneratorSpec::short_label() const {
  switch (family) {
    case GraphFamily::ErdosRenyi: return "er";
    case GraphFamily::WattsStrogatz: return "ws";
    case GraphFamily::BarabasiAlbert: return "ba";
    case GraphFamily::HolmeKim: return "hk";
    case GraphFamily::CentralizedPowerLaw: return "cpl";
  }
  return "?";
}

std::string GeneratorSpec::describe() const {
  char buf[160];
  switch (family) {
    case GraphFamily::ErdosRenyi:
      std::snprintf(buf, sizeof(buf), "er:n=%d,p=%g", n, p);
      break;
    case GraphFamily::WattsStrogatz:
      std::snprintf(buf, sizeof(buf), "ws:n=%d,k=%d,p=%g", n, k_ring, p_rewire);
      break;
    case GraphFamily::BarabasiAlbert:
      std::snprintf(buf, sizeof(buf), "ba:n=%d,m0=%d,m=%d", n, m0, m);
      break;
    case GraphFamily::HolmeKim:
      std::snprintf(buf, sizeof(buf), "hk:n=%d,m0=%d,m=%d,pt=%g", n, m0, m, triad_p);
      break;
    case GraphFamily::CentralizedPowerLaw:
      std::snprintf(buf, sizeof(buf), "cpl:n=%d,a=%d,b=%d,c=%d,maxe=%d", n, leaders, groups,
                    unassigned, max_edges_per_vertex);
      break;
  }
  return buf;
}

Graph generate(const GeneratorSpec& spec) { return generate_impl(spec, nullptr); }

Graph generate_centralized(const GeneratorSpec& spec, CplLayout* layout) {
  if (spec.family != GraphFamily::CentralizedPowerLaw)
    throw std::invalid_argument("generate_centralized: spec family mismatch");
  return generate_impl(spec, layout);
}

GraphStats summarize(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("summarize: need at least 2 vertices");
  if (!is_connected(g)) throw std::invalid_argument("summarize: graph must be connected");

  GraphStats stats;
  stats.density = static_cast<double>(g.edge_count()) /
                  (static_cast<double>(n) * static_cast<double>(n - 1) / 2.0);

  // Mean BFS distance over unordered pairs.
  std::int64_t dist_total = 0;
  std::vector<int> dist(static_cast<std::size_t>(g.id_limit()));
  std::vector<Vertex> queue;
  for (Vertex s : g.vertices()) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.assign(1, s);
    dist[static_cast<std::size_t>(s)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (Vertex w : g.neighbors(u)) {
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
          queue.push_back(w);
        }
      }
    }
    for (Vertex t : g.vertices())
      if (t > s) dist_total += dist[static_cast<std::size_t>(t)];
  }
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  stats.avg_path_length = static_cast<double>(dist_total) / pairs;

  // Mean local clustering; vertices of degree < 2 contribute 0.
  double clustering_sum = 0.0;
  for (Vertex v : g.vertices()) {
    const auto& nb = g.neighbors(v);
    if (nb.size() < 2) continue;
    int closed = 0;
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (g.has_edge(nb[i], nb[j])) ++closed;
    clustering_sum += 2.0 * static_cast<double>(closed) /
                      (static_cast<double>(nb.size()) * static_cast<double>(nb.size() - 1));
  }
  stats.clustering_coefficient = clustering_sum / static_cast<double>(n);
  return stats;
}

}  // namespace lomax
