#include "lomax/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace lomax {

VertexSet::VertexSet(std::initializer_list<Vertex> ids)
    : VertexSet(std::vector<Vertex>(ids)) {}

VertexSet::VertexSet(std::vector<Vertex> ids) : members_(std::move(ids)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet VertexSet::united(const VertexSet& other) const {
  std::vector<Vertex> merged;
  merged.reserve(members_.size() + other.members_.size());
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(merged));
  VertexSet result;
  result.members_ = std::move(merged);
  return result;
}

Graph::Graph(int vertex_count, std::span<const std::pair<Vertex, Vertex>> edges) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  present_.assign(static_cast<std::size_t>(vertex_count), 1);
  adj_.assign(static_cast<std::size_t>(vertex_count), {});
  vertices_.resize(static_cast<std::size_t>(vertex_count));
  for (int v = 0; v < vertex_count; ++v) vertices_[static_cast<std::size_t>(v)] = v;

  for (auto [u, v] : edges) {
    if (!has_vertex(u) || !has_vertex(v))
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop rejected");
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    edge_count_ += list.size();
  }
  edge_count_ /= 2;
}

Graph::Graph(int vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : Graph(vertex_count, std::span<const std::pair<Vertex, Vertex>>(edges.begin(),
                                                                     edges.size())) {}

void Graph::check_vertex(Vertex v) const {
  if (!has_vertex(v)) throw std::invalid_argument("unknown vertex id");
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adj_[static_cast<std::size_t>(v)];
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  const auto& list = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

int Graph::degree(Vertex v) const {
  check_vertex(v);
  return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

Graph Graph::without(const VertexSet& removed) const {
  for (Vertex v : removed) check_vertex(v);
  Graph out;
  out.present_ = present_;
  out.adj_.assign(adj_.size(), {});
  for (Vertex v : removed) out.present_[static_cast<std::size_t>(v)] = 0;
  for (Vertex v : vertices_) {
    if (!out.present_[static_cast<std::size_t>(v)]) continue;
    out.vertices_.push_back(v);
    auto& list = out.adj_[static_cast<std::size_t>(v)];
    for (Vertex w : adj_[static_cast<std::size_t>(v)])
      if (out.present_[static_cast<std::size_t>(w)]) list.push_back(w);
    out.edge_count_ += list.size();
  }
  out.edge_count_ /= 2;
  return out;
}

Graph Graph::induced(const std::vector<Vertex>& keep) const {
  std::vector<char> keep_mask(adj_.size(), 0);
  for (Vertex v : keep) {
    check_vertex(v);
    keep_mask[static_cast<std::size_t>(v)] = 1;
  }
  Graph out;
  out.present_.assign(adj_.size(), 0);
  out.adj_.assign(adj_.size(), {});
  for (Vertex v : vertices_) {
    if (!keep_mask[static_cast<std::size_t>(v)]) continue;
    out.present_[static_cast<std::size_t>(v)] = 1;
    out.vertices_.push_back(v);
    auto& list = out.adj_[static_cast<std::size_t>(v)];
    for (Vertex w : adj_[static_cast<std::size_t>(v)])
      if (keep_mask[static_cast<std::size_t>(w)]) list.push_back(w);
    out.edge_count_ += list.size();
  }
  out.edge_count_ /= 2;
  return out;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count_);
  for (Vertex u : vertices_)
    for (Vertex v : adj_[static_cast<std::size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph delete_vertices(const Graph& g, const VertexSet& s) { return g.without(s); }

bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(g.id_limit()), 0);
  std::vector<Vertex> stack{g.vertices().front()};
  seen[static_cast<std::size_t>(stack.front())] = 1;
  int reached = 0;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    ++reached;
    for (Vertex w : g.neighbors(u)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  return reached == g.vertex_count();
}

int degree(const Graph& g, Vertex v) { return g.degree(v); }

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> components;
  std::vector<char> seen(static_cast<std::size_t>(g.id_limit()), 0);
  for (Vertex start : g.vertices()) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<Vertex> comp;
    std::vector<Vertex> stack{start};
    seen[static_cast<std::size_t>(start)] = 1;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<std::pair<Vertex, Vertex>> edges;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream row(line);
    if (n < 0) {
      std::string tag;
      row >> tag >> n;
      if (tag != "n" || row.fail() || n < 0)
        throw std::invalid_argument("edge list: bad header, expected 'n <count>'");
      continue;
    }
    Vertex u, v;
    row >> u >> v;
    if (row.fail()) throw std::invalid_argument("edge list: bad edge line: " + line);
    edges.emplace_back(u, v);
  }
  if (n < 0) throw std::invalid_argument("edge list: missing 'n <count>' header");
  return Graph(n, edges);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  // The format names vertices 0..n-1 implicitly, so sparse id sets
  // (deletion views) are not representable.
  if (!g.vertices().empty() && g.vertices().back() != g.vertex_count() - 1)
    throw std::invalid_argument("edge list: graph ids must be dense 0..n-1");
  out << "n " << g.vertex_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return read_edge_list(in);
}

void save_graph(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write graph file: " + path);
  write_edge_list(g, out);
}

}  // namespace lomax
