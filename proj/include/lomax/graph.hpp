#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lomax {

using Vertex = std::int32_t;

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids);
  explicit VertexSet(std::vector<Vertex> ids);

  bool contains(Vertex v) const;
  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  const std::vector<Vertex>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  VertexSet united(const VertexSet& other) const;

  bool operator==(const VertexSet&) const = default;

 private:
  std::vector<Vertex> members_;
};

/// Immutable simple undirected graph. Vertex ids are stable: deleting
/// vertices returns a new graph in which the survivors keep their
/// original ids, so results always refer to vertices of the base graph.
class Graph {
 public:
  Graph() = default;

  /// Graph over ids 0..vertex_count-1. Self-loops are rejected; duplicate
  /// pairs (either orientation) collapse to one edge.
  Graph(int vertex_count, std::span<const std::pair<Vertex, Vertex>> edges);
  Graph(int vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  std::size_t edge_count() const { return edge_count_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }

  bool has_vertex(Vertex v) const {
    return v >= 0 && v < id_limit() && present_[static_cast<std::size_t>(v)];
  }
  const std::vector<Vertex>& neighbors(Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const;
  int degree(Vertex v) const;

  /// One id past the largest id this graph (or its ancestor) can hold.
  int id_limit() const { return static_cast<int>(adj_.size()); }

  /// Copy with `removed` and all incident edges gone; ids are preserved.
  Graph without(const VertexSet& removed) const;

  /// Subgraph induced on `keep` (ids preserved).
  Graph induced(const std::vector<Vertex>& keep) const;

  /// Edges as (u, v) pairs with u < v, lexicographically sorted.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<char> present_;
  std::vector<std::vector<Vertex>> adj_;  // sorted neighbor lists, indexed by id
  std::vector<Vertex> vertices_;          // sorted active ids
  std::size_t edge_count_ = 0;
};

Graph delete_vertices(const Graph& g, const VertexSet& s);
bool is_connected(const Graph& g);
int degree(const Graph& g, Vertex v);

/// Components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

// Edge-list text format: header line "n <count>", then one "u v" line per
// edge. Lines starting with '#' are comments. Duplicate pairs collapse.
Graph read_edge_list(std::istream& in);
void write_edge_list(const Graph& g, std::ostream& out);
Graph load_graph(const std::string& path);
void save_graph(const Graph& g, const std::string& path);

}  // namespace lomax
