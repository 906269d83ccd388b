#include "lomax/gomory_hu.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "lomax/max_flow.hpp"

namespace lomax {

int GomoryHuTree::index_of(Vertex v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= id_to_index_.size() ||
      id_to_index_[static_cast<std::size_t>(v)] < 0)
    throw std::invalid_argument("gomory-hu: unknown vertex id");
  return id_to_index_[static_cast<std::size_t>(v)];
}

Vertex GomoryHuTree::parent(Vertex v) const {
  return parent_[static_cast<std::size_t>(index_of(v))];
}

int GomoryHuTree::cut_value(Vertex v) const {
  const int i = index_of(v);
  if (vertices_[static_cast<std::size_t>(i)] == root_)
    throw std::invalid_argument("gomory-hu: root has no parent edge");
  return cut_value_[static_cast<std::size_t>(i)];
}

int GomoryHuTree::query(Vertex s, Vertex t) const {
  int a = index_of(s);
  int b = index_of(t);
  if (a == b) throw std::invalid_argument("gomory-hu: query endpoints must differ");
  int best = std::numeric_limits<int>::max();
  while (a != b) {
    if (depth_[static_cast<std::size_t>(a)] >= depth_[static_cast<std::size_t>(b)]) {
      best = std::min(best, cut_value_[static_cast<std::size_t>(a)]);
      a = id_to_index_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(a)])];
    } else {
      best = std::min(best, cut_value_[static_cast<std::size_t>(b)]);
      b = id_to_index_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(b)])];
    }
  }
  return best;
}

const std::vector<std::vector<Vertex>>& GomoryHuTree::flow_paths(Vertex v) const {
  if (!with_paths_) throw std::logic_error("gomory-hu: built without flow paths");
  const int i = index_of(v);
  if (vertices_[static_cast<std::size_t>(i)] == root_)
    throw std::invalid_argument("gomory-hu: root has no parent edge");
  return flow_paths_[static_cast<std::size_t>(i)];
}

std::vector<Vertex> GomoryHuTree::side_of(Vertex v) const {
  const int start = index_of(v);
  if (vertices_[static_cast<std::size_t>(start)] == root_)
    throw std::invalid_argument("gomory-hu: root has no parent edge");
  std::vector<Vertex> side;
  std::vector<int> stack{start};
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    side.push_back(vertices_[static_cast<std::size_t>(u)]);
    for (Vertex child : children_[static_cast<std::size_t>(u)])
      stack.push_back(id_to_index_[static_cast<std::size_t>(child)]);
  }
  std::sort(side.begin(), side.end());
  return side;
}

std::vector<Vertex> GomoryHuTree::tree_edges() const {
  std::vector<Vertex> childs;
  for (Vertex v : vertices_)
    if (v != root_) childs.push_back(v);
  return childs;
}

GomoryHuTree gomory_hu(const Graph& g, bool with_flow_paths) {
  if (g.vertex_count() < 1) throw std::invalid_argument("gomory-hu: empty graph");
  if (!is_connected(g)) throw std::invalid_argument("gomory-hu: graph must be connected");

  const int n = g.vertex_count();
  GomoryHuTree tree;
  tree.vertices_ = g.vertices();
  tree.root_ = tree.vertices_.front();
  tree.id_to_index_.assign(static_cast<std::size_t>(g.id_limit()), -1);
  for (int i = 0; i < n; ++i)
    tree.id_to_index_[static_cast<std::size_t>(tree.vertices_[static_cast<std::size_t>(i)])] = i;
  tree.parent_.assign(static_cast<std::size_t>(n), tree.root_);
  tree.cut_value_.assign(static_cast<std::size_t>(n), 0);
  tree.with_paths_ = with_flow_paths;
  if (with_flow_paths) tree.flow_paths_.assign(static_cast<std::size_t>(n), {});

  FlowNetwork net(g);
  std::vector<char> on_source_side(static_cast<std::size_t>(g.id_limit()), 0);
  for (int i = 1; i < n; ++i) {
    const Vertex s = tree.vertices_[static_cast<std::size_t>(i)];
    const Vertex t = tree.parent_[static_cast<std::size_t>(i)];
    const int f = net.max_flow(s, t);
    tree.cut_value_[static_cast<std::size_t>(i)] = f;
    if (with_flow_paths) tree.flow_paths_[static_cast<std::size_t>(i)] = net.unit_paths();

    std::fill(on_source_side.begin(), on_source_side.end(), 0);
    net.source_side_mask(on_source_side);

    // Re-parent later vertices that fell on s's side of the cut. Parents of
    // processed vertices never change again, so every final tree edge keeps
    // the flow value (and paths) computed directly for its own endpoints.
    for (int j = i + 1; j < n; ++j) {
      const Vertex w = tree.vertices_[static_cast<std::size_t>(j)];
      if (on_source_side[static_cast<std::size_t>(w)] && tree.parent_[static_cast<std::size_t>(j)] == t)
        tree.parent_[static_cast<std::size_t>(j)] = s;
    }
  }
  tree.flow_computations_ = net.runs();

  tree.children_.assign(static_cast<std::size_t>(n), {});
  tree.depth_.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    const Vertex v = tree.vertices_[static_cast<std::size_t>(i)];
    if (v == tree.root_) continue;
    const Vertex p = tree.parent_[static_cast<std::size_t>(i)];
    tree.children_[static_cast<std::size_t>(tree.id_to_index_[static_cast<std::size_t>(p)])]
        .push_back(v);
  }
  // Depths via BFS from the root over children lists.
  std::vector<int> order{tree.id_to_index_[static_cast<std::size_t>(tree.root_)]};
  for (std::size_t h = 0; h < order.size(); ++h) {
    const int u = order[h];
    for (Vertex child : tree.children_[static_cast<std::size_t>(u)]) {
      const int ci = tree.id_to_index_[static_cast<std::size_t>(child)];
      tree.depth_[static_cast<std::size_t>(ci)] = tree.depth_[static_cast<std::size_t>(u)] + 1;
      order.push_back(ci);
    }
  }
  return tree;
}

}  // namespace lomax
