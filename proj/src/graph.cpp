#include "weilgraph/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace weilgraph {
namespace {

class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

private:
  std::vector<std::size_t> parent_;
};

}  // namespace

MultiGraph::MultiGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)), incidence_(vertex_count) {
  for (EdgeIndex e = 0; e < edges_.size(); ++e) {
    const Edge& ed = edges_[e];
    if (ed.u >= vertex_count_ || ed.v >= vertex_count_) {
      throw PreconditionError("edge " + std::to_string(e) + " has an endpoint outside [0, " +
                              std::to_string(vertex_count_) + ")");
    }
    incidence_[ed.u].push_back(e);
    if (!ed.is_loop()) incidence_[ed.v].push_back(e);
  }
}

EdgeSubset::EdgeSubset(std::initializer_list<EdgeIndex> members)
    : EdgeSubset(std::vector<EdgeIndex>(members)) {}

EdgeSubset::EdgeSubset(std::vector<EdgeIndex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

EdgeSubset EdgeSubset::all(const MultiGraph& g) {
  std::vector<EdgeIndex> m(g.edge_count());
  std::iota(m.begin(), m.end(), 0);
  return EdgeSubset(std::move(m));
}

bool EdgeSubset::contains(EdgeIndex e) const {
  return std::binary_search(members_.begin(), members_.end(), e);
}

void EdgeSubset::check_valid_for(const MultiGraph& g) const {
  if (!members_.empty() && members_.back() >= g.edge_count()) {
    throw PreconditionError("edge index " + std::to_string(members_.back()) +
                            " out of range for a graph with " + std::to_string(g.edge_count()) +
                            " edges");
  }
}

std::vector<Vertex> SubdivisionMap::regular_vertices() const {
  std::vector<Vertex> out(child.vertex_count());
  std::iota(out.begin(), out.end(), 0);
  return out;
}

Components connected_components(const MultiGraph& g) {
  UnionFind uf(g.vertex_count());
  for (const Edge& e : g.edges()) uf.unite(e.u, e.v);
  Components c;
  c.label.assign(g.vertex_count(), 0);
  std::vector<std::size_t> root_label(g.vertex_count(), SIZE_MAX);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const std::size_t r = uf.find(v);
    if (root_label[r] == SIZE_MAX) root_label[r] = c.count++;
    c.label[v] = root_label[r];
  }
  return c;
}

std::size_t component_count(const MultiGraph& g) { return connected_components(g).count; }

bool is_connected(const MultiGraph& g) { return component_count(g) <= 1; }

std::size_t genus(const MultiGraph& g) {
  return g.edge_count() + component_count(g) - g.vertex_count();
}

EdgeSubset non_separating_edges(const MultiGraph& g) {
  // Non-separating iff the endpoints stay connected once the edge is gone.
  std::vector<EdgeIndex> out;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (g.edge(e).is_loop()) {
      out.push_back(e);
      continue;
    }
    UnionFind uf(g.vertex_count());
    for (EdgeIndex f = 0; f < g.edge_count(); ++f)
      if (f != e) uf.unite(g.edge(f).u, g.edge(f).v);
    if (uf.find(g.edge(e).u) == uf.find(g.edge(e).v)) out.push_back(e);
  }
  return EdgeSubset(std::move(out));
}

EdgeSubset spanning_forest(const MultiGraph& g) {
  UnionFind uf(g.vertex_count());
  std::vector<EdgeIndex> out;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e)
    if (uf.unite(g.edge(e).u, g.edge(e).v)) out.push_back(e);
  return EdgeSubset(std::move(out));
}

EdgeDeletion delete_edges(const MultiGraph& g, const EdgeSubset& removed) {
  removed.check_valid_for(g);
  std::vector<Edge> kept;
  EdgeDeletion out;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (removed.contains(e)) continue;
    kept.push_back(g.edge(e));
    out.parent_edge.push_back(e);
  }
  out.graph = MultiGraph(g.vertex_count(), std::move(kept));
  return out;
}

SubdivisionMap subdivide(const MultiGraph& g, std::size_t r, const EdgeSubset& which) {
  if (r == 0) throw PreconditionError("subdivision factor must be at least 1");
  which.check_valid_for(g);

  SubdivisionMap out;
  out.parent = g;
  out.factor = r;
  out.original_vertices.resize(g.vertex_count());
  std::iota(out.original_vertices.begin(), out.original_vertices.end(), 0);

  std::vector<Edge> edges;
  std::size_t next_vertex = g.vertex_count();
  out.edge_paths.resize(g.edge_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const std::size_t parts = which.contains(e) ? r : 1;
    Vertex prev = ed.u;
    for (std::size_t k = 1; k <= parts; ++k) {
      const Vertex next = (k == parts) ? ed.v : next_vertex++;
      out.edge_paths[e].push_back(edges.size());
      edges.push_back({prev, next});
      prev = next;
    }
  }
  out.child = MultiGraph(next_vertex, std::move(edges));
  return out;
}

}  // namespace weilgraph
