#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace weilgraph {

using Vertex = std::size_t;
using EdgeIndex = std::size_t;

// Raised when an argument violates an operation's precondition (bad index,
// disconnected input, non-cycle chain, ...). The CLI maps it to its own
// exit code.
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  bool is_loop() const { return u == v; }
  Vertex other(Vertex w) const { return w == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Finite undirected multigraph. Loops and parallel edges are allowed and
// edges are identified by their position in the edge list.
class MultiGraph {
public:
  MultiGraph() = default;
  MultiGraph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }

  // Edges incident to v; a loop is listed once.
  const std::vector<EdgeIndex>& incident(Vertex v) const { return incidence_.at(v); }

  friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeIndex>> incidence_;
};

// Sorted, duplicate-free set of edge indices.
class EdgeSubset {
public:
  EdgeSubset() = default;
  EdgeSubset(std::initializer_list<EdgeIndex> members);
  explicit EdgeSubset(std::vector<EdgeIndex> members);

  static EdgeSubset all(const MultiGraph& g);

  const std::vector<EdgeIndex>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(EdgeIndex e) const;
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  // Throws PreconditionError if some member is not an edge of g.
  void check_valid_for(const MultiGraph& g) const;

  friend bool operator==(const EdgeSubset&, const EdgeSubset&) = default;

private:
  std::vector<EdgeIndex> members_;
};

// Edge-deleted graph together with the index of each surviving edge in
// the parent graph.
struct EdgeDeletion {
  MultiGraph graph;
  std::vector<EdgeIndex> parent_edge;
};

struct SubdivisionMap {
  MultiGraph parent;
  MultiGraph child;
  // Child index of parent vertex i is original_vertices[i]. Originals come
  // first in the child numbering, interior vertices follow edge by edge.
  std::vector<Vertex> original_vertices;
  // For each parent edge, the child edges of its path in order from
  // parent endpoint u to v.
  std::vector<std::vector<EdgeIndex>> edge_paths;
  std::size_t factor = 1;

  // Original vertices plus all interior subdivision vertices.
  std::vector<Vertex> regular_vertices() const;
};

// Per-vertex component label in [0, component_count).
struct Components {
  std::vector<std::size_t> label;
  std::size_t count = 0;
};

Components connected_components(const MultiGraph& g);
std::size_t component_count(const MultiGraph& g);
bool is_connected(const MultiGraph& g);

// |E| - |V| + #components.
std::size_t genus(const MultiGraph& g);

EdgeSubset non_separating_edges(const MultiGraph& g);

// Greedy union-find over edges in index order.
EdgeSubset spanning_forest(const MultiGraph& g);

EdgeDeletion delete_edges(const MultiGraph& g, const EdgeSubset& removed);

// Replaces every edge in `which` by a path of r edges. Throws
// PreconditionError for r == 0.
SubdivisionMap subdivide(const MultiGraph& g, std::size_t r, const EdgeSubset& which);

}  // namespace weilgraph
