#include "weilgraph/homology.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace weilgraph {

template <class Tag>
GradedVector<Tag> GradedVector<Tag>::from_support(std::size_t n, const std::vector<std::size_t>& support) {
  GradedVector out = zero(n);
  for (std::size_t i : support) {
    if (i >= n) throw PreconditionError("index " + std::to_string(i) + " out of range (size " + std::to_string(n) + ")");
    out.bits(static_cast<Eigen::Index>(i)) ^= 1u;
  }
  return out;
}

template <class Tag>
bool GradedVector<Tag>::is_zero() const {
  for (Eigen::Index i = 0; i < bits.size(); ++i)
    if (bits(i) & 1u) return false;
  return true;
}

template <class Tag>
std::vector<std::size_t> GradedVector<Tag>::support() const {
  std::vector<std::size_t> out;
  for (Eigen::Index i = 0; i < bits.size(); ++i)
    if (bits(i) & 1u) out.push_back(static_cast<std::size_t>(i));
  return out;
}

template <class Tag>
GradedVector<Tag>& GradedVector<Tag>::operator+=(const GradedVector& o) {
  if (o.bits.size() != bits.size()) throw PreconditionError("adding vectors of different lengths");
  for (Eigen::Index i = 0; i < bits.size(); ++i) bits(i) = (bits(i) ^ o.bits(i)) & 1u;
  return *this;
}

template struct GradedVector<ChainTag0>;
template struct GradedVector<ChainTag1>;
template struct GradedVector<CochainTag0>;
template struct GradedVector<CochainTag1>;

namespace {

void require_size(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw PreconditionError(std::string(what) + " has " + std::to_string(got) + " entries, expected " +
                            std::to_string(want));
  }
}

// Forest path between two vertices as a list of edges; empty when a == b.
std::vector<EdgeIndex> forest_path(const MultiGraph& g, const EdgeSubset& forest, Vertex a, Vertex b) {
  if (a == b) return {};
  std::vector<EdgeIndex> via(g.vertex_count(), SIZE_MAX);
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<Vertex> queue{a};
  seen[a] = true;
  while (!queue.empty() && !seen[b]) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (EdgeIndex e : g.incident(x)) {
      if (!forest.contains(e)) continue;
      const Vertex y = g.edge(e).other(x);
      if (seen[y]) continue;
      seen[y] = true;
      via[y] = e;
      queue.push_back(y);
    }
  }
  std::vector<EdgeIndex> path;
  for (Vertex x = b; x != a;) {
    const EdgeIndex e = via[x];
    path.push_back(e);
    x = g.edge(e).other(x);
  }
  return path;
}

}  // namespace

Gf2Matrix incidence_matrix(const MultiGraph& g) {
  Gf2Matrix m = Gf2Matrix::Zero(static_cast<Eigen::Index>(g.vertex_count()),
                                static_cast<Eigen::Index>(g.edge_count()));
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.is_loop()) continue;
    m(static_cast<Eigen::Index>(ed.u), static_cast<Eigen::Index>(e)) = 1;
    m(static_cast<Eigen::Index>(ed.v), static_cast<Eigen::Index>(e)) = 1;
  }
  return m;
}

Chain0 boundary(const MultiGraph& g, const Chain1& c) {
  require_size(c.size(), g.edge_count(), "chain");
  Chain0 out = Chain0::zero(g.vertex_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (!c[e]) continue;
    const Edge& ed = g.edge(e);
    // v - u over Z/2; a loop contributes v - v = 0.
    out.bits(static_cast<Eigen::Index>(ed.u)) ^= 1u;
    out.bits(static_cast<Eigen::Index>(ed.v)) ^= 1u;
  }
  return out;
}

Cochain1 coboundary(const MultiGraph& g, const Cochain0& f) {
  require_size(f.size(), g.vertex_count(), "cochain");
  Cochain1 out = Cochain1::zero(g.edge_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    out.bits(static_cast<Eigen::Index>(e)) = static_cast<std::uint8_t>(f[ed.u] ^ f[ed.v]);
  }
  return out;
}

bool is_cycle_class(const MultiGraph& g, const Chain1& c) { return boundary(g, c).is_zero(); }

HomologyBasis homology_basis(const MultiGraph& g) {
  HomologyBasis basis;
  basis.forest = spanning_forest(g);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (basis.forest.contains(e)) continue;
    Chain1 cycle = Chain1::indicator(g.edge_count(), e);
    for (EdgeIndex f : forest_path(g, basis.forest, g.edge(e).u, g.edge(e).v))
      cycle.bits(static_cast<Eigen::Index>(f)) = 1;
    basis.chord_edges.push_back(e);
    basis.cycles.push_back(std::move(cycle));
    basis.cocycles.push_back(Cochain1::indicator(g.edge_count(), e));
  }
  return basis;
}

std::uint8_t graph_pairing(const MultiGraph& g, const Cochain1& gamma, const Chain1& alpha) {
  require_size(gamma.size(), g.edge_count(), "cochain");
  if (!is_cycle_class(g, alpha)) throw PreconditionError("graph_pairing: chain is not a cycle (nonzero boundary)");
  return gf2_dot(gamma.bits, alpha.bits);
}

PairingCheck is_perfect_pairing(const MultiGraph& g) {
  const HomologyBasis basis = homology_basis(g);
  const auto n = static_cast<Eigen::Index>(basis.cycles.size());
  PairingCheck out;
  out.gram = Gf2Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      out.gram(i, j) = graph_pairing(g, basis.cocycles[static_cast<std::size_t>(i)],
                                     basis.cycles[static_cast<std::size_t>(j)]);
  out.perfect = gf2_is_invertible(out.gram);
  return out;
}

bool is_simple_cycle(const MultiGraph& g, const Chain1& c) {
  require_size(c.size(), g.edge_count(), "chain");
  const std::vector<std::size_t> support = c.support();
  if (support.empty()) return false;

  // Every touched vertex has degree exactly two in the support (a loop
  // counts twice) and the support is connected.
  std::vector<int> degree(g.vertex_count(), 0);
  std::vector<Edge> sub;
  for (EdgeIndex e : support) {
    const Edge& ed = g.edge(e);
    degree[ed.u] += 1;
    degree[ed.v] += 1;
    sub.push_back(ed);
  }
  std::size_t touched = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (degree[v] == 0) continue;
    if (degree[v] != 2) return false;
    ++touched;
  }
  const Components comp = connected_components(MultiGraph(g.vertex_count(), std::move(sub)));
  // Untouched vertices are singleton components.
  return comp.count == g.vertex_count() - touched + 1;
}

std::vector<Chain1> decompose_cycles(const MultiGraph& g, const Chain1& alpha) {
  if (!is_cycle_class(g, alpha)) throw PreconditionError("decompose_cycles: chain is not a cycle (nonzero boundary)");

  Chain1 remaining = alpha;
  std::vector<Chain1> pieces;
  while (!remaining.is_zero()) {
    // Walk from the lowest remaining edge until a vertex repeats. Every
    // vertex has even degree in `remaining`, so the walk never stalls.
    const EdgeIndex first = remaining.support().front();
    std::vector<Vertex> path_vertices{g.edge(first).u};
    std::vector<EdgeIndex> path_edges;
    std::vector<bool> used(g.edge_count(), false);
    Vertex at = g.edge(first).u;
    EdgeIndex next = first;
    for (;;) {
      used[next] = true;
      path_edges.push_back(next);
      at = g.edge(next).other(at);
      const auto hit = std::find(path_vertices.begin(), path_vertices.end(), at);
      if (hit != path_vertices.end()) {
        const auto offset = static_cast<std::size_t>(hit - path_vertices.begin());
        Chain1 piece = Chain1::zero(g.edge_count());
        for (std::size_t k = offset; k < path_edges.size(); ++k)
          piece.bits(static_cast<Eigen::Index>(path_edges[k])) = 1;
        remaining += piece;
        pieces.push_back(std::move(piece));
        break;
      }
      path_vertices.push_back(at);
      next = SIZE_MAX;
      for (EdgeIndex e : g.incident(at)) {
        if (remaining[e] && !used[e]) { next = e; break; }
      }
      if (next == SIZE_MAX) throw std::logic_error("decompose_cycles: walk stalled on an even-degree support");
    }
  }
  return pieces;
}

Chain1 include_chain(const EdgeDeletion& sub, std::size_t parent_edge_count, const Chain1& c) {
  require_size(c.size(), sub.graph.edge_count(), "chain");
  Chain1 out = Chain1::zero(parent_edge_count);
  for (EdgeIndex e : c.support()) out.bits(static_cast<Eigen::Index>(sub.parent_edge.at(e))) = 1;
  return out;
}

}  // namespace weilgraph
