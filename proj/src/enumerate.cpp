#include "weilgraph/enumerate.hpp"

#include <stdexcept>

namespace weilgraph {
namespace {

void extend(std::size_t target, std::vector<Edge>& edges, std::size_t max_vertex, std::vector<MultiGraph>& out) {
  if (edges.size() == target) {
    MultiGraph g(max_vertex + 1, edges);
    if (is_connected(g)) out.push_back(std::move(g));
    return;
  }
  const Edge last = edges.empty() ? Edge{0, 0} : edges.back();
  for (Vertex u = last.u; u <= max_vertex + 1; ++u) {
    const std::size_t after_u = std::max(max_vertex, u);
    for (Vertex v = u; v <= after_u + 1; ++v) {
      if (u == last.u && v < last.v) continue;
      edges.push_back({u, v});
      extend(target, edges, std::max(after_u, v), out);
      edges.pop_back();
    }
  }
}

}  // namespace

std::vector<MultiGraph> connected_multigraphs(std::size_t edge_count) {
  std::vector<MultiGraph> out;
  if (edge_count == 0) {
    out.emplace_back(1, std::vector<Edge>{});
    return out;
  }
  std::vector<Edge> edges;
  edges.reserve(edge_count);
  extend(edge_count, edges, 0, out);
  return out;
}

std::vector<MultiGraph> connected_multigraphs_up_to(std::size_t max_edges) {
  std::vector<MultiGraph> out;
  for (std::size_t k = 0; k <= max_edges; ++k) {
    auto layer = connected_multigraphs(k);
    out.insert(out.end(), std::make_move_iterator(layer.begin()), std::make_move_iterator(layer.end()));
  }
  return out;
}

std::vector<Chain1> simple_cycles(const MultiGraph& g) {
  const std::size_t m = g.edge_count();
  if (m >= 24) throw PreconditionError("simple_cycles: too many edges for subset enumeration");
  std::vector<Chain1> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
    Chain1 c = Chain1::zero(m);
    for (std::size_t e = 0; e < m; ++e)
      if (mask >> e & 1u) c.bits(static_cast<Eigen::Index>(e)) = 1;
    if (is_simple_cycle(g, c)) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace weilgraph
