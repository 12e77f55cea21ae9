#include "weilgraph/double_cover.hpp"

#include <algorithm>
#include <map>
#include <ostream>

namespace weilgraph {

DoubleCover build_double_cover(const MultiGraph& g, const Cochain1& gamma) {
  if (gamma.size() != g.edge_count()) throw PreconditionError("cochain length does not match the edge count");
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  std::vector<Edge> edges(2 * m);
  for (EdgeIndex e = 0; e < m; ++e) {
    const Edge& ed = g.edge(e);
    if (gamma[e]) {
      edges[e] = {ed.u, ed.v + n};
      edges[m + e] = {ed.u + n, ed.v};
    } else {
      edges[e] = {ed.u, ed.v};
      edges[m + e] = {ed.u + n, ed.v + n};
    }
  }
  return DoubleCover{g, MultiGraph(2 * n, std::move(edges)), gamma};
}

bool cover_is_connected(const DoubleCover& c) {
  if (!is_connected(c.base)) throw PreconditionError("cover_is_connected: base graph is disconnected");
  return is_connected(c.total);
}

CycleLift lift_cycle(const DoubleCover& c, const Chain1& alpha) {
  if (alpha.size() != c.base.edge_count()) throw PreconditionError("chain length does not match the edge count");
  if (!is_simple_cycle(c.base, alpha)) throw PreconditionError("lift_cycle: chain is not a single simple cycle");

  const std::vector<EdgeIndex> support = alpha.support();
  std::vector<EdgeIndex> preimage;
  std::vector<Edge> sub;
  for (EdgeIndex e : support) {
    for (EdgeIndex lift : {e, c.swap_edge(e)}) {
      preimage.push_back(lift);
      sub.push_back(c.total.edge(lift));
    }
  }
  const Components comp = connected_components(MultiGraph(c.total.vertex_count(), std::move(sub)));

  // Group preimage edges by the component of an endpoint; untouched total
  // vertices are ignored.
  std::map<std::size_t, std::vector<EdgeIndex>> by_label;
  for (EdgeIndex lift : preimage) by_label[comp.label[c.total.edge(lift).u]].push_back(lift);

  CycleLift out;
  out.base_length = support.size();
  for (auto& [label, edges] : by_label) {
    std::sort(edges.begin(), edges.end());
    out.components.push_back(std::move(edges));
  }
  std::sort(out.components.begin(), out.components.end());
  out.component_count = out.components.size();
  return out;
}

std::uint8_t pairing_via_cover(const MultiGraph& g, const Cochain1& gamma, const Chain1& alpha) {
  return lift_cycle(build_double_cover(g, gamma), alpha).component_count == 1 ? 1 : 0;
}

void write_cover_dot(std::ostream& os, const DoubleCover& c) {
  const std::size_t n = c.base.vertex_count();
  os << "graph cover {\n";
  for (Vertex x = 0; x < c.total.vertex_count(); ++x) {
    const char sheet = c.sheet_of(x) == Sheet::a ? 'a' : 'b';
    os << "  v" << (x % n) << '_' << sheet << " [color=" << (sheet == 'a' ? "blue" : "darkgreen") << "];\n";
  }
  for (EdgeIndex e = 0; e < c.total.edge_count(); ++e) {
    const Edge& ed = c.total.edge(e);
    os << "  v" << (ed.u % n) << '_' << (ed.u < n ? 'a' : 'b') << " -- v" << (ed.v % n) << '_'
       << (ed.v < n ? 'a' : 'b') << " [label=\"e" << c.project_edge(e) << "\"";
    if (c.crosses_sheets(e)) os << ", style=dashed, color=red";
    os << "];\n";
  }
  os << "}\n";
}

}  // namespace weilgraph
