#pragma once

#include "weilgraph/graph.hpp"
#include "weilgraph/homology.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace weilgraph {

enum class Sheet : std::uint8_t { a = 0, b = 1 };

// Two-sheeted cover of `base` classified by a 1-cochain. Total vertex
// (v, a) is v and (v, b) is n + v; the lifts of base edge e are e and
// m + e. An edge with cochain value 1 crosses sheets.
struct DoubleCover {
  MultiGraph base;
  MultiGraph total;
  Cochain1 classifying_cochain;

  Vertex project_vertex(Vertex x) const { return x % base.vertex_count(); }
  EdgeIndex project_edge(EdgeIndex e) const { return e % base.edge_count(); }
  Sheet sheet_of(Vertex x) const { return x < base.vertex_count() ? Sheet::a : Sheet::b; }
  Vertex lift_vertex(Vertex v, Sheet s) const { return s == Sheet::a ? v : v + base.vertex_count(); }
  Vertex swap_vertex(Vertex x) const {
    return x < base.vertex_count() ? x + base.vertex_count() : x - base.vertex_count();
  }
  EdgeIndex swap_edge(EdgeIndex e) const {
    return e < base.edge_count() ? e + base.edge_count() : e - base.edge_count();
  }
  bool crosses_sheets(EdgeIndex total_edge) const { return classifying_cochain[project_edge(total_edge)]; }
};

struct CycleLift {
  std::size_t component_count = 0;
  // Edge sets (total-graph indices, ascending) of the preimage components.
  std::vector<std::vector<EdgeIndex>> components;
  std::size_t base_length = 0;
};

DoubleCover build_double_cover(const MultiGraph& g, const Cochain1& gamma);

// Connectivity of the total graph; PreconditionError on a disconnected base.
bool cover_is_connected(const DoubleCover& c);

// Preimage of a simple cycle of length l: either one 2l-cycle or two
// l-cycles exchanged by the sheet swap.
CycleLift lift_cycle(const DoubleCover& c, const Chain1& alpha);

// 1 when the lift of alpha is connected, 0 when it splits.
std::uint8_t pairing_via_cover(const MultiGraph& g, const Cochain1& gamma, const Chain1& alpha);

// Graphviz rendering; vertices v<i>_a / v<i>_b, sheet-crossing edges dashed red.
void write_cover_dot(std::ostream& os, const DoubleCover& c);

}  // namespace weilgraph
