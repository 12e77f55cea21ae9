#pragma once

#include "weilgraph/bigint.hpp"
#include "weilgraph/gf2.hpp"
#include "weilgraph/graph.hpp"
#include "weilgraph/homology.hpp"

#include <cstdint>
#include <vector>

namespace weilgraph {

// Combinatorial shadow of a twisted nodal curve: the dual graph, the
// geometric genus of each component and the stabilizer order at each node.
class TwistedCurveModel {
public:
  TwistedCurveModel(MultiGraph graph, std::vector<std::size_t> vertex_genus,
                    std::vector<std::size_t> stabilizer_order);

  const MultiGraph& graph() const { return graph_; }
  const std::vector<std::size_t>& vertex_genus() const { return vertex_genus_; }
  const std::vector<std::size_t>& stabilizer_order() const { return stabilizer_order_; }

  std::size_t total_vertex_genus() const { return total_vertex_genus_; }
  std::size_t graph_genus() const { return graph_genus_; }
  std::size_t arithmetic_genus() const { return total_vertex_genus_ + graph_genus_; }

private:
  MultiGraph graph_;
  std::vector<std::size_t> vertex_genus_;
  std::vector<std::size_t> stabilizer_order_;
  std::size_t total_vertex_genus_ = 0;
  std::size_t graph_genus_ = 0;
};

// The dual graph with every odd-stabilizer edge removed.
struct ReducedGraph {
  EdgeDeletion deletion;
  EdgeSubset kept;
};

// A 2-torsion class in split coordinates: H^1(Gamma) part, per-component
// symplectic part, H_1(Gamma') part.
struct TwoTorsionClass {
  Gf2Vector h_part;
  Gf2Vector component_part;
  Gf2Vector q_part;

  Gf2Vector stacked() const;
};

struct WeilBlocks {
  std::size_t h = 0;          // g'
  std::size_t component = 0;  // 2 * sum g_i
  std::size_t q = 0;          // g''

  std::size_t total() const { return h + component + q; }
  std::size_t h_offset() const { return 0; }
  std::size_t component_offset() const { return h; }
  std::size_t q_offset() const { return h + component; }
};

// Gram matrix of the model Weil form, ordered (h, component, q):
//
//   [ 0   0   P ]
//   [ 0   S   0 ]
//   [ P^T 0   0 ]
//
// with P the graph pairing of the H^1(Gamma) basis against the fundamental
// cycles of Gamma' pushed into Gamma, and S block-diagonal standard
// symplectic (2 g_i per vertex).
struct WeilFormModel {
  WeilBlocks blocks;
  Gf2Matrix gram;
  HomologyBasis gamma_basis;
  HomologyBasis reduced_basis;
  ReducedGraph reduced;
};

std::size_t arithmetic_genus(const TwistedCurveModel& m);
ReducedGraph reduced_graph(const TwistedCurveModel& m);

// log2 |Pic[2]| = 2g - g' + g''.
std::size_t two_torsion_exponent(const TwistedCurveModel& m);
BigInt two_torsion_order(const TwistedCurveModel& m);

// Every non-separating node has even stabilizer order.
bool is_nondegenerate(const TwistedCurveModel& m);

WeilFormModel weil_form(const TwistedCurveModel& m);

std::uint8_t pair_classes(const WeilFormModel& w, const TwoTorsionClass& x, const TwoTorsionClass& y);

// Sum over components of the standard symplectic pairing of each 2 g_i block.
std::uint8_t coarse_pairing(const TwistedCurveModel& m, const Gf2Vector& x, const Gf2Vector& y);

// Standard symplectic block-diagonal form diag(J, ..., J), J = [[0,1],[1,0]].
Gf2Matrix standard_symplectic(std::size_t genus);

}  // namespace weilgraph
