#pragma once

#include "weilgraph/graph.hpp"
#include "weilgraph/homology.hpp"

#include <functional>
#include <vector>

namespace weilgraph {

// Connected multigraphs (loops and parallel edges allowed) with exactly
// `edge_count` edges. Edge lists are sorted (u <= v per edge) and vertices
// are numbered in order of first appearance, which reaches every
// isomorphism class at least once. Zero edges yields the single vertex.
std::vector<MultiGraph> connected_multigraphs(std::size_t edge_count);

// All of the above for 0..max_edges edges.
std::vector<MultiGraph> connected_multigraphs_up_to(std::size_t max_edges);

// Every edge subset of g forming a simple cycle. Exponential in the edge
// count; intended for small sweep instances.
std::vector<Chain1> simple_cycles(const MultiGraph& g);

}  // namespace weilgraph
