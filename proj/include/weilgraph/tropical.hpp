#pragma once

#include "weilgraph/bigint.hpp"
#include "weilgraph/graph.hpp"
#include "weilgraph/smith.hpp"

#include <vector>

namespace weilgraph {

// Integer chip configuration, one entry per vertex.
using Divisor = IntVector;

BigInt degree(const Divisor& d);

// Degree-0 divisor classes on a connected graph: invariant factors of the
// reduced Laplacian's cokernel (factors equal to 1 dropped) and a
// generator divisor for each factor.
struct CriticalGroup {
  MultiGraph graph;
  Vertex base_vertex = 0;
  std::vector<BigInt> invariant_factors;
  std::vector<Divisor> generators;
  // Smith form of the reduced Laplacian, kept for class-membership tests.
  SmithForm smith;

  BigInt order() const;
};

struct TorsionSubgroup {
  BigInt count;
  std::vector<Divisor> generators;
};

enum class SubdivisionMode { all_edges, non_separating, none };

struct TorsionReport {
  SubdivisionMap subdivided;
  SubdivisionMode mode = SubdivisionMode::all_edges;
  std::size_t r = 1;
  std::vector<BigInt> invariant_factors;
  BigInt torsion_count;
  BigInt expected;
  // r^(2 genus), the count as literally stated for the subgroup; kept so
  // reports can show where it differs from expected.
  BigInt literal_count;
  std::vector<Divisor> generators;
  bool verdict = false;
};

// L[v][v] = non-loop degree, L[u][v] = -#edges(u, v). Loops contribute 0.
IntMatrix laplacian(const MultiGraph& g);

// Laplacian with row and column `base` removed.
IntMatrix reduced_laplacian(const MultiGraph& g, Vertex base);

BigInt spanning_tree_count(const MultiGraph& g);

CriticalGroup critical_group(const MultiGraph& g, Vertex base);

// True iff d has degree 0 and lies in the image of the Laplacian,
// decided through the Smith form of the reduced Laplacian.
bool is_principal(const CriticalGroup& cg, const Divisor& d);

// Unique base-reduced divisor linearly equivalent to d.
Divisor dhar_reduce(const MultiGraph& g, const Divisor& d, Vertex base);

bool divisors_equivalent(const MultiGraph& g, const Divisor& d1, const Divisor& d2, Vertex base);

// r-torsion subgroup of the critical group: order prod gcd(d_i, r).
TorsionSubgroup r_torsion(const CriticalGroup& cg, std::size_t r);

// Subdivides per mode, computes the critical group of the child based at
// parent vertex 0 and checks that its r-torsion has order r^genus(g).
TorsionReport verify_torsion_on_subdivision(const MultiGraph& g, std::size_t r, SubdivisionMode mode);

const char* to_string(SubdivisionMode mode);

}  // namespace weilgraph
