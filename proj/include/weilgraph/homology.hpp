#pragma once

#include "weilgraph/gf2.hpp"
#include "weilgraph/graph.hpp"

#include <cstdint>
#include <vector>

namespace weilgraph {

// Mod-2 chains and cochains on a graph. The four flavours are distinct
// types so that a chain cannot be passed where a cochain is expected; the
// graph itself is passed alongside to each operation.
template <class Tag>
struct GradedVector {
  Gf2Vector bits;

  GradedVector() = default;
  explicit GradedVector(Gf2Vector b) : bits(std::move(b)) {}
  static GradedVector zero(std::size_t n) { return GradedVector(Gf2Vector::Zero(static_cast<Eigen::Index>(n))); }
  static GradedVector indicator(std::size_t n, std::size_t i) {
    GradedVector out = zero(n);
    out.bits(static_cast<Eigen::Index>(i)) = 1;
    return out;
  }
  static GradedVector from_support(std::size_t n, const std::vector<std::size_t>& support);

  std::size_t size() const { return static_cast<std::size_t>(bits.size()); }
  bool operator[](std::size_t i) const { return bits(static_cast<Eigen::Index>(i)) & 1u; }
  bool is_zero() const;
  std::vector<std::size_t> support() const;

  GradedVector& operator+=(const GradedVector& o);
  friend GradedVector operator+(GradedVector a, const GradedVector& b) { return a += b; }
  friend bool operator==(const GradedVector& a, const GradedVector& b) { return a.bits == b.bits; }
};

struct ChainTag0 {};
struct ChainTag1 {};
struct CochainTag0 {};
struct CochainTag1 {};
using Chain0 = GradedVector<ChainTag0>;
using Chain1 = GradedVector<ChainTag1>;
using Cochain0 = GradedVector<CochainTag0>;
using Cochain1 = GradedVector<CochainTag1>;

extern template struct GradedVector<ChainTag0>;
extern template struct GradedVector<ChainTag1>;
extern template struct GradedVector<CochainTag0>;
extern template struct GradedVector<CochainTag1>;

// Spanning-forest bases of H_1 and H^1. cycles[i] is the fundamental cycle
// of the i-th non-forest edge; cocycles[i] is the indicator of that edge,
// so the evaluation matrix between the two lists is the identity.
struct HomologyBasis {
  EdgeSubset forest;
  std::vector<EdgeIndex> chord_edges;
  std::vector<Chain1> cycles;
  std::vector<Cochain1> cocycles;
};

struct PairingCheck {
  bool perfect = false;
  Gf2Matrix gram;
};

// Vertex-by-edge incidence matrix mod 2 (loops give a zero column).
Gf2Matrix incidence_matrix(const MultiGraph& g);

Chain0 boundary(const MultiGraph& g, const Chain1& c);
Cochain1 coboundary(const MultiGraph& g, const Cochain0& f);
bool is_cycle_class(const MultiGraph& g, const Chain1& c);

HomologyBasis homology_basis(const MultiGraph& g);

// <gamma, alpha> = sum_e gamma(e) alpha(e). Throws PreconditionError when
// alpha is not in the kernel of the boundary map.
std::uint8_t graph_pairing(const MultiGraph& g, const Cochain1& gamma, const Chain1& alpha);

// Gram matrix of graph_pairing on the canonical bases, rows indexed by
// cocycles and columns by cycles.
PairingCheck is_perfect_pairing(const MultiGraph& g);

// True when `c` is supported on a single simple closed walk: distinct
// edges through distinct vertices.
bool is_simple_cycle(const MultiGraph& g, const Chain1& c);

// Splits a cycle class into edge-disjoint simple cycles summing to it.
std::vector<Chain1> decompose_cycles(const MultiGraph& g, const Chain1& alpha);

// Pushes a chain on an edge-deleted graph forward to the parent graph.
Chain1 include_chain(const EdgeDeletion& sub, std::size_t parent_edge_count, const Chain1& c);

}  // namespace weilgraph
