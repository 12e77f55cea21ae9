#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// calls into the library routine it is used to check.

#include "weilgraph/bigint.hpp"
#include "weilgraph/graph.hpp"
#include "weilgraph/smith.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using weilgraph::BigInt;
using weilgraph::Edge;
using weilgraph::IntMatrix;
using weilgraph::MultiGraph;

inline MultiGraph theta() { return MultiGraph(2, {{0, 1}, {0, 1}, {0, 1}}); }
inline MultiGraph loop() { return MultiGraph(1, {{0, 0}}); }
inline MultiGraph dumbbell() { return MultiGraph(2, {{0, 0}, {0, 1}, {1, 1}}); }
inline MultiGraph path3() { return MultiGraph(3, {{0, 1}, {1, 2}}); }
inline MultiGraph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return MultiGraph(n, e);
}

// Components by repeated relaxation over the edge list.
inline std::size_t components(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::size_t> label(n);
  std::iota(label.begin(), label.end(), 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (const Edge& e : edges) {
      const std::size_t m = std::min(label[e.u], label[e.v]);
      if (label[e.u] != m || label[e.v] != m) {
        label[e.u] = label[e.v] = m;
        changed = true;
      }
    }
  }
  std::sort(label.begin(), label.end());
  return static_cast<std::size_t>(std::unique(label.begin(), label.end()) - label.begin());
}

// Subsets of edge indices (as bitmasks) forming a simple cycle, found by
// trying every cyclic ordering of every subset.
inline bool subset_is_cycle(const MultiGraph& g, std::uint32_t mask) {
  std::vector<std::size_t> es;
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    if (mask >> e & 1u) es.push_back(e);
  if (es.empty()) return false;
  if (es.size() == 1) return g.edge(es[0]).is_loop();
  std::sort(es.begin(), es.end());
  do {
    // Try both orientations of the first edge.
    for (int flip = 0; flip < 2; ++flip) {
      std::vector<weilgraph::Vertex> verts;
      weilgraph::Vertex at = flip ? g.edge(es[0]).v : g.edge(es[0]).u;
      const weilgraph::Vertex start = at;
      bool ok = true;
      for (std::size_t k = 0; k < es.size() && ok; ++k) {
        const Edge& e = g.edge(es[k]);
        if (e.is_loop()) { ok = false; break; }
        if (e.u != at && e.v != at) { ok = false; break; }
        if (std::find(verts.begin(), verts.end(), at) != verts.end()) { ok = false; break; }
        verts.push_back(at);
        at = e.u == at ? e.v : e.u;
      }
      if (ok && at == start) return true;
    }
  } while (std::next_permutation(es.begin() + 1, es.end()));
  return false;
}

inline std::size_t brute_spanning_trees(const MultiGraph& g) {
  const std::size_t n = g.vertex_count(), m = g.edge_count();
  std::size_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) + 1 != n) continue;
    std::vector<Edge> sub;
    for (std::size_t e = 0; e < m; ++e)
      if (mask >> e & 1u) sub.push_back(g.edge(e));
    if (components(n, sub) == 1) ++count;
  }
  return count;
}

// Leibniz expansion.
inline BigInt leibniz_det(const IntMatrix& a) {
  const auto n = static_cast<std::size_t>(a.rows());
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  BigInt total(0);
  do {
    BigInt term(1);
    for (std::size_t i = 0; i < n; ++i) term *= a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(p[i]));
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
    if (pos == k) { f(idx); return; }
    for (std::size_t i = from; i < n; ++i) { idx[pos] = i; rec(pos + 1, i + 1); }
  };
  rec(0, 0);
}

// Determinantal divisors D_k = gcd of all k x k minors; invariant factors
// d_k = D_k / D_{k-1} until the first zero.
inline std::vector<BigInt> invariant_factors_by_minors(const IntMatrix& a) {
  const auto rows = static_cast<std::size_t>(a.rows()), cols = static_cast<std::size_t>(a.cols());
  std::vector<BigInt> out;
  BigInt prev(1);
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    BigInt dk(0);
    for_each_subset(rows, k, [&](const std::vector<std::size_t>& ri) {
      for_each_subset(cols, k, [&](const std::vector<std::size_t>& ci) {
        IntMatrix minor(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j)
            minor(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                a(static_cast<Eigen::Index>(ri[i]), static_cast<Eigen::Index>(ci[j]));
        dk = weilgraph::gcd(dk, leibniz_det(minor));
      });
    });
    if (dk.is_zero()) {
      out.resize(std::min(rows, cols), BigInt(0));
      return out;
    }
    out.push_back(dk / prev);
    prev = dk;
  }
  return out;
}

inline IntMatrix random_int_matrix(std::mt19937& rng, Eigen::Index rows, Eigen::Index cols, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

}  // namespace oracle
