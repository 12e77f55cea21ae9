#include "weilgraph/tropical.hpp"

#include <algorithm>
#include <deque>

#include <Eigen/LU>
#include <string>

namespace weilgraph {
namespace {

void require_connected(const MultiGraph& g, const char* op) {
  if (g.vertex_count() == 0 || !is_connected(g))
    throw PreconditionError(std::string(op) + ": graph must be connected and non-empty");
}

void require_vertex(const MultiGraph& g, Vertex v) {
  if (v >= g.vertex_count()) throw PreconditionError("base vertex " + std::to_string(v) + " out of range");
}

void require_divisor(const MultiGraph& g, const Divisor& d) {
  if (static_cast<std::size_t>(d.size()) != g.vertex_count())
    throw PreconditionError("divisor has " + std::to_string(d.size()) + " entries, expected " +
                            std::to_string(g.vertex_count()));
}

// Chips move along non-loop edges only.
std::vector<std::vector<std::size_t>> multiplicities(const MultiGraph& g) {
  std::vector<std::vector<std::size_t>> mult(g.vertex_count(), std::vector<std::size_t>(g.vertex_count(), 0));
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    ++mult[e.u][e.v];
    ++mult[e.v][e.u];
  }
  return mult;
}

// Fire every vertex of `set` `times` times simultaneously.
void fire_set(const MultiGraph& g, Divisor& d, const std::vector<bool>& set, const BigInt& times) {
  for (const Edge& e : g.edges()) {
    if (e.is_loop() || set[e.u] == set[e.v]) continue;
    const Vertex inside = set[e.u] ? e.u : e.v;
    const Vertex outside = e.other(inside);
    d(static_cast<Eigen::Index>(inside)) -= times;
    d(static_cast<Eigen::Index>(outside)) += times;
  }
}

// Fires the rounded solution of L_q x = d (away from the base) to bring
// large chip counts down to the order of the vertex degrees. Any integer
// firing keeps the class, so floating-point error only costs smallness;
// the exact reduction below decides the result.
Divisor shrink(const MultiGraph& g, const Divisor& d, Vertex base) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  if (n <= 1) return d;
  const IntMatrix lap = laplacian(g);
  Eigen::MatrixXd lq(n - 1, n - 1);
  std::vector<Eigen::Index> rest;
  for (Eigen::Index v = 0; v < n; ++v)
    if (v != static_cast<Eigen::Index>(base)) rest.push_back(v);
  for (Eigen::Index i = 0; i < n - 1; ++i)
    for (Eigen::Index j = 0; j < n - 1; ++j) lq(i, j) = lap(rest[i], rest[j]).to_double();
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(lq);

  Divisor out = d;
  for (int pass = 0; pass < 4; ++pass) {
    Eigen::VectorXd rhs(n - 1);
    bool small = true;
    for (Eigen::Index i = 0; i < n - 1; ++i) {
      rhs(i) = out(rest[i]).to_double();
      if (std::abs(rhs(i)) > 4.0 * lq(i, i) + 4.0) small = false;
    }
    if (small) break;
    const Eigen::VectorXd y = lu.solve(rhs);
    IntVector fire = IntVector::Zero(n);
    bool any = false;
    for (Eigen::Index i = 0; i < n - 1; ++i) {
      if (!std::isfinite(y(i))) return out;
      fire(rest[i]) = BigInt::nearest(y(i));
      any = any || !fire(rest[i]).is_zero();
    }
    if (!any) break;
    out -= int_product(lap, fire);
  }
  return out;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  // a >= 0, b > 0
  return (a + b - BigInt(1)) / b;
}

}  // namespace

BigInt degree(const Divisor& d) {
  BigInt s(0);
  for (Eigen::Index i = 0; i < d.size(); ++i) s += d(i);
  return s;
}

BigInt CriticalGroup::order() const {
  BigInt p(1);
  for (const BigInt& f : invariant_factors) p *= f;
  return p;
}

IntMatrix laplacian(const MultiGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  IntMatrix l = IntMatrix::Zero(n, n);
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    const auto u = static_cast<Eigen::Index>(e.u);
    const auto v = static_cast<Eigen::Index>(e.v);
    l(u, u) += BigInt(1);
    l(v, v) += BigInt(1);
    l(u, v) -= BigInt(1);
    l(v, u) -= BigInt(1);
  }
  return l;
}

IntMatrix reduced_laplacian(const MultiGraph& g, Vertex base) {
  require_vertex(g, base);
  const IntMatrix l = laplacian(g);
  const auto n = l.rows();
  const auto b = static_cast<Eigen::Index>(base);
  IntMatrix out(n - 1, n - 1);
  for (Eigen::Index i = 0, oi = 0; i < n; ++i) {
    if (i == b) continue;
    for (Eigen::Index j = 0, oj = 0; j < n; ++j) {
      if (j == b) continue;
      out(oi, oj++) = l(i, j);
    }
    ++oi;
  }
  return out;
}

BigInt spanning_tree_count(const MultiGraph& g) {
  require_connected(g, "spanning_tree_count");
  return determinant(reduced_laplacian(g, 0));
}

CriticalGroup critical_group(const MultiGraph& g, Vertex base) {
  require_connected(g, "critical_group");
  require_vertex(g, base);
  CriticalGroup cg;
  cg.graph = g;
  cg.base_vertex = base;
  cg.smith = smith_normal_form(reduced_laplacian(g, base));

  // Cokernel generator i is left_inverse.col(i) on the non-base vertices;
  // the base vertex absorbs the degree.
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  for (std::size_t i = 0; i < cg.smith.diagonal.size(); ++i) {
    const BigInt& factor = cg.smith.diagonal[i];
    if (factor == BigInt(1)) continue;
    Divisor d = Divisor::Zero(n);
    const auto column = cg.smith.left_inverse.col(static_cast<Eigen::Index>(i));
    for (Eigen::Index v = 0, k = 0; v < n; ++v) {
      if (v == static_cast<Eigen::Index>(base)) continue;
      d(v) = column(k++);
    }
    d(static_cast<Eigen::Index>(base)) = -degree(d);
    cg.invariant_factors.push_back(factor);
    cg.generators.push_back(std::move(d));
  }
  return cg;
}

bool is_principal(const CriticalGroup& cg, const Divisor& d) {
  require_divisor(cg.graph, d);
  if (!degree(d).is_zero()) return false;
  const auto n = static_cast<Eigen::Index>(cg.graph.vertex_count());
  IntVector rest(n - 1);
  for (Eigen::Index v = 0, k = 0; v < n; ++v)
    if (v != static_cast<Eigen::Index>(cg.base_vertex)) rest(k++) = d(v);
  // L_q x = b  <=>  D y = U b with y = V^{-1} x.
  const IntMatrix ub = int_product(cg.smith.left, rest);
  for (Eigen::Index i = 0; i < ub.rows(); ++i) {
    const BigInt& di = cg.smith.diagonal[static_cast<std::size_t>(i)];
    if (di.is_zero()) {
      if (!ub(i, 0).is_zero()) return false;
    } else if (!(ub(i, 0) % di).is_zero()) {
      return false;
    }
  }
  return true;
}

Divisor dhar_reduce(const MultiGraph& g, const Divisor& d, Vertex base) {
  require_connected(g, "dhar_reduce");
  require_vertex(g, base);
  require_divisor(g, d);
  const std::size_t n = g.vertex_count();
  const auto mult = multiplicities(g);

  // BFS layers from the base.
  std::vector<std::size_t> dist(n, SIZE_MAX);
  std::deque<Vertex> queue{base};
  dist[base] = 0;
  std::size_t max_dist = 0;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (EdgeIndex e : g.incident(x)) {
      const Vertex y = g.edge(e).other(x);
      if (dist[y] != SIZE_MAX) continue;
      dist[y] = dist[x] + 1;
      max_dist = std::max(max_dist, dist[y]);
      queue.push_back(y);
    }
  }

  Divisor out = shrink(g, d, base);

  // Clear debt layer by layer from the outside in: firing the ball of
  // radius k-1 feeds exactly the layer k and leaves farther layers alone.
  for (std::size_t k = max_dist; k >= 1; --k) {
    std::vector<bool> ball(n);
    for (Vertex v = 0; v < n; ++v) ball[v] = dist[v] < k;
    BigInt times(0);
    for (Vertex v = 0; v < n; ++v) {
      if (dist[v] != k || out(static_cast<Eigen::Index>(v)).sign() >= 0) continue;
      std::size_t into_ball = 0;
      for (Vertex w = 0; w < n; ++w)
        if (ball[w]) into_ball += mult[v][w];
      const BigInt need = ceil_div(-out(static_cast<Eigen::Index>(v)), BigInt(static_cast<long long>(into_ball)));
      if (need > times) times = need;
    }
    if (!times.is_zero()) fire_set(g, out, ball, times);
  }

  // Dhar's burning: fire the unburnt set until the fire reaches everything.
  for (;;) {
    std::vector<bool> burnt(n, false);
    burnt[base] = true;
    bool spread = true;
    while (spread) {
      spread = false;
      for (Vertex v = 0; v < n; ++v) {
        if (burnt[v]) continue;
        std::size_t burning_edges = 0;
        for (Vertex w = 0; w < n; ++w)
          if (burnt[w]) burning_edges += mult[v][w];
        if (BigInt(static_cast<long long>(burning_edges)) > out(static_cast<Eigen::Index>(v))) {
          burnt[v] = true;
          spread = true;
        }
      }
    }
    std::vector<bool> unburnt(n);
    bool any = false;
    for (Vertex v = 0; v < n; ++v) {
      unburnt[v] = !burnt[v];
      any = any || unburnt[v];
    }
    if (!any) break;
    // Fire the unburnt set as many times as it stays out of debt; at least
    // once, since every unburnt vertex holds more chips than its burnt edges.
    BigInt times;
    bool first = true;
    for (Vertex v = 0; v < n; ++v) {
      if (!unburnt[v]) continue;
      std::size_t outgoing = 0;
      for (Vertex w = 0; w < n; ++w)
        if (!unburnt[w]) outgoing += mult[v][w];
      if (outgoing == 0) continue;
      BigInt k = out(static_cast<Eigen::Index>(v)) / BigInt(static_cast<long long>(outgoing));
      if (first || k < times) times = std::move(k);
      first = false;
    }
    fire_set(g, out, unburnt, times);
  }
  return out;
}

bool divisors_equivalent(const MultiGraph& g, const Divisor& d1, const Divisor& d2, Vertex base) {
  require_divisor(g, d1);
  require_divisor(g, d2);
  if (degree(d1) != degree(d2)) throw PreconditionError("divisors_equivalent: degrees differ");
  return dhar_reduce(g, d1, base) == dhar_reduce(g, d2, base);
}

TorsionSubgroup r_torsion(const CriticalGroup& cg, std::size_t r) {
  if (r == 0) throw PreconditionError("r must be at least 1");
  const BigInt rr(static_cast<long long>(r));
  TorsionSubgroup out;
  out.count = BigInt(1);
  for (std::size_t i = 0; i < cg.invariant_factors.size(); ++i) {
    const BigInt& di = cg.invariant_factors[i];
    const BigInt common = gcd(di, rr);
    out.count *= common;
    if (common > BigInt(1)) {
      Divisor gen = cg.generators[i];
      const BigInt scale = di / common;
      for (Eigen::Index v = 0; v < gen.size(); ++v) gen(v) *= scale;
      out.generators.push_back(std::move(gen));
    }
  }
  return out;
}

TorsionReport verify_torsion_on_subdivision(const MultiGraph& g, std::size_t r, SubdivisionMode mode) {
  if (r == 0) throw PreconditionError("r must be at least 1");
  require_connected(g, "verify_torsion_on_subdivision");
  EdgeSubset which;
  switch (mode) {
    case SubdivisionMode::all_edges: which = EdgeSubset::all(g); break;
    case SubdivisionMode::non_separating: which = non_separating_edges(g); break;
    case SubdivisionMode::none: break;
  }
  TorsionReport rep;
  rep.subdivided = subdivide(g, r, which);
  rep.mode = mode;
  rep.r = r;
  const CriticalGroup cg = critical_group(rep.subdivided.child, rep.subdivided.original_vertices[0]);
  const TorsionSubgroup tor = r_torsion(cg, r);
  rep.invariant_factors = cg.invariant_factors;
  rep.torsion_count = tor.count;
  rep.generators = tor.generators;
  rep.expected = pow(BigInt(static_cast<long long>(r)), static_cast<unsigned>(genus(g)));
  rep.literal_count = pow(BigInt(static_cast<long long>(r)), static_cast<unsigned>(2 * genus(g)));
  rep.verdict = rep.torsion_count == rep.expected;
  return rep;
}

const char* to_string(SubdivisionMode mode) {
  switch (mode) {
    case SubdivisionMode::all_edges: return "all";
    case SubdivisionMode::non_separating: return "nonsep";
    case SubdivisionMode::none: return "none";
  }
  return "?";
}

}  // namespace weilgraph
