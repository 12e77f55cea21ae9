#include "weilgraph/twisted_curve.hpp"

#include <numeric>
#include <string>

namespace weilgraph {

TwistedCurveModel::TwistedCurveModel(MultiGraph graph, std::vector<std::size_t> vertex_genus,
                                     std::vector<std::size_t> stabilizer_order)
    : graph_(std::move(graph)),
      vertex_genus_(std::move(vertex_genus)),
      stabilizer_order_(std::move(stabilizer_order)) {
  if (vertex_genus_.size() != graph_.vertex_count())
    throw PreconditionError("expected " + std::to_string(graph_.vertex_count()) + " vertex genera, got " +
                            std::to_string(vertex_genus_.size()));
  if (stabilizer_order_.size() != graph_.edge_count())
    throw PreconditionError("expected " + std::to_string(graph_.edge_count()) + " stabilizer orders, got " +
                            std::to_string(stabilizer_order_.size()));
  for (std::size_t order : stabilizer_order_)
    if (order == 0) throw PreconditionError("stabilizer orders must be at least 1");
  total_vertex_genus_ = std::accumulate(vertex_genus_.begin(), vertex_genus_.end(), std::size_t{0});
  graph_genus_ = genus(graph_);
}

Gf2Vector TwoTorsionClass::stacked() const {
  Gf2Vector out(h_part.size() + component_part.size() + q_part.size());
  out << h_part, component_part, q_part;
  return out;
}

std::size_t arithmetic_genus(const TwistedCurveModel& m) { return m.arithmetic_genus(); }

ReducedGraph reduced_graph(const TwistedCurveModel& m) {
  std::vector<EdgeIndex> odd, even;
  for (EdgeIndex e = 0; e < m.graph().edge_count(); ++e)
    (m.stabilizer_order()[e] % 2 == 0 ? even : odd).push_back(e);
  return ReducedGraph{delete_edges(m.graph(), EdgeSubset(std::move(odd))), EdgeSubset(std::move(even))};
}

std::size_t two_torsion_exponent(const TwistedCurveModel& m) {
  const std::size_t reduced_genus = genus(reduced_graph(m).deletion.graph);
  return 2 * m.arithmetic_genus() - m.graph_genus() + reduced_genus;
}

BigInt two_torsion_order(const TwistedCurveModel& m) {
  return pow(BigInt(2), static_cast<unsigned>(two_torsion_exponent(m)));
}

bool is_nondegenerate(const TwistedCurveModel& m) {
  for (EdgeIndex e : non_separating_edges(m.graph()))
    if (m.stabilizer_order()[e] % 2 != 0) return false;
  return true;
}

Gf2Matrix standard_symplectic(std::size_t genus) {
  const auto n = static_cast<Eigen::Index>(2 * genus);
  Gf2Matrix j = Gf2Matrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; k += 2) {
    j(k, k + 1) = 1;
    j(k + 1, k) = 1;
  }
  return j;
}

WeilFormModel weil_form(const TwistedCurveModel& m) {
  WeilFormModel w;
  w.reduced = reduced_graph(m);
  w.gamma_basis = homology_basis(m.graph());
  w.reduced_basis = homology_basis(w.reduced.deletion.graph);
  w.blocks.h = w.gamma_basis.cocycles.size();
  w.blocks.component = 2 * m.total_vertex_genus();
  w.blocks.q = w.reduced_basis.cycles.size();

  const auto n = static_cast<Eigen::Index>(w.blocks.total());
  w.gram = Gf2Matrix::Zero(n, n);

  const auto q0 = static_cast<Eigen::Index>(w.blocks.q_offset());
  for (std::size_t j = 0; j < w.blocks.q; ++j) {
    const Chain1 cycle = include_chain(w.reduced.deletion, m.graph().edge_count(), w.reduced_basis.cycles[j]);
    for (std::size_t i = 0; i < w.blocks.h; ++i) {
      const std::uint8_t bit = graph_pairing(m.graph(), w.gamma_basis.cocycles[i], cycle);
      w.gram(static_cast<Eigen::Index>(i), q0 + static_cast<Eigen::Index>(j)) = bit;
      w.gram(q0 + static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = bit;
    }
  }

  auto c0 = static_cast<Eigen::Index>(w.blocks.component_offset());
  for (std::size_t gi : m.vertex_genus()) {
    const auto size = static_cast<Eigen::Index>(2 * gi);
    w.gram.block(c0, c0, size, size) = standard_symplectic(gi);
    c0 += size;
  }
  return w;
}

std::uint8_t pair_classes(const WeilFormModel& w, const TwoTorsionClass& x, const TwoTorsionClass& y) {
  for (const TwoTorsionClass* c : {&x, &y}) {
    if (static_cast<std::size_t>(c->h_part.size()) != w.blocks.h ||
        static_cast<std::size_t>(c->component_part.size()) != w.blocks.component ||
        static_cast<std::size_t>(c->q_part.size()) != w.blocks.q)
      throw PreconditionError("two-torsion class does not match the model dimensions");
  }
  return gf2_bilinear(x.stacked(), w.gram, y.stacked());
}

std::uint8_t coarse_pairing(const TwistedCurveModel& m, const Gf2Vector& x, const Gf2Vector& y) {
  const auto n = static_cast<Eigen::Index>(2 * m.total_vertex_genus());
  if (x.size() != n || y.size() != n)
    throw PreconditionError("component vectors must have length " + std::to_string(n));
  std::uint8_t acc = 0;
  Eigen::Index offset = 0;
  for (std::size_t gi : m.vertex_genus()) {
    for (std::size_t k = 0; k < gi; ++k, offset += 2) {
      acc ^= static_cast<std::uint8_t>((x(offset) & y(offset + 1)) ^ (x(offset + 1) & y(offset)));
    }
  }
  return acc & 1u;
}

}  // namespace weilgraph
