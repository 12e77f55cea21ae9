#include "weilgraph/verify.hpp"

#include "weilgraph/double_cover.hpp"
#include "weilgraph/enumerate.hpp"
#include "weilgraph/homology.hpp"
#include "weilgraph/tropical.hpp"
#include "weilgraph/twisted_curve.hpp"

#include <sstream>

namespace weilgraph {
namespace {

std::string support_string(const std::vector<std::size_t>& s) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << ']';
  return os.str();
}

void record_failure(SweepResult& r, const std::string& what) {
  if (r.failures++ == 0) r.counterexample = what;
}

// Odometer over a fixed-length vector with entries in [lo, hi].
bool next_tuple(std::vector<std::size_t>& t, std::size_t lo, std::size_t hi) {
  for (auto& x : t) {
    if (x < hi) {
      ++x;
      return true;
    }
    x = lo;
  }
  return false;
}

}  // namespace

std::string describe_graph(const MultiGraph& g) {
  std::ostringstream os;
  os << "{\"vertices\":" << g.vertex_count() << ",\"edges\":[";
  for (EdgeIndex e = 0; e < g.edge_count(); ++e)
    os << (e ? "," : "") << '[' << g.edge(e).u << ',' << g.edge(e).v << ']';
  os << "]}";
  return os.str();
}

SweepResult sweep_perfect_pairing(const SweepOptions& opts) {
  SweepResult r;
  r.name = "perfect graph pairing";
  for (const MultiGraph& g : connected_multigraphs_up_to(opts.max_edges)) {
    ++r.instances;
    const PairingCheck check = is_perfect_pairing(g);
    if (!check.perfect || check.gram.rows() != static_cast<Eigen::Index>(genus(g)))
      record_failure(r, describe_graph(g));
  }
  return r;
}

SweepResult sweep_cover_pairing(const SweepOptions& opts) {
  SweepResult r;
  r.name = "double-cover cycle lifting";
  for (const MultiGraph& g : connected_multigraphs_up_to(opts.max_edges)) {
    const auto cycles = simple_cycles(g);
    const std::size_t m = g.edge_count();
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
      Cochain1 gamma = Cochain1::zero(m);
      for (std::size_t e = 0; e < m; ++e)
        if (mask >> e & 1u) gamma.bits(static_cast<Eigen::Index>(e)) = 1;
      const DoubleCover cover = build_double_cover(g, gamma);
      for (const Chain1& alpha : cycles) {
        ++r.instances;
        const CycleLift lift = lift_cycle(cover, alpha);
        const std::uint8_t expected = graph_pairing(g, gamma, alpha);
        const std::uint8_t via_cover = lift.component_count == 1 ? 1 : 0;
        bool shape_ok = false;
        const std::size_t l = lift.base_length;
        if (lift.component_count == 1) shape_ok = lift.components[0].size() == 2 * l;
        if (lift.component_count == 2)
          shape_ok = lift.components[0].size() == l && lift.components[1].size() == l;
        if (via_cover != expected || !shape_ok) {
          record_failure(r, describe_graph(g) + " gamma=" + support_string(gamma.support()) +
                                " alpha=" + support_string(alpha.support()));
        }
      }
    }
  }
  return r;
}

SweepResult sweep_twisted_models(const SweepOptions& opts) {
  SweepResult r;
  r.name = "twisted-curve torsion and non-degeneracy";
  bool fault_pending = opts.inject_fault;
  for (const MultiGraph& g : connected_multigraphs_up_to(opts.max_model_edges)) {
    const EdgeSubset nonsep = non_separating_edges(g);
    const std::size_t graph_genus = genus(g);
    std::vector<std::size_t> genera(g.vertex_count(), 0);
    do {
      std::vector<std::size_t> orders(g.edge_count(), 1);
      do {
        ++r.instances;
        const TwistedCurveModel model(g, genera, orders);
        WeilFormModel w = weil_form(model);
        if (fault_pending && w.gram.rows() > 0) {
          w.gram(0, 0) ^= 1u;
          fault_pending = false;
        }

        std::vector<EdgeIndex> odd;
        bool nonsep_even = true;
        for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
          if (orders[e] % 2 == 0) continue;
          odd.push_back(e);
          if (nonsep.contains(e)) nonsep_even = false;
        }
        const std::size_t reduced_genus = genus(delete_edges(g, EdgeSubset(odd)).graph);
        const std::size_t g_arith = model.arithmetic_genus();
        const std::size_t formula = 2 * g_arith - graph_genus + reduced_genus;
        const std::size_t exponent = two_torsion_exponent(model);

        const bool symmetric = w.gram == w.gram.transpose();
        const bool zero_diag = (w.gram.diagonal().array() == 0).all();
        const auto h = static_cast<Eigen::Index>(w.blocks.h);
        const bool isotropic = h == 0 || (w.gram.topLeftCorner(h, h).array() == 0).all();
        const bool invertible = gf2_is_invertible(w.gram);

        const bool ok = exponent == formula && exponent == w.blocks.total() &&
                        (exponent == 2 * g_arith) == nonsep_even && is_nondegenerate(model) == nonsep_even &&
                        invertible == nonsep_even && symmetric && zero_diag && isotropic;
        if (!ok) {
          record_failure(r, describe_graph(g) + " genera=" + support_string(genera) +
                                " stabilizers=" + support_string(orders));
        }
      } while (next_tuple(orders, 1, 4));
    } while (next_tuple(genera, 0, 1));
  }
  return r;
}

SweepResult sweep_subdivision_torsion(const SweepOptions& opts) {
  SweepResult r;
  r.name = "r-torsion on subdivisions";
  for (const MultiGraph& g : connected_multigraphs_up_to(opts.max_edges)) {
    for (std::size_t rr : opts.r_values) {
      for (SubdivisionMode mode : {SubdivisionMode::all_edges, SubdivisionMode::non_separating}) {
        ++r.instances;
        const TorsionReport rep = verify_torsion_on_subdivision(g, rr, mode);
        bool ok = rep.verdict;
        const CriticalGroup child = critical_group(rep.subdivided.child, rep.subdivided.original_vertices[0]);
        const Divisor zero = Divisor::Zero(static_cast<Eigen::Index>(rep.subdivided.child.vertex_count()));
        for (const Divisor& d : rep.generators) {
          if (!degree(d).is_zero()) ok = false;
          Divisor scaled = d;
          for (Eigen::Index v = 0; v < scaled.size(); ++v) scaled(v) *= BigInt(static_cast<long long>(rr));
          if (!is_principal(child, scaled)) ok = false;
          if (!divisors_equivalent(rep.subdivided.child, scaled, zero, rep.subdivided.original_vertices[0])) ok = false;
        }
        if (!ok) {
          record_failure(r, describe_graph(g) + " r=" + std::to_string(rr) + " mode=" + to_string(mode) +
                                " count=" + rep.torsion_count.str() + " expected=" + rep.expected.str());
        }
      }
    }
  }
  return r;
}

std::vector<SweepResult> run_verification(const SweepOptions& opts) {
  return {sweep_perfect_pairing(opts), sweep_cover_pairing(opts), sweep_twisted_models(opts),
          sweep_subdivision_torsion(opts)};
}

}  // namespace weilgraph
