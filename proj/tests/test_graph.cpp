#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "weilgraph/enumerate.hpp"
#include "weilgraph/graph.hpp"

using namespace weilgraph;

TEST_CASE("graph construction rejects out-of-range endpoints") {
  CHECK_THROWS_AS(MultiGraph(2, {{0, 2}}), PreconditionError);
  const MultiGraph g(2, {{0, 1}, {0, 1}});
  CHECK(g.edge(0) == g.edge(1));
  CHECK(g.incident(0).size() == 2);
  CHECK(MultiGraph(1, {{0, 0}}).incident(0).size() == 1);
}

TEST_CASE("genus") {
  CHECK(genus(oracle::path3()) == 0);
  CHECK(genus(oracle::loop()) == 1);
  CHECK(genus(oracle::theta()) == 2);
  CHECK(genus(MultiGraph(4, {{0, 0}, {2, 2}})) == 2);  // disconnected, isolated vertex
  CHECK(genus(MultiGraph()) == 0);
}

TEST_CASE("non_separating_edges") {
  CHECK(non_separating_edges(oracle::dumbbell()) == EdgeSubset{0, 2});
  CHECK(non_separating_edges(oracle::theta()) == EdgeSubset{0, 1, 2});
  CHECK(non_separating_edges(oracle::path3()).empty());
}

TEST_CASE("spanning_forest") {
  CHECK(spanning_forest(oracle::theta()) == EdgeSubset{0});
  CHECK(spanning_forest(oracle::path3()) == EdgeSubset{0, 1});
  CHECK(spanning_forest(oracle::loop()).empty());
}

TEST_CASE("delete_edges") {
  const EdgeDeletion theta_minus = delete_edges(oracle::theta(), EdgeSubset{1});
  CHECK(theta_minus.graph.vertex_count() == 2);
  CHECK(theta_minus.graph.edge_count() == 2);
  CHECK(genus(theta_minus.graph) == 1);
  CHECK(theta_minus.parent_edge == std::vector<EdgeIndex>{0, 2});

  const EdgeDeletion none = delete_edges(oracle::dumbbell(), EdgeSubset{});
  CHECK(none.graph == oracle::dumbbell());
  CHECK(none.parent_edge == std::vector<EdgeIndex>{0, 1, 2});

  const EdgeDeletion no_bridge = delete_edges(oracle::dumbbell(), EdgeSubset{1});
  CHECK(component_count(no_bridge.graph) == 2);
  CHECK(genus(no_bridge.graph) == 2);

  CHECK_THROWS_AS(delete_edges(oracle::theta(), EdgeSubset{3}), PreconditionError);
}

TEST_CASE("subdivide") {
  const SubdivisionMap two = subdivide(oracle::loop(), 2, EdgeSubset{0});
  CHECK(two.child.vertex_count() == 2);
  CHECK(two.child.edge_count() == 2);
  CHECK(two.child.edge(0) == Edge{0, 1});
  CHECK(two.child.edge(1) == Edge{1, 0});

  const SubdivisionMap same = subdivide(oracle::theta(), 1, EdgeSubset::all(oracle::theta()));
  CHECK(same.child == oracle::theta());

  const SubdivisionMap three = subdivide(oracle::theta(), 3, EdgeSubset::all(oracle::theta()));
  CHECK(three.child.vertex_count() == 8);
  CHECK(three.child.edge_count() == 9);
  CHECK(genus(three.child) == 2);
  for (const auto& path : three.edge_paths) CHECK(path.size() == 3);
  CHECK(three.regular_vertices().size() == 8);

  CHECK_THROWS_AS(subdivide(oracle::theta(), 0, EdgeSubset{}), PreconditionError);
}

TEST_CASE("subdivision paths are simple with degree-two interiors") {
  for (const MultiGraph& g : connected_multigraphs_up_to(4)) {
    for (std::size_t r = 1; r <= 4; ++r) {
      const EdgeSubset which = non_separating_edges(g);
      const SubdivisionMap s = subdivide(g, r, which);
      CHECK(genus(s.child) == genus(g));
      std::vector<std::size_t> degree(s.child.vertex_count(), 0);
      for (const Edge& e : s.child.edges()) { ++degree[e.u]; ++degree[e.v]; }
      for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        const auto& path = s.edge_paths[e];
        CHECK(path.size() == (which.contains(e) ? r : 1));
        Vertex at = g.edge(e).u;
        for (std::size_t k = 0; k < path.size(); ++k) {
          const Edge& ce = s.child.edge(path[k]);
          REQUIRE(ce.u == at);
          at = ce.v;
          if (k + 1 < path.size()) {
            CHECK(at >= g.vertex_count());
            CHECK(degree[at] == 2);
          }
        }
        CHECK(at == g.edge(e).v);
      }
    }
  }
}

TEST_CASE("structural invariants over all multigraphs with at most 6 edges") {
  // Includes disconnected graphs: pairs of enumerated components.
  std::vector<MultiGraph> graphs = connected_multigraphs_up_to(6);
  for (const MultiGraph& a : connected_multigraphs_up_to(2)) {
    for (const MultiGraph& b : connected_multigraphs_up_to(3)) {
      std::vector<Edge> edges = a.edges();
      for (const Edge& e : b.edges()) edges.push_back({e.u + a.vertex_count(), e.v + a.vertex_count()});
      graphs.emplace_back(a.vertex_count() + b.vertex_count(), edges);
    }
  }
  for (const MultiGraph& g : graphs) {
    const std::size_t comps = oracle::components(g.vertex_count(), g.edges());
    CHECK(genus(g) == g.edge_count() + comps - g.vertex_count());
    CHECK(spanning_forest(g).size() == g.vertex_count() - comps);

    // Non-separating iff the edge lies on some simple cycle.
    const EdgeSubset nonsep = non_separating_edges(g);
    std::vector<bool> on_cycle(g.edge_count(), false);
    for (std::uint32_t mask = 1; mask < (1u << g.edge_count()); ++mask) {
      if (!oracle::subset_is_cycle(g, mask)) continue;
      for (std::size_t e = 0; e < g.edge_count(); ++e)
        if (mask >> e & 1u) on_cycle[e] = true;
    }
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) CHECK(nonsep.contains(e) == on_cycle[e]);
  }
}

TEST_CASE("enumeration produces connected graphs with sorted restricted-growth edge lists") {
  CHECK(connected_multigraphs(0).size() == 1);
  CHECK(connected_multigraphs(1).size() == 2);  // loop, single edge
  CHECK(connected_multigraphs(2).size() == 6);
  for (const MultiGraph& g : connected_multigraphs(4)) {
    CHECK(is_connected(g));
    CHECK(std::is_sorted(g.edges().begin(), g.edges().end(),
                         [](const Edge& x, const Edge& y) { return std::tie(x.u, x.v) < std::tie(y.u, y.v); }));
  }
}
