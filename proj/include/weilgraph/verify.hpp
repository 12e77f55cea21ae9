#pragma once

#include "weilgraph/graph.hpp"

#include <string>
#include <vector>

namespace weilgraph {

struct SweepOptions {
  std::size_t max_edges = 6;
  // The twisted-curve sweep multiplies graphs by 2^|V| genera and 4^|E|
  // stabilizer choices, so it runs on a smaller edge bound.
  std::size_t max_model_edges = 5;
  std::vector<std::size_t> r_values{2, 3, 4, 5};
  // Flip one Gram-matrix bit in the first twisted-curve instance; the sweep
  // must then report a counterexample.
  bool inject_fault = false;
};

struct SweepResult {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string counterexample;

  bool passed() const { return failures == 0; }
};

SweepResult sweep_perfect_pairing(const SweepOptions& opts);
SweepResult sweep_cover_pairing(const SweepOptions& opts);
SweepResult sweep_twisted_models(const SweepOptions& opts);
SweepResult sweep_subdivision_torsion(const SweepOptions& opts);

std::vector<SweepResult> run_verification(const SweepOptions& opts);

std::string describe_graph(const MultiGraph& g);

}  // namespace weilgraph
