#pragma once

// Minimum-cost multigraphs with prescribed dotted degrees and a component
// budget. bounded_degree_multigraph returns a multigraph whose dotted degree
// at v is exactly rho(v), with at most max_components components, total
// multiplicity sum(rho)/2, and cost no larger than any such multigraph
// whenever the search closes. Request magnitudes may be astronomically large:
// the large-scale engine only ever manipulates per-edge multiplicities
// through flows, never unit by unit.

#include <optional>
#include <vector>

#include "mvmtsp/types.hpp"

namespace mvmtsp {

struct DegreeSpec {
  std::vector<Big> rho;  // even target degrees; 0 excludes the vertex
  Big n_edges = 0;       // total multiplicity, sum(rho) == 2 * n_edges
  int max_components = 1;
};

enum class BdEngine {
  exact,  // exhaustive at small scale, branch-and-bound over forests beyond
  local   // greedy forest plus single-edge-swap local search
};

struct BoundedDegreeResult {
  Multigraph x;
  Big cost = 0;
  Big lower_bound = 0;   // certified bound on the exact-degree optimum
  bool optimal = false;  // cost == lower_bound or the search closed exactly
  long long nodes = 0;   // search nodes explored
};

// Returns nullopt when n_edges cannot cover the active vertices with at most
// max_components components (n_edges < active - max_components).
std::optional<BoundedDegreeResult> bounded_degree_multigraph(
    const CostMatrix& c, const DegreeSpec& spec,
    BdEngine engine = BdEngine::exact);

// Exhaustive minimum-cost multigraph with exact dotted degrees and at most
// max_comps components. Intended for small totals (sum of rho up to a few
// dozen); nullopt when infeasible (e.g. a lone vertex with odd degree).
std::optional<Multigraph> min_cost_exact_degrees(
    const CostMatrix& c, const std::vector<long long>& rho, int max_comps,
    long long* nodes_out = nullptr);

}  // namespace mvmtsp
