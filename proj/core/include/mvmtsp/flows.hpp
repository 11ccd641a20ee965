#pragma once

#include <map>
#include <utility>
#include <vector>

#include "mvmtsp/types.hpp"

namespace mvmtsp {

struct Transport {
  // Directed shipment amounts (u, v): supply side u to demand side v.
  std::map<std::pair<Vertex, Vertex>, Big> flow;
  // Undirected fold: x(uv) = f(u,v) + f(v,u), x(vv) = f(v,v). With equal
  // supplies and demands r this has dotted degree exactly 2 r(v).
  Multigraph x;
  Big cost = 0;
  int augmentations = 0;
};

// Exact uncapacitated min-cost transportation over the complete bipartite
// graph with arc costs c(u, v); the diagonal arc is the self-loop. Solved by
// successive shortest paths under potentials; every augmentation pushes the
// full path bottleneck, so the iteration count stays small (about 2n) no
// matter how large the demands are.
Transport solve_transportation(const CostMatrix& c,
                               const std::vector<Big>& supply,
                               const std::vector<Big>& demand);

// Transportation cost with supplies = demands = city requests (depots 0).
// A lower bound on OPT for every variant.
Big tp_lower_bound(const Instance& inst);

// Minimum-cost multigraph with exactly N edges (multiplicity sum) and
// dotted_degree(v) >= deg_lb(v) for all v. With all-zero lower bounds this
// is N copies of the globally cheapest edge at any scale; otherwise it is
// solved exactly by bounded exhaustive search, which restricts this routine
// to small n and N (asserted). Requires N large enough to be feasible.
Multigraph lb_fixed_size_multigraph(const CostMatrix& c,
                                    const std::vector<Big>& deg_lb,
                                    const Big& N);

}  // namespace mvmtsp
