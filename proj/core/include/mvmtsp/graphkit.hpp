#pragma once

#include <map>
#include <vector>

#include "mvmtsp/types.hpp"

namespace mvmtsp {

// Minimum-cost spanning forest with exactly k components over the given
// vertices (Kruskal with deterministic (cost, u, v) edge order). Requires
// 1 <= k <= |verts|.
Multigraph spanning_forest(const CostMatrix& c, const std::vector<Vertex>& verts,
                           int k);

// Closed tour visiting every support vertex of a connected multigraph exactly
// once: double a cheapest spanning tree inside the support and shortcut its
// preorder walk. Singleton support yields one self-loop, a pair yields the
// back-and-forth double edge.
Multigraph double_and_shortcut(const Multigraph& g, const CostMatrix& c);

struct CycleTerm {
  std::vector<Vertex> cycle;  // distinct vertices in walk order; size 1 = loop
  Big count;
};

// Write a multigraph with even dotted degrees as a sum of repeated cycles.
// Loops come out as 1-cycles and doubled edges as 2-cycles. The number of
// terms is O(#distinct edges) regardless of multiplicities.
std::vector<CycleTerm> cycle_decompose(const Multigraph& g);

// Expanded Euler walk of a connected even-degree multigraph, starting at
// `start`. The walk is cyclic: consecutive entries are edges, as is
// last->first. Only for small graphs (total edge count must fit in memory);
// the degree-reduction machinery below never expands walks.
std::vector<Vertex> euler_walk(const Multigraph& g, Vertex start);

struct ReduceStats {
  long long multigraph_updates = 0;  // edge-multiplicity mutations, bulk = 1
};

// Shortcut an Euler walk of a connected multigraph so that every vertex
// listed in `target` ends with the given (even) dotted degree. Cost never
// increases under the metric and the result stays one closed walk, hence
// connected. Vertices not listed keep their degree; a target of 0 removes
// the vertex entirely. The walk is kept in compressed form (repeated cycle
// blocks), so multiplicities may be astronomically large. If anchor >= 0 it
// becomes the walk start and must keep positive degree.
void reduce_degrees(Multigraph& g, const CostMatrix& c,
                    const std::map<Vertex, Big>& target, Vertex anchor = -1,
                    ReduceStats* stats = nullptr);

// Shortcut the given depots out of a connected tour, keeping it one closed
// walk anchored at `keep`.
void disconnect_depots(Multigraph& g, const CostMatrix& c,
                       const std::vector<Vertex>& drop, Vertex keep,
                       ReduceStats* stats = nullptr);

// Make tour j visit its own depot exactly once and other depots not at all.
// Every non-empty tour must already contain its own depot.
void normalize_depot_visits(Solution& sol, const CostMatrix& c,
                            const std::vector<Vertex>& depots,
                            ReduceStats* stats = nullptr);

// Union tours that share a vertex. Each merged group lands on the lowest
// agent index involved; the other slots become empty.
void merge_overlapping_tours(Solution& sol);

}  // namespace mvmtsp
