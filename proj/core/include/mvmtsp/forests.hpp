#pragma once

// Depot-constrained spanning forests. A depot forest partitions a vertex set
// into |D| trees, each containing exactly one depot and at least one other
// vertex. Minimum-cost depot forests are found by weighted matroid
// intersection: the graphic matroid of the graph with all depots identified
// crossed with a union of a one-edge-per-depot-star partition matroid and a
// uniform matroid. The auxiliary-graph construction lifts request
// multiplicities into vertex copies so that the same machinery yields a
// spanning structure whose components may share cities.

#include <optional>
#include <vector>

#include "mvmtsp/types.hpp"

namespace mvmtsp {

struct DepotForest {
  Multigraph forest;  // every edge with multiplicity 1
  // comps[i] is the vertex set of the tree containing depots[i], sorted.
  std::vector<std::vector<Vertex>> comps;
  std::vector<Vertex> depots;  // sorted depot list, parallel to comps
  Big cost = 0;
};

// Minimum-cost spanning forest of `verts` with exactly one component per
// depot, each component containing its depot plus at least one non-depot.
// Depot-to-depot edges are never used. Returns nullopt when no such forest
// exists (fewer non-depots than depots).
std::optional<DepotForest> cerdeira_forest(const CostMatrix& c,
                                           const std::vector<Vertex>& verts,
                                           const std::vector<Vertex>& depots);

struct AuxiliaryGraph {
  CostMatrix cost;               // costs between auxiliary vertices
  std::vector<Vertex> original;  // auxiliary index -> original vertex
  std::vector<Vertex> depots;    // auxiliary indices of the depots
  int n() const { return static_cast<int>(original.size()); }
};

// Each city v is replicated min(|D|, r(v)) times; depots appear once. Copies
// of the same city are connected by zero-cost edges, all other costs carry
// over from the instance.
AuxiliaryGraph build_auxiliary_graph(const Instance& inst);

struct ConstrainedForest {
  Multigraph identified;  // image of the auxiliary forest on the original
                          // vertices (parallel edges possible)
  // Per agent: vertex set and edge image of its auxiliary tree. Vertex sets
  // may overlap between agents; each contains the agent's depot.
  std::vector<std::vector<Vertex>> comp_vertices;
  std::vector<Multigraph> comp_graphs;
  std::vector<Vertex> depots;  // parallel to the two vectors above
  Big cost = 0;
};

// Minimum-cost spanning multigraph for depot instances: a Cerdeira forest of
// the auxiliary graph with city copies identified again. Guarantees per
// component: exactly one depot, at least one city; every city with r >= 1
// appears in at least one component; no city appears in more than r(v)
// components. Returns nullopt when m exceeds the total request mass.
std::optional<ConstrainedForest> constrained_spanning_multigraph(
    const Instance& inst);

}  // namespace mvmtsp
