#pragma once

// The six approximation pipelines, one per problem family, plus the sweep
// reduction from the empty-tours variants to their non-empty counterparts
// and a dispatching facade. All pipelines are deterministic: every "pick an
// agent / depot / component" step resolves ties toward the lowest index.

#include <optional>
#include <string>

#include "mvmtsp/bounded_degree.hpp"
#include "mvmtsp/types.hpp"

namespace mvmtsp {

struct SolveReport {
  Solution solution;
  std::string algorithm;   // pipeline id: alg1..alg6 or sweep(...)
  int claimed_factor = 0;  // worst-case cost multiplier versus the optimum
  Big lower_bound = 0;     // transportation relaxation of the instance
  double wall_seconds = 0;
  long long multigraph_updates = 0;  // multiplicity edits during shortcuts
};

// Non-empty arbitrary tours without depots: spanning forest with m
// components, doubled and shortcut into cycles, self-loops to finish the
// requests. nullopt when m exceeds the total request mass.
std::optional<SolveReport> solve_p1(const Instance& inst);

// Non-empty arbitrary tours with depots: constrained spanning multigraph
// through the auxiliary graph, cycles per agent, residual transportation
// attached to the lowest intersecting agent. nullopt when m exceeds the
// total city request mass.
std::optional<SolveReport> solve_p5(const Instance& inst);

// Non-empty vertex-disjoint tours without depots: as solve_p1 but the
// forest components stay disjoint and all self-loops land in the owning
// component. nullopt when m exceeds the vertex count.
std::optional<SolveReport> solve_p2(const Instance& inst);

// Non-empty vertex-disjoint tours with depots: depot-constrained spanning
// forest, doubled cycles, self-loops. nullopt when m exceeds the city count.
std::optional<SolveReport> solve_p6(const Instance& inst);

// Empty tours allowed, no depots. Bounded-degree multigraph with at most m
// components, doubled, then degree-reduced per component. The components
// are vertex-disjoint, so the result certifies both the arbitrary and the
// disjoint reading. Always feasible.
SolveReport solve_p3(const Instance& inst, BdEngine engine = BdEngine::exact);

// Empty tours allowed, with depots. Meta-depot contraction, one connected
// bounded-degree multigraph per active-agent count, expansion back to real
// depots, depot disconnection and degree reduction; cheapest count wins.
// Always feasible; disjoint by construction.
SolveReport solve_p7(const Instance& inst, BdEngine engine = BdEngine::exact);

// Solve an empty-tours instance by running the matching non-empty solver
// for every agent count up to m and keeping the cheapest feasible outcome.
// `base` names the non-empty variant to sweep: P1 or P2 without depots,
// P5 or P6 with depots (active depot subsets are chosen by forest cost).
SolveReport sweep_reduction(const Instance& inst, Variant base);

struct SolveOptions {
  std::string algorithm = "auto";  // auto | alg1..alg6 | sweep
  BdEngine bd_engine = BdEngine::exact;
};

// Dispatch to the pipeline matching the variant (or the requested one).
// nullopt means no feasible solution exists. Throws std::invalid_argument
// when the algorithm cannot serve the variant or the instance's depot list
// contradicts the variant.
std::optional<SolveReport> solve(const Instance& inst, Variant var,
                                 const SolveOptions& opts = {});

}  // namespace mvmtsp
