#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mvmtsp/types.hpp"

namespace mvmtsp {

// Certificate-based feasibility check; the verdict is a pure function of
// (instance, variant, solution). An empty list means the solution is valid.
//
// Checked, per variant: every city v carries aggregate dotted degree 2 r(v);
// each non-empty agent multigraph is a closed tour (connected support, even
// dotted degrees everywhere); exactly m non-empty tours where empty tours are
// forbidden, at most m otherwise; pairwise vertex-disjoint supports in the
// disjoint variants; with depots, every non-empty tour visits exactly one
// depot exactly once plus at least one city, and no depot serves two tours.
std::vector<std::string> verify_solution(const Instance& inst, Variant var,
                                         const Solution& sol);

struct OracleResult {
  Big cost = 0;
  Solution solution;
};

// Whether the instance is small enough for the exhaustive oracle
// (n <= 8, r(v) <= 4, m <= 4).
bool oracle_in_scale(const Instance& inst);

// Exhaustive exact optimum at desk scale. Returns nullopt when the variant
// admits no feasible solution; throws std::invalid_argument beyond the scale
// guard. Deterministic: ties break by enumeration order regardless of the
// number of worker threads.
std::optional<OracleResult> exact_opt(const Instance& inst, Variant var);

}  // namespace mvmtsp
