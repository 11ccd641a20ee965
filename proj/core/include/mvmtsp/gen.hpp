#pragma once

// Deterministic instance generator. Both metric modes finish with an
// all-pairs shortest-path closure, and self-loop costs are sampled inside
// the allowed band [0, 2 * cmin(v)], so every generated matrix passes
// metric validation by construction.

#include <cstdint>
#include <string>

#include "mvmtsp/io.hpp"
#include "mvmtsp/types.hpp"

namespace mvmtsp {

struct GenConfig {
  int n = 5;
  int m = 1;            // ignored when depots > 0 (one agent per depot)
  int depots = 0;       // number of depot vertices (the first indices)
  Big rmax = 3;         // city requests drawn uniformly from [1, rmax]
  std::string metric = "closure";  // closure | euclidean
  std::uint64_t seed = 1;
  std::string variant;  // default: P1 without depots, P5 with them
};

// Throws std::invalid_argument on conflicting parameters (bad variant for
// the depot count, depots >= n, non-positive sizes).
InstanceDoc generate_instance(const GenConfig& cfg);

}  // namespace mvmtsp
