#pragma once

#include <initializer_list>
#include <vector>

#include "mvmtsp/types.hpp"

namespace fixtures {

using mvmtsp::Big;
using mvmtsp::Cost;
using mvmtsp::CostMatrix;
using mvmtsp::Instance;
using mvmtsp::Vertex;

// Triangle: three vertices, every connection 1, every self-loop 2.
inline CostMatrix tri() {
  CostMatrix c(3);
  for (Vertex u = 0; u < 3; ++u) {
    c.at(u, u) = 2;
    for (Vertex v = u + 1; v < 3; ++v) c.at(u, v) = 1;
  }
  return c;
}

// Four-cycle 0-1-2-3: neighbours cost 1, diagonals cost 2, loops cost 2.
inline CostMatrix c4() {
  CostMatrix c(4);
  for (Vertex v = 0; v < 4; ++v) c.at(v, v) = 2;
  c.at(0, 1) = c.at(1, 2) = c.at(2, 3) = c.at(0, 3) = 1;
  c.at(0, 2) = c.at(1, 3) = 2;
  return c;
}

// Every entry 1, including self-loops.
inline CostMatrix unit(int n) {
  CostMatrix c(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u; v < n; ++v) c.at(u, v) = 1;
  return c;
}

inline Instance make_instance(CostMatrix c, std::vector<long long> req,
                              int m, std::vector<Vertex> depots = {}) {
  Instance inst;
  inst.c = std::move(c);
  for (long long v : req) inst.r.push_back(v);
  inst.m = m;
  inst.depots = std::move(depots);
  return inst;
}

}  // namespace fixtures
