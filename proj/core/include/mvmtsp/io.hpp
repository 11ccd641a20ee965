#pragma once

// JSON file formats for instances and solutions. Requests, multiplicities
// and cost totals are serialized as decimal strings so arbitrary-precision
// values survive any JSON parser. The writers are canonical (fixed key
// order, fixed indentation), so equal documents serialize byte-identically.

#include <string>
#include <vector>

#include "mvmtsp/types.hpp"

namespace mvmtsp {

struct InstanceDoc {
  Instance inst;
  Variant variant = Variant::P1;
  std::vector<std::string> names;  // vertex index -> display name
};

// Throws std::runtime_error naming the offending field on malformed input;
// the parsed document always passes instance and metric validation.
InstanceDoc parse_instance(const std::string& text);
std::string write_instance(const InstanceDoc& doc);

struct SolutionDoc {
  Variant variant = Variant::P1;
  Solution solution;
  Big total_cost = 0;
  std::string algorithm;
  int claimed_factor = 0;
  Big tp_lower_bound = 0;
  double wall_ms = 0;
};

SolutionDoc parse_solution(const std::string& text);
std::string write_solution(const SolutionDoc& doc);

// Strict non-negative decimal parse for big integers ("0", "125", ...).
Big big_from_decimal(const std::string& s);

}  // namespace mvmtsp
