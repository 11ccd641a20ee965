#pragma once

// Corpus benchmark harness. Runs the selected solver over every compatible
// (instance, variant) pair, verifies each produced certificate, and compares
// costs against the exhaustive oracle wherever the instance is small enough.
// Results are deterministic regardless of the worker-thread allowance.

#include <string>
#include <vector>

#include "mvmtsp/algorithms.hpp"
#include "mvmtsp/io.hpp"

namespace mvmtsp {

struct BenchRow {
  Variant variant;
  std::string algorithm;   // solver label behind the numbers
  int instances = 0;       // compatible corpus instances that were run
  int solved = 0;
  int infeasible = 0;      // solver answered NO
  int oracle_checked = 0;  // runs with an exact optimum to compare against
  int violations = 0;      // certificate failures or NO/oracle disagreements
  double mean_ratio = -1;  // cost / optimum over checked solved runs; -1 = n/a
  double max_ratio = -1;
  double mean_ms = 0;
  double max_ms = 0;
};

struct BenchOptions {
  std::vector<Variant> variants;  // empty means all eight
  std::string algorithm = "auto";
  BdEngine bd_engine = BdEngine::exact;
  bool use_oracle = true;
  int trials = 0;  // per-variant cap on instances; 0 means no cap
};

// An instance is compatible with a variant when its depot list matches the
// variant's depot requirement; incompatible pairs are skipped. Throws
// std::invalid_argument if the requested algorithm cannot serve a requested
// variant (same contract as solve()).
std::vector<BenchRow> run_bench(const std::vector<InstanceDoc>& corpus,
                                const BenchOptions& opt = {});

// {"rows": [...]} with ratio fields as numbers, or "n/a" when no run had an
// oracle optimum to compare against.
std::string bench_report_json(const std::vector<BenchRow>& rows);

}  // namespace mvmtsp
