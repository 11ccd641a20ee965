#include "mvmtsp/bench.hpp"

#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "mvmtsp/oracle.hpp"
#include "mvmtsp/runtime.hpp"

namespace mvmtsp {

namespace {

struct Task {
  int row;
  const Instance* inst;
  Variant var;
};

struct TaskOut {
  bool solved = false;
  bool checked = false;
  bool violation = false;
  double ratio = -1;
  double ms = 0;
  std::string algorithm;
};

TaskOut run_task(const Task& t, const BenchOptions& opt) {
  TaskOut out;
  SolveOptions sopt;
  sopt.algorithm = opt.algorithm;
  sopt.bd_engine = opt.bd_engine;
  auto report = solve(*t.inst, t.var, sopt);

  std::optional<OracleResult> best;
  if (opt.use_oracle && oracle_in_scale(*t.inst)) {
    best = exact_opt(*t.inst, t.var);
    out.checked = true;
  }

  if (!report) {
    // A NO answer must coincide with genuine infeasibility.
    if (out.checked && best) out.violation = true;
    return out;
  }

  out.solved = true;
  out.algorithm = report->algorithm;
  out.ms = report->wall_seconds * 1000.0;
  if (!verify_solution(*t.inst, t.var, report->solution).empty())
    out.violation = true;
  if (out.checked) {
    if (!best) {
      out.violation = true;
    } else {
      Big cost = report->solution.cost(t.inst->c);
      if (best->cost == 0)
        out.ratio = cost == 0 ? 1.0
                              : std::numeric_limits<double>::infinity();
      else
        out.ratio = cost.convert_to<double>() / best->cost.convert_to<double>();
    }
  }
  return out;
}

}  // namespace

std::vector<BenchRow> run_bench(const std::vector<InstanceDoc>& corpus,
                                const BenchOptions& opt) {
  std::vector<Variant> variants = opt.variants;
  if (variants.empty())
    variants.assign(std::begin(kAllVariants), std::end(kAllVariants));

  std::vector<BenchRow> rows;
  std::vector<Task> tasks;
  for (Variant var : variants) {
    BenchRow row;
    row.variant = var;
    row.algorithm = opt.algorithm;
    int taken = 0;
    for (const InstanceDoc& doc : corpus) {
      if (variant_has_depots(var) != !doc.inst.depots.empty()) continue;
      if (opt.trials > 0 && taken >= opt.trials) break;
      tasks.push_back({static_cast<int>(rows.size()), &doc.inst, var});
      ++taken;
    }
    row.instances = taken;
    rows.push_back(std::move(row));
  }

  std::vector<TaskOut> outs(tasks.size());
  std::atomic<bool> worker_error{false};
  std::string error_text;
  std::mutex error_mu;
  auto run_one = [&](size_t i) {
    try {
      outs[i] = run_task(tasks[i], opt);
    } catch (const std::exception& e) {
      std::lock_guard<std::mutex> lock(error_mu);
      if (!worker_error.exchange(true)) error_text = e.what();
    }
  };

  int threads = std::min<int>(thread_cap(), static_cast<int>(tasks.size()));
  if (threads <= 1) {
    for (size_t i = 0; i < tasks.size(); ++i) run_one(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (size_t i; (i = next.fetch_add(1)) < tasks.size();) run_one(i);
      });
    for (std::thread& t : pool) t.join();
  }
  if (worker_error.load()) throw std::invalid_argument(error_text);

  // Sequential aggregation in task order keeps the report deterministic.
  std::vector<int> ratio_count(rows.size(), 0);
  std::vector<double> ratio_sum(rows.size(), 0), ms_sum(rows.size(), 0);
  for (size_t i = 0; i < tasks.size(); ++i) {
    BenchRow& row = rows[tasks[i].row];
    const TaskOut& out = outs[i];
    if (out.solved) {
      ++row.solved;
      if (row.algorithm == "auto" || row.algorithm.empty())
        row.algorithm = out.algorithm;
      ms_sum[tasks[i].row] += out.ms;
      row.max_ms = std::max(row.max_ms, out.ms);
    } else {
      ++row.infeasible;
    }
    if (out.checked) ++row.oracle_checked;
    if (out.violation) ++row.violations;
    if (out.ratio >= 0) {
      ++ratio_count[tasks[i].row];
      ratio_sum[tasks[i].row] += out.ratio;
      row.max_ratio = std::max(row.max_ratio, out.ratio);
    }
  }
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].solved > 0) rows[i].mean_ms = ms_sum[i] / rows[i].solved;
    if (ratio_count[i] > 0) rows[i].mean_ratio = ratio_sum[i] / ratio_count[i];
  }
  return rows;
}

std::string bench_report_json(const std::vector<BenchRow>& rows) {
  nlohmann::ordered_json doc;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const BenchRow& row : rows) {
    nlohmann::ordered_json j;
    j["variant"] = variant_name(row.variant);
    j["algorithm"] = row.algorithm;
    j["instances"] = row.instances;
    j["solved"] = row.solved;
    j["infeasible"] = row.infeasible;
    j["oracle_checked"] = row.oracle_checked;
    j["violations"] = row.violations;
    if (row.mean_ratio >= 0) {
      j["mean_ratio"] = row.mean_ratio;
      j["max_ratio"] = row.max_ratio;
    } else {
      j["mean_ratio"] = "n/a";
      j["max_ratio"] = "n/a";
    }
    j["mean_ms"] = row.mean_ms;
    j["max_ms"] = row.max_ms;
    doc["rows"].push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

}  // namespace mvmtsp
