// mvmtsp: command-line front end for the many-visits multiple TSP toolkit.
// Exit codes: 0 success/feasible, 1 input or usage errors, 2 the instance
// is proven infeasible or a solution certificate fails verification.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mvmtsp/algorithms.hpp"
#include "mvmtsp/bench.hpp"
#include "mvmtsp/flows.hpp"
#include "mvmtsp/gen.hpp"
#include "mvmtsp/io.hpp"
#include "mvmtsp/oracle.hpp"

namespace {

using namespace mvmtsp;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
}

// Accepts plain decimals and the shorthand "B^E" (e.g. 10^50).
Big parse_big_arg(const std::string& s) {
  auto caret = s.find('^');
  if (caret == std::string::npos) return big_from_decimal(s);
  Big base = big_from_decimal(s.substr(0, caret));
  Big expo = big_from_decimal(s.substr(caret + 1));
  if (expo > 1000000) throw std::runtime_error("exponent too large: " + s);
  Big out = 1;
  for (Big i = 0; i < expo; ++i) out *= base;
  return out;
}

// Why a NO answer is correct, phrased by the failing feasibility gate.
std::string no_reason(const Instance& inst, Variant var) {
  (void)inst;
  if (variant_allows_empty(var)) return "infeasible";
  if (!variant_disjoint(var)) return "m > r(V)";
  return variant_has_depots(var) ? "m > number of cities" : "m > |V|";
}

BdEngine parse_engine(const std::string& s) {
  if (s == "exact") return BdEngine::exact;
  if (s == "local") return BdEngine::local;
  throw std::runtime_error("unknown --bd-engine " + s);
}

std::vector<Variant> parse_variants(const std::string& csv) {
  std::vector<Variant> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto var = variant_from_name(item);
    if (!var) throw std::runtime_error("unknown variant " + item);
    out.push_back(*var);
  }
  return out;
}

SolutionDoc to_solution_doc(Variant var, const SolveReport& report) {
  SolutionDoc sd;
  sd.variant = var;
  sd.solution = report.solution;
  sd.algorithm = report.algorithm;
  sd.claimed_factor = report.claimed_factor;
  sd.tp_lower_bound = report.lower_bound;
  sd.wall_ms = report.wall_seconds * 1000.0;
  return sd;
}

int run_solve(const std::string& path, const std::string& algorithm,
              const std::string& engine, const std::string& out_path) {
  InstanceDoc doc = parse_instance(read_file(path));
  SolveOptions opt;
  opt.algorithm = algorithm;
  opt.bd_engine = parse_engine(engine);
  auto report = solve(doc.inst, doc.variant, opt);
  if (!report) {
    std::cout << "NO: " << no_reason(doc.inst, doc.variant) << "\n";
    return 2;
  }
  SolutionDoc sd = to_solution_doc(doc.variant, *report);
  sd.total_cost = report->solution.cost(doc.inst.c);
  emit(out_path, write_solution(sd));
  if (!out_path.empty())
    std::cout << "cost " << sd.total_cost.str() << " algorithm "
              << sd.algorithm << " factor " << sd.claimed_factor << "\n";
  return 0;
}

int run_verify(const std::string& inst_path, const std::string& sol_path) {
  InstanceDoc doc = parse_instance(read_file(inst_path));
  SolutionDoc sd = parse_solution(read_file(sol_path));
  std::vector<std::string> problems;
  if (sd.variant != doc.variant)
    problems.push_back(std::string("solution variant ") +
                       variant_name(sd.variant) + " does not match instance " +
                       variant_name(doc.variant));
  if (static_cast<int>(sd.solution.tours.size()) != doc.inst.m)
    problems.push_back("solution has " +
                       std::to_string(sd.solution.tours.size()) +
                       " agent entries, instance has " +
                       std::to_string(doc.inst.m));
  for (const auto& tour : sd.solution.tours)
    for (const auto& [e, k] : tour.x)
      if (e.u < 0 || e.v >= doc.inst.n()) {
        problems.push_back("edge endpoint out of range");
        break;
      }
  if (problems.empty()) {
    if (sd.solution.cost(doc.inst.c) != sd.total_cost)
      problems.push_back("total_cost " + sd.total_cost.str() +
                         " does not match recomputed cost " +
                         sd.solution.cost(doc.inst.c).str());
    auto verdict = verify_solution(doc.inst, doc.variant, sd.solution);
    problems.insert(problems.end(), verdict.begin(), verdict.end());
  }
  if (problems.empty()) {
    std::cout << "OK: cost " << sd.total_cost.str() << "\n";
    return 0;
  }
  for (const auto& p : problems) std::cout << "violation: " << p << "\n";
  return 2;
}

int run_oracle(const std::string& path, const std::string& out_path) {
  InstanceDoc doc = parse_instance(read_file(path));
  auto best = exact_opt(doc.inst, doc.variant);  // throws beyond desk scale
  if (!best) {
    std::cout << "NO: " << no_reason(doc.inst, doc.variant) << "\n";
    return 2;
  }
  std::cout << "cost " << best->cost.str() << "\n";
  if (!out_path.empty()) {
    SolutionDoc sd;
    sd.variant = doc.variant;
    sd.solution = best->solution;
    sd.total_cost = best->cost;
    sd.algorithm = "oracle";
    sd.claimed_factor = 1;
    sd.tp_lower_bound = tp_lower_bound(doc.inst);
    write_file(out_path, write_solution(sd));
  }
  return 0;
}

int run_gen(const GenConfig& cfg, const std::string& out_path) {
  InstanceDoc doc = generate_instance(cfg);
  emit(out_path, write_instance(doc));
  return 0;
}

int run_bench(const std::string& corpus_dir, const std::string& variants_csv,
              int trials, const std::string& algorithm,
              const std::string& engine, bool no_oracle,
              const std::string& out_path) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(corpus_dir))
    throw std::runtime_error("corpus directory not found: " + corpus_dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(corpus_dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::vector<InstanceDoc> corpus;
  for (const auto& f : files) {
    try {
      corpus.push_back(parse_instance(read_file(f.string())));
    } catch (const std::exception& e) {
      throw std::runtime_error(f.string() + ": " + e.what());
    }
  }

  std::vector<BenchRow> rows;
  if (!corpus.empty()) {
    BenchOptions opt;
    opt.variants = parse_variants(variants_csv);
    opt.algorithm = algorithm;
    opt.bd_engine = parse_engine(engine);
    opt.use_oracle = !no_oracle;
    opt.trials = trials;
    rows = run_bench(corpus, opt);
  }
  emit(out_path, bench_report_json(rows));

  std::fprintf(stderr,
               "%-4s %-12s %5s %6s %4s %7s %5s %10s %10s %9s %9s\n", "var",
               "algorithm", "inst", "solved", "NO", "checked", "viol",
               "mean_ratio", "max_ratio", "mean_ms", "max_ms");
  for (const BenchRow& row : rows) {
    std::string mean_r = row.mean_ratio >= 0
                             ? std::to_string(row.mean_ratio).substr(0, 6)
                             : "n/a";
    std::string max_r = row.max_ratio >= 0
                            ? std::to_string(row.max_ratio).substr(0, 6)
                            : "n/a";
    std::fprintf(stderr,
                 "%-4s %-12s %5d %6d %4d %7d %5d %10s %10s %9.3f %9.3f\n",
                 variant_name(row.variant), row.algorithm.c_str(),
                 row.instances, row.solved, row.infeasible, row.oracle_checked,
                 row.violations, mean_r.c_str(), max_r.c_str(), row.mean_ms,
                 row.max_ms);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"many-visits multiple TSP toolkit"};
  app.require_subcommand(1);

  std::string inst_path, sol_path, out_path;
  std::string algorithm = "auto", engine = "exact";

  CLI::App* solve_cmd = app.add_subcommand("solve", "solve an instance file");
  solve_cmd->add_option("instance", inst_path, "instance JSON path")
      ->required();
  solve_cmd->add_option("--algorithm", algorithm,
                        "auto, alg1..alg6 or sweep (default auto)");
  solve_cmd->add_option("--bd-engine", engine,
                        "bounded-degree search engine: exact or local");
  solve_cmd->add_option("--out", out_path, "solution output path");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "check a solution certificate");
  verify_cmd->add_option("instance", inst_path, "instance JSON path")
      ->required();
  verify_cmd->add_option("solution", sol_path, "solution JSON path")
      ->required();

  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "exact optimum at desk scale");
  oracle_cmd->add_option("instance", inst_path, "instance JSON path")
      ->required();
  oracle_cmd->add_option("--out", out_path, "optimal solution output path");

  GenConfig cfg;
  std::string rmax_arg = "3", variant_arg;
  CLI::App* gen_cmd =
      app.add_subcommand("gen", "generate a random metric instance");
  gen_cmd->add_option("--n", cfg.n, "vertex count");
  gen_cmd->add_option("--m", cfg.m, "agent count (forbidden with --depots)");
  gen_cmd->add_option("--depots", cfg.depots,
                      "depot count; the first vertices become depots");
  gen_cmd->add_option("--rmax", rmax_arg,
                      "request upper bound, decimal or B^E");
  gen_cmd->add_option("--metric", cfg.metric, "closure or euclidean");
  gen_cmd->add_option("--seed", cfg.seed, "RNG seed");
  gen_cmd->add_option("--variant", variant_arg,
                      "problem variant tag (default P1, or P5 with depots)");
  gen_cmd->add_option("--out", out_path, "instance output path");

  std::string corpus_dir, variants_csv;
  int trials = 0;
  bool no_oracle = false;
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "run the corpus benchmark harness");
  bench_cmd->add_option("--corpus", corpus_dir, "directory of instance files")
      ->required();
  bench_cmd->add_option("--variants", variants_csv,
                        "comma-separated list (default all eight)");
  bench_cmd->add_option("--trials", trials,
                        "per-variant cap on instances (0 = all)");
  bench_cmd->add_option("--algorithm", algorithm, "solver to benchmark");
  bench_cmd->add_option("--bd-engine", engine, "exact or local");
  bench_cmd->add_flag("--no-oracle", no_oracle,
                      "skip exact optima (ratio columns become n/a)");
  bench_cmd->add_option("--out", out_path, "report output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (solve_cmd->parsed())
      return run_solve(inst_path, algorithm, engine, out_path);
    if (verify_cmd->parsed()) return run_verify(inst_path, sol_path);
    if (oracle_cmd->parsed()) return run_oracle(inst_path, out_path);
    if (gen_cmd->parsed()) {
      if (gen_cmd->count("--m") > 0 && cfg.depots > 0)
        throw std::runtime_error(
            "with --depots the agent count equals the depot count; drop --m");
      cfg.rmax = parse_big_arg(rmax_arg);
      cfg.variant = variant_arg;
      return run_gen(cfg, out_path);
    }
    if (bench_cmd->parsed())
      return run_bench(corpus_dir, variants_csv, trials, algorithm, engine,
                       no_oracle, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
