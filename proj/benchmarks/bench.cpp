// Microbenchmarks for the compact-multigraph machinery and full solver
// pipelines. Requests are astronomically large on purpose: the point of the
// compact representation is that none of this depends on request magnitude.

#include <benchmark/benchmark.h>

#include "mvmtsp/algorithms.hpp"
#include "mvmtsp/flows.hpp"
#include "mvmtsp/gen.hpp"
#include "mvmtsp/graphkit.hpp"
#include "mvmtsp/oracle.hpp"
#include "mvmtsp/rng.hpp"
#include "mvmtsp/types.hpp"

using namespace mvmtsp;

namespace {

const Big kHuge("1000000000000000000");  // 10^18

Instance make_city_instance(int n, int m, std::uint64_t seed,
                            const Big& request) {
  GenConfig cfg;
  cfg.n = n;
  cfg.m = m;
  cfg.rmax = 1;
  cfg.seed = seed;
  Instance inst = generate_instance(cfg).inst;
  for (Vertex v = 0; v < n; ++v) inst.r[v] = request;
  return inst;
}

Instance make_depot_instance(int n, int depots, std::uint64_t seed,
                             const Big& request) {
  GenConfig cfg;
  cfg.n = n;
  cfg.depots = depots;
  cfg.rmax = 1;
  cfg.seed = seed;
  Instance inst = generate_instance(cfg).inst;
  for (Vertex v : inst.cities()) inst.r[v] = request;
  return inst;
}

}  // namespace

static void bm_mg_sum(benchmark::State& state) {
  std::vector<Multigraph> parts(8);
  int n = static_cast<int>(state.range(0));
  for (int j = 0; j < 8; ++j)
    for (Vertex v = 0; v + 1 < n; ++v) parts[j].add(v, v + 1, j + 1);
  for (auto _ : state) {
    Multigraph g = mg_sum(parts);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(bm_mg_sum)->Arg(16)->Arg(128);

static void bm_transportation(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Instance inst = make_city_instance(n, 1, 11, kHuge);
  std::vector<Big> r = inst.r;
  for (auto _ : state) {
    Transport t = solve_transportation(inst.c, r, r);
    benchmark::DoNotOptimize(t.cost);
  }
}
BENCHMARK(bm_transportation)->Arg(10)->Arg(30);

static void bm_cycle_decompose(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Multigraph g;
  for (Vertex v = 0; v < n; ++v) g.add(v, (v + 1) % n, kHuge);
  for (Vertex v = 0; v + 2 < n; v += 3) g.add(v, v + 2, 2 * kHuge);
  for (Vertex v = 0; v < n; v += 2) g.add(v, v, kHuge);
  for (auto _ : state) {
    auto terms = cycle_decompose(g);
    benchmark::DoNotOptimize(terms);
  }
}
BENCHMARK(bm_cycle_decompose)->Arg(12)->Arg(48);

static void bm_reduce_degrees(benchmark::State& state) {
  // A heavily over-visited cycle with chords, shortcut down to degree 2r.
  int n = static_cast<int>(state.range(0));
  Instance inst = make_city_instance(n, 1, 17, kHuge);
  Multigraph base;
  for (Vertex v = 0; v < n; ++v) base.add(v, (v + 1) % n, 3 * kHuge);
  for (Vertex v = 0; v + 2 < n; v += 2) base.add(v, v + 2, 2 * kHuge);
  std::map<Vertex, Big> target;
  for (Vertex v = 0; v < n; ++v) target[v] = 2 * inst.r[v];
  for (auto _ : state) {
    state.PauseTiming();
    Multigraph g = base;
    state.ResumeTiming();
    reduce_degrees(g, inst.c, target);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(bm_reduce_degrees)->Arg(12)->Arg(32);

static void bm_double_and_shortcut(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Instance inst = make_city_instance(n, 1, 23, kHuge);
  Multigraph g;
  for (Vertex v = 0; v + 1 < n; ++v) g.add(v, v + 1, 1);
  for (auto _ : state) {
    Multigraph tour = double_and_shortcut(g, inst.c);
    benchmark::DoNotOptimize(tour);
  }
}
BENCHMARK(bm_double_and_shortcut)->Arg(16)->Arg(64);

static void bm_solve_nonempty_city(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Instance inst = make_city_instance(n, 3, 31, kHuge);
  for (auto _ : state) {
    auto rep = solve_p1(inst);
    benchmark::DoNotOptimize(rep->solution);
  }
}
BENCHMARK(bm_solve_nonempty_city)->Arg(10)->Arg(20);

static void bm_solve_empty_city(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Instance inst = make_city_instance(n, 3, 37, kHuge);
  for (auto _ : state) {
    SolveReport rep = solve_p3(inst);
    benchmark::DoNotOptimize(rep.solution);
  }
}
BENCHMARK(bm_solve_empty_city)->Arg(10)->Arg(20);

static void bm_solve_depot_pipelines(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Instance inst = make_depot_instance(n, 3, 41, kHuge);
  for (auto _ : state) {
    auto arbitrary = solve_p5(inst);
    SolveReport empty_ok = solve_p7(inst);
    benchmark::DoNotOptimize(arbitrary->solution);
    benchmark::DoNotOptimize(empty_ok.solution);
  }
}
BENCHMARK(bm_solve_depot_pipelines)->Arg(10)->Arg(14);

static void bm_oracle_desk_scale(benchmark::State& state) {
  GenConfig cfg;
  cfg.n = 6;
  cfg.m = 2;
  cfg.rmax = 2;
  cfg.seed = 47;
  Instance inst = generate_instance(cfg).inst;
  for (auto _ : state) {
    auto res = exact_opt(inst, Variant::P1);
    benchmark::DoNotOptimize(res->cost);
  }
}
BENCHMARK(bm_oracle_desk_scale);

static void bm_generate(benchmark::State& state) {
  GenConfig cfg;
  cfg.n = static_cast<int>(state.range(0));
  cfg.m = 3;
  cfg.rmax = kHuge;
  cfg.seed = 53;
  for (auto _ : state) {
    InstanceDoc doc = generate_instance(cfg);
    benchmark::DoNotOptimize(doc.inst);
  }
}
BENCHMARK(bm_generate)->Arg(20)->Arg(50);

BENCHMARK_MAIN();
