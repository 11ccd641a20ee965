#include "mvmtsp/algorithms.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <utility>

#include "mvmtsp/flows.hpp"
#include "mvmtsp/forests.hpp"
#include "mvmtsp/graphkit.hpp"

namespace mvmtsp {

namespace {

using Clock = std::chrono::steady_clock;

double secs_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Multigraph restrict_to(const Multigraph& g, const std::vector<Vertex>& verts) {
  std::set<Vertex> keep(verts.begin(), verts.end());
  Multigraph out;
  for (const auto& [e, k] : g.x)
    if (keep.count(e.u) && keep.count(e.v)) out.x[e] = k;
  return out;
}

// Vertex sets of a forest over 0..n-1, singletons included, ordered by
// smallest member.
std::vector<std::vector<Vertex>> forest_components(const Multigraph& f,
                                                   int n) {
  auto comps = components(f);
  std::vector<char> seen(n, 0);
  for (const auto& comp : comps)
    for (Vertex v : comp) seen[v] = 1;
  for (Vertex v = 0; v < n; ++v)
    if (!seen[v]) comps.push_back({v});
  std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
    return a.front() < b.front();
  });
  return comps;
}

// Shared skeleton of the two forest-based solvers: m-component spanning
// forest, cycles per component, self-loops at the owning component.
SolveReport forest_pipeline(const Instance& inst, Clock::time_point t0,
                            const char* name) {
  SolveReport rep;
  rep.algorithm = name;
  rep.claimed_factor = 4;
  rep.lower_bound = tp_lower_bound(inst);

  int n = inst.n();
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), 0);
  Multigraph f = spanning_forest(inst.c, all, inst.m);
  auto comps = forest_components(f, n);
  assert(static_cast<int>(comps.size()) == inst.m);

  std::vector<int> owner(n, -1);
  for (int i = 0; i < static_cast<int>(comps.size()); ++i)
    for (Vertex v : comps[i]) owner[v] = i;

  for (const auto& comp : comps) {
    Multigraph tour;
    if (comp.size() == 1)
      tour.add(comp[0], comp[0]);
    else
      tour = double_and_shortcut(restrict_to(f, comp), inst.c);
    rep.solution.tours.push_back(tour);
  }
  for (Vertex v = 0; v < n; ++v) {
    Big extra = inst.r[v] - 1;
    if (extra > 0) rep.solution.tours[owner[v]].add(v, v, extra);
  }
  rep.wall_seconds = secs_since(t0);
  return rep;
}

// Active-depot preference for the depot sweeps: cheapest constrained-forest
// component first when the full forest exists, otherwise cheapest city link.
std::vector<Vertex> depot_preference(const Instance& inst) {
  std::vector<std::pair<Big, Vertex>> rank;
  if (auto cf = constrained_spanning_multigraph(inst)) {
    for (std::size_t i = 0; i < cf->depots.size(); ++i)
      rank.push_back({cf->comp_graphs[i].cost(inst.c), cf->depots[i]});
  } else {
    for (Vertex d : inst.depots) {
      Big best = -1;
      for (Vertex v : inst.cities())
        if (best < 0 || inst.c(d, v) < best) best = inst.c(d, v);
      rank.push_back({best, d});
    }
  }
  std::sort(rank.begin(), rank.end());
  std::vector<Vertex> order;
  for (const auto& [cost, d] : rank) order.push_back(d);
  return order;
}

// Instance restricted to the cities plus the chosen depots, with the index
// mapping back to the original vertices.
struct SubInstance {
  Instance inst;
  std::vector<Vertex> to_orig;
};

SubInstance restrict_depots(const Instance& inst,
                            const std::vector<Vertex>& chosen) {
  std::set<Vertex> chosen_set(chosen.begin(), chosen.end());
  SubInstance sub;
  for (Vertex v = 0; v < inst.n(); ++v)
    if (!inst.is_depot(v) || chosen_set.count(v)) sub.to_orig.push_back(v);
  int ns = static_cast<int>(sub.to_orig.size());
  sub.inst.c = CostMatrix(ns);
  for (int i = 0; i < ns; ++i)
    for (int j = i; j < ns; ++j)
      sub.inst.c.at(i, j) = inst.c(sub.to_orig[i], sub.to_orig[j]);
  sub.inst.r.resize(ns);
  for (int i = 0; i < ns; ++i) sub.inst.r[i] = inst.r[sub.to_orig[i]];
  for (int i = 0; i < ns; ++i)
    if (chosen_set.count(sub.to_orig[i])) sub.inst.depots.push_back(i);
  sub.inst.m = static_cast<int>(sub.inst.depots.size());
  return sub;
}

}  // namespace

std::optional<SolveReport> solve_p1(const Instance& inst) {
  auto t0 = Clock::now();
  int n = inst.n();
  if (inst.total_requests() < inst.m) return std::nullopt;

  if (inst.m > n) {
    // Loop-only solution: one tour per vertex, then extra tours to the
    // vertices with the most requests left.
    SolveReport rep;
    rep.algorithm = "alg1";
    rep.claimed_factor = 4;
    rep.lower_bound = tp_lower_bound(inst);
    std::vector<long long> parts(n, 1);
    std::priority_queue<std::pair<Big, int>> heap;  // (remaining, -vertex)
    for (Vertex v = 0; v < n; ++v) heap.push({inst.r[v] - 1, -v});
    for (int extra = inst.m - n; extra > 0; --extra) {
      auto [rem, nv] = heap.top();
      heap.pop();
      assert(rem > 0);
      parts[-nv] += 1;
      heap.push({rem - 1, nv});
    }
    for (Vertex v = 0; v < n; ++v) {
      Big first = inst.r[v] - (parts[v] - 1);
      for (long long p = 0; p < parts[v]; ++p) {
        Multigraph t;
        t.add(v, v, p == 0 ? first : Big(1));
        rep.solution.tours.push_back(t);
      }
    }
    rep.wall_seconds = secs_since(t0);
    return rep;
  }
  return forest_pipeline(inst, t0, "alg1");
}

std::optional<SolveReport> solve_p2(const Instance& inst) {
  auto t0 = Clock::now();
  if (inst.m > inst.n()) return std::nullopt;
  return forest_pipeline(inst, t0, "alg3");
}

std::optional<SolveReport> solve_p5(const Instance& inst) {
  auto t0 = Clock::now();
  Big city_requests = 0;
  for (Vertex v : inst.cities()) city_requests += inst.r[v];
  if (city_requests < inst.m) return std::nullopt;

  auto cf = constrained_spanning_multigraph(inst);
  assert(cf.has_value());

  SolveReport rep;
  rep.algorithm = "alg2";
  rep.claimed_factor = 3;
  rep.lower_bound = tp_lower_bound(inst);

  int m = inst.m;
  rep.solution.tours.resize(m);
  for (int i = 0; i < m; ++i)
    rep.solution.tours[i] = double_and_shortcut(cf->comp_graphs[i], inst.c);

  // Residual requests after one visit per containing component.
  std::vector<Big> residual(inst.n(), 0);
  for (Vertex v : inst.cities()) residual[v] = inst.r[v];
  for (const auto& comp : cf->comp_vertices)
    for (Vertex v : comp)
      if (!inst.is_depot(v)) residual[v] -= 1;

  Transport tp = solve_transportation(inst.c, residual, residual);
  for (const auto& comp : components(tp.x)) {
    int agent = -1;
    for (int i = 0; i < m && agent < 0; ++i)
      for (Vertex v : comp)
        if (std::binary_search(cf->comp_vertices[i].begin(),
                               cf->comp_vertices[i].end(), v)) {
          agent = i;
          break;
        }
    assert(agent >= 0);
    for (const auto& [e, k] : restrict_to(tp.x, comp).x)
      rep.solution.tours[agent].add(e.u, e.v, k);
  }
  rep.wall_seconds = secs_since(t0);
  return rep;
}

std::optional<SolveReport> solve_p6(const Instance& inst) {
  auto t0 = Clock::now();
  if (static_cast<int>(inst.cities().size()) < inst.m) return std::nullopt;

  std::vector<Vertex> all(inst.n());
  std::iota(all.begin(), all.end(), 0);
  auto df = cerdeira_forest(inst.c, all, inst.depots);
  assert(df.has_value());

  SolveReport rep;
  rep.algorithm = "alg4";
  rep.claimed_factor = 4;
  rep.lower_bound = tp_lower_bound(inst);
  for (std::size_t i = 0; i < df->comps.size(); ++i) {
    Multigraph tour =
        double_and_shortcut(restrict_to(df->forest, df->comps[i]), inst.c);
    for (Vertex v : df->comps[i]) {
      if (inst.is_depot(v)) continue;
      Big extra = inst.r[v] - 1;
      if (extra > 0) tour.add(v, v, extra);
    }
    rep.solution.tours.push_back(tour);
  }
  rep.wall_seconds = secs_since(t0);
  return rep;
}

SolveReport solve_p3(const Instance& inst, BdEngine engine) {
  auto t0 = Clock::now();
  SolveReport rep;
  rep.algorithm = "alg5";
  rep.claimed_factor = 2;
  rep.lower_bound = tp_lower_bound(inst);

  DegreeSpec spec;
  spec.rho.resize(inst.n());
  for (Vertex v = 0; v < inst.n(); ++v) {
    spec.rho[v] = 2 * inst.r[v];
    spec.n_edges += inst.r[v];
  }
  spec.max_components = inst.m;
  auto bd = bounded_degree_multigraph(inst.c, spec, engine);
  assert(bd.has_value());

  Multigraph x = bd->x;
  for (auto& [e, k] : x.x) k *= 2;
  ReduceStats stats;
  for (const auto& comp : components(x)) {
    Multigraph part = restrict_to(x, comp);
    std::map<Vertex, Big> target;
    for (Vertex v : comp) target[v] = 2 * inst.r[v];
    reduce_degrees(part, inst.c, target, -1, &stats);
    rep.solution.tours.push_back(part);
  }
  rep.multigraph_updates = stats.multigraph_updates;
  rep.wall_seconds = secs_since(t0);
  return rep;
}

SolveReport solve_p7(const Instance& inst, BdEngine engine) {
  auto t0 = Clock::now();
  SolveReport rep;
  rep.algorithm = "alg6";
  rep.claimed_factor = 2;
  rep.lower_bound = tp_lower_bound(inst);
  rep.solution.tours.assign(inst.m, Multigraph());

  std::vector<Vertex> cities = inst.cities();
  Big city_requests = 0;
  for (Vertex v : cities) city_requests += inst.r[v];
  if (city_requests == 0) {
    rep.wall_seconds = secs_since(t0);
    return rep;  // nothing to visit, all agents stay home
  }

  // Meta matrix: cities in order, the contracted depot last.
  int q = static_cast<int>(cities.size());
  CostMatrix mc(q + 1);
  std::vector<Vertex> nearest(q);
  for (int i = 0; i < q; ++i) {
    for (int j = i; j < q; ++j) mc.at(i, j) = inst.c(cities[i], cities[j]);
    Cost best = 0;
    Vertex arg = -1;
    for (Vertex d : inst.depots)
      if (arg < 0 || inst.c(d, cities[i]) < best) {
        best = inst.c(d, cities[i]);
        arg = d;
      }
    mc.at(i, q) = best;
    nearest[i] = arg;
  }
  mc.at(q, q) = 2 * mc.cmin(q);

  std::optional<Solution> best_sol;
  Big best_cost = 0;
  long long best_updates = 0;
  for (int mu = 1; mu <= inst.m; ++mu) {
    if (city_requests < mu) break;  // the contraction would need depot loops
    DegreeSpec spec;
    spec.rho.resize(q + 1);
    spec.n_edges = city_requests + mu;
    for (int i = 0; i < q; ++i) spec.rho[i] = 2 * inst.r[cities[i]];
    spec.rho[q] = 2 * mu;
    spec.max_components = 1;
    auto bd = bounded_degree_multigraph(mc, spec, engine);
    assert(bd.has_value());

    Multigraph xh = bd->x;
    xh.x.erase(Edge(q, q));  // loops at the contracted depot never expand
    for (auto& [e, k] : xh.x) k *= 2;

    Multigraph x;
    for (const auto& [e, k] : xh.x) {
      if (e.v == q)
        x.add(nearest[e.u], cities[e.u], k);
      else
        x.add(cities[e.u], cities[e.v], k);
    }

    ReduceStats stats;
    Solution sol;
    sol.tours.assign(inst.m, Multigraph());
    for (const auto& comp : components(x)) {
      std::vector<Vertex> deps;
      for (Vertex v : comp)
        if (inst.is_depot(v)) deps.push_back(v);
      assert(!deps.empty());
      Multigraph part = restrict_to(x, comp);
      Vertex keep = deps[0];
      if (deps.size() > 1)
        disconnect_depots(part, inst.c,
                          {deps.begin() + 1, deps.end()}, keep, &stats);
      std::map<Vertex, Big> target;
      target[keep] = 2;
      for (Vertex v : comp)
        if (!inst.is_depot(v)) target[v] = 2 * inst.r[v];
      reduce_degrees(part, inst.c, target, keep, &stats);
      int slot = static_cast<int>(
          std::lower_bound(inst.depots.begin(), inst.depots.end(), keep) -
          inst.depots.begin());
      sol.tours[slot] = part;
    }
    Big cost = sol.cost(inst.c);
    if (!best_sol || cost < best_cost) {
      best_sol = sol;
      best_cost = cost;
      best_updates = stats.multigraph_updates;
    }
  }
  assert(best_sol.has_value());
  rep.solution = *best_sol;
  rep.multigraph_updates = best_updates;
  rep.wall_seconds = secs_since(t0);
  return rep;
}

SolveReport sweep_reduction(const Instance& inst, Variant base) {
  auto t0 = Clock::now();
  SolveReport rep;
  rep.lower_bound = tp_lower_bound(inst);
  switch (base) {
    case Variant::P1:
      rep.algorithm = "sweep(alg1)";
      rep.claimed_factor = 4;
      break;
    case Variant::P2:
      rep.algorithm = "sweep(alg3)";
      rep.claimed_factor = 4;
      break;
    case Variant::P5:
      rep.algorithm = "sweep(alg2)";
      rep.claimed_factor = 3;
      break;
    case Variant::P6:
      rep.algorithm = "sweep(alg4)";
      rep.claimed_factor = 4;
      break;
    default:
      throw std::invalid_argument("sweep base must be a non-empty variant");
  }

  std::optional<Solution> best;
  Big best_cost = 0;
  if (base == Variant::P1 || base == Variant::P2) {
    if (!inst.depots.empty())
      throw std::invalid_argument("depot instance given to a depot-free base");
    for (int l = 1; l <= inst.m; ++l) {
      Instance sub = inst;
      sub.m = l;
      auto run = base == Variant::P1 ? solve_p1(sub) : solve_p2(sub);
      if (!run) continue;
      Big cost = run->solution.cost(inst.c);
      if (!best || cost < best_cost) {
        best = run->solution;
        best_cost = cost;
      }
    }
  } else {
    if (inst.depots.empty())
      throw std::invalid_argument("depot base needs a depot instance");
    std::vector<Vertex> pref = depot_preference(inst);
    for (int l = 1; l <= inst.m; ++l) {
      std::vector<Vertex> chosen(pref.begin(), pref.begin() + l);
      std::sort(chosen.begin(), chosen.end());
      SubInstance sub = restrict_depots(inst, chosen);
      auto run =
          base == Variant::P5 ? solve_p5(sub.inst) : solve_p6(sub.inst);
      if (!run) continue;
      Solution mapped;
      mapped.tours.assign(inst.m, Multigraph());
      for (std::size_t i = 0; i < run->solution.tours.size(); ++i) {
        Multigraph t;
        for (const auto& [e, k] : run->solution.tours[i].x)
          t.add(sub.to_orig[e.u], sub.to_orig[e.v], k);
        Vertex depot = sub.to_orig[sub.inst.depots[i]];
        int slot = static_cast<int>(
            std::lower_bound(inst.depots.begin(), inst.depots.end(), depot) -
            inst.depots.begin());
        mapped.tours[slot] = t;
      }
      Big cost = mapped.cost(inst.c);
      if (!best || cost < best_cost) {
        best = mapped;
        best_cost = cost;
      }
    }
  }
  if (best) {
    rep.solution = *best;
  } else {
    // No base count is feasible (no city requests): everyone stays home.
    rep.solution.tours.assign(inst.m, Multigraph());
  }
  rep.wall_seconds = secs_since(t0);
  return rep;
}

std::optional<SolveReport> solve(const Instance& inst, Variant var,
                                 const SolveOptions& opts) {
  if (variant_has_depots(var) != !inst.depots.empty())
    throw std::invalid_argument(
        "instance depot list does not match the variant");
  std::string alg = opts.algorithm;
  if (alg == "auto") {
    switch (var) {
      case Variant::P1: alg = "alg1"; break;
      case Variant::P2: alg = "alg3"; break;
      case Variant::P3:
      case Variant::P4: alg = "alg5"; break;
      case Variant::P5: alg = "alg2"; break;
      case Variant::P6: alg = "alg4"; break;
      case Variant::P7:
      case Variant::P8: alg = "alg6"; break;
    }
  }
  auto require = [&](bool ok) {
    if (!ok)
      throw std::invalid_argument(std::string("algorithm ") + alg +
                                  " cannot solve variant " +
                                  variant_name(var));
  };
  if (alg == "alg1") {
    require(var == Variant::P1);
    return solve_p1(inst);
  }
  if (alg == "alg2") {
    require(var == Variant::P5);
    return solve_p5(inst);
  }
  if (alg == "alg3") {
    require(var == Variant::P2);
    return solve_p2(inst);
  }
  if (alg == "alg4") {
    require(var == Variant::P6);
    return solve_p6(inst);
  }
  if (alg == "alg5") {
    require(var == Variant::P3 || var == Variant::P4);
    return solve_p3(inst, opts.bd_engine);
  }
  if (alg == "alg6") {
    require(var == Variant::P7 || var == Variant::P8);
    return solve_p7(inst, opts.bd_engine);
  }
  if (alg == "sweep") {
    switch (var) {
      case Variant::P3: return sweep_reduction(inst, Variant::P1);
      case Variant::P4: return sweep_reduction(inst, Variant::P2);
      case Variant::P7: return sweep_reduction(inst, Variant::P5);
      case Variant::P8: return sweep_reduction(inst, Variant::P6);
      default:
        throw std::invalid_argument(
            "sweep only serves the empty-tours variants");
    }
  }
  throw std::invalid_argument("unknown algorithm: " + alg);
}

}  // namespace mvmtsp
