#include "mvmtsp/bounded_degree.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <tuple>
#include <utility>

#include "mvmtsp/flows.hpp"
#include "mvmtsp/graphkit.hpp"

namespace mvmtsp {
namespace {

// ---------------------------------------------------------------------------
// Exhaustive engine: enumerate adjacency rows vertex by vertex.
// ---------------------------------------------------------------------------

struct ExactSearch {
  const CostMatrix& c;
  int max_comps;
  std::vector<Vertex> active;
  std::vector<long long> rem;  // remaining dotted degree per vertex
  // Admissible cost floor: perdeg2[v] = min(2 * cheapest edge at v, c(vv)).
  // Any edge (u,w) costs at least (perdeg2(u) + perdeg2(w)) / 4 per copy and
  // provides one degree at each end; a loop provides two degrees at v for at
  // least perdeg2(v) / 2 each. All bound arithmetic is scaled by 4.
  std::vector<Cost> perdeg2;
  Multigraph cur;
  Big cur_cost4 = 0;
  std::optional<Big> best_cost4;
  Multigraph best;
  long long nodes = 0;

  ExactSearch(const CostMatrix& cc, const std::vector<long long>& rho, int mc)
      : c(cc), max_comps(mc), rem(rho) {
    for (Vertex v = 0; v < static_cast<int>(rho.size()); ++v)
      if (rho[v] > 0) active.push_back(v);
    perdeg2.assign(rho.size(), 0);
    for (Vertex v : active) {
      Cost u = c(v, v);
      for (Vertex w : active)
        if (w != v) u = std::min(u, 2 * c(v, w));
      perdeg2[v] = u;
    }
  }

  Big floor4() const {
    Big lb = 0;
    for (Vertex v : active)
      if (rem[v] > 0) lb += Big(perdeg2[v]) * rem[v];
    return lb;
  }

  // Components of the edges chosen so far; a component is sealed once no
  // member has remaining degree, so nothing can ever attach to it again.
  bool comp_prune_ok() const {
    std::map<Vertex, Vertex> up;
    auto find = [&](Vertex v) {
      while (up[v] != v) v = up[v] = up[up[v]];
      return v;
    };
    for (const auto& [e, mult] : cur.x) {
      if (!up.count(e.u)) up[e.u] = e.u;
      if (!up.count(e.v)) up[e.v] = e.v;
      Vertex a = find(e.u), b = find(e.v);
      if (a != b) up[a] = b;
    }
    std::map<Vertex, bool> sealed;
    for (auto& [v, p] : up) sealed.emplace(find(v), true);
    for (auto& [v, p] : up)
      if (rem[v] > 0) sealed[find(v)] = false;
    int nsealed = 0;
    for (auto& [root, s] : sealed) nsealed += s;
    bool pending = false;  // open components or untouched active vertices
    for (auto& [root, s] : sealed) pending |= !s;
    for (Vertex v : active) pending |= rem[v] > 0 && !up.count(v);
    int floor_comps = nsealed + (pending ? 1 : 0);
    return floor_comps <= max_comps;
  }

  void run() { row(0); }

  void row(size_t ai) {
    if (ai == active.size()) {
      leaf();
      return;
    }
    Vertex v = active[ai];
    // Slots: the loop at v and every later active vertex, cheapest degree
    // first so the greedy dive lands on a good incumbent early.
    std::vector<Vertex> slots;  // v itself encodes the loop
    slots.push_back(v);
    for (Vertex w : active)
      if (w > v) slots.push_back(w);
    std::stable_sort(slots.begin(), slots.end(), [&](Vertex a, Vertex b) {
      Cost ka = a == v ? c(v, v) : 2 * c(v, a);
      Cost kb = b == v ? c(v, v) : 2 * c(v, b);
      return ka < kb;
    });
    fill(ai, v, slots, 0);
  }

  void fill(size_t ai, Vertex v, const std::vector<Vertex>& slots, size_t si) {
    ++nodes;
    if (best_cost4 && cur_cost4 + floor4() >= *best_cost4) return;
    if (rem[v] == 0) {
      if (comp_prune_ok()) row(ai + 1);
      return;
    }
    if (si == slots.size()) return;
    Vertex w = slots[si];
    bool loop = w == v;
    long long maxk = loop ? rem[v] / 2 : std::min(rem[v], rem[w]);
    Cost unit = loop ? c(v, v) : c(v, w);
    for (long long k = maxk; k >= 0; --k) {
      if (k > 0) {
        cur.add(v, w, k);
        rem[v] -= loop ? 2 * k : k;
        if (!loop) rem[w] -= k;
        cur_cost4 += Big(4) * unit * k;
      }
      fill(ai, v, slots, si + 1);
      if (k > 0) {
        cur.add(v, w, -Big(k));
        rem[v] += loop ? 2 * k : k;
        if (!loop) rem[w] += k;
        cur_cost4 -= Big(4) * unit * k;
      }
    }
  }

  void leaf() {
    int ncomp = static_cast<int>(components(cur).size());
    if (ncomp > max_comps) return;
    if (!best_cost4 || cur_cost4 < *best_cost4) {
      best_cost4 = cur_cost4;
      best = cur;
    }
  }
};

// ---------------------------------------------------------------------------
// Large-scale engine: branch and bound over m-component spanning forests,
// each leaf completed by a transportation residual.
// ---------------------------------------------------------------------------

using Arc = std::pair<Vertex, Vertex>;

// Balanced orientation of a forest: out(v) and in(v) never exceed
// ceil(deg(v)/2). Odd-degree vertices of each component are paired with
// virtual edges; consuming an Euler traversal then orients every real edge
// in its traversal direction.
std::vector<Arc> orient_balanced(const Multigraph& F) {
  std::vector<Arc> arcs;
  for (const auto& comp : components(F)) {
    if (comp.size() == 1) continue;
    std::map<Vertex, int> local;
    for (size_t i = 0; i < comp.size(); ++i)
      local[comp[i]] = static_cast<int>(i);
    struct E {
      int a, b;
      bool real;
    };
    std::vector<E> es;
    for (const auto& [e, mult] : F.x) {
      if (!local.count(e.u)) continue;
      assert(mult == 1 && !e.loop());
      es.push_back({local[e.u], local[e.v], true});
    }
    std::vector<int> deg(comp.size(), 0);
    for (const E& e : es) {
      deg[e.a]++;
      deg[e.b]++;
    }
    std::vector<int> odd;
    for (size_t i = 0; i < comp.size(); ++i)
      if (deg[i] % 2) odd.push_back(static_cast<int>(i));
    for (size_t i = 0; i + 1 < odd.size(); i += 2)
      es.push_back({odd[i], odd[i + 1], false});

    std::vector<std::vector<std::pair<int, int>>> adj(comp.size());
    for (size_t id = 0; id < es.size(); ++id) {
      adj[es[id].a].push_back({static_cast<int>(id), es[id].b});
      adj[es[id].b].push_back({static_cast<int>(id), es[id].a});
    }
    std::vector<size_t> ptr(comp.size(), 0);
    std::vector<char> used(es.size(), false);
    std::vector<int> st = {0};
    while (!st.empty()) {
      int v = st.back();
      while (ptr[v] < adj[v].size() && used[adj[v][ptr[v]].first]) ptr[v]++;
      if (ptr[v] == adj[v].size()) {
        st.pop_back();
        continue;
      }
      auto [id, w] = adj[v][ptr[v]];
      used[id] = true;
      if (es[id].real) arcs.push_back({comp[v], comp[w]});  // traversal order
      st.push_back(w);
    }
    for (char u : used) assert(u);
    (void)used;
  }
  return arcs;
}

struct LeafValue {
  Multigraph x;
  Big cost = 0;
};

// Forest plus cheapest exact-degree completion: fix the orientation of F,
// give every vertex rho/2 outgoing and rho/2 incoming slots, subtract the
// orientation, and ship the rest at minimum cost.
LeafValue eval_oriented(const CostMatrix& c, const Multigraph& F,
                        const std::vector<Big>& rho,
                        const std::vector<Arc>& arcs) {
  const int n = c.n();
  std::vector<Big> out(n, 0), in(n, 0);
  for (Vertex v = 0; v < n; ++v) out[v] = in[v] = rho[v] / 2;
  for (const Arc& a : arcs) {
    out[a.first] -= 1;
    in[a.second] -= 1;
    assert(out[a.first] >= 0 && in[a.second] >= 0);
  }
  Transport t = solve_transportation(c, out, in);
  LeafValue lv;
  lv.x = F;
  for (const auto& [e, mult] : t.x.x) lv.x.add(e.u, e.v, mult);
  lv.cost = F.cost(c) + t.cost;
  return lv;
}

// Flip single forest arcs while that lowers the completion cost. The lex
// orientation is not always the best one; this pass repairs the common
// cases cheaply.
LeafValue improve_orientation(const CostMatrix& c, const Multigraph& F,
                              const std::vector<Big>& rho,
                              std::vector<Arc> arcs) {
  LeafValue bestv = eval_oriented(c, F, rho, arcs);
  for (int pass = 0; pass < 30; ++pass) {
    bool better = false;
    for (size_t i = 0; i < arcs.size(); ++i) {
      auto [a, b] = arcs[i];
      // Validity after the flip: b gains an out slot, a gains an in slot.
      Big outb = 0, ina = 0;
      for (const Arc& x : arcs) {
        outb += x.first == b;
        ina += x.second == a;
      }
      if (outb + 1 > rho[b] / 2 || ina + 1 > rho[a] / 2) continue;
      arcs[i] = {b, a};
      LeafValue cand = eval_oriented(c, F, rho, arcs);
      if (cand.cost < bestv.cost) {
        bestv = cand;
        better = true;
      } else {
        arcs[i] = {a, b};
      }
    }
    if (!better) break;
  }
  return bestv;
}

struct ForestSearch {
  const CostMatrix& c;
  const std::vector<Big>& rho;
  int m;
  std::vector<Vertex> active;
  int T = 0;  // forest edges to pick
  std::vector<Edge> edges;
  std::vector<Big> psum;
  std::vector<int> par, szv, degF;
  std::vector<Edge> chosen;
  Big curF = 0;
  std::optional<Big> inc_cost;
  Multigraph inc_forest;
  Big tp_bound = 0;
  long long nodes = 0, evals = 0;
  long long node_budget = 1500000, eval_budget = 12000;
  bool stop = false, budget_hit = false, proven = false;

  ForestSearch(const CostMatrix& cc, const std::vector<Big>& r, int mm)
      : c(cc), rho(r), m(mm) {
    for (Vertex v = 0; v < c.n(); ++v)
      if (rho[v] > 0) active.push_back(v);
    T = std::max(0, static_cast<int>(active.size()) - m);
    // Each leaf evaluation solves a transportation problem (about n^4 work),
    // so scale the evaluation allowance down as instances grow.
    long long nn = static_cast<long long>(active.size());
    eval_budget = std::max<long long>(800, 600000 / std::max<long long>(1, nn * nn));
    for (size_t i = 0; i < active.size(); ++i)
      for (size_t j = i + 1; j < active.size(); ++j)
        edges.emplace_back(active[i], active[j]);
    std::sort(edges.begin(), edges.end(), [&](const Edge& a, const Edge& b) {
      return std::make_tuple(c(a.u, a.v), a.u, a.v) <
             std::make_tuple(c(b.u, b.v), b.u, b.v);
    });
    psum.assign(edges.size() + 1, 0);
    for (size_t i = 0; i < edges.size(); ++i)
      psum[i + 1] = psum[i] + c(edges[i].u, edges[i].v);
    par.resize(c.n());
    szv.assign(c.n(), 1);
    degF.assign(c.n(), 0);
    for (Vertex v = 0; v < c.n(); ++v) par[v] = v;
    // Component-relaxed optimum: with even degrees the transportation fold
    // is exact, so this is a true lower bound on every leaf.
    std::vector<Big> half(c.n());
    for (Vertex v = 0; v < c.n(); ++v) half[v] = rho[v] / 2;
    tp_bound = solve_transportation(c, half, half).cost;
  }

  int find(int v) const {
    while (par[v] != v) v = par[v];
    return v;
  }

  bool cap_ok(Vertex v) const { return Big(degF[v]) + 1 <= rho[v]; }

  // ra must be the surviving (larger) root, rb the absorbed one.
  void take(const Edge& e, int ra, int rb) {
    par[rb] = ra;
    szv[ra] += szv[rb];
    degF[e.u]++;
    degF[e.v]++;
    chosen.push_back(e);
    curF += c(e.u, e.v);
  }

  void undo(const Edge& e, int ra, int rb) {
    curF -= c(e.u, e.v);
    chosen.pop_back();
    degF[e.u]--;
    degF[e.v]--;
    szv[ra] -= szv[rb];
    par[rb] = rb;
  }

  Multigraph forest_of(const std::vector<Edge>& es) const {
    Multigraph F;
    for (const Edge& e : es) F.add(e.u, e.v, 1);
    return F;
  }

  void offer(const std::vector<Edge>& es) {
    if (++evals > eval_budget) {
      budget_hit = true;
      stop = true;
      return;
    }
    Multigraph F = forest_of(es);
    LeafValue lv = eval_oriented(c, F, rho, orient_balanced(F));
    if (!inc_cost || lv.cost < *inc_cost) {
      inc_cost = lv.cost;
      inc_forest = F;
      if (*inc_cost == tp_bound) {
        proven = true;
        stop = true;
      }
    }
  }

  void branch(size_t idx) {
    if (stop) return;
    if (static_cast<int>(chosen.size()) == T) {
      offer(chosen);
      return;
    }
    if (++nodes > node_budget) {
      budget_hit = true;
      stop = true;
      return;
    }
    size_t need = T - chosen.size();
    if (edges.size() - idx < need) return;
    if (inc_cost && curF + (psum[idx + need] - psum[idx]) >= *inc_cost) return;
    const Edge e = edges[idx];
    int ra = find(e.u), rb = find(e.v);
    if (ra != rb && cap_ok(e.u) && cap_ok(e.v)) {
      if (szv[ra] < szv[rb]) std::swap(ra, rb);
      take(e, ra, rb);
      branch(idx + 1);
      undo(e, ra, rb);
    }
    branch(idx + 1);
  }

  // Greedy capped forest; repeated scans always finish because any two trees
  // expose leaves (degree <= 1 < rho) that a complete graph can join.
  std::vector<Edge> greedy_forest() const {
    std::vector<int> p(c.n()), s(c.n(), 1), d(c.n(), 0);
    for (Vertex v = 0; v < c.n(); ++v) p[v] = v;
    auto f = [&](int v) {
      while (p[v] != v) v = p[v] = p[p[v]];
      return v;
    };
    std::vector<Edge> out;
    while (static_cast<int>(out.size()) < T) {
      bool progress = false;
      for (const Edge& e : edges) {
        if (static_cast<int>(out.size()) == T) break;
        if (Big(d[e.u]) + 1 > rho[e.u] || Big(d[e.v]) + 1 > rho[e.v]) continue;
        int a = f(e.u), b = f(e.v);
        if (a == b) continue;
        p[a] = b;
        s[b] += s[a];
        d[e.u]++;
        d[e.v]++;
        out.push_back(e);
        progress = true;
      }
      assert(progress || static_cast<int>(out.size()) == T);
      if (!progress) break;
    }
    assert(static_cast<int>(out.size()) == T);
    return out;
  }

  void run_exact() {
    offer(greedy_forest());
    stop = false;  // the seed may have tripped proven/budget flags already
    if (!proven && !budget_hit) branch(0);
  }

  void run_local() {
    std::vector<Edge> F = greedy_forest();
    offer(F);
    bool improved = true;
    while (improved && !stop) {
      improved = false;
      for (size_t fi = 0; fi < F.size() && !stop; ++fi) {
        // Components of F minus the removed edge.
        std::vector<int> p(c.n());
        for (Vertex v = 0; v < c.n(); ++v) p[v] = v;
        auto f = [&](int v) {
          while (p[v] != v) v = p[v] = p[p[v]];
          return v;
        };
        std::vector<int> d(c.n(), 0);
        for (size_t j = 0; j < F.size(); ++j) {
          if (j == fi) continue;
          int a = f(F[j].u), b = f(F[j].v);
          assert(a != b);
          p[a] = b;
          d[F[j].u]++;
          d[F[j].v]++;
        }
        for (const Edge& e : edges) {
          if (stop) break;
          if (f(e.u) == f(e.v)) continue;
          if (Big(d[e.u]) + 1 > rho[e.u] || Big(d[e.v]) + 1 > rho[e.v])
            continue;
          std::vector<Edge> cand = F;
          cand[fi] = e;
          Big before = *inc_cost;
          offer(cand);
          if (*inc_cost < before) {
            F = cand;
            improved = true;
            break;
          }
        }
        if (improved) break;
      }
    }
  }
};

}  // namespace

std::optional<Multigraph> min_cost_exact_degrees(
    const CostMatrix& c, const std::vector<long long>& rho, int max_comps,
    long long* nodes_out) {
  assert(static_cast<int>(rho.size()) == c.n());
  assert(max_comps >= 1);
  long long total = 0;
  for (long long r : rho) {
    assert(r >= 0);
    total += r;
  }
  if (total % 2) return std::nullopt;
  ExactSearch search(c, rho, max_comps);
  if (search.active.empty()) {
    if (nodes_out) *nodes_out = 0;
    return Multigraph{};
  }
  search.run();
  if (nodes_out) *nodes_out = search.nodes;
  if (!search.best_cost4) return std::nullopt;
  return search.best;
}

std::optional<BoundedDegreeResult> bounded_degree_multigraph(
    const CostMatrix& c, const DegreeSpec& spec, BdEngine engine) {
  const int n = c.n();
  assert(static_cast<int>(spec.rho.size()) == n);
  assert(spec.max_components >= 1);
  Big total = 0;
  for (const Big& r : spec.rho) {
    assert(r >= 0 && r % 2 == 0);
    total += r;
  }
  assert(total == 2 * spec.n_edges);

  std::vector<Vertex> active;
  for (Vertex v = 0; v < n; ++v)
    if (spec.rho[v] > 0) active.push_back(v);
  BoundedDegreeResult res;
  if (active.empty()) {
    res.optimal = true;
    return res;
  }
  int T = std::max(0, static_cast<int>(active.size()) - spec.max_components);
  if (spec.n_edges < T) return std::nullopt;  // cannot cover in m components

  if (engine == BdEngine::exact && total <= 64 && active.size() <= 8) {
    std::vector<long long> small(n, 0);
    for (Vertex v = 0; v < n; ++v)
      small[v] = static_cast<long long>(spec.rho[v]);
    auto best = min_cost_exact_degrees(c, small, spec.max_components,
                                       &res.nodes);
    assert(best.has_value());  // a cycle plus loops is always feasible
    res.x = *best;
    res.cost = best->cost(c);
    res.lower_bound = res.cost;
    res.optimal = true;
  } else {
    ForestSearch fs(c, spec.rho, spec.max_components);
    if (engine == BdEngine::exact)
      fs.run_exact();
    else
      fs.run_local();
    assert(fs.inc_cost.has_value());
    LeafValue lv = improve_orientation(c, fs.inc_forest, spec.rho,
                                       orient_balanced(fs.inc_forest));
    res.x = lv.x;
    res.cost = lv.cost;
    res.lower_bound = fs.tp_bound;
    res.optimal = res.cost == fs.tp_bound;
    res.nodes = fs.nodes;
  }

  // Contract: exact degrees, exact size, component budget, full cover.
  assert(res.x.edge_count() == spec.n_edges);
  auto degs = res.x.dotted_degrees();
  for (Vertex v = 0; v < n; ++v) {
    Big d = degs.count(v) ? degs[v] : 0;
    assert(d == spec.rho[v]);
    (void)d;
  }
  assert(static_cast<int>(components(res.x).size()) <= spec.max_components);
  return res;
}

}  // namespace mvmtsp
