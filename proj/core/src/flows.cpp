#include "mvmtsp/flows.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace mvmtsp {

Transport solve_transportation(const CostMatrix& c,
                               const std::vector<Big>& supply,
                               const std::vector<Big>& demand) {
  int n = c.n();
  assert(static_cast<int>(supply.size()) == n);
  assert(static_cast<int>(demand.size()) == n);
  Transport out;
  std::vector<Big> a = supply, b = demand;
  Big total = 0;
  for (const Big& s : a) {
    assert(s >= 0);
    total += s;
  }
#ifndef NDEBUG
  Big td = 0;
  for (const Big& d : b) {
    assert(d >= 0);
    td += d;
  }
  assert(td == total);
#endif

  // Nodes 0..n-1: supply side; n..2n-1: demand side. Potentials keep every
  // residual arc's reduced cost non-negative: forward u->v costs c(u,v),
  // backward v->u costs -c(u,v) and exists while f(u,v) > 0.
  const Cost kInf = std::numeric_limits<Cost>::max() / 4;
  std::vector<Cost> pot(2 * n, 0);
  auto& f = out.flow;

  while (total > 0) {
    std::vector<Cost> dist(2 * n, kInf);
    std::vector<int> par(2 * n, -1);
    std::vector<char> done(2 * n, 0);
    for (int u = 0; u < n; ++u)
      if (a[u] > 0) dist[u] = 0;
    while (true) {
      int x = -1;
      for (int i = 0; i < 2 * n; ++i)
        if (!done[i] && dist[i] < kInf && (x == -1 || dist[i] < dist[x]))
          x = i;
      if (x == -1) break;
      done[x] = 1;
      if (x < n) {
        for (int v = 0; v < n; ++v) {
          Cost rc = c(x, v) + pot[x] - pot[n + v];
          assert(rc >= 0);
          if (dist[x] + rc < dist[n + v]) {
            dist[n + v] = dist[x] + rc;
            par[n + v] = x;
          }
        }
      } else {
        int v = x - n;
        for (int u = 0; u < n; ++u) {
          auto it = f.find({u, v});
          if (it == f.end() || it->second == 0) continue;
          Cost rc = -c(u, v) + pot[x] - pot[u];
          assert(rc >= 0);
          if (dist[x] + rc < dist[u]) {
            dist[u] = dist[x] + rc;
            par[u] = x;
          }
        }
      }
    }

    int t = -1;
    for (int v = 0; v < n; ++v)
      if (b[v] > 0 && dist[n + v] < kInf && (t == -1 || dist[n + v] < dist[t]))
        t = n + v;
    assert(t != -1 && "complete bipartite graph cannot get stuck");

    // Walk back to a source, collecting the bottleneck.
    Big delta = b[t - n];
    int x = t;
    while (par[x] != -1) {
      int p = par[x];
      if (x >= n) {
        // arrived via forward arc p -> x; no capacity bound
      } else {
        delta = std::min(delta, f.at({x, p - n}));
      }
      x = p;
    }
    delta = std::min(delta, a[x]);
    assert(delta > 0);

    x = t;
    while (par[x] != -1) {
      int p = par[x];
      if (x >= n) {
        f[{p, x - n}] += delta;
        out.cost += Big(c(p, x - n)) * delta;
      } else {
        f.at({x, p - n}) -= delta;
        out.cost -= Big(c(x, p - n)) * delta;
      }
      x = p;
    }
    a[x] -= delta;
    b[t - n] -= delta;
    total -= delta;
    for (int i = 0; i < 2 * n; ++i)
      if (dist[i] < kInf) pot[i] += dist[i];
    ++out.augmentations;
  }

  for (auto it = f.begin(); it != f.end();) {
    if (it->second == 0) {
      it = f.erase(it);
      continue;
    }
    out.x.add(it->first.first, it->first.second, it->second);
    ++it;
  }
  return out;
}

Big tp_lower_bound(const Instance& inst) {
  std::vector<Big> r(inst.n(), 0);
  for (Vertex v : inst.cities()) r[v] = inst.r[v];
  return solve_transportation(inst.c, r, r).cost;
}

namespace {

struct FixedSizeSearch {
  const CostMatrix& c;
  std::vector<Edge> edges;  // sorted by (cost, u, v)
  std::vector<long long> lb;
  long long n_edges;
  Big best_cost;
  Multigraph best;
  Multigraph cur;

  FixedSizeSearch(const CostMatrix& cm, std::vector<long long> deg_lb,
                  long long N)
      : c(cm), lb(std::move(deg_lb)), n_edges(N), best_cost(-1) {
    for (Vertex u = 0; u < c.n(); ++u)
      for (Vertex v = u; v < c.n(); ++v) edges.emplace_back(u, v);
    std::sort(edges.begin(), edges.end(), [&](const Edge& a, const Edge& b) {
      Cost ca = c(a.u, a.v), cb = c(b.u, b.v);
      return ca != cb ? ca < cb : a < b;
    });
  }

  // Can the leftover edge choices still serve every deficit?
  bool viable(std::size_t i, long long left,
              const std::vector<long long>& deficit) const {
    long long need = 0;
    for (Vertex v = 0; v < c.n(); ++v) {
      if (deficit[v] <= 0) continue;
      need += deficit[v];
      bool touched = false;
      for (std::size_t j = i; j < edges.size() && !touched; ++j)
        touched = edges[j].u == v || edges[j].v == v;
      if (!touched) return false;
    }
    return need <= 2 * left;
  }

  void run(std::size_t i, long long left, Big cost,
           std::vector<long long>& deficit) {
    // Completions only add cost, so matching the incumbent is already enough
    // to stop; the first witness found at the best cost is kept.
    if (best_cost >= 0 && cost >= best_cost) return;
    if (i == edges.size()) {
      if (left != 0) return;
      for (long long d : deficit)
        if (d > 0) return;
      best_cost = cost;
      best = cur;
      return;
    }
    if (best_cost >= 0 &&
        cost + Big(c(edges[i].u, edges[i].v)) * left >= best_cost)
      return;  // edges are sorted, so the tail cannot be cheaper than this
    if (!viable(i, left, deficit)) return;
    const Edge& e = edges[i];
    int du = e.loop() ? 2 : 1;
    for (long long k = 0; k <= left; ++k) {
      if (k > 0) {
        cur.add(e.u, e.v, 1);
        deficit[e.u] -= du;
        if (!e.loop()) deficit[e.v] -= 1;
        cost += c(e.u, e.v);
      }
      run(i + 1, left - k, cost, deficit);
    }
    if (left > 0) {
      cur.add(e.u, e.v, -left);
      deficit[e.u] += du * left;
      if (!e.loop()) deficit[e.v] += left;
    }
  }
};

}  // namespace

Multigraph lb_fixed_size_multigraph(const CostMatrix& c,
                                    const std::vector<Big>& deg_lb,
                                    const Big& N) {
  int n = c.n();
  assert(static_cast<int>(deg_lb.size()) == n);
  assert(N >= 0);
  bool all_zero = true;
  for (const Big& d : deg_lb) all_zero &= d == 0;
  if (all_zero) {
    Multigraph g;
    if (N == 0) return g;
    Edge cheapest(0, 0);
    Cost bc = c(0, 0);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u; v < n; ++v)
        if (c(u, v) < bc || (c(u, v) == bc && Edge(u, v) < cheapest)) {
          bc = c(u, v);
          cheapest = Edge(u, v);
        }
    g.add(cheapest.u, cheapest.v, N);
    return g;
  }

  // Exhaustive branch: only meant for the small residual subproblems this
  // code base feeds it.
  assert(n <= 8 && N <= 64);
  long long nn = N.convert_to<long long>();
  std::vector<long long> lb(n);
  for (int v = 0; v < n; ++v) {
    assert(deg_lb[v] <= 2 * N);
    lb[v] = deg_lb[v].convert_to<long long>();
  }
  FixedSizeSearch search(c, lb, nn);
  std::vector<long long> deficit = search.lb;
  search.run(0, nn, 0, deficit);
  assert(search.best_cost >= 0 && "N too small for the degree lower bounds");
  return search.best;
}

}  // namespace mvmtsp
