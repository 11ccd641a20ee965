#include "mvmtsp/graphkit.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <tuple>

namespace mvmtsp {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  bool unite(int a, int b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

}  // namespace

Multigraph spanning_forest(const CostMatrix& c, const std::vector<Vertex>& verts,
                           int k) {
  assert(k >= 1 && k <= static_cast<int>(verts.size()));
  std::vector<std::tuple<Cost, Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      Vertex u = std::min(verts[i], verts[j]), v = std::max(verts[i], verts[j]);
      edges.emplace_back(c(u, v), u, v);
    }
  std::sort(edges.begin(), edges.end());

  std::map<Vertex, int> id;
  for (Vertex v : verts) id.emplace(v, static_cast<int>(id.size()));
  UnionFind uf(static_cast<int>(verts.size()));
  Multigraph f;
  int comps = static_cast<int>(verts.size());
  for (const auto& [w, u, v] : edges) {
    if (comps == k) break;
    if (uf.unite(id.at(u), id.at(v))) {
      f.add(u, v, 1);
      --comps;
    }
  }
  assert(comps == k);
  return f;
}

Multigraph double_and_shortcut(const Multigraph& g, const CostMatrix& c) {
  std::vector<Vertex> sup = g.support();
  assert(!sup.empty());
  assert(is_connected(g));
  Multigraph out;
  if (sup.size() == 1) {
    out.add(sup[0], sup[0], 1);
    return out;
  }
  if (sup.size() == 2) {
    out.add(sup[0], sup[1], 2);
    return out;
  }

  // Cheapest spanning tree using only connections present in g.
  std::vector<std::tuple<Cost, Vertex, Vertex>> edges;
  for (const auto& [e, k] : g.x)
    if (!e.loop()) edges.emplace_back(c(e.u, e.v), e.u, e.v);
  std::sort(edges.begin(), edges.end());
  std::map<Vertex, int> id;
  for (Vertex v : sup) id.emplace(v, static_cast<int>(id.size()));
  UnionFind uf(static_cast<int>(sup.size()));
  std::map<Vertex, std::vector<Vertex>> tree;
  for (const auto& [w, u, v] : edges)
    if (uf.unite(id.at(u), id.at(v))) {
      tree[u].push_back(v);
      tree[v].push_back(u);
    }

  // Preorder from the smallest vertex, children in ascending order.
  std::vector<Vertex> order;
  std::vector<std::pair<Vertex, Vertex>> stack{{sup[0], -1}};
  while (!stack.empty()) {
    auto [v, parent] = stack.back();
    stack.pop_back();
    order.push_back(v);
    auto& ch = tree[v];
    std::sort(ch.begin(), ch.end(), std::greater<>());
    for (Vertex w : ch)
      if (w != parent) stack.emplace_back(w, v);
  }
  assert(order.size() == sup.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    out.add(order[i], order[(i + 1) % order.size()], 1);
  return out;
}

std::vector<CycleTerm> cycle_decompose(const Multigraph& g0) {
  std::vector<CycleTerm> out;
  Multigraph g = g0;

  for (auto it = g.x.begin(); it != g.x.end();) {
    if (it->first.loop()) {
      out.push_back({{it->first.u}, it->second});
      it = g.x.erase(it);
    } else {
      ++it;
    }
  }

  auto degree_positive = [&](Vertex v) {
    for (const auto& [e, k] : g.x)
      if (e.u == v || e.v == v) return true;
    return false;
  };

  while (!g.x.empty()) {
    Vertex s = g.x.begin()->first.u;  // smallest vertex with an edge
    std::vector<Vertex> path{s};
    std::map<Vertex, int> pos{{s, 0}};
    std::map<Edge, Big> used;
    while (true) {
      Vertex cur = path.back();
      Vertex parent = path.size() >= 2 ? path[path.size() - 2] : -1;
      // Prefer pressing on over bouncing straight back, so repeated long
      // cycles come out as one term instead of a fistful of digons.
      Vertex next = -1, back = -1;
      for (const auto& [e, k] : g.x) {
        if (e.u != cur && e.v != cur) continue;
        Vertex w = e.u == cur ? e.v : e.u;
        auto it = used.find(e);
        if (it != used.end() && it->second >= k) continue;
        if (w == parent) back = w;
        else if (next == -1 || w < next) next = w;
      }
      if (next == -1) next = back;
      assert(next != -1 && "even-degree walk must continue");
      used[Edge(cur, next)] += 1;
      auto hit = pos.find(next);
      if (hit == pos.end()) {
        pos.emplace(next, static_cast<int>(path.size()));
        path.push_back(next);
        continue;
      }
      // Cycle: path[i..end] closing back to `next`.
      int i = hit->second;
      std::vector<Vertex> cyc(path.begin() + i, path.end());
      std::map<Edge, Big> uses;
      for (std::size_t j = 0; j < cyc.size(); ++j)
        uses[Edge(cyc[j], cyc[(j + 1) % cyc.size()])] += 1;
      Big t;
      bool first = true;
      for (const auto& [e, u] : uses) {
        Big cap = g.x.at(e) / u;
        if (first || cap < t) t = cap, first = false;
      }
      assert(t >= 1);
      for (const auto& [e, u] : uses) g.add(e.u, e.v, -t * u);
      // Canonical rotation: smallest vertex first, walk direction kept.
      auto mn = std::min_element(cyc.begin(), cyc.end());
      std::rotate(cyc.begin(), mn, cyc.end());
      out.push_back({std::move(cyc), t});
      break;  // restart the walk from scratch
    }
    (void)degree_positive;
  }
  return out;
}

void merge_overlapping_tours(Solution& sol) {
  int m = static_cast<int>(sol.tours.size());
  UnionFind uf(m);
  std::map<Vertex, int> owner;
  for (int j = 0; j < m; ++j)
    for (Vertex v : sol.tours[j].support()) {
      auto [it, fresh] = owner.emplace(v, j);
      if (!fresh) uf.unite(it->second, j);
    }
  std::vector<Multigraph> merged(m);
  for (int j = 0; j < m; ++j) {
    int root = uf.find(j);
    for (const auto& [e, k] : sol.tours[j].x) merged[root].add(e.u, e.v, k);
  }
  sol.tours = std::move(merged);
}

}  // namespace mvmtsp
