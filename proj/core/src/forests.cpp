#include "mvmtsp/forests.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <limits>
#include <queue>
#include <tuple>

namespace mvmtsp {
namespace {

// Candidate edge of the ground set.
struct Ground {
  Vertex u, v;  // u < v
  Cost w;
};

// Weighted matroid intersection specialised to the depot-forest pair:
//   M1: graphic matroid of the graph with all depots identified
//   M2: union of the one-edge-per-depot-star partition matroid with a
//       uniform matroid of rank (#cities - #depots); X is independent iff
//       |X| - (#depot stars hit by X) <= #cities - #depots.
// Common bases are exactly the depot forests. Augments by shortest paths in
// the exchange graph, lexicographically by (weight, arc count, node index),
// which keeps the current set extreme and the result deterministic.
class DepotForestSolver {
 public:
  DepotForestSolver(const CostMatrix& c, std::vector<Vertex> verts,
                    std::vector<Vertex> depots)
      : verts_(std::move(verts)), depots_(std::move(depots)) {
    n_ = static_cast<int>(verts_.size());
    nd_ = static_cast<int>(depots_.size());
    k_ = n_ - nd_;  // cities, also the common base size
    // Contracted node ids: 0 for every depot, 1.. for cities.
    cnode_.assign(*std::max_element(verts_.begin(), verts_.end()) + 1, -1);
    int next = 1;
    for (Vertex v : verts_) cnode_[v] = is_depot(v) ? 0 : next++;
    star_of_depot_.assign(cnode_.size(), -1);
    for (int i = 0; i < nd_; ++i) star_of_depot_[depots_[i]] = i;
    for (int a = 0; a < n_; ++a)
      for (int b = a + 1; b < n_; ++b) {
        Vertex u = verts_[a], v = verts_[b];
        if (is_depot(u) && is_depot(v)) continue;  // never joins two depots
        ground_.push_back({u, v, c(u, v)});
      }
    std::sort(ground_.begin(), ground_.end(), [](const Ground& a, const Ground& b) {
      return std::tie(a.w, a.u, a.v) < std::tie(b.w, b.u, b.v);
    });
    in_set_.assign(ground_.size(), false);
    star_count_.assign(nd_, 0);
  }

  // Runs the augmentations; returns the selected edges or nullopt.
  std::optional<std::vector<Ground>> solve() {
    if (k_ < nd_ || nd_ == 0) return std::nullopt;
    for (int round = 0; round < k_; ++round)
      if (!augment()) return std::nullopt;
    std::vector<Ground> picked;
    for (size_t e = 0; e < ground_.size(); ++e)
      if (in_set_[e]) picked.push_back(ground_[e]);
    return picked;
  }

 private:
  bool is_depot(Vertex v) const {
    return std::binary_search(depots_.begin(), depots_.end(), v);
  }

  // Index of the depot whose star contains the edge, or -1 for city-city.
  int star(const Ground& g) const {
    if (star_of_depot_[g.u] >= 0) return star_of_depot_[g.u];
    if (star_of_depot_[g.v] >= 0) return star_of_depot_[g.v];
    return -1;
  }

  int stars_hit() const {
    int h = 0;
    for (int c : star_count_) h += c > 0;
    return h;
  }

  // I - x + y independent in M2; x == kNone tests I + y.
  bool m2_exchange_ok(size_t x, size_t y, int size_i) const {
    int sx = x == kNone ? -1 : star(ground_[x]);
    int sy = star(ground_[y]);
    int h = stars_hit();
    if (sx != sy) {  // else the star counters cancel out
      if (sx >= 0 && star_count_[sx] == 1) --h;
      if (sy >= 0 && star_count_[sy] == 0) ++h;
    }
    int size = x == kNone ? size_i + 1 : size_i;
    return size - h <= k_ - nd_;
  }

  // Circuit of I + y in the contracted graphic matroid: the edges of the
  // I-path between y's endpoints, or empty when I + y stays a forest.
  std::vector<size_t> m1_circuit(size_t y) const {
    int s = cnode_[ground_[y].u], t = cnode_[ground_[y].v];
    assert(s != t);  // depot-depot edges are not in the ground set
    int nodes = k_ + 1;
    std::vector<std::vector<std::pair<int, size_t>>> adj(nodes);
    for (size_t e = 0; e < ground_.size(); ++e)
      if (in_set_[e]) {
        int a = cnode_[ground_[e].u], b = cnode_[ground_[e].v];
        adj[a].push_back({b, e});
        adj[b].push_back({a, e});
      }
    std::vector<size_t> via(nodes, kNone);
    std::vector<int> from(nodes, -1);
    std::queue<int> q;
    q.push(s);
    from[s] = s;
    while (!q.empty()) {
      int a = q.front();
      q.pop();
      if (a == t) break;
      for (auto [b, e] : adj[a])
        if (from[b] < 0) {
          from[b] = a;
          via[b] = e;
          q.push(b);
        }
    }
    std::vector<size_t> cyc;
    if (from[t] < 0) return cyc;  // independent
    for (int a = t; a != s; a = from[a]) cyc.push_back(via[a]);
    return cyc;
  }

  bool augment() {
    const size_t ne = ground_.size();
    int size_i = 0;
    for (size_t e = 0; e < ne; ++e) size_i += in_set_[e];

    // Exchange arcs. arcs_m1[y] lists x with I - x + y in M1 (all of I when
    // I + y is independent, in which case y is a source).
    std::vector<std::vector<size_t>> arc_from(ne);  // arcs a -> b as from[b]
    std::vector<char> source(ne, false), sink(ne, false);
    std::vector<size_t> members;
    for (size_t e = 0; e < ne; ++e)
      if (in_set_[e]) members.push_back(e);
    for (size_t y = 0; y < ne; ++y) {
      if (in_set_[y]) continue;
      auto cyc = m1_circuit(y);
      if (cyc.empty()) {
        source[y] = true;
        for (size_t x : members) arc_from[y].push_back(x);
      } else {
        for (size_t x : cyc) arc_from[y].push_back(x);
      }
      sink[y] = m2_exchange_ok(kNone, y, size_i);
      for (size_t x : members)
        if (m2_exchange_ok(x, y, size_i)) arc_from[x].push_back(y);
    }

    // Bellman-Ford on node weights, lexicographic (weight, arcs).
    const long long inf = std::numeric_limits<long long>::max();
    std::vector<long long> dist(ne, inf);
    std::vector<int> len(ne, 0), par(ne, -1);
    auto weight = [&](size_t e) -> long long {
      return in_set_[e] ? -static_cast<long long>(ground_[e].w)
                        : static_cast<long long>(ground_[e].w);
    };
    for (size_t y = 0; y < ne; ++y)
      if (source[y] && !in_set_[y]) {
        dist[y] = weight(y);
        len[y] = 1;
        par[y] = -2;
      }
    bool changed = true;
    int rounds = 0;
    while (changed) {
      changed = false;
      ++rounds;
      assert(rounds <= static_cast<int>(ne) + 1);
      for (size_t b = 0; b < ne; ++b)
        for (size_t a : arc_from[b]) {
          if (dist[a] == inf) continue;
          long long d2 = dist[a] + weight(b);
          int l2 = len[a] + 1;
          if (d2 < dist[b] || (d2 == dist[b] && l2 < len[b])) {
            dist[b] = d2;
            len[b] = l2;
            par[b] = static_cast<int>(a);
            changed = true;
          }
        }
    }

    size_t best = kNone;
    for (size_t y = 0; y < ne; ++y) {
      if (!sink[y] || dist[y] == inf) continue;
      if (best == kNone || dist[y] < dist[best] ||
          (dist[y] == dist[best] && len[y] < len[best]))
        best = y;
    }
    if (best == kNone) return false;
    for (int e = static_cast<int>(best); e != -2; e = par[e]) {
      assert(e >= 0);
      in_set_[e] = !in_set_[e];
    }
    // Refresh the star counters from scratch; sizes are small.
    std::fill(star_count_.begin(), star_count_.end(), 0);
    for (size_t e = 0; e < ne; ++e)
      if (in_set_[e]) {
        int s = star(ground_[e]);
        if (s >= 0) ++star_count_[s];
      }
    return true;
  }

  static constexpr size_t kNone = static_cast<size_t>(-1);

  std::vector<Vertex> verts_, depots_;
  std::vector<Ground> ground_;
  std::vector<char> in_set_;
  std::vector<int> cnode_;          // vertex -> contracted node (depots -> 0)
  std::vector<int> star_of_depot_;  // vertex -> depot index or -1
  std::vector<int> star_count_;     // edges of I per depot star
  int n_ = 0, nd_ = 0, k_ = 0;
};

}  // namespace

std::optional<DepotForest> cerdeira_forest(const CostMatrix& c,
                                           const std::vector<Vertex>& verts,
                                           const std::vector<Vertex>& depots) {
  std::vector<Vertex> vs = verts, ds = depots;
  std::sort(vs.begin(), vs.end());
  std::sort(ds.begin(), ds.end());
  assert(!ds.empty());
  if (static_cast<int>(vs.size() - ds.size()) < static_cast<int>(ds.size()))
    return std::nullopt;

  DepotForestSolver solver(c, vs, ds);
  auto picked = solver.solve();
  if (!picked) return std::nullopt;

  DepotForest out;
  out.depots = ds;
  std::map<Vertex, Vertex> up;
  for (Vertex v : vs) up[v] = v;
  std::function<Vertex(Vertex)> find = [&](Vertex v) {
    while (up[v] != v) v = up[v] = up[up[v]];
    return v;
  };
  for (const Ground& g : *picked) {
    out.forest.add(g.u, g.v, 1);
    out.cost += g.w;
    Vertex a = find(g.u), b = find(g.v);
    assert(a != b);
    up[a] = b;
  }
  out.comps.assign(ds.size(), {});
  std::map<Vertex, int> root_comp;
  for (size_t i = 0; i < ds.size(); ++i) {
    Vertex root = find(ds[i]);
    assert(!root_comp.count(root));  // one depot per tree
    root_comp[root] = static_cast<int>(i);
  }
  for (Vertex v : vs) {
    auto it = root_comp.find(find(v));
    assert(it != root_comp.end());  // every vertex reaches a depot
    out.comps[it->second].push_back(v);
  }
  for (auto& comp : out.comps) {
    std::sort(comp.begin(), comp.end());
    assert(comp.size() >= 2);  // depot plus at least one city
  }
  return out;
}

AuxiliaryGraph build_auxiliary_graph(const Instance& inst) {
  const int nd = static_cast<int>(inst.depots.size());
  assert(nd >= 1);
  AuxiliaryGraph aux;
  for (Vertex d : inst.depots) aux.original.push_back(d);
  for (Vertex v : inst.cities()) {
    Big copies = inst.r[v] < nd ? inst.r[v] : Big(nd);
    for (Big i = 0; i < copies; ++i) aux.original.push_back(v);
  }
  const int an = static_cast<int>(aux.original.size());
  aux.depots.resize(nd);
  for (int i = 0; i < nd; ++i) aux.depots[i] = i;
  aux.cost = CostMatrix(an);
  for (int i = 0; i < an; ++i)
    for (int j = i; j < an; ++j) {
      Vertex a = aux.original[i], b = aux.original[j];
      Cost w = (i != j && a == b) ? 0 : inst.c(a, b);
      aux.cost.at(i, j) = w;
    }
  return aux;
}

std::optional<ConstrainedForest> constrained_spanning_multigraph(
    const Instance& inst) {
  assert(!inst.depots.empty());
  AuxiliaryGraph aux = build_auxiliary_graph(inst);
  std::vector<Vertex> all(aux.n());
  for (int i = 0; i < aux.n(); ++i) all[i] = i;
  auto forest = cerdeira_forest(aux.cost, all, aux.depots);
  if (!forest) return std::nullopt;

  ConstrainedForest out;
  for (size_t i = 0; i < forest->comps.size(); ++i)
    out.depots.push_back(aux.original[forest->depots[i]]);
  out.cost = forest->cost;
  out.comp_vertices.resize(forest->comps.size());
  out.comp_graphs.resize(forest->comps.size());

  std::map<Vertex, int> comp_of;
  for (size_t i = 0; i < forest->comps.size(); ++i) {
    std::vector<Vertex>& vs = out.comp_vertices[i];
    for (Vertex a : forest->comps[i]) {
      vs.push_back(aux.original[a]);
      comp_of[a] = static_cast<int>(i);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  }
  for (const auto& [e, mult] : forest->forest.x) {
    Vertex a = aux.original[e.u], b = aux.original[e.v];
    if (a == b) continue;  // identifying copies collapses zero-cost edges
    out.identified.add(a, b, mult);
    out.comp_graphs[comp_of.at(e.u)].add(a, b, mult);
  }

  // Structural guarantees of the identified forest.
  for (size_t i = 0; i < out.comp_vertices.size(); ++i) {
    int depot_count = 0;
    for (Vertex v : out.comp_vertices[i]) depot_count += inst.is_depot(v);
    assert(depot_count == 1);
    assert(out.comp_vertices[i].size() >= 2);
  }
  for (Vertex v : inst.cities()) {
    Big appearances = 0;
    for (const auto& vs : out.comp_vertices)
      appearances += std::binary_search(vs.begin(), vs.end(), v) ? 1 : 0;
    assert(appearances >= 1 && appearances <= inst.r[v]);
    (void)appearances;
  }
  return out;
}

}  // namespace mvmtsp
