#include "mvmtsp/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "mvmtsp/runtime.hpp"

namespace mvmtsp {

namespace {

bool even_big(const Big& b) { return (b & 1) == 0; }

Big to_big(unsigned __int128 v) {
  Big hi = static_cast<std::uint64_t>(v >> 64);
  return (hi << 64) + static_cast<std::uint64_t>(v);
}

// Dense small multigraph with int multiplicities; the oracle never needs
// more than 2 * max request copies of an edge.
struct Mg {
  int n = 0;
  std::vector<int> a;

  explicit Mg(int nn) : n(nn), a(static_cast<size_t>(nn) * (nn + 1) / 2, 0) {}

  int& at(int u, int v) {
    if (u > v) std::swap(u, v);
    return a[static_cast<size_t>(u) * n - static_cast<size_t>(u) * (u - 1) / 2 +
             (v - u)];
  }
  int at(int u, int v) const { return const_cast<Mg*>(this)->at(u, v); }

  int deg(int v) const {
    int d = 2 * at(v, v);
    for (int u = 0; u < n; ++u)
      if (u != v) d += at(u, v);
    return d;
  }
  bool empty() const {
    for (int m : a)
      if (m) return false;
    return true;
  }
};

using Cyc = std::vector<std::pair<int, int>>;  // edge list, repeats allowed

void apply(Mg& g, const Cyc& cyc, int delta) {
  for (const auto& [u, v] : cyc) g.at(u, v) += delta;
}

std::vector<std::vector<int>> comps_of(const Mg& g) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(g.n, 0);
  for (int s = 0; s < g.n; ++s) {
    if (seen[s] || g.deg(s) == 0) continue;
    std::vector<int> comp, stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int u = 0; u < g.n; ++u)
        if (!seen[u] && u != v && g.at(u, v) > 0) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

Multigraph to_multigraph(const Mg& g) {
  Multigraph out;
  for (int u = 0; u < g.n; ++u)
    for (int v = u; v < g.n; ++v)
      if (g.at(u, v) > 0) out.add(u, v, g.at(u, v));
  return out;
}

Mg restrict_to(const Mg& g, const std::vector<int>& verts) {
  std::vector<char> in(g.n, 0);
  for (int v : verts) in[v] = 1;
  Mg out(g.n);
  for (int u = 0; u < g.n; ++u)
    for (int v = u; v < g.n; ++v)
      if (in[u] && in[v]) out.at(u, v) = g.at(u, v);
  return out;
}

// All simple cycles through pivot p: a self-loop, a doubled edge, or a
// vertex-simple cycle of length >= 3 (emitted once by orienting the first
// neighbor below the last).
void cycles_through(const Mg& g, int p, std::vector<Cyc>& out) {
  if (g.at(p, p) >= 1) out.push_back({{p, p}});
  for (int u = 0; u < g.n; ++u)
    if (u != p && g.at(p, u) >= 2) out.push_back({{p, u}, {p, u}});
  std::vector<int> path;
  std::vector<char> vis(g.n, 0);
  vis[p] = 1;
  std::function<void(int)> dfs = [&](int w) {
    for (int z = 0; z < g.n; ++z) {
      if (z == w || g.at(w, z) < 1) continue;
      if (z == p) {
        if (path.size() >= 2 && path.front() < path.back()) {
          Cyc cyc{{p, path[0]}};
          for (size_t i = 0; i + 1 < path.size(); ++i)
            cyc.push_back({path[i], path[i + 1]});
          cyc.push_back({path.back(), p});
          out.push_back(std::move(cyc));
        }
        continue;
      }
      if (vis[z]) continue;
      vis[z] = 1;
      path.push_back(z);
      dfs(z);
      path.pop_back();
      vis[z] = 0;
    }
  };
  dfs(p);
}

// Whether `need` pairwise edge-disjoint simple cycles exist in the even
// multigraph g. In a full cycle decomposition every vertex of positive
// degree lies on a cycle, so pivoting on the lowest such vertex is complete.
// On success the removed cycles are appended to rec (g is restored).
bool can_split(Mg& g, int need, std::vector<Cyc>* rec) {
  if (need <= 0) return true;
  int p = -1;
  for (int v = 0; v < g.n && p < 0; ++v)
    if (g.deg(v) > 0) p = v;
  if (p < 0) return false;
  std::vector<Cyc> cand;
  cycles_through(g, p, cand);
  for (const Cyc& cyc : cand) {
    apply(g, cyc, -1);
    if (rec) rec->push_back(cyc);
    bool ok = can_split(g, need - 1, rec);
    apply(g, cyc, +1);
    if (ok) return true;
    if (rec) rec->pop_back();
  }
  return false;
}

// Largest p <= cap such that the component splits into p closed tours.
int split_cap(const Mg& comp, int cap) {
  Mg g = comp;
  int p = 0;
  while (p < cap && can_split(g, p + 1, nullptr)) ++p;
  return p;
}

Multigraph cycle_graph(const Cyc& cyc) {
  Multigraph out;
  for (const auto& [u, v] : cyc) out.add(u, v, 1);
  return out;
}

bool shares_vertex(const Multigraph& g, const std::vector<int>& verts) {
  std::set<Vertex> sup;
  for (Vertex v : g.support()) sup.insert(v);
  for (int v : verts)
    if (sup.count(v)) return true;
  return false;
}

void absorb(Multigraph& into, const Multigraph& piece) {
  for (const auto& [e, k] : piece.x) into.add(e.u, e.v, k);
}

// Split one connected even component into exactly p tours: peel p-1 cycles,
// keep the (non-empty) remainder as the p-th part, and attach each remainder
// component to a peeled cycle it shares a vertex with. One remainder
// component seeds the p-th part instead.
std::vector<Multigraph> realize_parts(const Mg& comp, int p) {
  if (p == 1) return {to_multigraph(comp)};
  Mg g = comp;
  std::vector<Cyc> rec;
  bool ok = can_split(g, p, &rec);
  assert(ok && static_cast<int>(rec.size()) == p);
  (void)ok;
  Mg rem = comp;
  for (int j = 0; j + 1 < p; ++j) apply(rem, rec[j], -1);
  std::vector<Multigraph> parts;
  std::vector<std::vector<int>> part_verts;
  for (int j = 0; j + 1 < p; ++j) {
    parts.push_back(cycle_graph(rec[j]));
    std::vector<int> vs;
    for (Vertex v : parts.back().support()) vs.push_back(v);
    part_verts.push_back(vs);
  }
  auto rem_comps = comps_of(rem);
  assert(!rem_comps.empty());
  parts.push_back(to_multigraph(restrict_to(rem, rem_comps[0])));
  for (size_t q = 1; q < rem_comps.size(); ++q) {
    Multigraph piece = to_multigraph(restrict_to(rem, rem_comps[q]));
    bool attached = false;
    for (size_t j = 0; j + 1 < static_cast<size_t>(p) && !attached; ++j) {
      if (shares_vertex(piece, part_verts[j])) {
        absorb(parts[j], piece);
        attached = true;
      }
    }
    // Remainder components are pairwise disjoint, so connectivity of the
    // original component forces each one onto some peeled cycle.
    assert(attached);
  }
  return parts;
}

// Partition an even multigraph (no depots) into exactly m closed tours.
std::optional<std::vector<Multigraph>> split_exact(const Mg& x, int m) {
  auto comps = comps_of(x);
  int k = static_cast<int>(comps.size());
  if (k > m || k == 0) return std::nullopt;
  std::vector<Mg> sub;
  std::vector<int> caps;
  int total = 0;
  for (const auto& comp : comps) {
    sub.push_back(restrict_to(x, comp));
    caps.push_back(split_cap(sub.back(), m));
    total += caps.back();
    if (total >= m) break;
  }
  if (total < m) return std::nullopt;
  // Assign part counts: one per component, then extras up to each cap.
  std::vector<int> share(comps.size(), 0);
  int extra = m - k;
  for (size_t i = 0; i < comps.size(); ++i) {
    int cap = i < caps.size() ? caps[i] : split_cap(restrict_to(x, comps[i]), m);
    share[i] = 1 + std::min(cap - 1, extra);
    extra -= share[i] - 1;
  }
  assert(extra == 0);
  std::vector<Multigraph> parts;
  for (size_t i = 0; i < comps.size(); ++i) {
    Mg s = i < sub.size() ? sub[i] : restrict_to(x, comps[i]);
    for (Multigraph& part : realize_parts(s, share[i])) parts.push_back(std::move(part));
  }
  return parts;
}

// Anchored split for depot variants: one simple cycle through each visited
// depot avoiding every other depot, then every leftover component must touch
// one of those cycles.
struct DepotSplit {
  Mg x;
  const std::vector<Vertex>& visited;  // depots with degree 2
  const std::vector<char>& is_depot;
  std::vector<Cyc> chosen;
  std::optional<std::vector<Multigraph>> parts;

  DepotSplit(const Mg& g, const std::vector<Vertex>& vis,
             const std::vector<char>& dep)
      : x(g), visited(vis), is_depot(dep) {}

  bool run() { return search(0); }

  bool search(size_t i) {
    if (i == visited.size()) return finish();
    int d = visited[i];
    std::vector<int> nb;
    for (int u = 0; u < x.n; ++u)
      if (u != d && x.at(d, u) > 0) nb.push_back(u);
    if (nb.size() == 1 && x.at(d, nb[0]) == 2) {
      Cyc cyc{{d, nb[0]}, {d, nb[0]}};
      return try_cycle(i, cyc);
    }
    if (nb.size() == 2 && x.at(d, nb[0]) == 1 && x.at(d, nb[1]) == 1) {
      int a = nb[0], b = nb[1];
      // Simple city paths a -> b close the cycle through d.
      std::vector<int> path{a};
      std::vector<char> vis(x.n, 0);
      vis[a] = 1;
      bool found = false;
      std::function<void(int)> dfs = [&](int w) {
        if (found) return;
        for (int z = 0; z < x.n && !found; ++z) {
          if (z == w || is_depot[z] || vis[z] || x.at(w, z) < 1) continue;
          if (z == b) {
            Cyc cyc{{d, a}};
            for (size_t t = 0; t + 1 < path.size(); ++t)
              cyc.push_back({path[t], path[t + 1]});
            cyc.push_back({path.back(), b});
            cyc.push_back({b, d});
            if (try_cycle(i, cyc)) found = true;
            continue;
          }
          vis[z] = 1;
          path.push_back(z);
          dfs(z);
          path.pop_back();
          vis[z] = 0;
        }
      };
      dfs(a);
      return found;
    }
    return false;  // malformed depot neighborhood
  }

  bool try_cycle(size_t i, const Cyc& cyc) {
    apply(x, cyc, -1);
    chosen.push_back(cyc);
    bool ok = search(i + 1);
    if (!ok) {
      chosen.pop_back();
      apply(x, cyc, +1);
    }
    return ok;
  }

  bool finish() {
    std::vector<Multigraph> out;
    std::vector<std::vector<int>> anchor_verts;
    for (const Cyc& cyc : chosen) {
      out.push_back(cycle_graph(cyc));
      std::vector<int> vs;
      for (Vertex v : out.back().support()) vs.push_back(v);
      anchor_verts.push_back(vs);
    }
    for (const auto& comp : comps_of(x)) {
      Multigraph piece = to_multigraph(restrict_to(x, comp));
      bool attached = false;
      for (size_t j = 0; j < out.size() && !attached; ++j) {
        if (shares_vertex(piece, anchor_verts[j])) {
          absorb(out[j], piece);
          attached = true;
        }
      }
      if (!attached) return false;  // stranded edges serve no agent
    }
    parts = std::move(out);
    return true;
  }
};

struct BranchBest {
  unsigned __int128 cost = 0;
  std::vector<Multigraph> tours;  // m slots
};

// One outer branch: fixed dotted-degree targets (cities 2r, depots 0 or 2).
struct BranchSearch {
  const Instance& inst;
  Variant var;
  std::vector<int> target;
  std::vector<Vertex> visited_depots;
  std::vector<char> depot_flag;
  int n;

  std::vector<int> rem;
  Mg cur;
  unsigned __int128 cost = 0;
  std::vector<long long> perdeg2;
  struct Slot {
    int u;  // partner (== v for the loop)
  };
  std::vector<std::vector<Slot>> slots;
  std::optional<BranchBest> best;
  unsigned __int128 best4 = 0;
  bool have_best = false;

  BranchSearch(const Instance& ii, Variant vv, std::vector<int> tgt,
               std::vector<Vertex> vis)
      : inst(ii),
        var(vv),
        target(std::move(tgt)),
        visited_depots(std::move(vis)),
        n(ii.n()),
        cur(ii.n()) {
    depot_flag.assign(n, 0);
    for (Vertex d : inst.depots) depot_flag[d] = 1;
  }

  bool edge_allowed(int u, int v) const {
    if (u == v) return !depot_flag[u];
    return !(depot_flag[u] && depot_flag[v]);
  }

  std::optional<BranchBest> run() {
    rem = target;
    perdeg2.assign(n, 0);
    slots.assign(n, {});
    for (int v = 0; v < n; ++v) {
      if (target[v] == 0) continue;
      long long pd = -1;
      if (edge_allowed(v, v)) pd = inst.c(v, v);
      for (int u = 0; u < n; ++u) {
        if (u == v || target[u] == 0 || !edge_allowed(u, v)) continue;
        long long cand = 2 * static_cast<long long>(inst.c(u, v));
        if (pd < 0 || cand < pd) pd = cand;
      }
      if (pd < 0) return std::nullopt;  // isolated demand, branch dead
      perdeg2[v] = pd;
      std::vector<std::pair<long long, Slot>> row;
      if (edge_allowed(v, v)) row.push_back({inst.c(v, v), {v}});
      for (int u = v + 1; u < n; ++u)
        if (target[u] > 0 && edge_allowed(u, v))
          row.push_back({2 * static_cast<long long>(inst.c(u, v)), {u}});
      std::stable_sort(row.begin(), row.end(),
                       [](const auto& a, const auto& b) { return a.first < b.first; });
      for (const auto& [w, s] : row) slots[v].push_back(s);
    }
    next_row(0);
    return best;
  }

  bool pruned() const {
    if (!have_best) return false;
    unsigned __int128 bound = 4 * cost;
    for (int v = 0; v < n; ++v)
      bound += static_cast<unsigned __int128>(rem[v]) * perdeg2[v];
    return bound >= best4;
  }

  void next_row(int v) {
    while (v < n && rem[v] == 0) ++v;
    if (v == n) {
      leaf();
      return;
    }
    fill(v, 0);
  }

  void fill(int v, size_t si) {
    if (pruned()) return;
    if (rem[v] == 0) {
      next_row(v + 1);
      return;
    }
    if (si == slots[v].size()) return;
    int u = slots[v][si].u;
    int maxk = u == v ? rem[v] / 2 : std::min(rem[v], rem[u]);
    long long w = inst.c(v, u);
    for (int k = maxk; k >= 0; --k) {
      rem[v] -= (u == v ? 2 : 1) * k;
      if (u != v) rem[u] -= k;
      cur.at(v, u) += k;
      cost += static_cast<unsigned __int128>(k) * w;
      fill(v, si + 1);
      cost -= static_cast<unsigned __int128>(k) * w;
      cur.at(v, u) -= k;
      if (u != v) rem[u] += k;
      rem[v] += (u == v ? 2 : 1) * k;
    }
  }

  void leaf() {
    if (have_best && 4 * cost >= best4) return;
    std::optional<std::vector<Multigraph>> parts = decompose();
    if (!parts) return;
    BranchBest b;
    b.cost = cost;
    b.tours = assemble(std::move(*parts));
    best = std::move(b);
    best4 = 4 * cost;
    have_best = true;
  }

  std::optional<std::vector<Multigraph>> decompose() {
    int m = inst.m;
    auto comps = comps_of(cur);
    switch (var) {
      case Variant::P3:
      case Variant::P4: {
        if (static_cast<int>(comps.size()) > m) return std::nullopt;
        std::vector<Multigraph> parts;
        for (const auto& comp : comps)
          parts.push_back(to_multigraph(restrict_to(cur, comp)));
        return parts;
      }
      case Variant::P2: {
        if (static_cast<int>(comps.size()) != m) return std::nullopt;
        std::vector<Multigraph> parts;
        for (const auto& comp : comps)
          parts.push_back(to_multigraph(restrict_to(cur, comp)));
        return parts;
      }
      case Variant::P1:
        return split_exact(cur, m);
      case Variant::P6:
      case Variant::P8: {
        if (var == Variant::P6 && static_cast<int>(comps.size()) != m)
          return std::nullopt;
        // Every component needs exactly one depot and at least one city.
        std::vector<Multigraph> parts(inst.depots.size());
        for (const auto& comp : comps) {
          int dep = -1, cities = 0;
          for (int v : comp) {
            if (depot_flag[v]) {
              if (dep >= 0) return std::nullopt;
              dep = v;
            } else {
              ++cities;
            }
          }
          if (dep < 0 || cities == 0) return std::nullopt;
          size_t j = std::lower_bound(inst.depots.begin(), inst.depots.end(),
                                      dep) -
                     inst.depots.begin();
          parts[j] = to_multigraph(restrict_to(cur, comp));
        }
        return parts;
      }
      case Variant::P5:
      case Variant::P7: {
        // Quick necessary condition before the anchored search.
        for (const auto& comp : comps) {
          bool has_visited = false;
          for (int v : comp)
            if (depot_flag[v]) has_visited = true;
          if (!has_visited) return std::nullopt;
        }
        DepotSplit ds(cur, visited_depots, depot_flag);
        if (!ds.run()) return std::nullopt;
        std::vector<Multigraph> parts(inst.depots.size());
        for (size_t i = 0; i < visited_depots.size(); ++i) {
          size_t j = std::lower_bound(inst.depots.begin(), inst.depots.end(),
                                      visited_depots[i]) -
                     inst.depots.begin();
          parts[j] = std::move((*ds.parts)[i]);
        }
        return parts;
      }
    }
    return std::nullopt;
  }

  std::vector<Multigraph> assemble(std::vector<Multigraph> parts) {
    std::vector<Multigraph> tours(inst.m);
    size_t slot = 0;
    if (variant_has_depots(var)) {
      // parts are already depot-aligned (one slot per depot).
      assert(static_cast<int>(parts.size()) == inst.m);
      return parts;
    }
    for (Multigraph& p : parts) {
      assert(slot < tours.size());
      tours[slot++] = std::move(p);
    }
    return tours;
  }
};

}  // namespace

std::vector<std::string> verify_solution(const Instance& inst, Variant var,
                                         const Solution& sol) {
  std::vector<std::string> bad;
  const int n = inst.n();
  const bool depots = variant_has_depots(var);
  if (depots && inst.depots.empty())
    bad.push_back("variant requires depots but the instance has none");
  if (!depots && !inst.depots.empty())
    bad.push_back("variant takes no depots but the instance has depots");
  if (static_cast<int>(sol.tours.size()) > inst.m)
    bad.push_back("more agent tours than agents");
  if (!variant_allows_empty(var) &&
      static_cast<int>(sol.tours.size()) != inst.m)
    bad.push_back("expected exactly m agent tours");

  std::set<Vertex> used_depots;
  std::vector<std::vector<Vertex>> supports(sol.tours.size());
  for (size_t i = 0; i < sol.tours.size(); ++i) {
    const Multigraph& t = sol.tours[i];
    const std::string tag = "tour " + std::to_string(i) + ": ";
    if (t.empty()) {
      if (!variant_allows_empty(var)) bad.push_back(tag + "empty tour");
      continue;
    }
    bool well_formed = true;
    for (const auto& [e, k] : t.x) {
      if (k <= 0) {
        bad.push_back(tag + "nonpositive edge multiplicity");
        well_formed = false;
      }
      if (e.u < 0 || e.v >= n) {
        bad.push_back(tag + "edge endpoint out of range");
        well_formed = false;
      }
    }
    if (!well_formed) continue;
    supports[i] = t.support();
    for (Vertex v : supports[i])
      if (!even_big(t.dotted_degree(v)))
        bad.push_back(tag + "odd degree at vertex " + std::to_string(v));
    if (!is_connected(t)) bad.push_back(tag + "support is not connected");
    if (depots) {
      std::vector<Vertex> tour_depots;
      int cities = 0;
      for (Vertex v : supports[i]) {
        if (inst.is_depot(v))
          tour_depots.push_back(v);
        else
          ++cities;
      }
      if (tour_depots.size() != 1) {
        bad.push_back(tag + "must visit exactly one depot");
      } else {
        Vertex d = tour_depots[0];
        if (t.dotted_degree(d) != 2)
          bad.push_back(tag + "depot " + std::to_string(d) +
                        " visited more than once");
        if (!used_depots.insert(d).second)
          bad.push_back(tag + "depot " + std::to_string(d) +
                        " already serves another tour");
      }
      if (cities == 0) bad.push_back(tag + "visits no city");
    }
  }

  if (depots && !variant_allows_empty(var))
    for (Vertex d : inst.depots)
      if (!used_depots.count(d))
        bad.push_back("depot " + std::to_string(d) + " has no tour");

  if (variant_disjoint(var)) {
    std::vector<char> owner(n, 0);
    for (size_t i = 0; i < sol.tours.size(); ++i)
      for (Vertex v : supports[i]) {
        if (owner[v])
          bad.push_back("vertex " + std::to_string(v) +
                        " appears in two tours");
        owner[v] = 1;
      }
  }

  Multigraph agg = sol.aggregate();
  for (Vertex v = 0; v < n; ++v) {
    if (inst.is_depot(v)) continue;
    Big want = 2 * inst.r[v];
    if (agg.dotted_degree(v) != want)
      bad.push_back("city " + std::to_string(v) + " has aggregate degree " +
                    agg.dotted_degree(v).str() + ", expected " + want.str());
  }
  return bad;
}

bool oracle_in_scale(const Instance& inst) {
  if (inst.n() > 8 || inst.m > 4) return false;
  for (const Big& req : inst.r)
    if (req > 4) return false;
  return true;
}

std::optional<OracleResult> exact_opt(const Instance& inst, Variant var) {
  if (!oracle_in_scale(inst))
    throw std::invalid_argument("exact_opt: instance beyond desk scale");
  assert(validate_instance(inst).empty());
  const bool depots = variant_has_depots(var);
  if (depots && inst.depots.empty())
    throw std::invalid_argument("exact_opt: variant requires depots");
  if (!depots && !inst.depots.empty())
    throw std::invalid_argument("exact_opt: variant takes no depots");

  const int n = inst.n();
  std::vector<int> base(n, 0);
  for (Vertex v = 0; v < n; ++v)
    if (!inst.is_depot(v)) base[v] = 2 * static_cast<int>(inst.r[v]);

  // Outer branches fix each depot's visit count (restricting every depot to
  // at most one visit never raises the optimum: metric shortcuts remove
  // repeat visits). Non-empty variants pin every depot to one visit; the
  // empty-allowed ones branch over the visited subset.
  struct Branch {
    std::vector<int> target;
    std::vector<Vertex> visited;
  };
  std::vector<Branch> branches;
  if (!depots) {
    branches.push_back({base, {}});
  } else if (!variant_allows_empty(var)) {
    Branch b{base, inst.depots};
    for (Vertex d : inst.depots) b.target[d] = 2;
    branches.push_back(std::move(b));
  } else {
    int k = static_cast<int>(inst.depots.size());
    for (int mask = 0; mask < (1 << k); ++mask) {
      Branch b{base, {}};
      for (int j = 0; j < k; ++j)
        if (mask & (1 << j)) {
          b.target[inst.depots[j]] = 2;
          b.visited.push_back(inst.depots[j]);
        }
      branches.push_back(std::move(b));
    }
  }

  std::vector<std::optional<BranchBest>> results(branches.size());
  auto run_branch = [&](size_t i) {
    BranchSearch bs(inst, var, branches[i].target, branches[i].visited);
    results[i] = bs.run();
  };
  int threads = std::min<int>(thread_cap(), static_cast<int>(branches.size()));
  if (threads <= 1 || branches.size() <= 1) {
    for (size_t i = 0; i < branches.size(); ++i) run_branch(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (size_t i; (i = next.fetch_add(1)) < branches.size();)
          run_branch(i);
      });
    for (std::thread& t : pool) t.join();
  }

  int pick = -1;
  for (size_t i = 0; i < results.size(); ++i) {
    if (!results[i]) continue;
    if (pick < 0 || results[i]->cost < results[pick]->cost)
      pick = static_cast<int>(i);
  }
  if (pick < 0) return std::nullopt;

  OracleResult out;
  out.cost = to_big(results[pick]->cost);
  out.solution.tours = std::move(results[pick]->tours);
  assert(verify_solution(inst, var, out.solution).empty());
  assert(out.solution.cost(inst.c) == out.cost);
  return out;
}

}  // namespace mvmtsp
