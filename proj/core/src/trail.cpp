#include <algorithm>
#include <cassert>
#include <map>
#include <queue>
#include <vector>

#include "mvmtsp/graphkit.hpp"

namespace mvmtsp {

namespace {

// Compressed cyclic Euler walk. A visit node is a single occurrence of a
// vertex; a block node stands for t consecutive copies of the rotated cycle
// `rot`, so walks whose length is astronomically large stay O(n^2) nodes.
struct WalkNode {
  Vertex v = -1;
  std::vector<Vertex> rot;
  Big t = 0;
  int prev = -1;
  int next = -1;
  bool dead = false;
  bool is_block() const { return !rot.empty(); }
};

struct Walk {
  std::vector<WalkNode> pool;
  int head = -1;

  int new_visit(Vertex v) {
    pool.emplace_back();
    pool.back().v = v;
    return static_cast<int>(pool.size()) - 1;
  }
  int new_block(std::vector<Vertex> rot, Big t) {
    pool.emplace_back();
    pool.back().rot = std::move(rot);
    pool.back().t = std::move(t);
    return static_cast<int>(pool.size()) - 1;
  }
  void link_after(int node, int fresh) {
    int nxt = pool[node].next;
    pool[node].next = fresh;
    pool[fresh].prev = node;
    pool[fresh].next = nxt;
    pool[nxt].prev = fresh;
  }
  Vertex first_vertex(int i) const {
    return pool[i].is_block() ? pool[i].rot.front() : pool[i].v;
  }
  Vertex last_vertex(int i) const {
    return pool[i].is_block() ? pool[i].rot.back() : pool[i].v;
  }
  // Vertex occurrence right before / after node i in the current walk.
  Vertex scan_back(int i) const {
    int j = pool[i].prev;
    while (pool[j].dead) j = pool[j].prev;
    return last_vertex(j);
  }
  Vertex scan_fwd(int i) const {
    int j = pool[i].next;
    while (pool[j].dead) j = pool[j].next;
    return first_vertex(j);
  }
};

// Root the cycle decomposition at `start` and splice every cycle into one
// cyclic walk. Copy 1 of each cycle becomes explicit visit nodes (so later
// cycles can attach at any of its vertices); copies 2..t become one block.
// A child cycle attached at junction u expands to c2..ck,u right after an
// existing visit of u, so the junction visit itself is owned by the parent.
Walk build_walk(const Multigraph& g, Vertex start) {
  std::vector<CycleTerm> cycles = cycle_decompose(g);
  assert(!cycles.empty());
  std::map<Vertex, std::vector<int>> at;
  for (int i = 0; i < static_cast<int>(cycles.size()); ++i)
    for (Vertex v : cycles[i].cycle) at[v].push_back(i);
  assert(at.count(start) && "walk start must lie in the support");

  Walk w;
  std::map<Vertex, int> first_visit;
  std::vector<char> placed(cycles.size(), 0);
  std::queue<Vertex> fresh;
  auto note_visit = [&](Vertex v, int node) {
    if (first_visit.emplace(v, node).second) fresh.push(v);
  };

  int root = at.at(start).front();
  {
    std::vector<Vertex> cyc = cycles[root].cycle;
    std::rotate(cyc.begin(), std::find(cyc.begin(), cyc.end(), start),
                cyc.end());
    int prevn = -1;
    for (Vertex v : cyc) {
      int node = w.new_visit(v);
      if (prevn == -1) {
        w.head = node;
        w.pool[node].prev = w.pool[node].next = node;
      } else {
        w.link_after(prevn, node);
      }
      note_visit(v, node);
      prevn = node;
    }
    if (cycles[root].count > 1)
      w.link_after(prevn, w.new_block(cyc, cycles[root].count - 1));
    placed[root] = 1;
  }

  while (!fresh.empty()) {
    Vertex u = fresh.front();
    fresh.pop();
    for (int ci : at[u]) {
      if (placed[ci]) continue;
      placed[ci] = 1;
      std::vector<Vertex> cyc = cycles[ci].cycle;
      std::rotate(cyc.begin(), std::find(cyc.begin(), cyc.end(), u),
                  cyc.end());
      int after = first_visit.at(u);
      for (std::size_t i = 1; i < cyc.size(); ++i) {
        int node = w.new_visit(cyc[i]);
        w.link_after(after, node);
        note_visit(cyc[i], node);
        after = node;
      }
      int seam = w.new_visit(u);
      w.link_after(after, seam);
      if (cycles[ci].count > 1) {
        std::vector<Vertex> rot(cyc.begin() + 1, cyc.end());
        rot.push_back(u);
        w.link_after(seam, w.new_block(std::move(rot), cycles[ci].count - 1));
      }
    }
  }
  for (std::size_t i = 0; i < placed.size(); ++i)
    assert(placed[i] && "multigraph must be connected");
  return w;
}

// Remove the `remove` tail-most occurrences of v from the walk, shortcutting
// predecessor to successor each time. Occurrences inside a block are taken
// out in bulk: all copies of the block share the same in-copy neighbours, so
// only the copy touching the block boundary needs a dynamic lookup. Partial
// removals leave the node list stale past the cut point, which is fine: the
// pass ends there and the walk is rebuilt for the next vertex.
void run_pass(Multigraph& g, Vertex v, const Big& remove, Vertex head_vertex,
              ReduceStats* stats) {
  Walk w = build_walk(g, head_vertex);
  auto bump = [&](Vertex a, Vertex b, const Big& k) {
    if (k == 0) return;
    g.add(a, b, k);
    if (stats) stats->multigraph_updates += 1;
  };

  std::vector<int> slots;
  int i = w.head;
  do {
    const WalkNode& n = w.pool[i];
    if (n.is_block()) {
      if (std::find(n.rot.begin(), n.rot.end(), v) != n.rot.end())
        slots.push_back(i);
    } else if (n.v == v) {
      slots.push_back(i);
    }
    i = n.next;
  } while (i != w.head);

  Big remaining = remove;
  for (auto it = slots.rbegin(); it != slots.rend() && remaining > 0; ++it) {
    WalkNode& n = w.pool[*it];
    if (!n.is_block()) {
      Vertex p = w.scan_back(*it);
      Vertex q = w.scan_fwd(*it);
      n.dead = true;
      bump(p, v, -1);
      bump(v, q, -1);
      bump(p, q, 1);
      remaining -= 1;
      continue;
    }
    int k = static_cast<int>(n.rot.size());
    int d = static_cast<int>(
        std::find(n.rot.begin(), n.rot.end(), v) - n.rot.begin());
    Big j = std::min(remaining, n.t);
    if (k == 1) {
      if (j < n.t) {
        bump(v, v, -j);
        n.t -= j;
      } else {
        Vertex p = w.scan_back(*it);
        Vertex q = w.scan_fwd(*it);
        bump(v, v, -(j - 1));
        bump(p, v, -1);
        bump(v, q, -1);
        bump(p, q, 1);
        n.dead = true;
      }
    } else if (d > 0 && d < k - 1) {
      Vertex a = n.rot[d - 1], b = n.rot[d + 1];
      bump(a, v, -j);
      bump(v, b, -j);
      bump(a, b, j);
      if (j == n.t) n.rot.erase(n.rot.begin() + d);
      else n.t -= j;
    } else if (d == k - 1) {
      // Last in-copy position: the very last copy hands over to whatever
      // follows the block, the others hand over to the next copy's front.
      Vertex a = n.rot[k - 2], b = n.rot[0];
      Vertex q = w.scan_fwd(*it);
      bump(a, v, -j);
      bump(v, b, -(j - 1));
      bump(a, b, j - 1);
      bump(v, q, -1);
      bump(a, q, 1);
      if (j == n.t) n.rot.erase(n.rot.begin() + d);
      else n.t -= j;
    } else {
      // First in-copy position: only when the whole block goes does the
      // earliest removed copy look back past the block boundary.
      Vertex a = n.rot[k - 1], b = n.rot[1];
      if (j < n.t) {
        bump(a, v, -j);
        bump(v, b, -j);
        bump(a, b, j);
        n.t -= j;
      } else {
        Vertex p = w.scan_back(*it);
        bump(a, v, -(j - 1));
        bump(v, b, -j);
        bump(a, b, j - 1);
        bump(p, v, -1);
        bump(p, b, 1);
        n.rot.erase(n.rot.begin());
      }
    }
    remaining -= j;
  }
  assert(remaining == 0 && "more removals requested than occurrences");
}

}  // namespace

std::vector<Vertex> euler_walk(const Multigraph& g, Vertex start) {
  assert(!g.empty() && is_connected(g));
  Walk w = build_walk(g, start);
  std::vector<Vertex> out;
  int i = w.head;
  do {
    const WalkNode& n = w.pool[i];
    if (n.is_block()) {
      assert(n.t * static_cast<int>(n.rot.size()) <= 1000000 &&
             "euler_walk is only for small graphs");
      for (Big rep = 0; rep < n.t; ++rep)
        out.insert(out.end(), n.rot.begin(), n.rot.end());
    } else {
      out.push_back(n.v);
    }
    i = n.next;
  } while (i != w.head);
  return out;
}

void reduce_degrees(Multigraph& g, const CostMatrix& c,
                    const std::map<Vertex, Big>& target, Vertex anchor,
                    ReduceStats* stats) {
  (void)c;  // the metric is what makes shortcuts safe; mechanics never read it
  if (g.empty()) {
#ifndef NDEBUG
    for (const auto& [v, rho] : target) assert(rho == 0);
#endif
    return;
  }
  assert(is_connected(g));
  auto degs = g.dotted_degrees();

  struct Job {
    Big gamma;
    Vertex v;
  };
  std::vector<Job> jobs;
  for (const auto& [v, rho] : target) {
    Big cur = 0;
    if (auto it = degs.find(v); it != degs.end()) cur = it->second;
    assert(rho >= 0 && rho % 2 == 0 && rho <= cur);
    if (rho < cur) jobs.push_back({cur - rho, v});
  }
  std::sort(jobs.begin(), jobs.end(), [](const Job& x, const Job& y) {
    return x.gamma != y.gamma ? x.gamma < y.gamma : x.v < y.v;
  });

  auto final_degree = [&](Vertex v) -> Big {
    if (auto it = target.find(v); it != target.end()) return it->second;
    auto dit = degs.find(v);
    return dit == degs.end() ? Big(0) : dit->second;
  };
  Vertex head = anchor;
  if (head < 0) {
    for (const auto& [v, deg] : degs)
      if (final_degree(v) > 0) {
        head = v;
        break;
      }
  }
  assert(head >= 0 && "some vertex must keep positive degree");
  assert(degs.count(head) && final_degree(head) > 0);

  for (const Job& job : jobs) run_pass(g, job.v, job.gamma / 2, head, stats);

#ifndef NDEBUG
  auto after = g.dotted_degrees();
  for (const auto& [v, rho] : target) {
    Big cur = 0;
    if (auto it = after.find(v); it != after.end()) cur = it->second;
    assert(cur == rho);
  }
#endif
}

void disconnect_depots(Multigraph& g, const CostMatrix& c,
                       const std::vector<Vertex>& drop, Vertex keep,
                       ReduceStats* stats) {
  std::map<Vertex, Big> target;
  for (Vertex d : drop)
    if (g.dotted_degree(d) > 0) target[d] = 0;
  if (!target.empty()) reduce_degrees(g, c, target, keep, stats);
}

void normalize_depot_visits(Solution& sol, const CostMatrix& c,
                            const std::vector<Vertex>& depots,
                            ReduceStats* stats) {
  assert(sol.tours.size() <= depots.size());
  for (std::size_t j = 0; j < sol.tours.size(); ++j) {
    Multigraph& tour = sol.tours[j];
    if (tour.empty()) continue;
    Vertex own = depots[j];
    std::map<Vertex, Big> target;
    for (Vertex d : depots) {
      Big deg = tour.dotted_degree(d);
      if (d == own) {
        assert(deg >= 2 && "tour must contain its own depot");
        if (deg > 2) target[d] = 2;
      } else if (deg > 0) {
        target[d] = 0;
      }
    }
    if (!target.empty()) reduce_degrees(tour, c, target, own, stats);
  }
}

}  // namespace mvmtsp
