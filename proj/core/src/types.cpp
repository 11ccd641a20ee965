#include "mvmtsp/types.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace mvmtsp {

void Multigraph::add(Vertex a, Vertex b, const Big& k) {
  if (k == 0) return;
  Edge e(a, b);
  auto it = x.find(e);
  if (it == x.end()) {
    assert(k > 0);
    x.emplace(e, k);
    return;
  }
  it->second += k;
  assert(it->second >= 0);
  if (it->second == 0) x.erase(it);
}

Big Multigraph::mult(Vertex a, Vertex b) const {
  auto it = x.find(Edge(a, b));
  return it == x.end() ? Big(0) : it->second;
}

Big Multigraph::edge_count() const {
  Big s = 0;
  for (const auto& [e, k] : x) s += k;
  return s;
}

Big Multigraph::cost(const CostMatrix& c) const {
  Big s = 0;
  for (const auto& [e, k] : x) s += Big(c(e.u, e.v)) * k;
  return s;
}

Big Multigraph::dotted_degree(Vertex v) const {
  Big d = 0;
  for (const auto& [e, k] : x) {
    if (e.loop()) {
      if (e.u == v) d += 2 * k;
    } else if (e.u == v || e.v == v) {
      d += k;
    }
  }
  return d;
}

std::map<Vertex, Big> Multigraph::dotted_degrees() const {
  std::map<Vertex, Big> d;
  for (const auto& [e, k] : x) {
    if (e.loop()) {
      d[e.u] += 2 * k;
    } else {
      d[e.u] += k;
      d[e.v] += k;
    }
  }
  return d;
}

std::vector<Vertex> Multigraph::support() const {
  std::set<Vertex> s;
  for (const auto& [e, k] : x) {
    s.insert(e.u);
    s.insert(e.v);
  }
  return {s.begin(), s.end()};
}

Multigraph mg_sum(const std::vector<Multigraph>& parts) {
  Multigraph g;
  for (const auto& p : parts)
    for (const auto& [e, k] : p.x) g.add(e.u, e.v, k);
  return g;
}

std::vector<std::vector<Vertex>> components(const Multigraph& g) {
  std::map<Vertex, std::vector<Vertex>> adj;
  for (const auto& [e, k] : g.x) {
    adj[e.u];
    adj[e.v];
    if (!e.loop()) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
  }
  std::set<Vertex> seen;
  std::vector<std::vector<Vertex>> comps;
  for (const auto& [v0, unused] : adj) {
    if (seen.count(v0)) continue;
    std::vector<Vertex> comp, stack{v0};
    seen.insert(v0);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : adj[v])
        if (seen.insert(w).second) stack.push_back(w);
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Multigraph& g) { return components(g).size() <= 1; }

CostMatrix::CostMatrix(int n, Cost fill)
    : n_(n), a_(static_cast<std::size_t>(n) * (n + 1) / 2, fill) {}

std::size_t CostMatrix::idx(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  assert(u >= 0 && v < n_);
  return static_cast<std::size_t>(u) * n_ - static_cast<std::size_t>(u) * (u + 1) / 2 + v;
}

Cost CostMatrix::cmin(Vertex v) const {
  assert(n_ >= 2);
  Cost best = 0;
  bool first = true;
  for (Vertex u = 0; u < n_; ++u) {
    if (u == v) continue;
    Cost c = (*this)(u, v);
    if (first || c < best) best = c, first = false;
  }
  return best;
}

std::vector<std::string> validate_metric(const CostMatrix& c) {
  std::vector<std::string> bad;
  auto fail = [&](const std::string& s) {
    if (bad.size() < 100) bad.push_back(s);
  };
  int n = c.n();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u; v < n; ++v)
      if (c(u, v) < 0) {
        std::ostringstream os;
        os << "negative cost c(" << u << "," << v << ") = " << c(u, v);
        fail(os.str());
      }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex w = u + 1; w < n; ++w)
      for (Vertex v = 0; v < n; ++v) {
        if (v == u || v == w) continue;
        if (c(u, w) > c(u, v) + c(v, w)) {
          std::ostringstream os;
          os << "triangle violation: c(" << u << "," << w << ") = " << c(u, w)
             << " > " << c(u, v) + c(v, w) << " = c(" << u << "," << v
             << ") + c(" << v << "," << w << ")";
          fail(os.str());
        }
      }
  if (n >= 2)
    for (Vertex v = 0; v < n; ++v)
      if (c(v, v) > 2 * c.cmin(v)) {
        std::ostringstream os;
        os << "self-loop violation: c(" << v << "," << v << ") = " << c(v, v)
           << " > 2 * " << c.cmin(v);
        fail(os.str());
      }
  return bad;
}

const char* variant_name(Variant p) {
  switch (p) {
    case Variant::P1: return "P1";
    case Variant::P2: return "P2";
    case Variant::P3: return "P3";
    case Variant::P4: return "P4";
    case Variant::P5: return "P5";
    case Variant::P6: return "P6";
    case Variant::P7: return "P7";
    case Variant::P8: return "P8";
  }
  return "?";
}

std::optional<Variant> variant_from_name(const std::string& s) {
  for (Variant p : kAllVariants)
    if (s == variant_name(p)) return p;
  return std::nullopt;
}

bool Instance::is_depot(Vertex v) const {
  return std::find(depots.begin(), depots.end(), v) != depots.end();
}

std::vector<Vertex> Instance::cities() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n(); ++v)
    if (!is_depot(v)) out.push_back(v);
  return out;
}

Big Instance::total_requests() const {
  Big s = 0;
  for (Vertex v : cities()) s += r[v];
  return s;
}

std::vector<std::string> validate_instance(const Instance& inst) {
  std::vector<std::string> bad = validate_metric(inst.c);
  int n = inst.n();
  if (n < 1) bad.push_back("instance has no vertices");
  if (inst.m < 1) bad.push_back("m must be at least 1");
  if (static_cast<int>(inst.r.size()) != n)
    bad.push_back("request vector size does not match vertex count");
  else
    for (Vertex v = 0; v < n; ++v)
      if (!inst.is_depot(v) && inst.r[v] < 1)
        bad.push_back("request at vertex " + std::to_string(v) +
                      " must be at least 1");
  std::set<Vertex> ds(inst.depots.begin(), inst.depots.end());
  if (ds.size() != inst.depots.size()) bad.push_back("duplicate depot");
  if (!std::is_sorted(inst.depots.begin(), inst.depots.end()))
    bad.push_back("depots must be listed in increasing order");
  for (Vertex d : inst.depots) {
    if (d < 0 || d >= n) {
      bad.push_back("depot out of range: " + std::to_string(d));
    } else if (static_cast<int>(inst.r.size()) == n && inst.r[d] != 0) {
      bad.push_back("depot " + std::to_string(d) + " has a nonzero request");
    }
  }
  if (!inst.depots.empty() && inst.m != static_cast<int>(inst.depots.size()))
    bad.push_back("with depots, m must equal the number of depots");
  return bad;
}

Big Solution::cost(const CostMatrix& c) const {
  Big s = 0;
  for (const auto& t : tours) s += t.cost(c);
  return s;
}

int Solution::nonempty_count() const {
  int k = 0;
  for (const auto& t : tours) k += !t.empty();
  return k;
}

}  // namespace mvmtsp
