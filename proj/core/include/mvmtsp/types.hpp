#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mvmtsp {

using Vertex = int;
using Cost = std::int64_t;
using Big = boost::multiprecision::cpp_int;

// Undirected edge stored with u <= v; u == v is a self-loop.
struct Edge {
  Vertex u;
  Vertex v;

  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool loop() const { return u == v; }
  auto operator<=>(const Edge&) const = default;
};

// Edge multiset with arbitrary-precision multiplicities. Iteration order is
// deterministic (ordered by endpoint pair), which keeps every algorithm on
// top of this reproducible across runs.
struct Multigraph {
  std::map<Edge, Big> x;

  void add(Vertex a, Vertex b, const Big& k = 1);
  Big mult(Vertex a, Vertex b) const;
  bool empty() const { return x.empty(); }
  Big edge_count() const;
  Big cost(const class CostMatrix& c) const;
  Big dotted_degree(Vertex v) const;
  std::map<Vertex, Big> dotted_degrees() const;
  std::vector<Vertex> support() const;

  bool operator==(const Multigraph&) const = default;
};

Multigraph mg_sum(const std::vector<Multigraph>& parts);

// Connected components of the support graph (multiplicities ignored).
// Each component is sorted; components are ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(const Multigraph& g);
bool is_connected(const Multigraph& g);

// Symmetric cost matrix over vertices 0..n-1, self-loop costs on the
// diagonal. Stored as the upper triangle so symmetry holds by construction.
class CostMatrix {
 public:
  CostMatrix() = default;
  explicit CostMatrix(int n, Cost fill = 0);

  int n() const { return n_; }
  Cost operator()(Vertex u, Vertex v) const { return a_[idx(u, v)]; }
  Cost& at(Vertex u, Vertex v) { return a_[idx(u, v)]; }

  // Cheapest connection to any other vertex (n >= 2).
  Cost cmin(Vertex v) const;

 private:
  std::size_t idx(Vertex u, Vertex v) const;

  int n_ = 0;
  std::vector<Cost> a_;
};

// Metric requirements: non-negative entries, triangle inequality over
// distinct triples, and c(vv) <= 2 * cmin(v) for every self-loop.
// Returns human-readable violations; empty means valid.
std::vector<std::string> validate_metric(const CostMatrix& c);

enum class Variant { P1, P2, P3, P4, P5, P6, P7, P8 };

constexpr bool variant_has_depots(Variant p) {
  return p == Variant::P5 || p == Variant::P6 || p == Variant::P7 ||
         p == Variant::P8;
}
// Whether agents may stay home (empty tours allowed).
constexpr bool variant_allows_empty(Variant p) {
  return p == Variant::P3 || p == Variant::P4 || p == Variant::P7 ||
         p == Variant::P8;
}
// Whether distinct tours must be vertex-disjoint.
constexpr bool variant_disjoint(Variant p) {
  return p == Variant::P2 || p == Variant::P4 || p == Variant::P6 ||
         p == Variant::P8;
}
const char* variant_name(Variant p);
std::optional<Variant> variant_from_name(const std::string& s);
constexpr Variant kAllVariants[] = {Variant::P1, Variant::P2, Variant::P3,
                                    Variant::P4, Variant::P5, Variant::P6,
                                    Variant::P7, Variant::P8};

// A problem instance. Depots are only meaningful for P5..P8; for those
// variants there is one agent per depot (m == depots.size()) and depot
// request entries must be zero.
struct Instance {
  CostMatrix c;
  std::vector<Big> r;
  int m = 1;
  std::vector<Vertex> depots;

  int n() const { return c.n(); }
  bool is_depot(Vertex v) const;
  std::vector<Vertex> cities() const;
  Big total_requests() const;
};

std::vector<std::string> validate_instance(const Instance& inst);

// One multigraph per agent; an empty multigraph is an empty tour.
struct Solution {
  std::vector<Multigraph> tours;

  Big cost(const CostMatrix& c) const;
  int nonempty_count() const;
  Multigraph aggregate() const { return mg_sum(tours); }
};

}  // namespace mvmtsp
