#include "mvmtsp/gen.hpp"

#include <cmath>
#include <stdexcept>

#include "mvmtsp/rng.hpp"

namespace mvmtsp {

namespace {

void closure(CostMatrix& c) {
  int n = c.n();
  for (Vertex k = 0; k < n; ++k)
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) {
        if (k == u || k == v) continue;
        Cost via = c(u, k) + c(k, v);
        if (via < c(u, v)) c.at(u, v) = via;
      }
}

void sample_loops(CostMatrix& c, Rng& rng) {
  int n = c.n();
  for (Vertex v = 0; v < n; ++v) {
    Cost cap = n >= 2 ? 2 * c.cmin(v) : 10;
    c.at(v, v) = static_cast<Cost>(rng.below(cap + 1));
  }
}

}  // namespace

InstanceDoc generate_instance(const GenConfig& cfg) {
  if (cfg.n < 1) throw std::invalid_argument("need at least one vertex");
  if (cfg.depots < 0 || cfg.depots >= cfg.n)
    throw std::invalid_argument("depot count must leave at least one city");
  if (cfg.rmax < 1) throw std::invalid_argument("rmax must be at least 1");
  if (cfg.metric != "closure" && cfg.metric != "euclidean")
    throw std::invalid_argument("metric must be 'closure' or 'euclidean'");

  InstanceDoc doc;
  doc.variant = cfg.depots > 0 ? Variant::P5 : Variant::P1;
  if (!cfg.variant.empty()) {
    auto var = variant_from_name(cfg.variant);
    if (!var) throw std::invalid_argument("unknown variant " + cfg.variant);
    if (variant_has_depots(*var) != (cfg.depots > 0))
      throw std::invalid_argument(
          "variant depot requirement conflicts with --depots");
    doc.variant = *var;
  }

  Rng rng(cfg.seed);
  int n = cfg.n;
  doc.inst.c = CostMatrix(n);
  if (cfg.metric == "closure") {
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        doc.inst.c.at(u, v) = static_cast<Cost>(rng.below(61));
  } else {
    std::vector<std::pair<long long, long long>> pts;
    for (int i = 0; i < n; ++i) {
      long long x = static_cast<long long>(rng.below(101));
      long long y = static_cast<long long>(rng.below(101));
      pts.push_back({x, y});
    }
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) {
        double dx = static_cast<double>(pts[u].first - pts[v].first);
        double dy = static_cast<double>(pts[u].second - pts[v].second);
        doc.inst.c.at(u, v) =
            static_cast<Cost>(std::ceil(std::sqrt(dx * dx + dy * dy)));
      }
  }
  // Rounded-up euclidean distances can nick the triangle inequality, and
  // random edge draws certainly do, so both modes get the closure repair.
  closure(doc.inst.c);
  sample_loops(doc.inst.c, rng);

  for (int d = 0; d < cfg.depots; ++d) doc.inst.depots.push_back(d);
  doc.inst.r.assign(n, 0);
  for (Vertex v = cfg.depots; v < n; ++v)
    doc.inst.r[v] = 1 + rng.big_below(cfg.rmax);
  doc.inst.m = cfg.depots > 0 ? cfg.depots : cfg.m;
  if (doc.inst.m < 1) throw std::invalid_argument("need at least one agent");

  for (int v = 0; v < n; ++v) doc.names.push_back("v" + std::to_string(v));

  auto problems = validate_instance(doc.inst);
  auto metric = validate_metric(doc.inst.c);
  if (!problems.empty() || !metric.empty())
    throw std::logic_error("generator produced an invalid instance");
  return doc;
}

}  // namespace mvmtsp
