// File formats, the instance generator, and the bench harness library.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <string>

#include "mvmtsp/bench.hpp"
#include "mvmtsp/gen.hpp"
#include "mvmtsp/io.hpp"
#include "mvmtsp/oracle.hpp"

#include "support/fixtures.hpp"

using namespace mvmtsp;

namespace {

InstanceDoc doc_of(const Instance& inst, Variant var) {
  InstanceDoc doc;
  doc.inst = inst;
  doc.variant = var;
  for (int v = 0; v < inst.n(); ++v)
    doc.names.push_back("v" + std::to_string(v));
  return doc;
}

Instance tri_instance(long long r, int m) {
  return fixtures::make_instance(fixtures::tri(), {r, r, r}, m);
}

// Unit-cost depot instance: depots 0..d-1, cities with request r, m == d.
Instance unit_depot(int n, int d, long long r) {
  std::vector<long long> req(n, r);
  std::vector<Vertex> depots;
  for (int i = 0; i < d; ++i) {
    req[i] = 0;
    depots.push_back(i);
  }
  return fixtures::make_instance(fixtures::unit(n), req, d, depots);
}

std::string parse_error(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const std::runtime_error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("instance round trip is byte exact") {
  auto check = [](const InstanceDoc& doc) {
    std::string once = write_instance(doc);
    InstanceDoc back = parse_instance(once);
    CHECK(back.variant == doc.variant);
    CHECK(back.names == doc.names);
    CHECK(back.inst.m == doc.inst.m);
    CHECK(back.inst.r == doc.inst.r);
    CHECK(back.inst.depots == doc.inst.depots);
    for (int u = 0; u < doc.inst.n(); ++u)
      for (int v = u; v < doc.inst.n(); ++v)
        CHECK(back.inst.c(u, v) == doc.inst.c(u, v));
    CHECK(write_instance(back) == once);
  };
  check(doc_of(tri_instance(2, 2), Variant::P1));
  check(doc_of(unit_depot(4, 2, 3), Variant::P7));

  Instance huge = tri_instance(1, 1);
  huge.r[0] = Big(10);
  for (int i = 0; i < 10; ++i) huge.r[0] *= huge.r[0];  // 10^1024
  check(doc_of(huge, Variant::P3));
  std::string text = write_instance(doc_of(huge, Variant::P3));
  CHECK(parse_instance(text).inst.r[0] == huge.r[0]);
  CHECK(huge.r[0].str().size() == 1025);
}

TEST_CASE("instance parse errors name the offending field") {
  CHECK(parse_error("{") != "");
  CHECK(parse_error("{}").find("version") != std::string::npos);
  CHECK(parse_error(R"({"version":2})").find("version") != std::string::npos);

  std::string good = write_instance(doc_of(tri_instance(2, 1), Variant::P1));

  auto mutate = [&](const std::string& from, const std::string& to) {
    std::string t = good;
    auto at = t.find(from);
    REQUIRE(at != std::string::npos);
    t.replace(at, from.size(), to);
    return parse_error(t);
  };
  CHECK(mutate("\"P1\"", "\"P9\"").find("variant") != std::string::npos);
  CHECK(mutate("\"agents\": 1", "\"agents\": 0").find("agents") !=
        std::string::npos);
  CHECK(mutate("\"v2\"", "\"v0\"").find("vertex") != std::string::npos);
  // Breaking the matrix shape must be caught.
  CHECK(mutate("\"costs\": [", "\"costs\": [[0],") != "");
  // Negative and fractional costs are rejected (six-space indent targets a
  // cost entry, not the version field).
  CHECK(mutate("      1,", "      -1,") != "");
  CHECK(mutate("      1,", "      1.5,") != "");
  // Request on an unknown vertex name.
  CHECK(mutate("\"v0\": \"2\"", "\"vX\": \"2\"") != "");

  // A depot carrying a positive request is rejected at parse time.
  std::string depot = write_instance(doc_of(unit_depot(3, 1, 2), Variant::P7));
  auto at = depot.find("\"v1\": \"2\"");
  REQUIRE(at != std::string::npos);
  std::string broken =
      depot.substr(0, at) + "\"v0\": \"1\", " + depot.substr(at);
  CHECK(parse_error(broken).find("depot") != std::string::npos);

  // Variant/depot consistency both ways.
  std::string p1d = write_instance(doc_of(unit_depot(3, 1, 2), Variant::P7));
  auto vat = p1d.find("\"P7\"");
  p1d.replace(vat, 4, "\"P1\"");
  CHECK(parse_error(p1d).find("depot") != std::string::npos);
  std::string p5nd = write_instance(doc_of(tri_instance(2, 1), Variant::P1));
  vat = p5nd.find("\"P1\"");
  p5nd.replace(vat, 4, "\"P5\"");
  CHECK(parse_error(p5nd).find("depot") != std::string::npos);
}

TEST_CASE("metric violations are rejected at parse") {
  Instance bad = tri_instance(1, 1);
  bad.c.at(0, 1) = 50;  // breaks the triangle inequality
  std::string text = write_instance(doc_of(bad, Variant::P1));
  CHECK(parse_error(text).find("triangle") != std::string::npos);

  Instance loopy = tri_instance(1, 1);
  loopy.c.at(1, 1) = 99;  // breaks c(vv) <= 2 cmin(v)
  text = write_instance(doc_of(loopy, Variant::P1));
  CHECK(parse_error(text) != "");
}

TEST_CASE("solution round trip preserves every field") {
  Instance inst = tri_instance(2, 2);
  auto report = solve_p3(inst);
  SolutionDoc sd;
  sd.variant = Variant::P3;
  sd.solution = report.solution;
  sd.total_cost = report.solution.cost(inst.c);
  sd.algorithm = report.algorithm;
  sd.claimed_factor = report.claimed_factor;
  sd.tp_lower_bound = report.lower_bound;
  sd.wall_ms = 1.25;

  std::string once = write_solution(sd);
  SolutionDoc back = parse_solution(once);
  CHECK(back.variant == sd.variant);
  CHECK(back.total_cost == sd.total_cost);
  CHECK(back.algorithm == sd.algorithm);
  CHECK(back.claimed_factor == sd.claimed_factor);
  CHECK(back.tp_lower_bound == sd.tp_lower_bound);
  CHECK(back.wall_ms == doctest::Approx(sd.wall_ms));
  CHECK(back.solution.tours.size() == sd.solution.tours.size());
  for (size_t i = 0; i < sd.solution.tours.size(); ++i)
    CHECK(back.solution.tours[i] == sd.solution.tours[i]);
  CHECK(write_solution(back) == once);

  // Astronomical multiplicities survive the decimal round trip.
  SolutionDoc astro = sd;
  astro.solution.tours[0].add(0, 0, Big("1" + std::string(100, '0')));
  astro.total_cost = astro.solution.cost(inst.c);
  SolutionDoc astro_back = parse_solution(write_solution(astro));
  CHECK(astro_back.solution.tours[0].mult(0, 0) ==
        astro.solution.tours[0].mult(0, 0));

  CHECK_THROWS_AS(parse_solution("{\"version\":1}"), std::runtime_error);
  CHECK_THROWS_AS(big_from_decimal("12x"), std::runtime_error);
  CHECK_THROWS_AS(big_from_decimal(""), std::runtime_error);
  CHECK_THROWS_AS(big_from_decimal("-3"), std::runtime_error);
  CHECK(big_from_decimal("007") == 7);
}

TEST_CASE("generator is deterministic and always metric") {
  GenConfig cfg;
  cfg.n = 6;
  cfg.m = 2;
  cfg.seed = 7;
  InstanceDoc a = generate_instance(cfg);
  InstanceDoc b = generate_instance(cfg);
  CHECK(write_instance(a) == write_instance(b));
  cfg.seed = 8;
  CHECK(write_instance(generate_instance(cfg)) != write_instance(a));

  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    GenConfig c;
    c.n = 1 + static_cast<int>(seed % 7);
    c.m = 1 + static_cast<int>(seed % 3);
    c.seed = seed;
    c.metric = seed % 2 ? "closure" : "euclidean";
    InstanceDoc doc = generate_instance(c);
    CHECK(validate_metric(doc.inst.c).empty());
    CHECK(validate_instance(doc.inst).empty());
    CHECK(doc.variant == Variant::P1);
    for (const Big& r : doc.inst.r) {
      CHECK(r >= 1);
      CHECK(r <= c.rmax);
    }
  }
}

TEST_CASE("generator depot handling and parameter validation") {
  GenConfig cfg;
  cfg.n = 6;
  cfg.depots = 2;
  cfg.seed = 11;
  InstanceDoc doc = generate_instance(cfg);
  CHECK(doc.variant == Variant::P5);
  CHECK(doc.inst.m == 2);
  CHECK(doc.inst.depots == std::vector<Vertex>{0, 1});
  CHECK(doc.inst.r[0] == 0);
  CHECK(doc.inst.r[1] == 0);
  for (int v = 2; v < 6; ++v) CHECK(doc.inst.r[v] >= 1);

  cfg.variant = "P8";
  CHECK(generate_instance(cfg).variant == Variant::P8);
  cfg.variant = "P2";
  CHECK_THROWS_AS(generate_instance(cfg), std::invalid_argument);
  cfg.variant = "P9";
  CHECK_THROWS_AS(generate_instance(cfg), std::invalid_argument);
  cfg.variant.clear();

  cfg.depots = 6;  // no city left
  CHECK_THROWS_AS(generate_instance(cfg), std::invalid_argument);
  cfg.depots = 0;
  cfg.n = 0;
  CHECK_THROWS_AS(generate_instance(cfg), std::invalid_argument);
  cfg.n = 6;
  cfg.rmax = 0;
  CHECK_THROWS_AS(generate_instance(cfg), std::invalid_argument);
  cfg.rmax = 3;
  cfg.metric = "hyperbolic";
  CHECK_THROWS_AS(generate_instance(cfg), std::invalid_argument);
}

TEST_CASE("generator serializes huge requests losslessly") {
  GenConfig cfg;
  cfg.n = 4;
  cfg.seed = 5;
  cfg.rmax = Big(10);
  for (int i = 0; i < 49; ++i) cfg.rmax *= 10;  // 10^50
  InstanceDoc doc = generate_instance(cfg);
  std::string text = write_instance(doc);
  InstanceDoc back = parse_instance(text);
  bool saw_big = false;
  for (int v = 0; v < 4; ++v) {
    CHECK(back.inst.r[v] == doc.inst.r[v]);
    if (doc.inst.r[v].str().size() >= 45) saw_big = true;
  }
  CHECK(saw_big);  // requests of ~50 digits actually appeared
}

TEST_CASE("bench library aggregates and flags violations") {
  std::vector<InstanceDoc> corpus;
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    GenConfig cfg;
    cfg.n = 5;
    cfg.m = 2;
    cfg.seed = seed;
    corpus.push_back(generate_instance(cfg));
  }
  for (std::uint64_t seed = 7; seed <= 10; ++seed) {
    GenConfig cfg;
    cfg.n = 5;
    cfg.depots = 2;
    cfg.seed = seed;
    corpus.push_back(generate_instance(cfg));
  }

  BenchOptions opt;
  auto rows = run_bench(corpus, opt);
  REQUIRE(rows.size() == 8);
  for (const BenchRow& row : rows) {
    CHECK(row.instances == (variant_has_depots(row.variant) ? 4 : 6));
    CHECK(row.solved + row.infeasible == row.instances);
    CHECK(row.violations == 0);
    CHECK(row.oracle_checked == row.instances);
    if (row.solved > 0) {
      CHECK(row.mean_ratio >= 1.0);
      CHECK(row.max_ratio <= 4.0);
      CHECK(row.mean_ratio <= row.max_ratio);
    }
  }

  BenchOptions capped = opt;
  capped.trials = 3;
  auto few = run_bench(corpus, capped);
  for (const BenchRow& row : few) CHECK(row.instances <= 3);

  BenchOptions blind = opt;
  blind.use_oracle = false;
  auto rows2 = run_bench(corpus, blind);
  for (const BenchRow& row : rows2) {
    CHECK(row.oracle_checked == 0);
    CHECK(row.mean_ratio == -1);
  }
  std::string json = bench_report_json(rows2);
  CHECK(json.find("\"n/a\"") != std::string::npos);
  CHECK(bench_report_json({}).find("\"rows\": []") != std::string::npos);

  BenchOptions p3 = opt;
  p3.variants = {Variant::P3};
  p3.algorithm = "alg5";
  auto one = run_bench(corpus, p3);
  REQUIRE(one.size() == 1);
  CHECK(one[0].algorithm == "alg5");
  CHECK(one[0].max_ratio <= 2.0);

  BenchOptions clash = opt;
  clash.algorithm = "alg1";  // cannot serve depot variants
  CHECK_THROWS_AS(run_bench(corpus, clash), std::invalid_argument);
}
