#include "mvmtsp/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include <json.hpp>

namespace mvmtsp {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& what) {
  throw std::runtime_error("instance file: " + what);
}

[[noreturn]] void fail_sol(const std::string& what) {
  throw std::runtime_error("solution file: " + what);
}

Big big_field(const ordered_json& j, const std::string& where) {
  if (j.is_string()) return big_from_decimal(j.get<std::string>());
  if (j.is_number_unsigned()) return Big(j.get<std::uint64_t>());
  if (j.is_number_integer()) {
    auto v = j.get<std::int64_t>();
    if (v < 0) throw std::runtime_error(where + " must be non-negative");
    return Big(v);
  }
  throw std::runtime_error(where + " must be a decimal string");
}

}  // namespace

Big big_from_decimal(const std::string& s) {
  if (s.empty()) throw std::runtime_error("empty decimal string");
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw std::runtime_error("bad decimal string: " + s);
  return Big(s);
}

InstanceDoc parse_instance(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    fail(std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) fail("top level must be an object");
  if (!j.contains("version") || j["version"] != 1)
    fail("field 'version' must be 1");

  InstanceDoc doc;
  if (!j.contains("variant") || !j["variant"].is_string())
    fail("field 'variant' must be one of P1..P8");
  auto var = variant_from_name(j["variant"].get<std::string>());
  if (!var) fail("field 'variant' must be one of P1..P8");
  doc.variant = *var;

  if (!j.contains("vertices") || !j["vertices"].is_array() ||
      j["vertices"].empty())
    fail("field 'vertices' must be a non-empty name array");
  std::map<std::string, Vertex> index;
  for (const auto& item : j["vertices"]) {
    if (!item.is_string() || item.get<std::string>().empty())
      fail("vertex names must be non-empty strings");
    std::string name = item.get<std::string>();
    if (!index.emplace(name, static_cast<Vertex>(doc.names.size())).second)
      fail("duplicate vertex name '" + name + "'");
    doc.names.push_back(name);
  }
  int n = static_cast<int>(doc.names.size());

  if (!j.contains("costs") || !j["costs"].is_array() ||
      static_cast<int>(j["costs"].size()) != n)
    fail("field 'costs' must be an n x n matrix");
  doc.inst.c = CostMatrix(n);
  for (int u = 0; u < n; ++u) {
    const auto& row = j["costs"][u];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      fail("cost row " + std::to_string(u) + " must have n entries");
    for (int v = 0; v < n; ++v) {
      if (!row[v].is_number_integer() || row[v].get<std::int64_t>() < 0)
        fail("cost[" + std::to_string(u) + "][" + std::to_string(v) +
             "] must be a non-negative integer");
      Cost val = row[v].get<std::int64_t>();
      if (v < u) {
        if (doc.inst.c(u, v) != val)
          fail("cost matrix is not symmetric at (" + std::to_string(u) +
               ", " + std::to_string(v) + ")");
      } else {
        doc.inst.c.at(u, v) = val;
      }
    }
  }

  if (j.contains("depots")) {
    if (!j["depots"].is_array()) fail("field 'depots' must be a name array");
    for (const auto& item : j["depots"]) {
      if (!item.is_string() ||
          !index.count(item.get<std::string>()))
        fail("depot name not in 'vertices'");
      doc.inst.depots.push_back(index[item.get<std::string>()]);
    }
    std::sort(doc.inst.depots.begin(), doc.inst.depots.end());
    if (std::adjacent_find(doc.inst.depots.begin(), doc.inst.depots.end()) !=
        doc.inst.depots.end())
      fail("duplicate depot");
  }
  if (variant_has_depots(doc.variant) == doc.inst.depots.empty())
    fail(std::string("variant ") + variant_name(doc.variant) +
         (doc.inst.depots.empty() ? " needs a depot list"
                                  : " does not take depots"));

  doc.inst.r.assign(n, 0);
  if (!j.contains("requests") || !j["requests"].is_object())
    fail("field 'requests' must map city names to decimal strings");
  for (const auto& [name, val] : j["requests"].items()) {
    auto it = index.find(name);
    if (it == index.end()) fail("request for unknown vertex '" + name + "'");
    Big r;
    try {
      r = big_field(val, "request '" + name + "'");
    } catch (const std::exception& e) {
      fail(e.what());
    }
    if (doc.inst.is_depot(it->second) && r != 0)
      fail("vertex '" + name + "' is a depot and cannot carry a request");
    doc.inst.r[it->second] = r;
  }

  if (!j.contains("agents") || !j["agents"].is_number_integer() ||
      j["agents"].get<std::int64_t>() < 1)
    fail("field 'agents' must be a positive integer");
  doc.inst.m = static_cast<int>(j["agents"].get<std::int64_t>());

  auto problems = validate_instance(doc.inst);
  auto metric = validate_metric(doc.inst.c);
  problems.insert(problems.end(), metric.begin(), metric.end());
  if (!problems.empty()) fail(problems.front());
  return doc;
}

std::string write_instance(const InstanceDoc& doc) {
  int n = doc.inst.n();
  ordered_json j;
  j["version"] = 1;
  j["variant"] = variant_name(doc.variant);
  j["agents"] = doc.inst.m;
  j["vertices"] = doc.names;
  ordered_json costs = ordered_json::array();
  for (int u = 0; u < n; ++u) {
    ordered_json row = ordered_json::array();
    for (int v = 0; v < n; ++v) row.push_back(doc.inst.c(u, v));
    costs.push_back(row);
  }
  j["costs"] = costs;
  ordered_json req = ordered_json::object();
  for (int v = 0; v < n; ++v)
    if (!doc.inst.is_depot(v)) req[doc.names[v]] = doc.inst.r[v].str();
  j["requests"] = req;
  if (!doc.inst.depots.empty()) {
    ordered_json dep = ordered_json::array();
    for (Vertex d : doc.inst.depots) dep.push_back(doc.names[d]);
    j["depots"] = dep;
  }
  return j.dump(2) + "\n";
}

SolutionDoc parse_solution(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    fail_sol(std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) fail_sol("top level must be an object");
  if (!j.contains("version") || j["version"] != 1)
    fail_sol("field 'version' must be 1");
  SolutionDoc doc;
  auto var = j.contains("variant") && j["variant"].is_string()
                 ? variant_from_name(j["variant"].get<std::string>())
                 : std::nullopt;
  if (!var) fail_sol("field 'variant' must be one of P1..P8");
  doc.variant = *var;
  try {
    doc.total_cost = big_field(j.at("total_cost"), "total_cost");
  } catch (const std::exception& e) {
    fail_sol(e.what());
  }
  if (!j.contains("agents") || !j["agents"].is_array())
    fail_sol("field 'agents' must be an array of tours");
  for (const auto& agent : j["agents"]) {
    if (!agent.is_object() || !agent.contains("edges") ||
        !agent["edges"].is_array())
      fail_sol("each agent needs an 'edges' array");
    Multigraph tour;
    for (const auto& e : agent["edges"]) {
      if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
          !e[1].is_number_integer())
        fail_sol("edges must be [u, v, multiplicity] triples");
      Vertex u = e[0].get<Vertex>();
      Vertex v = e[1].get<Vertex>();
      if (u < 0 || v < 0) fail_sol("edge endpoints must be non-negative");
      Big k;
      try {
        k = big_field(e[2], "edge multiplicity");
      } catch (const std::exception& ex) {
        fail_sol(ex.what());
      }
      if (k <= 0) fail_sol("edge multiplicities must be positive");
      tour.add(u, v, k);
    }
    doc.solution.tours.push_back(tour);
  }
  if (j.contains("metadata")) {
    const auto& md = j["metadata"];
    if (md.contains("algorithm")) doc.algorithm = md["algorithm"];
    if (md.contains("factor")) doc.claimed_factor = md["factor"];
    if (md.contains("tp_lower_bound"))
      doc.tp_lower_bound = big_field(md["tp_lower_bound"], "tp_lower_bound");
    if (md.contains("wall_ms")) doc.wall_ms = md["wall_ms"];
  }
  return doc;
}

std::string write_solution(const SolutionDoc& doc) {
  ordered_json j;
  j["version"] = 1;
  j["variant"] = variant_name(doc.variant);
  j["total_cost"] = doc.total_cost.str();
  ordered_json agents = ordered_json::array();
  for (const auto& tour : doc.solution.tours) {
    ordered_json edges = ordered_json::array();
    for (const auto& [e, k] : tour.x)
      edges.push_back(ordered_json::array({e.u, e.v, k.str()}));
    agents.push_back(ordered_json{{"edges", edges}});
  }
  j["agents"] = agents;
  j["metadata"] = ordered_json{{"algorithm", doc.algorithm},
                               {"factor", doc.claimed_factor},
                               {"tp_lower_bound", doc.tp_lower_bound.str()},
                               {"wall_ms", doc.wall_ms}};
  return j.dump(2) + "\n";
}

}  // namespace mvmtsp
