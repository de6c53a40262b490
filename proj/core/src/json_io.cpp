#include "grapheq/json_io.hpp"

#include <json.hpp>

#include "grapheq/graph6.hpp"

namespace grapheq {

using nlohmann::json;

namespace {

json coeffs_json(const IntPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.get_str());
  return a;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json checks_json(const StructuralChecks& c) {
  json j = json::object();
  for (std::size_t i = 0; i < StructuralChecks::kClauses; ++i) {
    const auto& r = c.clauses[i];
    j[std::string(StructuralChecks::kNames[i])] = r ? json(*r ? "pass" : "fail") : json("n/a");
  }
  j["i4_lhs"] = c.i4_lhs;
  j["i4_rhs"] = c.i4_rhs;
  return j;
}

}  // namespace

std::string poly_to_json(const IntPoly& p) { return dump(json{{"coeffs", coeffs_json(p)}}); }

IntPoly poly_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    std::vector<BigInt> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.emplace_back(c.get<std::string>());
    return IntPoly(std::move(coeffs));
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("poly json: ") + e.what());
  }
}

std::string factor_to_json(const FactorSet& factors, const RootCheck& roots) {
  json f = json::object();
  for (const auto& [m, p] : factors.factors) f[std::to_string(m)] = coeffs_json(p);
  json j;
  j["n"] = factors.n;
  j["factors"] = std::move(f);
  j["route"] = to_string(factors.route);
  j["root_check"] = {
      {"max_residual", roots.max_residual}, {"tolerance", roots.tolerance}, {"pass", roots.pass}};
  return dump(j);
}

std::string class_to_json(const ClassReport& report, bool include_timing) {
  json members = json::array();
  for (const auto& m : report.members) {
    members.push_back({{"graph6", emit_graph6(m.graph)},
                       {"description", m.description},
                       {"coeffs", coeffs_json(m.poly)},
                       {"checks", checks_json(m.checks)}});
  }
  json stats = {{"generated", report.stats.generated},
                {"pruned", report.stats.pruned},
                {"polynomial_tested", report.stats.polynomial_tested}};
  if (include_timing) stats["wall_seconds"] = report.stats.wall_seconds;
  json j;
  j["n"] = report.n;
  j["mode"] = to_string(report.mode);
  j["members"] = std::move(members);
  j["stats"] = std::move(stats);
  return dump(j);
}

std::string ledger_to_json(const std::vector<LedgerEntry>& entries) {
  json a = json::array();
  bool all = true;
  for (const auto& e : entries) {
    a.push_back({{"id", e.id},
                 {"source", e.source},
                 {"expected", e.expected},
                 {"computed", e.computed},
                 {"status", e.pass ? "pass" : "fail"}});
    all = all && e.pass;
  }
  return dump(json{{"entries", std::move(a)}, {"pass", all}});
}

std::string unicyclic_to_json(unsigned v, const std::vector<Graph>& graphs) {
  json a = json::array();
  for (const auto& g : graphs) {
    a.push_back({{"graph6", emit_graph6(g)}, {"description", describe_graph(g)}});
  }
  return dump(json{{"v", v}, {"count", graphs.size()}, {"graphs", std::move(a)}});
}

}  // namespace grapheq
