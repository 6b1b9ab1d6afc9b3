// JSON interchange for seeds, gradings, lifting data, fans, lifted seeds,
// and exchange graphs. Canonical output: nlohmann's default object ordering
// (sorted keys) with compact dump, so equal values always print identically.
#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "clift/case_studies.hpp"
#include "clift/grading.hpp"
#include "clift/lifting.hpp"
#include "clift/membership.hpp"
#include "clift/parse.hpp"
#include "clift/seed.hpp"

namespace clift {

using json = nlohmann::json;

inline VertexKind kind_from_string(const std::string& s) {
  if (s == "unfrozen") return VertexKind::Unfrozen;
  if (s == "semifrozen") return VertexKind::Semifrozen;
  if (s == "highlyfrozen") return VertexKind::HighlyFrozen;
  throw ParseError("unknown vertex kind: " + s);
}

inline json seed_to_json(const Seed& s) {
  json j;
  j["vertices"] = json::array();
  for (const auto& [v, k] : s.vertices())
    j["vertices"].push_back({{"id", v}, {"kind", to_string(k)}});
  j["matrix"] = {{"rows", s.matrix().rows()},
                 {"cols", s.matrix().cols()},
                 {"entries", s.matrix().entries()}};
  json cluster = json::object();
  for (const auto& [v, f] : s.cluster()) cluster[v] = f.to_string();
  j["cluster"] = cluster;
  j["provenance"] = s.provenance();
  if (!s.root_inverse().empty()) {
    json ri = json::object();
    for (const auto& [u, f] : s.root_inverse()) ri[u] = f.to_string();
    j["root_inverse"] = ri;
  }
  return j;
}

inline Seed seed_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("matrix"))
    throw ParseError("seed JSON must contain vertices and matrix");
  std::map<VertexId, VertexKind> vertices;
  for (const auto& v : j.at("vertices"))
    vertices[v.at("id").get<std::string>()] = kind_from_string(v.at("kind").get<std::string>());
  const json& m = j.at("matrix");
  ExtendedExchangeMatrix B(m.at("rows").get<std::vector<VertexId>>(),
                           m.at("cols").get<std::vector<VertexId>>(),
                           m.at("entries").get<std::vector<std::vector<long long>>>());
  std::map<VertexId, RationalFunction> cluster;
  if (j.contains("cluster"))
    for (const auto& [v, expr] : j.at("cluster").items())
      cluster[v] = parse_expression(expr.get<std::string>());
  std::vector<VertexId> provenance;
  if (j.contains("provenance")) provenance = j.at("provenance").get<std::vector<VertexId>>();
  std::map<VariableId, RationalFunction> root_inverse;
  if (j.contains("root_inverse"))
    for (const auto& [u, expr] : j.at("root_inverse").items())
      root_inverse[u] = parse_expression(expr.get<std::string>());
  return Seed(std::move(vertices), std::move(B), std::move(cluster), std::move(provenance),
              std::move(root_inverse));
}

inline json grading_to_json(const DegreeConfiguration& sigma) {
  std::set<BasisLabel> basis;
  json degrees = json::object();
  for (const auto& [v, d] : sigma.degrees) {
    json row = json::object();
    for (const auto& [l, c] : d.coords()) {
      basis.insert(l);
      row[l] = c;
    }
    degrees[v] = row;
  }
  return {{"basis", std::vector<BasisLabel>(basis.begin(), basis.end())},
          {"degrees", degrees}};
}

inline DegreeConfiguration grading_from_json(const json& j) {
  DegreeConfiguration sigma;
  for (const auto& [v, row] : j.at("degrees").items()) {
    DegreeVector d;
    for (const auto& [l, c] : row.items()) d.set(l, c.get<long long>());
    sigma.degrees[v] = d;
  }
  return sigma;
}

inline json lifting_data_to_json(const LiftingData& d) {
  return {{"D", d.D},
          {"nu", {{"rows", d.D}, {"cols", d.cols}, {"entries", d.nu}}},
          {"frozen_kind", to_string(d.frozen_kind)}};
}

inline LiftingData lifting_data_from_json(const json& j) {
  LiftingData d;
  d.D = j.at("D").get<std::vector<VertexId>>();
  const json& nu = j.at("nu");
  if (nu.contains("rows") && nu.at("rows").get<std::vector<VertexId>>() != d.D)
    throw MalformedNu("nu rows differ from D");
  d.cols = nu.at("cols").get<std::vector<VertexId>>();
  d.nu = nu.at("entries").get<std::vector<std::vector<long long>>>();
  if (j.contains("frozen_kind"))
    d.frozen_kind = kind_from_string(j.at("frozen_kind").get<std::string>());
  d.check_dimensions();
  return d;
}

inline json fan_to_json(const FanInput& f) {
  return {{"rank", f.rank}, {"rays", f.rays}, {"base_cone", f.base_cone}};
}

inline FanInput fan_from_json(const json& j) {
  FanInput f;
  f.rank = j.at("rank").get<int>();
  f.rays = j.at("rays").get<std::vector<std::vector<long long>>>();
  f.base_cone = j.at("base_cone").get<std::vector<int>>();
  return f;
}

inline json lift_report_to_json(const LiftReport& r) {
  json pairs = json::array();
  for (const auto& [a, b] : r.noncoprime_pairs) pairs.push_back({a, b});
  return {{"maximal_rank", r.maximal_rank},
          {"noncoprime_pairs", pairs},
          {"noncoprime_exchanges", r.noncoprime_exchanges},
          {"hypotheses_hold", r.hypotheses_hold()}};
}

inline json lifted_seed_to_json(const LiftedSeed& L) {
  return {{"seed", seed_to_json(L.seed)},
          {"base", seed_to_json(L.base)},
          {"lifting", lifting_data_to_json(L.data)},
          {"grading", grading_to_json(L.grading)},
          {"report", lift_report_to_json(L.report)}};
}

// A lifted-seed file is a seed file with "lifting" (and optionally "base",
// "grading") attached; reconstruct by re-running the lift.
inline LiftedSeed lifted_seed_from_json(const json& j) {
  if (!j.contains("base") || !j.contains("lifting"))
    throw ParseError("lifted seed JSON must contain base and lifting");
  return lift_seed(seed_from_json(j.at("base")), lifting_data_from_json(j.at("lifting")));
}

inline json graph_to_json(const ExchangeGraph& g) {
  json nodes = json::array();
  for (const auto& [key, seed] : g.nodes)
    nodes.push_back({{"key-hash", fnv1a64(key)}, {"provenance", seed.provenance()}});
  json edges = json::array();
  for (const auto& [a, k, b] : g.edges) edges.push_back({fnv1a64(a), k, fnv1a64(b)});
  return {{"nodes", nodes},
          {"edges", edges},
          {"complete", g.complete},
          {"cluster_variables", std::vector<std::string>(g.cluster_variables.begin(),
                                                         g.cluster_variables.end())}};
}

inline json fixture_to_json(const Fixture& f) {
  json j;
  j["name"] = f.name;
  j["seed"] = seed_to_json(f.seed);
  if (f.lifting) j["lifting"] = lifting_data_to_json(*f.lifting);
  if (f.fan) j["fan"] = fan_to_json(*f.fan);
  j["expected"] = f.expected;
  return j;
}

inline std::string canonical_dump(const json& j) { return j.dump(2); }

}  // namespace clift
