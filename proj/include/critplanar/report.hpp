#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "critplanar/criticality.hpp"

namespace critplanar {

// Reports are JSON with a fixed key order so that golden files diff cleanly.

inline std::string serialize_report(const CriticalityReport& r) {
  nlohmann::ordered_json doc;
  doc["format"] = "critplanar-report/1";
  doc["k"] = r.k;
  doc["chromatic"] = r.chromatic;
  doc["chromatic_is_lower_bound"] = r.chromatic_exceeds_bound;
  doc["chromatic_vs_k"] = r.chromatic_exceeds_bound || r.chromatic > r.k ? "greater"
                          : r.chromatic == r.k                          ? "equal"
                                                                        : "less";
  doc["planar"] = r.planar;
  doc["is_k_critical"] = r.is_k_critical;
  doc["failing_edges"] = nlohmann::ordered_json::array();
  for (const auto& e : r.failing_edges) doc["failing_edges"].push_back({e.u, e.v});
  doc["witnesses"] = nlohmann::ordered_json::array();
  for (const auto& w : r.witnesses) {
    nlohmann::ordered_json item;
    item["edge"] = {w.edge.u, w.edge.v};
    item["coloring"] = w.coloring.colors;
    doc["witnesses"].push_back(std::move(item));
  }
  return doc.dump(2) + "\n";
}

inline CriticalityReport parse_report(std::string_view text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    CriticalityReport r;
    r.k = doc.at("k").get<int>();
    r.chromatic = doc.at("chromatic").get<int>();
    r.chromatic_exceeds_bound = doc.at("chromatic_is_lower_bound").get<bool>();
    r.planar = doc.at("planar").get<bool>();
    r.is_k_critical = doc.at("is_k_critical").get<bool>();
    for (const auto& e : doc.at("failing_edges")) r.failing_edges.push_back({e.at(0).get<VertexId>(), e.at(1).get<VertexId>()});
    for (const auto& w : doc.at("witnesses")) {
      EdgeWitness item;
      item.edge = {w.at("edge").at(0).get<VertexId>(), w.at("edge").at(1).get<VertexId>()};
      item.coloring.colors = w.at("coloring").get<std::vector<Color>>();
      r.witnesses.push_back(std::move(item));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::DecodeError, std::string("malformed report: ") + e.what());
  }
}

}  // namespace critplanar
