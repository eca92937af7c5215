#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "errors.hpp"
#include "polyhedron.hpp"
#include "solver.hpp"

namespace polytet {

namespace json_detail {

inline nlohmann::json parse_or_throw(const std::string& text, const char* what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(1, static_cast<int>(e.byte), std::string("invalid JSON for ") + what);
  }
}

inline void require(bool cond, const char* what, const std::string& msg) {
  if (!cond) throw ParseError(1, 1, std::string(what) + ": " + msg);
}

}  // namespace json_detail

// {"tets": [[a,b,c,d], ...]} with each tet ascending; parsing canonicalizes
// tuple order and sorts the list.
inline std::string triangulation_to_json(const Triangulation& T) {
  nlohmann::json j;
  j["tets"] = nlohmann::json::array();
  for (const Tet& t : T) j["tets"].push_back({t.v[0], t.v[1], t.v[2], t.v[3]});
  return j.dump();
}

inline Triangulation triangulation_from_json(const std::string& text) {
  using json_detail::require;
  nlohmann::json j = json_detail::parse_or_throw(text, "triangulation");
  require(j.is_object() && j.contains("tets"), "triangulation", "expected {\"tets\": [...]}");
  require(j["tets"].is_array(), "triangulation", "\"tets\" must be an array");
  Triangulation T;
  for (const auto& item : j["tets"]) {
    require(item.is_array() && item.size() == 4, "triangulation",
            "each tet must be an array of 4 vertex indices");
    for (const auto& x : item)
      require(x.is_number_integer(), "triangulation", "vertex indices must be integers");
    try {
      T.push_back(Tet::of(item[0].get<int>(), item[1].get<int>(), item[2].get<int>(),
                          item[3].get<int>()));
    } catch (const InvalidParams& e) {
      throw ParseError(1, 1, std::string("triangulation: ") + e.what());
    }
  }
  std::sort(T.begin(), T.end());
  return T;
}

// {"triangles": [[a,b,c], ...]} with each triangle ascending; parsing
// canonicalizes and sorts.
inline std::string surface_to_json(const std::vector<Triangle>& S) {
  nlohmann::json j;
  j["triangles"] = nlohmann::json::array();
  for (const Triangle& t : S) j["triangles"].push_back({t.v[0], t.v[1], t.v[2]});
  return j.dump();
}

inline std::vector<Triangle> surface_from_json(const std::string& text) {
  using json_detail::require;
  nlohmann::json j = json_detail::parse_or_throw(text, "surface");
  require(j.is_object() && j.contains("triangles"), "surface",
          "expected {\"triangles\": [...]}");
  require(j["triangles"].is_array(), "surface", "\"triangles\" must be an array");
  std::vector<Triangle> S;
  for (const auto& item : j["triangles"]) {
    require(item.is_array() && item.size() == 3, "surface",
            "each triangle must be an array of 3 vertex indices");
    for (const auto& x : item)
      require(x.is_number_integer(), "surface", "vertex indices must be integers");
    try {
      S.push_back(Triangle::of(item[0].get<int>(), item[1].get<int>(), item[2].get<int>()));
    } catch (const InvalidParams& e) {
      throw ParseError(1, 1, std::string("surface: ") + e.what());
    }
  }
  std::sort(S.begin(), S.end());
  return S;
}

inline const char* status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal:
      return "OPTIMAL";
    case SolveStatus::Feasible:
      return "FEASIBLE";
    case SolveStatus::Infeasible:
      return "INFEASIBLE";
    default:
      return "LIMIT";
  }
}

// {"status": ..., "value": ..., "witness": {"tets": ...}, "stats": {...}};
// value/witness appear only when present, stats only when requested.
inline std::string result_to_json(const SolveResult& r, bool with_stats) {
  nlohmann::json j;
  j["status"] = status_name(r.status);
  if (r.value) j["value"] = *r.value;
  if (r.witness) {
    nlohmann::json w;
    w["tets"] = nlohmann::json::array();
    for (const Tet& t : *r.witness) w["tets"].push_back({t.v[0], t.v[1], t.v[2], t.v[3]});
    j["witness"] = w;
  }
  if (with_stats) {
    j["stats"] = {{"nodes", r.stats.nodes},
                  {"candidates", r.stats.candidates},
                  {"millis", r.stats.millis}};
  }
  return j.dump();
}

}  // namespace polytet
