#pragma once

// Stable JSON shapes for certificates, reports and sweep records. All output
// goes through nlohmann ordered_json with integer values only, so identical
// runs serialize byte-identically.

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "chicrown/colorers.hpp"
#include "chicrown/graph6.hpp"

namespace chicrown {

using json = nlohmann::ordered_json;

inline json to_json(const VertexSet& s) { return json(s.to_vector()); }

inline json to_json(const Embedding& e) {
  json j;
  j["pattern"] = e.pattern.name;
  j["image"] = e.image;
  return j;
}

inline json to_json(const HoleWitness& h) {
  json j;
  j["kind"] = h.kind == HoleWitness::Kind::Hole ? "hole" : "antihole";
  j["cycle"] = h.cycle;
  return j;
}

inline json to_json(const CheckWitness& w) {
  json j;
  j["kind"] = w.kind;
  j["vertices"] = w.vertices;
  j["set"] = to_json(w.set);
  if (w.hole) j["hole"] = to_json(*w.hole);
  if (w.embedding) j["embedding"] = to_json(*w.embedding);
  if (!w.note.empty()) j["note"] = w.note;
  return j;
}

inline json to_json(const StructureReport& r) {
  json arr = json::array();
  for (const ClaimCheck& c : r.checks) {
    json j;
    j["id"] = c.id;
    j["pass"] = c.pass;
    if (c.witness) j["witness"] = to_json(*c.witness);
    arr.push_back(std::move(j));
  }
  return arr;
}

inline json to_json(const TraceStep& s) {
  json j;
  j["step"] = s.step;
  j["vertices"] = to_json(s.vertices);
  j["palette"] = s.palette;
  j["range"] = json::array({s.lo, s.hi});
  j["budget"] = s.budget;
  j["method"] = s.method;
  if (s.method == "reuse") {
    j["reuse_of"] = s.reuse_of;
    j["reuse_against"] = to_json(s.reuse_against);
    j["justification"] = s.justification;
  } else if (!s.justification.empty()) {
    j["justification"] = s.justification;
  }
  return j;
}

inline json to_json(const ColoredCertificate& c) {
  json j;
  j["scheme"] = c.scheme;
  j["branch"] = c.branch;
  j["omega"] = c.omega;
  j["bound"] = c.bound;
  j["bound_formula"] = c.bound_formula;
  j["colors"] = c.coloring.colors;
  j["palette_size"] = c.coloring.palette_size;
  json trace = json::array();
  for (const TraceStep& s : c.trace) trace.push_back(to_json(s));
  j["trace"] = std::move(trace);
  j["claims"] = to_json(c.claims);
  j["violation"] = c.violation ? json(*c.violation) : json(nullptr);
  return j;
}

/// Rebuilds a certificate from its JSON shape (for reload re-validation).
inline ColoredCertificate certificate_from_json(const json& j) {
  ColoredCertificate c;
  c.scheme = j.at("scheme").get<std::string>();
  c.branch = j.value("branch", std::string{});
  c.omega = j.at("omega").get<int>();
  c.bound = j.at("bound").get<long long>();
  c.bound_formula = j.value("bound_formula", std::string{});
  c.coloring.colors = j.at("colors").get<std::vector<int>>();
  c.coloring.palette_size = j.at("palette_size").get<int>();
  for (const json& t : j.at("trace")) {
    TraceStep s;
    s.step = t.at("step").get<std::string>();
    for (int v : t.at("vertices").get<std::vector<int>>()) s.vertices.add(v);
    s.palette = t.at("palette").get<std::string>();
    s.lo = t.at("range")[0].get<int>();
    s.hi = t.at("range")[1].get<int>();
    s.budget = t.at("budget").get<long long>();
    s.method = t.at("method").get<std::string>();
    if (t.contains("reuse_of")) s.reuse_of = t.at("reuse_of").get<std::string>();
    if (t.contains("reuse_against"))
      for (int v : t.at("reuse_against").get<std::vector<int>>()) s.reuse_against.add(v);
    if (t.contains("justification")) s.justification = t.at("justification").get<std::string>();
    c.trace.push_back(std::move(s));
  }
  for (const json& cl : j.at("claims")) {
    ClaimCheck check;
    check.id = cl.at("id").get<std::string>();
    check.pass = cl.at("pass").get<bool>();
    c.claims.checks.push_back(std::move(check));
  }
  if (!j.at("violation").is_null()) c.violation = j.at("violation").get<std::string>();
  return c;
}

}  // namespace chicrown
