#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "netident/emp.hpp"
#include "netident/graph.hpp"
#include "netident/identifiability.hpp"
#include "netident/search.hpp"

namespace netident {

inline constexpr const char* kToolName = "netident";
inline constexpr const char* kToolVersion = "0.1.0";

/// On-disk description of a network: node count, edge list, and optionally
/// an EMP and a seed. Node ids are 1-based, matching the library.
struct NetworkDocument {
  std::string name;
  int n = 0;
  std::vector<Edge> edges;
  std::optional<Emp> emp;
  std::optional<std::uint64_t> seed;

  NetworkPattern pattern() const { return NetworkPattern(n, edges); }

  friend bool operator==(const NetworkDocument&, const NetworkDocument&) = default;
};

inline NetworkDocument parse_document(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("document must be a JSON object");

  NetworkDocument out;
  out.name = doc.value("name", std::string{});
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    throw ValidationError("missing integer field \"n\"");
  out.n = doc["n"].get<int>();
  if (!doc.contains("edges") || !doc["edges"].is_array())
    throw ValidationError("missing array field \"edges\"");
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw ValidationError("each edge must be a [from, to] pair of integers");
    out.edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  if (doc.contains("emp")) {
    const auto& emp = doc["emp"];
    if (!emp.is_object() || !emp.contains("excited") || !emp.contains("measured"))
      throw ValidationError("\"emp\" must hold \"excited\" and \"measured\" node lists");
    Emp parsed(emp["excited"].get<std::vector<NodeId>>(),
               emp["measured"].get<std::vector<NodeId>>());
    out.emp = std::move(parsed);
  }
  if (doc.contains("seed")) out.seed = doc["seed"].get<std::uint64_t>();
  return out;
}

inline std::string serialize_document(const NetworkDocument& doc) {
  nlohmann::json j;
  j["name"] = doc.name;
  j["n"] = doc.n;
  auto edges = nlohmann::json::array();
  for (const Edge& e : doc.edges) edges.push_back({e.from, e.to});
  j["edges"] = std::move(edges);
  if (doc.emp) {
    j["emp"] = {{"excited", doc.emp->excited}, {"measured", doc.emp->measured}};
  }
  if (doc.seed) j["seed"] = *doc.seed;
  return j.dump(2);
}

// --- report rendering ---------------------------------------------------

inline nlohmann::json classification_json(const NodeClassification& c, bool verbose) {
  nlohmann::json j;
  j["sources"] = c.sources;
  j["sinks"] = c.sinks;
  j["internal"] = c.internal;
  auto witnesses = [&](const std::vector<ClassWitness>& ws) {
    auto arr = nlohmann::json::array();
    for (const auto& w : ws) {
      nlohmann::json item = {{"node", w.node}, {"witness", w.witness}};
      if (verbose) item["witnesses"] = w.all_witnesses;
      arr.push_back(std::move(item));
    }
    return arr;
  };
  j["dources"] = witnesses(c.dources);
  j["dinks"] = witnesses(c.dinks);
  return j;
}

inline nlohmann::json violations_json(const std::vector<NecessaryViolation>& violations) {
  auto arr = nlohmann::json::array();
  for (const auto& v : violations) {
    nlohmann::json item = {{"kind", to_string(v.kind)}};
    if (v.node != 0) item["node"] = v.node;
    arr.push_back(std::move(item));
  }
  return arr;
}

inline nlohmann::json verdict_json(const IdentVerdict& v) {
  return {{"identifiable", v.identifiable},
          {"achieved_rank", v.achieved_rank},
          {"required_rank", v.required_rank},
          {"trials", v.trials},
          {"per_trial_ranks", v.per_trial_ranks},
          {"violations", violations_json(v.violations)}};
}

inline nlohmann::json emp_json(const Emp& emp) {
  return {{"excited", emp.excited},
          {"measured", emp.measured},
          {"cardinality", emp.cardinality()}};
}

inline nlohmann::json search_json(const SearchResult& r) {
  nlohmann::json j;
  j["found"] = r.emp.has_value();
  if (r.emp) j["emp"] = emp_json(*r.emp);
  j["proven_minimal"] = r.proven_minimal;
  j["explored"] = r.explored;
  j["budget_exhausted"] = r.budget_exhausted;
  return j;
}

inline nlohmann::json provenance_json(std::uint64_t seed, int trials) {
  return {{"tool", kToolName}, {"version", kToolVersion}, {"seed", seed}, {"trials", trials}};
}

inline std::string node_list(const std::vector<NodeId>& nodes) {
  if (nodes.empty()) return "none";
  std::ostringstream os;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i) os << ", ";
    os << nodes[i];
  }
  return os.str();
}

inline std::string classification_text(const NodeClassification& c, bool verbose) {
  std::ostringstream os;
  os << "sources: " << node_list(c.sources) << "\n";
  os << "sinks: " << node_list(c.sinks) << "\n";
  os << "internal: " << node_list(c.internal) << "\n";
  os << "dources: ";
  if (c.dources.empty()) {
    os << "none\n";
  } else {
    for (std::size_t i = 0; i < c.dources.size(); ++i) {
      const auto& w = c.dources[i];
      if (i) os << "; ";
      os << w.node << " (witness out-neighbor ";
      os << (verbose ? node_list(w.all_witnesses) : std::to_string(w.witness)) << ")";
    }
    os << "\n";
  }
  os << "dinks: ";
  if (c.dinks.empty()) {
    os << "none\n";
  } else {
    for (std::size_t i = 0; i < c.dinks.size(); ++i) {
      const auto& w = c.dinks[i];
      if (i) os << "; ";
      os << w.node << " (witness in-neighbor ";
      os << (verbose ? node_list(w.all_witnesses) : std::to_string(w.witness)) << ")";
    }
    os << "\n";
  }
  return os.str();
}

/// Graphviz rendering with one style per node class. Dources and dinks are
/// highlighted since they pin down the excitation/measurement requirements.
inline std::string export_dot(const NetworkPattern& pattern, const NodeClassification& c) {
  std::ostringstream os;
  os << "digraph network {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=circle];\n";
  for (NodeId v = 1; v <= pattern.node_count(); ++v) {
    std::string style;
    std::string label = std::to_string(v);
    if (c.is_source(v)) {
      style = "shape=invtriangle, fillcolor=\"#cfe8ff\", style=filled";
      label += "\\nsource";
    } else if (c.is_sink(v)) {
      style = "shape=triangle, fillcolor=\"#ffe0b3\", style=filled";
      label += "\\nsink";
    } else {
      const bool dource = c.is_dource(v);
      const bool dink = c.is_dink(v);
      if (dource && dink) {
        style = "shape=doublecircle, fillcolor=\"#e6ccff\", style=filled";
        label += "\\ndource+dink";
      } else if (dource) {
        style = "shape=doublecircle, fillcolor=\"#ffcccc\", style=filled";
        label += "\\ndource";
      } else if (dink) {
        style = "shape=doublecircle, fillcolor=\"#ccffcc\", style=filled";
        label += "\\ndink";
      } else {
        style = "fillcolor=\"#f0f0f0\", style=filled";
      }
    }
    os << "  " << v << " [" << style << ", label=\"" << label << "\"];\n";
  }
  for (const Edge& e : pattern.edges()) os << "  " << e.from << " -> " << e.to << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace netident
