#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "netident/graph.hpp"

namespace netident {

/// Excitation and measurement pattern: the sets of excited and measured
/// nodes. Cardinality is |excited| + |measured|.
struct Emp {
  std::vector<NodeId> excited;
  std::vector<NodeId> measured;

  Emp() = default;
  Emp(std::vector<NodeId> b, std::vector<NodeId> c)
      : excited(std::move(b)), measured(std::move(c)) {
    normalize(excited);
    normalize(measured);
  }

  int cardinality() const {
    return static_cast<int>(excited.size() + measured.size());
  }

  bool excites(NodeId v) const {
    return std::binary_search(excited.begin(), excited.end(), v);
  }
  bool measures(NodeId v) const {
    return std::binary_search(measured.begin(), measured.end(), v);
  }

  friend bool operator==(const Emp&, const Emp&) = default;

 private:
  static void normalize(std::vector<NodeId>& s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
};

/// Everything excited and everything measured; identifiable for every
/// well-posed pattern.
inline Emp full_double_emp(const NetworkPattern& p) {
  std::vector<NodeId> all(p.node_count());
  for (int v = 1; v <= p.node_count(); ++v) all[v - 1] = v;
  return Emp(all, all);
}

enum class ViolationKind {
  NoExcitation,
  NoMeasurement,
  SourceNotExcited,
  DourceNotExcited,
  SinkNotMeasured,
  DinkNotMeasured,
  NodeUncovered,
};

inline const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NoExcitation: return "NoExcitation";
    case ViolationKind::NoMeasurement: return "NoMeasurement";
    case ViolationKind::SourceNotExcited: return "SourceNotExcited";
    case ViolationKind::DourceNotExcited: return "DourceNotExcited";
    case ViolationKind::SinkNotMeasured: return "SinkNotMeasured";
    case ViolationKind::DinkNotMeasured: return "DinkNotMeasured";
    case ViolationKind::NodeUncovered: return "NodeUncovered";
  }
  return "?";
}

struct NecessaryViolation {
  ViolationKind kind;
  NodeId node = 0;  // 0 when the violation is not tied to a node

  friend bool operator==(const NecessaryViolation&, const NecessaryViolation&) = default;

  std::string describe() const {
    std::string s = to_string(kind);
    if (node != 0) s += "(" + std::to_string(node) + ")";
    return s;
  }
};

/// Check the four necessary conditions for generic identifiability:
///  1. at least one node excited and one measured,
///  2. all sources and dources excited,
///  3. all sinks and dinks measured,
///  4. every node excited or measured.
/// Returns the empty list iff all hold.
inline std::vector<NecessaryViolation> necessary_check(const NetworkPattern& p,
                                                       const NodeClassification& c,
                                                       const Emp& emp) {
  for (NodeId v : emp.excited)
    if (v < 1 || v > p.node_count())
      throw ValidationError("excited node " + std::to_string(v) + " out of range");
  for (NodeId v : emp.measured)
    if (v < 1 || v > p.node_count())
      throw ValidationError("measured node " + std::to_string(v) + " out of range");

  std::vector<NecessaryViolation> violations;
  if (emp.excited.empty()) violations.push_back({ViolationKind::NoExcitation});
  if (emp.measured.empty()) violations.push_back({ViolationKind::NoMeasurement});

  for (NodeId v : c.sources)
    if (!emp.excites(v)) violations.push_back({ViolationKind::SourceNotExcited, v});
  for (const auto& w : c.dources)
    if (!emp.excites(w.node)) violations.push_back({ViolationKind::DourceNotExcited, w.node});
  for (NodeId v : c.sinks)
    if (!emp.measures(v)) violations.push_back({ViolationKind::SinkNotMeasured, v});
  for (const auto& w : c.dinks)
    if (!emp.measures(w.node)) violations.push_back({ViolationKind::DinkNotMeasured, w.node});

  for (NodeId v = 1; v <= p.node_count(); ++v)
    if (!emp.excites(v) && !emp.measures(v))
      violations.push_back({ViolationKind::NodeUncovered, v});

  return violations;
}

inline std::vector<NecessaryViolation> necessary_check(const NetworkPattern& p, const Emp& emp) {
  return necessary_check(p, classify(p), emp);
}

/// Cardinality window for a valid EMP: at least n, at most 2n - f - s with
/// f sources and s sinks.
struct CardinalityBounds {
  int lower = 0;
  int upper = 0;
};

inline CardinalityBounds cardinality_bounds(const NetworkPattern& p) {
  const NodeClassification c = classify(p);
  const int n = p.node_count();
  const int f = static_cast<int>(c.sources.size());
  const int s = static_cast<int>(c.sinks.size());
  return {n, 2 * n - f - s};
}

}  // namespace netident
