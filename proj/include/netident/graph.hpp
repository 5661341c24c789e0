#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace netident {

/// Nodes are numbered 1..n throughout, matching the usual convention for
/// network matrices (entry G_{ij} is the edge j -> i).
using NodeId = int;

struct Edge {
  NodeId from = 0;
  NodeId to = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Zero/nonzero pattern of a network matrix as a directed graph.
///
/// Invariants enforced at construction: node ids in 1..n, no self-loops,
/// no duplicate edges, no isolated nodes.
class NetworkPattern {
 public:
  NetworkPattern(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ <= 0) throw ValidationError("node count must be positive");
    for (const Edge& e : edges_) {
      if (e.from < 1 || e.from > n_ || e.to < 1 || e.to > n_)
        throw ValidationError("edge (" + std::to_string(e.from) + "," +
                              std::to_string(e.to) + ") out of range 1.." +
                              std::to_string(n_));
      if (e.from == e.to)
        throw ValidationError("self-loop forbidden at node " + std::to_string(e.from));
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
      throw ValidationError("duplicate edge");

    in_.resize(n_ + 1);
    out_.resize(n_ + 1);
    for (const Edge& e : edges_) {
      out_[e.from].push_back(e.to);
      in_[e.to].push_back(e.from);
    }
    for (NodeId v = 1; v <= n_; ++v) {
      std::sort(in_[v].begin(), in_[v].end());
      std::sort(out_[v].begin(), out_[v].end());
      if (in_[v].empty() && out_[v].empty())
        throw ValidationError("isolated node " + std::to_string(v) +
                              " (no incident edges)");
    }
  }

  int node_count() const { return n_; }

  /// Edges in canonical (from, to) order.
  const std::vector<Edge>& edges() const { return edges_; }

  const std::vector<NodeId>& in_neighbors(NodeId v) const {
    check_node(v);
    return in_[v];
  }

  const std::vector<NodeId>& out_neighbors(NodeId v) const {
    check_node(v);
    return out_[v];
  }

  bool has_edge(NodeId from, NodeId to) const {
    if (from < 1 || from > n_ || to < 1 || to > n_) return false;
    const auto& nbrs = out_[from];
    return std::binary_search(nbrs.begin(), nbrs.end(), to);
  }

  friend bool operator==(const NetworkPattern& a, const NetworkPattern& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void check_node(NodeId v) const {
    if (v < 1 || v > n_)
      throw ValidationError("node " + std::to_string(v) + " out of range 1.." +
                            std::to_string(n_));
  }

  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<NodeId>> in_;
  std::vector<std::vector<NodeId>> out_;
};

/// Pattern with every edge direction flipped.
inline NetworkPattern reverse(const NetworkPattern& p) {
  std::vector<Edge> rev;
  rev.reserve(p.edges().size());
  for (const Edge& e : p.edges()) rev.push_back({e.to, e.from});
  return NetworkPattern(p.node_count(), std::move(rev));
}

/// A node together with the neighbors certifying its dource or dink status.
/// For a dource the witnesses are out-neighbors reached by every in-neighbor;
/// for a dink they are in-neighbors reaching every out-neighbor. `witness`
/// is the lowest-numbered one.
struct ClassWitness {
  NodeId node = 0;
  NodeId witness = 0;
  std::vector<NodeId> all_witnesses;
};

struct NodeClassification {
  std::vector<NodeId> sources;   // no incoming edges
  std::vector<NodeId> sinks;     // no outgoing edges
  std::vector<NodeId> internal;  // everything else
  std::vector<ClassWitness> dources;
  std::vector<ClassWitness> dinks;

  bool is_source(NodeId v) const { return contains(sources, v); }
  bool is_sink(NodeId v) const { return contains(sinks, v); }
  bool is_internal(NodeId v) const { return contains(internal, v); }
  bool is_dource(NodeId v) const { return find_witness(dources, v) != nullptr; }
  bool is_dink(NodeId v) const { return find_witness(dinks, v) != nullptr; }

  const ClassWitness* dource_witness(NodeId v) const { return find_witness(dources, v); }
  const ClassWitness* dink_witness(NodeId v) const { return find_witness(dinks, v); }

 private:
  static bool contains(const std::vector<NodeId>& s, NodeId v) {
    return std::binary_search(s.begin(), s.end(), v);
  }
  static const ClassWitness* find_witness(const std::vector<ClassWitness>& ws, NodeId v) {
    for (const auto& w : ws)
      if (w.node == v) return &w;
    return nullptr;
  }
};

/// Classify every node of the pattern. Dources and dinks are sought among
/// internal nodes only: a node with both in- and out-neighbors is a dource
/// when some out-neighbor receives an edge from every one of its
/// in-neighbors, and a dink when some in-neighbor sends an edge to every
/// one of its out-neighbors.
inline NodeClassification classify(const NetworkPattern& p) {
  NodeClassification c;
  for (NodeId v = 1; v <= p.node_count(); ++v) {
    const auto& in = p.in_neighbors(v);
    const auto& out = p.out_neighbors(v);
    if (in.empty()) {
      c.sources.push_back(v);
      continue;
    }
    if (out.empty()) {
      c.sinks.push_back(v);
      continue;
    }
    c.internal.push_back(v);

    ClassWitness dource{v, 0, {}};
    for (NodeId o : out) {
      const bool all_connected = std::all_of(in.begin(), in.end(), [&](NodeId i) {
        return p.has_edge(i, o);
      });
      if (all_connected) dource.all_witnesses.push_back(o);
    }
    if (!dource.all_witnesses.empty()) {
      dource.witness = dource.all_witnesses.front();
      c.dources.push_back(std::move(dource));
    }

    ClassWitness dink{v, 0, {}};
    for (NodeId i : in) {
      const bool covers_all = std::all_of(out.begin(), out.end(), [&](NodeId o) {
        return p.has_edge(i, o);
      });
      if (covers_all) dink.all_witnesses.push_back(i);
    }
    if (!dink.all_witnesses.empty()) {
      dink.witness = dink.all_witnesses.front();
      c.dinks.push_back(std::move(dink));
    }
  }
  return c;
}

/// Node partition around a dource D: the witness out-neighbor O, the full
/// in-neighbor set I, and the remaining nodes S. D, O, I, S partition 1..n
/// (O cannot be an in-neighbor of D, or the witness property would force a
/// self-loop).
struct DourcePartition {
  NodeId dource = 0;
  NodeId witness = 0;
  std::vector<NodeId> in_neighbors;
  std::vector<NodeId> rest;
};

inline DourcePartition dource_partition(const NetworkPattern& p, NodeId d) {
  const NodeClassification c = classify(p);
  const ClassWitness* w = c.dource_witness(d);
  if (w == nullptr)
    throw ValidationError("node " + std::to_string(d) + " is not a dource");

  DourcePartition part;
  part.dource = d;
  part.witness = w->witness;
  part.in_neighbors = p.in_neighbors(d);
  for (NodeId v = 1; v <= p.node_count(); ++v) {
    if (v == d || v == part.witness) continue;
    if (std::binary_search(part.in_neighbors.begin(), part.in_neighbors.end(), v)) continue;
    part.rest.push_back(v);
  }
  return part;
}

}  // namespace netident
