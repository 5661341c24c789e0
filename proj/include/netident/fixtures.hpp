#pragma once

#include "netident/graph.hpp"

namespace netident::fixtures {

/// Five-node network with two sources (3, 4) feeding node 1 and the sink 2
/// over parallel paths, plus the sink 5. Node 1 is a dource with witness 2.
inline NetworkPattern example_a() {
  return NetworkPattern(5, {{3, 1}, {4, 1}, {1, 2}, {3, 2}, {4, 2}, {1, 5}});
}

/// Example A with the feedback edge 2 -> 3 added: node 4 becomes the only
/// source, node 5 the only sink, and node 1 stays the only dource.
inline NetworkPattern example_b() {
  return NetworkPattern(5, {{3, 1}, {4, 1}, {1, 2}, {3, 2}, {4, 2}, {2, 3}, {1, 5}});
}

/// Smallest nontrivial network: one edge 1 -> 2.
inline NetworkPattern single_edge() { return NetworkPattern(2, {{1, 2}}); }

/// Chain 1 -> 2 -> 3 with the shortcut 1 -> 3; node 2 is both a dource and
/// a dink.
inline NetworkPattern chain_with_shortcut() {
  return NetworkPattern(3, {{1, 2}, {2, 3}, {1, 3}});
}

}  // namespace netident::fixtures
