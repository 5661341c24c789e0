#include "netident/graph.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "netident/fixtures.hpp"
#include "netident/rng.hpp"
#include "support/test_support.hpp"

namespace netident {
namespace {

using testsupport::random_pattern;

TEST(PatternValidation, RejectsSelfLoop) {
  EXPECT_THROW(NetworkPattern(3, {{1, 1}}), ValidationError);
}

TEST(PatternValidation, RejectsDuplicateEdge) {
  EXPECT_THROW(NetworkPattern(3, {{1, 2}, {1, 2}, {2, 3}}), ValidationError);
}

TEST(PatternValidation, RejectsOutOfRangeNode) {
  EXPECT_THROW(NetworkPattern(3, {{1, 4}}), ValidationError);
  EXPECT_THROW(NetworkPattern(3, {{0, 2}}), ValidationError);
}

TEST(PatternValidation, RejectsIsolatedNode) {
  // node 3 has no incident edge
  EXPECT_THROW(NetworkPattern(3, {{1, 2}}), ValidationError);
}

TEST(Classify, ExampleA) {
  const auto c = classify(fixtures::example_a());
  EXPECT_EQ(c.sources, (std::vector<NodeId>{3, 4}));
  EXPECT_EQ(c.sinks, (std::vector<NodeId>{2, 5}));
  EXPECT_EQ(c.internal, (std::vector<NodeId>{1}));
  ASSERT_EQ(c.dources.size(), 1u);
  EXPECT_EQ(c.dources[0].node, 1);
  EXPECT_EQ(c.dources[0].witness, 2);
  EXPECT_TRUE(c.dinks.empty());
}

TEST(Classify, ExampleB) {
  const auto c = classify(fixtures::example_b());
  EXPECT_EQ(c.sources, (std::vector<NodeId>{4}));
  EXPECT_EQ(c.sinks, (std::vector<NodeId>{5}));
  EXPECT_EQ(c.internal, (std::vector<NodeId>{1, 2, 3}));
  ASSERT_EQ(c.dources.size(), 1u);
  EXPECT_EQ(c.dources[0].node, 1);
  EXPECT_TRUE(c.dinks.empty());
}

TEST(Classify, ChainWithShortcutIsBothDourceAndDink) {
  const auto c = classify(fixtures::chain_with_shortcut());
  ASSERT_EQ(c.dources.size(), 1u);
  EXPECT_EQ(c.dources[0].node, 2);
  EXPECT_EQ(c.dources[0].witness, 3);
  ASSERT_EQ(c.dinks.size(), 1u);
  EXPECT_EQ(c.dinks[0].node, 2);
  EXPECT_EQ(c.dinks[0].witness, 1);
}

TEST(Classify, SingleEdgeHasNoInternalNodes) {
  const auto c = classify(fixtures::single_edge());
  EXPECT_EQ(c.sources, (std::vector<NodeId>{1}));
  EXPECT_EQ(c.sinks, (std::vector<NodeId>{2}));
  EXPECT_TRUE(c.internal.empty());
  EXPECT_TRUE(c.dources.empty());
  EXPECT_TRUE(c.dinks.empty());
}

TEST(Neighbors, ExampleFixtures) {
  const auto a = fixtures::example_a();
  EXPECT_EQ(a.in_neighbors(1), (std::vector<NodeId>{3, 4}));
  EXPECT_EQ(a.out_neighbors(1), (std::vector<NodeId>{2, 5}));

  const auto b = fixtures::example_b();
  EXPECT_EQ(b.in_neighbors(3), (std::vector<NodeId>{2}));
  EXPECT_EQ(b.out_neighbors(3), (std::vector<NodeId>{1, 2}));

  for (NodeId s : classify(a).sources) EXPECT_TRUE(a.in_neighbors(s).empty());
  EXPECT_THROW(a.in_neighbors(6), ValidationError);
}

TEST(Reverse, ExampleAEdgeList) {
  const auto rev = reverse(fixtures::example_a());
  const std::vector<Edge> expected = {{1, 3}, {1, 4}, {2, 1}, {2, 3}, {2, 4}, {5, 1}};
  std::vector<Edge> sorted = expected;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(rev.edges(), sorted);

  const auto c = classify(rev);
  EXPECT_EQ(c.sources, (std::vector<NodeId>{2, 5}));
  EXPECT_EQ(c.sinks, (std::vector<NodeId>{3, 4}));
  EXPECT_TRUE(c.dources.empty());
  ASSERT_EQ(c.dinks.size(), 1u);
  EXPECT_EQ(c.dinks[0].node, 1);
}

TEST(Reverse, IsAnInvolution) {
  RandomStream rng(2024, 0);
  for (int i = 0; i < 50; ++i) {
    const auto p = random_pattern(rng, 2, 12, 0.15, 0.6);
    EXPECT_EQ(reverse(reverse(p)), p);
  }
}

TEST(Duality, ReversalSwapsAllClasses) {
  RandomStream rng(77, 0);
  for (int i = 0; i < 200; ++i) {
    const auto p = random_pattern(rng, 2, 12, 0.1, 0.6);
    const auto c = classify(p);
    const auto cr = classify(reverse(p));

    EXPECT_EQ(c.sources, cr.sinks);
    EXPECT_EQ(c.sinks, cr.sources);
    EXPECT_EQ(c.internal, cr.internal);

    auto nodes_of = [](const std::vector<ClassWitness>& ws) {
      std::vector<NodeId> nodes;
      for (const auto& w : ws) nodes.push_back(w.node);
      return nodes;
    };
    EXPECT_EQ(nodes_of(c.dources), nodes_of(cr.dinks));
    EXPECT_EQ(nodes_of(c.dinks), nodes_of(cr.dources));
  }
}

TEST(Classify, PartitionCoversAllNodes) {
  RandomStream rng(31337, 0);
  for (int i = 0; i < 100; ++i) {
    const auto p = random_pattern(rng, 2, 12, 0.1, 0.6);
    const auto c = classify(p);
    EXPECT_EQ(static_cast<int>(c.sources.size() + c.sinks.size() + c.internal.size()),
              p.node_count());
  }
}

TEST(Classify, WitnessesAreSound) {
  RandomStream rng(555, 0);
  for (int i = 0; i < 100; ++i) {
    const auto p = random_pattern(rng, 3, 10, 0.2, 0.6);
    const auto c = classify(p);
    for (const auto& w : c.dources) {
      for (NodeId o : w.all_witnesses)
        for (NodeId in : p.in_neighbors(w.node)) EXPECT_TRUE(p.has_edge(in, o));
    }
    for (const auto& w : c.dinks) {
      for (NodeId in : w.all_witnesses)
        for (NodeId o : p.out_neighbors(w.node)) EXPECT_TRUE(p.has_edge(in, o));
    }
    for (const auto& w : c.dources) EXPECT_TRUE(c.is_internal(w.node));
    for (const auto& w : c.dinks) EXPECT_TRUE(c.is_internal(w.node));
  }
}

TEST(Classify, IsDeterministic) {
  const auto p = fixtures::example_b();
  const auto c1 = classify(p);
  const auto c2 = classify(p);
  EXPECT_EQ(c1.sources, c2.sources);
  EXPECT_EQ(c1.internal, c2.internal);
  ASSERT_EQ(c1.dources.size(), c2.dources.size());
  EXPECT_EQ(c1.dources[0].all_witnesses, c2.dources[0].all_witnesses);
}

TEST(DourcePartition, ExampleA) {
  const auto part = dource_partition(fixtures::example_a(), 1);
  EXPECT_EQ(part.dource, 1);
  EXPECT_EQ(part.witness, 2);
  EXPECT_EQ(part.in_neighbors, (std::vector<NodeId>{3, 4}));
  EXPECT_EQ(part.rest, (std::vector<NodeId>{5}));
}

TEST(DourcePartition, RejectsNonDource) {
  EXPECT_THROW(dource_partition(fixtures::example_a(), 3), ValidationError);
}

}  // namespace
}  // namespace netident
