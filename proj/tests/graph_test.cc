// Copyright 2026 The boolattice Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "boolattice/graph.h"

#include <random>

#include "gtest/gtest.h"
#include "oracles.h"

namespace boolattice {
namespace {

using LabeledEdges = std::vector<std::pair<Graph::VertexLabel, Graph::VertexLabel>>;

Graph Path(int edges) {
  LabeledEdges e;
  for (int i = 1; i <= edges; ++i) e.push_back({i, i + 1});
  return Graph::FromLabeledEdges(e);
}

Graph Cycle(int n) {
  LabeledEdges e;
  for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
  e.push_back({n, 1});
  return Graph::FromLabeledEdges(e);
}

TEST(GraphTest, LoopsDroppedAndParallelEdgesMerged) {
  const Graph g =
      Graph::FromLabeledEdges(LabeledEdges{{3, 1}, {1, 3}, {2, 2}, {3, 7}});
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.labels(), (std::vector<Graph::VertexLabel>{1, 2, 3, 7}));
  EXPECT_EQ(g.degree(*g.IndexOf(2)), 0u);
  EXPECT_TRUE(g.HasEdge(*g.IndexOf(1), *g.IndexOf(3)));
  EXPECT_FALSE(g.IndexOf(4).has_value());
}

TEST(GraphTest, ComponentsOrderedBySmallestVertex) {
  const Graph g = Graph::FromLabeledEdges(LabeledEdges{{5, 6}, {1, 2}},
                                          std::vector<Graph::VertexLabel>{9});
  ASSERT_EQ(g.components().size(), 3u);
  EXPECT_EQ(g.ToLabels(g.components()[0]),
            (std::vector<Graph::VertexLabel>{1, 2}));
  EXPECT_EQ(g.ToLabels(g.components()[1]),
            (std::vector<Graph::VertexLabel>{5, 6}));
  EXPECT_EQ(g.ToLabels(g.components()[2]),
            (std::vector<Graph::VertexLabel>{9}));
  EXPECT_FALSE(IsConnected(g));
}

TEST(GraphTest, TreesAndDiameters) {
  EXPECT_TRUE(IsTree(Path(4)));
  EXPECT_EQ(Diameter(Path(4)), 4u);
  EXPECT_FALSE(IsTree(Cycle(4)));
  EXPECT_EQ(Diameter(Cycle(5)), 2u);
  EXPECT_TRUE(IsTree(Graph::FromLabeledEdges(LabeledEdges{},
                                             std::vector<Graph::VertexLabel>{1})));
}

TEST(GraphTest, FindPathIsLexicographicallySmallest) {
  const Graph g = Path(4);
  const auto p = FindPath(g, 4);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(g.ToLabels(*p), (std::vector<Graph::VertexLabel>{1, 2, 3, 4, 5}));
  EXPECT_FALSE(FindPath(g, 5).has_value());
}

TEST(GraphTest, FindCycle) {
  const Graph g = Cycle(4);
  const auto c = FindCycle(g, 4);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(g.ToLabels(*c), (std::vector<Graph::VertexLabel>{1, 2, 3, 4}));
  EXPECT_FALSE(FindCycle(g, 3).has_value());
  EXPECT_FALSE(FindCycle(Path(5), 3).has_value());
}

TEST(GraphTest, InducedSubgraphKeepsLabels) {
  const Graph g = Cycle(5);
  const std::vector<std::size_t> keep = {0, 1, 2};
  const Graph h = g.Induced(keep);
  EXPECT_EQ(h.labels(), (std::vector<Graph::VertexLabel>{1, 2, 3}));
  EXPECT_EQ(h.edge_count(), 2u);
}

TEST(RecognizeCandyTest, FourCycleIsCandy) {
  const auto c = RecognizeCandy(Cycle(4));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->middles.size(), 2u);
}

TEST(RecognizeCandyTest, NamedElevenVertexCandy) {
  const Graph g = Graph::FromLabeledEdges(LabeledEdges{
      {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {1, 8},
      {5, 9}, {6, 9}, {7, 9}, {8, 9}, {9, 10}, {9, 11}});
  const auto c = RecognizeCandy(g);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(g.label(c->center_a), 1u);
  EXPECT_EQ(g.label(c->center_c), 9u);
  EXPECT_EQ(g.ToLabels(c->middles),
            (std::vector<Graph::VertexLabel>{5, 6, 7, 8}));
}

TEST(RecognizeCandyTest, NotCandy) {
  EXPECT_FALSE(RecognizeCandy(Cycle(3)).has_value());
  EXPECT_FALSE(RecognizeCandy(Cycle(5)).has_value());
  EXPECT_FALSE(RecognizeCandy(Path(3)).has_value());
  // C4 with pendant leaves on two adjacent vertices contains a 5-edge path.
  const Graph g = Graph::FromLabeledEdges(
      LabeledEdges{{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 5}, {2, 6}});
  EXPECT_FALSE(RecognizeCandy(g).has_value());
  // K4 minus an edge has triangles.
  const Graph diamond = Graph::FromLabeledEdges(
      LabeledEdges{{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
  EXPECT_FALSE(RecognizeCandy(diamond).has_value());
}

// Graph primitives against the adjacency-matrix oracles.
TEST(GraphPropertyTest, MatchesOracles) {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 8)(rng);
    const oracle::SimpleGraph sg = oracle::RandomGraph(rng, n, 0.35);
    const Graph g = oracle::ToGraph(sg);
    EXPECT_EQ(IsConnected(g), oracle::Connected(sg));
    EXPECT_EQ(g.edge_count(), static_cast<std::size_t>(sg.EdgeCount()));
    if (oracle::Connected(sg)) {
      EXPECT_EQ(static_cast<int>(Diameter(g)), oracle::ShortestPathDiameter(sg));
      EXPECT_EQ(IsTree(g), sg.EdgeCount() == n - 1);
    }
    const int longest = oracle::LongestPath(sg);
    for (int len = 1; len <= 6; ++len) {
      const auto p = FindPath(g, len);
      EXPECT_EQ(p.has_value(), len <= longest);
      if (p) {
        ASSERT_EQ(p->size(), static_cast<std::size_t>(len + 1));
        for (std::size_t i = 0; i + 1 < p->size(); ++i) {
          EXPECT_TRUE(g.HasEdge((*p)[i], (*p)[i + 1]));
        }
      }
    }
    const std::set<int> cycles = oracle::CycleLengths(sg);
    for (int len = 3; len <= 6; ++len) {
      const auto c = FindCycle(g, len);
      EXPECT_EQ(c.has_value(), cycles.contains(len));
      if (c) {
        ASSERT_EQ(c->size(), static_cast<std::size_t>(len));
        for (std::size_t i = 0; i < c->size(); ++i) {
          EXPECT_TRUE(g.HasEdge((*c)[i], (*c)[(i + 1) % c->size()]));
        }
      }
    }
    if (oracle::Connected(sg)) {
      EXPECT_EQ(RecognizeCandy(g).has_value(), oracle::IsCandyByDefinition(sg));
    }
  }
}

}  // namespace
}  // namespace boolattice
