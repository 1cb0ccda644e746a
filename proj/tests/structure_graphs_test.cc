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

#include "boolattice/structure_graphs.h"

#include <random>

#include "boolattice/constructions.h"
#include "boolattice/error.h"
#include "boolattice/factorization.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace boolattice {
namespace {

std::vector<std::string> Strings(std::span<const FiniteSet> sets) {
  std::vector<std::string> out;
  for (const FiniteSet& s : sets) out.push_back(s.ToString());
  return out;
}

Sublattice Pairs(std::vector<std::pair<Label, Label>> edges) {
  std::vector<FiniteSet> gens;
  for (auto [a, b] : edges) gens.push_back(FiniteSet{a, b});
  return Close(gens);
}

ShapeKind OnlyShape(const Sublattice& s) {
  const std::vector<ComponentShape> shapes = PairingComponentShapes(s);
  EXPECT_EQ(shapes.size(), 1u);
  return shapes.empty() ? ShapeKind::kOther : shapes[0].kind;
}

TEST(QuarkicGraphTest, TwoComponents) {
  const QuarkicGraph qg =
      BuildQuarkicGraph(Close({{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}}));
  ASSERT_EQ(qg.graph.components().size(), 2u);
  std::vector<FiniteSet> first, second;
  for (std::size_t v : qg.graph.components()[0]) {
    first.push_back(qg.quarks[qg.graph.label(v)]);
  }
  for (std::size_t v : qg.graph.components()[1]) {
    second.push_back(qg.quarks[qg.graph.label(v)]);
  }
  EXPECT_EQ(Strings(first), (std::vector<std::string>{"1 2", "1 3", "2 3"}));
  EXPECT_EQ(Strings(second), (std::vector<std::string>{"4 5", "4 6"}));
  EXPECT_EQ(qg.graph.edge_count(), 4u);
}

TEST(QuarkicGraphTest, SingleQuarkAndConnected) {
  const QuarkicGraph one = BuildQuarkicGraph(Close({{1, 2, 3}}));
  EXPECT_EQ(one.graph.vertex_count(), 1u);
  EXPECT_EQ(one.graph.edge_count(), 0u);
  const QuarkicGraph lfs =
      BuildQuarkicGraph(Close({{1, 2, 3}, {4, 5, 6}, {1, 4}, {2, 5}, {3, 6}}));
  EXPECT_EQ(lfs.graph.vertex_count(), 5u);
  EXPECT_EQ(lfs.graph.components().size(), 1u);
}

TEST(IsolatedQuarksTest, Examples) {
  EXPECT_TRUE(
      IsolatedQuarks(Close({{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}})).empty());
  EXPECT_EQ(Strings(IsolatedQuarks(Close({{1, 2}, {3, 4}}))),
            (std::vector<std::string>{"1 2", "3 4"}));
  EXPECT_EQ(Strings(IsolatedQuarks(Close({{1}, {2, 3}}))),
            (std::vector<std::string>{"1", "2 3"}));
}

TEST(PairingGraphTest, Examples) {
  const PairingGraph tri = BuildPairingGraph(Close({{1, 2}, {2, 3}, {1, 3}}));
  EXPECT_EQ(tri.graph.vertex_count(), 3u);
  EXPECT_EQ(tri.graph.edge_count(), 3u);
  const PairingGraph path =
      BuildPairingGraph(Pairs({{1, 2}, {2, 3}, {3, 4}, {4, 5}}));
  EXPECT_EQ(Diameter(path.graph), 4u);
  EXPECT_TRUE(IsTree(path.graph));
  // 1 2 3 contains 1 2, so it is not a quark and 1 2 is isolated.
  EXPECT_EQ(BuildPairingGraph(Close({{1, 2, 3}, {1, 2}})).graph.vertex_count(),
            0u);
  try {
    BuildPairingGraph(Close({{1, 2, 3}, {3, 4}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kQuarkTooLarge);
  }
}

TEST(PairingGraphTest, IsolatedLargeQuarksAreSkipped) {
  const PairingGraph g = BuildPairingGraph(Close({{1, 2}, {2, 3}, {7, 8, 9}}));
  EXPECT_EQ(g.graph.vertex_count(), 3u);
}

TEST(PairingGraphTest, StructuralThrowsOnLargeNonIsolatedQuark) {
  try {
    ClassifyStructural(Close({{1, 2, 3}, {3, 4}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kQuarkTooLarge);
    EXPECT_NE(std::string(e.what()).find("1 2 3"), std::string::npos);
  }
}

TEST(ExcessQuarksTest, Examples) {
  const Sublattice chain = Close({{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 6}});
  EXPECT_EQ(Strings(ExcessQuarks(chain)),
            (std::vector<std::string>{"2 3 4", "3 4 5"}));
  EXPECT_FALSE(UfsSufficientDisjointExcess(chain));
  EXPECT_TRUE(ClassifyBrute(chain).ufs);

  const Sublattice disjoint = Close({{1, 2}, {3, 4}});
  EXPECT_TRUE(ExcessQuarks(disjoint).empty());
  EXPECT_TRUE(UfsSufficientDisjointExcess(disjoint));

  const Sublattice tri = Close({{1, 2}, {2, 3}, {1, 3}});
  EXPECT_EQ(ExcessQuarks(tri).size(), 3u);
  EXPECT_FALSE(UfsSufficientDisjointExcess(tri));
}

TEST(ComponentShapeTest, Shapes) {
  EXPECT_EQ(OnlyShape(Pairs({{1, 2}, {2, 3}, {1, 3}})), ShapeKind::kCycleC3);
  EXPECT_EQ(OnlyShape(Pairs({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}})),
            ShapeKind::kCycleC5);
  EXPECT_EQ(OnlyShape(Pairs({{1, 2}, {1, 3}, {1, 4}})),
            ShapeKind::kTreeDiamAtMost2);
  EXPECT_EQ(OnlyShape(Pairs({{1, 2}, {2, 3}, {3, 4}})), ShapeKind::kTreeDiam3);
  EXPECT_EQ(OnlyShape(Pairs({{1, 2}, {2, 3}, {3, 4}, {4, 5}})),
            ShapeKind::kTreeDiam4);
  EXPECT_EQ(OnlyShape(Pairs({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}})),
            ShapeKind::kTreeDeeper);
  EXPECT_EQ(OnlyShape(Pairs({{1, 2}, {2, 3}, {3, 4}, {1, 4}})),
            ShapeKind::kCandyGraph);
}

TEST(ComponentShapeTest, NamedCandy) {
  const ConstructionOutput candy = NamedExample("candy_11");
  const std::vector<ComponentShape> shapes =
      PairingComponentShapes(Close(candy.generators));
  ASSERT_EQ(shapes.size(), 1u);
  EXPECT_EQ(shapes[0].kind, ShapeKind::kCandyGraph);
  EXPECT_EQ(shapes[0].centers, (std::vector<Graph::VertexLabel>{1, 9}));
  EXPECT_EQ(shapes[0].middles, (std::vector<Graph::VertexLabel>{5, 6, 7, 8}));
}

TEST(ComponentShapeTest, DeepTreeEvidence) {
  const ComponentShape shape = PairingComponentShapes(
      Pairs({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}}))[0];
  EXPECT_EQ(shape.diameter, 5u);
  EXPECT_EQ(shape.path, (std::vector<Graph::VertexLabel>{1, 2, 3, 4, 5, 6}));
}

TEST(ComponentShapeTest, OtherCarriesForbiddenWitness) {
  const ComponentShape shape = PairingComponentShapes(
      Pairs({{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 5}, {2, 6}}))[0];
  EXPECT_EQ(shape.kind, ShapeKind::kOther);
  ASSERT_TRUE(shape.forbidden.has_value());
  EXPECT_EQ(*shape.forbidden, ForbiddenKind::kP5);
  EXPECT_EQ(shape.path.size(), 6u);
}

TEST(ComponentShapeTest, NotAComponent) {
  const Sublattice s = Pairs({{1, 2}, {2, 3}, {5, 6}});
  const PairingGraph g = BuildPairingGraph(s);
  const std::vector<Graph::VertexLabel> partial = {1, 2};
  const std::vector<Graph::VertexLabel> missing = {4};
  const std::vector<Graph::VertexLabel> whole = {1, 2, 3};
  EXPECT_THROW(ClassifyComponent(g, partial), Error);
  EXPECT_THROW(ClassifyComponent(g, missing), Error);
  EXPECT_EQ(ClassifyComponent(g, whole).kind, ShapeKind::kTreeDiamAtMost2);
}

TEST(ForbiddenSubgraphScanTest, Examples) {
  auto kinds = [](const Sublattice& s) {
    std::vector<ForbiddenKind> out;
    for (const auto& f : ForbiddenSubgraphScan(BuildPairingGraph(s).graph)) {
      out.push_back(f.kind);
    }
    return out;
  };
  EXPECT_EQ(kinds(Pairs({{1, 2}, {2, 3}, {1, 3}})),
            std::vector<ForbiddenKind>{ForbiddenKind::kC3});
  EXPECT_EQ(kinds(Pairs({{1, 2}, {2, 3}, {3, 4}, {4, 5}})),
            std::vector<ForbiddenKind>{ForbiddenKind::kP4});
  const std::vector<ForbiddenKind> c4 =
      kinds(Pairs({{1, 2}, {2, 3}, {3, 4}, {1, 4}}));
  EXPECT_NE(std::find(c4.begin(), c4.end(), ForbiddenKind::kC4), c4.end());
  EXPECT_EQ(std::find(c4.begin(), c4.end(), ForbiddenKind::kC3), c4.end());
  EXPECT_EQ(std::find(c4.begin(), c4.end(), ForbiddenKind::kP5), c4.end());
}

TEST(ClassifyStructuralTest, Examples) {
  const ClassificationReport path3 =
      ClassifyStructural(Pairs({{1, 2}, {2, 3}, {3, 4}}));
  EXPECT_TRUE(path3.ufs);
  EXPECT_EQ(path3.method, ClassificationMethod::kStructural);
  EXPECT_FALSE(path3.elasticity.has_value());

  const ClassificationReport tri = ClassifyStructural(Pairs({{1, 2}, {2, 3}, {1, 3}}));
  EXPECT_FALSE(tri.ufs);
  EXPECT_TRUE(tri.hfs);
  EXPECT_FALSE(tri.lfs);

  EXPECT_FALSE(
      ClassifyStructural(Pairs({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}})).hfs);
}

// Random small pairing families: structural flags equal brute flags, LFS
// collapses to UFS, UFS is decided per quarkic component, and the disjoint
// excess condition is sound.
TEST(StructuralPropertyTest, AgreesWithBrute) {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 7)(rng);
    const oracle::SimpleGraph sg = oracle::RandomGraph(rng, n, 0.4);
    std::vector<FiniteSet> gens;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (sg.adj[u][v]) {
          gens.push_back(FiniteSet{static_cast<Label>(u + 1),
                                   static_cast<Label>(v + 1)});
        }
      }
    }
    if (gens.size() > 9) gens.resize(9);
    const Sublattice s = Close(gens);
    const ClassificationReport brute = ClassifyBrute(s);
    const ClassificationReport structural = ClassifyStructural(s);
    EXPECT_EQ(structural.ufs, brute.ufs);
    EXPECT_EQ(structural.hfs, brute.hfs);
    EXPECT_EQ(brute.lfs, brute.ufs);

    const QuarkicGraph qg = BuildQuarkicGraph(s);
    bool all_components_ufs = true;
    for (const auto& comp : qg.graph.components()) {
      std::vector<FiniteSet> part;
      for (std::size_t v : comp) part.push_back(qg.quarks[qg.graph.label(v)]);
      all_components_ufs &= ClassifyBrute(Close(part)).ufs;
    }
    EXPECT_EQ(brute.ufs, all_components_ufs);
    if (UfsSufficientDisjointExcess(s)) EXPECT_TRUE(brute.ufs);
  }
}

// The sufficient condition on lattices with larger quarks.
TEST(StructuralPropertyTest, DisjointExcessImpliesUfs) {
  std::mt19937_64 rng(99);
  int applicable = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int count = std::uniform_int_distribution<int>(1, 6)(rng);
    std::vector<FiniteSet> gens;
    for (int i = 0; i < count; ++i) {
      std::vector<Label> v;
      for (int k = std::uniform_int_distribution<int>(1, 3)(rng); k > 0; --k) {
        v.push_back(std::uniform_int_distribution<Label>(1, 8)(rng));
      }
      gens.emplace_back(std::move(v));
    }
    const Sublattice s = Close(gens);
    if (!UfsSufficientDisjointExcess(s)) continue;
    ++applicable;
    EXPECT_TRUE(ClassifyBrute(s).ufs);
  }
  EXPECT_GT(applicable, 50);
}

}  // namespace
}  // namespace boolattice
