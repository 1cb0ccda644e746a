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

#include <algorithm>
#include <utility>

#include "boolattice/error.h"

namespace boolattice {

QuarkicGraph BuildQuarkicGraph(const Sublattice& s) {
  QuarkicGraph out;
  out.quarks = s.quarks();
  std::vector<std::pair<Graph::VertexLabel, Graph::VertexLabel>> edges;
  std::vector<Graph::VertexLabel> vertices;
  for (std::size_t i = 0; i < out.quarks.size(); ++i) {
    vertices.push_back(i);
    for (std::size_t j = i + 1; j < out.quarks.size(); ++j) {
      if (out.quarks[i].Intersects(out.quarks[j])) edges.push_back({i, j});
    }
  }
  out.graph = Graph::FromLabeledEdges(edges, vertices);
  return out;
}

std::vector<FiniteSet> IsolatedQuarks(const Sublattice& s) {
  const QuarkicGraph qg = BuildQuarkicGraph(s);
  std::vector<FiniteSet> out;
  for (std::size_t v = 0; v < qg.quarks.size(); ++v) {
    if (qg.graph.degree(v) == 0) out.push_back(qg.quarks[v]);
  }
  return out;
}

PairingGraph BuildPairingGraph(const Sublattice& s) {
  const QuarkicGraph qg = BuildQuarkicGraph(s);
  std::vector<std::pair<Graph::VertexLabel, Graph::VertexLabel>> edges;
  for (std::size_t v = 0; v < qg.quarks.size(); ++v) {
    if (qg.graph.degree(v) == 0) continue;
    const FiniteSet& q = qg.quarks[v];
    if (q.size() != 2) {
      throw Error(ErrorKind::kQuarkTooLarge,
                  "quark {" + q.ToString() +
                      "} is not isolated and does not have exactly two "
                      "elements");
    }
    edges.push_back({q.elements()[0], q.elements()[1]});
  }
  return PairingGraph{Graph::FromLabeledEdges(edges)};
}

std::vector<FiniteSet> ExcessQuarks(const Sublattice& s) {
  const auto& quarks = s.quarks();
  std::vector<FiniteSet> out;
  for (std::size_t i = 0; i < quarks.size(); ++i) {
    FiniteSet rest;
    for (std::size_t j = 0; j < quarks.size(); ++j) {
      if (j != i) rest = rest.Union(quarks[j]);
    }
    if (quarks[i].IsSubsetOf(rest)) out.push_back(quarks[i]);
  }
  return out;
}

bool UfsSufficientDisjointExcess(const Sublattice& s) {
  const std::vector<FiniteSet> excess = ExcessQuarks(s);
  for (std::size_t i = 0; i < excess.size(); ++i) {
    for (std::size_t j = i + 1; j < excess.size(); ++j) {
      if (excess[i].Intersects(excess[j])) return false;
    }
  }
  return true;
}

std::string_view ForbiddenKindName(ForbiddenKind kind) {
  switch (kind) {
    case ForbiddenKind::kC3:
      return "C3";
    case ForbiddenKind::kP4:
      return "P4";
    case ForbiddenKind::kC4:
      return "C4";
    case ForbiddenKind::kP5:
      return "P5";
    case ForbiddenKind::kC5:
      return "C5";
  }
  return "?";
}

std::vector<ForbiddenFinding> ForbiddenSubgraphScan(const Graph& g) {
  std::vector<ForbiddenFinding> out;
  auto record = [&](ForbiddenKind kind,
                    const std::optional<std::vector<std::size_t>>& found) {
    if (found) out.push_back({kind, g.ToLabels(*found)});
  };
  record(ForbiddenKind::kC3, FindCycle(g, 3));
  record(ForbiddenKind::kP4, FindPath(g, 4));
  record(ForbiddenKind::kC4, FindCycle(g, 4));
  record(ForbiddenKind::kP5, FindPath(g, 5));
  record(ForbiddenKind::kC5, FindCycle(g, 5));
  return out;
}

std::string_view ShapeKindName(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::kTreeDiamAtMost2:
      return "TreeDiamAtMost2";
    case ShapeKind::kTreeDiam3:
      return "TreeDiam3";
    case ShapeKind::kTreeDiam4:
      return "TreeDiam4";
    case ShapeKind::kTreeDeeper:
      return "TreeDeeper";
    case ShapeKind::kCycleC3:
      return "CycleC3";
    case ShapeKind::kCycleC5:
      return "CycleC5";
    case ShapeKind::kCandyGraph:
      return "CandyGraph";
    case ShapeKind::kOther:
      return "Other";
  }
  return "?";
}

bool ShapeIsUfs(ShapeKind kind) {
  return kind == ShapeKind::kTreeDiamAtMost2 || kind == ShapeKind::kTreeDiam3;
}

bool ShapeIsHfs(ShapeKind kind) {
  return ShapeIsUfs(kind) || kind == ShapeKind::kTreeDiam4 ||
         kind == ShapeKind::kCycleC3 || kind == ShapeKind::kCycleC5 ||
         kind == ShapeKind::kCandyGraph;
}

namespace {

bool IsCycleGraph(const Graph& g, std::size_t n) {
  if (g.vertex_count() != n || g.edge_count() != n || !IsConnected(g)) {
    return false;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

}  // namespace

ComponentShape ClassifyComponent(
    const PairingGraph& g, std::span<const Graph::VertexLabel> component) {
  std::vector<Graph::VertexLabel> labels(component.begin(), component.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  const Graph& full = g.graph;
  std::vector<std::size_t> indices;
  for (Graph::VertexLabel l : labels) {
    auto idx = full.IndexOf(l);
    if (!idx) {
      throw Error(ErrorKind::kNotAComponent,
                  "vertex " + std::to_string(l) + " is not in the graph");
    }
    indices.push_back(*idx);
  }
  if (indices.empty() ||
      full.components()[full.component_of(indices.front())] != indices) {
    throw Error(ErrorKind::kNotAComponent,
                "vertex set is not a connected component");
  }

  const Graph sub = full.Induced(indices);
  ComponentShape shape;
  shape.vertices = labels;

  if (IsTree(sub)) {
    shape.diameter = Diameter(sub);
    shape.path = sub.ToLabels(*FindPath(sub, shape.diameter));
    if (shape.diameter <= 2) {
      shape.kind = ShapeKind::kTreeDiamAtMost2;
    } else if (shape.diameter == 3) {
      shape.kind = ShapeKind::kTreeDiam3;
    } else if (shape.diameter == 4) {
      shape.kind = ShapeKind::kTreeDiam4;
    } else {
      shape.kind = ShapeKind::kTreeDeeper;
    }
    return shape;
  }
  if (IsCycleGraph(sub, 3)) {
    shape.kind = ShapeKind::kCycleC3;
    shape.path = sub.ToLabels(*FindCycle(sub, 3));
    return shape;
  }
  if (IsCycleGraph(sub, 5)) {
    shape.kind = ShapeKind::kCycleC5;
    shape.path = sub.ToLabels(*FindCycle(sub, 5));
    return shape;
  }
  if (auto candy = RecognizeCandy(sub)) {
    shape.kind = ShapeKind::kCandyGraph;
    shape.centers = {sub.label(candy->center_a), sub.label(candy->center_c)};
    shape.middles = sub.ToLabels(candy->middles);
    return shape;
  }
  shape.kind = ShapeKind::kOther;
  if (auto p5 = FindPath(sub, 5)) {
    shape.forbidden = ForbiddenKind::kP5;
    shape.path = sub.ToLabels(*p5);
  } else if (auto c3 = FindCycle(sub, 3)) {
    shape.forbidden = ForbiddenKind::kC3;
    shape.path = sub.ToLabels(*c3);
  } else if (auto c5 = FindCycle(sub, 5)) {
    shape.forbidden = ForbiddenKind::kC5;
    shape.path = sub.ToLabels(*c5);
  }
  return shape;
}

std::vector<ComponentShape> PairingComponentShapes(const Sublattice& s) {
  const PairingGraph pg = BuildPairingGraph(s);
  std::vector<ComponentShape> out;
  for (const auto& comp : pg.graph.components()) {
    const auto labels = pg.graph.ToLabels(comp);
    out.push_back(ClassifyComponent(pg, labels));
  }
  return out;
}

ClassificationReport ClassifyStructural(const Sublattice& s) {
  ClassificationReport report;
  report.method = ClassificationMethod::kStructural;
  const std::vector<ComponentShape> shapes = PairingComponentShapes(s);

  const FactorizabilityResult f = IsFactorizable(s);
  report.factorizable = f.factorizable;
  report.ffs = f.factorizable;
  if (!f.factorizable) {
    report.witnesses[Flag::kFactorizable] = Witness{*f.witness, {}};
    report.witnesses[Flag::kFfs] = Witness{*f.witness, {}};
  }
  report.ufs = std::all_of(shapes.begin(), shapes.end(), [](const auto& sh) {
    return ShapeIsUfs(sh.kind);
  });
  report.hfs = std::all_of(shapes.begin(), shapes.end(), [](const auto& sh) {
    return ShapeIsHfs(sh.kind);
  });
  report.lfs = report.ufs;
  return report;
}

}  // namespace boolattice
