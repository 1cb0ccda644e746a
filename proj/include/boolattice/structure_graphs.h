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

// The two graphs attached to a Boolean sublattice and the classifiers that
// read factoriality off them.
//
// Quarkic graph: one vertex per quark, an edge between intersecting quarks.
// Pairing graph: defined when every non-isolated quark has two elements; its
// vertices are the ground integers those quarks touch and its edges are the
// quarks themselves.
//
// For sublattices whose quarks have at most two elements, the pairing graph
// decides the factorization properties component by component:
//   UFS <=> every component is a tree of diameter <= 3;
//   HFS <=> every component is a triangle, a 5-cycle, a tree of diameter
//           <= 4, or a candy graph;
//   LFS <=> UFS.

#ifndef BOOLATTICE_STRUCTURE_GRAPHS_H_
#define BOOLATTICE_STRUCTURE_GRAPHS_H_

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "boolattice/finite_set.h"
#include "boolattice/graph.h"
#include "boolattice/report.h"
#include "boolattice/sublattice.h"

namespace boolattice {

struct QuarkicGraph {
  // Vertex i of `graph` is quarks[i] (labels are 0..n-1).
  std::vector<FiniteSet> quarks;
  Graph graph;
};

struct PairingGraph {
  // Vertex labels are ground integers.
  Graph graph;
};

QuarkicGraph BuildQuarkicGraph(const Sublattice& s);

// Degree-0 vertices of the quarkic graph, canonical order.
std::vector<FiniteSet> IsolatedQuarks(const Sublattice& s);

// Requires every non-isolated quark to have exactly two elements; throws
// kQuarkTooLarge naming the first offender otherwise. Isolated quarks are
// skipped.
PairingGraph BuildPairingGraph(const Sublattice& s);

// Quarks contained in the union of the other quarks.
std::vector<FiniteSet> ExcessQuarks(const Sublattice& s);

// True when no two distinct excess quarks intersect; this suffices for (but
// is not implied by) unique factorization.
bool UfsSufficientDisjointExcess(const Sublattice& s);

enum class ForbiddenKind {
  kC3,  // cycle with 3 edges
  kP4,  // path with 4 edges
  kC4,  // cycle with 4 edges
  kP5,  // path with 5 edges
  kC5,  // cycle with 5 edges
};

std::string_view ForbiddenKindName(ForbiddenKind kind);

struct ForbiddenFinding {
  ForbiddenKind kind;
  // Lexicographically smallest witness sequence (ground labels).
  std::vector<Graph::VertexLabel> vertices;

  friend bool operator==(const ForbiddenFinding&,
                         const ForbiddenFinding&) = default;
};

// One finding per occurring class, in the order C3, P4, C4, P5, C5.
std::vector<ForbiddenFinding> ForbiddenSubgraphScan(const Graph& g);

enum class ShapeKind {
  kTreeDiamAtMost2,
  kTreeDiam3,
  kTreeDiam4,
  kTreeDeeper,
  kCycleC3,
  kCycleC5,
  kCandyGraph,
  kOther,
};

std::string_view ShapeKindName(ShapeKind kind);

struct ComponentShape {
  ShapeKind kind = ShapeKind::kOther;
  std::vector<Graph::VertexLabel> vertices;
  // Trees: the lexicographically smallest diameter path. C3/C5: the cycle.
  // Other: the forbidden witness.
  std::vector<Graph::VertexLabel> path;
  std::size_t diameter = 0;  // trees only
  // Candy graphs only.
  std::vector<Graph::VertexLabel> centers;
  std::vector<Graph::VertexLabel> middles;
  // Other only.
  std::optional<ForbiddenKind> forbidden;
};

// `component` is a vertex-label set that must be exactly one connected
// component of `g`; throws kNotAComponent otherwise.
ComponentShape ClassifyComponent(const PairingGraph& g,
                                 std::span<const Graph::VertexLabel> component);

// Shapes of every pairing-graph component after stripping isolated quarks.
std::vector<ComponentShape> PairingComponentShapes(const Sublattice& s);

// Decides UFS/HFS/LFS from the pairing graph alone. Elasticity is left
// unset. Throws kQuarkTooLarge if a non-isolated quark has more than two
// elements.
ClassificationReport ClassifyStructural(const Sublattice& s);

bool ShapeIsUfs(ShapeKind kind);
bool ShapeIsHfs(ShapeKind kind);

}  // namespace boolattice

#endif  // BOOLATTICE_STRUCTURE_GRAPHS_H_
