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

#ifndef BOOLATTICE_GRAPH_H_
#define BOOLATTICE_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace boolattice {

// Finite simple undirected graph. Vertices are dense indices 0..n-1, each
// carrying an integer label; labels are strictly increasing in the index, so
// index order and label order agree and lexicographic comparisons of vertex
// sequences can be done on indices.
class Graph {
 public:
  using VertexLabel = std::uint64_t;
  using Edge = std::pair<std::size_t, std::size_t>;

  Graph() = default;

  // Vertex set = `vertices` ∪ endpoints of `edges`. Loops are dropped and
  // parallel edges merged.
  static Graph FromLabeledEdges(
      std::span<const std::pair<VertexLabel, VertexLabel>> edges,
      std::span<const VertexLabel> vertices = {});

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<VertexLabel>& labels() const { return labels_; }
  VertexLabel label(std::size_t v) const { return labels_[v]; }
  std::optional<std::size_t> IndexOf(VertexLabel label) const;

  // Sorted increasing.
  const std::vector<std::size_t>& neighbors(std::size_t v) const {
    return adjacency_[v];
  }
  std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }
  bool HasEdge(std::size_t u, std::size_t v) const;
  // (u, v) with u < v, sorted.
  const std::vector<Edge>& edges() const { return edges_; }

  // Connected components, each a sorted list of vertex indices; components
  // are ordered by their smallest vertex.
  const std::vector<std::vector<std::size_t>>& components() const {
    return components_;
  }
  std::size_t component_of(std::size_t v) const { return component_of_[v]; }

  // Subgraph induced by the given vertex indices (relabelled densely, labels
  // preserved).
  Graph Induced(std::span<const std::size_t> vertices) const;

  std::vector<VertexLabel> ToLabels(std::span<const std::size_t> vs) const;

 private:
  void Finalize();

  std::vector<VertexLabel> labels_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> components_;
  std::vector<std::size_t> component_of_;
};

// Hop distances from `source`; -1 for unreachable vertices.
std::vector<int> BfsDistances(const Graph& g, std::size_t source);

bool IsConnected(const Graph& g);
bool IsTree(const Graph& g);

// Largest shortest-path distance, by BFS from every vertex. Requires a
// connected graph. For trees this is the longest path length.
std::size_t Diameter(const Graph& g);

// Lexicographically smallest vertex sequence of a path with exactly
// `length` edges (distinct vertices), if any.
std::optional<std::vector<std::size_t>> FindPath(const Graph& g,
                                                 std::size_t length);

// Lexicographically smallest cycle with exactly `length` edges, written with
// its smallest vertex first and the smaller neighbour second.
std::optional<std::vector<std::size_t>> FindCycle(const Graph& g,
                                                  std::size_t length);

struct CandyStructure {
  std::size_t center_a;
  std::size_t center_c;
  std::vector<std::size_t> middles;
};

// Recognizes the double-star-through-middles shape: two non-adjacent
// centers a < c whose common neighbours (at least two) all have degree 2,
// with every remaining vertex a leaf hanging off a or c. The 4-cycle is the
// case with no leaves. Requires a connected graph; when several center pairs
// qualify the lexicographically smallest pair is returned.
std::optional<CandyStructure> RecognizeCandy(const Graph& g);

}  // namespace boolattice

#endif  // BOOLATTICE_GRAPH_H_
