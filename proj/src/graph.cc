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

#include <algorithm>
#include <deque>
#include <set>

namespace boolattice {

Graph Graph::FromLabeledEdges(
    std::span<const std::pair<VertexLabel, VertexLabel>> edges,
    std::span<const VertexLabel> vertices) {
  Graph g;
  std::set<VertexLabel> labels(vertices.begin(), vertices.end());
  for (const auto& [u, v] : edges) {
    labels.insert(u);
    labels.insert(v);
  }
  g.labels_.assign(labels.begin(), labels.end());
  g.adjacency_.resize(g.labels_.size());
  std::set<Edge> edge_set;
  for (const auto& [lu, lv] : edges) {
    if (lu == lv) continue;
    std::size_t u = *g.IndexOf(lu);
    std::size_t v = *g.IndexOf(lv);
    edge_set.insert({std::min(u, v), std::max(u, v)});
  }
  g.edges_.assign(edge_set.begin(), edge_set.end());
  for (const auto& [u, v] : g.edges_) {
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  g.Finalize();
  return g;
}

void Graph::Finalize() {
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
  const std::size_t none = vertex_count();
  component_of_.assign(vertex_count(), none);
  components_.clear();
  for (std::size_t s = 0; s < vertex_count(); ++s) {
    if (component_of_[s] != none) continue;
    const std::size_t id = components_.size();
    std::vector<std::size_t> members;
    std::vector<std::size_t> stack = {s};
    component_of_[s] = id;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (std::size_t w : adjacency_[v]) {
        if (component_of_[w] == none) {
          component_of_[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    components_.push_back(std::move(members));
  }
}

std::optional<std::size_t> Graph::IndexOf(VertexLabel label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

bool Graph::HasEdge(std::size_t u, std::size_t v) const {
  const auto& adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

Graph Graph::Induced(std::span<const std::size_t> vertices) const {
  std::vector<std::size_t> keep(vertices.begin(), vertices.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  Graph g;
  for (std::size_t v : keep) g.labels_.push_back(labels_[v]);
  g.adjacency_.resize(keep.size());
  auto local = [&](std::size_t v) -> std::optional<std::size_t> {
    auto it = std::lower_bound(keep.begin(), keep.end(), v);
    if (it == keep.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - keep.begin());
  };
  for (const auto& [u, v] : edges_) {
    auto lu = local(u);
    auto lv = local(v);
    if (!lu || !lv) continue;
    g.edges_.push_back({*lu, *lv});
    g.adjacency_[*lu].push_back(*lv);
    g.adjacency_[*lv].push_back(*lu);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.Finalize();
  return g;
}

std::vector<Graph::VertexLabel> Graph::ToLabels(
    std::span<const std::size_t> vs) const {
  std::vector<VertexLabel> out;
  out.reserve(vs.size());
  for (std::size_t v : vs) out.push_back(labels_[v]);
  return out;
}

std::vector<int> BfsDistances(const Graph& g, std::size_t source) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<std::size_t> queue = {source};
  dist[source] = 0;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool IsConnected(const Graph& g) { return g.components().size() <= 1; }

bool IsTree(const Graph& g) {
  return g.vertex_count() > 0 && IsConnected(g) &&
         g.edge_count() + 1 == g.vertex_count();
}

std::size_t Diameter(const Graph& g) {
  int best = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    for (int d : BfsDistances(g, v)) best = std::max(best, d);
  }
  return static_cast<std::size_t>(best);
}

namespace {

bool ExtendPath(const Graph& g, std::size_t length,
                std::vector<std::size_t>& path, std::vector<bool>& used) {
  if (path.size() == length + 1) return true;
  for (std::size_t w : g.neighbors(path.back())) {
    if (used[w]) continue;
    used[w] = true;
    path.push_back(w);
    if (ExtendPath(g, length, path, used)) return true;
    path.pop_back();
    used[w] = false;
  }
  return false;
}

bool ExtendCycle(const Graph& g, std::size_t length,
                 std::vector<std::size_t>& path, std::vector<bool>& used) {
  const std::size_t start = path.front();
  if (path.size() == length) {
    return g.HasEdge(path.back(), start) && path[1] < path.back();
  }
  for (std::size_t w : g.neighbors(path.back())) {
    if (w <= start || used[w]) continue;
    used[w] = true;
    path.push_back(w);
    if (ExtendCycle(g, length, path, used)) return true;
    path.pop_back();
    used[w] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> FindPath(const Graph& g,
                                                 std::size_t length) {
  if (length + 1 > g.vertex_count()) return std::nullopt;
  std::vector<bool> used(g.vertex_count(), false);
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    std::vector<std::size_t> path = {s};
    used[s] = true;
    if (ExtendPath(g, length, path, used)) return path;
    used[s] = false;
  }
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> FindCycle(const Graph& g,
                                                  std::size_t length) {
  if (length < 3 || length > g.vertex_count()) return std::nullopt;
  std::vector<bool> used(g.vertex_count(), false);
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    std::vector<std::size_t> path = {s};
    used[s] = true;
    if (ExtendCycle(g, length, path, used)) return path;
    used[s] = false;
  }
  return std::nullopt;
}

namespace {

std::optional<CandyStructure> CheckCenters(const Graph& g, std::size_t a,
                                           std::size_t c) {
  if (a == c || g.HasEdge(a, c)) return std::nullopt;
  CandyStructure out{std::min(a, c), std::max(a, c), {}};
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (v == a || v == c) continue;
    const bool to_a = g.HasEdge(v, a);
    const bool to_c = g.HasEdge(v, c);
    if (to_a && to_c) {
      if (g.degree(v) != 2) return std::nullopt;
      out.middles.push_back(v);
    } else if (to_a || to_c) {
      if (g.degree(v) != 1) return std::nullopt;
    } else {
      return std::nullopt;
    }
  }
  if (out.middles.size() < 2) return std::nullopt;
  return out;
}

}  // namespace

std::optional<CandyStructure> RecognizeCandy(const Graph& g) {
  if (g.vertex_count() < 4 || !IsConnected(g)) return std::nullopt;
  // In the target shape every vertex of degree >= 2 is a center or a middle,
  // so the first such vertex pins down all possible center pairs.
  std::optional<std::size_t> pivot;
  for (std::size_t v = 0; v < g.vertex_count() && !pivot; ++v) {
    if (g.degree(v) >= 2) pivot = v;
  }
  if (!pivot) return std::nullopt;
  const std::size_t u = *pivot;

  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  auto add = [&](std::size_t x, std::size_t y) {
    candidates.push_back({std::min(x, y), std::max(x, y)});
  };
  if (g.degree(u) == 2) add(g.neighbors(u)[0], g.neighbors(u)[1]);
  for (std::size_t w : g.neighbors(u)) {
    if (g.degree(w) != 2) continue;
    for (std::size_t x : g.neighbors(w)) {
      if (x != u) add(u, x);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  for (const auto& [a, c] : candidates) {
    if (auto found = CheckCenters(g, a, c)) return found;
  }
  return std::nullopt;
}

}  // namespace boolattice
