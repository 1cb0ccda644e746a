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

// Reference implementations used only by tests. They work on plain standard
// containers and share no code with the library.

#ifndef BOOLATTICE_TESTS_ORACLES_H_
#define BOOLATTICE_TESTS_ORACLES_H_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "boolattice/finite_set.h"
#include "boolattice/graph.h"
#include "boolattice/report.h"

namespace boolattice::oracle {

using RawSet = std::set<std::uint64_t>;

inline RawSet Raw(const FiniteSet& s) {
  return RawSet(s.elements().begin(), s.elements().end());
}

inline FiniteSet Cooked(const RawSet& s) {
  return FiniteSet(std::vector<std::uint64_t>(s.begin(), s.end()));
}

inline RawSet RawUnion(const RawSet& a, const RawSet& b) {
  RawSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

inline bool RawSubset(const RawSet& a, const RawSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Union of every subfamily of the generators (at most ~20 generators).
inline std::set<RawSet> Closure(const std::vector<FiniteSet>& gens) {
  std::set<RawSet> out;
  const std::size_t n = gens.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    RawSet u;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) {
        const RawSet g = Raw(gens[i]);
        u.insert(g.begin(), g.end());
      }
    }
    out.insert(u);
  }
  return out;
}

// Inclusion-minimal nonempty members of a family.
inline std::vector<RawSet> Minimal(const std::set<RawSet>& family) {
  std::vector<RawSet> out;
  for (const RawSet& x : family) {
    if (x.empty()) continue;
    bool minimal = true;
    for (const RawSet& y : family) {
      if (!y.empty() && y != x && RawSubset(y, x)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(x);
  }
  return out;
}

// Every subfamily of `quarks` whose union is x and from which no member
// can be dropped without shrinking the union. Each result is sorted.
inline std::vector<std::vector<RawSet>> Factorizations(
    const std::vector<RawSet>& quarks, const RawSet& x) {
  std::vector<RawSet> below;
  for (const RawSet& q : quarks) {
    if (RawSubset(q, x)) below.push_back(q);
  }
  std::vector<std::vector<RawSet>> out;
  const std::size_t n = below.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<RawSet> chosen;
    RawSet u;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) {
        chosen.push_back(below[i]);
        u.insert(below[i].begin(), below[i].end());
      }
    }
    if (u != x) continue;
    bool irredundant = true;
    for (std::size_t skip = 0; skip < chosen.size() && irredundant; ++skip) {
      RawSet rest;
      for (std::size_t i = 0; i < chosen.size(); ++i) {
        if (i != skip) rest.insert(chosen[i].begin(), chosen[i].end());
      }
      if (rest == x) irredundant = false;
    }
    if (irredundant) {
      std::sort(chosen.begin(), chosen.end());
      out.push_back(std::move(chosen));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<RawSet> RawQuarks(const Factorization& f) {
  std::vector<RawSet> out;
  for (const FiniteSet& q : f.quarks) out.push_back(Raw(q));
  std::sort(out.begin(), out.end());
  return out;
}

// Adjacency-matrix graph on vertices 0..n-1.
struct SimpleGraph {
  int n = 0;
  std::vector<std::vector<bool>> adj;

  explicit SimpleGraph(int vertices)
      : n(vertices), adj(vertices, std::vector<bool>(vertices, false)) {}
  void AddEdge(int u, int v) {
    if (u == v) return;
    adj[u][v] = adj[v][u] = true;
  }
  int EdgeCount() const {
    int m = 0;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) m += adj[u][v];
    }
    return m;
  }
};

inline bool Connected(const SimpleGraph& g) {
  if (g.n == 0) return true;
  std::vector<bool> seen(g.n, false);
  std::vector<int> stack = {0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < g.n; ++v) {
      if (g.adj[u][v] && !seen[v]) {
        seen[v] = true;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count == g.n;
}

// Number of edges on the longest simple path.
inline int LongestPath(const SimpleGraph& g) {
  int best = 0;
  std::vector<bool> used(g.n, false);
  std::function<void(int, int)> dfs = [&](int u, int len) {
    best = std::max(best, len);
    for (int v = 0; v < g.n; ++v) {
      if (g.adj[u][v] && !used[v]) {
        used[v] = true;
        dfs(v, len + 1);
        used[v] = false;
      }
    }
  };
  for (int s = 0; s < g.n; ++s) {
    used[s] = true;
    dfs(s, 0);
    used[s] = false;
  }
  return best;
}

// Shortest-path diameter via Floyd-Warshall; -1 when disconnected.
inline int ShortestPathDiameter(const SimpleGraph& g) {
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(g.n, std::vector<int>(g.n, inf));
  for (int u = 0; u < g.n; ++u) {
    d[u][u] = 0;
    for (int v = 0; v < g.n; ++v) {
      if (g.adj[u][v]) d[u][v] = 1;
    }
  }
  for (int k = 0; k < g.n; ++k) {
    for (int i = 0; i < g.n; ++i) {
      for (int j = 0; j < g.n; ++j) {
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  }
  int best = 0;
  for (int i = 0; i < g.n; ++i) {
    for (int j = 0; j < g.n; ++j) {
      if (d[i][j] >= inf) return -1;
      best = std::max(best, d[i][j]);
    }
  }
  return best;
}

// Distinct lengths of the simple cycles.
inline std::set<int> CycleLengths(const SimpleGraph& g) {
  std::set<int> out;
  std::vector<bool> used(g.n, false);
  // Cycles are rooted at their smallest vertex.
  std::function<void(int, int, int)> dfs = [&](int root, int u, int len) {
    for (int v = root; v < g.n; ++v) {
      if (!g.adj[u][v]) continue;
      if (v == root && len >= 3) out.insert(len);
      if (v != root && !used[v]) {
        used[v] = true;
        dfs(root, v, len + 1);
        used[v] = false;
      }
    }
  };
  for (int root = 0; root < g.n; ++root) {
    used[root] = true;
    dfs(root, root, 1);
    used[root] = false;
  }
  return out;
}

// True when some simple path has at least \`length\` edges.
inline bool HasSimplePath(const SimpleGraph& g, int length) {
  std::vector<bool> used(g.n, false);
  std::function<bool(int, int)> dfs = [&](int u, int len) {
    if (len >= length) return true;
    for (int v = 0; v < g.n; ++v) {
      if (g.adj[u][v] && !used[v]) {
        used[v] = true;
        const bool found = dfs(v, len + 1);
        used[v] = false;
        if (found) return true;
      }
    }
    return false;
  };
  for (int s = 0; s < g.n; ++s) {
    used[s] = true;
    const bool found = dfs(s, 0);
    used[s] = false;
    if (found) return true;
  }
  return false;
}

// Candy graph by definition: connected, has a cycle, every simple cycle has
// length 4, and no simple path has more than 4 edges.
inline bool IsCandyByDefinition(const SimpleGraph& g) {
  if (!Connected(g) || HasSimplePath(g, 5)) return false;
  return CycleLengths(g) == std::set<int>{4};
}

inline Graph ToGraph(const SimpleGraph& g) {
  std::vector<std::pair<Graph::VertexLabel, Graph::VertexLabel>> edges;
  std::vector<Graph::VertexLabel> vertices;
  for (int u = 0; u < g.n; ++u) {
    vertices.push_back(static_cast<Graph::VertexLabel>(u + 1));
    for (int v = u + 1; v < g.n; ++v) {
      if (g.adj[u][v]) edges.push_back({u + 1, v + 1});
    }
  }
  return Graph::FromLabeledEdges(edges, vertices);
}

// Random graph on n vertices with each edge present with probability p.
inline SimpleGraph RandomGraph(std::mt19937_64& rng, int n, double p) {
  SimpleGraph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.AddEdge(u, v);
    }
  }
  return g;
}

// Random connected graph: a random spanning tree plus extra random edges.
inline SimpleGraph RandomConnectedGraph(std::mt19937_64& rng, int n,
                                        int extra_edges) {
  SimpleGraph g(n);
  for (int v = 1; v < n; ++v) {
    g.AddEdge(v, std::uniform_int_distribution<int>(0, v - 1)(rng));
  }
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int i = 0; i < extra_edges; ++i) g.AddEdge(pick(rng), pick(rng));
  return g;
}

// Random candy graph: centers 0 and 1, `middles` shared neighbours and
// leaves hung on either center, then vertices shuffled.
inline SimpleGraph RandomCandy(std::mt19937_64& rng, int middles, int leaves_a,
                               int leaves_c) {
  const int n = 2 + middles + leaves_a + leaves_c;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  SimpleGraph g(n);
  int next = 2;
  for (int i = 0; i < middles; ++i, ++next) {
    g.AddEdge(perm[0], perm[next]);
    g.AddEdge(perm[1], perm[next]);
  }
  for (int i = 0; i < leaves_a; ++i, ++next) g.AddEdge(perm[0], perm[next]);
  for (int i = 0; i < leaves_c; ++i, ++next) g.AddEdge(perm[1], perm[next]);
  return g;
}

}  // namespace boolattice::oracle

#endif  // BOOLATTICE_TESTS_ORACLES_H_
