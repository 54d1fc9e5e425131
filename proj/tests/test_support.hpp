#pragma once

// Shared fixtures and independent test oracles. The brute-force routines
// here deliberately avoid the library's solver code paths: assignment
// enumeration for chromatic numbers, subset scans for cliques, permutation
// scans for isomorphism and embedding counts.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "chicrown/graph.hpp"
#include "chicrown/patterns.hpp"

namespace test_support {

using chicrown::Graph;
using chicrown::VertexSet;

inline Graph path_graph(int k) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(k, e);
}

inline Graph cycle_graph(int k) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
  return Graph::from_edges(k, e);
}

inline Graph complete_graph(int k) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) e.emplace_back(i, j);
  return Graph::from_edges(k, e);
}

inline Graph star_graph(int leaves) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, e);
}

inline Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph::from_edges(a + b, e);
}

// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
    e.emplace_back(i, i + 5);
  }
  return Graph::from_edges(10, e);
}

// Cycle u0..u4, shadows w_i = 5+i adjacent to u_{i-1} and u_{i+1}, apex 10
// adjacent to every shadow. 11 vertices, 20 edges, triangle-free, chi 4.
inline Graph grotzsch() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(5 + i, (i + 1) % 5);
    e.emplace_back(5 + i, (i + 4) % 5);
    e.emplace_back(5 + i, 10);
  }
  return Graph::from_edges(11, e);
}

// Minimum colors over plain assignment enumeration, vertex 0..n-1 in order.
inline int brute_chromatic(const Graph& g) {
  const int n = g.n();
  if (n == 0) return 0;
  auto colorable = [&](int k) {
    std::vector<int> assign(static_cast<std::size_t>(n), -1);
    auto rec = [&](auto&& self, int v) -> bool {
      if (v == n) return true;
      for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (int u : g.neighbors(v))
          if (u < v && assign[static_cast<std::size_t>(u)] == c) ok = false;
        if (!ok) continue;
        assign[static_cast<std::size_t>(v)] = c;
        if (self(self, v + 1)) return true;
        assign[static_cast<std::size_t>(v)] = -1;
      }
      return false;
    };
    return rec(rec, 0);
  };
  for (int k = 1; k <= n; ++k)
    if (colorable(k)) return k;
  return n;
}

// Maximum clique size over all 2^n subsets.
inline int brute_clique(const Graph& g) {
  const int n = g.n();
  int best = 0;
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    VertexSet s{mask};
    if (s.count() <= best) continue;
    if (chicrown::is_clique(g, s)) best = s.count();
  }
  return best;
}

// Number of injective induced maps of p into g: all |p|-subsets, all
// bijections onto them.
inline long long brute_embedding_count(const Graph& g, const chicrown::Pattern& p) {
  const int pn = p.graph.n();
  const int hn = g.n();
  if (pn > hn) return 0;
  std::vector<int> pick(static_cast<std::size_t>(pn));
  long long count = 0;
  auto choose = [&](auto&& self, int start, int depth) -> void {
    if (depth == pn) {
      std::vector<int> perm(pick);
      std::sort(perm.begin(), perm.end());
      do {
        bool ok = true;
        for (int i = 0; i < pn && ok; ++i)
          for (int j = i + 1; j < pn && ok; ++j)
            ok = g.adjacent(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]) ==
                 p.graph.adjacent(i, j);
        if (ok) ++count;
      } while (std::next_permutation(perm.begin(), perm.end()));
      return;
    }
    for (int v = start; v < hn; ++v) {
      pick[static_cast<std::size_t>(depth)] = v;
      self(self, v + 1, depth + 1);
    }
  };
  choose(choose, 0, 0);
  return count;
}

// Isomorphism by permutation scan (tiny graphs only).
inline bool brute_isomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n()) return false;
  const int n = a.n();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        ok = a.adjacent(i, j) ==
             b.adjacent(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Single-source BFS distances over an adjacency-list copy of the graph
// (independent of the layering code under test).
inline std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n()));
  for (auto [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
  std::vector<int> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (int u : adj[static_cast<std::size_t>(v)])
      if (dist[static_cast<std::size_t>(u)] == -1) {
        dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
        queue.push_back(u);
      }
  }
  return dist;
}

// Deterministic small random graph for property tests (kept distinct from
// the library's random_graph recurrence).
inline Graph lcg_graph(int n, std::uint32_t& state, int density_percent = 50) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      state = state * 1664525u + 1013904223u;
      if (static_cast<int>((state >> 16) % 100) < density_percent) e.emplace_back(i, j);
    }
  return Graph::from_edges(n, e);
}

}  // namespace test_support
