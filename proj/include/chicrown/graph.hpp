#pragma once

// Immutable simple graphs on at most 64 vertices. Adjacency rows are packed
// into single machine words so that neighborhood algebra, clique search and
// census sweeps run on word operations.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "chicrown/errors.hpp"

namespace chicrown {

/// Subset of the vertices {0..63} of some host graph, packed into one word.
struct VertexSet {
  std::uint64_t bits = 0;

  static VertexSet full(int n) {
    return VertexSet{n >= 64 ? ~0ULL : ((1ULL << n) - 1ULL)};
  }
  static VertexSet single(int v) { return VertexSet{1ULL << v}; }
  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.add(v);
    return s;
  }

  bool contains(int v) const { return (bits >> v) & 1ULL; }
  VertexSet& add(int v) {
    bits |= 1ULL << v;
    return *this;
  }
  VertexSet& remove(int v) {
    bits &= ~(1ULL << v);
    return *this;
  }
  int count() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }
  bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }
  bool intersects(VertexSet o) const { return (bits & o.bits) != 0; }
  int first() const { return bits ? std::countr_zero(bits) : -1; }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (std::uint64_t b = bits; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet{a.bits | b.bits}; }
  friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet{a.bits & b.bits}; }
  friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet{a.bits & ~b.bits}; }
  friend bool operator==(VertexSet a, VertexSet b) { return a.bits == b.bits; }
  friend bool operator!=(VertexSet a, VertexSet b) { return a.bits != b.bits; }

  struct iterator {
    std::uint64_t rest;
    int operator*() const { return std::countr_zero(rest); }
    iterator& operator++() {
      rest &= rest - 1;
      return *this;
    }
    bool operator!=(const iterator& o) const { return rest != o.rest; }
  };
  iterator begin() const { return {bits}; }
  iterator end() const { return {0}; }
};

/// Immutable simple graph: no self-loops, symmetric adjacency, n <= 64.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;

  explicit Graph(int n) : n_(n), rows_(check_size(n), 0) {}

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  int n() const { return n_; }

  int edge_count() const {
    int m = 0;
    for (int v = 0; v < n_; ++v) m += std::popcount(rows_[static_cast<std::size_t>(v)]);
    return m / 2;
  }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (rows_[static_cast<std::size_t>(u)] >> v) & 1ULL;
  }

  VertexSet vertices() const { return VertexSet::full(n_); }

  /// N(v): open neighborhood.
  VertexSet neighbors(int v) const {
    check_vertex(v);
    return VertexSet{rows_[static_cast<std::size_t>(v)]};
  }

  /// N[v] = N(v) + v.
  VertexSet closed_neighbors(int v) const { return neighbors(v) | VertexSet::single(v); }

  /// M(v): everything outside N[v].
  VertexSet non_neighbors(int v) const { return vertices() - closed_neighbors(v); }

  /// N(X): vertices outside X with a neighbor in X.
  VertexSet neighbors_of(VertexSet x) const {
    check_set(x);
    std::uint64_t acc = 0;
    for (int v : x) acc |= rows_[static_cast<std::size_t>(v)];
    return VertexSet{acc & ~x.bits};
  }

  /// M(X) = V minus (X + N(X)).
  VertexSet non_neighbors_of(VertexSet x) const {
    return vertices() - (x | neighbors_of(x));
  }

  int degree(int v) const { return neighbors(v).count(); }

  /// Raw adjacency word for v; used by the branch-and-bound solvers.
  std::uint64_t row(int v) const { return rows_[static_cast<std::size_t>(v)]; }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u + 1 < n_; ++u)
      for (int v : VertexSet{rows_[static_cast<std::size_t>(u)] & ~VertexSet::full(u + 1).bits})
        out.emplace_back(u, v);
    return out;
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw OutOfRange("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
  }
  void check_set(VertexSet s) const {
    if (!s.subset_of(vertices())) throw OutOfRange("vertex set not contained in {0..n-1}");
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

  friend Graph complement(const Graph& g) {
    Graph h(g.n_);
    std::uint64_t all = VertexSet::full(g.n_).bits;
    for (int v = 0; v < g.n_; ++v)
      h.rows_[static_cast<std::size_t>(v)] =
          (~g.rows_[static_cast<std::size_t>(v)] & all) & ~(1ULL << v);
    return h;
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> rows_;

  static std::size_t check_size(int n) {
    if (n < 0 || n > kMaxVertices)
      throw UnsupportedSize("vertex count " + std::to_string(n) + " outside supported range 0..64");
    return static_cast<std::size_t>(n);
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw Error("self-loops are not supported");
    rows_[static_cast<std::size_t>(u)] |= 1ULL << v;
    rows_[static_cast<std::size_t>(v)] |= 1ULL << u;
  }
};

/// Induced subgraph together with both direction index maps.
struct InducedView {
  Graph graph;
  std::vector<int> host_of;  // new index -> host vertex (ascending)
  std::vector<int> sub_of;   // host vertex -> new index, -1 if absent

  VertexSet to_host(VertexSet sub) const {
    VertexSet out;
    for (int v : sub) out.add(host_of[static_cast<std::size_t>(v)]);
    return out;
  }
  std::vector<int> to_host(const std::vector<int>& sub) const {
    std::vector<int> out;
    out.reserve(sub.size());
    for (int v : sub) out.push_back(host_of[static_cast<std::size_t>(v)]);
    return out;
  }
};

inline InducedView induced_subgraph(const Graph& g, VertexSet s) {
  g.check_set(s);
  InducedView view;
  view.host_of = s.to_vector();
  view.sub_of.assign(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < view.host_of.size(); ++i)
    view.sub_of[static_cast<std::size_t>(view.host_of[i])] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < view.host_of.size(); ++i)
    for (std::size_t j = i + 1; j < view.host_of.size(); ++j)
      if (g.adjacent(view.host_of[i], view.host_of[j]))
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  view.graph = Graph::from_edges(static_cast<int>(view.host_of.size()), edges);
  return view;
}

inline bool is_clique(const Graph& g, VertexSet x) {
  g.check_set(x);
  for (int v : x)
    if (!(x - VertexSet::single(v)).subset_of(g.neighbors(v))) return false;
  return true;
}

inline bool is_stable(const Graph& g, VertexSet x) {
  g.check_set(x);
  for (int v : x)
    if (g.neighbors(v).intersects(x)) return false;
  return true;
}

inline bool complete_to(const Graph& g, VertexSet x, VertexSet y) {
  g.check_set(x);
  g.check_set(y);
  if (x.intersects(y)) throw OverlappingSets("complete_to requires disjoint sets");
  for (int v : x)
    if (!y.subset_of(g.neighbors(v))) return false;
  return true;
}

inline bool anticomplete_to(const Graph& g, VertexSet x, VertexSet y) {
  g.check_set(x);
  g.check_set(y);
  if (x.intersects(y)) throw OverlappingSets("anticomplete_to requires disjoint sets");
  for (int v : x)
    if (g.neighbors(v).intersects(y)) return false;
  return true;
}

/// Connected components of G[s], ascending by smallest member.
inline std::vector<VertexSet> components(const Graph& g, VertexSet s) {
  g.check_set(s);
  std::vector<VertexSet> out;
  VertexSet left = s;
  while (!left.empty()) {
    VertexSet comp = VertexSet::single(left.first());
    for (;;) {
      VertexSet grow = (g.neighbors_of(comp) & left) | comp;
      if (grow == comp) break;
      comp = grow;
    }
    out.push_back(comp);
    left = left - comp;
  }
  return out;
}

inline bool is_connected(const Graph& g) {
  if (g.n() == 0) return true;
  return components(g, g.vertices()).size() == 1;
}

/// Distance classes N^0(Q)=Q, N^1(Q), N^2(Q), ... plus the vertices Q cannot
/// reach. layers[i] holds the vertices at distance exactly i from the base.
struct DistanceLayering {
  VertexSet base;
  std::vector<VertexSet> layers;
  VertexSet unreachable;

  int layer_of(int v) const {
    for (std::size_t i = 0; i < layers.size(); ++i)
      if (layers[i].contains(v)) return static_cast<int>(i);
    return -1;
  }

  /// N^{>=i}(Q) among the reachable vertices.
  VertexSet at_or_beyond(std::size_t i) const {
    VertexSet out;
    for (std::size_t j = i; j < layers.size(); ++j) out = out | layers[j];
    return out;
  }

  VertexSet layer(std::size_t i) const { return i < layers.size() ? layers[i] : VertexSet{}; }
};

inline DistanceLayering distance_layers(const Graph& g, VertexSet q) {
  g.check_set(q);
  if (q.empty()) throw EmptyBase("distance layering needs a nonempty base set");
  DistanceLayering d;
  d.base = q;
  d.layers.push_back(q);
  VertexSet seen = q;
  for (;;) {
    VertexSet next = g.neighbors_of(seen) - seen;
    if (next.empty()) break;
    d.layers.push_back(next);
    seen = seen | next;
  }
  d.unreachable = g.vertices() - seen;
  return d;
}

/// Ancestors of v: vertices in strictly earlier layers joined to v by a path
/// that steps down exactly one layer per edge.
inline VertexSet ancestors(const Graph& g, const DistanceLayering& d, int v) {
  g.check_vertex(v);
  int lv = d.layer_of(v);
  if (lv <= 0) return {};
  VertexSet out;
  VertexSet frontier = VertexSet::single(v);
  for (int i = lv - 1; i >= 0; --i) {
    VertexSet prev;
    for (int u : frontier) prev = prev | (g.neighbors(u) & d.layer(static_cast<std::size_t>(i)));
    out = out | prev;
    frontier = prev;
  }
  return out;
}

/// Descendants of v: the upward analogue of ancestors.
inline VertexSet descendants(const Graph& g, const DistanceLayering& d, int v) {
  g.check_vertex(v);
  int lv = d.layer_of(v);
  if (lv < 0) return {};
  VertexSet out;
  VertexSet frontier = VertexSet::single(v);
  for (std::size_t i = static_cast<std::size_t>(lv) + 1; i < d.layers.size(); ++i) {
    VertexSet next;
    for (int u : frontier) next = next | (g.neighbors(u) & d.layer(i));
    out = out | next;
    frontier = next;
  }
  return out;
}

}  // namespace chicrown
