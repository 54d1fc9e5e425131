#pragma once

// Exact desk-scale decision procedures: clique number, chromatic number,
// odd hole / odd antihole search, perfection, and the stable+clique /
// two-cliques partition testers. Everything is deterministic for a fixed
// input labeling. Intended scale is n <= 16 for the exponential searches;
// larger inputs are accepted and simply cost more.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chicrown/graph.hpp"
#include "chicrown/patterns.hpp"

namespace chicrown {

struct Coloring {
  std::vector<int> colors;  // vertex -> 0-based color
  int palette_size = 0;

  static Coloring of(std::vector<int> c) {
    Coloring out{std::move(c), 0};
    std::vector<int> distinct(out.colors);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    out.palette_size = static_cast<int>(distinct.size());
    return out;
  }
};

inline bool is_proper(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.colors.size()) != g.n()) return false;
  for (auto [u, v] : g.edges())
    if (c.colors[static_cast<std::size_t>(u)] == c.colors[static_cast<std::size_t>(v)]) return false;
  return true;
}

struct CliqueResult {
  int omega = 0;
  VertexSet witness;
};

namespace detail {

// Greedy color classes over the candidate set; returns per-vertex class
// numbers (1-based) in ascending class order, used as the search bound.
struct CliqueSolver {
  const Graph& g;
  VertexSet best;

  void expand(VertexSet r, VertexSet p) {
    if (p.empty()) {
      if (r.count() > best.count()) best = r;
      return;
    }
    // color classes of G[p], greedy over ascending vertices
    std::vector<std::pair<int, int>> order;  // (vertex, class number)
    {
      VertexSet left = p;
      int cls = 0;
      while (!left.empty()) {
        ++cls;
        VertexSet avail = left;
        while (!avail.empty()) {
          int v = avail.first();
          order.emplace_back(v, cls);
          avail = avail - (g.neighbors(v) | VertexSet::single(v));
          left.remove(v);
        }
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      auto [v, cls] = order[i];
      if (r.count() + cls <= best.count()) return;
      if (!p.contains(v)) continue;
      expand(r | VertexSet::single(v), p & g.neighbors(v));
      p.remove(v);
    }
  }
};

}  // namespace detail

/// Maximum clique size with a witness clique.
inline CliqueResult clique_number(const Graph& g) {
  detail::CliqueSolver s{g, {}};
  s.expand({}, g.vertices());
  return {s.best.count(), s.best};
}

/// Proper k-coloring if one exists; deterministic for fixed (g, k).
/// DSATUR-ordered branch and bound with first-fresh-color symmetry breaking.
inline std::optional<Coloring> k_colorable(const Graph& g, int k) {
  const int n = g.n();
  if (n == 0) return Coloring{{}, 0};
  if (k <= 0) return std::nullopt;
  const int cap = std::min(k, n);

  std::vector<int> colors(static_cast<std::size_t>(n), -1);
  std::vector<std::uint64_t> forbidden(static_cast<std::size_t>(n), 0);  // colors seen on neighbors
  int assigned = 0;

  auto pick = [&]() {
    int best = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (colors[static_cast<std::size_t>(v)] != -1) continue;
      int sat = std::popcount(forbidden[static_cast<std::size_t>(v)]);
      int deg = g.degree(v);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  };

  auto rec = [&](auto&& self, int max_used) -> bool {
    if (assigned == n) return true;
    int v = pick();
    int limit = std::min(cap - 1, max_used);  // allow one fresh color
    for (int c = 0; c <= limit; ++c) {
      if ((forbidden[static_cast<std::size_t>(v)] >> c) & 1ULL) continue;
      colors[static_cast<std::size_t>(v)] = c;
      ++assigned;
      std::vector<int> touched;
      for (int u : g.neighbors(v))
        if (colors[static_cast<std::size_t>(u)] == -1 &&
            !((forbidden[static_cast<std::size_t>(u)] >> c) & 1ULL)) {
          forbidden[static_cast<std::size_t>(u)] |= 1ULL << c;
          touched.push_back(u);
        }
      if (self(self, std::max(max_used, c + 1))) return true;
      for (int u : touched) forbidden[static_cast<std::size_t>(u)] &= ~(1ULL << c);
      colors[static_cast<std::size_t>(v)] = -1;
      --assigned;
    }
    return false;
  };

  if (!rec(rec, 0)) return std::nullopt;
  return Coloring::of(colors);
}

struct ChromaticResult {
  int chi = 0;
  Coloring coloring;
};

namespace detail {

// Welsh-Powell greedy coloring: degree descending, index ascending.
inline Coloring greedy_coloring(const Graph& g) {
  const int n = g.n();
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<int> colors(static_cast<std::size_t>(n), -1);
  for (int v : order) {
    std::uint64_t used = 0;
    for (int u : g.neighbors(v))
      if (colors[static_cast<std::size_t>(u)] >= 0) used |= 1ULL << colors[static_cast<std::size_t>(u)];
    int c = 0;
    while ((used >> c) & 1ULL) ++c;
    colors[static_cast<std::size_t>(v)] = c;
  }
  return Coloring::of(colors);
}

}  // namespace detail

/// Exact chromatic number: iterative deepening between the clique lower
/// bound and a greedy upper bound.
inline ChromaticResult chromatic_number(const Graph& g) {
  if (g.n() == 0) return {0, Coloring{{}, 0}};
  int lower = clique_number(g).omega;
  Coloring greedy = detail::greedy_coloring(g);
  int upper = greedy.palette_size;
  for (int k = lower; k < upper; ++k)
    if (auto c = k_colorable(g, k)) return {k, std::move(*c)};
  return {upper, std::move(greedy)};
}

struct HoleWitness {
  enum class Kind { Hole, Antihole };
  std::vector<int> cycle;  // consecutive entries adjacent (in g, resp. complement(g))
  Kind kind = Kind::Hole;

  int length() const { return static_cast<int>(cycle.size()); }
  bool odd() const { return length() % 2 == 1; }

  /// Re-checks the induced-cycle invariants against the host graph.
  bool validate(const Graph& g) const {
    const Graph host = kind == Kind::Hole ? g : complement(g);
    int len = length();
    if (len < (kind == Kind::Hole ? 4 : 5)) return false;
    VertexSet seen;
    for (int v : cycle) {
      if (v < 0 || v >= g.n() || seen.contains(v)) return false;
      seen.add(v);
    }
    for (int i = 0; i < len; ++i)
      for (int j = i + 1; j < len; ++j) {
        bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
        if (host.adjacent(cycle[static_cast<std::size_t>(i)], cycle[static_cast<std::size_t>(j)]) !=
            consecutive)
          return false;
      }
    return true;
  }
};

namespace detail {

// Depth-first extension of induced paths, closing odd cycles of length >= 5.
// The path stays chordless; a neighbor of the tip adjacent to the start
// vertex either closes the cycle now or can never join the path.
inline std::optional<std::vector<int>> odd_hole_cycle(const Graph& g) {
  const int n = g.n();
  std::vector<int> path;
  std::optional<std::vector<int>> result;

  auto rec = [&](auto&& self, int anchor) -> bool {
    int tip = path.back();
    for (int w : g.neighbors(tip)) {
      if (w <= anchor) continue;
      bool in_path = false, chord = false;
      for (std::size_t i = 0; i < path.size() && !chord; ++i) {
        if (path[i] == w) in_path = true;
        // adjacency to interior vertices (everything but the tip and,
        // for the closing edge, the anchor) would be a chord
        if (i + 1 < path.size() && i > 0 && g.adjacent(path[i], w)) chord = true;
      }
      if (in_path || chord) continue;
      bool closes = path.size() >= 2 && g.adjacent(w, anchor);
      std::size_t len = path.size() + 1;
      if (closes) {
        if (len >= 5 && len % 2 == 1) {
          path.push_back(w);
          result = path;
          return true;
        }
        continue;  // w would leave a chord to the anchor
      }
      path.push_back(w);
      if (self(self, anchor)) return true;
      path.pop_back();
    }
    return false;
  };

  for (int a = 0; a < n; ++a) {
    path.assign(1, a);
    if (rec(rec, a)) return result;
  }
  return std::nullopt;
}

}  // namespace detail

/// First odd induced cycle of length >= 5, if any.
inline std::optional<HoleWitness> find_odd_hole(const Graph& g) {
  if (auto cyc = detail::odd_hole_cycle(g))
    return HoleWitness{std::move(*cyc), HoleWitness::Kind::Hole};
  return std::nullopt;
}

/// First odd antihole (length >= 5), reported in host labels.
inline std::optional<HoleWitness> find_odd_antihole(const Graph& g) {
  if (auto cyc = detail::odd_hole_cycle(complement(g)))
    return HoleWitness{std::move(*cyc), HoleWitness::Kind::Antihole};
  return std::nullopt;
}

struct PerfectionVerdict {
  bool perfect = true;
  std::optional<HoleWitness> witness;
};

/// Perfection by the forbidden-structure characterization: no odd hole and
/// no odd antihole.
inline PerfectionVerdict is_perfect(const Graph& g) {
  if (auto h = find_odd_hole(g)) return {false, std::move(h)};
  if (auto a = find_odd_antihole(g)) return {false, std::move(a)};
  return {true, std::nullopt};
}

class NotPerfect : public Error {
 public:
  explicit NotPerfect(HoleWitness witness)
      : Error(std::string("graph is not perfect: odd ") +
              (witness.kind == HoleWitness::Kind::Hole ? "hole" : "antihole") + " of length " +
              std::to_string(witness.length())),
        witness_(std::move(witness)) {}
  const HoleWitness& witness() const { return witness_; }

 private:
  HoleWitness witness_;
};

/// Optimal coloring of a perfect graph (exact search; the result is checked
/// to use exactly clique_number colors). Throws NotPerfect otherwise.
inline Coloring color_perfect(const Graph& g) {
  auto verdict = is_perfect(g);
  if (!verdict.perfect) throw NotPerfect(std::move(*verdict.witness));
  auto [chi, coloring] = chromatic_number(g);
  if (chi != clique_number(g).omega)
    throw Error("internal: perfect graph colored with chi != omega");
  return coloring;
}

namespace detail {

inline bool is_bipartite(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.n()), -1);
  for (int s = 0; s < g.n(); ++s) {
    if (side[static_cast<std::size_t>(s)] != -1) continue;
    side[static_cast<std::size_t>(s)] = 0;
    std::vector<int> queue{s};
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      for (int u : g.neighbors(v)) {
        if (side[static_cast<std::size_t>(u)] == -1) {
          side[static_cast<std::size_t>(u)] = 1 - side[static_cast<std::size_t>(v)];
          queue.push_back(u);
        } else if (side[static_cast<std::size_t>(u)] == side[static_cast<std::size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace detail

struct PartitionTests {
  bool splits_into_stable_and_clique = false;
  bool splits_into_two_cliques = false;
};

/// Exact partition testers: split graphs via the forbidden triple
/// {2K2, C4, C5}; two cliques via bipartiteness of the complement.
inline PartitionTests partition_testers(const Graph& g) {
  bool split =
      is_free(g, {pattern_catalog("2k2"), pattern_catalog("c4"), pattern_catalog("c5")}).free;
  bool two_cliques = detail::is_bipartite(complement(g));
  return {split, two_cliques};
}

}  // namespace chicrown
