#pragma once

// Catalog of small forbidden configurations and induced-subgraph search.
// Patterns carry a canonical vertex order (roughly degree-descending), so the
// backtracking search below visits images in lexicographic order and the
// first hit is reproducible.

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chicrown/graph.hpp"

namespace chicrown {

struct Pattern {
  std::string name;
  Graph graph;
  std::optional<int> root;  // e.g. the degree-3 vertex of a claw
};

inline Pattern make_path(int k) {
  if (k < 1) throw UnknownPattern("P_k needs k >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
  return {"p" + std::to_string(k), Graph::from_edges(k, e), std::nullopt};
}

inline Pattern make_cycle(int k) {
  if (k < 3) throw UnknownPattern("C_k needs k >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
  return {"c" + std::to_string(k), Graph::from_edges(k, e), std::nullopt};
}

inline Pattern make_complete(int k) {
  if (k < 1) throw UnknownPattern("K_k needs k >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) e.emplace_back(i, j);
  return {"k" + std::to_string(k), Graph::from_edges(k, e), std::nullopt};
}

/// Disjoint side-by-side placement of two patterns.
inline Pattern make_union(const Pattern& a, const Pattern& b) {
  int na = a.graph.n();
  std::vector<std::pair<int, int>> e = a.graph.edges();
  for (auto [u, v] : b.graph.edges()) e.emplace_back(u + na, v + na);
  return {a.name + "u" + b.name, Graph::from_edges(na + b.graph.n(), e), a.root};
}

/// K1 + H: a fresh apex joined to every vertex of h.
inline Pattern make_k1_join(const Pattern& h) {
  std::vector<std::pair<int, int>> e;
  for (auto [u, v] : h.graph.edges()) e.emplace_back(u + 1, v + 1);
  for (int v = 0; v < h.graph.n(); ++v) e.emplace_back(0, v + 1);
  std::optional<int> root;
  if (h.root) root = *h.root + 1;
  return {"k1+" + h.name, Graph::from_edges(h.graph.n() + 1, e), root};
}

/// Named catalog plus the parametric forms pK / cK / kK, the m-fold union
/// prefix ("2k2", "3k1") and the join prefix ("k1+claw").
inline Pattern pattern_catalog(std::string_view name) {
  std::string s(name);
  if (s == "claw") return {"claw", Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}}), 0};
  if (s == "crown")
    // vertex 0 is the claw center, vertex 1 the apex joined to the whole claw
    return {"crown",
            Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}), 0};
  if (s == "fork")
    return {"fork", Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 3}, {0, 4}}), 0};
  if (s == "diamond")
    return {"diamond", Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}), std::nullopt};
  if (s == "dart")
    return {"dart",
            Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}}), std::nullopt};
  if (s == "hvn")
    return {"hvn",
            Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 4}}),
            std::nullopt};
  if (s == "p3p2")
    return {"p3p2", Graph::from_edges(5, {{0, 1}, {0, 2}, {3, 4}}), std::nullopt};
  if (s == "p2k1") return {"p2k1", Graph::from_edges(3, {{0, 1}}), std::nullopt};
  if (s == "p3k1") return {"p3k1", Graph::from_edges(4, {{0, 1}, {0, 2}}), std::nullopt};

  if (s.rfind("k1+", 0) == 0) {
    Pattern inner = pattern_catalog(s.substr(3));
    Pattern joined = make_k1_join(inner);
    joined.name = s;
    return joined;
  }

  auto all_digits = [](std::string_view t) {
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };

  if ((s[0] == 'p' || s[0] == 'c' || s[0] == 'k') && all_digits(std::string_view(s).substr(1))) {
    int k = std::stoi(s.substr(1));
    if (s[0] == 'p') return make_path(k);
    if (s[0] == 'c') return make_cycle(k);
    return make_complete(k);
  }

  // m-fold union: leading multiplicity digit(s) before a catalog name
  std::size_t digits = 0;
  while (digits < s.size() && std::isdigit(static_cast<unsigned char>(s[digits]))) ++digits;
  if (digits > 0 && digits < s.size()) {
    int m = std::stoi(s.substr(0, digits));
    if (m >= 1) {
      Pattern base = pattern_catalog(s.substr(digits));
      Pattern out = base;
      for (int i = 1; i < m; ++i) out = make_union(out, base);
      out.name = s;
      return out;
    }
  }

  throw UnknownPattern("unknown pattern '" + s + "'");
}

/// Injective induced mapping pattern vertex i -> image[i] in the host.
struct Embedding {
  Pattern pattern;
  std::vector<int> image;

  bool validate(const Graph& host) const {
    int pn = pattern.graph.n();
    if (static_cast<int>(image.size()) != pn) return false;
    VertexSet seen;
    for (int v : image) {
      if (v < 0 || v >= host.n() || seen.contains(v)) return false;
      seen.add(v);
    }
    for (int i = 0; i < pn; ++i)
      for (int j = i + 1; j < pn; ++j)
        if (host.adjacent(image[static_cast<std::size_t>(i)], image[static_cast<std::size_t>(j)]) !=
            pattern.graph.adjacent(i, j))
          return false;
    return true;
  }

  VertexSet image_set() const {
    VertexSet s;
    for (int v : image) s.add(v);
    return s;
  }
};

namespace detail {

inline bool find_induced_impl(const Graph& g, const Pattern& p, bool all,
                              std::vector<Embedding>& out) {
  const int pn = p.graph.n();
  const int hn = g.n();
  if (pn == 0) {
    out.push_back({p, {}});
    return true;
  }
  if (pn > hn) return false;

  std::vector<int> image(static_cast<std::size_t>(pn), -1);
  std::uint64_t used = 0;
  bool found = false;

  auto rec = [&](auto&& self, int depth) -> bool {
    for (int v = 0; v < hn; ++v) {
      if ((used >> v) & 1ULL) continue;
      if (g.degree(v) < p.graph.degree(depth)) continue;
      bool ok = true;
      for (int j = 0; j < depth && ok; ++j)
        ok = g.adjacent(image[static_cast<std::size_t>(j)], v) == p.graph.adjacent(j, depth);
      if (!ok) continue;
      image[static_cast<std::size_t>(depth)] = v;
      used |= 1ULL << v;
      if (depth + 1 == pn) {
        out.push_back({p, image});
        found = true;
        if (!all) {
          used &= ~(1ULL << v);
          return true;
        }
      } else if (self(self, depth + 1) && !all) {
        used &= ~(1ULL << v);
        return true;
      }
      used &= ~(1ULL << v);
    }
    return found;
  };
  rec(rec, 0);
  return found;
}

}  // namespace detail

/// First induced embedding in deterministic order (lexicographically smallest
/// image tuple under the pattern's canonical vertex order), or nothing.
inline std::optional<Embedding> find_induced(const Graph& g, const Pattern& p) {
  std::vector<Embedding> out;
  if (detail::find_induced_impl(g, p, false, out)) return out.front();
  return std::nullopt;
}

/// Every induced embedding, duplicate-free under vertex-image identity.
/// Embeddings differing only by a pattern automorphism are all reported.
inline std::vector<Embedding> find_all_induced(const Graph& g, const Pattern& p) {
  std::vector<Embedding> out;
  detail::find_induced_impl(g, p, true, out);
  return out;
}

struct FreeVerdict {
  bool free = true;
  std::optional<Embedding> witness;
};

/// True iff no listed pattern embeds; otherwise carries the first witness.
inline FreeVerdict is_free(const Graph& g, const std::vector<Pattern>& ps) {
  for (const Pattern& p : ps)
    if (auto e = find_induced(g, p)) return {false, std::move(e)};
  return {true, std::nullopt};
}

/// The input is outside the hereditary class an operation requires.
class NotInClass : public Error {
 public:
  NotInClass(const std::string& klass, Embedding witness)
      : Error("input is not " + klass + "; induced " + witness.pattern.name + " found"),
        witness_(std::move(witness)) {}
  const Embedding& witness() const { return witness_; }

 private:
  Embedding witness_;
};

struct ClassFlags {
  bool has_claw = false;
  bool has_crown = false;
  bool has_fork = false;
  bool has_p5 = false;
  bool has_p3p2 = false;
  bool has_diamond = false;
  bool has_dart = false;
  bool has_hvn = false;

  bool crown_p5_free() const { return !has_crown && !has_p5; }
  bool crown_fork_free() const { return !has_crown && !has_fork; }
  bool crown_p3p2_free() const { return !has_crown && !has_p3p2; }
};

inline ClassFlags classify(const Graph& g) {
  ClassFlags f;
  f.has_claw = find_induced(g, pattern_catalog("claw")).has_value();
  f.has_crown = find_induced(g, pattern_catalog("crown")).has_value();
  f.has_fork = find_induced(g, pattern_catalog("fork")).has_value();
  f.has_p5 = find_induced(g, pattern_catalog("p5")).has_value();
  f.has_p3p2 = find_induced(g, pattern_catalog("p3p2")).has_value();
  f.has_diamond = find_induced(g, pattern_catalog("diamond")).has_value();
  f.has_dart = find_induced(g, pattern_catalog("dart")).has_value();
  f.has_hvn = find_induced(g, pattern_catalog("hvn")).has_value();
  return f;
}

}  // namespace chicrown
