#pragma once

#ifndef CHICROWN_COLORERS_SPLIT_INCLUDE
#error "include chicrown/colorers.hpp instead of this header"
#endif

// Scheme for connected (crown, P3uP2)-free graphs. Included by colorers.hpp,
// which provides the certificate types.

#include "chicrown/graph.hpp"
#include "chicrown/oracles.hpp"
#include "chicrown/patterns.hpp"
#include "chicrown/structure.hpp"

namespace chicrown {

namespace detail {

// Mutable scheme state for the middle block (cells N2..N8) of the p3p2
// colorer: trace bookkeeping plus small coloring helpers that either hit
// their printed budget or record a violation.
struct P3P2Mid {
  const Graph& g;
  ColoredCertificate& cert;
  std::vector<int>& colors;
  int cursor;             // next free color index
  bool violated = false;
  std::string violation;

  void fail(std::string what) {
    if (!violated) {
      violated = true;
      violation = std::move(what);
    }
  }

  void record(std::string id, VertexSet vs, std::string palette, int lo, int hi, long long budget,
              std::string method) {
    TraceStep s;
    s.step = std::move(id);
    s.vertices = vs;
    s.palette = std::move(palette);
    s.lo = lo;
    s.hi = hi;
    s.budget = budget;
    s.method = std::move(method);
    cert.trace.push_back(std::move(s));
  }

  // exact coloring under a printed budget
  void exact(const std::string& id, VertexSet vs, long long budget) {
    if (violated || vs.empty()) return;
    int used = exact_color_subset(g, vs, cursor, colors);
    record(id, vs, id, cursor, cursor + used, budget, "exact");
    if (used > budget)
      fail("step " + id + " needs " + std::to_string(used) + " colors, printed budget " +
           std::to_string(budget));
    cursor += used;
  }

  // one fresh color for a set claimed stable
  void stable(const std::string& id, VertexSet vs, const std::string& claim_id) {
    if (violated || vs.empty()) return;
    if (auto bad = adjacent_pair(g, vs)) {
      cert.claims.add_fail(claim_id,
                          pair_witness(bad->first, bad->second, "edge inside " + id));
      fail("set " + id + " is not stable");
      return;
    }
    cert.claims.add_pass(claim_id);
    for (int v : vs) colors[static_cast<std::size_t>(v)] = cursor;
    record(id, vs, id, cursor, cursor + 1, 1, "stable");
    ++cursor;
  }

  // perfect coloring under a printed budget; the perfection check is a claim
  void perfect(const std::string& id, VertexSet vs, long long budget,
               const std::string& claim_id) {
    if (violated || vs.empty()) return;
    auto view = induced_subgraph(g, vs);
    auto pv = is_perfect(view.graph);
    if (!pv.perfect) {
      pv.witness->cycle = view.to_host(pv.witness->cycle);
      cert.claims.add_fail(claim_id, hole_witness(std::move(*pv.witness)));
      fail("set " + id + " is not perfect");
      return;
    }
    cert.claims.add_pass(claim_id);
    int used = perfect_color_subset(g, vs, cursor, colors);
    record(id, vs, id, cursor, cursor + used, budget, "perfect");
    if (used > budget)
      fail("step " + id + " needs " + std::to_string(used) + " colors, printed budget " +
           std::to_string(budget));
    cursor += used;
  }

  // a cell the analysis says is empty
  bool expect_empty(const std::string& name, VertexSet vs) {
    if (vs.empty()) {
      cert.claims.add_pass("t3-2.1");
      return true;
    }
    cert.claims.add_fail("t3-2.1", set_witness(vs, name + " should be empty here"));
    fail("cell " + name + " is nonempty although the analysis empties it");
    return false;
  }
};

}  // namespace detail

/// Scheme for connected (crown, P3uP2)-free graphs. Claw-free inputs go to
/// the exact claw-free colorer; small clique numbers (<= 3) are colored
/// exactly against the cubic base bound; otherwise the trace cells around a
/// rooted claw are colored by the two-case analysis, the middle block is
/// certified against 2w colors, and one fresh color finishes the root plus
/// the stable far layers.
inline ColoredCertificate color_crown_p3p2(const Graph& g) {
  auto verdict = is_free(g, {pattern_catalog("crown"), pattern_catalog("p3p2")});
  if (!verdict.free) throw NotInClass("(crown,P3uP2)-free", std::move(*verdict.witness));
  if (!is_connected(g)) throw Disconnected("color_crown_p3p2 expects a connected graph");

  const int omega = clique_number(g).omega;
  BoundFunction bf = bound_crown_p3p2();

  auto claw = pick_claw(g);
  if (!claw) {
    ColoredCertificate cert = color_claw_free(g);
    cert.scheme = "crown-p3p2";
    cert.branch = "claw-free";
    return cert;
  }

  ColoredCertificate cert;
  cert.scheme = "crown-p3p2";
  cert.omega = omega;
  cert.bound = bf.eval(omega);
  cert.bound_formula = bf.id;

  if (omega <= 3) {
    cert.branch = "small-omega-exact";
    auto res = chromatic_number(g);
    long long cubic = bound_p3p2_cubic().eval(omega);
    if (res.chi > cubic) {
      cert.claims.add_fail("t4-1", detail::set_witness(g.vertices(),
                                                       "exact chromatic number " +
                                                           std::to_string(res.chi) +
                                                           " exceeds the cubic base bound " +
                                                           std::to_string(cubic)));
      return detail::violation_certificate(g, "crown-p3p2", cert.branch, omega, bf,
                                           "cubic base bound fails at omega <= 3",
                                           std::move(cert.claims), std::move(cert.trace));
    }
    cert.claims.add_pass("t4-1");
    cert.coloring = res.coloring;
    TraceStep s;
    s.step = "exact";
    s.vertices = g.vertices();
    s.palette = "P0";
    s.lo = 0;
    s.hi = res.chi;
    s.budget = cubic;
    s.method = "exact";
    cert.trace.push_back(std::move(s));
    if (cert.coloring.palette_size > cert.bound)
      return detail::violation_certificate(g, "crown-p3p2", cert.branch, omega, bf,
                                           "total palette exceeds the scheme bound",
                                           std::move(cert.claims), std::move(cert.trace));
    return cert;
  }

  cert.branch = "clawed";
  NeighborhoodPartition part = build_partition(g, *claw, PartitionScheme::P3P2);

  auto fail = [&](std::string what) {
    return detail::violation_certificate(g, "crown-p3p2", cert.branch, omega, bf, std::move(what),
                                         std::move(cert.claims), std::move(cert.trace));
  };

  // far layers are one stable set
  VertexSet far = part.outside.at_or_beyond(2);
  if (auto bad = detail::adjacent_pair(g, far)) {
    cert.claims.add_fail("stable-N>=2",
                         detail::pair_witness(bad->first, bad->second, "edge inside N^{>=2}(Q)"));
    return fail("N^{>=2}(Q) is not stable");
  }
  cert.claims.add_pass("stable-N>=2");

  // sort cells N2..N4 by clique number (descending), carrying N6..N8 along
  std::array<VertexSet, 9> cells = part.cells;
  std::array<int, 3> order{2, 3, 4};
  std::array<int, 5> w{};
  for (int i = 2; i <= 4; ++i)
    w[static_cast<std::size_t>(i)] = clique_number(induced_subgraph(g, cells[static_cast<std::size_t>(i)]).graph).omega;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return w[static_cast<std::size_t>(a)] > w[static_cast<std::size_t>(b)];
  });
  std::array<VertexSet, 9> sorted = cells;
  for (int t = 0; t < 3; ++t) {
    sorted[static_cast<std::size_t>(2 + t)] = cells[static_cast<std::size_t>(order[static_cast<std::size_t>(t)])];
    sorted[static_cast<std::size_t>(6 + t)] =
        cells[static_cast<std::size_t>(order[static_cast<std::size_t>(t)] + 4)];
  }
  cells = sorted;
  const int w2 = w[static_cast<std::size_t>(order[0])];
  const int w3 = w[static_cast<std::size_t>(order[1])];
  const int w4 = w[static_cast<std::size_t>(order[2])];
  cert.branch += ";cells=(" + std::to_string(order[0]) + "," + std::to_string(order[1]) + "," +
                 std::to_string(order[2]) + ")";

  std::vector<int> colors(static_cast<std::size_t>(g.n()), -1);

  // N1 = N(v1), claw-free with clique number below omega
  VertexSet n1 = cells[1];
  long long n1_budget = detail::exact_div(1LL * omega * omega - omega, 2, "n1 budget");
  int width_n1 = n1.empty() ? 0 : detail::exact_color_subset(g, n1, 0, colors);
  {
    TraceStep s;
    s.step = "n-v1";
    s.vertices = n1;
    s.palette = "N1";
    s.lo = 0;
    s.hi = width_n1;
    s.budget = n1_budget;
    s.method = "exact";
    cert.trace.push_back(std::move(s));
  }
  if (width_n1 > n1_budget) return fail("N(v1) exceeded the claw-free budget");

  // middle block: cells N2..N8 within 2*omega colors
  detail::P3P2Mid mid{g, cert, colors, width_n1, false, {}};

  auto cell = [&](int i) { return cells[static_cast<std::size_t>(i)]; };

  // colors one (N_i, N_{i+4}) pair under the printed two- or three-color
  // budget used by the low-clique sub-branches
  auto pair_cells = [&](int i, int wi, long long exact_budget) {
    std::string ni = "N" + std::to_string(i);
    std::string nj = "N" + std::to_string(i + 4);
    if (wi >= 2) {
      if (!mid.expect_empty(nj, cell(i + 4))) return;
      mid.exact(ni, cell(i), exact_budget);
    } else {
      mid.stable(ni, cell(i), "t3-cells");
      mid.stable(nj, cell(i + 4), "t3-cells");
    }
  };

  if (w2 >= 4) {
    // a clique of N2 extends by the leaf it is complete to, so omega >= 5 here
    if (omega < 5) return fail("partition inconsistency: omega(N2) >= 4 but omega(G) < 5");
    if (w3 >= 3) {
      // both N2 and N3 are cliques, their union is perfect
      for (int i : {2, 3})
        if (auto bad = detail::non_adjacent_pair(g, cell(i))) {
          cert.claims.add_fail("t3-2.3", detail::pair_witness(bad->first, bad->second,
                                                              "cell expected to be a clique"));
          return fail("a large cell is not a clique");
        }
      cert.claims.add_pass("t3-2.3");
      mid.perfect("N2+N3", cell(2) | cell(3), omega, "n2n3-perfect");
      if (!mid.expect_empty("N6", cell(6)) || !mid.expect_empty("N7", cell(7)))
        return fail(mid.violation);
      if (w4 <= 1) {
        mid.stable("N4", cell(4), "t3-cells");
        mid.stable("N5", cell(5), "t3-cells");
        mid.stable("N8", cell(8), "t3-cells");
      } else {
        if (!mid.expect_empty("N8", cell(8))) return fail(mid.violation);
        if (auto bad = detail::non_adjacent_pair(g, cell(4))) {
          cert.claims.add_fail("t3-2.2", detail::pair_witness(bad->first, bad->second,
                                                              "N4 expected to be a clique"));
          return fail("N4 is not a clique in the large-cell case");
        }
        cert.claims.add_pass("t3-2.2");
        mid.perfect("N4+N5", cell(4) | cell(5), omega - 1, "n4n5-perfect");
      }
    } else {
      if (!mid.expect_empty("N6", cell(6))) return fail(mid.violation);
      mid.exact("N2", cell(2), omega - 1);
      pair_cells(3, w3, 2);
      pair_cells(4, w4, 2);
      mid.stable("N5", cell(5), "t3-cells");
    }
  } else {
    if (w2 <= 2) {
      pair_cells(2, w2, 2);
      pair_cells(3, w3, 2);
      pair_cells(4, w4, 2);
      mid.stable("N5", cell(5), "t3-cells");
    } else if (w3 <= 2) {
      // w2 == 3
      if (!mid.expect_empty("N6", cell(6))) return fail(mid.violation);
      mid.exact("N2", cell(2), 3);
      pair_cells(3, w3, 2);
      pair_cells(4, w4, 2);
      mid.stable("N5", cell(5), "t3-cells");
    } else {
      // w2 == w3 == 3: both cells are cliques and their union is perfect
      for (int i : {2, 3})
        if (auto bad = detail::non_adjacent_pair(g, cell(i))) {
          cert.claims.add_fail("t3-2.3", detail::pair_witness(bad->first, bad->second,
                                                              "cell expected to be a clique"));
          return fail("a three-clique cell is not a clique");
        }
      cert.claims.add_pass("t3-2.3");
      mid.perfect("N2+N3", cell(2) | cell(3), omega, "n2n3-perfect");
      if (!mid.expect_empty("N6", cell(6)) || !mid.expect_empty("N7", cell(7)))
        return fail(mid.violation);
      if (w4 <= 2) {
        pair_cells(4, w4, 2);
        mid.stable("N5", cell(5), "t3-cells");
      } else {
        // all three cells have clique number 3; N4 is then also a clique
        if (auto bad = detail::non_adjacent_pair(g, cell(4))) {
          cert.claims.add_fail("t3-2.3", detail::pair_witness(bad->first, bad->second,
                                                              "N4 expected to be a clique"));
          return fail("N4 is not a clique although three cells reach clique number 3");
        }
        if (!mid.expect_empty("N8", cell(8))) return fail(mid.violation);
        mid.perfect("N4+N5", cell(4) | cell(5), omega - 1, "n4n5-perfect");
      }
    }
  }
  if (mid.violated) return fail(mid.violation);

  int mid_width = mid.cursor - width_n1;
  if (mid_width > 2LL * omega) {
    cert.claims.add_fail("t3-3", detail::set_witness(part.n_of_q - cells[1],
                                                     "middle block used " +
                                                         std::to_string(mid_width) + " colors"));
    return fail("cells N2..N8 exceeded 2*omega colors");
  }
  cert.claims.add_pass("t3-3");

  // one fresh color for the root plus all far layers
  VertexSet last = far | VertexSet::single(part.root());
  for (int v : last) colors[static_cast<std::size_t>(v)] = mid.cursor;
  {
    TraceStep s;
    s.step = "root-and-far";
    s.vertices = last;
    s.palette = "Z";
    s.lo = mid.cursor;
    s.hi = mid.cursor + 1;
    s.budget = 1;
    s.method = "stable";
    cert.trace.push_back(std::move(s));
  }

  VertexSet uncolored;
  for (int v = 0; v < g.n(); ++v)
    if (colors[static_cast<std::size_t>(v)] == -1) uncolored.add(v);
  if (!uncolored.empty()) {
    cert.claims.add_fail("cover", detail::set_witness(uncolored, "vertices missed by the scheme"));
    return fail("scheme did not cover the whole graph");
  }
  cert.claims.add_pass("cover");

  cert.coloring = Coloring::of(std::move(colors));
  if (cert.coloring.palette_size > cert.bound)
    return fail("total palette exceeds the scheme bound");
  return cert;
}

}  // namespace chicrown
