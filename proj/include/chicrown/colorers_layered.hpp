#pragma once

#ifndef CHICROWN_COLORERS_SPLIT_INCLUDE
#error "include chicrown/colorers.hpp instead of this header"
#endif

// Layered scheme for connected (P5, K1+H)-free graphs, parameterized by a
// base colorer for (P5, H)-free graphs and its bound f. Included by
// colorers.hpp, which provides the certificate types.

#include "chicrown/graph.hpp"
#include "chicrown/oracles.hpp"
#include "chicrown/patterns.hpp"
#include "chicrown/structure.hpp"

namespace chicrown {

using BaseColorer = std::function<ColoredCertificate(const Graph&)>;

/// Colors a connected (P5, K1+H)-free graph: H-free inputs go to the base;
/// otherwise one palette per copy vertex covers N(Q), a shared palette covers
/// the distance-two components, and the copy itself reuses that shared range.
/// h must be connected, or a connected graph plus one isolated vertex, with
/// at least three vertices.
inline ColoredCertificate color_layered_generic(const Graph& g, const Pattern& h,
                                                const BaseColorer& base,
                                                const BoundFunction& f) {
  const int h_n = h.graph.n();
  if (h_n < 3) throw PreconditionUnmet("pattern h needs at least 3 vertices");
  auto h_comps = components(h.graph, h.graph.vertices());
  int isolated_pattern_vertex = -1;
  if (h_comps.size() == 2) {
    for (const VertexSet& c : h_comps)
      if (c.count() == 1) isolated_pattern_vertex = c.first();
    if (isolated_pattern_vertex == -1)
      throw PreconditionUnmet("pattern h must be connected or connected plus one isolated vertex");
  } else if (h_comps.size() != 1) {
    throw PreconditionUnmet("pattern h must be connected or connected plus one isolated vertex");
  }
  const bool split_case = isolated_pattern_vertex >= 0;

  Pattern joined = make_k1_join(h);
  auto verdict = is_free(g, {pattern_catalog("p5"), joined});
  if (!verdict.free) throw NotInClass("(P5,K1+" + h.name + ")-free", std::move(*verdict.witness));
  if (!is_connected(g)) throw Disconnected("color_layered_generic expects a connected graph");

  const int omega = clique_number(g).omega;
  const int chi_h = chromatic_number(h.graph).chi;
  BoundFunction bf = bound_layered(h_n, chi_h, f);

  ColoredCertificate cert;
  cert.scheme = "layered(" + h.name + ")";
  cert.omega = omega;
  cert.bound = bf.eval(omega);
  cert.bound_formula = bf.id;

  auto q_emb = find_induced(g, h);
  if (!q_emb) {
    ColoredCertificate inner = base(g);
    if (inner.coloring.palette_size > f.eval(omega)) {
      cert.claims.add_fail("base-bound",
                           detail::set_witness(g.vertices(),
                                               "base colorer used " +
                                                   std::to_string(inner.coloring.palette_size) +
                                                   " colors, f gives " +
                                                   std::to_string(f.eval(omega))));
      return detail::violation_certificate(g, cert.scheme, "h-free-base", omega, bf,
                                           "base colorer exceeded its own bound",
                                           std::move(cert.claims), std::move(cert.trace));
    }
    cert.branch = "h-free-base";
    cert.coloring = inner.coloring;
    cert.trace = std::move(inner.trace);
    cert.claims = std::move(inner.claims);
    cert.claims.add_pass("base-bound");
    cert.violation = inner.violation;
    return cert;
  }

  cert.branch = split_case ? "copy-found/split" : "copy-found/connected";
  VertexSet q = q_emb->image_set();
  DistanceLayering layers = distance_layers(g, q);
  const long long f_small = f.eval(omega - 1);

  auto fail = [&](std::string what) {
    return detail::violation_certificate(g, cert.scheme, cert.branch, omega, bf, std::move(what),
                                         std::move(cert.claims), std::move(cert.trace));
  };

  // eqa-2: nothing lives at distance three or more
  if (!layers.layer(3).empty() || !layers.unreachable.empty()) {
    VertexSet offending = layers.layer(3) | layers.unreachable;
    cert.claims.add_fail("eqa-2", detail::set_witness(offending, "vertices beyond distance 2"));
    return fail("vertices beyond the second layer of the copy");
  }
  cert.claims.add_pass("eqa-2");

  if (split_case) {
    const int v_iso = q_emb->image[static_cast<std::size_t>(isolated_pattern_vertex)];
    VertexSet q_rest = q - VertexSet::single(v_iso);

    // c-1: the isolated copy vertex sits at distance exactly two from the rest
    {
      DistanceLayering from_rest = distance_layers(g, q_rest);
      if (from_rest.layer_of(v_iso) != 2) {
        cert.claims.add_fail("c-1", detail::vertex_witness(v_iso, "isolated copy vertex at distance " +
                                                                      std::to_string(from_rest.layer_of(v_iso))));
        return fail("isolated copy vertex is not at distance two from the rest of the copy");
      }
      cert.claims.add_pass("c-1");
    }

    // c-2: every distance-two vertex has an ancestor in the connected part
    for (int u : layers.layer(2)) {
      if (!(ancestors(g, layers, u) & q_rest).empty()) continue;
      cert.claims.add_fail("c-2", detail::vertex_witness(u, "no ancestor in the connected part"));
      return fail("a distance-two vertex has ancestors only at the isolated copy vertex");
    }
    cert.claims.add_pass("c-2");

    // c-3: attachers of the second layer are not complete to the connected part
    for (int u1 : layers.layer(1)) {
      if ((g.neighbors(u1) & layers.layer(2)).empty()) continue;
      if (q_rest.subset_of(g.neighbors(u1))) {
        cert.claims.add_fail("c-3", detail::vertex_witness(
                                        u1, "attacher complete to the connected part of the copy"));
        return fail("an attacher of the second layer is complete to the connected part");
      }
    }
    cert.claims.add_pass("c-3");
  } else {
    // eqa-1: every attacher starts an induced two-edge path into the copy
    for (int u : layers.layer(1)) {
      VertexSet inside = g.neighbors(u) & q;
      bool found = false;
      for (int a : inside) {
        if (!((g.neighbors(a) & q) - inside).empty()) {
          found = true;
          break;
        }
      }
      if (!found) {
        cert.claims.add_fail("eqa-1", detail::vertex_witness(u, "no induced P3 from the attacher"));
        return fail("an attacher admits no induced P3 into the copy");
      }
    }
    cert.claims.add_pass("eqa-1");
  }

  // eqa-3: attachers are complete to the distance-two components they touch
  auto n2_comps = components(g, layers.layer(2));
  for (const VertexSet& u_comp : n2_comps)
    for (int u1 : layers.layer(1)) {
      VertexSet hits = g.neighbors(u1) & u_comp;
      if (!hits.empty() && hits != u_comp) {
        CheckWitness w = detail::set_witness(u_comp, "partially attached distance-two component");
        w.vertices.insert(w.vertices.begin(), u1);
        cert.claims.add_fail("eqa-3", std::move(w));
        return fail("an attacher is neither complete nor anticomplete to a distance-two component");
      }
    }
  cert.claims.add_pass("eqa-3");

  // every copy vertex has an h-free neighborhood
  for (int u : q_emb->image) {
    auto view = induced_subgraph(g, g.neighbors(u));
    if (auto emb = find_induced(view.graph, h)) {
      emb->image = view.to_host(emb->image);
      CheckWitness w;
      w.kind = "embedding";
      w.vertices = emb->image;
      w.set = emb->image_set();
      w.embedding = std::move(emb);
      w.note = "copy inside the neighborhood of copy vertex " + std::to_string(u);
      cert.claims.add_fail("h-free-neighborhood", std::move(w));
      return fail("a copy vertex has a copy of h inside its neighborhood");
    }
  }
  cert.claims.add_pass("h-free-neighborhood");

  std::vector<int> colors(static_cast<std::size_t>(g.n()), -1);

  // shared palette: distance-two components via the base, then the copy itself
  int shared_width = 0;
  int comp_idx = 0;
  for (const VertexSet& comp : n2_comps) {
    auto view = induced_subgraph(g, comp);
    ColoredCertificate inner = base(view.graph);
    if (inner.violation)
      return fail("base colorer reported a violation on a distance-two component: " +
                  *inner.violation);
    if (inner.coloring.palette_size > f_small)
      return fail("a distance-two component needed " +
                  std::to_string(inner.coloring.palette_size) + " colors, f(omega-1) gives " +
                  std::to_string(f_small));
    detail::splice_subcertificate(g, view, inner, 0,
                                  "n2-component-" + std::to_string(comp_idx++) + "/", colors,
                                  cert.trace, cert.claims);
    shared_width = std::max(shared_width, inner.coloring.palette_size);
  }

  // the copy is anticomplete to the second layer and reuses the shared range
  {
    int used = detail::exact_color_subset(g, q, 0, colors);
    TraceStep s;
    s.step = "copy";
    s.vertices = q;
    s.palette = "shared";
    s.lo = 0;
    s.hi = used;
    s.budget = std::max<long long>(chi_h, f_small);
    s.method = "reuse";
    s.reuse_of = "shared";
    s.reuse_against = layers.layer(2);
    s.justification = "the copy is anticomplete to everything at distance two";
    cert.trace.push_back(std::move(s));
    if (used > std::max<long long>(chi_h, f_small))
      return fail("the copy needed more colors than max{chi(h), f(omega-1)}");
    shared_width = std::max(shared_width, used);
  }

  // one palette per copy vertex covers the first layer
  int cursor = shared_width;
  VertexSet remaining = layers.layer(1);
  for (int t = 0; t < h_n; ++t) {
    int u = q_emb->image[static_cast<std::size_t>(t)];
    VertexSet cell = (g.neighbors(u) & remaining);
    remaining = remaining - cell;
    if (cell.empty()) continue;
    auto view = induced_subgraph(g, cell);
    ColoredCertificate inner = base(view.graph);
    if (inner.violation)
      return fail("base colorer reported a violation on an attacher cell: " + *inner.violation);
    if (inner.coloring.palette_size > f_small)
      return fail("attacher cell of copy vertex " + std::to_string(u) + " needed " +
                  std::to_string(inner.coloring.palette_size) + " colors, f(omega-1) gives " +
                  std::to_string(f_small));
    detail::splice_subcertificate(g, view, inner, cursor, "cell-" + std::to_string(t) + "/",
                                  colors, cert.trace, cert.claims);
    cursor += inner.coloring.palette_size;
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
    return fail("total palette exceeds the layered bound");
  return cert;
}

}  // namespace chicrown
