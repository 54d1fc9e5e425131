#include <catch2/catch_amalgamated.hpp>

#include "chicrown/harness.hpp"
#include "chicrown/oracles.hpp"
#include "test_support.hpp"

using namespace chicrown;
namespace ts = test_support;

TEST_CASE("clique number fixtures", "[oracles]") {
  auto [w_c5, wit_c5] = clique_number(ts::cycle_graph(5));
  CHECK(w_c5 == 2);
  CHECK(is_clique(ts::cycle_graph(5), wit_c5));

  auto k4 = clique_number(ts::complete_graph(4));
  CHECK(k4.omega == 4);

  CHECK(clique_number(ts::grotzsch()).omega == 2);  // triangle-free
  CHECK(clique_number(Graph(0)).omega == 0);
  CHECK(clique_number(Graph(3)).omega == 1);
}

TEST_CASE("chromatic number fixtures", "[oracles]") {
  CHECK(chromatic_number(ts::cycle_graph(5)).chi == 3);
  CHECK(chromatic_number(ts::grotzsch()).chi == 4);
  // Petersen: 3-colorable, and the induced C5 rules out 2 colors
  CHECK(chromatic_number(ts::petersen()).chi == 3);
  CHECK(chromatic_number(Graph(0)).chi == 0);
  CHECK(chromatic_number(Graph(4)).chi == 1);

  auto res = chromatic_number(ts::grotzsch());
  CHECK(is_proper(ts::grotzsch(), res.coloring));
  CHECK(res.coloring.palette_size == res.chi);
}

TEST_CASE("k_colorable decision form", "[oracles]") {
  CHECK_FALSE(k_colorable(ts::cycle_graph(5), 2).has_value());
  auto c = k_colorable(ts::cycle_graph(5), 3);
  REQUIRE(c.has_value());
  CHECK(is_proper(ts::cycle_graph(5), *c));

  CHECK_FALSE(k_colorable(Graph(1), 0).has_value());
  auto empty = k_colorable(Graph(0), 0);
  REQUIRE(empty.has_value());
  CHECK(empty->palette_size == 0);

  // determinism: identical calls return identical colorings
  std::uint32_t state = 71;
  for (int rep = 0; rep < 10; ++rep) {
    Graph g = ts::lcg_graph(7, state, 50);
    auto a = k_colorable(g, 4);
    auto b = k_colorable(g, 4);
    CHECK(a.has_value() == b.has_value());
    if (a && b) CHECK(a->colors == b->colors);
  }
}

TEST_CASE("exact solvers agree with assignment enumeration", "[oracles][property]") {
  // every isomorphism class with at most 5 vertices
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      CHECK(chromatic_number(g).chi == ts::brute_chromatic(g));
      CHECK(clique_number(g).omega == ts::brute_clique(g));
    }
  // random graphs on 6 vertices
  std::uint32_t state = 8;
  for (int rep = 0; rep < 60; ++rep) {
    Graph g = ts::lcg_graph(6, state, 20 + (rep * 13) % 60);
    CHECK(chromatic_number(g).chi == ts::brute_chromatic(g));
    CHECK(clique_number(g).omega == ts::brute_clique(g));
  }
}

TEST_CASE("clique number equals independence number of the complement", "[oracles][property]") {
  std::uint32_t state = 99;
  for (int rep = 0; rep < 30; ++rep) {
    Graph g = ts::lcg_graph(2 + rep % 7, state, 50);
    Graph c = complement(g);
    int alpha = 0;  // largest stable set of c, by subset scan
    for (std::uint64_t mask = 0; mask < (1ULL << c.n()); ++mask) {
      VertexSet s{mask};
      if (s.count() > alpha && is_stable(c, s)) alpha = s.count();
    }
    CHECK(clique_number(g).omega == alpha);
  }
}

TEST_CASE("odd hole search", "[oracles]") {
  auto h = find_odd_hole(ts::cycle_graph(5));
  REQUIRE(h.has_value());
  CHECK(h->length() == 5);
  CHECK(h->validate(ts::cycle_graph(5)));

  CHECK_FALSE(find_odd_hole(ts::complete_bipartite(3, 3)).has_value());
  CHECK_FALSE(find_odd_hole(ts::cycle_graph(6)).has_value());
  CHECK(find_odd_hole(ts::cycle_graph(7)).has_value());
  CHECK_FALSE(find_odd_hole(ts::complete_graph(5)).has_value());

  auto pet = find_odd_hole(ts::petersen());
  REQUIRE(pet.has_value());
  CHECK(pet->length() == 5);
  CHECK(pet->validate(ts::petersen()));
}

TEST_CASE("odd antihole search", "[oracles]") {
  auto a = find_odd_antihole(complement(ts::cycle_graph(7)));
  REQUIRE(a.has_value());
  CHECK(a->length() == 7);
  CHECK(a->kind == HoleWitness::Kind::Antihole);
  CHECK(a->validate(complement(ts::cycle_graph(7))));

  // C5 is its own complement-cycle, so it hosts a 5-antihole as well
  auto self = find_odd_antihole(ts::cycle_graph(5));
  REQUIRE(self.has_value());
  CHECK(self->length() == 5);
  CHECK(self->validate(ts::cycle_graph(5)));

  CHECK_FALSE(find_odd_antihole(ts::path_graph(4)).has_value());
}

TEST_CASE("perfection", "[oracles]") {
  CHECK(is_perfect(ts::path_graph(4)).perfect);
  CHECK(is_perfect(ts::complete_bipartite(3, 3)).perfect);
  auto v = is_perfect(ts::cycle_graph(5));
  CHECK_FALSE(v.perfect);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->length() == 5);
  CHECK(v.witness->validate(ts::cycle_graph(5)));
}

TEST_CASE("perfection equals chi=omega over all induced subgraphs", "[oracles][slow]") {
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      bool every = true;
      for (std::uint64_t mask = 0; mask < (1ULL << g.n()) && every; ++mask) {
        auto sub = induced_subgraph(g, VertexSet{mask}).graph;
        every = chromatic_number(sub).chi == clique_number(sub).omega;
      }
      CHECK(is_perfect(g).perfect == every);
    }
}

TEST_CASE("color_perfect", "[oracles]") {
  Coloring c = color_perfect(ts::complete_bipartite(3, 3));
  CHECK(c.palette_size == 2);
  CHECK(is_proper(ts::complete_bipartite(3, 3), c));

  CHECK(color_perfect(ts::path_graph(4)).palette_size == 2);
  CHECK_THROWS_AS(color_perfect(ts::cycle_graph(5)), NotPerfect);
  try {
    color_perfect(ts::cycle_graph(5));
  } catch (const NotPerfect& e) {
    CHECK(e.witness().validate(ts::cycle_graph(5)));
  }
}

TEST_CASE("partition testers", "[oracles]") {
  auto c5 = partition_testers(ts::cycle_graph(5));
  CHECK_FALSE(c5.splits_into_stable_and_clique);
  CHECK_FALSE(c5.splits_into_two_cliques);

  auto p4 = partition_testers(ts::path_graph(4));
  CHECK(p4.splits_into_stable_and_clique);
  CHECK(p4.splits_into_two_cliques);

  auto c4 = partition_testers(ts::cycle_graph(4));
  CHECK(c4.splits_into_two_cliques);
  CHECK_FALSE(c4.splits_into_stable_and_clique);
}

TEST_CASE("odd holes and antiholes admit neither partition", "[oracles][property]") {
  for (int k : {5, 7, 9}) {
    for (const Graph& g : {ts::cycle_graph(k), complement(ts::cycle_graph(k))}) {
      auto t = partition_testers(g);
      CHECK_FALSE(t.splits_into_stable_and_clique);
      CHECK_FALSE(t.splits_into_two_cliques);
    }
  }
}

TEST_CASE("hole witnesses re-validate", "[oracles][property]") {
  std::uint32_t state = 404;
  for (int rep = 0; rep < 25; ++rep) {
    Graph g = ts::lcg_graph(8, state, 35 + (rep * 11) % 40);
    if (auto h = find_odd_hole(g)) CHECK(h->validate(g));
    if (auto a = find_odd_antihole(g)) CHECK(a->validate(g));
  }
}
