#include <torcan/sncgraph.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "test_support.hpp"

using torcan::blow_up_edge;
using torcan::blow_up_point;
using torcan::compare_forms;
using torcan::contract;
using torcan::FormComparison;
using torcan::FormInvariants;
using torcan::form_invariants;
using torcan::forms_isomorphic;
using torcan::Integer;
using torcan::intersection_matrix;
using torcan::IntersectionForm;
using torcan::IntMatrix;
using torcan::load_fixture;
using torcan::WeightedDualGraph;

namespace {

WeightedDualGraph chain(const std::vector<Integer>& weights) {
  WeightedDualGraph g;
  for (std::size_t i = 0; i < weights.size(); ++i)
    g.add_vertex("c" + std::to_string(i + 1), weights[i]);
  for (std::size_t i = 0; i + 1 < weights.size(); ++i)
    g.add_edge("c" + std::to_string(i + 1), "c" + std::to_string(i + 2));
  return g;
}

// Independent check that `mult` is the multiplicity vector of a fiber F:
// F.C = 0 for every component C of F and F.section = 1 for both sections.
void check_fiber_closure(const WeightedDualGraph& g,
                         const std::map<std::string, Integer>& mult,
                         const std::string& section_a,
                         const std::string& section_b) {
  for (const auto& [c, mc] : mult) {
    Integer dot = mc * g.weight(c);
    for (const auto& [d, md] : mult)
      if (d != c) dot += md * g.edge_multiplicity(c, d);
    INFO("fiber component " << c);
    CHECK(dot == 0);
  }
  for (const std::string& s : {section_a, section_b}) {
    Integer dot = 0;
    for (const auto& [d, md] : mult) dot += md * g.edge_multiplicity(s, d);
    INFO("section " << s);
    CHECK(dot == 1);
  }
}

}  // namespace

TEST_CASE("graph construction rules") {
  WeightedDualGraph g;
  g.add_vertex("A", -2);
  g.add_vertex("B", 0);
  g.add_edge("A", "B");
  g.add_edge("B", "A");  // accumulates
  CHECK(g.edge_multiplicity("A", "B") == 2);
  CHECK(g.size() == 2);
  CHECK_THROWS_AS(g.add_vertex("A", 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge("A", "A"), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge("A", "C"), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge("A", "B", 0), std::invalid_argument);
  CHECK_THROWS_AS(g.weight("C"), std::invalid_argument);

  g.add_vertex("C", -1);
  g.add_edge("A", "C");
  auto nbrs = g.neighbors("A");
  REQUIRE(nbrs.size() == 2);
  CHECK(nbrs[0].first == "B");  // insertion order
  CHECK(nbrs[1].first == "C");
  CHECK(g.fresh_label() == "e1");
}

TEST_CASE("blowing up a point") {
  WeightedDualGraph g;
  g.add_vertex("v", -1);
  WeightedDualGraph h = blow_up_point(g, "v");
  CHECK(h.weight("v") == -2);
  CHECK(h.weight("e1") == -1);
  CHECK(h.edge_multiplicity("v", "e1") == 1);

  WeightedDualGraph iso;
  iso.add_vertex("v", 0);
  h = blow_up_point(iso, "v");
  CHECK(h.size() == 2);
  CHECK(h.weight("v") == -1);
  CHECK(h.weight("e1") == -1);

  h = blow_up_point(blow_up_point(iso, "v"), "v");
  CHECK(h.weight("v") == -2);
  CHECK(h.weight("e1") == -1);
  CHECK(h.weight("e2") == -1);
  CHECK(h.edge_multiplicity("e1", "e2") == 0);

  CHECK_THROWS_AS(blow_up_point(g, "nope"), std::invalid_argument);
}

TEST_CASE("blowing up an edge") {
  WeightedDualGraph g;
  g.add_vertex("u", 0);
  g.add_vertex("w", 0);
  g.add_edge("u", "w");
  WeightedDualGraph h = blow_up_edge(g, "u", "w");
  CHECK(h.weight("u") == -1);
  CHECK(h.weight("w") == -1);
  CHECK(h.weight("e1") == -1);
  CHECK(h.edge_multiplicity("u", "w") == 0);
  CHECK(h.edge_multiplicity("u", "e1") == 1);
  CHECK(h.edge_multiplicity("w", "e1") == 1);

  // Double edge: only one copy is replaced.
  WeightedDualGraph d;
  d.add_vertex("u", -1);
  d.add_vertex("w", -2);
  d.add_edge("u", "w", 2);
  h = blow_up_edge(d, "u", "w");
  CHECK(h.edge_multiplicity("u", "w") == 1);
  CHECK(h.weight("u") == -2);
  CHECK(h.weight("w") == -3);

  // Edge of a triangle: the third side is untouched.
  WeightedDualGraph t;
  t.add_vertex("a", -1);
  t.add_vertex("b", -1);
  t.add_vertex("c", -1);
  t.add_edge("a", "b");
  t.add_edge("b", "c");
  t.add_edge("a", "c");
  h = blow_up_edge(t, "a", "b");
  CHECK(h.edge_multiplicity("a", "b") == 0);
  CHECK(h.edge_multiplicity("b", "c") == 1);
  CHECK(h.edge_multiplicity("a", "c") == 1);
  CHECK(h.edge_multiplicity("a", "e1") == 1);
  CHECK(h.edge_multiplicity("b", "e1") == 1);

  CHECK_THROWS_AS(blow_up_edge(t, "a", "e9"), std::invalid_argument);
  WeightedDualGraph no_edge;
  no_edge.add_vertex("a", 0);
  no_edge.add_vertex("b", 0);
  CHECK_THROWS_AS(blow_up_edge(no_edge, "a", "b"), std::invalid_argument);
}

TEST_CASE("contraction") {
  WeightedDualGraph g = chain({-2, -1, -2});
  WeightedDualGraph h = contract(g, "c2");
  CHECK(h.size() == 2);
  CHECK(h.weight("c1") == -1);
  CHECK(h.weight("c3") == -1);
  CHECK(h.edge_multiplicity("c1", "c3") == 1);

  // Leaf contraction only bumps the support.
  WeightedDualGraph leaf;
  leaf.add_vertex("u", -3);
  leaf.add_vertex("v", -1);
  leaf.add_edge("u", "v");
  h = contract(leaf, "v");
  CHECK(h.size() == 1);
  CHECK(h.weight("u") == -2);

  // A neighbor meeting v twice gains 4, and neighbor pairs multiply.
  WeightedDualGraph m;
  m.add_vertex("u", -4);
  m.add_vertex("v", -1);
  m.add_vertex("w", -2);
  m.add_edge("u", "v", 2);
  m.add_edge("v", "w");
  h = contract(m, "v");
  CHECK(h.weight("u") == 0);
  CHECK(h.weight("w") == -1);
  CHECK(h.edge_multiplicity("u", "w") == 2);

  CHECK_THROWS_AS(contract(g, "c1"), std::invalid_argument);  // weight -2
  CHECK_THROWS_AS(contract(g, "zz"), std::invalid_argument);
}

TEST_CASE("contraction inverts blow-ups") {
  WeightedDualGraph g = chain({-2, -1, 0});
  g.add_edge("c1", "c3");

  WeightedDualGraph up = blow_up_point(g, "c2", "n");
  CHECK(contract(up, "n") == g);

  up = blow_up_edge(g, "c1", "c3", "n");
  CHECK(contract(up, "n") == g);

  // And the other way around: re-blowing the contracted configuration.
  WeightedDualGraph down = contract(blow_up_edge(g, "c2", "c3", "n"), "n");
  CHECK(down == g);
}

TEST_CASE("random blow-up words round-trip") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 150; ++t) {
    // Random base graph.
    WeightedDualGraph g;
    std::size_t n = 1 + rng() % 5;
    for (std::size_t i = 0; i < n; ++i)
      g.add_vertex("v" + std::to_string(i + 1), -Integer(rng() % 6));
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j)
        if (rng() % 2)
          g.add_edge("v" + std::to_string(i), "v" + std::to_string(j),
                     1 + rng() % 2);

    // Random word of blow-ups, new vertices labeled w1, w2, ...
    WeightedDualGraph cur = g;
    std::vector<std::string> created;
    std::size_t len = rng() % 9;
    for (std::size_t s = 0; s < len; ++s) {
      std::string label = "w" + std::to_string(s + 1);
      auto edges = cur.edge_list();
      if (!edges.empty() && rng() % 2) {
        const auto& e = edges[rng() % edges.size()];
        cur = blow_up_edge(cur, std::get<0>(e), std::get<1>(e), label);
      } else {
        const auto& labels = cur.labels();
        cur = blow_up_point(cur, labels[rng() % labels.size()], label);
      }
      created.push_back(label);
    }

    // Contract the created vertices in reverse order.
    for (std::size_t s = created.size(); s-- > 0;)
      cur = contract(cur, created[s]);
    CHECK(cur == g);
  }
}

TEST_CASE("intersection matrices") {
  WeightedDualGraph g = chain({-2, -1, -2});
  IntersectionForm f = intersection_matrix(g);
  CHECK(f.gram ==
        IntMatrix::from_rows({{-2, 1, 0}, {1, -1, 1}, {0, 1, -2}}));
  CHECK(f.basis_labels == std::vector<std::string>{"c1", "c2", "c3"});

  // Subset order is respected, including permutations.
  f = intersection_matrix(g, {"c3", "c1"});
  CHECK(f.gram == IntMatrix::from_rows({{-2, 0}, {0, -2}}));
  f = intersection_matrix(g, {"c2"});
  CHECK(f.gram == IntMatrix::from_rows({{-1}}));
  f = intersection_matrix(g, {});
  CHECK(f.gram.rows() == 0);

  WeightedDualGraph d;
  d.add_vertex("u", -4);
  d.add_vertex("w", -2);
  d.add_edge("u", "w", 3);
  CHECK(intersection_matrix(d).gram ==
        IntMatrix::from_rows({{-4, 3}, {3, -2}}));

  CHECK_THROWS_AS(intersection_matrix(g, {"c1", "zz"}),
                  std::invalid_argument);
}

TEST_CASE("form invariants") {
  FormInvariants i =
      form_invariants(intersection_matrix(chain({-2, -1, -2})));
  CHECK(i.rank == 2);
  CHECK(i.determinant == 0);

  i = form_invariants(
      IntersectionForm(IntMatrix::identity(2), {"x", "y"}));
  CHECK(i.rank == 2);
  CHECK(i.determinant == 1);
  CHECK(i.smith_invariants == std::vector<Integer>{1, 1});

  i = form_invariants(IntersectionForm(IntMatrix::from_rows({{0}}), {"x"}));
  CHECK(i.rank == 0);
  CHECK(i.determinant == 0);
  CHECK(i.smith_invariants.empty());

  // Negative-definite exceptional chains have nonzero determinant.
  std::mt19937_64 rng(62);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 1 + rng() % 6;
    std::vector<Integer> w(n);
    for (Integer& x : w) x = -Integer(2 + rng() % 4);
    FormInvariants inv = form_invariants(intersection_matrix(chain(w)));
    CHECK(inv.determinant != 0);
    CHECK(inv.rank == n);
  }
}

TEST_CASE("form comparison screens") {
  auto single = [](Integer w) {
    return IntersectionForm(IntMatrix::from_rows({{w}}), {"x"});
  };

  FormComparison c = compare_forms(single(-2),
                                   intersection_matrix(chain({-2, -2})));
  CHECK_FALSE(c.isomorphic);
  CHECK(c.reason == "rank 1 != rank 2");

  c = compare_forms(single(0), single(-2));
  CHECK_FALSE(c.isomorphic);
  CHECK(c.reason == "gram rank 0 != gram rank 1");

  c = compare_forms(single(-2), single(-3));
  CHECK_FALSE(c.isomorphic);
  CHECK(c.reason == "determinant -2 != determinant -3");

  c = compare_forms(
      IntersectionForm(IntMatrix::diagonal({-1, -4}), {"x", "y"}),
      IntersectionForm(IntMatrix::diagonal({-2, -2}), {"x", "y"}));
  CHECK_FALSE(c.isomorphic);
  CHECK(c.reason == "smith invariants differ");

  c = compare_forms(
      intersection_matrix(chain({-2, -2})),
      IntersectionForm(IntMatrix::from_rows({{-1, 1}, {1, -4}}), {"x", "y"}));
  CHECK_FALSE(c.isomorphic);
  CHECK(c.reason == "weight multisets differ");

  CHECK_FALSE(forms_isomorphic(intersection_matrix(chain({-2, -2})),
                               intersection_matrix(chain({-2, -3}))));
}

TEST_CASE("equal invariants do not imply equivalence") {
  // Two (-2)-weighted forests with identical rank, determinant, Smith
  // invariants and weight multisets, but different adjacency: a 5-chain
  // plus an isolated vertex versus a 3-star plus a 2-chain.
  WeightedDualGraph g1 = chain({-2, -2, -2, -2, -2});
  g1.add_vertex("c6", -2);

  WeightedDualGraph g2;
  for (int i = 1; i <= 6; ++i)
    g2.add_vertex("d" + std::to_string(i), -2);
  g2.add_edge("d1", "d2");
  g2.add_edge("d1", "d3");
  g2.add_edge("d1", "d4");
  g2.add_edge("d5", "d6");

  IntersectionForm f1 = intersection_matrix(g1);
  IntersectionForm f2 = intersection_matrix(g2);
  FormInvariants i1 = form_invariants(f1), i2 = form_invariants(f2);
  REQUIRE(i1.rank == i2.rank);
  REQUIRE(i1.determinant == i2.determinant);
  REQUIRE(i1.smith_invariants == i2.smith_invariants);

  FormComparison c = compare_forms(f1, f2);
  CHECK_FALSE(c.isomorphic);
  CHECK(c.reason == "equal invariants but no basis bijection exists");
}

TEST_CASE("form comparison finds explicit bijections") {
  WeightedDualGraph g;
  g.add_vertex("A", -2);
  g.add_vertex("B", -1);
  g.add_vertex("C", -3);
  g.add_edge("A", "B");
  g.add_edge("B", "C", 2);

  // The same configuration with scrambled labels and order.
  WeightedDualGraph h;
  h.add_vertex("P", -3);
  h.add_vertex("Q", -2);
  h.add_vertex("R", -1);
  h.add_edge("Q", "R");
  h.add_edge("R", "P", 2);

  IntersectionForm f1 = intersection_matrix(g);
  IntersectionForm f2 = intersection_matrix(h);
  FormComparison c = compare_forms(f1, f2);
  REQUIRE(c.isomorphic);
  REQUIRE(c.bijection.has_value());
  const std::vector<std::size_t>& b = *c.bijection;
  for (std::size_t i = 0; i < f1.size(); ++i)
    for (std::size_t j = 0; j < f1.size(); ++j)
      CHECK(f1.gram(i, j) == f2.gram(b[i], b[j]));

  // Reflexive and symmetric.
  CHECK(forms_isomorphic(f1, f1));
  CHECK(forms_isomorphic(f2, f1));
  WeightedDualGraph other = chain({-2, -1, -3});
  CHECK(forms_isomorphic(intersection_matrix(other), intersection_matrix(other)));
}

TEST_CASE("fixture format round trip") {
  WeightedDualGraph g;
  g.add_vertex("A", -2);
  g.add_vertex("B", 0);
  g.add_vertex("C", -1);
  g.add_edge("A", "B");
  g.add_edge("B", "C", 3);
  std::string text = torcan::to_string(g);
  CHECK(torcan::parse_graph(text) == g);

  WeightedDualGraph p = torcan::parse_graph(
      "# comment line\n"
      "A -2   # trailing comment\n"
      "B 0\n"
      "\n"
      "A B 2\n");
  CHECK(p.size() == 2);
  CHECK(p.weight("A") == -2);
  CHECK(p.edge_multiplicity("A", "B") == 2);

  CHECK_THROWS_AS(torcan::parse_graph("A -2\nB"), std::invalid_argument);
  CHECK_THROWS_AS(torcan::parse_graph("A x"), std::invalid_argument);
  CHECK_THROWS_AS(torcan::parse_graph("A -1\nA -2"), std::invalid_argument);
  CHECK_THROWS_AS(torcan::parse_graph("A -1\nA A"), std::invalid_argument);

  for (const char* name : {"fig1", "fig2"})
    CHECK(torcan::parse_graph(torcan::to_string(load_fixture(name))) ==
          load_fixture(name));
}

TEST_CASE("first resolved pencil fixture") {
  WeightedDualGraph g = load_fixture("fig1");
  CHECK(g.size() == 12);
  CHECK(g.edge_list().size() == 13);

  const std::map<std::string, Integer> weights = {
      {"D1", 0},      {"H_inf_1", -1}, {"H_0_1", -1},  {"E_inf_1", -3},
      {"E_inf_2", -3}, {"E_inf_3", -2}, {"L_x", -1},    {"L_y", -2},
      {"L_z", -1},    {"E_0_1", -2},   {"E_0_2", -3},  {"E_0_3", -2}};
  for (const auto& [label, w] : weights) {
    INFO(label);
    CHECK(g.weight(label) == w);
  }

  // The smooth fiber meets both sections once; the sections are disjoint.
  CHECK(g.edge_multiplicity("D1", "H_inf_1") == 1);
  CHECK(g.edge_multiplicity("D1", "H_0_1") == 1);
  CHECK(g.edge_multiplicity("H_inf_1", "H_0_1") == 0);

  // Both degenerate fibers close up: F.C = 0 inside the fiber and
  // F.section = 1 at both ends.
  check_fiber_closure(g,
                      {{"E_inf_3", 1}, {"E_inf_1", 2}, {"L_x", 5},
                       {"E_0_1", 3},   {"E_0_2", 1}},
                      "H_inf_1", "H_0_1");
  check_fiber_closure(g, {{"E_inf_2", 1}, {"L_z", 3}, {"L_y", 2}, {"E_0_3", 1}},
                      "H_inf_1", "H_0_1");

  // Full-fiber Gram matrices drop rank by exactly one.
  CHECK(form_invariants(intersection_matrix(
            g, {"E_inf_3", "E_inf_1", "L_x", "E_0_1", "E_0_2"}))
            .rank == 4);
  CHECK(form_invariants(
            intersection_matrix(g, {"E_inf_2", "L_z", "L_y", "E_0_3"}))
            .rank == 3);
}

TEST_CASE("second resolved pencil fixture") {
  WeightedDualGraph g = load_fixture("fig2");
  CHECK(g.size() == 17);
  CHECK(g.edge_list().size() == 18);

  const std::map<std::string, Integer> weights = {
      {"D2", 0},      {"H_inf_2", -1}, {"H_0_2", -1},  {"E_inf_1", -2},
      {"F0", -2},     {"E_0_1", -2},   {"E_0_2", -2},  {"E_0_3", -2},
      {"E_0_4", -2},  {"C1", -1},      {"E_0_5", -6},  {"C0", -5},
      {"C", -1},      {"E_0_6", -2},   {"E_0_7", -2},  {"E_0_8", -2},
      {"E_0_9", -2}};
  for (const auto& [label, w] : weights) {
    INFO(label);
    CHECK(g.weight(label) == w);
  }

  CHECK(g.edge_multiplicity("D2", "H_inf_2") == 1);
  CHECK(g.edge_multiplicity("D2", "H_0_2") == 1);
  CHECK(g.edge_multiplicity("E_0_4", "C1") == 1);
  CHECK(g.edge_multiplicity("E_0_4", "E_0_5") == 1);

  check_fiber_closure(g,
                      {{"E_inf_1", 1}, {"F0", 2},    {"E_0_1", 3},
                       {"E_0_2", 4},   {"E_0_3", 5}, {"E_0_4", 6},
                       {"C1", 6},      {"E_0_5", 1}},
                      "H_inf_2", "H_0_2");
  check_fiber_closure(
      g,
      {{"C0", 1}, {"C", 5}, {"E_0_6", 4}, {"E_0_7", 3}, {"E_0_8", 2},
       {"E_0_9", 1}},
      "H_inf_2", "H_0_2");

  CHECK(form_invariants(intersection_matrix(
            g, {"E_inf_1", "F0", "E_0_1", "E_0_2", "E_0_3", "E_0_4", "C1",
                "E_0_5"}))
            .rank == 7);
  CHECK(form_invariants(intersection_matrix(
            g, {"C0", "C", "E_0_6", "E_0_7", "E_0_8", "E_0_9"}))
            .rank == 5);
}

TEST_CASE("first boundary graph") {
  WeightedDualGraph b1 = load_fixture("B1");
  REQUIRE(b1.size() == 9);
  CHECK(b1.labels() ==
        std::vector<std::string>{"D1", "H_inf_1", "H_0_1", "E_inf_3",
                                 "E_inf_1", "E_0_1", "E_0_2", "E_inf_2",
                                 "E_0_3"});

  // Contracting L_z bumps its two neighbors; everything else is inherited.
  CHECK(b1.weight("E_inf_2") == -2);
  CHECK(b1.weight("D1") == 0);
  CHECK(b1.weight("H_inf_1") == -1);
  CHECK(b1.weight("H_0_1") == -1);
  CHECK(b1.weight("E_inf_3") == -2);
  CHECK(b1.weight("E_inf_1") == -3);
  CHECK(b1.weight("E_0_1") == -2);
  CHECK(b1.weight("E_0_2") == -3);
  CHECK(b1.weight("E_0_3") == -2);

  const std::vector<std::pair<std::string, std::string>> expected_edges = {
      {"D1", "H_inf_1"},      {"D1", "H_0_1"},      {"H_inf_1", "E_inf_3"},
      {"H_inf_1", "E_inf_2"}, {"H_0_1", "E_0_2"},   {"H_0_1", "E_0_3"},
      {"E_inf_3", "E_inf_1"}, {"E_0_1", "E_0_2"}};
  CHECK(b1.edge_list().size() == expected_edges.size());
  for (const auto& [a, b] : expected_edges) {
    INFO(a << " -- " << b);
    CHECK(b1.edge_multiplicity(a, b) == 1);
  }

  // The same graph must come out of applying the contraction by hand.
  WeightedDualGraph manual = contract(load_fixture("fig1"), "L_z");
  CHECK(torcan::induced_subgraph(manual, b1.labels()) == b1);

  FormInvariants inv = form_invariants(intersection_matrix(b1));
  CHECK(inv.rank == 8);
  CHECK(inv.determinant == 0);
  CHECK(inv.smith_invariants == std::vector<Integer>(8, 1));

  // Frozen radical generator: this vector annihilates the Gram matrix,
  // certifying the rank drop.
  IntMatrix gram = intersection_matrix(b1).gram;
  const std::vector<Integer> null = {-1, 10, -10, 6, 2, -2, -4, 5, -5};
  for (std::size_t i = 0; i < 9; ++i) {
    Integer dot = 0;
    for (std::size_t j = 0; j < 9; ++j) dot += gram(i, j) * null[j];
    CHECK(dot == 0);
  }

  // Dropping the fiber component makes the form nondegenerate.
  std::vector<std::string> rest(b1.labels().begin() + 1, b1.labels().end());
  CHECK(torcan::determinant(intersection_matrix(b1, rest).gram) == -1);
}

TEST_CASE("second boundary graph") {
  WeightedDualGraph b2 = load_fixture("B2");
  REQUIRE(b2.size() == 10);
  CHECK(b2.labels() ==
        std::vector<std::string>{"D2", "H_inf_2", "H_0_2", "E_inf_1", "E_0_5",
                                 "C0", "E_0_6", "E_0_7", "E_0_8", "E_0_9"});

  // Five contractions on the long fiber chain drive E_0_5 from -6 to -2.
  CHECK(b2.weight("E_0_5") == -2);
  CHECK(b2.weight("D2") == 0);
  CHECK(b2.weight("H_inf_2") == -1);
  CHECK(b2.weight("H_0_2") == -1);
  CHECK(b2.weight("E_inf_1") == -2);
  CHECK(b2.weight("C0") == -5);
  for (const char* v : {"E_0_6", "E_0_7", "E_0_8", "E_0_9"})
    CHECK(b2.weight(v) == -2);

  const std::vector<std::pair<std::string, std::string>> expected_edges = {
      {"D2", "H_inf_2"},  {"D2", "H_0_2"},    {"H_inf_2", "E_inf_1"},
      {"H_inf_2", "C0"},  {"H_0_2", "E_0_5"}, {"H_0_2", "E_0_9"},
      {"E_0_6", "E_0_7"}, {"E_0_7", "E_0_8"}, {"E_0_8", "E_0_9"}};
  CHECK(b2.edge_list().size() == expected_edges.size());
  for (const auto& [a, b] : expected_edges) {
    INFO(a << " -- " << b);
    CHECK(b2.edge_multiplicity(a, b) == 1);
  }

  FormInvariants inv = form_invariants(intersection_matrix(b2));
  CHECK(inv.rank == 9);
  CHECK(inv.determinant == 0);
  CHECK(inv.smith_invariants == std::vector<Integer>(9, 1));

  IntMatrix gram = intersection_matrix(b2).gram;
  const std::vector<Integer> null = {-3, -10, 10, -5, 5, -2, 2, 4, 6, 8};
  for (std::size_t i = 0; i < 10; ++i) {
    Integer dot = 0;
    for (std::size_t j = 0; j < 10; ++j) dot += gram(i, j) * null[j];
    CHECK(dot == 0);
  }

  std::vector<std::string> rest(b2.labels().begin() + 1, b2.labels().end());
  CHECK(torcan::determinant(intersection_matrix(b2, rest).gram) == 9);
}

TEST_CASE("the boundary forms are not isomorphic") {
  IntersectionForm f1 = intersection_matrix(load_fixture("B1"));
  IntersectionForm f2 = intersection_matrix(load_fixture("B2"));
  FormComparison c = compare_forms(f1, f2);
  CHECK_FALSE(c.isomorphic);
  CHECK(c.reason == "rank 9 != rank 10");
  CHECK_FALSE(forms_isomorphic(f1, f2));
  CHECK_FALSE(forms_isomorphic(f2, f1));
}

TEST_CASE("unknown fixtures are rejected") {
  CHECK_THROWS_AS(load_fixture("fig3"), std::invalid_argument);
}
