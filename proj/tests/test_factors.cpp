#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rhobind/factors.hpp"

using namespace rhobind;

namespace {

Graph cycle(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph star(int leaves) { return join(Graph(1), k_copies(leaves, Graph(1))); }

Graph random_connected(int n, double p, std::mt19937& rng) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (;;) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng) < p) g.add_edge(u, v);
    if (is_connected(g)) return g;
  }
}

}  // namespace

TEST_CASE("assignment encoding") {
  const HAssignment h = HAssignment::from_bits("1011");
  CHECK(h.size() == 4);
  CHECK(h.at(0) == DegreeSet::One);
  CHECK(h.at(1) == DegreeSet::ZeroTwo);
  CHECK(h.ones_count() == 3);
  CHECK(!h.is_even());
  CHECK(h.bits() == "1011");
  CHECK(HAssignment::from_ones_mask(4, 0b1101).bits() == "1011");
  CHECK(HAssignment::all_zero_two(3).bits() == "000");
  CHECK(HAssignment::all_zero_two(3).is_even());
  CHECK_THROWS_AS(HAssignment::from_bits("10x1"), DomainError);
  CHECK_THROWS_AS(HAssignment::from_ones_mask(3, 0b1000), DomainError);
}

TEST_CASE("factor verification") {
  const Graph k4 = complete(4);
  const HAssignment ones = HAssignment::from_bits("1111");
  CHECK(verify_h_factor(k4, ones, {{{0, 1}, {2, 3}}}));
  CHECK(verify_h_factor(k4, ones, {{{2, 3}, {0, 1}}}));     // order-insensitive
  CHECK(!verify_h_factor(k4, ones, {{{0, 1}}}));            // vertices 2,3 at degree 0
  CHECK(!verify_h_factor(k4, ones, {{{0, 1}, {1, 2}}}));    // vertex 1 at degree 2
  CHECK(verify_h_factor(k4, HAssignment::from_bits("0000"), {{}}));
  CHECK(verify_h_factor(cycle(4), HAssignment::from_bits("0000"), {{{0, 1}, {1, 2}, {2, 3}, {0, 3}}}));
  CHECK_THROWS_AS(verify_h_factor(cycle(4), ones, {{{0, 2}}}), DomainError);   // not an edge
  CHECK_THROWS_AS(verify_h_factor(k4, ones, {{{0, 1}, {1, 0}}}), DomainError); // duplicate
  CHECK_THROWS_AS(verify_h_factor(k4, HAssignment::from_bits("111"), {{}}), DomainError);
}

TEST_CASE("factor search basics") {
  // the all-{0,2} prescription is realized by the empty subgraph, and the
  // exclude-first order should find exactly that
  const auto empty = find_h_factor(cycle(7), HAssignment::all_zero_two(7));
  REQUIRE(empty.has_value());
  CHECK(empty->edges.empty());

  const auto k2 = find_h_factor(complete(2), HAssignment::from_bits("11"));
  REQUIRE(k2.has_value());
  CHECK(k2->edges == std::vector<std::pair<int, int>>{{0, 1}});

  const auto matching = find_h_factor(complete(4), HAssignment::from_bits("1111"));
  REQUIRE(matching.has_value());
  CHECK(verify_h_factor(complete(4), HAssignment::from_bits("1111"), *matching));

  // odd number of degree-1 vertices can never be realized
  CHECK(!find_h_factor(cycle(5), HAssignment::from_bits("10000")));

  // star with every vertex at degree 1: the hub can only serve one leaf
  CHECK(!find_h_factor(star(3), HAssignment::from_bits("1111")));

  // two prescribed endpoints joined across the cycle
  const auto seg = find_h_factor(cycle(5), HAssignment::from_bits("10100"));
  REQUIRE(seg.has_value());
  CHECK(verify_h_factor(cycle(5), HAssignment::from_bits("10100"), *seg));

  CHECK_THROWS_AS(find_h_factor(Graph(17), HAssignment::all_zero_two(17)), CapExceededError);
  CHECK_THROWS_AS(find_h_factor(Graph(3), HAssignment::from_bits("11")), DomainError);
}

TEST_CASE("factor search agrees with exhaustive subsets, all graphs n<=5") {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      for (const HAssignment& h : all_even_h_assignments(n)) {
        const auto found = find_h_factor(g, h);
        CHECK(found.has_value() == oracles::exhaustive_factor_exists(g, h));
        if (found) CHECK(verify_h_factor(g, h, *found));
      }
    }
  }
}

TEST_CASE("factor search is deterministic") {
  std::mt19937 rng(555);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = random_connected(7, 0.5, rng);
    const HAssignment h = HAssignment::from_ones_mask(7, (rng() % 64) * 2);  // even popcount not guaranteed; fine
    const auto a = find_h_factor(g, h);
    const auto b = find_h_factor(g, h);
    CHECK(a.has_value() == b.has_value());
    if (a) CHECK(a->edges == b->edges);
  }
}

TEST_CASE("parity obstruction certificate") {
  // star, all degree-1: removing the hub strands 3 odd leaves on capacity 1
  CHECK(parity_obstruction(star(3), HAssignment::from_bits("1111"), {0}));
  // K_4 perfect matching is realizable, so no S may certify impossibility
  CHECK(!parity_obstruction(complete(4), HAssignment::from_bits("1111"), {0}));
  CHECK(!parity_obstruction(complete(4), HAssignment::from_bits("1111"), {}));

  // soundness on every small case: a certificate must imply an empty search
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      for (const HAssignment& h : all_even_h_assignments(n)) {
        const bool exists = find_h_factor(g, h).has_value();
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
          std::vector<int> vs;
          for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1u) vs.push_back(v);
          if (parity_obstruction(g, h, VertexSet(vs))) CHECK(!exists);
        }
      }
    }
  }
}

TEST_CASE("deficiency scan") {
  const DeficiencyResult p3 = lu_kano_deficiency(path(3));
  CHECK(p3.max_deficiency == 1);
  CHECK(p3.witness == VertexSet{});  // empty set already achieves 1 on any connected graph

  const DeficiencyResult st = lu_kano_deficiency(star(4));
  CHECK(st.max_deficiency == 3);
  CHECK(st.witness == VertexSet{0});

  CHECK(lu_kano_deficiency(complete(6)).max_deficiency == 1);

  // double star: both hubs tie at deficiency 2; the smaller label wins
  Graph dbl(6);
  dbl.add_edge(0, 1);
  dbl.add_edge(0, 2);
  dbl.add_edge(0, 3);
  dbl.add_edge(1, 4);
  dbl.add_edge(1, 5);
  const DeficiencyResult d = lu_kano_deficiency(dbl);
  CHECK(d.max_deficiency == 2);
  CHECK(d.witness == VertexSet{0});

  CHECK_THROWS_AS(lu_kano_deficiency(k_copies(2, complete(2))), DomainError);
  CHECK_THROWS_AS(lu_kano_deficiency(complete(25)), CapExceededError);
}

TEST_CASE("deficiency matches the union-find oracle on random graphs") {
  std::mt19937 rng(808);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const Graph g = random_connected(n, 0.35, rng);
    const DeficiencyResult lib = lu_kano_deficiency(g);
    const oracles::DefOracle ref = oracles::deficiency_brute(g);
    CHECK(lib.max_deficiency == ref.def);
    CHECK(lib.witness.members == ref.witness);
    CHECK(has_all_h_factors(g) == (ref.def <= 1));
  }
}

TEST_CASE("criterion spot checks") {
  CHECK(has_all_h_factors(complete(4)));
  CHECK(has_all_h_factors(cycle(6)));
  CHECK(has_all_h_factors(path(3)));
  CHECK(!has_all_h_factors(star(3)));
  CHECK(!has_all_h_factors(star(4)));
  CHECK_THROWS_AS(has_all_h_factors(k_copies(2, complete(3))), DomainError);
}

TEST_CASE("even assignment enumeration") {
  const auto all3 = all_even_h_assignments(3);
  REQUIRE(all3.size() == 4);
  CHECK(all3[0].bits() == "000");
  CHECK(all3[1].bits() == "110");
  CHECK(all3[2].bits() == "101");
  CHECK(all3[3].bits() == "011");
  CHECK(all_even_h_assignments(10).size() == 512);
  CHECK_THROWS_AS(all_even_h_assignments(0), DomainError);
  CHECK_THROWS_AS(all_even_h_assignments(11), CapExceededError);

  long count = 0;
  detail::for_each_even_assignment(12, [&](const HAssignment& h) {
    CHECK(h.is_even());
    ++count;
    return true;
  });
  CHECK(count == 2048);

  count = 0;
  detail::for_each_even_assignment(12, [&](const HAssignment&) { return ++count < 5; });
  CHECK(count == 5);  // early stop honored
}

TEST_CASE("binding numbers of standard graphs") {
  const BindingResult k1 = binding_number(complete(1));
  CHECK(*k1.value == Rational(0));
  CHECK(k1.witness == VertexSet{0});

  const BindingResult k5 = binding_number(complete(5));
  CHECK(*k5.value == Rational(4));
  CHECK(k5.witness == VertexSet{0});

  const BindingResult c4 = binding_number(cycle(4));
  CHECK(*c4.value == Rational(1));
  CHECK(c4.witness == VertexSet{0, 2});

  const BindingResult c5 = binding_number(cycle(5));
  CHECK(*c5.value == Rational(4, 3));
  CHECK(c5.witness == VertexSet{0, 1, 3});

  const BindingResult st = binding_number(star(4));
  CHECK(*st.value == Rational(1, 4));
  CHECK(st.witness == VertexSet{1, 2, 3, 4});

  CHECK(!binding_number(Graph(0)).value.has_value());  // no eligible set at all
  CHECK(*binding_number(k_copies(2, Graph(1))).value == Rational(0));

  CHECK(is_one_binding(cycle(4)));
  CHECK(is_one_binding(cycle(5)));
  CHECK(is_one_binding(complete(7)));
  CHECK(is_one_binding(Graph(0)));
  CHECK(!is_one_binding(star(4)));
  CHECK(!is_one_binding(path(3)));

  CHECK_THROWS_AS(binding_number(complete(23)), CapExceededError);
}

TEST_CASE("binding number matches the set-based oracle") {
  std::mt19937 rng(909);
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      const BindingResult lib = binding_number(g);
      const oracles::BindingOracle ref = oracles::binding_brute(g);
      REQUIRE(lib.value.has_value());
      CHECK(*lib.value == Rational(ref.num, ref.den));
      CHECK(lib.witness.members == ref.witness);
    }
  }
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 6 + static_cast<int>(rng() % 5);
    const Graph g = random_connected(n, 0.4, rng);
    const BindingResult lib = binding_number(g);
    const oracles::BindingOracle ref = oracles::binding_brute(g);
    CHECK(*lib.value == Rational(ref.num, ref.den));
    CHECK(lib.witness.members == ref.witness);
  }
}
