#include "doctest.h"

#include <random>

#include "mislab/constructions.hpp"
#include "mislab/errors.hpp"
#include "mislab/graph.hpp"
#include "mislab/hypergraph.hpp"
#include "mislab/io.hpp"
#include "oracles.hpp"

using namespace mislab;

TEST_CASE("vertex set basics") {
  VertexSet s{1, 5, 70};
  CHECK(s.count() == 3);
  CHECK(s.first() == 1);
  CHECK(s.last() == 70);
  CHECK(s.next(2) == 5);
  CHECK(s.to_vector() == std::vector<int>{1, 5, 70});
  CHECK((s - VertexSet{5}).to_vector() == std::vector<int>{1, 70});
  CHECK(VertexSet::prefix(3).to_vector() == std::vector<int>{0, 1, 2});
  CHECK(VertexSet{}.empty());
  CHECK(VertexSet{1}.is_subset_of(s));
}

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), InputError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), InputError);
  std::vector<VertexSet> asym(2);
  asym[0].set(1);
  CHECK_THROWS_AS(Graph::from_adjacency(asym), InputError);
  const Graph g(4, {{0, 1}, {2, 3}, {1, 0}});
  CHECK(g.edge_count() == 2);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {2, 3}});
}

TEST_CASE("is_independent examples") {
  const Graph k3 = complete_graph(3);
  CHECK_FALSE(is_independent(k3, VertexSet{0, 1}));
  CHECK(is_independent(k3, VertexSet{}));
  const auto cm = comatching(6);
  CHECK(is_independent(cm.graph(), VertexSet{0, 3}));
  CHECK_THROWS_AS(is_independent(k3, VertexSet{5}), InputError);
}

TEST_CASE("is_maximal_independent examples") {
  CHECK(is_maximal_independent(complete_graph(3), VertexSet{0}));
  CHECK_FALSE(is_maximal_independent(Graph(4, {{0, 1}, {2, 3}}), VertexSet{0}));
  CHECK(is_maximal_independent(comatching(8).graph(), VertexSet{0, 4}));
}

TEST_CASE("maximal implies independent on random graphs") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    const Graph g = oracle::random_graph(rng, 8, 0.4);
    for (std::uint32_t m = 0; m < 256; m += 7) {
      VertexSet s;
      for (int v = 0; v < 8; ++v)
        if ((m >> v) & 1U) s.set(v);
      if (is_maximal_independent(g, s)) CHECK(is_independent(g, s));
    }
  }
}

TEST_CASE("has_clique examples and oracle agreement") {
  CHECK(has_clique(complete_graph(4), 4));
  CHECK_FALSE(has_clique(comatching(10).graph(), 3));
  CHECK_FALSE(has_clique(shadow(tight_cycle(3, 6)), 4));
  CHECK_THROWS_AS(has_clique(complete_graph(2), 0), InputError);
  std::mt19937_64 rng(11);
  for (int it = 0; it < 300; ++it) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const Graph g = oracle::random_graph(rng, n, 0.5);
    for (int t = 1; t <= 5; ++t) CHECK(has_clique(g, t) == oracle::has_clique(g, t));
  }
}

TEST_CASE("shadow examples") {
  const Graph s = shadow(Hypergraph(5, {{0, 1, 2}}));
  CHECK(s == Graph(5, {{0, 1}, {0, 2}, {1, 2}}));
  CHECK(shadow(tight_cycle(2, 5)) == cycle_graph(5));
  std::vector<Edge> circulant;
  for (int i = 0; i < 6; ++i) {
    circulant.emplace_back(i, (i + 1) % 6);
    circulant.emplace_back(i, (i + 2) % 6);
  }
  CHECK(shadow(tight_cycle(3, 6)) == Graph(6, circulant));
}

TEST_CASE("tight cycle shadows are K_{r+1}-free once k >= 2r") {
  for (int r = 2; r <= 5; ++r)
    for (int k = 2 * r; k <= 12; ++k) CHECK_FALSE(has_clique(shadow(tight_cycle(r, k)), r + 1));
}

TEST_CASE("partite complement") {
  const PartitionedGraph pm = partite_complement(comatching(6));
  CHECK(pm.graph() == Graph(6, {{0, 3}, {1, 4}, {2, 5}}));
  const PartitionedGraph empty(Graph(4), {VertexSet{0, 1}, VertexSet{2, 3}});
  CHECK(partite_complement(empty).graph() == Graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
  const PartitionedGraph bad(Graph(4, {{0, 1}}), {VertexSet{0, 1}, VertexSet{2, 3}});
  CHECK_THROWS_AS(partite_complement(bad), InputError);

  std::mt19937_64 rng(3);
  for (int it = 0; it < 100; ++it) {
    std::vector<int> part(9);
    for (int v = 0; v < 9; ++v) part[static_cast<std::size_t>(v)] = v % 3;
    std::bernoulli_distribution coin(0.5);
    std::vector<Edge> e;
    for (int u = 0; u < 9; ++u)
      for (int v = u + 1; v < 9; ++v)
        if (part[static_cast<std::size_t>(u)] != part[static_cast<std::size_t>(v)] && coin(rng)) e.emplace_back(u, v);
    const PartitionedGraph x(Graph(9, e), {VertexSet{0, 3, 6}, VertexSet{1, 4, 7}, VertexSet{2, 5, 8}});
    CHECK(partite_complement(partite_complement(x)) == x);
  }
}

TEST_CASE("partition validation") {
  CHECK_THROWS_AS(PartitionedGraph(Graph(3), {VertexSet{0, 1}}), InputError);
  CHECK_THROWS_AS(PartitionedGraph(Graph(3), {VertexSet{0, 1}, VertexSet{1, 2}}), InputError);
  CHECK_THROWS_AS(PartitionedGraph(Graph(3), {VertexSet{0, 1, 2}, VertexSet{}}), InputError);
}

TEST_CASE("disjoint union") {
  const std::vector<Graph> two{complete_graph(3), complete_graph(3)};
  const Graph u = disjoint_union(two);
  CHECK(u.order() == 6);
  CHECK(u.edge_count() == 6);
  CHECK(oracle::count_k_mis(u, 2) == 9);
  const std::vector<Graph> one{cycle_graph(5)};
  CHECK(disjoint_union(one) == cycle_graph(5));
  const std::vector<Graph> mixed{complete_graph(2), complete_graph(2), complete_graph(3)};
  CHECK(oracle::count_k_mis(disjoint_union(mixed), 3) == 12);
}

TEST_CASE("fractional matchings") {
  const Hypergraph tc36 = tight_cycle(3, 6);
  CHECK_FALSE(validate_fractional_matching(tc36, FractionalMatching::uniform(tc36, Rational(1, 2))));
  const Hypergraph tc48 = tight_cycle(4, 8);
  const auto quarter = FractionalMatching::uniform(tc48, Rational(1, 4));
  CHECK(validate_fractional_matching(tc48, quarter));
  CHECK(total_weight(quarter) == Rational(2));
  const auto zero = FractionalMatching::uniform(tc48, Rational(0));
  CHECK(validate_fractional_matching(tc48, zero));
  CHECK(total_weight(zero) == Rational(0));
  CHECK_THROWS_AS(validate_fractional_matching(tc48, FractionalMatching{{{99, Rational(1, 4)}}}), InputError);
  CHECK_FALSE(validate_fractional_matching(tc48, FractionalMatching{{{0, Rational(-1, 4)}}}));
  // Uniform 1/(t-1) on TC^{t-1}_k is always valid.
  for (int r = 2; r <= 5; ++r)
    for (int k = 2 * r; k <= 12; ++k) {
      const Hypergraph h = tight_cycle(r, k);
      CHECK(validate_fractional_matching(h, FractionalMatching::uniform(h, Rational(1, r))));
    }
}

TEST_CASE("hypergraph validation") {
  CHECK_THROWS_AS(Hypergraph(3, {{0}}), InputError);
  CHECK_THROWS_AS(Hypergraph(3, {{0, 0, 1}}), InputError);
  CHECK_THROWS_AS(Hypergraph(3, {{0, 3}}), InputError);
  CHECK_THROWS_AS(Hypergraph(3, {{0, 1}, {1, 0}}), InputError);
  const Hypergraph h(4, {{2, 1, 0}, {1, 3}});
  CHECK(h.edge(0) == std::vector<int>{0, 1, 2});
  CHECK_FALSE(h.uniformity().has_value());
  CHECK(h.incident(1) == std::vector<int>{0, 1});
}

TEST_CASE("graph6 encoding") {
  CHECK(graph6_encode(complete_graph(2)) == "A_");
  CHECK(graph6_encode(Graph(1)) == "@");
  CHECK(graph6_encode(Graph(0)) == "?");
  CHECK(graph6_decode("A_") == complete_graph(2));
  CHECK(graph6_decode(">>graph6<<A_\n") == complete_graph(2));
  CHECK_THROWS_AS(graph6_decode("A!"), ParseError);
  CHECK_THROWS_AS(graph6_decode("B"), ParseError);
  CHECK_THROWS_AS(graph6_decode("A`"), ParseError);

  std::mt19937_64 rng(5);
  for (int it = 0; it < 300; ++it) {
    const int n = static_cast<int>(rng() % 63);
    const Graph g = oracle::random_graph(rng, n, 0.3);
    CHECK(graph6_decode(graph6_encode(g)) == g);
  }
  const Graph big = oracle::random_graph(rng, 100, 0.1);
  CHECK(graph6_encode(big)[0] == '~');
  CHECK(graph6_decode(graph6_encode(big)) == big);
}

TEST_CASE("json shapes round trip") {
  const Hypergraph h = tight_cycle(3, 7);
  CHECK(hypergraph_from_json(to_json(h)) == h);
  const auto m = FractionalMatching::uniform(h, Rational(1, 3));
  const auto back = fractional_matching_from_json(to_json(m));
  CHECK(back.weights == m.weights);
  const std::vector<VertexSet> parts{VertexSet{0, 2}, VertexSet{1}};
  CHECK(parts_from_json(parts_to_json(parts)) == parts);
  CHECK_THROWS_AS(parse_json("{"), ParseError);
  CHECK_THROWS_AS(fractional_matching_from_json(parse_json(R"({"weights":[{"edge":0,"num":1,"den":0}]})")),
                  ParseError);
  CHECK_THROWS_AS(hypergraph_from_json(parse_json(R"({"n":2})")), ParseError);
}

TEST_CASE("relabel and induced subgraph") {
  const Graph p = path_graph(4);
  const std::vector<int> perm{3, 2, 1, 0};
  CHECK(relabel(p, perm) == p);
  const auto sub = induced_subgraph(cycle_graph(5), VertexSet{0, 1, 3});
  CHECK(sub.graph == Graph(3, {{0, 1}}));
  CHECK(sub.original == std::vector<int>{0, 1, 3});
}
