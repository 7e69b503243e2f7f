#include "doctest.h"

#include <random>
#include <set>

#include "mislab/constructions.hpp"
#include "mislab/errors.hpp"
#include "mislab/mis_engine.hpp"
#include "oracles.hpp"

using namespace mislab;

TEST_CASE("count_k_mis examples") {
  const std::vector<Graph> two_k3{complete_graph(3), complete_graph(3)};
  CHECK(count_k_mis(disjoint_union(two_k3), 2) == 9);
  const std::vector<Graph> mixed{complete_graph(2), complete_graph(2), complete_graph(3)};
  CHECK(count_k_mis(disjoint_union(mixed), 3) == 12);
  const Graph empty(5);
  CHECK(count_k_mis(empty, 5) == 1);
  for (int k = 0; k < 5; ++k) CHECK(count_k_mis(empty, k) == 0);
  CHECK(count_k_mis(Graph(0), 0) == 1);
  CHECK_THROWS_AS(count_k_mis(empty, 6), InputError);
  CHECK_THROWS_AS(count_k_mis(empty, -1), InputError);
}

TEST_CASE("count_all_mis examples") {
  const std::vector<Graph> two_k3{complete_graph(3), complete_graph(3)};
  CHECK(count_all_mis(disjoint_union(two_k3)) == 9);
  CHECK(count_all_mis(cycle_graph(4)) == 2);
  CHECK(count_all_mis(Graph(4, {{0, 1}, {2, 3}})) == 4);
}

TEST_CASE("engine agrees with the subset-scan oracle") {
  std::mt19937_64 rng(2024);
  for (int it = 0; it < 400; ++it) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const double p = 0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0;
    const Graph g = oracle::random_graph(rng, n, p);
    const auto profile = mis_size_profile(g);
    Count total = 0;
    for (int k = 0; k <= n; ++k) {
      const Count c = count_k_mis(g, k);
      CHECK(c == oracle::count_k_mis(g, k));
      CHECK(profile[static_cast<std::size_t>(k)] == c);
      total += c;
    }
    CHECK(total == count_all_mis(g));
  }
}

TEST_CASE("enumeration is sorted, capped and maximal") {
  const Graph g = cycle_graph(7);
  std::vector<VertexSet> seen;
  const Count visited = enumerate_k_mis(g, 3, [&](const VertexSet& s) {
    seen.push_back(s);
    return true;
  });
  CHECK(visited == count_k_mis(g, 3));
  for (std::size_t i = 0; i < seen.size(); ++i) {
    CHECK(is_maximal_independent(g, seen[i]));
    if (i > 0) CHECK(seen[i - 1].to_vector() < seen[i].to_vector());
  }
  Count capped = enumerate_k_mis(g, 3, [](const VertexSet&) { return true; }, Count{2});
  CHECK(capped == 2);
  Count stopped = enumerate_k_mis(g, 3, [](const VertexSet&) { return false; });
  CHECK(stopped == 1);
}

TEST_CASE("counts are invariant under relabeling") {
  std::mt19937_64 rng(99);
  for (int it = 0; it < 100; ++it) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const Graph g = oracle::random_graph(rng, n, 0.35);
    const auto perm = oracle::random_permutation(rng, n);
    CHECK(mis_size_profile(relabel(g, perm)) == mis_size_profile(g));
  }
}

TEST_CASE("transversal counts") {
  CHECK(count_transversal_mis(comatching(8)) == 4);
  CHECK(count_transversal_mis(gadget(trivial_packing(3, 2))) == 2);
  const Hypergraph c5 = tight_cycle(2, 5);
  CHECK(count_transversal_mis(blowup(BlowupSpec{c5, std::vector<int>(5, 2),
                                                std::vector<GadgetKind>(5, GadgetKind::Comatching)})) >= 32);
  std::mt19937_64 rng(17);
  for (int it = 0; it < 200; ++it) {
    const int k = 2 + static_cast<int>(rng() % 3);
    const int n = k + static_cast<int>(rng() % 9);
    std::vector<VertexSet> parts(static_cast<std::size_t>(k));
    for (int v = 0; v < n; ++v) parts[static_cast<std::size_t>(v < k ? v : static_cast<int>(rng() % static_cast<std::uint64_t>(k)))].set(v);
    const PartitionedGraph pg(oracle::random_graph(rng, n, 0.4), parts);
    const Count t = count_transversal_mis(pg);
    CHECK(t == oracle::count_transversal_mis(pg));
    CHECK(t <= count_k_mis(pg.graph(), k));
    CHECK(run_query(pg, MisQuery{k, true, std::nullopt}) == t);
  }
}

TEST_CASE("queries") {
  const auto cm = comatching(8);
  CHECK(run_query(cm, MisQuery{std::nullopt, true, std::nullopt}) == 4);
  CHECK_THROWS_AS(run_query(cm, MisQuery{3, true, std::nullopt}), InputError);
  CHECK(run_query(cm.graph(), MisQuery{2, false, std::nullopt}) == 4);
  CHECK(run_query(cm.graph(), MisQuery{std::nullopt, false, Count{3}}) == 3);
}

TEST_CASE("greedy partition") {
  const Graph c5 = cycle_graph(5);
  enumerate_k_mis(c5, 2, [&](const VertexSet& i) {
    const auto parts = greedy_mis_partition(c5, i);
    CHECK(parts.size() == 3);
    VertexSet all;
    for (const auto& p : parts) {
      CHECK(is_independent(c5, p));
      CHECK_FALSE(all.intersects(p));
      all |= p;
    }
    CHECK(all == c5.vertices());
    return true;
  });
  const Graph empty(4);
  const auto single = greedy_mis_partition(empty, empty.vertices());
  CHECK(single == std::vector<VertexSet>{empty.vertices()});
  const Graph cm = comatching(6).graph();
  const auto parts = greedy_mis_partition(cm, VertexSet{0, 3});
  CHECK(parts.back() == VertexSet{0, 3});
  for (const auto& p : parts) CHECK(is_independent(cm, p));
  CHECK_THROWS_AS(greedy_mis_partition(c5, VertexSet{0}), InputError);
  CHECK_THROWS_AS(greedy_mis_partition(complete_graph(3), VertexSet{0}), InputError);
}

TEST_CASE("transversal reduction") {
  // The partitioning MIS {0, 4} sits alone in the last greedy part, so the
  // best composition keeps the other three 2-MIS's.
  const auto r = transversal_reduction(comatching(8).graph(), 2, 20, 1);
  CHECK(r.achieved_T == 3);
  CHECK(r.composition_count == 3);
  CHECK(r.source_m == 4);
  CHECK(r.bound_met);
  CHECK(r.achieved_T <= r.source_m);
  CHECK(r.subgraph.part_count() == 2);

  const Hypergraph c5 = tight_cycle(2, 5);
  const auto g = blowup(BlowupSpec{c5, std::vector<int>(5, 2), std::vector<GadgetKind>(5, GadgetKind::Comatching)});
  const auto rb = transversal_reduction(g.graph(), 5, 5, 42);
  CHECK(rb.bound_met);
  CHECK(rb.subgraph.part_count() == 5);
  CHECK_FALSE(rb.subgraph.has_intra_part_edge());

  CHECK_THROWS_AS(transversal_reduction(Graph(3), 2, 5, 0), DomainError);
  CHECK_THROWS_AS(transversal_reduction(complete_graph(3), 1, 5, 0), InputError);

  const auto again = transversal_reduction(g.graph(), 5, 5, 42);
  CHECK(again.subgraph == rb.subgraph);
  CHECK(again.achieved_T == rb.achieved_T);
}

TEST_CASE("reduction output on random triangle-free graphs") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 40; ++it) {
    const int n = 4 + static_cast<int>(rng() % 9);
    const Graph g = oracle::random_triangle_free(rng, n, 0.5);
    const auto profile = mis_size_profile(g);
    for (int k = 1; k <= n; ++k) {
      if (profile[static_cast<std::size_t>(k)] == 0) continue;
      const auto r = transversal_reduction(g, k, 10, rng());
      CHECK(r.achieved_T <= r.source_m);
      CHECK(r.source_m == profile[static_cast<std::size_t>(k)]);
      CHECK(r.subgraph.part_count() == k);
      CHECK_FALSE(r.subgraph.has_intra_part_edge());
      CHECK(count_transversal_mis(r.subgraph) == r.achieved_T);
      break;
    }
  }
}

TEST_CASE("k5 hypothesis checker") {
  const Hypergraph c5 = tight_cycle(2, 5);
  CHECK(check_k5_hypothesis(
      blowup(BlowupSpec{c5, std::vector<int>(5, 2), std::vector<GadgetKind>(5, GadgetKind::Comatching)})));
  std::vector<VertexSet> singles;
  for (int v = 0; v < 5; ++v) singles.push_back(VertexSet{v});
  CHECK_FALSE(check_k5_hypothesis(PartitionedGraph(complete_graph(5), singles)));
  CHECK(check_k5_hypothesis(PartitionedGraph(Graph(5), singles)));
  CHECK_THROWS_AS(check_k5_hypothesis(comatching(4)), InputError);
}

TEST_CASE("tripartite bound check") {
  const PartitionedGraph tiny(Graph(3), {VertexSet{0}, VertexSet{1}, VertexSet{2}});
  const auto t = tripartite_T_bound_check(tiny);
  CHECK(t.transversal == 1);
  CHECK(t.n == 3);
  CHECK(t.holds);
  const auto g2 = tripartite_T_bound_check(gadget(trivial_packing(3, 2)));
  CHECK(g2.transversal == 2);
  CHECK(g2.holds);
  // These partite complements contain triangles, so they are refused.
  CHECK_THROWS_AS(tripartite_T_bound_check(gadget(rs_packing(4))), InputError);
  CHECK_THROWS_AS(tripartite_T_bound_check(gadget(trivial_packing(3, 3))), InputError);
  CHECK_THROWS_AS(tripartite_T_bound_check(comatching(4)), InputError);
}

TEST_CASE("hypergraph MIS examples") {
  CHECK(hypergraph_count_k_mis(star_hypergraph(6), 2) == 5);
  CHECK(hypergraph_count_k_mis(hypergraph_construction(3, 3, 6), 3) >= 8);
  CHECK(hypergraph_count_k_mis(Hypergraph(4), 4) == 1);
  CHECK(is_hypergraph_independent(star_hypergraph(5), VertexSet{1, 2, 3}));
  CHECK_FALSE(is_hypergraph_independent(star_hypergraph(5), VertexSet{0, 1, 2}));
  CHECK_THROWS_AS(hypergraph_count_k_mis(Hypergraph(4), 5), InputError);
}

TEST_CASE("hypergraph engine agrees with the oracle") {
  std::mt19937_64 rng(77);
  for (int it = 0; it < 300; ++it) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const Hypergraph h = oracle::random_3graph(rng, n, 0.1 + 0.6 * static_cast<double>(rng() % 100) / 100.0);
    const auto profile = hypergraph_mis_size_profile(h);
    for (int k = 0; k <= n; ++k) {
      const Count c = hypergraph_count_k_mis(h, k);
      CHECK(c == oracle::hyper_count_k_mis(h, k));
      CHECK(profile[static_cast<std::size_t>(k)] == c);
    }
    Count enumerated = 0;
    enumerate_hypergraph_k_mis(h, 2, [&](const VertexSet& s) {
      CHECK(is_hypergraph_maximal_independent(h, s));
      ++enumerated;
      return true;
    });
    CHECK(enumerated == oracle::hyper_count_k_mis(h, 2));
  }
}
