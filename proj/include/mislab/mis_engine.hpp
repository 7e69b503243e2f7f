#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "mislab/graph.hpp"
#include "mislab/hypergraph.hpp"

namespace mislab {

using Count = std::uint64_t;

/// Receives each maximal independent set; return false to stop early.
using MisVisitor = std::function<bool(const VertexSet&)>;

/// Number of maximal independent sets of size exactly k (0 <= k <= n).
Count count_k_mis(const Graph& g, int k);
/// Visits k-MIS's in lexicographic order of their sorted vertex lists,
/// stopping after `limit` of them. Returns the number visited.
Count enumerate_k_mis(const Graph& g, int k, const MisVisitor& visit,
                      std::optional<Count> limit = std::nullopt);

Count count_all_mis(const Graph& g);
/// profile[k] = number of k-MIS's, k = 0..n.
std::vector<Count> mis_size_profile(const Graph& g);

/// Maximal independent sets with exactly one vertex in every part.
Count count_transversal_mis(const PartitionedGraph& pg);
Count enumerate_transversal_mis(const PartitionedGraph& pg, const MisVisitor& visit,
                                std::optional<Count> limit = std::nullopt);

/// Selector for count/enumerate front ends.
struct MisQuery {
  std::optional<int> k;
  bool transversal = false;  // requires k == part count when k is given
  std::optional<Count> limit;
};
Count run_query(const PartitionedGraph& pg, const MisQuery& q, const MisVisitor& visit = {});
Count run_query(const Graph& g, const MisQuery& q, const MisVisitor& visit = {});

/// Splits V(g) along the k-MIS i = {v_1 < ... < v_k}: U_j holds the
/// vertices outside i adjacent to v_j but to no earlier v, and the last
/// part is i itself. Empty parts are dropped. Every part is independent
/// because g is triangle-free.
std::vector<VertexSet> greedy_mis_partition(const Graph& g, const VertexSet& i);

struct ReductionResult {
  PartitionedGraph subgraph;       // induced on the chosen greedy parts, k random blocks
  std::vector<int> original;       // subgraph vertex -> vertex of the input graph
  std::vector<int> composition;    // k-MIS's chosen per greedy part
  Count composition_count = 0;     // k-MIS's of the input with that profile
  Count achieved_T = 0;            // transversal k-MIS's of the returned subgraph
  Count source_m = 0;              // k-MIS's of the input graph
  int retries_used = 0;
  std::uint64_t seed = 0;
  bool bound_met = false;          // achieved_T * (4k)^k >= source_m
};

/// Reduces a triangle-free graph to a k-partite induced subgraph with many
/// transversal k-MIS's: classify the k-MIS's by how they meet the greedy
/// partition, keep the parts of the most common profile and split each
/// part at random into as many blocks as the profile uses there. Keeps the
/// best of `retries` splits. Throws DomainError when g has no k-MIS.
ReductionResult transversal_reduction(const Graph& g, int k, int retries, std::uint64_t seed);

/// For a 5-partite graph V1..V5: true iff V1∪V3, V2∪V4 and V2∪V5 span no
/// edges.
bool check_k5_hypothesis(const PartitionedGraph& pg);

struct TripartiteBound {
  Count transversal = 0;
  int n = 0;
  bool holds = false;
};
/// Counts transversal 3-MIS's of a triangle-free tripartite graph and
/// compares with its order. Throws InputError on a triangle.
TripartiteBound tripartite_T_bound_check(const PartitionedGraph& pg);

/// Hypergraph independence: contains no edge.
bool is_hypergraph_independent(const Hypergraph& h, const VertexSet& s);
/// Maximal: every outside vertex completes an edge inside s ∪ {w}.
bool is_hypergraph_maximal_independent(const Hypergraph& h, const VertexSet& s);
Count hypergraph_count_k_mis(const Hypergraph& h, int k);
Count enumerate_hypergraph_k_mis(const Hypergraph& h, int k, const MisVisitor& visit,
                                 std::optional<Count> limit = std::nullopt);
std::vector<Count> hypergraph_mis_size_profile(const Hypergraph& h);

}  // namespace mislab
