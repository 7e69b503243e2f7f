#pragma once

#include <span>
#include <utility>
#include <vector>

#include "mislab/vertex_set.hpp"

namespace mislab {

using Edge = std::pair<int, int>;

/// Undirected simple graph on vertices 0..n-1, one neighbour bitset per
/// vertex. Immutable once built; constructors validate symmetry,
/// irreflexivity and range.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  static Graph from_adjacency(std::vector<VertexSet> adjacency);

  [[nodiscard]] int order() const { return n_; }
  [[nodiscard]] int edge_count() const;
  [[nodiscard]] VertexSet vertices() const { return VertexSet::prefix(n_); }
  [[nodiscard]] const VertexSet& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  [[nodiscard]] bool adjacent(int u, int v) const { return neighbors(u).test(v); }
  [[nodiscard]] std::span<const VertexSet> adjacency() const { return adj_; }
  /// Edges (u, v) with u < v, sorted.
  [[nodiscard]] std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
};

/// A graph together with an ordered partition of its vertex set into
/// nonempty parts.
class PartitionedGraph {
 public:
  PartitionedGraph() = default;
  PartitionedGraph(Graph g, std::vector<VertexSet> parts);

  [[nodiscard]] const Graph& graph() const { return graph_; }
  [[nodiscard]] const std::vector<VertexSet>& parts() const { return parts_; }
  [[nodiscard]] int part_count() const { return static_cast<int>(parts_.size()); }
  [[nodiscard]] int part_of(int v) const { return part_of_[static_cast<std::size_t>(v)]; }
  [[nodiscard]] bool has_intra_part_edge() const;

  friend bool operator==(const PartitionedGraph&, const PartitionedGraph&) = default;

 private:
  Graph graph_;
  std::vector<VertexSet> parts_;
  std::vector<int> part_of_;
};

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

/// Relabels vertex v as perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> original;  // new id -> id in the source graph
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

// Structural predicates. All throw InputError when s has bits >= g.order().
bool is_independent(const Graph& g, const VertexSet& s);
bool is_maximal_independent(const Graph& g, const VertexSet& s);

/// Whether g contains t pairwise adjacent vertices (branch and bound with a
/// greedy colouring bound).
bool has_clique(const Graph& g, int t);

/// Graph where u ~ v iff u, v lie in different parts and are non-adjacent in
/// the input. Rejects inputs with intra-part edges.
PartitionedGraph partite_complement(const PartitionedGraph& pg);

/// Vertices of gs[i] are shifted by the total order of gs[0..i-1].
Graph disjoint_union(std::span<const Graph> gs);
/// As above, keeping every input's parts in order.
PartitionedGraph disjoint_union(std::span<const PartitionedGraph> pgs);

}  // namespace mislab
