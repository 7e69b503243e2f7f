#include "mislab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mislab/errors.hpp"

namespace mislab {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxVertices)
    throw InputError("vertex count " + std::to_string(n) + " outside [0, " +
                     std::to_string(kMaxVertices) + "]");
}

void check_members(const Graph& g, const VertexSet& s) {
  if (!s.is_subset_of(g.vertices()))
    throw InputError("vertex set has elements outside the graph's " +
                     std::to_string(g.order()) + " vertices");
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  check_order(n);
  adj_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    if (u == v) throw InputError("loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)].set(v);
    adj_[static_cast<std::size_t>(v)].set(u);
  }
}

Graph Graph::from_adjacency(std::vector<VertexSet> adjacency) {
  Graph g(static_cast<int>(adjacency.size()));
  const VertexSet all = g.vertices();
  for (int v = 0; v < g.n_; ++v) {
    const VertexSet& row = adjacency[static_cast<std::size_t>(v)];
    if (!row.is_subset_of(all)) throw InputError("adjacency row has out-of-range bits");
    if (row.test(v)) throw InputError("loop at vertex " + std::to_string(v));
    for (int u : row)
      if (!adjacency[static_cast<std::size_t>(u)].test(v))
        throw InputError("adjacency is not symmetric");
  }
  g.adj_ = std::move(adjacency);
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (int v = neighbors(u).next(u); v != -1; v = neighbors(u).next(v)) out.emplace_back(u, v);
  return out;
}

PartitionedGraph::PartitionedGraph(Graph g, std::vector<VertexSet> parts)
    : graph_(std::move(g)), parts_(std::move(parts)) {
  part_of_.assign(static_cast<std::size_t>(graph_.order()), -1);
  VertexSet seen;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    const VertexSet& p = parts_[i];
    if (p.empty()) throw InputError("part " + std::to_string(i) + " is empty");
    if (!p.is_subset_of(graph_.vertices()))
      throw InputError("part " + std::to_string(i) + " has out-of-range vertices");
    if (p.intersects(seen)) throw InputError("parts are not disjoint");
    seen |= p;
    for (int v : p) part_of_[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  if (seen != graph_.vertices()) throw InputError("parts do not cover every vertex");
}

bool PartitionedGraph::has_intra_part_edge() const {
  for (const auto& p : parts_)
    for (int v : p)
      if (graph_.neighbors(v).intersects(p)) return true;
  return false;
}

Graph complete_graph(int n) {
  std::vector<VertexSet> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    adj[static_cast<std::size_t>(v)] = VertexSet::prefix(n);
    adj[static_cast<std::size_t>(v)].reset(v);
  }
  return Graph::from_adjacency(std::move(adj));
}

Graph cycle_graph(int n) {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) throw InputError("permutation has wrong length");
  VertexSet image;
  for (int p : perm) {
    if (p < 0 || p >= n || image.test(p)) throw InputError("not a permutation");
    image.set(p);
  }
  std::vector<Edge> e;
  for (auto [u, v] : g.edges())
    e.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return Graph(n, e);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  check_members(g, keep);
  InducedSubgraph out;
  out.original = keep.to_vector();
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < out.original.size(); ++i)
    index[static_cast<std::size_t>(out.original[i])] = static_cast<int>(i);
  std::vector<VertexSet> adj(out.original.size());
  for (std::size_t i = 0; i < out.original.size(); ++i)
    for (int u : g.neighbors(out.original[i]) & keep) adj[i].set(index[static_cast<std::size_t>(u)]);
  out.graph = Graph::from_adjacency(std::move(adj));
  return out;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  check_members(g, s);
  for (int v : s)
    if (g.neighbors(v).intersects(s)) return false;
  return true;
}

bool is_maximal_independent(const Graph& g, const VertexSet& s) {
  if (!is_independent(g, s)) return false;
  VertexSet dominated = s;
  for (int v : s) dominated |= g.neighbors(v);
  return dominated == g.vertices();
}

namespace {

// Tomita-style clique search: colour the candidates greedily, visit them in
// reverse colour order and cut when |clique| + colour < target.
class CliqueFinder {
 public:
  CliqueFinder(const Graph& g, int target) : g_(g), target_(target) {}

  bool search(int size, VertexSet cand) {
    if (size >= target_) return true;
    std::vector<int> order;
    std::vector<int> colour;
    colour_sort(cand, order, colour);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (size + colour[i] < target_) return false;
      const int v = order[i];
      if (search(size + 1, cand & g_.neighbors(v))) return true;
      cand.reset(v);
    }
    return false;
  }

 private:
  void colour_sort(VertexSet uncoloured, std::vector<int>& order, std::vector<int>& colour) const {
    int c = 0;
    while (uncoloured.any()) {
      ++c;
      VertexSet q = uncoloured;
      while (q.any()) {
        const int v = q.first();
        q.reset(v);
        q -= g_.neighbors(v);
        uncoloured.reset(v);
        order.push_back(v);
        colour.push_back(c);
      }
    }
  }

  const Graph& g_;
  int target_;
};

}  // namespace

bool has_clique(const Graph& g, int t) {
  if (t < 1) throw InputError("clique size must be positive");
  if (t > g.order()) return false;
  return CliqueFinder(g, t).search(0, g.vertices());
}

PartitionedGraph partite_complement(const PartitionedGraph& pg) {
  if (pg.has_intra_part_edge()) throw InputError("partite complement needs parts to be independent sets");
  const Graph& g = pg.graph();
  std::vector<VertexSet> adj(static_cast<std::size_t>(g.order()));
  const VertexSet all = g.vertices();
  for (int v = 0; v < g.order(); ++v)
    adj[static_cast<std::size_t>(v)] =
        all - g.neighbors(v) - pg.parts()[static_cast<std::size_t>(pg.part_of(v))];
  return PartitionedGraph(Graph::from_adjacency(std::move(adj)), pg.parts());
}

namespace {

VertexSet shifted(const VertexSet& s, int offset) {
  VertexSet out;
  for (int v : s) out.set(v + offset);
  return out;
}

}  // namespace

Graph disjoint_union(std::span<const Graph> gs) {
  int total = 0;
  for (const auto& g : gs) total += g.order();
  if (total > kMaxVertices) throw InputError("disjoint union exceeds the vertex cap");
  std::vector<VertexSet> adj;
  adj.reserve(static_cast<std::size_t>(total));
  int offset = 0;
  for (const auto& g : gs) {
    for (const auto& row : g.adjacency()) adj.push_back(shifted(row, offset));
    offset += g.order();
  }
  return Graph::from_adjacency(std::move(adj));
}

PartitionedGraph disjoint_union(std::span<const PartitionedGraph> pgs) {
  std::vector<Graph> gs;
  std::vector<VertexSet> parts;
  int offset = 0;
  for (const auto& pg : pgs) {
    gs.push_back(pg.graph());
    for (const auto& p : pg.parts()) parts.push_back(shifted(p, offset));
    offset += pg.graph().order();
  }
  return PartitionedGraph(disjoint_union(gs), std::move(parts));
}

}  // namespace mislab
