#pragma once

#include <span>
#include <string>
#include <vector>

#include "mislab/graph.hpp"
#include "mislab/hypergraph.hpp"

namespace mislab {

/// Balanced partite comatching: parts A = {0..⌊n/2⌋-1}, B = the rest, and
/// every cross pair adjacent except (i, ⌊n/2⌋+i).
PartitionedGraph comatching(int n);

/// r-partite graph whose listed transversal r-cliques are the only K_r's
/// and share no (r-1)-subset.
struct PackingGraph {
  PartitionedGraph pg;
  std::vector<VertexSet> cliques;
};

/// Throws InputError unless p satisfies every PackingGraph invariant
/// (checked exhaustively, so desk scale only).
void validate_packing(const PackingGraph& p);

/// m vertex-disjoint transversal K_r's over r parts of size m. Vertex
/// p*m + j is clique j's vertex in part p.
PackingGraph trivial_packing(int r, int m);

/// The sphere layer picked by the Behrend scan before greedy completion.
struct BehrendSphere {
  int digits = 0;     // digit range {0..digits-1}, written in base 2*digits-1
  int dimension = 0;  // number of digits
  int radius = 0;     // squared Euclidean norm of the digit vectors
  std::vector<int> elements;
};

/// Largest sphere layer below m over digits 2..10 and dimension 2..6
/// (scan order: digits, then dimension, then radius, first strict maximum
/// wins, so ties go to the smallest parameters and radius).
BehrendSphere behrend_sphere(int m);

/// 3-AP-free subset of [0, m): the Behrend sphere layer, then every further
/// x in increasing order that keeps the set free of 3-term progressions.
std::vector<int> behrend_set(int m);

/// Ruzsa-Szemerédi tripartite packing: X = [m], Y = [2m], Z = [3m]
/// (vertex ids 0..m-1, m..3m-1, 3m..6m-1) with the triangle
/// {x, x+b, x+2b} for every x in X and b in behrend_set(m).
PackingGraph rs_packing(int m);

/// Partite complement of a validated packing; each packing clique becomes
/// a transversal r-MIS.
PartitionedGraph gadget(const PackingGraph& p);

/// r-uniform tight cycle on 0..k-1 with edges {i, ..., i+r-1 mod k}.
Hypergraph tight_cycle(int r, int k);

enum class GadgetKind { Comatching, Trivial, RuzsaSzemeredi };

std::string to_string(GadgetKind kind);
GadgetKind gadget_kind_from_string(const std::string& name);

/// Per-edge gadget for an edge of size r with parameter size:
/// comatching(2*size) for r = 2, gadget(trivial_packing(r, size)), or
/// gadget(rs_packing(size)) for r = 3. Parts follow the edge's vertex order.
PartitionedGraph edge_gadget(GadgetKind kind, int r, int size);

struct BlowupSpec {
  Hypergraph templ;
  std::vector<int> sizes;           // per edge, >= 1
  std::vector<GadgetKind> gadgets;  // per edge
};

/// sizes[e] = ⌊n^{M(e)}⌋ computed with integer roots. Throws InputError when
/// m is not a valid fractional matching of h.
BlowupSpec blowup_spec_from_matching(const Hypergraph& h, const FractionalMatching& m, int n,
                                     GadgetKind kind);

/// The blown-up graph together with the per-edge gadgets, so the family of
/// k-MIS's built from per-edge transversal MIS's can be reconstructed.
///
/// Part V_x (x = 0..k-1, consecutive vertex ids) lists functions on the
/// edges through x; a function is a tuple of gadget vertices, one per
/// incident edge in ascending edge order, and V_x is enumerated in
/// lexicographic (mixed radix) order of those tuples. An isolated template
/// vertex gives a single-vertex part.
class Blowup {
 public:
  explicit Blowup(const BlowupSpec& spec);

  [[nodiscard]] const PartitionedGraph& graph() const { return graph_; }
  [[nodiscard]] const std::vector<PartitionedGraph>& gadgets() const { return gadgets_; }
  [[nodiscard]] const Hypergraph& templ() const { return templ_; }

  /// I_F: given one transversal MIS of every gadget (in gadget vertex ids),
  /// the set holding, for each template vertex x, the function that picks
  /// that MIS's vertex on every edge through x.
  [[nodiscard]] VertexSet family_member(std::span<const VertexSet> per_edge) const;

  /// Gadget vertex that vertex v of the blowup assigns to edge e (v's part
  /// must be a vertex of e).
  [[nodiscard]] int coordinate(int v, int e) const;

 private:
  Hypergraph templ_;
  std::vector<PartitionedGraph> gadgets_;
  std::vector<std::vector<int>> incident_;  // x -> edges through x
  std::vector<int> offset_;                 // x -> first vertex of V_x
  // part_vertices_[e][i] = gadget vertices of U_{e,i}, ascending.
  std::vector<std::vector<std::vector<int>>> part_vertices_;
  std::vector<std::vector<int>> local_index_;  // e -> gadget vertex -> index in its part
  PartitionedGraph graph_;

  [[nodiscard]] int position(int x, int e) const;
  [[nodiscard]] int coordinate_in(int x, int v, int e) const;
};

PartitionedGraph blowup(const BlowupSpec& spec);

/// q = ⌊k/(t-1)⌋ gadgets on t-1 parts, then a gadget on s = k mod (t-1)
/// parts (an isolated vertex when s = 1), all with part size m.
Graph theorem_a_construction(int k, int t, int m);

/// Blowup of tight_cycle(t-1, k) with every part size m. Needs
/// k >= 2(t-1) so the shadow, and hence the blowup, is K_t-free.
PartitionedGraph theorem_b_construction(int k, int t, int m, GadgetKind kind = GadgetKind::Trivial);

/// Sizes of a near-balanced split of n into k parts; the first n mod k
/// parts get the extra vertex.
std::vector<int> balanced_sizes(int n, int k);

/// r-graph on n vertices split into V_1..V_k (balanced_sizes), edges the
/// r-sets meeting some V_i in exactly two vertices and each of
/// V_{i+1}, ..., V_{i+r-2} (indices mod k) in one.
Hypergraph hypergraph_construction(int r, int k, int n);

/// Every triple through vertex 0.
Hypergraph star_hypergraph(int n);

/// K_{t-2} on 0..t-3 joined to every other vertex; the rest independent.
Graph dominating_clique_graph(int t, int n);

/// C4 on 0-1-2-3 plus leaves 4 (on 0) and 5 (on 2).
Graph c4_leaves_graph();

}  // namespace mislab
