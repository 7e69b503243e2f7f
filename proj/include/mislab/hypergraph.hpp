#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/rational.hpp>

#include "mislab/graph.hpp"
#include "mislab/vertex_set.hpp"

namespace mislab {

/// Edge list over vertices 0..n-1. Every edge is stored sorted ascending,
/// has at least two vertices, and appears once.
class Hypergraph {
 public:
  Hypergraph() = default;
  explicit Hypergraph(int n, std::vector<std::vector<int>> edges = {});

  [[nodiscard]] int order() const { return n_; }
  [[nodiscard]] int edge_count() const { return static_cast<int>(edges_.size()); }
  [[nodiscard]] const std::vector<std::vector<int>>& edges() const { return edges_; }
  [[nodiscard]] const std::vector<int>& edge(int i) const { return edges_[static_cast<std::size_t>(i)]; }
  [[nodiscard]] const std::vector<VertexSet>& edge_masks() const { return masks_; }
  /// Indices of the edges containing x, ascending.
  [[nodiscard]] std::vector<int> incident(int x) const;

  /// Common edge size, or nullopt when empty or mixed.
  [[nodiscard]] std::optional<int> uniformity() const;
  [[nodiscard]] bool is_uniform(int r) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> edges_;
  std::vector<VertexSet> masks_;
};

/// Graph with xy present iff some edge contains both x and y.
Graph shadow(const Hypergraph& h);

/// Whether h (r-uniform) contains t vertices all of whose r-subsets are
/// edges.
bool has_hyperclique(const Hypergraph& h, int t);

using Rational = boost::rational<std::int64_t>;

/// Weight per edge index. Weights are exact rationals so the load check
/// never rounds.
struct FractionalMatching {
  std::vector<std::pair<int, Rational>> weights;

  static FractionalMatching uniform(const Hypergraph& h, Rational w);
};

/// Per-vertex load check. Throws InputError for an unknown edge index or a
/// repeated one.
bool validate_fractional_matching(const Hypergraph& h, const FractionalMatching& m);
Rational total_weight(const FractionalMatching& m);

}  // namespace mislab
