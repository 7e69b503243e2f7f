#pragma once

// Backtracking kernels shared by the counting engine and the exhaustive
// scanners. They take raw adjacency/edge spans so a scanner can mutate its
// own scratch graph without building Graph objects per leaf.

#include <cstdint>
#include <span>
#include <type_traits>
#include <vector>

#include "mislab/vertex_set.hpp"

namespace mislab::detail {

// Maximal independent sets by ordered choice. A node holds the chosen set,
// the candidates (later vertices not adjacent to it) and the dominated set
// chosen ∪ N(chosen). A skipped, still undominated vertex must later gain a
// neighbour from the candidates, otherwise the branch is dead. With a
// target size, branches that cannot reach it are cut as well.
template <class Visit>
class MisSearch {
 public:
  MisSearch(std::span<const VertexSet> adj, int n, int target, Visit& visit)
      : adj_(adj), all_(VertexSet::prefix(n)), target_(target), visit_(visit) {}

  void run() { expand(VertexSet{}, 0, all_, VertexSet{}); }
  [[nodiscard]] bool stopped() const { return stop_; }

 private:
  void expand(const VertexSet& chosen, int size, VertexSet cand, const VertexSet& dominated) {
    if (target_ >= 0 && size == target_) {
      if (dominated == all_) emit(chosen, size);
      return;
    }
    if (cand.empty()) {
      if (target_ < 0 && dominated == all_) emit(chosen, size);
      return;
    }
    if (target_ >= 0 && size + cand.count() < target_) return;
    for (int u : all_ - dominated - cand)
      if (!adj_[static_cast<std::size_t>(u)].intersects(cand)) return;

    while (cand.any() && !stop_) {
      const int v = cand.first();
      cand.reset(v);
      const VertexSet& nv = adj_[static_cast<std::size_t>(v)];
      VertexSet next_chosen = chosen;
      next_chosen.set(v);
      VertexSet next_dominated = dominated | nv;
      next_dominated.set(v);
      expand(next_chosen, size + 1, cand - nv, next_dominated);
      // Every later branch leaves v out, so something in cand must cover it.
      if (!dominated.test(v) && !nv.intersects(cand)) return;
      if (target_ >= 0 && size + cand.count() < target_) return;
    }
  }

  void emit(const VertexSet& s, int size) {
    if (!visit_(s, size)) stop_ = true;
  }

  std::span<const VertexSet> adj_;
  VertexSet all_;
  int target_;
  Visit& visit_;
  bool stop_ = false;
};

template <class Visit>
bool for_each_mis(std::span<const VertexSet> adj, int n, int target, Visit&& visit) {
  MisSearch<std::remove_reference_t<Visit>> search(adj, n, target, visit);
  search.run();
  return !search.stopped();
}

/// out[k] += number of k-MIS's, for every k (out must have n+1 slots).
inline void mis_profile(std::span<const VertexSet> adj, int n, std::span<std::uint64_t> out) {
  for_each_mis(adj, n, -1, [&](const VertexSet&, int size) {
    ++out[static_cast<std::size_t>(size)];
    return true;
  });
}

// Hypergraph analogue: a set is independent when it contains no edge and
// maximal when every outside vertex w completes an edge e ∋ w, e ⊆ S ∪ {w}.
// Both properties are monotone in S, so candidates can be filtered on entry
// and a vertex that is already blocked stays blocked.
template <class Visit>
class HyperMisSearch {
 public:
  HyperMisSearch(std::span<const VertexSet> edges, int n, int target, Visit& visit)
      : all_(VertexSet::prefix(n)), target_(target), visit_(visit), incident_(static_cast<std::size_t>(n)) {
    for (const auto& e : edges)
      for (int v : e) {
        VertexSet rest = e;
        rest.reset(v);
        incident_[static_cast<std::size_t>(v)].push_back(rest);
      }
  }

  void run() { expand(VertexSet{}, 0, all_); }
  [[nodiscard]] bool stopped() const { return stop_; }

 private:
  // Whether adding v to s would complete an edge.
  [[nodiscard]] bool blocked(int v, const VertexSet& s) const {
    for (const auto& rest : incident_[static_cast<std::size_t>(v)])
      if (rest.is_subset_of(s)) return true;
    return false;
  }

  void expand(const VertexSet& chosen, int size, const VertexSet& cand_in) {
    // Drop candidates that the current set already blocks.
    VertexSet cand;
    for (int v : cand_in)
      if (!blocked(v, chosen)) cand.set(v);
    if (target_ >= 0 && size == target_) {
      if (is_maximal(chosen)) emit(chosen, size);
      return;
    }
    if (cand.empty()) {
      if (target_ < 0 && is_maximal(chosen)) emit(chosen, size);
      return;
    }
    if (target_ >= 0 && size + cand.count() < target_) return;
    while (cand.any() && !stop_) {
      const int v = cand.first();
      cand.reset(v);
      VertexSet next = chosen;
      next.set(v);
      expand(next, size + 1, cand);
      if (target_ >= 0 && size + cand.count() < target_) return;
    }
  }

  [[nodiscard]] bool is_maximal(const VertexSet& s) const {
    for (int w : all_ - s)
      if (!blocked(w, s)) return false;
    return true;
  }

  void emit(const VertexSet& s, int size) {
    if (!visit_(s, size)) stop_ = true;
  }

  VertexSet all_;
  int target_;
  Visit& visit_;
  std::vector<std::vector<VertexSet>> incident_;
  bool stop_ = false;
};

template <class Visit>
bool for_each_hyper_mis(std::span<const VertexSet> edges, int n, int target, Visit&& visit) {
  HyperMisSearch<std::remove_reference_t<Visit>> search(edges, n, target, visit);
  search.run();
  return !search.stopped();
}

inline void hyper_mis_profile(std::span<const VertexSet> edges, int n, std::span<std::uint64_t> out) {
  for_each_hyper_mis(edges, n, -1, [&](const VertexSet&, int size) {
    ++out[static_cast<std::size_t>(size)];
    return true;
  });
}

}  // namespace mislab::detail
