#include "mislab/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "mislab/errors.hpp"

namespace mislab {

Hypergraph::Hypergraph(int n, std::vector<std::vector<int>> edges) : n_(n) {
  if (n < 0 || n > kMaxVertices) throw InputError("hypergraph order outside the vertex cap");
  std::set<std::vector<int>> seen;
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    if (e.size() < 2) throw InputError("hyperedges need at least two vertices");
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw InputError("hyperedge repeats a vertex");
    if (e.front() < 0 || e.back() >= n) throw InputError("hyperedge vertex out of range");
    if (!seen.insert(e).second) throw InputError("duplicate hyperedge");
    masks_.push_back(VertexSet::from(e));
  }
  edges_ = std::move(edges);
}

std::vector<int> Hypergraph::incident(int x) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < masks_.size(); ++i)
    if (masks_[i].test(x)) out.push_back(static_cast<int>(i));
  return out;
}

std::optional<int> Hypergraph::uniformity() const {
  if (edges_.empty()) return std::nullopt;
  const auto r = edges_.front().size();
  for (const auto& e : edges_)
    if (e.size() != r) return std::nullopt;
  return static_cast<int>(r);
}

bool Hypergraph::is_uniform(int r) const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [r](const auto& e) { return static_cast<int>(e.size()) == r; });
}

Graph shadow(const Hypergraph& h) {
  std::vector<VertexSet> adj(static_cast<std::size_t>(h.order()));
  for (const auto& m : h.edge_masks())
    for (int v : m) adj[static_cast<std::size_t>(v)] |= m;
  for (int v = 0; v < h.order(); ++v) adj[static_cast<std::size_t>(v)].reset(v);
  return Graph::from_adjacency(std::move(adj));
}

namespace {

class HypercliqueFinder {
 public:
  HypercliqueFinder(const Hypergraph& h, int r, int t) : r_(r), t_(t) {
    for (const auto& m : h.edge_masks()) edges_.insert(m);
    n_ = h.order();
  }

  bool search(std::vector<int>& chosen, int from) {
    if (static_cast<int>(chosen.size()) == t_) return true;
    for (int v = from; v <= n_ - (t_ - static_cast<int>(chosen.size())); ++v) {
      if (closes(chosen, v)) {
        chosen.push_back(v);
        if (search(chosen, v + 1)) return true;
        chosen.pop_back();
      }
    }
    return false;
  }

 private:
  // Every r-subset of chosen + {v} that contains v must be an edge.
  bool closes(const std::vector<int>& chosen, int v) const {
    if (static_cast<int>(chosen.size()) < r_ - 1) return true;
    VertexSet pick;
    pick.set(v);
    return subsets(chosen, 0, r_ - 1, pick);
  }
  bool subsets(const std::vector<int>& chosen, std::size_t i, int need, VertexSet& pick) const {
    if (need == 0) return edges_.count(pick) > 0;
    for (std::size_t j = i; j + static_cast<std::size_t>(need) <= chosen.size(); ++j) {
      pick.set(chosen[j]);
      const bool ok = subsets(chosen, j + 1, need - 1, pick);
      pick.reset(chosen[j]);
      if (!ok) return false;
    }
    return true;
  }

  int r_;
  int t_;
  int n_ = 0;
  std::set<VertexSet> edges_;
};

}  // namespace

bool has_hyperclique(const Hypergraph& h, int t) {
  const auto r = h.uniformity();
  if (!r) {
    if (h.edge_count() == 0) return false;
    throw InputError("hyperclique check needs a uniform hypergraph");
  }
  if (t < *r) throw InputError("hyperclique size must be at least the uniformity");
  std::vector<int> chosen;
  return HypercliqueFinder(h, *r, t).search(chosen, 0);
}

FractionalMatching FractionalMatching::uniform(const Hypergraph& h, Rational w) {
  FractionalMatching m;
  for (int i = 0; i < h.edge_count(); ++i) m.weights.emplace_back(i, w);
  return m;
}

bool validate_fractional_matching(const Hypergraph& h, const FractionalMatching& m) {
  std::vector<Rational> load(static_cast<std::size_t>(h.order()), Rational(0));
  std::vector<bool> used(static_cast<std::size_t>(h.edge_count()), false);
  bool ok = true;
  for (const auto& [e, w] : m.weights) {
    if (e < 0 || e >= h.edge_count())
      throw InputError("fractional matching names unknown edge " + std::to_string(e));
    if (used[static_cast<std::size_t>(e)])
      throw InputError("fractional matching weights edge " + std::to_string(e) + " twice");
    used[static_cast<std::size_t>(e)] = true;
    if (w < 0) ok = false;
    for (int x : h.edge(e)) load[static_cast<std::size_t>(x)] += w;
  }
  for (const auto& l : load)
    if (l > 1) ok = false;
  return ok;
}

Rational total_weight(const FractionalMatching& m) {
  Rational sum(0);
  for (const auto& [e, w] : m.weights) sum += w;
  return sum;
}

}  // namespace mislab
