#include "mislab/mis_engine.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>

#include "mis_kernel.hpp"
#include "mislab/errors.hpp"

namespace mislab {

namespace {

void check_size(int k, int n) {
  if (k < 0 || k > n)
    throw InputError("MIS size " + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");
}

// Wraps a user visitor with an optional cap; counts what it passed on.
struct CappedVisit {
  const MisVisitor& visit;
  std::optional<Count> limit;
  Count seen = 0;

  bool operator()(const VertexSet& s, int /*size*/) {
    if (limit && seen >= *limit) return false;
    ++seen;
    if (visit && !visit(s)) return false;
    return !limit || seen < *limit;
  }
};

}  // namespace

Count count_k_mis(const Graph& g, int k) {
  check_size(k, g.order());
  Count c = 0;
  detail::for_each_mis(g.adjacency(), g.order(), k, [&](const VertexSet&, int) {
    ++c;
    return true;
  });
  return c;
}

Count enumerate_k_mis(const Graph& g, int k, const MisVisitor& visit, std::optional<Count> limit) {
  check_size(k, g.order());
  if (limit && *limit == 0) return 0;
  CappedVisit capped{visit, limit};
  detail::for_each_mis(g.adjacency(), g.order(), k, capped);
  return capped.seen;
}

std::vector<Count> mis_size_profile(const Graph& g) {
  std::vector<Count> profile(static_cast<std::size_t>(g.order()) + 1, 0);
  detail::mis_profile(g.adjacency(), g.order(), profile);
  return profile;
}

Count count_all_mis(const Graph& g) {
  const auto p = mis_size_profile(g);
  return std::accumulate(p.begin(), p.end(), Count{0});
}

namespace {

// One vertex per part, parts visited smallest first. A later part whose
// every vertex is already adjacent to the chosen ones ends the branch.
class TransversalSearch {
 public:
  TransversalSearch(const PartitionedGraph& pg, CappedVisit& visit)
      : g_(pg.graph()), all_(pg.graph().vertices()), visit_(visit) {
    order_ = pg.parts();
    std::stable_sort(order_.begin(), order_.end(),
                     [](const VertexSet& a, const VertexSet& b) { return a.count() < b.count(); });
  }

  void run() { expand(0, VertexSet{}, VertexSet{}); }

 private:
  void expand(std::size_t depth, const VertexSet& chosen, const VertexSet& forbidden) {
    if (stop_) return;
    if (depth == order_.size()) {
      if ((forbidden | chosen) == all_ && !visit_(chosen, static_cast<int>(depth))) stop_ = true;
      return;
    }
    for (std::size_t d = depth; d < order_.size(); ++d)
      if (order_[d].is_subset_of(forbidden)) return;
    for (int v : order_[depth] - forbidden) {
      VertexSet next = chosen;
      next.set(v);
      expand(depth + 1, next, forbidden | g_.neighbors(v));
      if (stop_) return;
    }
  }

  const Graph& g_;
  VertexSet all_;
  CappedVisit& visit_;
  std::vector<VertexSet> order_;
  bool stop_ = false;
};

}  // namespace

Count enumerate_transversal_mis(const PartitionedGraph& pg, const MisVisitor& visit,
                                std::optional<Count> limit) {
  if (limit && *limit == 0) return 0;
  CappedVisit capped{visit, limit};
  TransversalSearch(pg, capped).run();
  return capped.seen;
}

Count count_transversal_mis(const PartitionedGraph& pg) { return enumerate_transversal_mis(pg, {}); }

Count run_query(const PartitionedGraph& pg, const MisQuery& q, const MisVisitor& visit) {
  if (!q.transversal) return run_query(pg.graph(), q, visit);
  if (q.k && *q.k != pg.part_count())
    throw InputError("transversal query needs k equal to the number of parts (" +
                     std::to_string(pg.part_count()) + ")");
  return enumerate_transversal_mis(pg, visit, q.limit);
}

Count run_query(const Graph& g, const MisQuery& q, const MisVisitor& visit) {
  if (q.transversal) throw InputError("transversal query needs a partitioned graph");
  if (q.k) return enumerate_k_mis(g, *q.k, visit, q.limit);
  if (q.limit && *q.limit == 0) return 0;
  CappedVisit capped{visit, q.limit};
  detail::for_each_mis(g.adjacency(), g.order(), -1, capped);
  return capped.seen;
}

namespace {

std::vector<VertexSet> greedy_parts_with_empties(const Graph& g, const VertexSet& i) {
  if (!is_maximal_independent(g, i)) throw InputError("greedy partition needs a maximal independent set");
  if (has_clique(g, 3)) throw InputError("greedy partition needs a triangle-free graph");
  std::vector<VertexSet> parts;
  VertexSet assigned = i;
  for (int v : i) {
    VertexSet u = g.neighbors(v) - assigned;
    assigned |= u;
    parts.push_back(u);
  }
  parts.push_back(i);
  return parts;
}

// a * b, clamped to the __int128 range we care about.
__int128 saturating_mul(__int128 a, __int128 b) {
  constexpr __int128 kCap = static_cast<__int128>(1) << 120;
  if (a != 0 && b > kCap / a) return kCap;
  return a * b;
}

}  // namespace

std::vector<VertexSet> greedy_mis_partition(const Graph& g, const VertexSet& i) {
  auto parts = greedy_parts_with_empties(g, i);
  std::erase_if(parts, [](const VertexSet& p) { return p.empty(); });
  return parts;
}

ReductionResult transversal_reduction(const Graph& g, int k, int retries, std::uint64_t seed) {
  check_size(k, g.order());
  if (retries < 1) throw InputError("transversal reduction needs at least one retry");
  if (has_clique(g, 3)) throw InputError("transversal reduction needs a triangle-free graph");

  std::vector<VertexSet> all_mis;
  enumerate_k_mis(g, k, [&](const VertexSet& s) {
    all_mis.push_back(s);
    return true;
  });
  if (all_mis.empty()) throw DomainError("graph has no maximal independent set of size " + std::to_string(k));

  const auto greedy = greedy_parts_with_empties(g, all_mis.front());
  std::map<std::vector<int>, Count> profiles;
  for (const auto& s : all_mis) {
    std::vector<int> c;
    for (const auto& u : greedy) c.push_back((s & u).count());
    ++profiles[c];
  }
  auto best_profile = profiles.begin();
  for (auto it = profiles.begin(); it != profiles.end(); ++it)
    if (it->second > best_profile->second) best_profile = it;
  const std::vector<int>& comp = best_profile->first;

  VertexSet keep;
  for (std::size_t i = 0; i < greedy.size(); ++i)
    if (comp[i] > 0) keep |= greedy[i];
  const InducedSubgraph h = induced_subgraph(g, keep);
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < h.original.size(); ++i) local[static_cast<std::size_t>(h.original[i])] = static_cast<int>(i);
  const Count ceiling = count_k_mis(h.graph, k);

  ReductionResult res;
  res.original = h.original;
  res.composition = comp;
  res.composition_count = best_profile->second;
  res.source_m = all_mis.size();
  res.seed = seed;

  std::mt19937_64 rng(seed);
  std::optional<PartitionedGraph> best;
  for (int attempt = 0; attempt < retries; ++attempt) {
    res.retries_used = attempt + 1;
    std::vector<VertexSet> blocks;
    bool surjective = true;
    for (std::size_t i = 0; i < greedy.size(); ++i) {
      if (comp[i] == 0) continue;
      std::vector<VertexSet> split(static_cast<std::size_t>(comp[i]));
      std::uniform_int_distribution<int> pick(0, comp[i] - 1);
      for (int v : greedy[i]) split[static_cast<std::size_t>(pick(rng))].set(local[static_cast<std::size_t>(v)]);
      for (const auto& b : split) surjective = surjective && b.any();
      blocks.insert(blocks.end(), split.begin(), split.end());
    }
    if (!surjective) continue;
    PartitionedGraph candidate(h.graph, std::move(blocks));
    const Count t = count_transversal_mis(candidate);
    if (!best || t > res.achieved_T) {
      res.achieved_T = t;
      best = std::move(candidate);
    }
    if (res.achieved_T == ceiling) break;
  }
  if (!best) {
    // Every sample left a block empty; fall back to dealing vertices round robin.
    std::vector<VertexSet> blocks;
    for (std::size_t i = 0; i < greedy.size(); ++i) {
      if (comp[i] == 0) continue;
      std::vector<VertexSet> split(static_cast<std::size_t>(comp[i]));
      int j = 0;
      for (int v : greedy[i]) split[static_cast<std::size_t>(j++ % comp[i])].set(local[static_cast<std::size_t>(v)]);
      blocks.insert(blocks.end(), split.begin(), split.end());
    }
    best = PartitionedGraph(h.graph, std::move(blocks));
    res.achieved_T = count_transversal_mis(*best);
  }
  res.subgraph = std::move(*best);

  __int128 scale = 1;
  for (int i = 0; i < k; ++i) scale = saturating_mul(scale, 4 * k);
  res.bound_met = saturating_mul(static_cast<__int128>(res.achieved_T), scale) >=
                  static_cast<__int128>(res.source_m);
  return res;
}

bool check_k5_hypothesis(const PartitionedGraph& pg) {
  if (pg.part_count() != 5) throw InputError("k = 5 hypothesis needs exactly 5 parts");
  const auto& p = pg.parts();
  const Graph& g = pg.graph();
  auto edgeless = [&](const VertexSet& s) { return is_independent(g, s); };
  return edgeless(p[0] | p[2]) && edgeless(p[1] | p[3]) && edgeless(p[1] | p[4]);
}

TripartiteBound tripartite_T_bound_check(const PartitionedGraph& pg) {
  if (pg.part_count() != 3) throw InputError("tripartite check needs exactly 3 parts");
  if (pg.has_intra_part_edge()) throw InputError("tripartite check needs independent parts");
  if (has_clique(pg.graph(), 3)) throw InputError("tripartite check needs a triangle-free graph");
  TripartiteBound out;
  out.transversal = count_transversal_mis(pg);
  out.n = pg.graph().order();
  out.holds = out.transversal <= static_cast<Count>(out.n);
  return out;
}

bool is_hypergraph_independent(const Hypergraph& h, const VertexSet& s) {
  if (!s.is_subset_of(VertexSet::prefix(h.order()))) throw InputError("vertex set out of range");
  return std::none_of(h.edge_masks().begin(), h.edge_masks().end(),
                      [&](const VertexSet& e) { return e.is_subset_of(s); });
}

bool is_hypergraph_maximal_independent(const Hypergraph& h, const VertexSet& s) {
  if (!is_hypergraph_independent(h, s)) return false;
  for (int w : VertexSet::prefix(h.order()) - s) {
    VertexSet with = s;
    with.set(w);
    const bool completes = std::any_of(h.edge_masks().begin(), h.edge_masks().end(), [&](const VertexSet& e) {
      return e.test(w) && e.is_subset_of(with);
    });
    if (!completes) return false;
  }
  return true;
}

Count hypergraph_count_k_mis(const Hypergraph& h, int k) {
  check_size(k, h.order());
  Count c = 0;
  detail::for_each_hyper_mis(h.edge_masks(), h.order(), k, [&](const VertexSet&, int) {
    ++c;
    return true;
  });
  return c;
}

Count enumerate_hypergraph_k_mis(const Hypergraph& h, int k, const MisVisitor& visit, std::optional<Count> limit) {
  check_size(k, h.order());
  if (limit && *limit == 0) return 0;
  CappedVisit capped{visit, limit};
  detail::for_each_hyper_mis(h.edge_masks(), h.order(), k, capped);
  return capped.seen;
}

std::vector<Count> hypergraph_mis_size_profile(const Hypergraph& h) {
  std::vector<Count> profile(static_cast<std::size_t>(h.order()) + 1, 0);
  detail::hyper_mis_profile(h.edge_masks(), h.order(), profile);
  return profile;
}

}  // namespace mislab
