#include "mislab/constructions.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "mislab/errors.hpp"

namespace mislab {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

void require_order(long long n, const char* what) {
  if (n > kMaxVertices)
    throw InputError(std::string(what) + " needs " + std::to_string(n) + " vertices; cap is " +
                     std::to_string(kMaxVertices));
}

}  // namespace

PartitionedGraph comatching(int n) {
  require(n >= 2, "comatching needs n >= 2");
  require_order(n, "comatching");
  const int a = n / 2;
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i)
    for (int j = a; j < n; ++j)
      if (j != a + i) e.emplace_back(i, j);
  VertexSet left = VertexSet::prefix(a);
  return PartitionedGraph(Graph(n, e), {left, VertexSet::prefix(n) - left});
}

namespace {

// All K_r's of an r-partite graph, one vertex per part.
std::vector<VertexSet> transversal_cliques(const PartitionedGraph& pg) {
  std::vector<VertexSet> out;
  const auto& parts = pg.parts();
  const Graph& g = pg.graph();
  std::function<void(std::size_t, VertexSet, VertexSet)> go = [&](std::size_t i, VertexSet chosen, VertexSet common) {
    if (i == parts.size()) {
      out.push_back(chosen);
      return;
    }
    for (int v : parts[i] & common) {
      VertexSet next = chosen;
      next.set(v);
      go(i + 1, next, common & g.neighbors(v));
    }
  };
  go(0, VertexSet{}, g.vertices());
  return out;
}

}  // namespace

void validate_packing(const PackingGraph& p) {
  const auto& pg = p.pg;
  const int r = pg.part_count();
  require(r >= 2, "packing needs at least two parts");
  require(!pg.has_intra_part_edge(), "packing has an edge inside a part");
  std::set<VertexSet> listed;
  for (const auto& c : p.cliques) {
    require(c.count() == r, "packing clique has the wrong size");
    for (const auto& part : pg.parts()) require((c & part).count() == 1, "packing clique is not transversal");
    for (int v : c) require((pg.graph().neighbors(v) & c).count() == r - 1, "listed packing clique is not a clique");
    require(listed.insert(c).second, "packing clique listed twice");
  }
  // Two distinct r-cliques share an (r-1)-subset iff they meet in r-1 vertices.
  std::vector<VertexSet> all(listed.begin(), listed.end());
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      require((all[i] & all[j]).count() < r - 1, "a K_{r-1} lies in two packing cliques");
  const auto found = transversal_cliques(pg);
  require(found.size() == listed.size(), "packing graph has unlisted K_r's");
  for (const auto& c : found) require(listed.count(c) > 0, "packing graph has an unlisted K_r");
}

PackingGraph trivial_packing(int r, int m) {
  require(r >= 2 && m >= 1, "trivial packing needs r >= 2 and m >= 1");
  require_order(static_cast<long long>(r) * m, "trivial packing");
  std::vector<Edge> e;
  for (int j = 0; j < m; ++j)
    for (int p = 0; p < r; ++p)
      for (int q = p + 1; q < r; ++q) e.emplace_back(p * m + j, q * m + j);
  std::vector<VertexSet> parts;
  for (int p = 0; p < r; ++p) parts.push_back(VertexSet::prefix((p + 1) * m) - VertexSet::prefix(p * m));
  PackingGraph out{PartitionedGraph(Graph(r * m, e), std::move(parts)), {}};
  for (int j = 0; j < m; ++j) {
    VertexSet c;
    for (int p = 0; p < r; ++p) c.set(p * m + j);
    out.cliques.push_back(c);
  }
  return out;
}

BehrendSphere behrend_sphere(int m) {
  require(m >= 2, "behrend set needs m >= 2");
  BehrendSphere best;
  for (int d = 2; d <= 10; ++d) {
    for (int dim = 2; dim <= 6; ++dim) {
      const long long base = 2LL * d - 1;
      std::vector<long long> place(static_cast<std::size_t>(dim));
      place[0] = 1;
      for (int i = 1; i < dim; ++i) place[static_cast<std::size_t>(i)] = place[static_cast<std::size_t>(i - 1)] * base;
      std::vector<std::vector<int>> layers;
      // Digits from the most significant place down; prune once the value
      // reaches m.
      std::function<void(int, long long, int)> go = [&](int i, long long value, int norm) {
        if (value >= m) return;
        if (i < 0) {
          if (static_cast<int>(layers.size()) <= norm) layers.resize(static_cast<std::size_t>(norm) + 1);
          layers[static_cast<std::size_t>(norm)].push_back(static_cast<int>(value));
          return;
        }
        for (int digit = 0; digit < d; ++digit)
          go(i - 1, value + digit * place[static_cast<std::size_t>(i)], norm + digit * digit);
      };
      go(dim - 1, 0, 0);
      for (std::size_t radius = 0; radius < layers.size(); ++radius) {
        if (layers[radius].size() > best.elements.size()) {
          best.digits = d;
          best.dimension = dim;
          best.radius = static_cast<int>(radius);
          best.elements = layers[radius];
        }
      }
    }
  }
  std::sort(best.elements.begin(), best.elements.end());
  return best;
}

std::vector<int> behrend_set(int m) {
  const auto sphere = behrend_sphere(m);
  std::vector<char> in(static_cast<std::size_t>(m), 0);
  std::vector<int> members = sphere.elements;
  for (int v : members) in[static_cast<std::size_t>(v)] = 1;
  auto member = [&](long long v) { return v >= 0 && v < m && in[static_cast<std::size_t>(v)]; };
  for (int x = 0; x < m; ++x) {
    if (in[static_cast<std::size_t>(x)]) continue;
    bool free = true;
    for (int y : members) {
      // x as an end point with y in the middle, x in the middle, or y at the far end.
      if (member(2LL * y - x) || member(2LL * x - y) || ((x + y) % 2 == 0 && member((x + y) / 2))) {
        free = false;
        break;
      }
    }
    if (free) {
      in[static_cast<std::size_t>(x)] = 1;
      members.push_back(x);
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

PackingGraph rs_packing(int m) {
  require(m >= 2, "Ruzsa-Szemeredi packing needs m >= 2");
  require_order(6LL * m, "Ruzsa-Szemeredi packing");
  const auto b = behrend_set(m);
  std::vector<Edge> e;
  std::vector<VertexSet> cliques;
  for (int x = 0; x < m; ++x) {
    for (int step : b) {
      const int y = m + x + step;
      const int z = 3 * m + x + 2 * step;
      e.emplace_back(x, y);
      e.emplace_back(y, z);
      e.emplace_back(x, z);
      cliques.push_back(VertexSet{x, y, z});
    }
  }
  std::vector<VertexSet> parts{VertexSet::prefix(m), VertexSet::prefix(3 * m) - VertexSet::prefix(m),
                               VertexSet::prefix(6 * m) - VertexSet::prefix(3 * m)};
  return PackingGraph{PartitionedGraph(Graph(6 * m, e), std::move(parts)), std::move(cliques)};
}

PartitionedGraph gadget(const PackingGraph& p) {
  validate_packing(p);
  return partite_complement(p.pg);
}

Hypergraph tight_cycle(int r, int k) {
  require(r >= 2, "tight cycle needs r >= 2");
  require(k >= r, "tight cycle needs k >= r");
  // Windows in order i = 0..k-1; they coincide only when k == r.
  std::vector<std::vector<int>> edges;
  std::set<std::vector<int>> placed;
  for (int i = 0; i < k; ++i) {
    std::vector<int> e;
    for (int j = 0; j < r; ++j) e.push_back((i + j) % k);
    std::sort(e.begin(), e.end());
    if (placed.insert(e).second) edges.push_back(e);
  }
  return Hypergraph(k, std::move(edges));
}

std::string to_string(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::Comatching: return "comatching";
    case GadgetKind::Trivial: return "trivial";
    case GadgetKind::RuzsaSzemeredi: return "rs";
  }
  return "?";
}

GadgetKind gadget_kind_from_string(const std::string& name) {
  if (name == "comatching") return GadgetKind::Comatching;
  if (name == "trivial") return GadgetKind::Trivial;
  if (name == "rs") return GadgetKind::RuzsaSzemeredi;
  throw InputError("unknown gadget kind '" + name + "' (comatching, trivial, rs)");
}

PartitionedGraph edge_gadget(GadgetKind kind, int r, int size) {
  require(size >= 1, "gadget part size must be positive");
  switch (kind) {
    case GadgetKind::Comatching:
      require(r == 2, "comatching gadgets only fit 2-edges");
      return comatching(2 * size);
    case GadgetKind::Trivial:
      return gadget(trivial_packing(r, size));
    case GadgetKind::RuzsaSzemeredi:
      require(r == 3, "Ruzsa-Szemeredi gadgets only fit 3-edges");
      return gadget(rs_packing(size));
  }
  throw InputError("unknown gadget kind");
}

namespace {

// Largest s with s^q <= n^p.
int floor_rational_power(int n, std::int64_t p, std::int64_t q) {
  constexpr __int128 kCap = static_cast<__int128>(1) << 100;
  auto pow_capped = [&](__int128 base, std::int64_t e) {
    __int128 acc = 1;
    for (std::int64_t i = 0; i < e; ++i) {
      acc *= base;
      if (acc > kCap) return kCap + 1;
    }
    return acc;
  };
  const __int128 target = pow_capped(n, p);
  // s <= n^{p/q} <= n because p <= q for a valid matching weight.
  int lo = 1;
  int hi = n;
  while (lo < hi) {
    const int mid = lo + (hi - lo + 1) / 2;
    if (pow_capped(mid, q) <= target)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

}  // namespace

BlowupSpec blowup_spec_from_matching(const Hypergraph& h, const FractionalMatching& m, int n, GadgetKind kind) {
  require(n >= 1, "blowup scale n must be positive");
  if (!validate_fractional_matching(h, m)) throw InputError("weights are not a fractional matching");
  BlowupSpec spec{h, std::vector<int>(static_cast<std::size_t>(h.edge_count()), 1),
                  std::vector<GadgetKind>(static_cast<std::size_t>(h.edge_count()), kind)};
  for (const auto& [e, w] : m.weights)
    if (w > 0) spec.sizes[static_cast<std::size_t>(e)] = floor_rational_power(n, w.numerator(), w.denominator());
  for (int x = 0; x < h.order(); ++x) {
    long long prod = 1;
    for (int e : h.incident(x)) prod *= spec.sizes[static_cast<std::size_t>(e)];
    require(prod <= n, "part size product exceeds n");
  }
  return spec;
}

Blowup::Blowup(const BlowupSpec& spec) : templ_(spec.templ) {
  const int k = templ_.order();
  const auto ecount = static_cast<std::size_t>(templ_.edge_count());
  require(spec.sizes.size() == ecount, "blowup needs one size per template edge");
  require(spec.gadgets.size() == ecount, "blowup needs one gadget kind per template edge");
  for (std::size_t e = 0; e < ecount; ++e) {
    gadgets_.push_back(edge_gadget(spec.gadgets[e], static_cast<int>(templ_.edges()[e].size()), spec.sizes[e]));
    const auto& gp = gadgets_.back();
    std::vector<std::vector<int>> pv;
    std::vector<int> li(static_cast<std::size_t>(gp.graph().order()), -1);
    for (const auto& part : gp.parts()) {
      pv.push_back(part.to_vector());
      for (std::size_t i = 0; i < pv.back().size(); ++i) li[static_cast<std::size_t>(pv.back()[i])] = static_cast<int>(i);
    }
    part_vertices_.push_back(std::move(pv));
    local_index_.push_back(std::move(li));
  }

  long long total = 0;
  std::vector<VertexSet> parts;
  for (int x = 0; x < k; ++x) {
    incident_.push_back(templ_.incident(x));
    long long size = 1;
    for (int e : incident_.back())
      size *= static_cast<long long>(part_vertices_[static_cast<std::size_t>(e)][static_cast<std::size_t>(position(x, e))].size());
    require_order(total + size, "blowup");
    offset_.push_back(static_cast<int>(total));
    parts.push_back(VertexSet::prefix(static_cast<int>(total + size)) - VertexSet::prefix(static_cast<int>(total)));
    total += size;
  }
  offset_.push_back(static_cast<int>(total));

  std::vector<VertexSet> adj(static_cast<std::size_t>(total));
  for (std::size_t e = 0; e < ecount; ++e) {
    const auto& members = templ_.edges()[e];
    const Graph& ge = gadgets_[e].graph();
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        const int x = members[a];
        const int y = members[b];
        for (int f = offset_[static_cast<std::size_t>(x)]; f < offset_[static_cast<std::size_t>(x) + 1]; ++f) {
          const int fe = coordinate_in(x, f, static_cast<int>(e));
          for (int g = offset_[static_cast<std::size_t>(y)]; g < offset_[static_cast<std::size_t>(y) + 1]; ++g) {
            if (ge.adjacent(fe, coordinate_in(y, g, static_cast<int>(e)))) {
              adj[static_cast<std::size_t>(f)].set(g);
              adj[static_cast<std::size_t>(g)].set(f);
            }
          }
        }
      }
    }
  }
  graph_ = PartitionedGraph(Graph::from_adjacency(std::move(adj)), std::move(parts));
}

int Blowup::position(int x, int e) const {
  const auto& members = templ_.edges()[static_cast<std::size_t>(e)];
  const auto it = std::find(members.begin(), members.end(), x);
  require(it != members.end(), "template vertex is not on that edge");
  return static_cast<int>(it - members.begin());
}

int Blowup::coordinate(int v, int e) const { return coordinate_in(graph_.part_of(v), v, e); }

int Blowup::coordinate_in(int x, int v, int e) const {
  const auto& inc = incident_[static_cast<std::size_t>(x)];
  int local = v - offset_[static_cast<std::size_t>(x)];
  // Mixed radix, first incident edge most significant.
  for (std::size_t j = inc.size(); j-- > 0;) {
    const int edge = inc[j];
    const auto& part = part_vertices_[static_cast<std::size_t>(edge)][static_cast<std::size_t>(position(x, edge))];
    const int radix = static_cast<int>(part.size());
    if (edge == e) return part[static_cast<std::size_t>(local % radix)];
    local /= radix;
  }
  throw InputError("blowup vertex has no coordinate on that edge");
}

VertexSet Blowup::family_member(std::span<const VertexSet> per_edge) const {
  require(per_edge.size() == gadgets_.size(), "need one transversal MIS per template edge");
  VertexSet out;
  for (int x = 0; x < templ_.order(); ++x) {
    int local = 0;
    for (int e : incident_[static_cast<std::size_t>(x)]) {
      const int i = position(x, e);
      const auto& pick = per_edge[static_cast<std::size_t>(e)];
      const auto& part = gadgets_[static_cast<std::size_t>(e)].parts()[static_cast<std::size_t>(i)];
      require((pick & part).count() == 1, "per-edge set is not transversal");
      const int gv = (pick & part).first();
      const auto& vertices = part_vertices_[static_cast<std::size_t>(e)][static_cast<std::size_t>(i)];
      local = local * static_cast<int>(vertices.size()) + local_index_[static_cast<std::size_t>(e)][static_cast<std::size_t>(gv)];
    }
    out.set(offset_[static_cast<std::size_t>(x)] + local);
  }
  return out;
}

PartitionedGraph blowup(const BlowupSpec& spec) { return Blowup(spec).graph(); }

Graph theorem_a_construction(int k, int t, int m) {
  require(k >= 1 && t >= 3 && m >= 1, "theorem (a) construction needs k >= 1, t >= 3, m >= 1");
  const int q = k / (t - 1);
  const int s = k % (t - 1);
  auto block = [&](int r) -> Graph {
    if (r == 1) return Graph(1);
    if (r == 2) return comatching(2 * m).graph();
    return gadget(trivial_packing(r, m)).graph();
  };
  std::vector<Graph> blocks(static_cast<std::size_t>(q), block(t - 1));
  if (s > 0) blocks.push_back(block(s));
  return disjoint_union(blocks);
}

PartitionedGraph theorem_b_construction(int k, int t, int m, GadgetKind kind) {
  require(t >= 3 && m >= 1, "theorem (b) construction needs t >= 3, m >= 1");
  require(k >= 2 * (t - 1), "theorem (b) construction needs k >= 2(t-1)");
  const Hypergraph h = tight_cycle(t - 1, k);
  const GadgetKind per_edge = t - 1 == 2 ? GadgetKind::Comatching : kind;
  return blowup(BlowupSpec{h, std::vector<int>(static_cast<std::size_t>(h.edge_count()), m),
                           std::vector<GadgetKind>(static_cast<std::size_t>(h.edge_count()), per_edge)});
}

std::vector<int> balanced_sizes(int n, int k) {
  require(k >= 1 && n >= k, "balanced split needs n >= k >= 1");
  std::vector<int> sizes(static_cast<std::size_t>(k), n / k);
  for (int i = 0; i < n % k; ++i) ++sizes[static_cast<std::size_t>(i)];
  return sizes;
}

Hypergraph hypergraph_construction(int r, int k, int n) {
  require(r >= 3, "hypergraph construction needs r >= 3");
  require(k >= r - 1, "hypergraph construction needs k >= r - 1");
  require(n >= k, "hypergraph construction needs n >= k");
  require_order(n, "hypergraph construction");
  const auto sizes = balanced_sizes(n, k);
  std::vector<std::vector<int>> parts;
  int next = 0;
  for (int s : sizes) {
    parts.emplace_back();
    for (int i = 0; i < s; ++i) parts.back().push_back(next++);
  }
  std::vector<std::vector<int>> edges;
  for (int i = 0; i < k; ++i) {
    const auto& home = parts[static_cast<std::size_t>(i)];
    for (std::size_t a = 0; a < home.size(); ++a) {
      for (std::size_t b = a + 1; b < home.size(); ++b) {
        // Cartesian product over V_{i+1}, ..., V_{i+r-2}.
        std::function<void(int, std::vector<int>&)> extend = [&](int j, std::vector<int>& e) {
          if (j > r - 2) {
            edges.push_back(e);
            return;
          }
          for (int v : parts[static_cast<std::size_t>((i + j) % k)]) {
            e.push_back(v);
            extend(j + 1, e);
            e.pop_back();
          }
        };
        std::vector<int> e{home[a], home[b]};
        extend(1, e);
      }
    }
  }
  return Hypergraph(n, std::move(edges));
}

Hypergraph star_hypergraph(int n) {
  require(n >= 4, "star hypergraph needs n >= 4");
  require_order(n, "star hypergraph");
  std::vector<std::vector<int>> edges;
  for (int a = 1; a < n; ++a)
    for (int b = a + 1; b < n; ++b) edges.push_back({0, a, b});
  return Hypergraph(n, std::move(edges));
}

Graph dominating_clique_graph(int t, int n) {
  require(t >= 3, "dominating clique graph needs t >= 3");
  require(n >= t, "dominating clique graph needs n >= t");
  require_order(n, "dominating clique graph");
  std::vector<Edge> e;
  for (int u = 0; u < t - 2; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph c4_leaves_graph() { return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {2, 5}}); }

}  // namespace mislab
