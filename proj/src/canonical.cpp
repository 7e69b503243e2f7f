#include "mislab/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "mislab/errors.hpp"
#include "mislab/io.hpp"

namespace mislab {

namespace {

// Places vertices position by position. The graph6 bits of column j are
// fixed once position j is filled, so a partial labeling whose bits already
// exceed the best string is cut. Twins (same neighbourhood apart from each
// other) are interchangeable and only one of them is tried per position.
// Vertices are tried in degree order so a small string is found early.
class Labeler {
 public:
  explicit Labeler(const Graph& g) : g_(g), n_(g.order()) {
    order_.resize(static_cast<std::size_t>(n_));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return g.neighbors(a).count() < g.neighbors(b).count(); });
    placed_.reserve(static_cast<std::size_t>(n_));
    bits_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0);
    best_.assign(bits_.size(), 0);
  }

  std::string run() {
    place(0, true);
    std::vector<Edge> e;
    for (int j = 1; j < n_; ++j)
      for (int i = 0; i < j; ++i)
        if (best_[index(i, j)]) e.emplace_back(i, j);
    return graph6_encode(Graph(n_, e));
  }

 private:
  [[nodiscard]] std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(i);
  }

  [[nodiscard]] bool twins(int u, int v) const {
    VertexSet nu = g_.neighbors(u);
    VertexSet nv = g_.neighbors(v);
    nu.reset(v);
    nv.reset(u);
    return nu == nv;
  }

  void place(int pos, bool less) {
    if (pos == n_) {
      if (less || !have_best_) {
        best_ = bits_;
        have_best_ = true;
        ++generation_;
      }
      return;
    }
    std::vector<int> tried;
    for (int v : order_) {
      if (used_.test(v)) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(u, v); })) continue;
      tried.push_back(v);

      bool next_less = less || !have_best_;
      bool cut = false;
      const int generation = generation_;
      for (int i = 0; i < pos; ++i) {
        const char bit = g_.adjacent(placed_[static_cast<std::size_t>(i)], v) ? 1 : 0;
        bits_[index(i, pos)] = bit;
        if (!next_less) {
          const char b = best_[index(i, pos)];
          if (bit > b) {
            cut = true;
            break;
          }
          if (bit < b) next_less = true;
        }
      }
      if (cut) continue;
      used_.set(v);
      placed_.push_back(v);
      place(pos + 1, next_less);
      placed_.pop_back();
      used_.reset(v);
      // A new best was taken below, so it shares this whole prefix.
      if (generation_ != generation) less = false;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> order_;
  std::vector<int> placed_;
  VertexSet used_;
  std::vector<char> bits_;
  std::vector<char> best_;
  bool have_best_ = false;
  int generation_ = 0;
};

}  // namespace

std::string canonical_form(const Graph& g) {
  if (g.order() > kCanonicalGraphCap)
    throw InputError("canonical form is limited to " + std::to_string(kCanonicalGraphCap) + " vertices");
  return Labeler(g).run();
}

std::string canonical_form(const Hypergraph& h) {
  const int n = h.order();
  if (n > kCanonicalHypergraphCap)
    throw InputError("hypergraph canonical form is limited to " + std::to_string(kCanonicalHypergraphCap) +
                     " vertices");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> best;
  bool have = false;
  do {
    std::vector<std::vector<int>> edges;
    edges.reserve(h.edges().size());
    for (const auto& e : h.edges()) {
      std::vector<int> image;
      for (int v : e) image.push_back(perm[static_cast<std::size_t>(v)]);
      std::sort(image.begin(), image.end());
      edges.push_back(std::move(image));
    }
    std::sort(edges.begin(), edges.end());
    if (!have || edges < best) {
      best = std::move(edges);
      have = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return to_json(Hypergraph(n, best)).dump();
}

}  // namespace mislab
