#include "mislab/extremal_search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <set>
#include <sstream>
#include <thread>

#include "mis_kernel.hpp"
#include "mislab/canonical.hpp"
#include "mislab/errors.hpp"
#include "mislab/theorems.hpp"

namespace mislab {

void validate(const SearchSpec& spec) {
  if (spec.r != 2 && spec.r != 3) throw InputError("exhaustive search supports r = 2 (graphs) or r = 3");
  const int cap = spec.r == 2 ? kGraphScanCap : kHypergraphScanCap;
  if (spec.n < 1 || spec.n > cap)
    throw InputError("exhaustive search with r = " + std::to_string(spec.r) + " is limited to 1 <= n <= " +
                     std::to_string(cap) + " (asked for n = " + std::to_string(spec.n) + ")");
  if (spec.k && (*spec.k < 0 || *spec.k > spec.n)) throw InputError("k must lie in [0, n]");
  if (spec.t && *spec.t <= spec.r) throw InputError("forbidden clique size t must exceed r");
  if (spec.witness_cap < 1) throw InputError("witness cap must be positive");
  if (spec.threads < 1) throw InputError("thread count must be positive");
}

namespace {

// Scratch graph for the edge-slot walk.
class GraphState {
 public:
  GraphState(int n, std::optional<int> t) : n_(n), t_(t) {
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) slots_.emplace_back(i, j);
  }

  [[nodiscard]] int slots() const { return static_cast<int>(slots_.size()); }

  [[nodiscard]] bool can_add(int slot) const {
    if (!t_) return true;
    const auto [u, v] = slots_[static_cast<std::size_t>(slot)];
    return !clique_within(adj_[static_cast<std::size_t>(u)] & adj_[static_cast<std::size_t>(v)], *t_ - 2);
  }
  void toggle(int slot) {
    const auto [u, v] = slots_[static_cast<std::size_t>(slot)];
    adj_[static_cast<std::size_t>(u)].flip(v);
    adj_[static_cast<std::size_t>(v)].flip(u);
  }

  [[nodiscard]] Count count(int k) const {
    Count c = 0;
    detail::for_each_mis(span(), n_, k, [&](const VertexSet&, int) {
      ++c;
      return true;
    });
    return c;
  }
  void profile(std::span<Count> out) const { detail::mis_profile(span(), n_, out); }

  [[nodiscard]] std::string canonical() const {
    return canonical_form(Graph::from_adjacency(std::vector<VertexSet>(adj_.begin(), adj_.begin() + n_)));
  }

 private:
  [[nodiscard]] std::span<const VertexSet> span() const { return {adj_.data(), static_cast<std::size_t>(n_)}; }

  [[nodiscard]] bool clique_within(const VertexSet& cand, int size) const {
    if (size <= 0) return true;
    if (cand.count() < size) return false;
    for (int v : cand)
      if (clique_within((cand & adj_[static_cast<std::size_t>(v)]) - VertexSet::prefix(v + 1), size - 1)) return true;
    return false;
  }

  int n_;
  std::optional<int> t_;
  std::vector<Edge> slots_;
  std::array<VertexSet, kGraphScanCap> adj_{};
};

// Scratch 3-graph for the triple-slot walk.
class HyperState {
 public:
  HyperState(int n, std::optional<int> t) : n_(n), t_(t) {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c) slots_.push_back({a, b, c});
  }

  [[nodiscard]] int slots() const { return static_cast<int>(slots_.size()); }

  [[nodiscard]] bool can_add(int slot) const {
    if (!t_) return true;
    const auto& s = slots_[static_cast<std::size_t>(slot)];
    std::vector<int> clique{s[0], s[1], s[2]};
    return !extends(clique, *t_, s);
  }
  void toggle(int slot) {
    const auto& s = slots_[static_cast<std::size_t>(slot)];
    const VertexSet mask{s[0], s[1], s[2]};
    if (has(s[0], s[1], s[2])) {
      std::erase(edges_, mask);
    } else {
      edges_.push_back(mask);
    }
    flip(s[0], s[1], s[2]);
  }

  [[nodiscard]] Count count(int k) const {
    Count c = 0;
    detail::for_each_hyper_mis(edges_, n_, k, [&](const VertexSet&, int) {
      ++c;
      return true;
    });
    return c;
  }
  void profile(std::span<Count> out) const { detail::hyper_mis_profile(edges_, n_, out); }

  [[nodiscard]] std::string canonical() const {
    std::vector<std::vector<int>> e;
    for (const auto& m : edges_) e.push_back(m.to_vector());
    return canonical_form(Hypergraph(n_, std::move(e)));
  }

 private:
  [[nodiscard]] bool has(int a, int b, int c) const {
    return present_[static_cast<std::size_t>(index(a, b, c))] != 0;
  }
  void flip(int a, int b, int c) { present_[static_cast<std::size_t>(index(a, b, c))] ^= 1; }
  [[nodiscard]] static int index(int a, int b, int c) {
    // Order-free key for a triple of distinct vertices.
    return (1 << a) | (1 << b) | (1 << c);
  }

  // Whether the clique (which contains the pending triple) grows to t
  // vertices using the current edges plus the pending triple.
  [[nodiscard]] bool extends(std::vector<int>& clique, int t, const std::array<int, 3>& pending) const {
    if (static_cast<int>(clique.size()) >= t) return true;
    for (int d = 0; d < n_; ++d) {
      if (std::find(clique.begin(), clique.end(), d) != clique.end()) continue;
      if (d < clique.back() && clique.size() > 3) continue;
      bool ok = true;
      for (std::size_t i = 0; i < clique.size() && ok; ++i)
        for (std::size_t j = i + 1; j < clique.size() && ok; ++j) {
          const int a = clique[i];
          const int b = clique[j];
          const bool is_pending = index(a, b, d) == index(pending[0], pending[1], pending[2]);
          ok = is_pending || has(a, b, d);
        }
      if (!ok) continue;
      clique.push_back(d);
      const bool found = extends(clique, t, pending);
      clique.pop_back();
      if (found) return true;
    }
    return false;
  }

  int n_;
  std::optional<int> t_;
  std::vector<std::array<int, 3>> slots_;
  std::vector<VertexSet> edges_;
  std::array<char, 1 << kHypergraphScanCap> present_{};
};

template <class State, class Leaf>
void walk(State& s, int slot, Leaf& leaf) {
  if (slot == s.slots()) {
    leaf(s);
    return;
  }
  walk(s, slot + 1, leaf);
  if (s.can_add(slot)) {
    s.toggle(slot);
    walk(s, slot + 1, leaf);
    s.toggle(slot);
  }
}

// Valid settings of the first `depth` slots, in walk order.
template <class State>
std::vector<std::vector<int>> work_units(State s, int depth) {
  std::vector<std::vector<int>> units;
  std::vector<int> added;
  auto rec = [&](auto&& self, int slot) -> void {
    if (slot == depth) {
      units.push_back(added);
      return;
    }
    self(self, slot + 1);
    if (s.can_add(slot)) {
      s.toggle(slot);
      added.push_back(slot);
      self(self, slot + 1);
      added.pop_back();
      s.toggle(slot);
    }
  };
  rec(rec, 0);
  return units;
}

// Runs make_leaf()'s accumulator over every unit; accumulators come back
// in unit order whatever the thread count.
template <class State, class Acc, class Visit>
std::vector<Acc> scan(const State& prototype, int threads, Visit visit) {
  const int depth = std::min(prototype.slots(), std::is_same_v<State, GraphState> ? 8 : 6);
  const auto units = work_units(prototype, depth);
  std::vector<Acc> results(units.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const std::size_t u = next.fetch_add(1);
      if (u >= units.size()) return;
      State s = prototype;
      for (int slot : units[u]) s.toggle(slot);
      Acc& acc = results[u];
      auto leaf = [&](const State& st) { visit(st, acc); };
      walk(s, depth, leaf);
    }
  };
  const int n_threads = std::max(1, std::min<int>(threads, static_cast<int>(units.size())));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
  }
  return results;
}

struct ValueAcc {
  Count best = 0;
  Count scanned = 0;
};

struct WitnessAcc {
  std::set<std::string> classes;
  bool truncated = false;
};

void cap_insert(std::set<std::string>& classes, bool& truncated, const std::string& s, int cap) {
  classes.insert(s);
  if (static_cast<int>(classes.size()) > cap) {
    classes.erase(std::prev(classes.end()));
    truncated = true;
  }
}

template <class State>
Count leaf_value(const State& s, const SearchSpec& spec, std::vector<Count>& scratch) {
  if (spec.k) return s.count(*spec.k);
  std::fill(scratch.begin(), scratch.end(), 0);
  s.profile(scratch);
  Count total = 0;
  for (Count c : scratch) total += c;
  return total;
}

template <class State>
void run_search(const State& prototype, const SearchSpec& spec, SearchReport& report) {
  const auto per_unit = scan<State, ValueAcc>(prototype, spec.threads, [&](const State& s, ValueAcc& acc) {
    thread_local std::vector<Count> scratch;
    scratch.resize(static_cast<std::size_t>(spec.n) + 1);
    ++acc.scanned;
    acc.best = std::max(acc.best, leaf_value(s, spec, scratch));
  });
  for (const auto& a : per_unit) {
    report.value = std::max(report.value, a.best);
    report.graphs_scanned += a.scanned;
  }
  if (!spec.collect_witnesses) return;
  const Count target = report.value;
  const auto witnesses = scan<State, WitnessAcc>(prototype, spec.threads, [&](const State& s, WitnessAcc& acc) {
    thread_local std::vector<Count> scratch;
    scratch.resize(static_cast<std::size_t>(spec.n) + 1);
    if (leaf_value(s, spec, scratch) == target) cap_insert(acc.classes, acc.truncated, s.canonical(), spec.witness_cap);
  });
  std::set<std::string> merged;
  bool truncated = false;
  for (const auto& w : witnesses) {
    truncated = truncated || w.truncated;
    for (const auto& c : w.classes) cap_insert(merged, truncated, c, spec.witness_cap);
  }
  report.witnesses.assign(merged.begin(), merged.end());
  report.witnesses_truncated = truncated;
}

}  // namespace

SearchReport exhaustive_m(const SearchSpec& spec) {
  validate(spec);
  const auto start = std::chrono::steady_clock::now();
  SearchReport report;
  report.spec = spec;
  if (spec.r == 2)
    run_search(GraphState(spec.n, spec.t), spec, report);
  else
    run_search(HyperState(spec.n, spec.t), spec, report);
  report.formula_value = formula_for(spec.n, spec.k, spec.t, spec.r);
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace {

struct ProfileAcc {
  std::vector<Count> max_by_k;
  Count max_all = 0;
  Count scanned = 0;
};

template <class State>
ProfileReport run_profile(const State& prototype, int n, int threads) {
  const auto per_unit = scan<State, ProfileAcc>(prototype, threads, [&](const State& s, ProfileAcc& acc) {
    thread_local std::vector<Count> scratch;
    scratch.assign(static_cast<std::size_t>(n) + 1, 0);
    s.profile(scratch);
    if (acc.max_by_k.empty()) acc.max_by_k.assign(static_cast<std::size_t>(n) + 1, 0);
    Count total = 0;
    for (std::size_t k = 0; k < scratch.size(); ++k) {
      acc.max_by_k[k] = std::max(acc.max_by_k[k], scratch[k]);
      total += scratch[k];
    }
    acc.max_all = std::max(acc.max_all, total);
    ++acc.scanned;
  });
  ProfileReport out;
  out.n = n;
  out.max_by_k.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& a : per_unit) {
    for (std::size_t k = 0; k < a.max_by_k.size(); ++k) out.max_by_k[k] = std::max(out.max_by_k[k], a.max_by_k[k]);
    out.max_all = std::max(out.max_all, a.max_all);
    out.graphs_scanned += a.scanned;
  }
  return out;
}

}  // namespace

ProfileReport exhaustive_profile(int n, std::optional<int> t, int r, int threads) {
  SearchSpec spec;
  spec.n = n;
  spec.t = t;
  spec.r = r;
  spec.threads = threads;
  validate(spec);
  ProfileReport out = r == 2 ? run_profile(GraphState(n, t), n, threads) : run_profile(HyperState(n, t), n, threads);
  out.t = t;
  out.r = r;
  return out;
}

std::vector<std::string> uniqueness_check(int n, int k, int t, int threads) {
  SearchSpec spec;
  spec.n = n;
  spec.k = k;
  spec.t = t;
  spec.collect_witnesses = true;
  spec.threads = threads;
  return exhaustive_m(spec).witnesses;
}

nlohmann::json to_json(const SearchSpec& spec) {
  nlohmann::json j;
  j["n"] = spec.n;
  j["k"] = spec.k ? nlohmann::json(*spec.k) : nlohmann::json(nullptr);
  j["t"] = spec.t ? nlohmann::json(*spec.t) : nlohmann::json(nullptr);
  j["r"] = spec.r;
  j["collect_witnesses"] = spec.collect_witnesses;
  j["witness_cap"] = spec.witness_cap;
  j["threads"] = spec.threads;
  return j;
}

nlohmann::json to_json(const SearchReport& report, bool include_timing) {
  nlohmann::json j;
  j["spec"] = to_json(report.spec);
  j["value"] = report.value;
  if (report.formula_value) {
    j["formula_value"] = *report.formula_value;
    j["matches_formula"] = *report.formula_value == report.value;
  } else {
    j["formula_value"] = nullptr;
    j["matches_formula"] = nullptr;
  }
  j["graphs_scanned"] = report.graphs_scanned;
  j["witnesses"] = report.witnesses;
  j["witnesses_truncated"] = report.witnesses_truncated;
  if (include_timing) j["elapsed_seconds"] = report.elapsed_seconds;
  return j;
}

std::string to_csv(const SearchReport& report) {
  auto opt = [](const auto& o) { return o ? std::to_string(*o) : std::string(); };
  std::ostringstream out;
  out << "n,k,t,r,value,formula_value,graphs_scanned,witness_classes\n";
  out << report.spec.n << ',' << opt(report.spec.k) << ',' << opt(report.spec.t) << ',' << report.spec.r << ','
      << report.value << ',' << opt(report.formula_value) << ',' << report.graphs_scanned << ','
      << report.witnesses.size() << '\n';
  return out.str();
}

}  // namespace mislab
