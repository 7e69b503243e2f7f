#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "mislab/mis_engine.hpp"

namespace mislab {

// Closed forms for the extremal values the exhaustive search checks.

/// Most MIS's in an n-vertex graph (n >= 2).
Count moon_moser(int n);
/// Most MIS's in an n-vertex triangle-free graph (n >= 4).
Count hujter_tuza(int n);
/// Most k-MIS's in an n-vertex graph: ⌊n/k⌋^{k-s} ⌈n/k⌉^s, s = n mod k.
Count nielsen(int n, int k);
/// Most 2-MIS's in an n-vertex triangle-free graph (n >= 2).
Count m3_n2(int n);
/// Most 1-MIS's in an n-vertex K_t-free graph: n if n < t, else t - 2.
Count mt_n1(int t, int n);
/// Most 2-MIS's in an n-vertex K_4^3-free 3-graph (n >= 4): n - 1.
Count hyper_m432(int n);
/// Upper bound t * C(n, k-1) on k-MIS's of K_t-free graphs, k < t.
Count small_k_bound(int t, int n, int k);

/// Closed form for a search spec, when one of the above applies.
std::optional<Count> formula_for(int n, std::optional<int> k, std::optional<int> t, int r);

struct IntRange {
  int lo = 0;
  int hi = 0;
};
/// "a..b" or a single integer.
IntRange parse_range(const std::string& text);

struct VerifyRow {
  std::vector<std::pair<std::string, int>> params;
  Count computed = 0;
  Count formula = 0;
  bool match = false;
};

struct VerifyTable {
  std::string theorem;
  std::vector<VerifyRow> rows;
  [[nodiscard]] bool all_match() const;
};

struct VerifyRanges {
  std::optional<IntRange> n;
  std::optional<IntRange> k;
  std::optional<IntRange> t;
};

/// Known ids: moon-moser, hujter-tuza, nielsen, m3n2, mt-n1, hyper-m432.
/// A mismatching row points at a bug here, not in the formula.
VerifyTable verify_theorem(const std::string& id, const VerifyRanges& ranges = {}, int threads = 1);
std::vector<std::string> theorem_ids();

nlohmann::json to_json(const VerifyTable& table);
std::string to_csv(const VerifyTable& table);

}  // namespace mislab
