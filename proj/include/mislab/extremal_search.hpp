#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "mislab/mis_engine.hpp"

namespace mislab {

inline constexpr int kGraphScanCap = 8;
inline constexpr int kHypergraphScanCap = 6;
inline constexpr int kDefaultWitnessCap = 64;

/// One extremal question: the largest number of MIS's (of size k, or of any
/// size) over all labeled r-uniform (hyper)graphs on n vertices, optionally
/// restricted to K_t-free (K_t^r-free) ones.
struct SearchSpec {
  int n = 0;
  std::optional<int> k;
  std::optional<int> t;
  int r = 2;  // 2 = graphs, 3 = 3-uniform hypergraphs
  bool collect_witnesses = false;
  int witness_cap = kDefaultWitnessCap;
  int threads = 1;
};

void validate(const SearchSpec& spec);

struct SearchReport {
  SearchSpec spec;
  Count value = 0;
  /// Canonical graph6 (r = 2) or canonical hypergraph JSON (r = 3) of
  /// every extremal isomorphism class, sorted; at most witness_cap.
  std::vector<std::string> witnesses;
  bool witnesses_truncated = false;
  std::optional<Count> formula_value;
  Count graphs_scanned = 0;
  double elapsed_seconds = 0;
};

/// Exhaustive scan of every labeled (hyper)graph on n vertices. The edge
/// slots are decided one at a time by depth-first search, so consecutive
/// states differ in one edge; adding an edge that closes a forbidden clique
/// cuts the whole subtree (clique-freeness is monotone). Work is split on
/// the first few slots across `threads` workers; the result does not
/// depend on the thread count.
SearchReport exhaustive_m(const SearchSpec& spec);

/// Per-size maxima from a single scan: max_by_k[k] is the largest number
/// of k-MIS's, max_all the largest total.
struct ProfileReport {
  int n = 0;
  std::optional<int> t;
  int r = 2;
  std::vector<Count> max_by_k;
  Count max_all = 0;
  Count graphs_scanned = 0;
};
ProfileReport exhaustive_profile(int n, std::optional<int> t, int r = 2, int threads = 1);

/// Extremal classes for 2-MIS's in triangle-free graphs on n vertices.
std::vector<std::string> uniqueness_check(int n, int k = 2, int t = 3, int threads = 1);

nlohmann::json to_json(const SearchSpec& spec);
/// Timing is left out unless asked for, so equal specs give equal bytes.
nlohmann::json to_json(const SearchReport& report, bool include_timing = false);
std::string to_csv(const SearchReport& report);

}  // namespace mislab
