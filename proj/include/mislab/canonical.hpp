#pragma once

#include <string>

#include "mislab/graph.hpp"
#include "mislab/hypergraph.hpp"

namespace mislab {

inline constexpr int kCanonicalGraphCap = 10;
inline constexpr int kCanonicalHypergraphCap = 8;

/// Lexicographically least graph6 string over all relabelings of g. Two
/// graphs get the same string iff they are isomorphic. n <= 10.
std::string canonical_form(const Graph& g);

/// Compact JSON {"n":..,"edges":[..]} of the relabeling of h whose sorted
/// edge list is lexicographically least. n <= 8.
std::string canonical_form(const Hypergraph& h);

}  // namespace mislab
