#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "mislab/graph.hpp"
#include "mislab/hypergraph.hpp"

namespace mislab {

// graph6: one header byte n+63 (or 126 followed by three bytes for
// 63 <= n <= 258047), then the upper triangle in column order
// x(0,1) x(0,2) x(1,2) x(0,3) ... packed big-endian into 6-bit groups,
// zero padded, each group offset by 63.
std::string graph6_encode(const Graph& g);
/// Leading/trailing whitespace and an optional ">>graph6<<" header are
/// tolerated; anything else outside 63..126 is a ParseError.
Graph graph6_decode(std::string_view bytes);

// JSON shapes:
//   hypergraph          {"n": int, "edges": [[int, ...], ...]}
//   fractional matching {"weights": [{"edge": int, "num": int, "den": int}, ...]}
//   partition           {"parts": [[int, ...], ...]}
nlohmann::json to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FractionalMatching& m);
FractionalMatching fractional_matching_from_json(const nlohmann::json& j);

nlohmann::json parts_to_json(const std::vector<VertexSet>& parts);
std::vector<VertexSet> parts_from_json(const nlohmann::json& j);

/// Parses text as JSON, turning library errors into ParseError.
nlohmann::json parse_json(std::string_view text);

}  // namespace mislab
