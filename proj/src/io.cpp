#include "mislab/io.hpp"

#include <cctype>

#include "mislab/errors.hpp"

namespace mislab {

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

Graph graph6_decode(std::string_view bytes) {
  while (!bytes.empty() && std::isspace(static_cast<unsigned char>(bytes.back()))) bytes.remove_suffix(1);
  while (!bytes.empty() && std::isspace(static_cast<unsigned char>(bytes.front()))) bytes.remove_prefix(1);
  constexpr std::string_view kHeader = ">>graph6<<";
  if (bytes.starts_with(kHeader)) bytes.remove_prefix(kHeader.size());
  if (bytes.empty()) throw ParseError("graph6: empty input");
  for (char c : bytes) {
    const auto b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126) throw ParseError("graph6: byte " + std::to_string(b) + " outside 63..126");
  }
  std::size_t pos = 0;
  auto next = [&]() { return static_cast<unsigned char>(bytes[pos++]) - 63; };
  int n = next();
  if (n == 63) {
    if (bytes.size() < 4) throw ParseError("graph6: truncated size header");
    if (static_cast<unsigned char>(bytes[1]) == 126) throw ParseError("graph6: orders above 258047 unsupported");
    n = (next() << 12) | (next() << 6);
    n |= next();
  }
  if (n > kMaxVertices) throw ParseError("graph6: order " + std::to_string(n) + " exceeds the vertex cap");
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (bytes.size() - pos != need)
    throw ParseError("graph6: expected " + std::to_string(need) + " data bytes, got " +
                     std::to_string(bytes.size() - pos));
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(bytes[pos + k / 6]) - 63;
      if ((byte >> (5 - static_cast<int>(k % 6))) & 1) edges.emplace_back(i, j);
    }
  }
  const int pad = static_cast<int>(need * 6 - bits);
  if (pad > 0) {
    const int tail = static_cast<unsigned char>(bytes.back()) - 63;
    if (tail & ((1 << pad) - 1)) throw ParseError("graph6: nonzero padding bits");
  }
  return Graph(n, edges);
}

nlohmann::json parse_json(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("json: ") + e.what());
  }
}

namespace {

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

nlohmann::json to_json(const Hypergraph& h) {
  return {{"n", h.order()}, {"edges", h.edges()}};
}

Hypergraph hypergraph_from_json(const nlohmann::json& j) {
  return guarded("hypergraph json", [&] {
    return Hypergraph(j.at("n").get<int>(), j.at("edges").get<std::vector<std::vector<int>>>());
  });
}

nlohmann::json to_json(const FractionalMatching& m) {
  auto arr = nlohmann::json::array();
  for (const auto& [e, w] : m.weights)
    arr.push_back({{"edge", e}, {"num", w.numerator()}, {"den", w.denominator()}});
  return {{"weights", arr}};
}

FractionalMatching fractional_matching_from_json(const nlohmann::json& j) {
  return guarded("fractional matching json", [&] {
    FractionalMatching m;
    for (const auto& w : j.at("weights")) {
      const auto den = w.at("den").get<std::int64_t>();
      if (den == 0) throw ParseError("fractional matching json: zero denominator");
      m.weights.emplace_back(w.at("edge").get<int>(), Rational(w.at("num").get<std::int64_t>(), den));
    }
    return m;
  });
}

nlohmann::json parts_to_json(const std::vector<VertexSet>& parts) {
  auto arr = nlohmann::json::array();
  for (const auto& p : parts) arr.push_back(p.to_vector());
  return {{"parts", arr}};
}

std::vector<VertexSet> parts_from_json(const nlohmann::json& j) {
  return guarded("partition json", [&] {
    std::vector<VertexSet> parts;
    for (const auto& p : j.at("parts")) {
      VertexSet s;
      for (int v : p.get<std::vector<int>>()) {
        if (v < 0 || v >= kMaxVertices) throw ParseError("partition json: vertex out of range");
        s.set(v);
      }
      parts.push_back(s);
    }
    return parts;
  });
}

}  // namespace mislab
