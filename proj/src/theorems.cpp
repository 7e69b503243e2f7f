#include "mislab/theorems.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "mislab/errors.hpp"
#include "mislab/extremal_search.hpp"

namespace mislab {

namespace {

Count ipow(Count base, int exp) {
  Count r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

Count binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Count r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<Count>(n - k + i) / static_cast<Count>(i);
  return r;
}

}  // namespace

Count moon_moser(int n) {
  if (n < 2) throw InputError("moon_moser needs n >= 2");
  switch (n % 3) {
    case 0:
      return ipow(3, n / 3);
    case 1:
      return 4 * ipow(3, (n - 4) / 3);
    default:
      return 2 * ipow(3, (n - 2) / 3);
  }
}

Count hujter_tuza(int n) {
  if (n < 4) throw InputError("hujter_tuza needs n >= 4");
  return n % 2 == 0 ? ipow(2, n / 2) : 5 * ipow(2, (n - 5) / 2);
}

Count nielsen(int n, int k) {
  if (k < 1 || k > n) throw InputError("nielsen needs 1 <= k <= n");
  const int s = n % k;
  return ipow(static_cast<Count>(n / k), k - s) * ipow(static_cast<Count>((n + k - 1) / k), s);
}

Count m3_n2(int n) {
  if (n < 2) throw InputError("m3_n2 needs n >= 2");
  switch (n) {
    case 3:
      return 2;
    case 4:
      return 4;
    case 5:
      return 5;
    default:
      return static_cast<Count>(n / 2);
  }
}

Count mt_n1(int t, int n) {
  if (t < 3 || n < 1) throw InputError("mt_n1 needs t >= 3 and n >= 1");
  return n < t ? static_cast<Count>(n) : static_cast<Count>(t - 2);
}

Count hyper_m432(int n) {
  if (n < 4) throw InputError("hyper_m432 needs n >= 4");
  return static_cast<Count>(n - 1);
}

Count small_k_bound(int t, int n, int k) {
  if (k < 1 || k >= t) throw InputError("small_k_bound needs 1 <= k < t");
  return static_cast<Count>(t) * binomial(n, k - 1);
}

std::optional<Count> formula_for(int n, std::optional<int> k, std::optional<int> t, int r) {
  if (r == 3) {
    if (t == 4 && k == 2 && n >= 4) return hyper_m432(n);
    return std::nullopt;
  }
  if (r != 2) return std::nullopt;
  if (!t) {
    if (!k) return n >= 2 ? std::optional<Count>(moon_moser(n)) : std::nullopt;
    if (*k >= 1 && *k <= n) return nielsen(n, *k);
    return std::nullopt;
  }
  if (*t == 3 && !k && n >= 4) return hujter_tuza(n);
  if (*t == 3 && k == 2 && n >= 2) return m3_n2(n);
  if (*t >= 3 && k == 1) return mt_n1(*t, n);
  return std::nullopt;
}

IntRange parse_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw InputError("bad range '" + text + "'");
    }
    if (used != s.size()) throw InputError("bad range '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  IntRange r;
  if (dots == std::string::npos) {
    r.lo = r.hi = to_int(text);
  } else {
    r.lo = to_int(text.substr(0, dots));
    r.hi = to_int(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw InputError("empty range '" + text + "'");
  return r;
}

bool VerifyTable::all_match() const {
  return std::all_of(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.match; });
}

std::vector<std::string> theorem_ids() {
  return {"moon-moser", "hujter-tuza", "nielsen", "m3n2", "mt-n1", "hyper-m432"};
}

VerifyTable verify_theorem(const std::string& id, const VerifyRanges& ranges, int threads) {
  const auto ids = theorem_ids();
  if (std::find(ids.begin(), ids.end(), id) == ids.end()) throw InputError("unknown theorem id '" + id + "'");

  std::map<std::tuple<int, int, int>, ProfileReport> cache;
  auto profile = [&](int n, std::optional<int> t, int r) -> const ProfileReport& {
    const auto key = std::make_tuple(n, t.value_or(0), r);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, exhaustive_profile(n, t, r, threads)).first;
    return it->second;
  };

  VerifyTable table;
  table.theorem = id;
  auto add = [&](std::vector<std::pair<std::string, int>> params, Count computed, Count formula) {
    table.rows.push_back({std::move(params), computed, formula, computed == formula});
  };
  const int cap = id == "hyper-m432" ? kHypergraphScanCap : kGraphScanCap;
  // Refuse out-of-cap ranges before any scanning starts.
  auto n_range = [&](int lo, int hi) {
    const IntRange r = ranges.n.value_or(IntRange{lo, hi});
    if (r.hi > cap)
      throw InputError(id + " is verified by exhaustive search, limited to n <= " + std::to_string(cap));
    return r;
  };

  if (id == "moon-moser") {
    const auto nr = n_range(2, 7);
    if (nr.lo < 2) throw InputError("moon-moser needs n >= 2");
    for (int n = nr.lo; n <= nr.hi; ++n) add({{"n", n}}, profile(n, std::nullopt, 2).max_all, moon_moser(n));
  } else if (id == "hujter-tuza") {
    const auto nr = n_range(4, 7);
    if (nr.lo < 4) throw InputError("hujter-tuza needs n >= 4");
    for (int n = nr.lo; n <= nr.hi; ++n) add({{"n", n}}, profile(n, 3, 2).max_all, hujter_tuza(n));
  } else if (id == "nielsen") {
    const auto nr = n_range(2, 7);
    if (nr.lo < 1) throw InputError("nielsen needs n >= 1");
    for (int n = nr.lo; n <= nr.hi; ++n) {
      const IntRange kr = ranges.k.value_or(IntRange{2, n - 1});
      if (kr.lo < 1) throw InputError("nielsen needs k >= 1");
      for (int k = kr.lo; k <= std::min(kr.hi, n); ++k)
        add({{"n", n}, {"k", k}}, profile(n, std::nullopt, 2).max_by_k[static_cast<std::size_t>(k)], nielsen(n, k));
    }
  } else if (id == "m3n2") {
    const auto nr = n_range(2, 7);
    if (nr.lo < 2) throw InputError("m3n2 needs n >= 2");
    for (int n = nr.lo; n <= nr.hi; ++n) add({{"n", n}}, profile(n, 3, 2).max_by_k[2], m3_n2(n));
  } else if (id == "mt-n1") {
    const auto tr = ranges.t.value_or(IntRange{3, 5});
    const auto nr = n_range(2, 6);
    if (tr.lo < 3 || nr.lo < 1) throw InputError("mt-n1 needs t >= 3 and n >= 1");
    for (int t = tr.lo; t <= tr.hi; ++t)
      for (int n = nr.lo; n <= nr.hi; ++n) add({{"t", t}, {"n", n}}, profile(n, t, 2).max_by_k[1], mt_n1(t, n));
  } else {
    const auto nr = n_range(4, 5);
    if (nr.lo < 4) throw InputError("hyper-m432 needs n >= 4");
    for (int n = nr.lo; n <= nr.hi; ++n) add({{"n", n}}, profile(n, 4, 3).max_by_k[2], hyper_m432(n));
  }
  return table;
}

nlohmann::json to_json(const VerifyTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : table.rows) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [name, value] : r.params) params[name] = value;
    rows.push_back({{"params", params}, {"computed", r.computed}, {"formula", r.formula}, {"match", r.match}});
  }
  return {{"theorem", table.theorem}, {"rows", rows}, {"all_match", table.all_match()}};
}

std::string to_csv(const VerifyTable& table) {
  std::ostringstream out;
  out << "theorem,params,computed,formula,match\n";
  for (const auto& r : table.rows) {
    out << table.theorem << ',';
    for (std::size_t i = 0; i < r.params.size(); ++i)
      out << (i ? ";" : "") << r.params[i].first << '=' << r.params[i].second;
    out << ',' << r.computed << ',' << r.formula << ',' << (r.match ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace mislab
