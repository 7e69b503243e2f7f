#include "mislab/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "mislab/canonical.hpp"
#include "mislab/constructions.hpp"
#include "mislab/errors.hpp"
#include "mislab/extremal_search.hpp"
#include "mislab/io.hpp"
#include "mislab/mis_engine.hpp"
#include "mislab/theorems.hpp"

#ifndef MISLAB_VERSION
#define MISLAB_VERSION "dev"
#endif

namespace mislab {

namespace {

using nlohmann::json;

const std::vector<std::string> kConstructions = {"comatching", "gadget",     "tight-cycle", "blowup",
                                                 "theorem-a",  "theorem-b",  "hyper",       "star-hyper",
                                                 "dominating", "c4-leaves"};

struct Globals {
  std::uint64_t seed = 0;
  std::optional<int> threads;
  std::string format;
  std::string out;
};

struct ConstructArgs {
  std::string name;
  std::optional<int> n, k, t, m, r;
  std::string kind = "trivial";
  std::string spec;
  std::string parts_out;
};

struct CountArgs {
  std::string graph, hypergraph, parts;
  std::optional<int> k, forbid;
  bool transversal = false;
};

struct SearchArgs {
  int n = 0;
  std::optional<int> k, t;
  int r = 2;
  bool witnesses = false;
  int witness_cap = kDefaultWitnessCap;
  bool timing = false;
};

struct VerifyArgs {
  std::string theorem;
  std::string n, k, t;
};

struct ReduceArgs {
  std::string graph;
  int k = 0;
  int retries = 100;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << text;
}

int resolve_threads(const std::optional<int>& flag) {
  if (flag) {
    if (*flag < 1) throw InputError("--threads must be positive");
    return *flag;
  }
  if (const char* env = std::getenv("MIS_LAB_THREADS"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const int v = std::stoi(env, &used);
      if (used == std::string(env).size() && v >= 1) return v;
    } catch (const std::exception&) {
    }
    throw InputError(std::string("MIS_LAB_THREADS must be a positive integer, got '") + env + "'");
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

// The options a subcommand actually received, in declaration order.
json options_json(const CLI::App& sub) {
  json j = json::object();
  for (const CLI::Option* opt : sub.get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help") continue;
    const auto& res = opt->results();
    std::string key = opt->get_name();
    key.erase(0, key.find_first_not_of('-'));
    if (opt->get_expected_min() == 0)
      j[key] = true;
    else if (res.size() == 1)
      j[key] = res.front();
    else
      j[key] = res;
  }
  return j;
}

class Cli {
 public:
  Cli(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args) {
    CLI::App app{"Maximal independent set laboratory"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(MISLAB_VERSION));
    app.add_option("--seed", g_.seed, "RNG seed (recorded in reports)");
    app.add_option("--threads", g_.threads, "worker threads (default: MIS_LAB_THREADS, then all cores)");
    app.add_option("--format", g_.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "graph6", "text"}));
    app.add_option("--out", g_.out, "write the artifact or report here instead of stdout");

    auto* construct = app.add_subcommand("construct", "build a named construction");
    construct->add_option("name", c_.name, "construction")->required()->check(CLI::IsMember(kConstructions));
    construct->add_option("--n", c_.n);
    construct->add_option("--k", c_.k);
    construct->add_option("--t", c_.t);
    construct->add_option("--m", c_.m);
    construct->add_option("--r", c_.r);
    construct->add_option("--kind", c_.kind, "gadget kind")->check(CLI::IsMember({"comatching", "trivial", "rs"}));
    construct->add_option("--spec", c_.spec, "blowup spec JSON file");
    construct->add_option("--parts-out", c_.parts_out, "write the vertex partition as JSON");

    auto* count = app.add_subcommand("count", "count maximal independent sets");
    count->add_option("--graph", q_.graph, "graph6 file");
    count->add_option("--hypergraph", q_.hypergraph, "hypergraph JSON file");
    count->add_option("--k", q_.k, "only sets of this size");
    count->add_flag("--transversal", q_.transversal, "one vertex per part (needs --parts)");
    count->add_option("--parts", q_.parts, "partition JSON file");
    count->add_option("--forbid-clique", q_.forbid, "fail with exit 3 if a clique of this size exists");

    auto* search = app.add_subcommand("search", "exhaustive extremal search");
    search->add_option("--n", s_.n)->required();
    search->add_option("--k", s_.k);
    search->add_option("--t", s_.t);
    search->add_option("--r", s_.r);
    search->add_flag("--witnesses", s_.witnesses, "collect extremal graphs up to isomorphism");
    search->add_option("--witness-cap", s_.witness_cap);
    search->add_flag("--timing", s_.timing, "include elapsed time (breaks byte-identical reports)");

    auto* verify = app.add_subcommand("verify", "check a closed form against exhaustive search");
    verify->add_option("--theorem", v_.theorem)->required()->check(CLI::IsMember(theorem_ids()));
    verify->add_option("--n", v_.n, "range a..b");
    verify->add_option("--k", v_.k, "range a..b");
    verify->add_option("--t", v_.t, "range a..b");

    auto* reduce = app.add_subcommand("reduce", "random transversal reduction of a triangle-free graph");
    reduce->add_option("--graph", r_.graph, "graph6 file")->required();
    reduce->add_option("--k", r_.k)->required();
    reduce->add_option("--retries", r_.retries);

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out_, err_);
      return code == 0 ? kExitOk : kExitInput;
    }

    try {
      threads_ = resolve_threads(g_.threads);
      const CLI::App* sub = app.get_subcommands().front();
      config_ = {{"command", sub->get_name()}, {"options", options_json(*sub)}, {"seed", g_.seed},
                 {"threads", threads_}};
      if (sub == construct) return do_construct();
      if (sub == count) return do_count();
      if (sub == search) return do_search();
      if (sub == verify) return do_verify();
      return do_reduce();
    } catch (const InputError& e) {
      err_ << "error: " << e.what() << '\n';
      return kExitInput;
    } catch (const ParseError& e) {
      err_ << "parse error: " << e.what() << '\n';
      return kExitInput;
    } catch (const DomainError& e) {
      err_ << "error: " << e.what() << '\n';
      return kExitInput;
    } catch (const std::invalid_argument& e) {
      err_ << "error: " << e.what() << '\n';
      return kExitInput;
    }
  }

 private:
  [[nodiscard]] std::string format_or(const std::string& fallback) const {
    return g_.format.empty() ? fallback : g_.format;
  }

  void emit(const std::string& text) {
    if (g_.out.empty())
      out_ << text;
    else
      write_file(g_.out, text);
  }

  // Human summary: beside the artifact when it goes to a file, else on err.
  std::ostream& summary() { return g_.out.empty() ? err_ : out_; }

  json report_header() const {
    json j;
    j["version"] = MISLAB_VERSION;
    j["config"] = config_;
    return j;
  }

  static int need(const std::optional<int>& v, const char* flag, const std::string& name) {
    if (!v) throw InputError("construct " + name + " needs " + flag);
    return *v;
  }

  int do_construct() {
    const std::string& name = c_.name;
    std::optional<Graph> graph;
    std::vector<VertexSet> parts;
    std::optional<Hypergraph> hyper;
    int check_t = 0;

    auto take = [&](const PartitionedGraph& pg) {
      graph = pg.graph();
      parts = pg.parts();
    };
    if (name == "comatching") {
      take(comatching(need(c_.n, "--n", name)));
      check_t = 3;
    } else if (name == "gadget") {
      const int r = need(c_.r, "--r", name);
      take(edge_gadget(gadget_kind_from_string(c_.kind), r, need(c_.m, "--m", name)));
      check_t = r + 1;
    } else if (name == "tight-cycle") {
      const int r = need(c_.r, "--r", name);
      hyper = tight_cycle(r, need(c_.k, "--k", name));
      check_t = r + 1;
    } else if (name == "blowup") {
      if (c_.spec.empty()) throw InputError("construct blowup needs --spec");
      const BlowupSpec spec = blowup_spec_from_json(parse_json(read_file(c_.spec)));
      take(blowup(spec));
      check_t = spec.templ.uniformity().value_or(1) + 1;
    } else if (name == "theorem-a") {
      const int t = need(c_.t, "--t", name);
      graph = theorem_a_construction(need(c_.k, "--k", name), t, need(c_.m, "--m", name));
      check_t = t;
    } else if (name == "theorem-b") {
      const int t = need(c_.t, "--t", name);
      take(theorem_b_construction(need(c_.k, "--k", name), t, need(c_.m, "--m", name),
                                  gadget_kind_from_string(c_.kind)));
      check_t = t;
    } else if (name == "hyper") {
      const int r = need(c_.r, "--r", name);
      hyper = hypergraph_construction(r, need(c_.k, "--k", name), need(c_.n, "--n", name));
      check_t = r + 1;
    } else if (name == "star-hyper") {
      hyper = star_hypergraph(need(c_.n, "--n", name));
      check_t = 4;
    } else if (name == "dominating") {
      const int t = need(c_.t, "--t", name);
      graph = dominating_clique_graph(t, need(c_.n, "--n", name));
      check_t = t;
    } else {
      graph = c4_leaves_graph();
      check_t = 3;
    }

    if (hyper) {
      const bool free = !has_hyperclique(*hyper, check_t);
      const std::string fmt = format_or("json");
      if (fmt == "json") {
        emit(to_json(*hyper).dump() + "\n");
      } else if (fmt == "text") {
        std::ostringstream s;
        for (const auto& e : hyper->edges()) {
          for (std::size_t i = 0; i < e.size(); ++i) s << (i ? " " : "") << e[i];
          s << '\n';
        }
        emit(s.str());
      } else {
        throw InputError("hypergraphs are written as json or text");
      }
      summary() << name << ": n=" << hyper->order() << " edges=" << hyper->edge_count() << " K" << check_t
                << "-free=" << (free ? "yes" : "no") << '\n';
      return kExitOk;
    }

    const bool free = !has_clique(*graph, check_t);
    if (!c_.parts_out.empty()) {
      if (parts.empty()) throw InputError("construct " + name + " has no vertex partition");
      write_file(c_.parts_out, parts_to_json(parts).dump() + "\n");
    }
    const std::string fmt = format_or("graph6");
    if (fmt == "graph6") {
      emit(graph6_encode(*graph) + "\n");
    } else if (fmt == "json") {
      json j = report_header();
      j["graph6"] = graph6_encode(*graph);
      j["n"] = graph->order();
      j["edges"] = graph->edge_count();
      if (!parts.empty()) j["parts"] = parts_to_json(parts)["parts"];
      j["clique_check"] = {{"t", check_t}, {"free", free}};
      emit(j.dump(2) + "\n");
    } else if (fmt == "text") {
      std::ostringstream s;
      for (const auto& [u, v] : graph->edges()) s << u << ' ' << v << '\n';
      emit(s.str());
    } else {
      throw InputError("graphs are written as graph6, json or text");
    }
    summary() << name << ": n=" << graph->order() << " edges=" << graph->edge_count() << " K" << check_t
              << "-free=" << (free ? "yes" : "no") << '\n';
    return kExitOk;
  }

  int do_count() {
    if (q_.graph.empty() == q_.hypergraph.empty()) throw InputError("count needs exactly one of --graph, --hypergraph");
    Count result = 0;
    int n = 0;
    std::size_t edges = 0;
    if (!q_.hypergraph.empty()) {
      if (q_.transversal) throw InputError("--transversal applies to graphs only");
      const Hypergraph h = hypergraph_from_json(parse_json(read_file(q_.hypergraph)));
      n = h.order();
      edges = static_cast<std::size_t>(h.edge_count());
      if (q_.forbid && has_hyperclique(h, *q_.forbid)) {
        err_ << "violation: hypergraph contains a complete " << *q_.forbid << "-vertex subhypergraph\n";
        return kExitViolation;
      }
      if (q_.k) {
        result = hypergraph_count_k_mis(h, *q_.k);
      } else {
        for (Count c : hypergraph_mis_size_profile(h)) result += c;
      }
    } else {
      const Graph g = graph6_decode(read_file(q_.graph));
      n = g.order();
      edges = static_cast<std::size_t>(g.edge_count());
      if (q_.forbid && has_clique(g, *q_.forbid)) {
        err_ << "violation: graph contains K" << *q_.forbid << '\n';
        return kExitViolation;
      }
      if (q_.transversal) {
        if (q_.parts.empty()) throw InputError("--transversal needs --parts");
        const PartitionedGraph pg(g, parts_from_json(parse_json(read_file(q_.parts))));
        result = run_query(pg, MisQuery{q_.k, true, std::nullopt});
      } else {
        result = run_query(g, MisQuery{q_.k, false, std::nullopt});
      }
    }
    const std::string fmt = format_or("text");
    if (fmt == "text") {
      emit(std::to_string(result) + "\n");
    } else if (fmt == "json") {
      json j = report_header();
      j["n"] = n;
      j["edges"] = edges;
      j["k"] = q_.k ? json(*q_.k) : json(nullptr);
      j["transversal"] = q_.transversal;
      j["count"] = result;
      emit(j.dump(2) + "\n");
    } else if (fmt == "csv") {
      emit("n,edges,k,transversal,count\n" + std::to_string(n) + "," + std::to_string(edges) + "," +
           (q_.k ? std::to_string(*q_.k) : "") + "," + (q_.transversal ? "true" : "false") + "," +
           std::to_string(result) + "\n");
    } else {
      throw InputError("count reports are text, json or csv");
    }
    return kExitOk;
  }

  int do_search() {
    SearchSpec spec;
    spec.n = s_.n;
    spec.k = s_.k;
    spec.t = s_.t;
    spec.r = s_.r;
    spec.collect_witnesses = s_.witnesses;
    spec.witness_cap = s_.witness_cap;
    spec.threads = threads_;
    const SearchReport report = exhaustive_m(spec);
    const std::string fmt = format_or("json");
    if (fmt == "json") {
      json j = report_header();
      j["report"] = to_json(report, s_.timing);
      emit(j.dump(2) + "\n");
    } else if (fmt == "csv") {
      emit(to_csv(report));
    } else if (fmt == "graph6") {
      if (spec.r != 2) throw InputError("graph6 output needs r = 2");
      if (!spec.collect_witnesses) throw InputError("graph6 output lists witnesses; add --witnesses");
      std::string s;
      for (const auto& w : report.witnesses) s += w + "\n";
      emit(s);
    } else {
      std::ostringstream s;
      s << "value " << report.value << '\n';
      if (report.formula_value) s << "formula " << *report.formula_value << '\n';
      s << "scanned " << report.graphs_scanned << '\n';
      for (const auto& w : report.witnesses) s << "witness " << w << '\n';
      if (report.witnesses_truncated) s << "witnesses truncated\n";
      emit(s.str());
    }
    if (report.formula_value && *report.formula_value != report.value) return kExitMismatch;
    return kExitOk;
  }

  int do_verify() {
    VerifyRanges ranges;
    if (!v_.n.empty()) ranges.n = parse_range(v_.n);
    if (!v_.k.empty()) ranges.k = parse_range(v_.k);
    if (!v_.t.empty()) ranges.t = parse_range(v_.t);
    const VerifyTable table = verify_theorem(v_.theorem, ranges, threads_);
    const std::string fmt = format_or("csv");
    if (fmt == "csv") {
      emit(to_csv(table));
    } else if (fmt == "json") {
      json j = report_header();
      j["table"] = to_json(table);
      emit(j.dump(2) + "\n");
    } else if (fmt == "text") {
      std::ostringstream s;
      for (const auto& r : table.rows) {
        for (const auto& [p, v] : r.params) s << p << '=' << v << ' ';
        s << "computed=" << r.computed << " formula=" << r.formula << (r.match ? " ok" : " MISMATCH") << '\n';
      }
      emit(s.str());
    } else {
      throw InputError("verify tables are csv, json or text");
    }
    if (!table.all_match()) {
      err_ << "verification mismatch for " << v_.theorem << '\n';
      return kExitMismatch;
    }
    return kExitOk;
  }

  int do_reduce() {
    const Graph g = graph6_decode(read_file(r_.graph));
    const ReductionResult res = transversal_reduction(g, r_.k, r_.retries, g_.seed);
    const std::string fmt = format_or("json");
    if (fmt != "json") throw InputError("reduce reports are json");
    json j = report_header();
    j["graph6"] = graph6_encode(res.subgraph.graph());
    j["parts"] = parts_to_json(res.subgraph.parts())["parts"];
    j["original"] = res.original;
    j["composition"] = res.composition;
    j["composition_count"] = res.composition_count;
    j["achieved_T"] = res.achieved_T;
    j["source_m"] = res.source_m;
    j["retries_used"] = res.retries_used;
    j["seed"] = res.seed;
    j["bound_met"] = res.bound_met;
    emit(j.dump(2) + "\n");
    return kExitOk;
  }

  static BlowupSpec blowup_spec_from_json(const json& j) {
    try {
      BlowupSpec spec{hypergraph_from_json(j.at("template")), j.at("sizes").get<std::vector<int>>(), {}};
      const auto& gadget = j.at("gadget");
      if (gadget.is_string()) {
        spec.gadgets.assign(spec.sizes.size(), gadget_kind_from_string(gadget.get<std::string>()));
      } else {
        for (const auto& s : gadget) spec.gadgets.push_back(gadget_kind_from_string(s.get<std::string>()));
      }
      return spec;
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad blowup spec: ") + e.what());
    }
  }

  std::ostream& out_;
  std::ostream& err_;
  Globals g_;
  ConstructArgs c_;
  CountArgs q_;
  SearchArgs s_;
  VerifyArgs v_;
  ReduceArgs r_;
  int threads_ = 1;
  json config_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return Cli(out, err).run(args);
}

}  // namespace mislab
