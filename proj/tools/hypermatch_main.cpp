// hypermatch: exact matching bounds, extremal constructions, shifting,
// search, and structural analysis for k-uniform hypergraphs.
//
// Every subcommand prints a human summary by default or a JSON report with
// --json. Exit codes: 0 success, 1 a verified property failed, 2 usage or
// input errors. Reports are byte-identical across runs unless --timing asks
// for real wall times.

#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypermatch/edgelist.hpp"
#include "hypermatch/extremal.hpp"
#include "hypermatch/matching.hpp"
#include "hypermatch/search.hpp"
#include "hypermatch/shifting.hpp"
#include "hypermatch/structure.hpp"
#include "hypermatch/suites.hpp"

namespace hm = hypermatch;
using ordered_json = nlohmann::ordered_json;

namespace {

struct OutputOptions {
  bool json = false;
  bool timing = false;
};

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
  cmd->add_flag("--json", out.json, "emit a JSON report on stdout");
  cmd->add_flag("--timing", out.timing,
                "fill timing_ms with real wall time (reports are no longer byte-identical)");
}

class Timer {
 public:
  long long elapsed_ms() const {
    const auto now = std::chrono::steady_clock::now();
    return std::chrono::duration_cast<std::chrono::milliseconds>(now - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit_report(const OutputOptions& opts, const std::string& command, ordered_json params,
                 ordered_json results, const Timer& timer, const std::string& human) {
  if (opts.json) {
    ordered_json j;
    j["schema_version"] = "1.0";
    j["command"] = command;
    j["params"] = std::move(params);
    j["results"] = std::move(results);
    j["timing_ms"] = opts.timing ? timer.elapsed_ms() : 0;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << human;
    if (opts.timing) std::cout << "time: " << timer.elapsed_ms() << " ms\n";
  }
}

ordered_json json_or_null(const std::optional<int>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json matching_json(const hm::Matching& m) {
  ordered_json arr = ordered_json::array();
  for (const hm::EdgeTuple& e : m.edges) arr.push_back(e);
  return arr;
}

std::string edges_human(const hm::Matching& m) {
  std::string s;
  for (const hm::EdgeTuple& e : m.edges) {
    s += " ";
    s += hm::detail::edge_string(e);
  }
  return s;
}

// ---------------------------------------------------------------- bound ----

struct BoundConfig {
  int n = 0, k = 0, s = 0;
  OutputOptions out;
};

int run_bound(const BoundConfig& cfg) {
  Timer timer;
  const hm::BoundBreakdown b = hm::erdos_bound(cfg.n, cfg.k, cfg.s);
  std::optional<int> s0;
  if (cfg.n >= 2 * cfg.k) s0 = hm::crossover_threshold(cfg.n, cfg.k);
  std::optional<double> alpha;
  if (cfg.k >= 2) alpha = hm::crossover_ratio(cfg.k);

  ordered_json params{{"n", cfg.n}, {"k", cfg.k}, {"s", cfg.s}};
  ordered_json results;
  results["cover_value"] = b.cover_value;
  results["clique_value"] = b.clique_value;
  results["bound"] = b.bound;
  results["dominant"] = hm::to_string(b.dominant);
  results["complete_case"] = b.complete_case;
  results["s0"] = json_or_null(s0);
  results["alpha_k"] = alpha ? ordered_json(*alpha) : ordered_json(nullptr);

  std::string human;
  human += "n=" + std::to_string(cfg.n) + " k=" + std::to_string(cfg.k) +
           " s=" + std::to_string(cfg.s) + "\n";
  human += "cover value:  " + std::to_string(b.cover_value) + "\n";
  human += "clique value: " + std::to_string(b.clique_value) + "\n";
  human += "bound:        " + std::to_string(b.bound) + " (" + hm::to_string(b.dominant) + ")\n";
  human += std::string("complete case: ") + (b.complete_case ? "yes" : "no") + "\n";
  human += "s0(n,k): " + (s0 ? std::to_string(*s0) : std::string("none")) + "\n";
  if (alpha) human += "alpha_k: " + std::to_string(*alpha) + "\n";
  emit_report(cfg.out, "bound", std::move(params), std::move(results), timer, human);
  return 0;
}

// ------------------------------------------------------------ construct ----

struct ConstructConfig {
  std::string family;
  int n = 0, k = 0, s = 0;
  std::string out_file;
  OutputOptions out;
};

int run_construct(const ConstructConfig& cfg) {
  Timer timer;
  hm::Hypergraph g;
  ordered_json witness;
  if (cfg.family == "cov") {
    auto [graph, w] = hm::construct_cov(cfg.n, cfg.k, cfg.s);
    g = std::move(graph);
    witness["cover_set"] = w.cover_set;
  } else {
    auto [graph, w] = hm::construct_cl(cfg.n, cfg.k, cfg.s);
    g = std::move(graph);
    witness["clique_set"] = w.clique_set;
  }
  if (!cfg.out_file.empty()) hm::save_edgelist(g, cfg.out_file);

  ordered_json params{{"family", cfg.family},
                      {"n", cfg.n},
                      {"k", cfg.k},
                      {"s", cfg.s},
                      {"out", cfg.out_file.empty() ? ordered_json(nullptr)
                                                   : ordered_json(cfg.out_file)}};
  ordered_json results;
  results["edges"] = g.m();
  results["witness"] = std::move(witness);
  if (cfg.out_file.empty())
    results["edgelist"] = hm::serialize_edgelist(g);
  else
    results["file"] = cfg.out_file;

  std::string human = "# " + cfg.family + " n=" + std::to_string(cfg.n) +
                      " k=" + std::to_string(cfg.k) + " s=" + std::to_string(cfg.s) +
                      " edges=" + std::to_string(g.m()) + "\n";
  if (cfg.out_file.empty())
    human += hm::serialize_edgelist(g);
  else
    human += "written to " + cfg.out_file + "\n";
  emit_report(cfg.out, "construct", std::move(params), std::move(results), timer, human);
  return 0;
}

// ------------------------------------------------------------------- mu ----

struct MuConfig {
  std::string file;
  OutputOptions out;
};

int run_mu(const MuConfig& cfg) {
  Timer timer;
  const hm::Hypergraph g = hm::load_edgelist(cfg.file);
  const hm::Matching w = hm::max_matching_witness(g);

  ordered_json params{{"file", cfg.file}};
  ordered_json results;
  results["n"] = g.n();
  results["k"] = g.k();
  results["edges"] = g.m();
  results["mu"] = w.edges.size();
  results["witness"] = matching_json(w);

  std::string human;
  human += "n=" + std::to_string(g.n()) + " k=" + std::to_string(g.k()) +
           " edges=" + std::to_string(g.m()) + "\n";
  human += "mu: " + std::to_string(w.edges.size()) + "\n";
  human += "witness:" + edges_human(w) + "\n";
  emit_report(cfg.out, "mu", std::move(params), std::move(results), timer, human);
  return 0;
}

// ---------------------------------------------------------------- shift ----

struct ShiftConfig {
  std::string file;
  std::vector<int> pair;  // empty or {i, j}
  bool closure = false;
  std::string out_file;
  OutputOptions out;
};

int run_shift(const ShiftConfig& cfg) {
  if (cfg.pair.empty() == !cfg.closure)
    throw std::invalid_argument("shift: exactly one of --pair or --closure is required");
  Timer timer;
  const hm::Hypergraph g = hm::load_edgelist(cfg.file);

  hm::Hypergraph result;
  ordered_json results;
  std::string header;
  if (!cfg.pair.empty()) {
    const hm::ShiftReport r = hm::shift_ij(g, cfg.pair[0], cfg.pair[1]);
    result = r.result;
    results["moved"] = r.moved;
    header = "# shift pair=(" + std::to_string(cfg.pair[0]) + "," +
             std::to_string(cfg.pair[1]) + ") moved=" + std::to_string(r.moved) + "\n";
  } else {
    std::size_t moves = 0, sweeps = 0;
    result = hm::shift_closure(g, hm::SweepOrder::lexicographic, &moves, &sweeps);
    results["total_moves"] = moves;
    results["sweeps"] = sweeps;
    results["is_shifted"] = hm::is_shifted(result);
    header = "# shift closure moved=" + std::to_string(moves) +
             " sweeps=" + std::to_string(sweeps) + "\n";
  }
  if (!cfg.out_file.empty()) hm::save_edgelist(result, cfg.out_file);
  if (cfg.out_file.empty())
    results["edgelist"] = hm::serialize_edgelist(result);
  else
    results["file"] = cfg.out_file;

  ordered_json params;
  params["file"] = cfg.file;
  params["pair"] = cfg.pair.empty() ? ordered_json(nullptr) : ordered_json(cfg.pair);
  params["closure"] = cfg.closure;
  params["out"] =
      cfg.out_file.empty() ? ordered_json(nullptr) : ordered_json(cfg.out_file);

  std::string human = header;
  if (cfg.out_file.empty())
    human += hm::serialize_edgelist(result);
  else
    human += "written to " + cfg.out_file + "\n";
  emit_report(cfg.out, "shift", std::move(params), std::move(results), timer, human);
  return 0;
}

// --------------------------------------------------------------- search ----

struct SearchConfig {
  int n = 0, k = 0, s = 0;
  std::string engine = "both";
  bool enumerate = false;
  long long node_limit = 0;  // 0 keeps the library default
  OutputOptions out;
};

int run_search(const SearchConfig& cfg) {
  Timer timer;
  hm::SearchLimits limits;
  if (cfg.node_limit > 0) limits.node_limit = cfg.node_limit;
  const bool want_bf = cfg.engine != "shifted";
  const bool want_sh = cfg.engine != "bruteforce";

  std::optional<hm::SearchResult> bf, sh;
  std::string bf_skip, sh_skip;
  if (want_bf) {
    try {
      bf = hm::mu_search_bruteforce(cfg.n, cfg.k, cfg.s, limits);
    } catch (const std::invalid_argument& e) {
      // explicit single-engine requests surface cap violations as errors;
      // the combined default degrades to whichever engine fits its caps
      if (cfg.engine == "bruteforce") throw;
      bf_skip = e.what();
    }
  }
  if (want_sh) {
    try {
      sh = hm::mu_search_shifted(cfg.n, cfg.k, cfg.s, limits);
    } catch (const std::invalid_argument& e) {
      if (cfg.engine == "shifted") throw;
      sh_skip = e.what();
    }
  }
  if (!bf && !sh)
    throw std::invalid_argument("search: no engine can run this cell (" + bf_skip + "; " +
                                sh_skip + ")");

  const hm::BoundBreakdown bound = hm::erdos_bound(cfg.n, cfg.k, cfg.s);
  const long long value = bf ? bf->value : sh->value;
  const bool agree = !bf || !sh || bf->value == sh->value;

  std::optional<std::size_t> full_count, shifted_count;
  if (cfg.enumerate) {
    if (bf) full_count = hm::enumerate_extremal(cfg.n, cfg.k, cfg.s,
                                                hm::EnumerationMode::full, limits)
                             .size();
    if (sh) shifted_count = hm::enumerate_extremal(cfg.n, cfg.k, cfg.s,
                                                   hm::EnumerationMode::shifted, limits)
                                .size();
  }

  ordered_json params{{"n", cfg.n},       {"k", cfg.k},
                      {"s", cfg.s},       {"engine", cfg.engine},
                      {"enumerate", cfg.enumerate},
                      {"node_limit", cfg.node_limit > 0
                                         ? ordered_json(cfg.node_limit)
                                         : ordered_json(nullptr)}};
  ordered_json results;
  results["value"] = value;
  results["bound"] = bound.bound;
  results["matches_bound"] = value == static_cast<long long>(bound.bound);
  results["engines_agree"] = agree;
  ordered_json engines;
  auto engine_json = [](const hm::SearchResult& r) {
    ordered_json e;
    e["value"] = r.value;
    e["nodes"] = r.nodes_explored;
    e["complete"] = r.complete;
    e["witness"] = hm::serialize_edgelist(r.witness);
    return e;
  };
  if (bf) engines["bruteforce"] = engine_json(*bf);
  if (!bf_skip.empty()) engines["bruteforce_skipped"] = bf_skip;
  if (sh) engines["shifted"] = engine_json(*sh);
  if (!sh_skip.empty()) engines["shifted_skipped"] = sh_skip;
  results["engines"] = std::move(engines);
  if (full_count) results["extremal_count"] = *full_count;
  if (shifted_count) results["shifted_extremal_count"] = *shifted_count;

  std::string human;
  human += "n=" + std::to_string(cfg.n) + " k=" + std::to_string(cfg.k) +
           " s=" + std::to_string(cfg.s) + "\n";
  human += "value: " + std::to_string(value) + " (bound " + std::to_string(bound.bound) +
           (value == static_cast<long long>(bound.bound) ? ", matches" : ", MISMATCH") + ")\n";
  if (bf)
    human += "bruteforce: value=" + std::to_string(bf->value) +
             " nodes=" + std::to_string(bf->nodes_explored) +
             (bf->complete ? "" : " (budget exhausted)") + "\n";
  if (!bf_skip.empty()) human += "bruteforce skipped: " + bf_skip + "\n";
  if (sh)
    human += "shifted: value=" + std::to_string(sh->value) +
             " nodes=" + std::to_string(sh->nodes_explored) +
             (sh->complete ? "" : " (budget exhausted)") + "\n";
  if (!sh_skip.empty()) human += "shifted skipped: " + sh_skip + "\n";
  if (full_count) human += "extremal count: " + std::to_string(*full_count) + "\n";
  if (shifted_count)
    human += "shifted extremal count: " + std::to_string(*shifted_count) + "\n";
  emit_report(cfg.out, "search", std::move(params), std::move(results), timer, human);
  return 0;
}

// ------------------------------------------------------------- classify ----

struct ClassifyConfig {
  std::string file;
  int s = 0;
  double eps = -1;  // negative means not requested
  OutputOptions out;
};

int run_classify(const ClassifyConfig& cfg) {
  Timer timer;
  const hm::Hypergraph g = hm::load_edgelist(cfg.file);
  const hm::ExactMembership exact = hm::classify_exact(g, cfg.s);

  ordered_json params{{"file", cfg.file},
                      {"s", cfg.s},
                      {"eps", cfg.eps >= 0 ? ordered_json(cfg.eps) : ordered_json(nullptr)}};
  ordered_json results;
  results["n"] = g.n();
  results["k"] = g.k();
  results["edges"] = g.m();
  results["mu"] = cfg.s;
  ordered_json ex;
  ex["cover"] = exact.cover ? ordered_json{{"cover_set", exact.cover->cover_set}}
                            : ordered_json(nullptr);
  ex["clique"] = exact.clique ? ordered_json{{"clique_set", exact.clique->clique_set}}
                              : ordered_json(nullptr);
  results["exact"] = std::move(ex);

  std::string human;
  human += "n=" + std::to_string(g.n()) + " k=" + std::to_string(g.k()) +
           " edges=" + std::to_string(g.m()) + " mu=" + std::to_string(cfg.s) + "\n";
  human += std::string("exact cover member: ") + (exact.cover ? "yes" : "no") + "\n";
  human += std::string("exact clique member: ") + (exact.clique ? "yes" : "no") + "\n";

  if (cfg.eps >= 0) {
    const hm::EpsMembership eps = hm::classify_eps(g, cfg.s, cfg.eps);
    ordered_json ej;
    if (eps.cover_eps) {
      ej["cover"] = ordered_json{{"cover_set", eps.cover_eps->cover_set},
                                 {"covered", eps.cover_eps->covered},
                                 {"uncovered", eps.cover_eps->uncovered}};
    } else {
      ej["cover"] = nullptr;
    }
    ej["clique"] = eps.clique_eps
                       ? ordered_json{{"clique_set", eps.clique_eps->clique_set}}
                       : ordered_json(nullptr);
    results["eps"] = std::move(ej);
    human += std::string("eps cover member: ") + (eps.cover_eps ? "yes" : "no") + "\n";
    human += std::string("eps clique member: ") + (eps.clique_eps ? "yes" : "no") + "\n";
  }
  emit_report(cfg.out, "classify", std::move(params), std::move(results), timer, human);
  return 0;
}

// -------------------------------------------------------------- analyze ----

struct AnalyzeConfig {
  std::string file;
  long long c1 = -1, c2 = -1;
  OutputOptions out;
};

int run_analyze(const AnalyzeConfig& cfg) {
  Timer timer;
  const hm::Hypergraph g = hm::load_edgelist(cfg.file);
  const hm::AnalysisReport rep = hm::analyze(g, cfg.c1, cfg.c2);
  if (!rep.frame.input_shifted)
    std::cerr << "warning: input graph is not shifted\n";

  ordered_json params{{"file", cfg.file},
                      {"c1", cfg.c1 >= 0 ? ordered_json(cfg.c1) : ordered_json(nullptr)},
                      {"c2", cfg.c2 >= 0 ? ordered_json(cfg.c2) : ordered_json(nullptr)}};
  ordered_json results;
  ordered_json frame;
  frame["s"] = rep.frame.s();
  frame["matching"] = matching_json(rep.frame.m);
  frame["free_vertices"] = rep.frame.v_prime.size();
  frame["input_shifted"] = rep.frame.input_shifted;
  results["frame"] = std::move(frame);
  results["thresholds"] = ordered_json{{"c1", rep.aux.c1}, {"c2", rep.aux.c2}};
  results["f1_size"] = rep.aux.f1.size();
  results["f2_size"] = rep.aux.f2.size();
  results["f3_size"] = rep.aux.f3.size();
  results["untraceable"] = rep.untraceable;
  results["untraceable_bound"] = rep.untraceable_bound;
  ordered_json hist = ordered_json::array();
  for (const auto& [key, count] : rep.profile_histogram)
    hist.push_back(ordered_json{{"f1", key[0]}, {"f2", key[1]}, {"f3", key[2]},
                                {"count", count}});
  results["triple_histogram"] = std::move(hist);
  results["good_count"] = rep.good_count;
  results["bad_count"] = rep.bad_count;
  ordered_json checks;
  checks["untraceable_within_bound"] = rep.untraceable_within_bound;
  checks["profile_table"] = rep.all_profiles_ok;
  checks["attachment"] = rep.all_attachments_ok;
  checks["bad_triples_confined"] = rep.bad_check.ok();
  checks["double_counting"] = rep.double_count_ok;
  checks["edge_bound"] = rep.edge_bound.holds;
  results["checks"] = std::move(checks);
  if (rep.lp) {
    ordered_json lp;
    lp["alpha"] = rep.lp->alpha;
    lp["argmax"] = rep.lp->argmax;
    lp["a0"] = rep.lp->a0;
    lp["x_cap"] = rep.lp->x_cap;
    results["lp"] = std::move(lp);
  } else {
    results["lp"] = nullptr;
  }
  results["edge_bound"] = ordered_json{{"edges", rep.edge_bound.edges},
                                       {"rhs", rep.edge_bound.rhs},
                                       {"holds", rep.edge_bound.holds}};

  std::string human;
  human += "n=" + std::to_string(g.n()) + " k=" + std::to_string(g.k()) +
           " edges=" + std::to_string(g.m()) + "\n";
  human += "matching size s: " + std::to_string(rep.frame.s()) +
           (rep.frame.input_shifted ? "" : "  (input not shifted)") + "\n";
  human += "free vertices: " + std::to_string(rep.frame.v_prime.size()) + "\n";
  human += "thresholds: c1=" + std::to_string(rep.aux.c1) +
           " c2=" + std::to_string(rep.aux.c2) + "\n";
  human += "attachment sizes: |F1|=" + std::to_string(rep.aux.f1.size()) +
           " |F2|=" + std::to_string(rep.aux.f2.size()) +
           " |F3|=" + std::to_string(rep.aux.f3.size()) + "\n";
  human += "untraceable edges: " + std::to_string(rep.untraceable) + " (bound " +
           std::to_string(rep.untraceable_bound) + ")\n";
  human += "triples: " + std::to_string(rep.good_count) + " good, " +
           std::to_string(rep.bad_count) + " bad\n";
  human += "profile histogram (f1,f2,f3 x count):";
  for (const auto& [key, count] : rep.profile_histogram)
    human += " (" + std::to_string(key[0]) + "," + std::to_string(key[1]) + "," +
             std::to_string(key[2]) + ")x" + std::to_string(count);
  human += "\n";
  human += std::string("checks: profile_table=") + (rep.all_profiles_ok ? "ok" : "FAIL") +
           " attachment=" + (rep.all_attachments_ok ? "ok" : "FAIL") +
           " bad_confined=" + (rep.bad_check.ok() ? "ok" : "FAIL") +
           " double_counting=" + (rep.double_count_ok ? "ok" : "FAIL") + "\n";
  if (rep.lp) {
    human += "lp alpha:";
    for (double a : rep.lp->alpha) human += " " + std::to_string(a);
    human += "  argmax:";
    for (int i : rep.lp->argmax) human += " " + std::to_string(i);
    human += "\n";
  }
  human += "edge bound: " + std::to_string(rep.edge_bound.edges) + " <= " +
           std::to_string(rep.edge_bound.rhs) +
           (rep.edge_bound.holds ? " holds" : " FAILS") + "\n";
  emit_report(cfg.out, "analyze", std::move(params), std::move(results), timer, human);
  return 0;
}

// --------------------------------------------------------------- verify ----

struct VerifyConfig {
  std::string suite;
  int max_n = -1;  // negative selects the per-suite default
  OutputOptions out;
};

int run_verify(const VerifyConfig& cfg) {
  Timer timer;
  hm::SuiteResult res;
  if (cfg.suite == "fact1") {
    res = hm::run_fact1_suite(cfg.max_n < 0 ? 7 : cfg.max_n);
  } else if (cfg.suite == "shift") {
    res = hm::run_shift_suite();
  } else if (cfg.suite == "conjecture") {
    res = hm::run_conjecture_suite(cfg.max_n < 0 ? 9 : cfg.max_n);
  } else {
    res = hm::run_claims_suite(cfg.max_n < 0 ? 9 : cfg.max_n);
  }

  std::string failing_file;
  if (!res.pass() && res.failing_instance) {
    failing_file = "hypermatch_failing_" + cfg.suite + ".edgelist";
    hm::save_edgelist(*res.failing_instance, failing_file);
  }

  ordered_json params{{"suite", cfg.suite},
                      {"max_n", cfg.max_n >= 0 ? ordered_json(cfg.max_n) : ordered_json(nullptr)}};
  ordered_json results;
  results["pass"] = res.pass();
  ordered_json cases = ordered_json::array();
  for (const hm::SuiteCase& c : res.cases)
    cases.push_back(ordered_json{{"name", c.name},
                                 {"pass", c.pass},
                                 {"checked", c.checked},
                                 {"detail", c.detail}});
  results["cases"] = std::move(cases);
  results["failing_file"] =
      failing_file.empty() ? ordered_json(nullptr) : ordered_json(failing_file);

  std::string human;
  for (const hm::SuiteCase& c : res.cases)
    human += std::string("[") + (c.pass ? "pass" : "FAIL") + "] " + c.name + " (" +
             std::to_string(c.checked) + " checked) " + c.detail + "\n";
  human += std::string("suite ") + cfg.suite + ": " + (res.pass() ? "pass" : "FAIL") + "\n";
  if (!failing_file.empty())
    human += "failing instance written to " + failing_file + "\n";
  emit_report(cfg.out, "verify", std::move(params), std::move(results), timer, human);
  return res.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact matching bounds and structure for k-uniform hypergraphs"};
  app.require_subcommand(1);

  BoundConfig bound_cfg;
  CLI::App* bound_cmd = app.add_subcommand("bound", "closed-form matching bound at (n, k, s)");
  bound_cmd->add_option("n", bound_cfg.n, "number of vertices")->required();
  bound_cmd->add_option("k", bound_cfg.k, "edge size")->required();
  bound_cmd->add_option("s", bound_cfg.s, "target matching number")->required();
  add_output_flags(bound_cmd, bound_cfg.out);

  ConstructConfig construct_cfg;
  CLI::App* construct_cmd =
      app.add_subcommand("construct", "build an extremal family and print or save it");
  construct_cmd->add_option("family", construct_cfg.family, "cov or cl")
      ->required()
      ->check(CLI::IsMember({"cov", "cl"}));
  construct_cmd->add_option("n", construct_cfg.n, "number of vertices")->required();
  construct_cmd->add_option("k", construct_cfg.k, "edge size")->required();
  construct_cmd->add_option("s", construct_cfg.s, "family parameter")->required();
  construct_cmd->add_option("-o,--out", construct_cfg.out_file, "write the edge list here");
  add_output_flags(construct_cmd, construct_cfg.out);

  MuConfig mu_cfg;
  CLI::App* mu_cmd = app.add_subcommand("mu", "exact matching number of an edge list file");
  mu_cmd->add_option("file", mu_cfg.file, "edge list file")->required();
  add_output_flags(mu_cmd, mu_cfg.out);

  ShiftConfig shift_cfg;
  CLI::App* shift_cmd = app.add_subcommand("shift", "apply one (i,j)-shift or the full closure");
  shift_cmd->add_option("file", shift_cfg.file, "edge list file")->required();
  CLI::Option* pair_opt =
      shift_cmd->add_option("--pair", shift_cfg.pair, "apply the single (I,J)-shift")
          ->expected(2);
  shift_cmd->add_flag("--closure", shift_cfg.closure, "iterate all shifts to the fixpoint")
      ->excludes(pair_opt);
  shift_cmd->add_option("-o,--out", shift_cfg.out_file, "write the result here");
  add_output_flags(shift_cmd, shift_cfg.out);

  SearchConfig search_cfg;
  CLI::App* search_cmd =
      app.add_subcommand("search", "exact extremal search at (n, k, s) with optional enumeration");
  search_cmd->add_option("n", search_cfg.n, "number of vertices")->required();
  search_cmd->add_option("k", search_cfg.k, "edge size")->required();
  search_cmd->add_option("s", search_cfg.s, "target matching number")->required();
  search_cmd->add_option("--engine", search_cfg.engine, "bruteforce, shifted, or both")
      ->check(CLI::IsMember({"bruteforce", "shifted", "both"}));
  search_cmd->add_flag("--enumerate", search_cfg.enumerate, "count all extremal families");
  search_cmd->add_option("--node-limit", search_cfg.node_limit, "search node budget")
      ->check(CLI::PositiveNumber);
  add_output_flags(search_cmd, search_cfg.out);

  ClassifyConfig classify_cfg;
  CLI::App* classify_cmd =
      app.add_subcommand("classify", "exact and approximate extremal family membership");
  classify_cmd->add_option("file", classify_cfg.file, "edge list file")->required();
  classify_cmd->add_option("--s", classify_cfg.s, "matching number of the input")->required();
  classify_cmd->add_option("--eps", classify_cfg.eps, "also run the eps-approximate test")
      ->check(CLI::Range(1e-9, 1.0));
  add_output_flags(classify_cmd, classify_cfg.out);

  AnalyzeConfig analyze_cfg;
  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "matching frame, attachment structure, and triple statistics");
  analyze_cmd->add_option("file", analyze_cfg.file, "edge list file")->required();
  analyze_cmd->add_option("--c1", analyze_cfg.c1, "degree threshold for F1 (default 20n)")
      ->check(CLI::NonNegativeNumber);
  analyze_cmd->add_option("--c2", analyze_cfg.c2, "pair degree threshold for F2 (default 20)")
      ->check(CLI::NonNegativeNumber);
  add_output_flags(analyze_cmd, analyze_cfg.out);

  VerifyConfig verify_cfg;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run a property suite and report per case");
  verify_cmd->add_option("--suite", verify_cfg.suite, "fact1, shift, conjecture, or claims")
      ->required()
      ->check(CLI::IsMember({"fact1", "shift", "conjecture", "claims"}));
  verify_cmd->add_option("--max-n", verify_cfg.max_n, "cap the exhaustive range")
      ->check(CLI::PositiveNumber);
  add_output_flags(verify_cmd, verify_cfg.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (bound_cmd->parsed()) return run_bound(bound_cfg);
    if (construct_cmd->parsed()) return run_construct(construct_cfg);
    if (mu_cmd->parsed()) return run_mu(mu_cfg);
    if (shift_cmd->parsed()) return run_shift(shift_cfg);
    if (search_cmd->parsed()) return run_search(search_cfg);
    if (classify_cmd->parsed()) return run_classify(classify_cfg);
    if (analyze_cmd->parsed()) return run_analyze(analyze_cfg);
    if (verify_cmd->parsed()) return run_verify(verify_cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
