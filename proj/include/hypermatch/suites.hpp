#ifndef HYPERMATCH_SUITES_HPP_
#define HYPERMATCH_SUITES_HPP_

// Property suites behind the verify command.  Each suite runs a fixed,
// deterministic battery and reports one named case per property; a failing
// case carries a human-readable detail line and, where one exists, the first
// offending graph for reproduction.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hypermatch/extremal.hpp"
#include "hypermatch/hypergraph.hpp"
#include "hypermatch/matching.hpp"
#include "hypermatch/parallel.hpp"
#include "hypermatch/search.hpp"
#include "hypermatch/shifting.hpp"
#include "hypermatch/structure.hpp"

namespace hypermatch {

struct SuiteCase {
  std::string name;
  bool pass = true;
  long long checked = 0;  // items this case examined
  std::string detail;     // counts on success, first counterexample on failure
};

struct SuiteResult {
  std::string suite;
  std::vector<SuiteCase> cases;
  std::optional<Hypergraph> failing_instance;  // first failing graph, if any case fails
  std::string failing_note;

  bool pass() const {
    return std::all_of(cases.begin(), cases.end(), [](const SuiteCase& c) { return c.pass; });
  }
  long long total_checked() const {
    long long t = 0;
    for (const SuiteCase& c : cases) t += c.checked;
    return t;
  }
};

namespace detail {

inline bool same_graph(const Hypergraph& a, const Hypergraph& b) {
  if (a.n() != b.n() || a.k() != b.k() || a.m() != b.m()) return false;
  for (std::size_t i = 0; i < a.m(); ++i) {
    const auto ea = a.edge(i);
    const auto eb = b.edge(i);
    if (!std::equal(ea.begin(), ea.end(), eb.begin())) return false;
  }
  return true;
}

inline std::string edge_string(std::span<const Vertex> e) {
  std::string s = "{";
  for (std::size_t t = 0; t < e.size(); ++t) {
    if (t) s += ",";
    s += std::to_string(e[t]);
  }
  return s + "}";
}

// graph on [n] from an inclusion mask over the colex-ordered k-sets
inline Hypergraph graph_from_kset_mask(int n, int k, std::uint64_t mask) {
  std::vector<Vertex> flat;
  std::uint64_t bit = 1;
  for_each_k_subset(n, k, [&](std::span<const int> a) {
    if (mask & bit) flat.insert(flat.end(), a.begin(), a.end());
    bit <<= 1;
  });
  return Hypergraph::from_colex_sorted(n, k, flat);
}

}  // namespace detail

// Exhaustive dichotomy check: every 2-coloring of the pairs from {1..n}
// yields either a monochrome certificate (exactly the two constant
// colorings) or a disjoint bichromatic pair, validated against the coloring.
inline SuiteResult run_fact1_suite(int max_n = 7) {
  SuiteResult res;
  res.suite = "fact1";
  for (int n = 5; n <= max_n; ++n) {
    const int r = static_cast<int>(binom(static_cast<std::uint64_t>(n), 2));
    const std::uint64_t total = std::uint64_t{1} << r;
    const std::uint64_t full = total - 1;
    std::vector<std::vector<int>> subs;
    for_each_k_subset(n, 2, [&](std::span<const int> a) {
      subs.emplace_back(a.begin(), a.end());
    });
    const int workers = worker_count();
    std::vector<long long> bad_count(static_cast<std::size_t>(workers), 0);
    std::vector<std::int64_t> first_bad(static_cast<std::size_t>(workers), -1);
    parallel_for(
        static_cast<std::size_t>(workers),
        [&](std::size_t w) {
          std::vector<Color> colors(static_cast<std::size_t>(r));
          const std::uint64_t lo = total * w / static_cast<std::uint64_t>(workers);
          const std::uint64_t hi = total * (w + 1) / static_cast<std::uint64_t>(workers);
          for (std::uint64_t mask = lo; mask < hi; ++mask) {
            for (int b = 0; b < r; ++b)
              colors[static_cast<std::size_t>(b)] =
                  ((mask >> b) & 1) ? Color::red : Color::blue;
            const ColoringWitness wit = two_coloring_witness(n, 3, colors);
            bool ok = false;
            if (const auto* mono = std::get_if<Monochrome>(&wit)) {
              ok = (mask == 0 && mono->color == Color::blue) ||
                   (mask == full && mono->color == Color::red);
            } else {
              const auto& pair = std::get<DisjointPair>(wit);
              bool disjoint = true;
              for (int v : pair.first)
                if (std::find(pair.second.begin(), pair.second.end(), v) != pair.second.end())
                  disjoint = false;
              const std::size_t ra = static_cast<std::size_t>(colex_rank(pair.first));
              const std::size_t rb = static_cast<std::size_t>(colex_rank(pair.second));
              ok = mask != 0 && mask != full && disjoint &&
                   pair.first_color != pair.second_color && ra < colors.size() &&
                   rb < colors.size() && colors[ra] == pair.first_color &&
                   colors[rb] == pair.second_color;
            }
            if (!ok) {
              ++bad_count[w];
              if (first_bad[w] < 0) first_bad[w] = static_cast<std::int64_t>(mask);
            }
          }
        },
        workers);
    long long bad = 0;
    std::int64_t first = -1;
    for (int w = 0; w < workers; ++w) {
      bad += bad_count[static_cast<std::size_t>(w)];
      if (first < 0) first = first_bad[static_cast<std::size_t>(w)];
    }
    SuiteCase c;
    c.name = "dichotomy witness, n=" + std::to_string(n);
    c.checked = static_cast<long long>(total);
    c.pass = bad == 0;
    c.detail = c.pass ? "2^" + std::to_string(r) + " colorings, all witnessed"
                      : std::to_string(bad) + " invalid witnesses, first at coloring mask " +
                            std::to_string(first);
    res.cases.push_back(std::move(c));
  }
  return res;
}

namespace detail {

struct shift_property_tally {
  long long edge_count_violations = 0;
  long long mu_increase_violations = 0;
  long long idempotence_violations = 0;
  long long closure_not_shifted = 0;
  long long closure_order_disagreements = 0;
  std::optional<Hypergraph> first_disagreement;
  std::optional<Hypergraph> first_violation;  // any of the always-true properties

  void merge(shift_property_tally&& o) {
    edge_count_violations += o.edge_count_violations;
    mu_increase_violations += o.mu_increase_violations;
    idempotence_violations += o.idempotence_violations;
    closure_not_shifted += o.closure_not_shifted;
    closure_order_disagreements += o.closure_order_disagreements;
    if (!first_disagreement && o.first_disagreement)
      first_disagreement = std::move(o.first_disagreement);
    if (!first_violation && o.first_violation) first_violation = std::move(o.first_violation);
  }
};

// checks every (i,j) single shift plus both closure sweeps on one graph
inline void shift_properties_on(const Hypergraph& g, shift_property_tally& t) {
  const int mu = matching_number(g);
  bool violated = false;
  for (int i = 1; i <= g.n(); ++i) {
    for (int j = i + 1; j <= g.n(); ++j) {
      const ShiftReport r = shift_ij(g, i, j);
      if (r.result.m() != g.m()) {
        ++t.edge_count_violations;
        violated = true;
      }
      if (matching_number(r.result) > mu) {
        ++t.mu_increase_violations;
        violated = true;
      }
      const ShiftReport again = shift_ij(r.result, i, j);
      if (again.moved != 0 || !same_graph(again.result, r.result)) {
        ++t.idempotence_violations;
        violated = true;
      }
    }
  }
  const Hypergraph lex = shift_closure(g, SweepOrder::lexicographic);
  const Hypergraph rev = shift_closure(g, SweepOrder::reverse);
  if (!is_shifted(lex) || !is_shifted(rev)) {
    ++t.closure_not_shifted;
    violated = true;
  }
  if (matching_number(lex) > mu || matching_number(rev) > mu) {
    ++t.mu_increase_violations;
    violated = true;
  }
  if (!same_graph(lex, rev)) {
    ++t.closure_order_disagreements;
    if (!t.first_disagreement) t.first_disagreement = g;
  }
  if (violated && !t.first_violation) t.first_violation = g;
}

}  // namespace detail

// Shift operator properties over all 1024 graphs with k=2, n=5 and a fixed
// pseudorandom batch of 3-graphs with n <= 12: edge count preserved, the
// matching number never increases, single shifts are idempotent, and both
// closure sweep orders produce shifted graphs.  The two sweep orders are
// also compared; they genuinely disagree on some inputs, and the case
// records how often with the first counterexample.
inline SuiteResult run_shift_suite(int random_count = 10000, std::uint64_t seed = 20250817) {
  SuiteResult res;
  res.suite = "shift";
  detail::shift_property_tally small;
  for (std::uint64_t mask = 0; mask < 1024; ++mask)
    detail::shift_properties_on(detail::graph_from_kset_mask(5, 2, mask), small);

  // splitmix-style generator: stable output across standard libraries
  std::uint64_t state = seed;
  auto next = [&state]() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  std::vector<Hypergraph> batch;
  batch.reserve(static_cast<std::size_t>(random_count));
  for (int t = 0; t < random_count; ++t) {
    const int n = 3 + static_cast<int>(next() % 10);  // 3..12
    const double p = static_cast<double>(next() >> 11) * 0x1.0p-53;
    std::vector<Vertex> flat;
    for_each_k_subset(n, 3, [&](std::span<const int> a) {
      if (static_cast<double>(next() >> 11) * 0x1.0p-53 < p)
        flat.insert(flat.end(), a.begin(), a.end());
    });
    batch.push_back(Hypergraph::from_colex_sorted(n, 3, flat));
  }
  const int workers = worker_count();
  std::vector<detail::shift_property_tally> tallies(static_cast<std::size_t>(workers));
  parallel_for(
      static_cast<std::size_t>(workers),
      [&](std::size_t w) {
        const std::size_t lo = batch.size() * w / static_cast<std::size_t>(workers);
        const std::size_t hi = batch.size() * (w + 1) / static_cast<std::size_t>(workers);
        for (std::size_t i = lo; i < hi; ++i) detail::shift_properties_on(batch[i], tallies[w]);
      },
      workers);
  detail::shift_property_tally random;
  for (auto& t : tallies) random.merge(std::move(t));

  const long long graphs = 1024 + random_count;
  auto add = [&](const std::string& name, long long violations, const std::string& ok_note) {
    SuiteCase c;
    c.name = name;
    c.checked = graphs;
    c.pass = violations == 0;
    c.detail = c.pass ? ok_note : std::to_string(violations) + " violations";
    res.cases.push_back(std::move(c));
  };
  add("edge count preserved by every single shift",
      small.edge_count_violations + random.edge_count_violations,
      "all pair shifts checked on every graph");
  add("matching number never increases under shifts",
      small.mu_increase_violations + random.mu_increase_violations,
      "single shifts and both closures checked");
  add("single shifts are idempotent",
      small.idempotence_violations + random.idempotence_violations,
      "second application never moves an edge");
  add("closures are shifted under both sweep orders",
      small.closure_not_shifted + random.closure_not_shifted,
      "lexicographic and reverse fixpoints verified");
  {
    SuiteCase c;
    c.name = "closure result independent of sweep order";
    c.checked = graphs;
    const long long dis = small.closure_order_disagreements + random.closure_order_disagreements;
    c.pass = dis == 0;
    if (!c.pass) {
      const Hypergraph& w =
          small.first_disagreement ? *small.first_disagreement : *random.first_disagreement;
      std::string edges;
      for (std::size_t i = 0; i < w.m(); ++i) edges += detail::edge_string(w.edge(i));
      c.detail = std::to_string(dis) +
                 " of " + std::to_string(graphs) +
                 " graphs reach different fixpoints; first: n=" + std::to_string(w.n()) +
                 " k=" + std::to_string(w.k()) + " edges " + (edges.empty() ? "{}" : edges);
      if (!res.failing_instance) {
        res.failing_instance = w;
        res.failing_note = c.name;
      }
    } else {
      c.detail = "both sweep orders reached identical fixpoints";
    }
    res.cases.push_back(std::move(c));
  }
  if (!res.failing_instance) {
    if (small.first_violation) {
      res.failing_instance = small.first_violation;
      res.failing_note = "shift property violation";
    } else if (random.first_violation) {
      res.failing_instance = random.first_violation;
      res.failing_note = "shift property violation";
    }
  }
  return res;
}

// Search engines against the closed-form bound on every (n, s) cell with
// k = 3 up to max_n, with witness classification.
inline SuiteResult run_conjecture_suite(int max_n = 9, const SearchLimits& limits = {}) {
  SuiteResult res;
  res.suite = "conjecture";
  const std::vector<ConjectureCell> cells = verify_conjecture_range(max_n, limits);
  for (const ConjectureCell& cell : cells) {
    SuiteCase c;
    c.name = "n=" + std::to_string(cell.n) + " s=" + std::to_string(cell.s);
    c.checked = 1;
    c.pass = cell.matches_bound && cell.engines_agree;
    std::string d = "bound=" + std::to_string(cell.bound.bound);
    if (cell.bruteforce) d += " bruteforce=" + std::to_string(cell.bruteforce->value);
    if (cell.shifted) d += " shifted=" + std::to_string(cell.shifted->value);
    if (cell.witness_membership) {
      d += " witness=";
      if (cell.witness_membership->cover && cell.witness_membership->clique)
        d += "cover+clique";
      else if (cell.witness_membership->cover)
        d += "cover";
      else if (cell.witness_membership->clique)
        d += "clique";
      else
        d += "neither";
    }
    if (!cell.matches_bound) d += " MISMATCH";
    if (!cell.engines_agree) d += " ENGINES-DISAGREE";
    c.detail = std::move(d);
    if (!c.pass && !res.failing_instance) {
      const std::optional<SearchResult>& r = cell.shifted ? cell.shifted : cell.bruteforce;
      if (r) {
        res.failing_instance = r->witness;
        res.failing_note = c.name;
      }
    }
    res.cases.push_back(std::move(c));
  }
  return res;
}

namespace detail {

// three blocks of three matching edges; in each block two cross edges and a
// pair completion through a free vertex make the block's triple bad, and the
// three bad triples are pairwise disjoint
inline Hypergraph three_disjoint_bad_instance() {
  std::vector<EdgeTuple> edges;
  for (int l = 1; l <= 9; ++l) edges.push_back({3 * l - 2, 3 * l - 1, 3 * l});
  for (int b = 0; b < 3; ++b) {
    const int v = 9 * b;
    edges.push_back({v + 2, v + 5, v + 8});
    edges.push_back({v + 3, v + 6, v + 9});
    edges.push_back({v + 1, v + 4, 28 + b});
  }
  return Hypergraph::build(30, 3, edges);
}

}  // namespace detail

// Structural claims over concrete families: the profile table and the
// attachment claim on every triple of every shifted extremal graph up to
// max_n and of both constructions; forced full degree on the two complete
// enumerations; and bad-triple confinement, including the designed negative
// instance.
inline SuiteResult run_claims_suite(int max_n = 9, const SearchLimits& limits = {}) {
  SuiteResult res;
  res.suite = "claims";

  long long profile_checked = 0, profile_bad = 0;
  long long attach_checked = 0, attach_bad = 0;
  std::optional<Hypergraph> first_claim_fail;
  auto scan_triples = [&](const Hypergraph& g, const AnalysisReport& rep) {
    profile_checked += rep.good_count;
    attach_checked += rep.good_count;
    if (!rep.all_profiles_ok) {
      ++profile_bad;
      if (!first_claim_fail) first_claim_fail = g;
    }
    if (!rep.all_attachments_ok) {
      ++attach_bad;
      if (!first_claim_fail) first_claim_fail = g;
    }
  };

  long long families = 0;
  for (int n = 6; n <= max_n; ++n) {
    for (int s = 1; 3 * s <= n; ++s) {
      for (const Hypergraph& g : enumerate_extremal(n, 3, s, EnumerationMode::shifted, limits)) {
        scan_triples(g, analyze(g));
        ++families;
      }
    }
  }
  const Hypergraph cov = construct_cov(200, 3, 10).first;
  const Hypergraph cl = construct_cl(100, 3, 30).first;
  const AnalysisReport rep_cov = analyze(cov);
  const AnalysisReport rep_cl = analyze(cl);
  scan_triples(cov, rep_cov);
  scan_triples(cl, rep_cl);
  families += 2;

  {
    SuiteCase c;
    c.name = "profile table on every good triple";
    c.checked = profile_checked;
    c.pass = profile_bad == 0;
    c.detail = std::to_string(profile_checked) + " good triples across " +
               std::to_string(families) + " families";
    if (!c.pass) c.detail += ", " + std::to_string(profile_bad) + " families violate";
    res.cases.push_back(std::move(c));
  }
  {
    SuiteCase c;
    c.name = "attachment claim on every good triple";
    c.checked = attach_checked;
    c.pass = attach_bad == 0;
    c.detail = std::to_string(attach_checked) + " good triples across " +
               std::to_string(families) + " families";
    if (!c.pass) c.detail += ", " + std::to_string(attach_bad) + " families violate";
    res.cases.push_back(std::move(c));
  }

  for (const int n : {6, 7}) {
    if (n > max_n) continue;
    SuiteCase c;
    c.name = "high degree forces full degree at n=" + std::to_string(n) + " s=1";
    long long bad = 0;
    const std::vector<Hypergraph> all =
        enumerate_extremal(n, 3, 1, EnumerationMode::full, limits);
    for (const Hypergraph& g : all) {
      if (!check_high_degree_full(g, 1)) {
        ++bad;
        if (!first_claim_fail) first_claim_fail = g;
      }
    }
    c.checked = static_cast<long long>(all.size());
    c.pass = bad == 0;
    c.detail = std::to_string(all.size()) + " extremal graphs";
    if (!c.pass) c.detail += ", " + std::to_string(bad) + " violate";
    res.cases.push_back(std::move(c));
  }

  {
    SuiteCase c;
    c.name = "bad triples confined on the constructions";
    c.checked = 2;
    c.pass = rep_cov.bad_check.ok() && rep_cl.bad_check.ok();
    c.detail = "cover and clique constructions";
    if (!c.pass) {
      c.detail += ": confinement failed";
      if (!first_claim_fail) first_claim_fail = rep_cov.bad_check.ok() ? cl : cov;
    }
    res.cases.push_back(std::move(c));
  }
  {
    SuiteCase c;
    c.name = "confinement rejects three disjoint bad triples";
    const Hypergraph neg = detail::three_disjoint_bad_instance();
    const AnalysisReport rep = analyze(neg, 1, 1);
    c.checked = 1;
    // the designed instance must be detected, so the check must come back false
    c.pass = !rep.bad_check.ok() && rep.bad_count == 3;
    c.detail = std::to_string(rep.bad_count) + " bad triples, confinement " +
               (rep.bad_check.ok() ? "accepted (wrong)" : "rejected");
    if (!c.pass && !first_claim_fail) first_claim_fail = neg;
    res.cases.push_back(std::move(c));
  }

  if (!res.pass() && first_claim_fail) {
    res.failing_instance = std::move(first_claim_fail);
    res.failing_note = "claims suite violation";
  }
  return res;
}

}  // namespace hypermatch

#endif  // HYPERMATCH_SUITES_HPP_
