// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every comparison is exact; the corpus sizes below are minimums.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hornkeys/generators.hpp"
#include "hornkeys/hornkeys.hpp"
#include "hornkeys/oracles.hpp"

using namespace hornkeys;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string failure;

  void require(bool ok, const std::string& why) {
    if (ok || !pass) {
      pass = pass && ok;
      return;
    }
    pass = false;
    failure = why;
  }
};

template <class T>
std::string str(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

SetFamily sorted(SetFamily f) {
  std::sort(f.begin(), f.end());
  return f;
}

VarSet letters(std::size_t n, const char* s) {
  VarSet out(n);
  for (; *s; ++s) out.insert(static_cast<Var>(*s - 'a'));
  return out;
}

SpernerHypergraph path_b() {
  return SpernerHypergraph(Universe(4), {letters(4, "ab"), letters(4, "bc"), letters(4, "cd")});
}

bool is_minimal_key(const HornCnf& cnf, const VarSet& k) {
  if (!is_key(cnf, k)) return false;
  bool minimal = true;
  k.for_each([&](Var v) {
    VarSet s = k;
    s.erase(v);
    minimal = minimal && !is_key(cnf, s);
  });
  return minimal;
}

// 1. Φ_B and its three perturbations all have exactly B as minimal keys.
Outcome worked_examples() {
  Outcome o;
  const auto b = path_b();
  const HornCnf phi = key_horn_cnf(b);
  std::vector<HornCnf> formulas{phi, phi, phi, phi};
  formulas[1].add(letters(4, "b"), 3);
  formulas[2].add(letters(4, "c"), 0);
  formulas[3].add(letters(4, "b"), 3);
  formulas[3].add(letters(4, "c"), 0);
  for (std::size_t i = 0; i < formulas.size(); ++i) {
    o.require(sorted(minimal_keys(formulas[i])) == b.edges(),
              "formula " + std::to_string(i) + " has a different key family");
    for (std::size_t j = 0; j < i; ++j)
      o.require(!equivalent(formulas[i], formulas[j]),
                "formulas " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
  }
  o.detail = "Phi_B, Psi1, Psi2, Psi3 -> {ab,bc,cd}; pairwise distinct functions";
  return o;
}

// 2. {12,13,14,234} is unique key; {ab,bc,cd} is not, with a checked witness.
Outcome unique_examples() {
  Outcome o;
  const SpernerHypergraph yes(Universe(4), {letters(4, "ab"), letters(4, "ac"),
                                            letters(4, "ad"), letters(4, "bcd")});
  o.require(is_unique_key_hypergraph(yes).unique, "{12,13,14,234} reported not unique");
  o.require(oracle::bf_unique_key(yes), "oracle disagrees on {12,13,14,234}");

  const auto no = is_unique_key_hypergraph(path_b());
  o.require(!no.unique && no.witness.has_value(), "{ab,bc,cd} reported unique or no witness");
  if (no.witness) {
    const SetFamily dual = oracle::bf_minimal_transversals(path_b());
    const Witness& w = *no.witness;
    o.require(std::find(dual.begin(), dual.end(), w.set) != dual.end(),
              "witness set is not a minimal transversal");
    VarSet grown = w.set;
    grown.insert(w.vertex);
    for (const VarSet& t : dual)
      o.require(t == w.set || !t.is_subset_of(grown), "witness admits an exchange");
    o.detail = "witness T=" + str(w.set) + " v=" + std::to_string(w.vertex);
  }
  // The definitional oracle agrees, and the addable clauses are b->d, c->a.
  o.require(!oracle::bf_unique_key(path_b()), "oracle says {ab,bc,cd} is unique");
  const auto psi = addable_clauses(path_b());
  o.require(psi.size() == 2 && psi[0] == HornClause{letters(4, "b"), 3} &&
                psi[1] == HornClause{letters(4, "c"), 0},
            "addable clauses differ from {b->d, c->a}");
  return o;
}

// 3. Exchange criterion ≡ Ψ emptiness ≡ individual neighbors (2-uniform).
Outcome recognizer_agreement() {
  Outcome o;
  std::size_t total = 0, unique = 0, graphs = 0, oracle_checked = 0;
  for (std::uint64_t seed = 1; seed <= 600; ++seed) {
    gen::InstanceSeed p;
    p.seed = seed;
    p.n = 2 + seed % 9;  // 2..10
    SpernerHypergraph b;
    if (seed % 3 == 0) {
      p.density = 0.15 + 0.1 * static_cast<double>(seed % 6);
      const Graph g = gen::random_graph(p);
      if (g.edge_count() == 0) continue;
      b = as_hypergraph(g);
    } else {
      p.m = 1 + seed % 8;
      p.max_body = 1 + seed % 4;
      b = gen::random_sperner(p);
    }
    ++total;
    const bool exchange = is_unique_key_hypergraph(b).unique;
    const bool psi_empty = addable_clauses(b).empty();
    unique += exchange;
    o.require(exchange == psi_empty, "exchange vs addable_clauses differ, seed " + std::to_string(seed));
    if (b.size() <= 7) {
      ++oracle_checked;
      o.require(exchange == oracle::bf_unique_key(b),
                "exchange vs definitional oracle differ, seed " + std::to_string(seed));
    }
    bool two_uniform = true;
    for (const auto& e : b.edges()) two_uniform = two_uniform && e.size() == 2;
    if (two_uniform) {
      ++graphs;
      o.require(is_unique_key_graph(as_graph(b)).unique == exchange,
                "individual-neighbor checker differs, seed " + std::to_string(seed));
    }
  }
  o.require(total >= 500, "corpus too small");
  o.detail = std::to_string(total) + " hypergraphs (" + std::to_string(unique) + " unique, " +
             std::to_string(graphs) + " 2-uniform, " + std::to_string(oracle_checked) +
             " also vs definition)";
  return o;
}

// 4. Satisfiable ⇔ G_Φ not unique key, plus a fixed three-clause instance.
Outcome sat_bridge() {
  Outcome o;
  const SignedCnf three{4, {{1, 2, -3}, {-1, -2, 4}, {-2, -3, -4}}};
  const Graph g1 = build_sat_graph(three);
  const auto r1 = is_unique_key_graph(g1);
  const SatGraphLayout lay{4, 3};
  o.require(g1.size() == 16, "three-clause graph does not have 16 vertices");
  o.require(!r1.unique && r1.witness && r1.witness->vertex == lay.hub() &&
                r1.witness->set.contains(lay.hub()),
            "three-clause witness is not a MIS with lonely z");

  std::size_t total = 1, sat = 1;
  for (std::uint64_t seed = 1; seed <= 220; ++seed) {
    gen::InstanceSeed p;
    p.seed = seed;
    p.n = 1 + seed % 6;
    p.m = 1 + (seed / 6) % 6;
    p.max_body = 1 + seed % 3;
    const SignedCnf cnf = gen::random_signed_cnf(p);
    const bool s = oracle::bf_satisfiable(cnf);
    const Graph g = build_sat_graph(cnf);
    const auto r = is_unique_key_graph(g);
    ++total;
    sat += s;
    o.require(s == !r.unique, "SAT bridge fails, seed " + std::to_string(seed));
    if (!r.unique)
      o.require(r.witness && r.witness->vertex == SatGraphLayout{cnf.vars, cnf.clauses.size()}.hub(),
                "lonely vertex is not z, seed " + std::to_string(seed));
  }
  o.require(total >= 200, "corpus too small");
  o.detail = std::to_string(total) + " CNFs (" + std::to_string(sat) + " satisfiable, " +
             std::to_string(total - sat) + " unsatisfiable) plus the three-clause instance";
  return o;
}

// 5. Bipartite without isolated vertices: unique key ⇔ E is a perfect matching.
Outcome bipartite() {
  Outcome o;
  std::size_t total = 0, matchings = 0;
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 1; seed <= 240; ++seed) {
    gen::InstanceSeed p;
    p.seed = seed;
    p.n = 2 + seed % 9;
    p.density = seed % 4 == 0 ? 0.05 : 0.15 + 0.1 * static_cast<double>(seed % 5);
    Graph g = gen::random_bipartite(p);
    if (seed % 5 == 0) {
      // A perfect matching on an even vertex count, sometimes with one extra edge.
      const std::size_t n = 2 * (1 + seed % 5);
      g = Graph(n);
      std::vector<Var> perm(n);
      std::iota(perm.begin(), perm.end(), Var{0});
      std::shuffle(perm.begin(), perm.end(), rng);
      for (std::size_t i = 0; i < n; i += 2) g.add_edge(perm[i], perm[i + 1]);
      if (seed % 10 == 0 && n >= 4) g.add_edge(perm[0], perm[3]);
    }
    ++total;
    bool perfect = true;
    for (Var v = 0; v < g.size(); ++v) perfect = perfect && g.degree(v) == 1;
    matchings += perfect;
    o.require(is_unique_key_graph(g).unique == perfect,
              "general checker disagrees with matching test, seed " + std::to_string(seed));
    const auto fast = is_unique_key_bipartite(g);
    o.require(fast.fast_path && fast.unique == perfect,
              "fast path not taken or wrong, seed " + std::to_string(seed));
  }
  o.require(total >= 200, "corpus too small");
  o.detail = std::to_string(total) + " bipartite graphs (" + std::to_string(matchings) +
             " perfect matchings)";
  return o;
}

// 6. Bond hypergraphs of every connected labelled graph on 2..5 vertices.
Outcome matroid_cuts() {
  Outcome o;
  std::size_t total = 0;
  for (std::size_t n = 2; n <= 5; ++n) {
    std::vector<std::pair<Var, Var>> pairs;
    for (Var u = 0; u < n; ++u)
      for (Var v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      Graph g(n);
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
      const ThresholdGraph spread(g, std::vector<std::size_t>(n, 1));
      if (!is_target_set(spread, VarSet(n, {0}))) continue;  // disconnected
      ++total;
      const auto bonds = oracle::graphic_matroid_cuts(g);
      o.require(is_unique_key_hypergraph(bonds).unique,
                "bond hypergraph not unique key, n=" + std::to_string(n) + " mask=" +
                    std::to_string(mask));
    }
  }
  o.detail = std::to_string(total) + " connected graphs, all bond hypergraphs unique key";
  return o;
}

std::vector<HornCnf> horn_corpus() {
  std::vector<HornCnf> out;
  for (std::uint64_t seed = 1; seed <= 520; ++seed) {
    gen::InstanceSeed p;
    p.seed = seed;
    p.n = 1 + seed % 10;
    p.m = seed % 16;
    p.max_body = 1 + seed % 4;
    p.min_body = seed % 7 == 0 ? 0 : std::min<std::size_t>(p.max_body, 1 + seed % 3);
    if (seed % 3 != 1 || p.n < 2) {
      out.push_back(gen::random_horn_cnf(p));
      continue;
    }
    // Heads round-robin over all variables: every variable is derivable, so
    // these instances carry many more minimal keys than uniform heads do.
    const HornCnf base = gen::random_horn_cnf(p);
    HornCnf cnf{base.universe()};
    for (std::size_t c = 0; c < base.clause_count(); ++c) {
      const Var head = c % p.n;
      VarSet body = base.clauses()[c].body;
      body.erase(head);
      if (body.empty()) body.insert((head + 1) % p.n);
      cnf.add(std::move(body), head);
    }
    out.push_back(std::move(cnf));
  }
  return out;
}

// 7. Enumeration = brute force, no duplicates, delay within m(n+1)+1.
Outcome enumeration(const std::vector<HornCnf>& corpus) {
  Outcome o;
  std::size_t keys = 0, most = 0, worst_delay = 0, worst_slack = ~std::size_t{0};
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const HornCnf& cnf = corpus[i];
    SetFamily got;
    const auto stats = enumerate_minimal_keys(cnf, [&](const VarSet& k) { got.push_back(k); });
    keys += got.size();
    most = std::max(most, got.size());
    const std::set<VarSet> distinct(got.begin(), got.end());
    const std::size_t bound = cnf.clause_count() * (cnf.size() + 1) + 1;
    o.require(distinct.size() == got.size(), "duplicate key, instance " + std::to_string(i));
    o.require(sorted(got) == oracle::bf_minimal_keys(cnf), "key family differs, instance " + std::to_string(i));
    o.require(stats.max_delay_closures <= bound, "delay bound exceeded, instance " + std::to_string(i));
    for (const VarSet& k : got) o.require(is_minimal_key(cnf, k), "non-minimal key emitted");
    worst_delay = std::max(worst_delay, stats.max_delay_closures);
    worst_slack = std::min(worst_slack, bound - std::min(bound, stats.max_delay_closures));
  }
  o.require(corpus.size() >= 500, "corpus too small");
  o.detail = std::to_string(corpus.size()) + " CNFs, " + std::to_string(keys) +
             " keys (at most " + std::to_string(most) + " per CNF), max delay " +
             std::to_string(worst_delay) + " closures, min slack " +
             std::to_string(worst_slack);
  return o;
}

// 8. Key graph strongly connected; ρ strictly decreases along some arc.
Outcome strong_connectivity(const std::vector<HornCnf>& corpus) {
  Outcome o;
  std::size_t pairs = 0, sampled = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const HornCnf& cnf = corpus[i];
    const KeyGraph g = build_key_graph(cnf);
    o.require(is_strongly_connected(g), "key graph not strongly connected, instance " + std::to_string(i));
    o.require(g.max_out_degree() <= cnf.clause_count(), "out-degree above m, instance " + std::to_string(i));
    if (i % 5 != 0) continue;
    ++sampled;
    for (const VarSet& k1 : g.nodes) {
      const auto nbrs = neighbors(cnf, k1);
      for (const VarSet& k2 : g.nodes) {
        if (k1 == k2) continue;
        const auto r = rho_measure(cnf, k1, k2);
        if (std::all_of(r.begin() + 1, r.end(), [](std::size_t x) { return x == 0; })) continue;
        ++pairs;
        const bool progress = std::any_of(nbrs.begin(), nbrs.end(), [&](const VarSet& k3) {
          return rho_less(rho_measure(cnf, k3, k2), r);
        });
        o.require(progress, "no rho progress, instance " + std::to_string(i));
      }
    }
  }
  o.require(sampled >= 100, "rho subsample too small");
  o.detail = std::to_string(corpus.size()) + " key graphs strongly connected; rho progress on " +
             std::to_string(pairs) + " pairs from " + std::to_string(sampled) + " instances";
  return o;
}

std::vector<ThresholdGraph> threshold_corpus() {
  std::vector<ThresholdGraph> out;
  for (std::uint64_t seed = 1; seed <= 210; ++seed) {
    gen::InstanceSeed p;
    p.seed = seed;
    p.n = 1 + seed % 8;
    p.density = 0.2 + 0.1 * static_cast<double>(seed % 6);
    p.max_threshold = 2;
    out.push_back(gen::random_threshold_graph(p));
  }
  return out;
}

// 9. Target sets ⇔ keys of Ψ_G over every seed; Ψ_G of a fixed five-vertex graph is pinned.
Outcome threshold_reduction(const std::vector<ThresholdGraph>& corpus) {
  Outcome o;
  std::size_t seeds = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const ThresholdGraph& tg = corpus[i];
    const HornCnf psi = tss_to_horn(tg);
    const std::size_t n = tg.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      ++seeds;
      const VarSet s = VarSet::from_mask(n, mask);
      const VarSet a = activate(tg, s);
      o.require(a == forward_closure(psi, s), "activation != closure, instance " + std::to_string(i));
      o.require(a.low_word() == oracle::naive_activate(tg, mask),
                "activation != sequential oracle, instance " + std::to_string(i));
      o.require(is_target_set(tg, s) == is_key(psi, s), "target/key mismatch, instance " + std::to_string(i));
    }
  }

  Graph g(5);
  for (auto [u, v] : std::vector<std::pair<Var, Var>>{{0, 1}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {2, 4}, {3, 4}})
    g.add_edge(u, v);
  const HornCnf five = tss_to_horn(ThresholdGraph(g, {1, 1, 1, 1, 2}));
  // Expected clauses: b→a, e→a, d→a, a→b, c→b, b→c, d→c, e→c, a→d, c→d, e→d, ac→e, ad→e, cd→e.
  const std::vector<std::pair<const char*, Var>> pinned{
      {"b", 0}, {"e", 0}, {"d", 0}, {"a", 1}, {"c", 1}, {"b", 2}, {"d", 2},
      {"e", 2}, {"a", 3}, {"c", 3}, {"e", 3}, {"ac", 4}, {"ad", 4}, {"cd", 4}};
  std::set<HornClause> expected;
  for (auto [body, head] : pinned) expected.insert(HornClause{letters(5, body), head});
  const std::set<HornClause> got(five.clauses().begin(), five.clauses().end());
  o.require(five.clause_count() == 14 && got == expected, "five-vertex Psi_G differs from the pinned clauses");

  o.require(corpus.size() >= 200, "corpus too small");
  o.detail = std::to_string(corpus.size()) + " threshold graphs, " + std::to_string(seeds) +
             " seeds; five-vertex Psi_G matches 14 pinned clauses";
  return o;
}

// 10. Gadget graph sizes, keys → target sets, target sets → keys, optima.
Outcome horn_to_tss_reduction() {
  Outcome o;
  std::size_t total = 0, lifted = 0, small_targets = 0;
  for (std::uint64_t seed = 1; seed <= 110; ++seed) {
    gen::InstanceSeed p;
    p.seed = seed;
    p.n = 2 + seed % 4;  // 2..5
    p.m = 1 + seed % 3;  // 1..3
    p.min_body = 1;
    p.max_body = 2;
    const HornCnf cnf = gen::random_horn_cnf(p);
    const GadgetGraph gadget = horn_to_tss(cnf);
    const ThresholdGraph& tg = gadget.graph;
    const std::size_t n = cnf.size(), big = tg.size();
    ++total;
    std::size_t expected = n, expected_edges = 0;
    for (const auto& c : cnf.clauses()) {
      expected += 4 * c.body.size() + 5;
      expected_edges += 6 * c.body.size() + 6;
    }
    const std::string tag = ", seed " + std::to_string(seed);
    o.require(big == expected, "gadget vertex count" + tag);
    o.require(tg.graph().edge_count() == expected_edges, "gadget edge count" + tag);

    // (a) keys are target sets (variables embed as the first n vertices).
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      const VarSet k = VarSet::from_mask(n, mask);
      if (!is_key(cnf, k)) continue;
      VarSet seed_set(big);
      k.for_each([&](Var v) { seed_set.insert(v); });
      o.require(is_target_set(tg, seed_set), "key is not a target set" + tag);
    }

    // (b) target sets lift to keys no larger. Every target set of size <= 3
    // is checked directly; larger ones contain a minimal target set, and the
    // lift is monotone, so lifting every minimal target set covers them.
    const auto check_lift = [&](const VarSet& s) {
      const VarSet k = lift_target_set_to_key(cnf, gadget, s);
      o.require(is_key(cnf, k) && k.size() <= s.size(), "lift is not a small enough key" + tag);
    };
    for (Var a = 0; a < big; ++a)
      for (Var b = a; b < big; ++b)
        for (Var c = b; c < big; ++c) {
          const VarSet s(big, {a, b, c});
          if (!is_target_set(tg, s)) continue;
          ++small_targets;
          check_lift(s);
        }
    enumerate_minimal_target_sets(
        tg, [&](const VarSet& s) {
          ++lifted;
          check_lift(s);
        },
        0, {3, kDefaultClauseBudget});

    // (c) optimum values coincide; the gadget side is the brute-force oracle.
    o.require(minimum_key(cnf).size() == oracle::bf_min_target_set(tg).size(), "optima differ" + tag);
  }
  o.require(total >= 100, "corpus too small");
  o.detail = std::to_string(total) + " CNFs; " + std::to_string(small_targets) +
             " small target sets and " + std::to_string(lifted) + " minimal target sets lifted";
  return o;
}

// 11. Minimal target sets = brute force, delay bound measured on Ψ_G.
Outcome target_set_enumeration(const std::vector<ThresholdGraph>& corpus) {
  Outcome o;
  std::size_t sets = 0, worst = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const ThresholdGraph& tg = corpus[i];
    const HornCnf psi = tss_to_horn(tg);
    SetFamily got;
    const auto stats = enumerate_minimal_target_sets(tg, [&](const VarSet& s) { got.push_back(s); });
    sets += got.size();
    const std::set<VarSet> distinct(got.begin(), got.end());
    o.require(distinct.size() == got.size(), "duplicate target set, instance " + std::to_string(i));
    o.require(sorted(got) == oracle::bf_minimal_target_sets(tg),
              "target sets differ from brute force, instance " + std::to_string(i));
    o.require(stats.max_delay_closures <= psi.clause_count() * (psi.size() + 1) + 1,
              "delay bound exceeded, instance " + std::to_string(i));
    worst = std::max(worst, stats.max_delay_closures);
  }
  o.detail = std::to_string(corpus.size()) + " threshold graphs, " + std::to_string(sets) +
             " minimal target sets, max delay " + std::to_string(worst) + " closures";
  return o;
}

}  // namespace

int main() {
  const auto horn = horn_corpus();
  const auto thresholds = threshold_corpus();
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"worked-example fidelity", worked_examples},
      {"unique-key hypergraph examples", unique_examples},
      {"recognizer cross-validation", recognizer_agreement},
      {"SAT bridge", sat_bridge},
      {"bipartite perfect matching", bipartite},
      {"matroid cuts", matroid_cuts},
      {"enumeration correctness and delay", [&] { return enumeration(horn); }},
      {"strong connectivity and rho progress", [&] { return strong_connectivity(horn); }},
      {"threshold graph to Horn", [&] { return threshold_reduction(thresholds); }},
      {"Horn to threshold gadget", horn_to_tss_reduction},
      {"minimal target set enumeration", [&] { return target_set_enumeration(thresholds); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.failure = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.pass;
    std::printf("%s %2zu %-38s %s%s%s (%.1fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str(), o.pass ? "" : " -- ", o.failure.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
