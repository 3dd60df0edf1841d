// hornkeys: command-line front end over the hornkeys library.
//
// Results go to stdout, diagnostics to stderr. Exit codes: 0 done / property
// holds, 1 property fails, 2 bad input, 3 a resource guard tripped.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hornkeys/generators.hpp"
#include "hornkeys/hornkeys.hpp"
#include "hornkeys/io.hpp"
#include "hornkeys/oracles.hpp"
#include "report.hpp"

using namespace hornkeys;
using namespace hornkeys::cli;

namespace {

struct Options {
  std::string input;
  std::string output;
  std::string roles;
  std::string seed_set;
  std::string kind;
  std::string oracle;
  bool json = false;
  bool names = false;
  bool stats = false;
  std::size_t limit = 0;

  // Guards; defaults may come from the environment.
  std::size_t dual_limit = kDefaultDualLimit;
  std::size_t max_threshold = kDefaultMaxThreshold;
  std::size_t clause_budget = kDefaultClauseBudget;
  std::size_t subset_budget = kDefaultSubsetBudget;
  std::size_t max_sets = 0;
  std::size_t max_vars = oracle::kDefaultMaxVars;

  gen::InstanceSeed gen;
};

std::size_t env_size(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || raw[0] == '-') throw InputError(std::string(name) + " is not a non-negative integer");
  return static_cast<std::size_t>(v);
}

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  return io::read_file(path);
}

template <class Parser>
auto load(Parser parse, const std::string& path) {
  std::istringstream in(slurp(path));
  return parse(in);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

// Text for file-producing verbs goes to --output or stdout.
void emit_text(Report& r, const Options& o, const std::string& text) {
  if (!o.output.empty()) {
    write_file(o.output, text);
    return;
  }
  if (!r.json_mode()) std::cout << text;
}

// Witnesses always use labels when the input has them, so a SAT gadget
// witness reads `vertex z` rather than a bare id.
void report_witness(Report& r, const Witness& w, const Universe& u) {
  r.witness(to_json(w, u));
  r.line("not unique");
  const std::string set = io::format_set(w.set, u, true);
  switch (w.kind) {
    case Witness::Kind::TransversalPairMissing:
      r.line("transversal " + set);
      break;
    case Witness::Kind::NoIndividualNeighbor:
      r.line("independent-set " + set);
      break;
    case Witness::Kind::AddableClause:
      r.line("clause " + set + " ->");
      break;
  }
  r.line("vertex " + u.name(w.vertex));
}

int stream_sets(Report& r, const Options& o, const Universe& u,
                const std::function<EnumerationStats(const std::function<void(const VarSet&)>&)>& run) {
  r.result() = json::array();
  const auto stats = run([&](const VarSet& s) {
    r.result().push_back(to_json(s));
    r.line(r.set(s, u));
  });
  r.stats() = to_json(stats);
  if (o.stats)
    r.line("# keys=" + std::to_string(stats.keys) + " closures=" + std::to_string(stats.closures) +
           " max_delay_closures=" + std::to_string(stats.max_delay_closures));
  return kOk;
}

int cmd_keys(Report& r, const Options& o) {
  const HornCnf cnf = load(io::parse_horn, o.input);
  return stream_sets(r, o, cnf.universe(), [&](const auto& sink) {
    return enumerate_minimal_keys(cnf, sink, o.limit);
  });
}

int cmd_key_min(Report& r, const Options& o) {
  const HornCnf cnf = load(io::parse_horn, o.input);
  const VarSet k = minimum_key(cnf, o.subset_budget);
  r.result() = to_json(k);
  r.stats()["size"] = k.size();
  r.line(r.set(k, cnf.universe()));
  return kOk;
}

int cmd_unique_hg(Report& r, const Options& o) {
  const SpernerHypergraph b = load(io::parse_hypergraph, o.input);
  const auto res = is_unique_key_hypergraph(b, o.dual_limit);
  r.result() = res.unique;
  r.stats()["transversals"] = res.examined;
  if (res.unique) {
    r.line("unique");
    return kOk;
  }
  report_witness(r, *res.witness, b.universe());
  return kFalse;
}

int cmd_unique_graph(Report& r, const Options& o) {
  const Graph g = load(io::parse_graph, o.input);
  bool unique = true, fast = false;
  std::optional<Witness> witness;
  std::size_t examined = 0;
  if (o.max_sets == 0) {
    auto res = is_unique_key_bipartite(g);
    unique = res.unique;
    fast = res.fast_path;
    witness = std::move(res.witness);
  } else {
    auto res = is_unique_key_graph(g, o.max_sets);
    unique = res.unique;
    examined = res.examined;
    witness = std::move(res.witness);
  }
  r.result() = unique;
  r.stats()["bipartite_fast_path"] = fast;
  if (o.max_sets) r.stats()["independent_sets"] = examined;
  if (unique) {
    r.line("unique");
    return kOk;
  }
  report_witness(r, *witness, g.universe());
  return kFalse;
}

int cmd_dual(Report& r, const Options& o) {
  const SpernerHypergraph b = load(io::parse_hypergraph, o.input);
  const SpernerHypergraph d = minimal_transversals(b, o.dual_limit);
  r.result() = to_json(d);
  r.stats()["edges"] = d.edge_count();
  emit_text(r, o, io::serialize_hypergraph(d));
  return kOk;
}

int cmd_phi_b(Report& r, const Options& o) {
  const HornCnf phi = key_horn_cnf(load(io::parse_hypergraph, o.input));
  r.result() = to_json(phi);
  r.stats()["clauses"] = phi.clause_count();
  emit_text(r, o, io::serialize_horn(phi));
  return kOk;
}

int cmd_sat2graph(Report& r, const Options& o) {
  const Graph g = build_sat_graph(load(io::parse_signed_cnf, o.input));
  r.result() = to_json(g);
  r.stats()["vertices"] = g.size();
  emit_text(r, o, io::serialize_graph(g));
  return kOk;
}

int cmd_tss2horn(Report& r, const Options& o) {
  const HornCnf psi =
      tss_to_horn(load(io::parse_threshold_graph, o.input), {o.max_threshold, o.clause_budget});
  r.result() = to_json(psi);
  r.stats()["clauses"] = psi.clause_count();
  emit_text(r, o, io::serialize_horn(psi));
  return kOk;
}

int cmd_horn2tss(Report& r, const Options& o) {
  const HornCnf cnf = load(io::parse_horn, o.input);
  const GadgetGraph gadget = horn_to_tss(cnf);
  const std::string roles_path =
      !o.roles.empty() ? o.roles : (!o.output.empty() ? o.output : o.input) + ".roles";
  if (roles_path == "-.roles") throw InputError("reading stdin: pass --roles for the role map");
  write_file(roles_path, io::serialize_roles(gadget));
  r.result() = to_json(gadget.graph);
  r.stats()["vertices"] = gadget.graph.size();
  r.stats()["roles_file"] = roles_path;
  emit_text(r, o, io::serialize_threshold_graph(gadget.graph));
  return kOk;
}

int cmd_tss_lift(Report& r, const Options& o) {
  const HornCnf cnf = load(io::parse_horn, o.input);
  const GadgetGraph gadget = horn_to_tss(cnf);
  const VarSet s = io::parse_id_list(o.seed_set, gadget.graph.graph().universe());
  VarSet key(cnf.size());
  try {
    key = lift_target_set_to_key(cnf, gadget, s);
  } catch (const ContractError& e) {
    throw InputError(e.what());
  }
  r.result() = to_json(key);
  r.stats()["size"] = key.size();
  r.line(r.set(key, cnf.universe()));
  return kOk;
}

int cmd_tss_enum(Report& r, const Options& o) {
  const ThresholdGraph tg = load(io::parse_threshold_graph, o.input);
  return stream_sets(r, o, tg.graph().universe(), [&](const auto& sink) {
    return enumerate_minimal_target_sets(tg, sink, o.limit, {o.max_threshold, o.clause_budget});
  });
}

int cmd_tss_activate(Report& r, const Options& o) {
  const ThresholdGraph tg = load(io::parse_threshold_graph, o.input);
  const VarSet seed = io::parse_id_list(o.seed_set, tg.graph().universe());
  const VarSet active = activate(tg, seed);
  const bool target = active.size() == tg.size();
  r.result() = to_json(active);
  r.stats()["active"] = active.size();
  r.stats()["target_set"] = target;
  r.line(r.set(active, tg.graph().universe()));
  r.line(target ? "# target set" : "# not a target set");
  return kOk;
}

int cmd_tss_min(Report& r, const Options& o) {
  const ThresholdGraph tg = load(io::parse_threshold_graph, o.input);
  const VarSet s = minimum_target_set(tg, o.subset_budget);
  r.result() = to_json(s);
  r.stats()["size"] = s.size();
  r.line(r.set(s, tg.graph().universe()));
  return kOk;
}

int cmd_gen(Report& r, const Options& o) {
  const std::string& k = o.kind;
  std::string text;
  if (k == "horn") {
    const auto x = gen::random_horn_cnf(o.gen);
    r.result() = to_json(x);
    text = io::serialize_horn(x);
  } else if (k == "sperner") {
    const auto x = gen::random_sperner(o.gen);
    r.result() = to_json(x);
    text = io::serialize_hypergraph(x);
  } else if (k == "graph" || k == "connected" || k == "bipartite") {
    const Graph x = k == "graph"       ? gen::random_graph(o.gen)
                    : k == "connected" ? gen::random_connected_graph(o.gen)
                                       : gen::random_bipartite(o.gen);
    r.result() = to_json(x);
    text = io::serialize_graph(x);
  } else if (k == "tss") {
    const auto x = gen::random_threshold_graph(o.gen);
    r.result() = to_json(x);
    text = io::serialize_threshold_graph(x);
  } else if (k == "cnf") {
    const auto x = gen::random_signed_cnf(o.gen);
    r.result() = to_json(x);
    text = io::serialize_signed_cnf(x);
  } else {
    throw InputError("unknown generator kind '" + k + "'");
  }
  r.stats()["seed"] = o.gen.seed;
  emit_text(r, o, text);
  return kOk;
}

int print_family(Report& r, const SetFamily& f, const Universe& u) {
  r.result() = to_json(f);
  r.stats()["count"] = f.size();
  for (const auto& s : f) r.line(r.set(s, u));
  return kOk;
}

int print_verdict(Report& r, bool value, const char* yes, const char* no) {
  r.result() = value;
  r.line(value ? yes : no);
  return value ? kOk : kFalse;
}

int cmd_oracle(Report& r, const Options& o) {
  const std::string& name = o.oracle;
  const std::size_t mv = o.max_vars;
  if (name == "closure") {
    const HornCnf cnf = load(io::parse_horn, o.input);
    if (cnf.size() > 64) throw ResourceError("closure oracle handles at most 64 variables", cnf.size());
    const VarSet seed = io::parse_id_list(o.seed_set, cnf.universe());
    const VarSet c = VarSet::from_mask(cnf.size(), oracle::naive_closure(cnf, seed.low_word()));
    r.result() = to_json(c);
    r.line(r.set(c, cnf.universe()));
    return kOk;
  }
  if (name == "minimal-keys") {
    const HornCnf cnf = load(io::parse_horn, o.input);
    return print_family(r, oracle::bf_minimal_keys(cnf, mv), cnf.universe());
  }
  if (name == "transversals") {
    const auto b = load(io::parse_hypergraph, o.input);
    return print_family(r, oracle::bf_minimal_transversals(b, mv), b.universe());
  }
  if (name == "mis") {
    const Graph g = load(io::parse_graph, o.input);
    return print_family(r, oracle::bf_maximal_independent_sets(g, mv), g.universe());
  }
  if (name == "unique-key") {
    const auto b = load(io::parse_hypergraph, o.input);
    return print_verdict(r, oracle::bf_unique_key(b, std::min<std::size_t>(mv, 14)), "unique", "not unique");
  }
  if (name == "sat") {
    const SignedCnf cnf = load(io::parse_signed_cnf, o.input);
    return print_verdict(r, oracle::bf_satisfiable(cnf, std::max<std::size_t>(mv, 24)),
                         "satisfiable", "unsatisfiable");
  }
  if (name == "activate") {
    const ThresholdGraph tg = load(io::parse_threshold_graph, o.input);
    if (tg.size() > 64) throw ResourceError("activation oracle handles at most 64 vertices", tg.size());
    const VarSet seed = io::parse_id_list(o.seed_set, tg.graph().universe());
    const VarSet a = VarSet::from_mask(tg.size(), oracle::naive_activate(tg, seed.low_word()));
    r.result() = to_json(a);
    r.line(r.set(a, tg.graph().universe()));
    return kOk;
  }
  if (name == "target-sets") {
    const ThresholdGraph tg = load(io::parse_threshold_graph, o.input);
    return print_family(r, oracle::bf_minimal_target_sets(tg, mv), tg.graph().universe());
  }
  if (name == "min-target-set") {
    const ThresholdGraph tg = load(io::parse_threshold_graph, o.input);
    const VarSet s = oracle::bf_min_target_set(tg, o.subset_budget);
    r.result() = to_json(s);
    r.line(r.set(s, tg.graph().universe()));
    return kOk;
  }
  if (name == "bonds") {
    const Graph g = load(io::parse_graph, o.input);
    const auto bonds = oracle::graphic_matroid_cuts(g);
    r.result() = to_json(bonds);
    r.stats()["count"] = bonds.edge_count();
    if (!r.json_mode()) std::cout << io::serialize_hypergraph(bonds);
    return kOk;
  }
  throw InputError("unknown oracle '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Minimal keys of pure Horn functions, unique-key hypergraphs and target sets."};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every verb");

  try {
    o.dual_limit = env_size("HORNKEYS_DUAL_LIMIT", o.dual_limit);
    o.max_threshold = env_size("HORNKEYS_MAX_THRESHOLD", o.max_threshold);
    o.clause_budget = env_size("HORNKEYS_CLAUSE_BUDGET", o.clause_budget);
    o.subset_budget = env_size("HORNKEYS_SUBSET_BUDGET", o.subset_budget);
    o.max_sets = env_size("HORNKEYS_MAX_SETS", o.max_sets);
    o.max_vars = env_size("HORNKEYS_ORACLE_VARS", o.max_vars);
  } catch (const InputError& e) {
    std::cerr << "hornkeys: " << e.what() << '\n';
    return kInputError;
  }

  std::map<CLI::App*, std::function<int(Report&, const Options&)>> handlers;
  auto verb = [&](const char* name, const char* help, auto handler) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_flag("--json", o.json, "Print one JSON object with result, witness and stats");
    handlers[sub] = handler;
    return sub;
  };
  auto input = [&](CLI::App* sub) { sub->add_option("input", o.input, "Input file, or - for stdin")->required(); };
  auto names = [&](CLI::App* sub) { sub->add_flag("--names", o.names, "Print labels instead of ids"); };
  auto output = [&](CLI::App* sub) { sub->add_option("-o,--output", o.output, "Write the result file here"); };
  auto enumeration = [&](CLI::App* sub) {
    sub->add_option("--limit", o.limit, "Stop after this many sets (0 = all)");
    sub->add_flag("--stats", o.stats, "Append a '# keys=... closures=... max_delay_closures=...' line");
  };
  auto threshold_guard = [&](CLI::App* sub) {
    sub->add_option("--max-threshold", o.max_threshold, "Largest threshold accepted (env HORNKEYS_MAX_THRESHOLD)")
        ->capture_default_str();
    sub->add_option("--clause-budget", o.clause_budget, "Largest Horn CNF built (env HORNKEYS_CLAUSE_BUDGET)")
        ->capture_default_str();
  };
  auto subset_budget = [&](CLI::App* sub) {
    sub->add_option("--subset-budget", o.subset_budget, "Subsets scanned before giving up (env HORNKEYS_SUBSET_BUDGET)")
        ->capture_default_str();
  };
  auto dual_limit = [&](CLI::App* sub) {
    sub->add_option("--dual-limit", o.dual_limit, "Intermediate family cap in dualization (env HORNKEYS_DUAL_LIMIT)")
        ->capture_default_str();
  };
  auto seed_set = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--seed-set", o.seed_set, "Ids or labels, comma or space separated");
    if (required) opt->required();
  };

  CLI::App* s = verb("keys", "Enumerate the minimal keys of a Horn CNF", cmd_keys);
  input(s), names(s), enumeration(s);
  s = verb("key-min", "A minimum-size key (exhaustive search)", cmd_key_min);
  input(s), names(s), subset_budget(s);
  s = verb("unique-hg", "Decide whether a Sperner hypergraph is unique key", cmd_unique_hg);
  input(s), names(s), dual_limit(s);
  s = verb("unique-graph", "Decide whether a graph is unique key", cmd_unique_graph);
  input(s), names(s);
  s->add_option("--max-sets", o.max_sets, "Cap on maximal independent sets scanned (env HORNKEYS_MAX_SETS)");
  s = verb("dual", "Minimal transversals of a Sperner hypergraph", cmd_dual);
  input(s), output(s), dual_limit(s);
  s = verb("phi-b", "Key Horn CNF of a Sperner hypergraph", cmd_phi_b);
  input(s), output(s);
  s = verb("sat2graph", "Graph whose unique-keyness encodes unsatisfiability of a CNF", cmd_sat2graph);
  input(s), output(s);
  s = verb("tss2horn", "Horn CNF whose keys are the target sets of a threshold graph", cmd_tss2horn);
  input(s), output(s), threshold_guard(s);
  s = verb("horn2tss", "Threshold graph whose target sets track the keys of a Horn CNF", cmd_horn2tss);
  input(s), output(s);
  s->add_option("--roles", o.roles, "Role map path (default: <output or input>.roles)");
  s = verb("tss-lift", "Map a target set of horn2tss's graph back to a key", cmd_tss_lift);
  input(s), names(s), seed_set(s, true);
  s = verb("tss-enum", "Enumerate minimal target sets", cmd_tss_enum);
  input(s), names(s), enumeration(s), threshold_guard(s);
  s = verb("tss-activate", "Run the activation process from a seed set", cmd_tss_activate);
  input(s), names(s), seed_set(s, true);
  s = verb("tss-min", "A minimum target set (exhaustive search)", cmd_tss_min);
  input(s), names(s), subset_budget(s);

  s = verb("gen", "Random instance generator", cmd_gen);
  s->add_option("kind", o.kind, "horn | sperner | graph | connected | bipartite | tss | cnf")->required();
  s->add_option("--seed", o.gen.seed, "Random seed")->capture_default_str();
  s->add_option("-n", o.gen.n, "Variables or vertices")->capture_default_str();
  s->add_option("-m", o.gen.m, "Clauses or edges")->capture_default_str();
  s->add_option("--density", o.gen.density, "Edge probability")->capture_default_str()->check(CLI::Range(0.0, 1.0));
  s->add_option("--max-threshold", o.gen.max_threshold, "Largest threshold")->capture_default_str();
  s->add_option("--min-body", o.gen.min_body, "Smallest body or edge")->capture_default_str();
  s->add_option("--max-body", o.gen.max_body, "Largest body or edge")->capture_default_str();
  output(s);

  s = verb("oracle", "Run a brute-force reference implementation", cmd_oracle);
  s->add_option("name", o.oracle,
                "closure | minimal-keys | transversals | mis | unique-key | sat | activate | "
                "target-sets | min-target-set | bonds")
      ->required();
  input(s), names(s), subset_budget(s);
  seed_set(s, false);
  s->add_option("--max-vars", o.max_vars, "Largest universe for 2^n scans (env HORNKEYS_ORACLE_VARS)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  Report report(std::cout, o.json, o.names);
  auto fail = [&](int code, const std::string& what) {
    std::cerr << "hornkeys " << chosen->get_name() << ": " << what << '\n';
    if (o.json) std::cout << json{{"result", nullptr}, {"witness", nullptr}, {"stats", json::object()},
                                  {"error", {{"code", code}, {"message", what}}}}.dump()
                          << '\n';
    return code;
  };
  try {
    const int code = handlers.at(chosen)(report, o);
    report.finish();
    return code;
  } catch (const ResourceError& e) {
    return fail(kResourceError, e.what());
  } catch (const InputError& e) {
    return fail(kInputError, e.what());
  } catch (const ContractError& e) {
    return fail(kInputError, e.what());
  }
}
