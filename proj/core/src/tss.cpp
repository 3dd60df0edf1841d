#include "hornkeys/tss.hpp"

#include <algorithm>
#include <string>

#include "hornkeys/errors.hpp"

namespace hornkeys {

namespace {

// Visits the k-subsets of `items` in lexicographic order until `f` returns true.
template <class F>
bool for_each_combination(const std::vector<Var>& items, std::size_t k, F&& f) {
  const std::size_t n = items.size();
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<Var> pick(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) pick[i] = items[idx[i]];
    if (f(pick)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  long double r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    if (r > static_cast<long double>(cap)) return cap + 1;
  }
  return static_cast<std::size_t>(r + 0.5L);
}

template <class IsGood>
VarSet smallest_good_subset(std::size_t n, std::size_t budget, IsGood&& good) {
  std::vector<Var> all(n);
  for (Var v = 0; v < n; ++v) all[v] = v;
  std::size_t scanned = 0;
  VarSet found(n);
  for (std::size_t k = 0; k <= n; ++k) {
    const bool hit = for_each_combination(all, k, [&](const std::vector<Var>& pick) {
      if (++scanned > budget)
        throw ResourceError("minimum search exceeded " + std::to_string(budget) + " subsets",
                            scanned - 1);
      VarSet s = VarSet::from_range(n, pick);
      if (!good(s)) return false;
      found = std::move(s);
      return true;
    });
    if (hit) return found;
  }
  throw std::logic_error("no subset qualified, not even the full set");
}

}  // namespace

ThresholdGraph::ThresholdGraph(Graph graph, std::vector<std::size_t> thresholds)
    : graph_(std::move(graph)), thresholds_(std::move(thresholds)) {
  if (thresholds_.size() != graph_.size())
    throw InputError("expected " + std::to_string(graph_.size()) + " thresholds, got " +
                     std::to_string(thresholds_.size()));
  for (Var v = 0; v < thresholds_.size(); ++v)
    if (thresholds_[v] == 0)
      throw InputError("vertex " + graph_.universe().name(v) + " has threshold 0");
}

VarSet activate(const ThresholdGraph& tg, const VarSet& seed) {
  const Graph& g = tg.graph();
  if (seed.universe() != g.size()) throw InputError("seed set over the wrong vertex count");
  VarSet active = seed;
  while (true) {
    VarSet fresh(g.size());
    for (Var v = 0; v < g.size(); ++v)
      if (!active.contains(v) && (g.neighbors(v) & active).size() >= tg.threshold(v))
        fresh.insert(v);
    if (fresh.empty()) return active;
    active |= fresh;
  }
}

bool is_target_set(const ThresholdGraph& tg, const VarSet& s) {
  return activate(tg, s).size() == tg.size();
}

HornCnf tss_to_horn(const ThresholdGraph& tg, const ThresholdGuard& guard) {
  const Graph& g = tg.graph();
  std::size_t planned = 0;
  for (Var v = 0; v < g.size(); ++v) {
    if (tg.threshold(v) > guard.max_threshold)
      throw ResourceError("vertex " + g.universe().name(v) + " has threshold " +
                              std::to_string(tg.threshold(v)) + " above the guard " +
                              std::to_string(guard.max_threshold),
                          planned);
    planned += binomial_capped(g.degree(v), tg.threshold(v), guard.max_clauses);
    if (planned > guard.max_clauses)
      throw ResourceError("threshold CNF would exceed " + std::to_string(guard.max_clauses) +
                              " clauses (at vertex " + g.universe().name(v) + ")",
                          planned);
  }
  HornCnf cnf(g.universe());
  for (Var v = 0; v < g.size(); ++v)
    for_each_combination(g.neighbors(v).elements(), tg.threshold(v),
                         [&](const std::vector<Var>& body) {
                           cnf.add(VarSet::from_range(g.size(), body), v);
                           return false;
                         });
  return cnf;
}

GadgetGraph horn_to_tss(const HornCnf& cnf) {
  const std::size_t n = cnf.size();
  std::size_t total = n;
  for (std::size_t c = 0; c < cnf.clause_count(); ++c) {
    const auto& clause = cnf.clauses()[c];
    if (clause.body.empty())
      throw InputError("clause " + std::to_string(c + 1) +
                       " has an empty body; saturate unit clauses before reducing");
    total += 4 * clause.body.size() + 5;
  }

  std::vector<GadgetRole> roles(total);
  std::vector<std::string> labels(total);
  std::vector<std::size_t> thresholds(total, 1);
  std::vector<std::pair<Var, Var>> edges;
  for (Var v = 0; v < n; ++v) {
    roles[v] = {GadgetRole::Kind::Original, 0, v, false};
    labels[v] = cnf.universe().name(v);
  }

  Var next = n;
  for (std::size_t c = 0; c < cnf.clause_count(); ++c) {
    const auto& clause = cnf.clauses()[c];
    const std::string tag = std::to_string(c + 1);
    const Var hub = next++;
    roles[hub] = {GadgetRole::Kind::Hub, c, clause.head, true};
    labels[hub] = "p" + tag;
    thresholds[hub] = clause.body.size();

    // from -> x -> {y, z} -> w -> to, with w needing both y and z.
    auto chain = [&](Var var, bool head_side, Var from, Var to) {
      const Var x = next++, y = next++, z = next++, w = next++;
      const std::string suffix = tag + "." + cnf.universe().name(var);
      roles[x] = {GadgetRole::Kind::X, c, var, head_side};
      roles[y] = {GadgetRole::Kind::Y, c, var, head_side};
      roles[z] = {GadgetRole::Kind::Z, c, var, head_side};
      roles[w] = {GadgetRole::Kind::W, c, var, head_side};
      labels[x] = "x" + suffix;
      labels[y] = "y" + suffix;
      labels[z] = "z" + suffix;
      labels[w] = "w" + suffix;
      thresholds[w] = 2;
      edges.insert(edges.end(), {{from, x}, {x, y}, {x, z}, {y, w}, {z, w}, {w, to}});
    };
    clause.body.for_each([&](Var a) { chain(a, false, a, hub); });
    chain(clause.head, true, hub, clause.head);
  }

  Universe universe(total);
  try {
    universe = Universe(total, std::move(labels));
  } catch (const InputError&) {
    // Variable labels collide with gadget names; fall back to numeric ids.
  }
  Graph g(std::move(universe));
  for (auto [u, v] : edges) g.add_edge(u, v);
  return {ThresholdGraph(std::move(g), std::move(thresholds)), std::move(roles)};
}

VarSet lift_target_set_to_key(const HornCnf& cnf, const GadgetGraph& gadget, const VarSet& s) {
  if (!is_target_set(gadget.graph, s))
    throw ContractError("lift_target_set_to_key: seed is not a target set of the gadget graph");
  VarSet key(cnf.size());
  s.for_each([&](Var u) {
    const GadgetRole& r = gadget.roles[u];
    key.insert(r.kind == GadgetRole::Kind::Hub ? cnf.clauses()[r.clause].head : r.var);
  });
  if (!is_key(cnf, key) || key.size() > s.size())
    throw std::logic_error("lifted set is not a key of at most the seed's size");
  return key;
}

EnumerationStats enumerate_minimal_target_sets(const ThresholdGraph& tg,
                                               const std::function<void(const VarSet&)>& sink,
                                               std::size_t limit, const ThresholdGuard& guard) {
  const HornCnf psi = tss_to_horn(tg, guard);
  return enumerate_minimal_keys(psi, sink, limit);
}

VarSet minimum_key(const HornCnf& cnf, std::size_t budget) {
  const ClosureEngine engine(cnf);
  return smallest_good_subset(cnf.size(), budget,
                              [&](const VarSet& s) { return engine.is_key(s); });
}

VarSet minimum_target_set(const ThresholdGraph& tg, std::size_t budget) {
  return smallest_good_subset(tg.size(), budget,
                              [&](const VarSet& s) { return is_target_set(tg, s); });
}

}  // namespace hornkeys
