#include "hornkeys/uniqueness.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "hornkeys/errors.hpp"

namespace hornkeys {

namespace {

bool transversal_of(const SetFamily& edges, const VarSet& t) {
  for (const auto& e : edges)
    if (!e.intersects(t)) return false;
  return true;
}

// A distinct minimal transversal inside T + v must contain v and skip some
// u in T, so it exists iff some T - u + v is still a transversal.
bool exchange_witness_holds(const SpernerHypergraph& b, const Witness& w) {
  const VarSet& t = w.set;
  if (t.contains(w.vertex) || !transversal_of(b.edges(), t)) return false;
  bool ok = true;
  t.for_each([&](Var u) {
    VarSet smaller = t;
    smaller.erase(u);
    if (transversal_of(b.edges(), smaller)) ok = false;  // T not minimal
    smaller.insert(w.vertex);
    if (transversal_of(b.edges(), smaller)) ok = false;  // exchange exists
  });
  return ok;
}

bool individual_witness_holds(const Graph& g, const Witness& w) {
  const VarSet& ind = w.set;
  if (!ind.contains(w.vertex)) return false;
  for (Var u = 0; u < g.size(); ++u) {
    const bool inside = ind.contains(u);
    const bool blocked = g.neighbors(u).intersects(ind);
    if (inside && blocked) return false;     // not independent
    if (!inside && !blocked) return false;   // not maximal
  }
  bool ok = true;
  g.neighbors(w.vertex).for_each([&](Var u) {
    if ((g.neighbors(u) & ind).size() == 1) ok = false;
  });
  return ok;
}

}  // namespace

UniquenessResult is_unique_key_hypergraph(const SpernerHypergraph& b,
                                          std::size_t dual_limit) {
  if (b.empty()) throw InputError("unique-key test needs at least one hyperedge");
  const SpernerHypergraph dual = minimal_transversals(b, dual_limit);
  const SetFamily& ts = dual.edges();
  UniquenessResult res;
  for (const auto& t : ts) {
    ++res.examined;
    for (Var v = 0; v < b.size(); ++v) {
      if (t.contains(v)) continue;
      VarSet widened = t;
      widened.insert(v);
      const bool exchange = std::any_of(ts.begin(), ts.end(), [&](const VarSet& other) {
        return other != t && other.is_subset_of(widened);
      });
      if (exchange) continue;
      Witness w{Witness::Kind::TransversalPairMissing, t, v};
      if (!exchange_witness_holds(b, w))
        throw std::logic_error("unique-key witness failed re-validation");
      res.unique = false;
      res.witness = std::move(w);
      return res;
    }
  }
  return res;
}

std::vector<HornClause> addable_clauses(const SpernerHypergraph& b, std::size_t max_vars) {
  const std::size_t n = b.size();
  if (n > max_vars || n > 63)
    throw ResourceError("addable-clause scan over 2^" + std::to_string(n) +
                            " bodies exceeds the " + std::to_string(max_vars) +
                            "-variable guard",
                        0);
  const HornCnf phi = key_horn_cnf(b);
  const ClosureEngine engine(phi);
  std::vector<HornClause> out;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const VarSet body = VarSet::from_mask(n, mask);
    if (!is_independent(b, body)) continue;
    const VarSet rest = body.complement();
    const VarSet reach = support_union(project(b, rest));
    const VarSet implied = engine.closure(body);
    for (Var v = 0; v < n; ++v)
      if (!implied.contains(v) && !reach.contains(v)) out.push_back({body, v});
  }
  std::sort(out.begin(), out.end());
  return out;
}

UniquenessResult is_unique_key_graph(const Graph& g, std::size_t max_sets) {
  UniquenessResult res;
  MaximalIndependentSets sets(g);
  while (auto ind = sets.next()) {
    ++res.examined;
    if (max_sets && res.examined > max_sets)
      throw ResourceError("maximal independent set scan exceeded " +
                              std::to_string(max_sets) + " sets",
                          max_sets);
    VarSet covered(g.size());
    for (Var u = 0; u < g.size(); ++u) {
      if (ind->contains(u)) continue;
      const VarSet hit = g.neighbors(u) & *ind;
      if (hit.size() == 1) covered |= hit;
    }
    const VarSet lonely = *ind - covered;
    if (lonely.empty()) continue;
    Witness w{Witness::Kind::NoIndividualNeighbor, std::move(*ind), lonely.first()};
    if (!individual_witness_holds(g, w))
      throw std::logic_error("individual-neighbor witness failed re-validation");
    res.unique = false;
    res.witness = std::move(w);
    return res;
  }
  return res;
}

std::optional<std::vector<int>> two_coloring(const Graph& g) {
  std::vector<int> color(g.size(), -1);
  std::vector<Var> queue;
  for (Var s = 0; s < g.size(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    queue.assign(1, s);
    while (!queue.empty()) {
      const Var u = queue.back();
      queue.pop_back();
      for (Var v : g.neighbors(u).elements()) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

BipartiteCheck is_unique_key_bipartite(const Graph& g) {
  BipartiteCheck res;
  bool isolated = false;
  for (Var v = 0; v < g.size(); ++v) isolated = isolated || g.degree(v) == 0;
  if (!isolated && two_coloring(g)) {
    res.fast_path = true;
    res.unique = true;
    for (Var v = 0; v < g.size(); ++v) res.unique = res.unique && g.degree(v) == 1;
    if (res.unique) return res;
    // The matching test decides; the general scan only supplies a certificate.
    auto general = is_unique_key_graph(g);
    if (general.unique) throw std::logic_error("bipartite fast path disagrees with general check");
    res.witness = std::move(general.witness);
    return res;
  }
  auto general = is_unique_key_graph(g);
  res.unique = general.unique;
  res.witness = std::move(general.witness);
  return res;
}

Graph build_sat_graph(const SignedCnf& cnf) {
  const SatGraphLayout at{cnf.vars, cnf.clauses.size()};
  std::vector<std::string> labels(at.vertex_count());
  for (std::size_t i = 0; i < cnf.vars; ++i) {
    labels[at.literal(i, true)] = "x" + std::to_string(i + 1);
    labels[at.literal(i, false)] = "nx" + std::to_string(i + 1);
    labels[at.guard(i)] = "y" + std::to_string(i + 1);
  }
  for (std::size_t j = 0; j < at.clauses; ++j) labels[at.clause(j)] = "C" + std::to_string(j + 1);
  labels[at.hub()] = "z";

  Graph g(Universe(at.vertex_count(), std::move(labels)));
  for (std::size_t i = 0; i < cnf.vars; ++i) {
    g.add_edge(at.literal(i, true), at.literal(i, false));
    g.add_edge(at.literal(i, true), at.guard(i));
    g.add_edge(at.literal(i, false), at.guard(i));
  }
  for (std::size_t j = 0; j < at.clauses; ++j) {
    for (std::size_t k = j + 1; k < at.clauses; ++k) g.add_edge(at.clause(j), at.clause(k));
    g.add_edge(at.clause(j), at.hub());
    const auto& lits = cnf.clauses[j];
    if (lits.empty()) throw InputError("clause " + std::to_string(j + 1) + " is empty");
    for (int lit : lits) {
      const auto var = static_cast<std::size_t>(std::abs(lit));
      if (lit == 0 || var > cnf.vars)
        throw InputError("clause " + std::to_string(j + 1) + " has literal " +
                         std::to_string(lit) + " outside 1.." + std::to_string(cnf.vars));
      g.add_edge(at.clause(j), at.literal(var - 1, lit > 0));
    }
  }
  return g;
}

}  // namespace hornkeys
