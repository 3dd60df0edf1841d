#include "hornkeys/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>

#include "hornkeys/errors.hpp"

namespace hornkeys::oracle {

namespace {

using Mask = std::uint64_t;

void guard_vars(std::size_t n, std::size_t max_vars, const char* what) {
  if (n > max_vars || n > 63)
    throw ResourceError(std::string(what) + ": 2^" + std::to_string(n) +
                            " scan exceeds the " + std::to_string(std::min<std::size_t>(max_vars, 63)) +
                            "-variable guard",
                        0);
}

Mask full_mask(std::size_t n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

struct MaskClause {
  Mask body;
  std::size_t head;
};

std::vector<MaskClause> to_masks(const HornCnf& cnf) {
  std::vector<MaskClause> out;
  for (const auto& c : cnf.clauses()) out.push_back({c.body.low_word(), c.head});
  return out;
}

Mask saturate(const std::vector<MaskClause>& clauses, Mask s) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& c : clauses)
      if ((c.body & ~s) == 0 && !((s >> c.head) & 1)) {
        s |= Mask{1} << c.head;
        changed = true;
      }
  }
  return s;
}

SetFamily to_family(std::size_t n, std::vector<Mask> masks) {
  SetFamily out;
  for (Mask m : masks) out.push_back(VarSet::from_mask(n, m));
  std::sort(out.begin(), out.end());
  return out;
}

// Minimal members of an upward-closed predicate by single-element removal.
template <class Pred>
std::vector<Mask> minimal_true_masks(std::size_t n, Pred&& holds) {
  std::vector<Mask> out;
  for (Mask m = 0; m <= full_mask(n); ++m) {
    if (!holds(m)) continue;
    bool minimal = true;
    for (std::size_t v = 0; v < n && minimal; ++v)
      if (((m >> v) & 1) && holds(m & ~(Mask{1} << v))) minimal = false;
    if (minimal) out.push_back(m);
    if (m == full_mask(n)) break;
  }
  return out;
}

std::vector<Mask> edge_masks(const SpernerHypergraph& b) {
  std::vector<Mask> out;
  for (const auto& e : b.edges()) out.push_back(e.low_word());
  return out;
}

std::vector<Mask> adjacency(const Graph& g) {
  std::vector<Mask> adj(g.size());
  for (Var v = 0; v < g.size(); ++v) adj[v] = g.neighbors(v).low_word();
  return adj;
}

}  // namespace

Mask naive_closure(const HornCnf& cnf, Mask seed) { return saturate(to_masks(cnf), seed); }

SetFamily bf_minimal_keys(const HornCnf& cnf, std::size_t max_vars) {
  const std::size_t n = cnf.size();
  guard_vars(n, max_vars, "bf_minimal_keys");
  const auto clauses = to_masks(cnf);
  const Mask all = full_mask(n);
  return to_family(n, minimal_true_masks(n, [&](Mask m) { return saturate(clauses, m) == all; }));
}

SetFamily bf_minimal_transversals(const SpernerHypergraph& b, std::size_t max_vars) {
  const std::size_t n = b.size();
  guard_vars(n, max_vars, "bf_minimal_transversals");
  const auto edges = edge_masks(b);
  return to_family(n, minimal_true_masks(n, [&](Mask m) {
                     for (Mask e : edges)
                       if (!(e & m)) return false;
                     return true;
                   }));
}

SetFamily bf_maximal_independent_sets(const Graph& g, std::size_t max_vars) {
  const std::size_t n = g.size();
  guard_vars(n, max_vars, "bf_maximal_independent_sets");
  const auto adj = adjacency(g);
  auto independent = [&](Mask m) {
    for (std::size_t v = 0; v < n; ++v)
      if (((m >> v) & 1) && (adj[v] & m)) return false;
    return true;
  };
  std::vector<Mask> out;
  for (Mask m = 0; m <= full_mask(n); ++m) {
    if (independent(m)) {
      bool maximal = true;
      for (std::size_t v = 0; v < n && maximal; ++v)
        if (!((m >> v) & 1) && independent(m | (Mask{1} << v))) maximal = false;
      if (maximal) out.push_back(m);
    }
    if (m == full_mask(n)) break;
  }
  return to_family(n, std::move(out));
}

bool bf_unique_key(const SpernerHypergraph& b, std::size_t max_vars) {
  const std::size_t n = b.size();
  guard_vars(n, max_vars, "bf_unique_key");
  const Mask all = full_mask(n);
  const auto edges = edge_masks(b);

  std::vector<MaskClause> phi;
  for (Mask e : edges)
    for (std::size_t v = 0; v < n; ++v)
      if (!((e >> v) & 1)) phi.push_back({e, v});

  auto independent = [&](Mask m) {
    for (Mask e : edges)
      if ((e & m) == e) return false;
    return true;
  };
  std::vector<Mask> maximal;
  for (Mask m = 0; m <= all; ++m) {
    if (independent(m)) {
      bool top = true;
      for (std::size_t v = 0; v < n && top; ++v)
        if (!((m >> v) & 1) && independent(m | (Mask{1} << v))) top = false;
      if (top) maximal.push_back(m);
    }
    if (m == all) break;
  }

  for (Mask body = 0; body <= all; ++body) {
    const Mask implied = saturate(phi, body);
    for (std::size_t v = 0; v < n; ++v) {
      if ((implied >> v) & 1) continue;
      auto extended = phi;
      extended.push_back({body, v});
      const bool new_key = std::any_of(maximal.begin(), maximal.end(),
                                       [&](Mask w) { return saturate(extended, w) == all; });
      if (!new_key) return false;  // a second function with the same minimal keys
    }
    if (body == all) break;
  }
  return true;
}

bool bf_satisfiable(const SignedCnf& cnf, std::size_t max_vars) {
  guard_vars(cnf.vars, max_vars, "bf_satisfiable");
  for (Mask a = 0; a <= full_mask(cnf.vars); ++a) {
    const bool sat = std::all_of(cnf.clauses.begin(), cnf.clauses.end(), [&](const auto& cl) {
      return std::any_of(cl.begin(), cl.end(), [&](int lit) {
        const bool val = (a >> (std::abs(lit) - 1)) & 1;
        return lit > 0 ? val : !val;
      });
    });
    if (sat) return true;
    if (a == full_mask(cnf.vars)) break;
  }
  return false;
}

namespace {

Mask spread(const std::vector<Mask>& adj, const std::vector<std::size_t>& t, Mask seed) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v = 0; v < adj.size(); ++v)
      if (!((seed >> v) & 1) && static_cast<std::size_t>(std::popcount(adj[v] & seed)) >= t[v]) {
        seed |= Mask{1} << v;
        changed = true;
      }
  }
  return seed;
}

}  // namespace

Mask naive_activate(const ThresholdGraph& tg, Mask seed) {
  return spread(adjacency(tg.graph()), tg.thresholds(), seed);
}

SetFamily bf_minimal_target_sets(const ThresholdGraph& tg, std::size_t max_vars) {
  const std::size_t n = tg.size();
  guard_vars(n, max_vars, "bf_minimal_target_sets");
  const Mask all = full_mask(n);
  const auto adj = adjacency(tg.graph());
  return to_family(n, minimal_true_masks(n, [&](Mask m) {
                     return spread(adj, tg.thresholds(), m) == all;
                   }));
}

VarSet bf_min_target_set(const ThresholdGraph& tg, std::size_t budget) {
  const std::size_t n = tg.size();
  if (n > 64) throw ResourceError("bf_min_target_set handles at most 64 vertices", 0);
  const Mask all = full_mask(n);
  const auto adj = adjacency(tg.graph());
  std::size_t scanned = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    // k-subsets as ascending index tuples, in lexicographic order.
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      if (++scanned > budget)
        throw ResourceError("bf_min_target_set exceeded " + std::to_string(budget) + " subsets",
                            scanned - 1);
      Mask s = 0;
      for (std::size_t i : idx) s |= Mask{1} << i;
      if (spread(adj, tg.thresholds(), s) == all) return VarSet::from_mask(n, s);
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  throw std::logic_error("no target set found, not even V");
}

SpernerHypergraph graphic_matroid_cuts(const Graph& h, std::size_t max_edges) {
  const auto edges = h.edges();
  const std::size_t m = edges.size();
  guard_vars(m, max_edges, "graphic_matroid_cuts");
  const std::size_t n = h.size();

  auto components = [&](Mask removed) {
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::size_t count = n;
    for (std::size_t i = 0; i < m; ++i) {
      if ((removed >> i) & 1) continue;
      const std::size_t a = find(edges[i].first), b = find(edges[i].second);
      if (a != b) {
        parent[a] = b;
        --count;
      }
    }
    return count;
  };
  const std::size_t base = components(0);
  auto cuts = minimal_true_masks(m, [&](Mask removed) { return components(removed) > base; });
  return SpernerHypergraph(Universe(m), to_family(m, std::move(cuts)));
}

}  // namespace hornkeys::oracle
