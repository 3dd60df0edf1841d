#include "hornkeys/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace hornkeys::gen {

namespace {

using Rng = std::mt19937_64;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::vector<Var> sample(Rng& rng, std::vector<Var> pool, std::size_t k) {
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(std::min(k, pool.size()));
  return pool;
}

}  // namespace

HornCnf random_horn_cnf(const InstanceSeed& p) {
  Rng rng(p.seed);
  HornCnf cnf{Universe(p.n)};
  if (p.n == 0) return cnf;
  for (std::size_t c = 0; c < p.m; ++c) {
    const Var head = uniform(rng, 0, p.n - 1);
    std::vector<Var> others;
    for (Var v = 0; v < p.n; ++v)
      if (v != head) others.push_back(v);
    const std::size_t hi = std::min(p.max_body, others.size());
    const std::size_t lo = std::min(p.min_body, hi);
    cnf.add(VarSet::from_range(p.n, sample(rng, others, uniform(rng, lo, hi))), head);
  }
  return cnf;
}

SpernerHypergraph random_sperner(const InstanceSeed& p) {
  Rng rng(p.seed);
  std::vector<Var> all(p.n);
  std::iota(all.begin(), all.end(), Var{0});
  SetFamily edges;
  const std::size_t count = std::max<std::size_t>(1, uniform(rng, 1, std::max<std::size_t>(1, p.m)));
  const std::size_t hi = std::clamp<std::size_t>(p.max_body, 1, std::max<std::size_t>(1, p.n));
  for (std::size_t i = 0; i < count; ++i)
    edges.push_back(VarSet::from_range(p.n, sample(rng, all, uniform(rng, 1, hi))));
  return minimalize(p.n, std::move(edges));
}

Graph random_graph(const InstanceSeed& p) {
  Rng rng(p.seed);
  Graph g(p.n);
  for (Var u = 0; u < p.n; ++u)
    for (Var v = u + 1; v < p.n; ++v)
      if (coin(rng, p.density)) g.add_edge(u, v);
  return g;
}

Graph random_connected_graph(const InstanceSeed& p) {
  Rng rng(p.seed);
  Graph g(p.n);
  for (Var v = 1; v < p.n; ++v) g.add_edge(v, uniform(rng, 0, v - 1));
  for (Var u = 0; u < p.n; ++u)
    for (Var v = u + 1; v < p.n; ++v)
      if (coin(rng, p.density)) g.add_edge(u, v);
  return g;
}

Graph random_bipartite(const InstanceSeed& p) {
  Rng rng(p.seed);
  Graph g(p.n);
  if (p.n < 2) return g;
  std::vector<int> side(p.n);
  for (auto& s : side) s = coin(rng, 0.5) ? 1 : 0;
  side[0] = 0;
  side[1] = 1;
  std::vector<Var> left, right;
  for (Var v = 0; v < p.n; ++v) (side[v] ? right : left).push_back(v);
  for (Var u : left)
    for (Var v : right)
      if (coin(rng, p.density)) g.add_edge(u, v);
  for (Var v = 0; v < p.n; ++v) {
    if (g.degree(v) > 0) continue;
    const auto& other = side[v] ? left : right;
    g.add_edge(v, other[uniform(rng, 0, other.size() - 1)]);
  }
  return g;
}

ThresholdGraph random_threshold_graph(const InstanceSeed& p) {
  Graph g = random_graph(p);
  Rng rng(p.seed ^ 0x5bd1e995ULL);
  std::vector<std::size_t> t(p.n);
  for (auto& x : t) x = uniform(rng, 1, std::max<std::size_t>(1, p.max_threshold));
  return ThresholdGraph(std::move(g), std::move(t));
}

SignedCnf random_signed_cnf(const InstanceSeed& p) {
  Rng rng(p.seed);
  SignedCnf cnf{p.n, {}};
  std::vector<Var> vars(p.n);
  std::iota(vars.begin(), vars.end(), Var{1});
  const std::size_t hi = std::clamp<std::size_t>(p.max_body, 1, std::max<std::size_t>(1, p.n));
  for (std::size_t j = 0; j < p.m && p.n > 0; ++j) {
    std::vector<int> clause;
    for (Var v : sample(rng, vars, uniform(rng, 1, hi)))
      clause.push_back(coin(rng, 0.5) ? static_cast<int>(v) : -static_cast<int>(v));
    cnf.clauses.push_back(std::move(clause));
  }
  return cnf;
}

}  // namespace hornkeys::gen
