#include "hornkeys/keygen.hpp"

#include <algorithm>
#include <map>

#include "hornkeys/errors.hpp"

namespace hornkeys {

VarSet first_minimal_key(const HornCnf& cnf) {
  return minimize_key(cnf, VarSet::full(cnf.size()));
}

std::vector<VarSet> neighbors(const ClosureEngine& engine, const VarSet& key,
                              std::size_t* candidates) {
  const HornCnf& cnf = engine.cnf();
  std::vector<VarSet> out;
  std::unordered_set<VarSet> seen;
  key.for_each([&](Var v) {
    for (const auto& clause : cnf.clauses()) {
      if (clause.head != v) continue;
      VarSet s = key;
      s.erase(v);
      s |= clause.body;
      if (candidates) ++*candidates;
      VarSet k = minimize_key(engine, s);
      if (seen.insert(k).second) out.push_back(std::move(k));
    }
  });
  return out;
}

std::vector<VarSet> neighbors(const HornCnf& cnf, const VarSet& key) {
  const ClosureEngine engine(cnf);
  if (!engine.is_key(key)) throw ContractError("neighbors: argument is not a key");
  return neighbors(engine, key);
}

KeyEnumerator::KeyEnumerator(const HornCnf& cnf) : engine_(cnf) {}

std::optional<VarSet> KeyEnumerator::next() {
  if (!started_) {
    started_ = true;
    VarSet first = minimize_key(engine_, VarSet::full(engine_.cnf().size()));
    visited_.insert(first);
    pending_.push_back(std::move(first));
  }
  if (pending_.empty()) return std::nullopt;

  VarSet top = std::move(pending_.back());
  pending_.pop_back();
  for (auto& k : neighbors(engine_, top, &stats_.candidates))
    if (visited_.insert(k).second) pending_.push_back(std::move(k));

  const std::size_t now = engine_.calls();
  if (stats_.keys == 0)
    stats_.first_delay_closures = now;
  else
    stats_.max_delay_closures = std::max(stats_.max_delay_closures, now - mark_);
  mark_ = now;
  stats_.closures = now;
  ++stats_.keys;
  return top;
}

EnumerationStats enumerate_minimal_keys(const HornCnf& cnf,
                                        const std::function<void(const VarSet&)>& sink,
                                        std::size_t limit) {
  KeyEnumerator it(cnf);
  while (!limit || it.stats().keys < limit) {
    auto k = it.next();
    if (!k) return it.stats();
    sink(*k);
  }
  EnumerationStats st = it.stats();
  st.truncated = true;
  return st;
}

std::vector<VarSet> minimal_keys(const HornCnf& cnf) {
  std::vector<VarSet> out;
  enumerate_minimal_keys(cnf, [&](const VarSet& k) { out.push_back(k); });
  return out;
}

std::size_t KeyGraph::max_out_degree() const {
  std::vector<std::size_t> deg(nodes.size(), 0);
  for (auto [from, to] : arcs) ++deg[from];
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

KeyGraph build_key_graph(const HornCnf& cnf, std::size_t max_keys) {
  KeyGraph g;
  std::map<VarSet, std::size_t> index;
  KeyEnumerator it(cnf);
  while (auto k = it.next()) {
    if (max_keys && g.nodes.size() >= max_keys)
      throw ResourceError("key graph exceeded " + std::to_string(max_keys) + " nodes",
                          g.nodes.size());
    index.emplace(*k, g.nodes.size());
    g.nodes.push_back(std::move(*k));
  }
  const ClosureEngine engine(cnf);
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    for (const auto& k : neighbors(engine, g.nodes[i])) g.arcs.emplace_back(i, index.at(k));
  return g;
}

namespace {

std::size_t reachable_count(std::size_t n, const std::vector<std::vector<std::size_t>>& adj) {
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v : adj[u])
      if (!seen[v]) {
        seen[v] = true;
        ++count;
        stack.push_back(v);
      }
  }
  return count;
}

}  // namespace

bool is_strongly_connected(const KeyGraph& g) {
  const std::size_t n = g.nodes.size();
  if (n <= 1) return true;
  std::vector<std::vector<std::size_t>> fwd(n), bwd(n);
  for (auto [a, b] : g.arcs) {
    fwd[a].push_back(b);
    bwd[b].push_back(a);
  }
  return reachable_count(n, fwd) == n && reachable_count(n, bwd) == n;
}

std::vector<std::size_t> rho_measure(const HornCnf& cnf, const VarSet& k1, const VarSet& k2) {
  check_universe(cnf, k1);
  check_universe(cnf, k2);
  std::vector<std::size_t> rho{(k1 & k2).size()};
  VarSet reached = k2;
  while (reached.size() < cnf.size()) {
    VarSet layer(cnf.size());
    for (const auto& c : cnf.clauses())
      if (!reached.contains(c.head) && c.body.is_subset_of(reached)) layer.insert(c.head);
    if (layer.empty()) throw ContractError("rho_measure: second argument is not a key");
    rho.push_back((layer & k1).size());
    reached |= layer;
  }
  return rho;
}

bool rho_less(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

}  // namespace hornkeys
