#include "hornkeys/hypergraph.hpp"

#include <algorithm>

#include "hornkeys/errors.hpp"

namespace hornkeys {

namespace {

void sort_canonical(SetFamily& f) {
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
}

}  // namespace

SpernerHypergraph::SpernerHypergraph(Universe universe, SetFamily edges)
    : universe_(std::move(universe)), edges_(std::move(edges)) {
  for (const auto& e : edges_)
    if (e.universe() != universe_.size())
      throw InputError("edge ranges over " + std::to_string(e.universe()) +
                       " vertices, hypergraph has " + std::to_string(universe_.size()));
  sort_canonical(edges_);
  if (!check_sperner(edges_)) throw InputError("edge family is not an antichain");
}

void Graph::add_edge(Var u, Var v) {
  if (u >= size() || v >= size())
    throw InputError("edge endpoint out of range 1.." + std::to_string(size()));
  if (u == v) throw InputError("self-loop on vertex " + std::to_string(u + 1));
  adj_[u].insert(v);
  adj_[v].insert(u);
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t deg = 0;
  for (const auto& a : adj_) deg += a.size();
  return deg / 2;
}

std::vector<std::pair<Var, Var>> Graph::edges() const {
  std::vector<std::pair<Var, Var>> out;
  for (Var u = 0; u < size(); ++u)
    for (Var v = adj_[u].next(u + 1); v != VarSet::npos; v = adj_[u].next(v + 1))
      out.emplace_back(u, v);
  return out;
}

bool check_sperner(const SetFamily& edges) {
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = 0; j < edges.size(); ++j)
      if (i != j && edges[i].is_subset_of(edges[j]) && edges[i] != edges[j]) return false;
  // Repeated sets are treated as one edge, not as containment.
  return true;
}

SetFamily minimal_members(SetFamily edges) {
  sort_canonical(edges);
  std::stable_sort(edges.begin(), edges.end(),
                   [](const VarSet& a, const VarSet& b) { return a.size() < b.size(); });
  SetFamily kept;
  for (auto& e : edges) {
    bool dominated = false;
    for (const auto& k : kept)
      if (k.is_subset_of(e)) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(std::move(e));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

SpernerHypergraph minimalize(std::size_t n, SetFamily edges) {
  return SpernerHypergraph(Universe(n), minimal_members(std::move(edges)));
}

SpernerHypergraph restrict_to(const SpernerHypergraph& b, const VarSet& s) {
  SetFamily out;
  for (const auto& e : b.edges())
    if (e.is_subset_of(s)) out.push_back(e);
  return SpernerHypergraph(b.universe(), std::move(out));
}

SpernerHypergraph project(const SpernerHypergraph& b, const VarSet& s) {
  SetFamily traces;
  traces.reserve(b.edge_count());
  for (const auto& e : b.edges()) traces.push_back(e & s);
  return SpernerHypergraph(b.universe(), minimal_members(std::move(traces)));
}

bool is_transversal(const SpernerHypergraph& b, const VarSet& t) {
  for (const auto& e : b.edges())
    if (!e.intersects(t)) return false;
  return true;
}

bool is_independent(const SpernerHypergraph& b, const VarSet& s) {
  for (const auto& e : b.edges())
    if (e.is_subset_of(s)) return false;
  return true;
}

SpernerHypergraph minimal_transversals(const SpernerHypergraph& b, std::size_t limit) {
  if (b.is_empty_edge_family())
    throw InputError("the family {∅} has no transversals to dualize");
  const std::size_t n = b.size();
  SetFamily partial{VarSet(n)};
  for (const auto& edge : b.edges()) {
    SetFamily grown;
    for (const auto& t : partial) {
      if (t.intersects(edge)) {
        grown.push_back(t);
        continue;
      }
      edge.for_each([&](Var v) {
        VarSet u = t;
        u.insert(v);
        grown.push_back(std::move(u));
      });
      if (grown.size() > limit)
        throw ResourceError("dualization exceeded " + std::to_string(limit) +
                                " intermediate sets",
                            grown.size());
    }
    partial = minimal_members(std::move(grown));
  }
  return SpernerHypergraph(b.universe(), std::move(partial));
}

VarSet support_union(const SpernerHypergraph& b) {
  VarSet u(b.size());
  for (const auto& e : b.edges()) u |= e;
  return u;
}

HornCnf key_horn_cnf(const SpernerHypergraph& b) {
  HornCnf cnf(b.universe());
  for (const auto& e : b.edges())
    for (Var v = 0; v < b.size(); ++v)
      if (!e.contains(v)) cnf.add(e, v);
  return cnf;
}

Graph as_graph(const SpernerHypergraph& b) {
  Graph g(b.universe());
  for (const auto& e : b.edges()) {
    if (e.size() != 2)
      throw InputError("hyperedge of size " + std::to_string(e.size()) +
                       " in what should be a graph");
    const Var u = e.first();
    g.add_edge(u, e.next(u + 1));
  }
  return g;
}

SpernerHypergraph as_hypergraph(const Graph& g) {
  SetFamily edges;
  for (auto [u, v] : g.edges()) edges.push_back(VarSet(g.size(), {u, v}));
  return SpernerHypergraph(g.universe(), std::move(edges));
}

MaximalIndependentSets::MaximalIndependentSets(const Graph& g) : g_(&g) {
  stack_.push_back({0, VarSet(g.size())});
}

bool MaximalIndependentSets::maximal_in_prefix(const VarSet& s, std::size_t prefix) const {
  for (Var u = 0; u < prefix; ++u)
    if (!s.contains(u) && !g_->neighbors(u).intersects(s)) return false;
  return true;
}

VarSet MaximalIndependentSets::greedy_completion(VarSet s, std::size_t prefix) const {
  for (Var u = 0; u < prefix; ++u)
    if (!s.contains(u) && !g_->neighbors(u).intersects(s)) s.insert(u);
  return s;
}

std::optional<VarSet> MaximalIndependentSets::next() {
  const std::size_t n = g_->size();
  while (!stack_.empty()) {
    Node node = std::move(stack_.back());
    stack_.pop_back();
    if (node.depth == n) return std::move(node.set);

    const Var v = node.depth;
    const VarSet& nv = g_->neighbors(v);
    if (!nv.intersects(node.set)) {
      node.set.insert(v);
      stack_.push_back({v + 1, std::move(node.set)});
      continue;
    }
    VarSet swapped = node.set - nv;
    const VarSet base = swapped;
    swapped.insert(v);
    const bool canonical = maximal_in_prefix(swapped, v + 1) &&
                           greedy_completion(base, v) == node.set;
    // The unchanged set is explored first.
    if (canonical) stack_.push_back({v + 1, std::move(swapped)});
    stack_.push_back({v + 1, std::move(node.set)});
  }
  return std::nullopt;
}

SetFamily maximal_independent_sets(const Graph& g) {
  SetFamily out;
  MaximalIndependentSets it(g);
  while (auto s = it.next()) out.push_back(std::move(*s));
  return out;
}

}  // namespace hornkeys
