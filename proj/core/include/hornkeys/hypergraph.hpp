#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hornkeys/horn.hpp"
#include "hornkeys/varset.hpp"

namespace hornkeys {

/// Default cap on intermediate family size during dualization.
inline constexpr std::size_t kDefaultDualLimit = 1'000'000;

/// An antichain of subsets of {0..n-1}, edges kept in canonical order.
///
/// The family {∅} is representable (it is what projecting onto a
/// non-transversal yields) but dualization rejects it.
class SpernerHypergraph {
public:
  SpernerHypergraph() = default;
  explicit SpernerHypergraph(Universe universe) : universe_(std::move(universe)) {}
  /// Throws InputError if `edges` is not an antichain or a set ranges over the
  /// wrong universe. Duplicates are collapsed.
  SpernerHypergraph(Universe universe, SetFamily edges);

  std::size_t size() const noexcept { return universe_.size(); }
  const Universe& universe() const noexcept { return universe_; }
  const SetFamily& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  bool is_empty_edge_family() const noexcept {
    return edges_.size() == 1 && edges_.front().empty();
  }

  friend bool operator==(const SpernerHypergraph& a, const SpernerHypergraph& b) {
    return a.universe_.size() == b.universe_.size() && a.edges_ == b.edges_;
  }

private:
  Universe universe_;
  SetFamily edges_;
};

/// Undirected simple graph on {0..n-1}.
class Graph {
public:
  Graph() = default;
  explicit Graph(std::size_t n) : universe_(n), adj_(n, VarSet(n)) {}
  explicit Graph(Universe universe)
      : universe_(std::move(universe)), adj_(universe_.size(), VarSet(universe_.size())) {}

  /// Throws InputError on self-loops or out-of-range endpoints. Parallel
  /// edges are ignored.
  void add_edge(Var u, Var v);

  std::size_t size() const noexcept { return universe_.size(); }
  const Universe& universe() const noexcept { return universe_; }
  const VarSet& neighbors(Var v) const noexcept { return adj_[v]; }
  bool adjacent(Var u, Var v) const noexcept { return adj_[u].contains(v); }
  std::size_t degree(Var v) const noexcept { return adj_[v].size(); }
  std::size_t edge_count() const noexcept;
  /// Edges as (u, v) with u < v, lexicographic.
  std::vector<std::pair<Var, Var>> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.size() == b.size() && a.adj_ == b.adj_;
  }

private:
  Universe universe_;
  std::vector<VarSet> adj_;
};

bool check_sperner(const SetFamily& edges);

/// Inclusion-minimal members, deduplicated, canonical order.
SetFamily minimal_members(SetFamily edges);
SpernerHypergraph minimalize(std::size_t n, SetFamily edges);

/// Edges contained in s.
SpernerHypergraph restrict_to(const SpernerHypergraph& b, const VarSet& s);
/// Inclusion-minimal traces s ∩ B; {∅} when s misses some edge.
SpernerHypergraph project(const SpernerHypergraph& b, const VarSet& s);

bool is_transversal(const SpernerHypergraph& b, const VarSet& t);
/// No edge lies inside s.
bool is_independent(const SpernerHypergraph& b, const VarSet& s);

/// Exact dual by sequential edge-by-edge multiplication with minimalization.
/// Throws ResourceError once an intermediate family exceeds `limit` sets and
/// InputError on the family {∅}.
SpernerHypergraph minimal_transversals(const SpernerHypergraph& b,
                                       std::size_t limit = kDefaultDualLimit);

VarSet support_union(const SpernerHypergraph& b);

/// Key Horn CNF: B -> v for every edge B (canonical order) and every v
/// outside B (ascending).
HornCnf key_horn_cnf(const SpernerHypergraph& b);

/// Views a 2-uniform hypergraph as a graph; throws InputError otherwise.
Graph as_graph(const SpernerHypergraph& b);
SpernerHypergraph as_hypergraph(const Graph& g);

/// Polynomial-delay, polynomial-space enumeration of the maximal independent
/// sets of a graph.
///
/// Vertices are added one at a time. A node at depth i is a maximal
/// independent set of G[0..i-1]; when vertex i has no neighbor in it, the set
/// grows by i, otherwise it both survives unchanged and (when canonical)
/// yields (I \ N(i)) + i. The canonical-parent test keeps every output unique
/// and every node has at least one child, so the DFS reaches a leaf within
/// n steps of any branching point.
class MaximalIndependentSets {
public:
  explicit MaximalIndependentSets(const Graph& g);
  explicit MaximalIndependentSets(Graph&&) = delete;  // holds a pointer to g

  std::optional<VarSet> next();

private:
  struct Node {
    std::size_t depth;
    VarSet set;
  };

  bool maximal_in_prefix(const VarSet& s, std::size_t prefix) const;
  VarSet greedy_completion(VarSet s, std::size_t prefix) const;

  const Graph* g_;
  std::vector<Node> stack_;
};

/// Collects every maximal independent set; convenience for tests and tools.
SetFamily maximal_independent_sets(const Graph& g);

}  // namespace hornkeys
