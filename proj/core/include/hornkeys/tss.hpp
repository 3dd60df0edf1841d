#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "hornkeys/horn.hpp"
#include "hornkeys/hypergraph.hpp"
#include "hornkeys/keygen.hpp"

namespace hornkeys {

inline constexpr std::size_t kDefaultMaxThreshold = 3;
inline constexpr std::size_t kDefaultClauseBudget = 1'000'000;
inline constexpr std::size_t kDefaultSubsetBudget = std::size_t{1} << 24;

/// Undirected graph with a positive activation threshold on every vertex.
class ThresholdGraph {
public:
  ThresholdGraph() = default;
  /// Throws InputError if thresholds.size() != n or any threshold is 0.
  ThresholdGraph(Graph graph, std::vector<std::size_t> thresholds);

  const Graph& graph() const noexcept { return graph_; }
  std::size_t size() const noexcept { return graph_.size(); }
  std::size_t threshold(Var v) const noexcept { return thresholds_[v]; }
  const std::vector<std::size_t>& thresholds() const noexcept { return thresholds_; }

  friend bool operator==(const ThresholdGraph&, const ThresholdGraph&) = default;

private:
  Graph graph_;
  std::vector<std::size_t> thresholds_;
};

/// Synchronous rounds until nothing changes.
VarSet activate(const ThresholdGraph& tg, const VarSet& seed);
bool is_target_set(const ThresholdGraph& tg, const VarSet& s);

struct ThresholdGuard {
  std::size_t max_threshold = kDefaultMaxThreshold;
  std::size_t max_clauses = kDefaultClauseBudget;
};

/// One clause A -> v for every v and every t(v)-subset A of N(v); v
/// ascending, bodies in lexicographic order. Throws ResourceError naming the
/// first vertex whose threshold exceeds the guard, or when the planned clause
/// count exceeds the budget.
HornCnf tss_to_horn(const ThresholdGraph& tg, const ThresholdGuard& guard = {});

/// What a gadget vertex stands for.
struct GadgetRole {
  enum class Kind { Original, Hub, X, Y, Z, W };
  Kind kind = Kind::Original;
  std::size_t clause = 0;  ///< index into the CNF's clause list
  Var var = 0;             ///< the variable a chain hangs off (or the vertex itself)
  bool head_side = false;  ///< chain runs from the hub to the head
};

struct GadgetGraph {
  ThresholdGraph graph;
  std::vector<GadgetRole> roles;  ///< one entry per vertex
};

/// Graph whose target sets track keys: the variables (threshold 1), then per
/// clause A -> v a hub of threshold |A|, one x-y-z-w chain from each a in A
/// into the hub, and one from the hub out to v. Throws InputError on an
/// empty body.
GadgetGraph horn_to_tss(const HornCnf& cnf);

/// Projects a target set of the gadget graph back to variables: kept
/// variables, the variable of every chain vertex in s (body or head side),
/// and the head of every hub in s. Throws ContractError if s is not a target
/// set.
VarSet lift_target_set_to_key(const HornCnf& cnf, const GadgetGraph& gadget, const VarSet& s);

/// Minimal target sets as minimal keys of the threshold CNF.
EnumerationStats enumerate_minimal_target_sets(const ThresholdGraph& tg,
                                               const std::function<void(const VarSet&)>& sink,
                                               std::size_t limit = 0,
                                               const ThresholdGuard& guard = {});

/// Smallest key, lexicographically first among those of minimum size.
/// Throws ResourceError after `budget` subsets.
VarSet minimum_key(const HornCnf& cnf, std::size_t budget = kDefaultSubsetBudget);
VarSet minimum_target_set(const ThresholdGraph& tg, std::size_t budget = kDefaultSubsetBudget);

}  // namespace hornkeys
