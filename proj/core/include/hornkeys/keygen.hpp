#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hornkeys/horn.hpp"

namespace hornkeys {

struct EnumerationStats {
  std::size_t keys = 0;
  std::size_t closures = 0;    ///< forward-chaining runs, including the first key
  std::size_t candidates = 0;  ///< (K - v) + A sets minimized
  std::size_t first_delay_closures = 0;
  /// Largest closure count between two consecutive outputs.
  std::size_t max_delay_closures = 0;
  bool truncated = false;  ///< stopped by a limit before exhaustion
};

/// Minimal key obtained by greedily dropping variables from V.
VarSet first_minimal_key(const HornCnf& cnf);

/// Out-neighbors of the minimal key K: for v in K ascending and each clause
/// A -> v in input order, minimize (K - v) + A. First occurrence wins.
std::vector<VarSet> neighbors(const HornCnf& cnf, const VarSet& key);
std::vector<VarSet> neighbors(const ClosureEngine& engine, const VarSet& key,
                              std::size_t* candidates = nullptr);

/// Minimal keys with polynomial delay.
///
/// Keys found so far sit on a LIFO stack. Each call to next() pops the top,
/// pushes its not-yet-seen out-neighbors, and returns it, so every output
/// costs one neighbor expansion: at most m candidates, each minimized with at
/// most n + 1 closures. Holds a reference to the CNF.
class KeyEnumerator {
public:
  explicit KeyEnumerator(const HornCnf& cnf);
  explicit KeyEnumerator(HornCnf&&) = delete;

  std::optional<VarSet> next();
  const EnumerationStats& stats() const noexcept { return stats_; }

private:
  ClosureEngine engine_;
  std::vector<VarSet> pending_;
  std::unordered_set<VarSet> visited_;
  EnumerationStats stats_;
  std::size_t mark_ = 0;  // closure count at the previous output
  bool started_ = false;
};

/// Drives a KeyEnumerator into `sink`. `limit` = 0 means no limit. The sink
/// may throw; the exception propagates.
EnumerationStats enumerate_minimal_keys(const HornCnf& cnf,
                                        const std::function<void(const VarSet&)>& sink,
                                        std::size_t limit = 0);

/// All minimal keys in emission order.
std::vector<VarSet> minimal_keys(const HornCnf& cnf);

/// The deterministic instance of the key graph induced by the tie-breaking
/// of neighbors() and minimize_key().
struct KeyGraph {
  std::vector<VarSet> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  std::size_t max_out_degree() const;
};

/// Throws ResourceError past `max_keys` nodes (0 = unlimited).
KeyGraph build_key_graph(const HornCnf& cnf, std::size_t max_keys = 0);
bool is_strongly_connected(const KeyGraph& g);

/// Layer profile of k1 against the key k2. Layer 0 is k2; layer i+1 holds
/// the heads newly derivable from layers 0..i. Entry i is |layer i ∩ k1|.
/// Throws ContractError if k2 is not a key.
std::vector<std::size_t> rho_measure(const HornCnf& cnf, const VarSet& k1, const VarSet& k2);

/// Strict reverse-lexicographic comparison (last entry most significant).
bool rho_less(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b);

}  // namespace hornkeys
