#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hornkeys/horn.hpp"
#include "hornkeys/hypergraph.hpp"
#include "hornkeys/tss.hpp"
#include "hornkeys/uniqueness.hpp"

// Brute-force reference implementations. Everything here works on 64-bit
// masks with naive loops and shares no code with the algorithms it checks
// beyond the set and instance types. Results come back canonically sorted.
namespace hornkeys::oracle {

inline constexpr std::size_t kDefaultMaxVars = 16;

/// Repeated passes over all clauses until nothing fires.
std::uint64_t naive_closure(const HornCnf& cnf, std::uint64_t seed);

SetFamily bf_minimal_keys(const HornCnf& cnf, std::size_t max_vars = kDefaultMaxVars);
SetFamily bf_minimal_transversals(const SpernerHypergraph& b,
                                  std::size_t max_vars = kDefaultMaxVars);
SetFamily bf_maximal_independent_sets(const Graph& g, std::size_t max_vars = kDefaultMaxVars);

/// Unique-keyness straight from the definition: no single clause A -> v that
/// the key CNF does not imply can be added without creating a new minimal
/// key (i.e. without some maximal independent set becoming a key).
bool bf_unique_key(const SpernerHypergraph& b, std::size_t max_vars = 14);

bool bf_satisfiable(const SignedCnf& cnf, std::size_t max_vars = 24);

/// One vertex at a time, in index order, until no vertex can activate.
std::uint64_t naive_activate(const ThresholdGraph& tg, std::uint64_t seed);
SetFamily bf_minimal_target_sets(const ThresholdGraph& tg,
                                 std::size_t max_vars = kDefaultMaxVars);
/// Scans by increasing cardinality; graphs up to 64 vertices, `budget`
/// subsets at most.
VarSet bf_min_target_set(const ThresholdGraph& tg, std::size_t budget = std::size_t{1} << 26);

/// Bonds of a connected graph: inclusion-minimal edge sets whose removal
/// disconnects it. The universe is the edge list of `h` in Graph::edges()
/// order.
SpernerHypergraph graphic_matroid_cuts(const Graph& h, std::size_t max_edges = 20);

}  // namespace hornkeys::oracle
