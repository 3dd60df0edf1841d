#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hornkeys/horn.hpp"
#include "hornkeys/hypergraph.hpp"

namespace hornkeys {

/// Counterexample to unique-keyness. Every witness handed out has been
/// re-checked against the condition it violates.
struct Witness {
  enum class Kind {
    TransversalPairMissing,  ///< (set = T ∈ B^d, vertex = v ∉ T) with no other T' ⊆ T+v
    NoIndividualNeighbor,    ///< (set = maximal independent I, vertex = v ∈ I)
    AddableClause,           ///< (set = body A, vertex = head v)
  };
  Kind kind;
  VarSet set;
  Var vertex;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct UniquenessResult {
  bool unique = true;
  std::optional<Witness> witness;
  std::size_t examined = 0;  ///< transversals or maximal independent sets scanned
};

/// Default cap on 2^n scans.
inline constexpr std::size_t kDefaultSubsetVars = 20;

/// Exchange criterion over B^d: for every T in B^d and v outside T, another
/// minimal transversal fits inside T + v. Throws InputError on an empty edge
/// family, ResourceError from dualization.
UniquenessResult is_unique_key_hypergraph(const SpernerHypergraph& b,
                                          std::size_t dual_limit = kDefaultDualLimit);

/// Clauses A -> v that Φ_B does not imply but that leave the minimal-key
/// family unchanged when added: A independent, v outside the union of the
/// projection of B onto V \ A. Empty iff B is unique key. Exponential in n;
/// throws ResourceError when n > max_vars.
std::vector<HornClause> addable_clauses(const SpernerHypergraph& b,
                                        std::size_t max_vars = kDefaultSubsetVars);

/// Individual-neighbor criterion, streamed over maximal independent sets.
/// `max_sets` (0 = unlimited) caps the scan with a ResourceError.
UniquenessResult is_unique_key_graph(const Graph& g, std::size_t max_sets = 0);

struct BipartiteCheck {
  bool unique = true;
  bool fast_path = false;  ///< decided by the perfect-matching test
  std::optional<Witness> witness;
};

/// Perfect-matching test for bipartite graphs without isolated vertices;
/// everything else goes to is_unique_key_graph.
BipartiteCheck is_unique_key_bipartite(const Graph& g);

/// Two-coloring, or nullopt when g has an odd cycle. Color 0 for the lowest
/// vertex of each component.
std::optional<std::vector<int>> two_coloring(const Graph& g);

/// General CNF with signed 1-based literals (positive = plain variable).
struct SignedCnf {
  std::size_t vars = 0;
  std::vector<std::vector<int>> clauses;
};

/// Vertex layout of the SAT gadget graph.
struct SatGraphLayout {
  std::size_t vars = 0;
  std::size_t clauses = 0;
  Var literal(std::size_t i, bool positive) const { return 3 * i + (positive ? 0 : 1); }
  Var guard(std::size_t i) const { return 3 * i + 2; }  ///< y_i
  Var clause(std::size_t j) const { return 3 * vars + j; }
  Var hub() const { return 3 * vars + clauses; }  ///< z
  std::size_t vertex_count() const { return 3 * vars + clauses + 1; }
};

/// Literal triangles {x_i, nx_i, y_i}, a clique on the clause vertices plus
/// z, and clause-to-literal edges. Vertices are labelled x<i>, nx<i>, y<i>,
/// C<j>, z (1-based). Throws InputError on an empty clause or bad literal.
Graph build_sat_graph(const SignedCnf& cnf);

}  // namespace hornkeys
