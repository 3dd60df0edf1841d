#pragma once

#include <cstddef>
#include <cstdint>

#include "hornkeys/horn.hpp"
#include "hornkeys/hypergraph.hpp"
#include "hornkeys/tss.hpp"
#include "hornkeys/uniqueness.hpp"

namespace hornkeys::gen {

/// Seed plus size parameters; equal values give identical instances.
struct InstanceSeed {
  std::uint64_t seed = 1;
  std::size_t n = 6;             ///< variables / vertices
  std::size_t m = 6;             ///< clauses / edges (upper bound where noted)
  double density = 0.4;          ///< edge probability for graphs
  std::size_t max_threshold = 2;
  std::size_t min_body = 0;
  std::size_t max_body = 3;
};

/// m clauses with uniform heads and bodies of min_body..max_body other
/// variables.
HornCnf random_horn_cnf(const InstanceSeed& p);

/// Up to m random edges of 1..max_body vertices, minimalized. Never empty
/// and never {∅}.
SpernerHypergraph random_sperner(const InstanceSeed& p);

/// G(n, density).
Graph random_graph(const InstanceSeed& p);

/// Random connected graph: a random spanning tree plus G(n, density) edges.
Graph random_connected_graph(const InstanceSeed& p);

/// Bipartite graph on n vertices (sides split at random) with no isolated
/// vertex.
Graph random_bipartite(const InstanceSeed& p);

/// G(n, density) with thresholds uniform in 1..max_threshold.
ThresholdGraph random_threshold_graph(const InstanceSeed& p);

/// m clauses over n variables, each of 1..max_body distinct-variable literals.
SignedCnf random_signed_cnf(const InstanceSeed& p);

}  // namespace hornkeys::gen
