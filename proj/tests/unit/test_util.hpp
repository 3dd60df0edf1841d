#pragma once

#include <algorithm>
#include <string_view>

#include "hornkeys/hornkeys.hpp"

namespace hornkeys::testing {

/// Letters to a set: "ac" over n = 5 is {0, 2}. Digits '1'..'9' work too.
inline VarSet S(std::size_t n, std::string_view letters) {
  VarSet s(n);
  for (char ch : letters) s.insert(ch >= 'a' ? static_cast<Var>(ch - 'a') : static_cast<Var>(ch - '1'));
  return s;
}

inline SetFamily F(std::size_t n, std::initializer_list<std::string_view> sets) {
  SetFamily out;
  for (auto s : sets) out.push_back(S(n, s));
  std::sort(out.begin(), out.end());
  return out;
}

inline SetFamily sorted(SetFamily f) {
  std::sort(f.begin(), f.end());
  return f;
}

/// a->b, b->a, ac->d, ac->e over a..e.
inline HornCnf intro_cnf() {
  HornCnf cnf{Universe(5)};
  cnf.add(S(5, "a"), 1);
  cnf.add(S(5, "b"), 0);
  cnf.add(S(5, "ac"), 3);
  cnf.add(S(5, "ac"), 4);
  return cnf;
}

inline SpernerHypergraph path_hypergraph() {  // {ab, bc, cd}
  return SpernerHypergraph(Universe(4), F(4, {"ab", "bc", "cd"}));
}

inline SpernerHypergraph unique_example() {  // {12, 13, 14, 234}
  return SpernerHypergraph(Universe(4), F(4, {"12", "13", "14", "234"}));
}

inline Graph graph_from(std::size_t n, std::initializer_list<std::string_view> edges) {
  Graph g(n);
  for (auto e : edges) {
    auto s = S(n, e);
    const Var u = s.first();
    g.add_edge(u, s.next(u + 1));
  }
  return g;
}

/// Thresholds 1,1,1,1,2 on a..e; edges ab ad ae bc cd ce de.
inline ThresholdGraph five_vertex_tss() {
  Graph g = graph_from(5, {"ab", "ad", "ae", "bc", "cd", "ce", "de"});
  return ThresholdGraph(std::move(g), {1, 1, 1, 1, 2});
}

}  // namespace hornkeys::testing
