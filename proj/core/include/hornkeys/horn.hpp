#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hornkeys/varset.hpp"

namespace hornkeys {

/// The variable universe {0, ..., n-1}, optionally with display labels.
class Universe {
public:
  Universe() = default;
  explicit Universe(std::size_t n) : n_(n) {}
  /// Throws InputError if labels.size() != n or labels repeat.
  Universe(std::size_t n, std::vector<std::string> labels);

  std::size_t size() const noexcept { return n_; }
  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Label of v, or its 1-based id when unlabeled.
  std::string name(Var v) const;
  std::optional<Var> find(const std::string& label) const;

  friend bool operator==(const Universe&, const Universe&) = default;

private:
  std::size_t n_ = 0;
  std::vector<std::string> labels_;
};

/// Pure Horn clause `body -> head`.
struct HornClause {
  VarSet body;
  Var head = 0;

  friend bool operator==(const HornClause&, const HornClause&) = default;
  friend auto operator<=>(const HornClause& a, const HornClause& b) {
    if (auto c = a.body <=> b.body; c != 0) return c;
    return a.head <=> b.head;
  }
};

/// A pure Horn CNF. Clause order is preserved exactly; downstream enumeration
/// order depends on it.
class HornCnf {
public:
  HornCnf() = default;
  explicit HornCnf(Universe universe) : universe_(std::move(universe)) {}
  HornCnf(Universe universe, std::vector<HornClause> clauses);

  /// Appends `body -> head`. Rejects out-of-range ids and head in body.
  void add(VarSet body, Var head);
  void add(std::initializer_list<Var> body, Var head) {
    add(VarSet(size(), body), head);
  }

  std::size_t size() const noexcept { return universe_.size(); }
  const Universe& universe() const noexcept { return universe_; }
  const std::vector<HornClause>& clauses() const noexcept { return clauses_; }
  std::size_t clause_count() const noexcept { return clauses_.size(); }

  /// Sum of body sizes plus one per head.
  std::size_t length() const noexcept;

  friend bool operator==(const HornCnf&, const HornCnf&) = default;

private:
  void validate(const HornClause& c) const;

  Universe universe_;
  std::vector<HornClause> clauses_;
};

/// Forward chaining with per-clause unsatisfied-body counters.
///
/// The occurrence index is built once; each closure() call is linear in the
/// total CNF length. `calls()` counts closures for delay instrumentation.
class ClosureEngine {
public:
  explicit ClosureEngine(const HornCnf& cnf);
  explicit ClosureEngine(HornCnf&&) = delete;

  VarSet closure(const VarSet& seed) const;
  bool is_key(const VarSet& s) const { return closure(s).size() == cnf_->size(); }

  std::size_t calls() const noexcept { return calls_; }
  const HornCnf& cnf() const noexcept { return *cnf_; }

private:
  const HornCnf* cnf_;
  std::vector<std::vector<std::size_t>> occurs_;  // var -> clauses whose body holds it
  std::vector<std::size_t> body_size_;
  std::vector<std::size_t> empty_bodies_;
  mutable std::size_t calls_ = 0;
};

VarSet forward_closure(const HornCnf& cnf, const VarSet& s);
bool is_implicate(const HornCnf& cnf, const VarSet& body, Var head);
bool is_key(const HornCnf& cnf, const VarSet& k);

/// Greedy minimal key inside the key `s`: variables are tried in ascending
/// order and dropped whenever the remainder is still a key. Throws
/// ContractError if `s` is not a key.
VarSet minimize_key(const HornCnf& cnf, const VarSet& s);
VarSet minimize_key(const ClosureEngine& engine, const VarSet& s);

/// True iff each CNF implies every clause of the other. Throws InputError on
/// universe-size mismatch.
bool equivalent(const HornCnf& a, const HornCnf& b);

/// Index pairs (i, j), i < j, of clauses that are literally identical.
std::vector<std::pair<std::size_t, std::size_t>> duplicate_clauses(const HornCnf& cnf);

/// Throws InputError unless s ranges over exactly cnf's universe.
void check_universe(const HornCnf& cnf, const VarSet& s);

}  // namespace hornkeys
