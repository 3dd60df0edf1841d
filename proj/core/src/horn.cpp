#include "hornkeys/horn.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "hornkeys/errors.hpp"

namespace hornkeys {

Universe::Universe(std::size_t n, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
  if (labels_.empty()) return;
  if (labels_.size() != n_)
    throw InputError("expected " + std::to_string(n_) + " labels, got " +
                     std::to_string(labels_.size()));
  std::set<std::string> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second) throw InputError("duplicate label '" + l + "'");
}

std::string Universe::name(Var v) const {
  if (v < labels_.size()) return labels_[v];
  return std::to_string(v + 1);
}

std::optional<Var> Universe::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Var>(it - labels_.begin());
}

HornCnf::HornCnf(Universe universe, std::vector<HornClause> clauses)
    : universe_(std::move(universe)) {
  clauses_.reserve(clauses.size());
  for (auto& c : clauses) add(std::move(c.body), c.head);
}

void HornCnf::validate(const HornClause& c) const {
  if (c.body.universe() != size())
    throw InputError("clause body ranges over " + std::to_string(c.body.universe()) +
                     " variables, CNF has " + std::to_string(size()));
  if (c.head >= size())
    throw InputError("head " + std::to_string(c.head + 1) + " out of range 1.." +
                     std::to_string(size()));
  if (c.body.contains(c.head))
    throw InputError("clause " + std::to_string(clauses_.size() + 1) +
                     " has its head in its body");
}

void HornCnf::add(VarSet body, Var head) {
  HornClause c{std::move(body), head};
  validate(c);
  clauses_.push_back(std::move(c));
}

std::size_t HornCnf::length() const noexcept {
  std::size_t len = 0;
  for (const auto& c : clauses_) len += c.body.size() + 1;
  return len;
}

void check_universe(const HornCnf& cnf, const VarSet& s) {
  if (s.universe() != cnf.size())
    throw InputError("set ranges over " + std::to_string(s.universe()) +
                     " variables, CNF has " + std::to_string(cnf.size()));
}

ClosureEngine::ClosureEngine(const HornCnf& cnf)
    : cnf_(&cnf), occurs_(cnf.size()), body_size_(cnf.clause_count()) {
  const auto& cl = cnf.clauses();
  for (std::size_t i = 0; i < cl.size(); ++i) {
    body_size_[i] = cl[i].body.size();
    if (body_size_[i] == 0) empty_bodies_.push_back(i);
    cl[i].body.for_each([&](Var v) { occurs_[v].push_back(i); });
  }
}

VarSet ClosureEngine::closure(const VarSet& seed) const {
  check_universe(*cnf_, seed);
  ++calls_;
  const auto& cl = cnf_->clauses();
  std::vector<std::size_t> missing = body_size_;
  VarSet out = seed;
  std::vector<Var> queue = seed.elements();
  auto fire = [&](std::size_t ci) {
    const Var h = cl[ci].head;
    if (!out.contains(h)) {
      out.insert(h);
      queue.push_back(h);
    }
  };
  for (std::size_t ci : empty_bodies_) fire(ci);
  while (!queue.empty()) {
    const Var v = queue.back();
    queue.pop_back();
    for (std::size_t ci : occurs_[v])
      if (--missing[ci] == 0) fire(ci);
  }
  return out;
}

VarSet forward_closure(const HornCnf& cnf, const VarSet& s) {
  return ClosureEngine(cnf).closure(s);
}

bool is_implicate(const HornCnf& cnf, const VarSet& body, Var head) {
  if (head >= cnf.size())
    throw InputError("head " + std::to_string(head + 1) + " out of range");
  check_universe(cnf, body);
  if (body.contains(head)) return true;
  return forward_closure(cnf, body).contains(head);
}

bool is_key(const HornCnf& cnf, const VarSet& k) {
  return ClosureEngine(cnf).is_key(k);
}

VarSet minimize_key(const ClosureEngine& engine, const VarSet& s) {
  const VarSet reached = engine.closure(s);
  if (reached.size() != engine.cnf().size()) {
    std::ostringstream os;
    os << "minimize_key: seed is not a key (closure " << reached << " misses "
       << reached.complement() << ")";
    throw ContractError(os.str());
  }
  VarSet k = s;
  for (Var v = s.first(); v != VarSet::npos; v = s.next(v + 1)) {
    k.erase(v);
    if (!engine.is_key(k)) k.insert(v);
  }
  return k;
}

VarSet minimize_key(const HornCnf& cnf, const VarSet& s) {
  return minimize_key(ClosureEngine(cnf), s);
}

namespace {

bool implies_all(const ClosureEngine& engine, const HornCnf& other) {
  for (const auto& c : other.clauses())
    if (!engine.closure(c.body).contains(c.head)) return false;
  return true;
}

}  // namespace

bool equivalent(const HornCnf& a, const HornCnf& b) {
  if (a.size() != b.size())
    throw InputError("equivalence needs a shared universe (" + std::to_string(a.size()) +
                     " vs " + std::to_string(b.size()) + " variables)");
  return implies_all(ClosureEngine(a), b) && implies_all(ClosureEngine(b), a);
}

std::vector<std::pair<std::size_t, std::size_t>> duplicate_clauses(const HornCnf& cnf) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::map<HornClause, std::size_t> first_seen;
  const auto& cl = cnf.clauses();
  for (std::size_t i = 0; i < cl.size(); ++i) {
    auto [it, fresh] = first_seen.emplace(cl[i], i);
    if (!fresh) out.emplace_back(it->second, i);
  }
  return out;
}

}  // namespace hornkeys
