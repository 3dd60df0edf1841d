#include "report.hpp"

#include <ostream>

#include "hornkeys/io.hpp"

namespace hornkeys::cli {

json to_json(const VarSet& s) {
  json ids = json::array();
  s.for_each([&](Var v) { ids.push_back(v + 1); });
  return ids;
}

json to_json(const SetFamily& f) {
  json out = json::array();
  for (const auto& s : f) out.push_back(to_json(s));
  return out;
}

json to_json(const HornCnf& cnf) {
  json clauses = json::array();
  for (const auto& c : cnf.clauses()) clauses.push_back({{"body", to_json(c.body)}, {"head", c.head + 1}});
  return {{"n", cnf.size()}, {"clauses", clauses}};
}

json to_json(const SpernerHypergraph& b) {
  return {{"n", b.size()}, {"edges", to_json(b.edges())}};
}

json to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
  return {{"n", g.size()}, {"edges", edges}};
}

json to_json(const ThresholdGraph& tg) {
  json out = to_json(tg.graph());
  out["thresholds"] = tg.thresholds();
  return out;
}

json to_json(const SignedCnf& cnf) {
  return {{"n", cnf.vars}, {"clauses", cnf.clauses}};
}

json to_json(const Witness& w, const Universe& u) {
  const char* kind = "addable-clause";
  if (w.kind == Witness::Kind::TransversalPairMissing) kind = "transversal-pair-missing";
  if (w.kind == Witness::Kind::NoIndividualNeighbor) kind = "no-individual-neighbor";
  json out = {{"kind", kind}, {"set", to_json(w.set)}, {"vertex", w.vertex + 1}};
  if (u.has_labels()) {
    json labels = json::array();
    w.set.for_each([&](Var v) { labels.push_back(u.name(v)); });
    out["set_labels"] = labels;
    out["vertex_label"] = u.name(w.vertex);
  }
  return out;
}

json to_json(const EnumerationStats& s) {
  return {{"keys", s.keys},
          {"closures", s.closures},
          {"candidates", s.candidates},
          {"first_delay_closures", s.first_delay_closures},
          {"max_delay_closures", s.max_delay_closures},
          {"truncated", s.truncated}};
}

void Report::line(const std::string& text) {
  if (json_) return;
  out_ << text << '\n';
  out_.flush();
}

std::string Report::set(const VarSet& s, const Universe& u) const {
  return io::format_set(s, u, names_);
}

void Report::finish() {
  if (json_) out_ << doc_.dump() << '\n';
}

}  // namespace hornkeys::cli
