#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "hornkeys/hornkeys.hpp"
#include "json.hpp"

namespace hornkeys::cli {

using nlohmann::json;

/// Process exit codes shared by every verb.
enum Exit : int { kOk = 0, kFalse = 1, kInputError = 2, kResourceError = 3 };

json to_json(const VarSet& s);
json to_json(const SetFamily& f);
json to_json(const HornCnf& cnf);
json to_json(const SpernerHypergraph& b);
json to_json(const Graph& g);
json to_json(const ThresholdGraph& tg);
json to_json(const SignedCnf& cnf);
json to_json(const Witness& w, const Universe& u);
json to_json(const EnumerationStats& s);

/// Collects a verb's outcome and prints it either as text or as a single
/// JSON object with `result`, `witness` and `stats`.
class Report {
public:
  Report(std::ostream& out, bool json_mode, bool names)
      : out_(out), json_(json_mode), names_(names) {}

  bool json_mode() const { return json_; }
  bool names() const { return names_; }

  /// Text mode only: one line, flushed so consumers can stream.
  void line(const std::string& text);
  std::string set(const VarSet& s, const Universe& u) const;

  json& result() { return doc_["result"]; }
  json& stats() { return doc_["stats"]; }
  void witness(json w) { doc_["witness"] = std::move(w); }

  /// Emits the JSON document (no-op in text mode).
  void finish();

private:
  std::ostream& out_;
  bool json_;
  bool names_;
  json doc_ = {{"result", nullptr}, {"witness", nullptr}, {"stats", json::object()}};
};

}  // namespace hornkeys::cli
