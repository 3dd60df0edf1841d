#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hornkeys/horn.hpp"
#include "hornkeys/hypergraph.hpp"
#include "hornkeys/tss.hpp"
#include "hornkeys/uniqueness.hpp"

// Text formats. Ids are 1-based in files and 0-based in memory. Lines whose
// first non-blank character is '#' are comments; blank lines are ignored.
// Every format accepts an optional `names <l1> ... <ln>` line right after
// the header. Parse failures throw ParseError carrying the line number.
namespace hornkeys::io {

/// horn <n> <m>, then m lines `b1 ... bk -> h` (k may be 0).
HornCnf parse_horn(std::istream& in);
std::string serialize_horn(const HornCnf& cnf);

/// hg <n> <k>, then k lines of vertex ids. A lone `-` is the empty edge.
SpernerHypergraph parse_hypergraph(std::istream& in);
std::string serialize_hypergraph(const SpernerHypergraph& b);

/// The hg format restricted to edges of size two.
Graph parse_graph(std::istream& in);
std::string serialize_graph(const Graph& g);

/// tss <n> <m>, then m lines `e <u> <v>` and n lines `t <v> <k>`.
ThresholdGraph parse_threshold_graph(std::istream& in);
std::string serialize_threshold_graph(const ThresholdGraph& tg);

/// cnf <n> <m>, then m lines of nonzero signed ids, no trailing 0.
SignedCnf parse_signed_cnf(std::istream& in);
std::string serialize_signed_cnf(const SignedCnf& cnf);

/// roles <N> <n>, then one line per gadget vertex:
/// `<id> p <clause> <head>` or `<id> <x|y|z|w> <clause> <var> <body|head>`.
std::vector<GadgetRole> parse_roles(std::istream& in);
std::string serialize_roles(const GadgetGraph& gadget);

/// Space-separated sorted 1-based ids, or labels when `names` is set and the
/// universe has them.
std::string format_set(const VarSet& s, const Universe& u, bool names = false);

/// Parses "1,3,4" or "1 3 4" (1-based) or labels into a set over n.
VarSet parse_id_list(std::string_view text, const Universe& u);

/// Reads a whole file; throws InputError if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace hornkeys::io
