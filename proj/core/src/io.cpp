#include "hornkeys/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

#include "hornkeys/errors.hpp"

namespace hornkeys::io {

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

class LineReader {
public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::optional<Line> next() {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++number_;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      std::istringstream ss(raw);
      Line line{number_, {}};
      for (std::string tok; ss >> tok;) line.tokens.push_back(tok);
      if (line.tokens.empty() || line.tokens.front().front() == '#') continue;
      return line;
    }
    return std::nullopt;
  }

  Line expect(const char* what) {
    auto l = next();
    if (!l) throw ParseError(number_ + 1, std::string("unexpected end of input, expected ") + what);
    return *l;
  }

  std::size_t number() const { return number_; }

private:
  std::istream& in_;
  std::size_t number_ = 0;
};

long long to_int(const std::string& tok, std::size_t line, const char* what) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, std::string("malformed ") + what + " '" + tok + "'");
  return v;
}

std::size_t to_count(const std::string& tok, std::size_t line, const char* what) {
  const long long v = to_int(tok, line, what);
  if (v < 0) throw ParseError(line, std::string("negative ") + what + " '" + tok + "'");
  return static_cast<std::size_t>(v);
}

Var to_id(const std::string& tok, std::size_t n, std::size_t line, const char* what) {
  const long long v = to_int(tok, line, what);
  if (v < 1 || static_cast<std::size_t>(v) > n)
    throw ParseError(line, std::string(what) + " " + tok + " outside 1.." + std::to_string(n));
  return static_cast<Var>(v - 1);
}

struct Header {
  std::size_t n = 0;
  std::size_t count = 0;
  Universe universe;
  std::optional<Line> pending;  // first body line, if no names line was present
};

Header read_header(LineReader& r, const char* tag) {
  Line h = r.expect("header");
  if (h.tokens.size() != 3 || h.tokens[0] != tag)
    throw ParseError(h.number, std::string("expected header '") + tag + " <n> <count>'");
  Header out;
  out.n = to_count(h.tokens[1], h.number, "size");
  out.count = to_count(h.tokens[2], h.number, "count");
  out.universe = Universe(out.n);
  out.pending = r.next();
  if (out.pending && out.pending->tokens.front() == "names") {
    std::vector<std::string> labels(out.pending->tokens.begin() + 1, out.pending->tokens.end());
    try {
      out.universe = Universe(out.n, std::move(labels));
    } catch (const InputError& e) {
      throw ParseError(out.pending->number, e.what());
    }
    out.pending = r.next();
  }
  return out;
}

Line take(Header& h, LineReader& r, const char* what) {
  if (h.pending) {
    Line l = std::move(*h.pending);
    h.pending.reset();
    return l;
  }
  return r.expect(what);
}

void expect_end(Header& h, LineReader& r) {
  auto extra = h.pending ? h.pending : r.next();
  if (extra) throw ParseError(extra->number, "more lines than the header announced");
}

void write_names(std::ostringstream& os, const Universe& u) {
  if (!u.has_labels()) return;
  os << "names";
  for (const auto& l : u.labels()) os << ' ' << l;
  os << '\n';
}

void write_ids(std::ostringstream& os, const VarSet& s) {
  bool first = true;
  s.for_each([&](Var v) {
    os << (first ? "" : " ") << v + 1;
    first = false;
  });
}

}  // namespace

HornCnf parse_horn(std::istream& in) {
  LineReader r(in);
  Header h = read_header(r, "horn");
  HornCnf cnf(h.universe);
  for (std::size_t c = 0; c < h.count; ++c) {
    Line l = take(h, r, "clause");
    auto arrow = std::find(l.tokens.begin(), l.tokens.end(), "->");
    if (arrow == l.tokens.end()) throw ParseError(l.number, "clause lacks '->'");
    if (arrow + 2 != l.tokens.end()) throw ParseError(l.number, "expected exactly one head after '->'");
    VarSet body(h.n);
    for (auto it = l.tokens.begin(); it != arrow; ++it) body.insert(to_id(*it, h.n, l.number, "body id"));
    const Var head = to_id(*(arrow + 1), h.n, l.number, "head");
    if (body.contains(head)) throw ParseError(l.number, "head " + *(arrow + 1) + " also occurs in the body");
    cnf.add(std::move(body), head);
  }
  expect_end(h, r);
  return cnf;
}

std::string serialize_horn(const HornCnf& cnf) {
  std::ostringstream os;
  os << "horn " << cnf.size() << ' ' << cnf.clause_count() << '\n';
  write_names(os, cnf.universe());
  for (const auto& c : cnf.clauses()) {
    write_ids(os, c.body);
    os << (c.body.empty() ? "-> " : " -> ") << c.head + 1 << '\n';
  }
  return os.str();
}

SpernerHypergraph parse_hypergraph(std::istream& in) {
  LineReader r(in);
  Header h = read_header(r, "hg");
  SetFamily edges;
  for (std::size_t k = 0; k < h.count; ++k) {
    Line l = take(h, r, "edge");
    VarSet e(h.n);
    if (!(l.tokens.size() == 1 && l.tokens[0] == "-"))
      for (const auto& tok : l.tokens) e.insert(to_id(tok, h.n, l.number, "vertex id"));
    edges.push_back(std::move(e));
  }
  expect_end(h, r);
  if (!check_sperner(edges)) throw ParseError(r.number(), "edges do not form an antichain");
  return SpernerHypergraph(h.universe, std::move(edges));
}

std::string serialize_hypergraph(const SpernerHypergraph& b) {
  std::ostringstream os;
  os << "hg " << b.size() << ' ' << b.edge_count() << '\n';
  write_names(os, b.universe());
  for (const auto& e : b.edges()) {
    if (e.empty())
      os << '-';
    else
      write_ids(os, e);
    os << '\n';
  }
  return os.str();
}

Graph parse_graph(std::istream& in) {
  LineReader r(in);
  Header h = read_header(r, "hg");
  Graph g(h.universe);
  for (std::size_t k = 0; k < h.count; ++k) {
    Line l = take(h, r, "edge");
    if (l.tokens.size() != 2) throw ParseError(l.number, "graph edges need exactly two endpoints");
    const Var u = to_id(l.tokens[0], h.n, l.number, "vertex id");
    const Var v = to_id(l.tokens[1], h.n, l.number, "vertex id");
    if (u == v) throw ParseError(l.number, "self-loop");
    g.add_edge(u, v);
  }
  expect_end(h, r);
  return g;
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream os;
  const auto edges = g.edges();
  os << "hg " << g.size() << ' ' << edges.size() << '\n';
  write_names(os, g.universe());
  for (auto [u, v] : edges) os << u + 1 << ' ' << v + 1 << '\n';
  return os.str();
}

ThresholdGraph parse_threshold_graph(std::istream& in) {
  LineReader r(in);
  Header h = read_header(r, "tss");
  Graph g(h.universe);
  std::vector<std::size_t> t(h.n, 0);
  std::size_t edges = 0, thresholds = 0;
  while (true) {
    std::optional<Line> l = h.pending ? std::exchange(h.pending, std::nullopt) : r.next();
    if (!l) break;
    const auto& tok = l->tokens;
    if (tok[0] == "e" && tok.size() == 3) {
      const Var u = to_id(tok[1], h.n, l->number, "vertex id");
      const Var v = to_id(tok[2], h.n, l->number, "vertex id");
      if (u == v) throw ParseError(l->number, "self-loop");
      if (g.adjacent(u, v)) throw ParseError(l->number, "parallel edge");
      g.add_edge(u, v);
      ++edges;
    } else if (tok[0] == "t" && tok.size() == 3) {
      const Var v = to_id(tok[1], h.n, l->number, "vertex id");
      const std::size_t k = to_count(tok[2], l->number, "threshold");
      if (k == 0) throw ParseError(l->number, "thresholds must be positive");
      if (t[v] != 0) throw ParseError(l->number, "second threshold for vertex " + tok[1]);
      t[v] = k;
      ++thresholds;
    } else {
      throw ParseError(l->number, "expected 'e <u> <v>' or 't <v> <k>'");
    }
  }
  if (edges != h.count)
    throw ParseError(r.number(), "header announced " + std::to_string(h.count) + " edges, found " +
                                     std::to_string(edges));
  for (Var v = 0; v < h.n; ++v)
    if (t[v] == 0) throw ParseError(r.number(), "vertex " + std::to_string(v + 1) + " has no threshold");
  (void)thresholds;
  return ThresholdGraph(std::move(g), std::move(t));
}

std::string serialize_threshold_graph(const ThresholdGraph& tg) {
  std::ostringstream os;
  const auto edges = tg.graph().edges();
  os << "tss " << tg.size() << ' ' << edges.size() << '\n';
  write_names(os, tg.graph().universe());
  for (auto [u, v] : edges) os << "e " << u + 1 << ' ' << v + 1 << '\n';
  for (Var v = 0; v < tg.size(); ++v) os << "t " << v + 1 << ' ' << tg.threshold(v) << '\n';
  return os.str();
}

SignedCnf parse_signed_cnf(std::istream& in) {
  LineReader r(in);
  Header h = read_header(r, "cnf");
  SignedCnf cnf{h.n, {}};
  for (std::size_t j = 0; j < h.count; ++j) {
    Line l = take(h, r, "clause");
    std::vector<int> clause;
    for (const auto& tok : l.tokens) {
      const long long lit = to_int(tok, l.number, "literal");
      if (lit == 0) throw ParseError(l.number, "literal 0 (clauses carry no terminating 0)");
      if (static_cast<std::size_t>(lit < 0 ? -lit : lit) > h.n)
        throw ParseError(l.number, "literal " + tok + " outside 1.." + std::to_string(h.n));
      clause.push_back(static_cast<int>(lit));
    }
    cnf.clauses.push_back(std::move(clause));
  }
  expect_end(h, r);
  return cnf;
}

std::string serialize_signed_cnf(const SignedCnf& cnf) {
  std::ostringstream os;
  os << "cnf " << cnf.vars << ' ' << cnf.clauses.size() << '\n';
  for (const auto& c : cnf.clauses) {
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << '\n';
  }
  return os.str();
}

namespace {

const std::map<std::string, GadgetRole::Kind> kChainKinds{
    {"x", GadgetRole::Kind::X}, {"y", GadgetRole::Kind::Y},
    {"z", GadgetRole::Kind::Z}, {"w", GadgetRole::Kind::W}};

}  // namespace

std::vector<GadgetRole> parse_roles(std::istream& in) {
  LineReader r(in);
  Line h = r.expect("header");
  if (h.tokens.size() != 3 || h.tokens[0] != "roles")
    throw ParseError(h.number, "expected header 'roles <vertices> <variables>'");
  const std::size_t total = to_count(h.tokens[1], h.number, "vertex count");
  const std::size_t n = to_count(h.tokens[2], h.number, "variable count");
  if (n > total) throw ParseError(h.number, "more variables than vertices");
  std::vector<GadgetRole> roles(total);
  std::vector<bool> seen(total, false);
  for (Var v = 0; v < n; ++v) {
    roles[v] = {GadgetRole::Kind::Original, 0, v, false};
    seen[v] = true;
  }
  while (auto l = r.next()) {
    const auto& tok = l->tokens;
    if (tok.size() < 3) throw ParseError(l->number, "role line too short");
    const Var id = to_id(tok[0], total, l->number, "vertex id");
    if (seen[id]) throw ParseError(l->number, "vertex " + tok[0] + " listed twice");
    seen[id] = true;
    const std::size_t clause = to_count(tok[2], l->number, "clause index");
    if (clause == 0) throw ParseError(l->number, "clause indices are 1-based");
    if (tok[1] == "p" && tok.size() == 4) {
      roles[id] = {GadgetRole::Kind::Hub, clause - 1, to_id(tok[3], n, l->number, "head"), true};
    } else if (kChainKinds.count(tok[1]) && tok.size() == 5 &&
               (tok[4] == "body" || tok[4] == "head")) {
      roles[id] = {kChainKinds.at(tok[1]), clause - 1, to_id(tok[3], n, l->number, "variable"),
                   tok[4] == "head"};
    } else {
      throw ParseError(l->number, "malformed role line");
    }
  }
  for (Var v = 0; v < total; ++v)
    if (!seen[v]) throw ParseError(r.number(), "vertex " + std::to_string(v + 1) + " has no role");
  return roles;
}

std::string serialize_roles(const GadgetGraph& gadget) {
  std::ostringstream os;
  std::size_t originals = 0;
  for (const auto& role : gadget.roles) originals += role.kind == GadgetRole::Kind::Original;
  os << "roles " << gadget.roles.size() << ' ' << originals << '\n';
  for (Var v = 0; v < gadget.roles.size(); ++v) {
    const auto& role = gadget.roles[v];
    switch (role.kind) {
      case GadgetRole::Kind::Original:
        continue;
      case GadgetRole::Kind::Hub:
        os << v + 1 << " p " << role.clause + 1 << ' ' << role.var + 1 << '\n';
        continue;
      default:
        for (const auto& [name, kind] : kChainKinds)
          if (kind == role.kind)
            os << v + 1 << ' ' << name << ' ' << role.clause + 1 << ' ' << role.var + 1 << ' '
               << (role.head_side ? "head" : "body") << '\n';
    }
  }
  return os.str();
}

std::string format_set(const VarSet& s, const Universe& u, bool names) {
  std::ostringstream os;
  bool first = true;
  s.for_each([&](Var v) {
    os << (first ? "" : " ") << (names && u.has_labels() ? u.name(v) : std::to_string(v + 1));
    first = false;
  });
  return os.str();
}

VarSet parse_id_list(std::string_view text, const Universe& u) {
  std::string buf(text);
  for (char& ch : buf)
    if (ch == ',') ch = ' ';
  std::istringstream ss(buf);
  VarSet s(u.size());
  for (std::string tok; ss >> tok;) {
    if (auto v = u.find(tok)) {
      s.insert(*v);
      continue;
    }
    long long id = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), id);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || id < 1 ||
        static_cast<std::size_t>(id) > u.size())
      throw InputError("'" + tok + "' is neither a label nor an id in 1.." + std::to_string(u.size()));
    s.insert(static_cast<Var>(id - 1));
  }
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace hornkeys::io
