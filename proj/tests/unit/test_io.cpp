#include <gtest/gtest.h>

#include <functional>
#include <sstream>

#include "hornkeys/generators.hpp"
#include "hornkeys/io.hpp"
#include "test_util.hpp"

using namespace hornkeys;
using namespace hornkeys::testing;

namespace {

template <class Parser>
auto parse(Parser p, const std::string& text) {
  std::istringstream in(text);
  return p(in);
}

std::size_t error_line(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

const std::string kPhiB =
    "horn 4 6\n"
    "1 2 -> 3\n"
    "1 2 -> 4\n"
    "2 3 -> 1\n"
    "2 3 -> 4\n"
    "3 4 -> 1\n"
    "3 4 -> 2\n";

}  // namespace

TEST(HornFormat, PhiBRoundTripsByteIdentically) {
  const HornCnf cnf = parse(io::parse_horn, kPhiB);
  EXPECT_EQ(cnf, key_horn_cnf(path_hypergraph()));
  EXPECT_EQ(io::serialize_horn(cnf), kPhiB);
}

TEST(HornFormat, CommentsNamesAndEmptyBodies) {
  const HornCnf cnf = parse(io::parse_horn,
                            "# intro\nhorn 3 2\nnames a b c\n\n-> 1\n  1 -> 2\n");
  EXPECT_EQ(cnf.universe().name(2), "c");
  EXPECT_TRUE(cnf.clauses()[0].body.empty());
  EXPECT_EQ(io::serialize_horn(cnf), "horn 3 2\nnames a b c\n-> 1\n1 -> 2\n");
}

TEST(HornFormat, ErrorsNameTheLine) {
  EXPECT_EQ(error_line([] { parse(io::parse_horn, "horn 3 1\n1 2 -> x\n"); }), 2u);
  EXPECT_EQ(error_line([] { parse(io::parse_horn, "horn 3 1\n0 -> 2\n"); }), 2u);
  EXPECT_EQ(error_line([] { parse(io::parse_horn, "horn 3 1\n1 -> 4\n"); }), 2u);
  EXPECT_EQ(error_line([] { parse(io::parse_horn, "horn 3 2\n1 -> 2\n\n1 -> 1\n"); }), 4u);
  EXPECT_EQ(error_line([] { parse(io::parse_horn, "horn 3 1\n1 2 3\n"); }), 2u);
  EXPECT_EQ(error_line([] { parse(io::parse_horn, "horn 3 1\n1 -> 2\n2 -> 3\n"); }), 3u);
  EXPECT_EQ(error_line([] { parse(io::parse_horn, "horn 3 2\n1 -> 2\n"); }), 3u);
  EXPECT_EQ(error_line([] { parse(io::parse_horn, "hg 3 1\n1 -> 2\n"); }), 1u);
  EXPECT_EQ(error_line([] { parse(io::parse_horn, "horn 2 0\nnames a a\n"); }), 2u);
}

TEST(HypergraphFormat, ParseCanonicalizesAndRejectsNonSperner) {
  const auto b = parse(io::parse_hypergraph, "hg 4 4\n2 3 4\n1 4\n1 3\n1 2\n");
  EXPECT_EQ(b, unique_example());
  EXPECT_EQ(io::serialize_hypergraph(b), "hg 4 4\n1 2\n1 3\n1 4\n2 3 4\n");
  EXPECT_EQ(error_line([] { parse(io::parse_hypergraph, "hg 3 2\n1\n1 2\n"); }), 3u);
  const auto empty_edge = parse(io::parse_hypergraph, "hg 2 1\n-\n");
  EXPECT_TRUE(empty_edge.is_empty_edge_family());
  EXPECT_EQ(io::serialize_hypergraph(empty_edge), "hg 2 1\n-\n");
}

TEST(GraphFormat, TwoEndpointsPerEdge) {
  const Graph g = parse(io::parse_graph, "hg 3 2\n1 2\n2 3\n");
  EXPECT_EQ(g, graph_from(3, {"ab", "bc"}));
  EXPECT_EQ(error_line([] { parse(io::parse_graph, "hg 3 1\n1 2 3\n"); }), 2u);
  EXPECT_EQ(error_line([] { parse(io::parse_graph, "hg 3 1\n2 2\n"); }), 2u);
}

TEST(ThresholdFormat, FiveVertexRoundTrip) {
  const auto tg = five_vertex_tss();
  const std::string text = io::serialize_threshold_graph(tg);
  EXPECT_EQ(parse(io::parse_threshold_graph, text), tg);
  EXPECT_EQ(error_line([] { parse(io::parse_threshold_graph, "tss 2 1\ne 1 2\nt 1 1\n"); }), 3u);
  EXPECT_EQ(error_line([] {
              parse(io::parse_threshold_graph, "tss 2 2\ne 1 2\ne 2 1\nt 1 1\nt 2 1\n");
            }),
            3u);
  EXPECT_EQ(error_line([] { parse(io::parse_threshold_graph, "tss 1 0\nt 1 0\n"); }), 2u);
  EXPECT_EQ(error_line([] { parse(io::parse_threshold_graph, "tss 1 0\nt 1 1\nt 1 2\n"); }), 3u);
}

TEST(SignedCnfFormat, RoundTripAndErrors) {
  const auto cnf = parse(io::parse_signed_cnf, "cnf 4 3\n1 2 -3\n-1 -2 4\n-2 -3 -4\n");
  EXPECT_EQ(cnf.vars, 4u);
  EXPECT_EQ(cnf.clauses[2], (std::vector<int>{-2, -3, -4}));
  EXPECT_EQ(io::serialize_signed_cnf(cnf), "cnf 4 3\n1 2 -3\n-1 -2 4\n-2 -3 -4\n");
  EXPECT_EQ(error_line([] { parse(io::parse_signed_cnf, "cnf 2 1\n1 -2 0\n"); }), 2u);
  EXPECT_EQ(error_line([] { parse(io::parse_signed_cnf, "cnf 2 1\n3\n"); }), 2u);
}

TEST(RoleFormat, RoundTrip) {
  HornCnf cnf{Universe(3)};
  cnf.add({0, 1}, 2);
  const GadgetGraph g = horn_to_tss(cnf);
  const auto roles = parse(io::parse_roles, io::serialize_roles(g));
  ASSERT_EQ(roles.size(), g.roles.size());
  for (std::size_t i = 0; i < roles.size(); ++i) {
    EXPECT_EQ(roles[i].kind, g.roles[i].kind) << i;
    EXPECT_EQ(roles[i].clause, g.roles[i].clause) << i;
    EXPECT_EQ(roles[i].var, g.roles[i].var) << i;
    EXPECT_EQ(roles[i].head_side, g.roles[i].head_side) << i;
  }
}

TEST(IdLists, IdsAndLabels) {
  const Universe plain(4);
  EXPECT_EQ(io::parse_id_list("1,3 4", plain), VarSet(4, {0, 2, 3}));
  EXPECT_EQ(io::parse_id_list("", plain), VarSet(4));
  EXPECT_THROW(io::parse_id_list("5", plain), InputError);
  const Universe named(3, {"x", "y", "z"});
  EXPECT_EQ(io::parse_id_list("z,1", named), VarSet(3, {0, 2}));
  EXPECT_EQ(io::format_set(VarSet(3, {0, 2}), named, true), "x z");
  EXPECT_EQ(io::format_set(VarSet(3, {0, 2}), named, false), "1 3");
}

TEST(IoFiles, MissingFileIsInputError) {
  EXPECT_THROW(io::read_file("/nonexistent/hornkeys.horn"), InputError);
}

TEST(RoundTrip, RandomInstances) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    gen::InstanceSeed p;
    p.seed = seed;
    p.n = 1 + seed % 9;
    p.m = seed % 12;
    const HornCnf cnf = gen::random_horn_cnf(p);
    EXPECT_EQ(parse(io::parse_horn, io::serialize_horn(cnf)), cnf);
    const auto b = gen::random_sperner(p);
    EXPECT_EQ(parse(io::parse_hypergraph, io::serialize_hypergraph(b)), b);
    const Graph g = gen::random_graph(p);
    EXPECT_EQ(parse(io::parse_graph, io::serialize_graph(g)), g);
    const auto tg = gen::random_threshold_graph(p);
    EXPECT_EQ(parse(io::parse_threshold_graph, io::serialize_threshold_graph(tg)), tg);
    const auto sc = gen::random_signed_cnf(p);
    EXPECT_EQ(parse(io::parse_signed_cnf, io::serialize_signed_cnf(sc)).clauses, sc.clauses);
  }
}
