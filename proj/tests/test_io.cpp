#include <random>
#include <regex>
#include <sstream>

#include <gtest/gtest.h>

#include "critplanar/constructions.hpp"
#include "critplanar/dot.hpp"
#include "critplanar/formats.hpp"
#include "critplanar/graph6.hpp"
#include "critplanar/report.hpp"
#include "support/oracles.hpp"

using namespace critplanar;

namespace {

// Reference encodings produced by networkx.to_graph6_bytes(header=False).
struct Reference {
  const char* name;
  SimpleGraph graph;
  std::string g6;
};

std::vector<Reference> references() {
  RingOptions unsafe;
  unsafe.allow_even = true;
  const std::vector<Operand> four(4, Operand{catalog_k4(), {0, 1, 2}});
  return {
      {"K4", catalog_k4(), "C~"},
      {"W5", catalog_w5(), "Ehfw"},
      {"K5", complete_graph(5), "D~{"},
      {"K33", complete_bipartite(3, 3), "EFz_"},
      {"C5", cycle_graph(5), "Dhc"},
      {"empty5", SimpleGraph(5), "D??"},
      {"K2", complete_graph(2), "A_"},
      {"K1", SimpleGraph(1), "@"},
      {"K0", SimpleGraph(0), "?"},
      {"ring3", k4_ring_family(1).graph, "IvI`WIDQO"},
      {"ring5", k4_ring_family(2).graph, "OvG`WGC@W@OC?J?@O?iQQ"},
      {"g3K4K4", g3_compose(catalog_k4(), {0, 1, 2}, catalog_k4(), {0, 1, 2}).graph, "Gvac]O"},
      {"g4K4W5", g4_compose(catalog_k4(), {0, 1, 2}, catalog_w5(), {0, 1, 2}).graph, "I^_bGCHBw"},
      {"hajosK4K4", hajos_join(catalog_k4(), {0, 1}, catalog_k4(), {0, 1}).graph, "F^QKW"},
      {"g3K4W5", g3_compose(catalog_k4(), {0, 1, 2}, catalog_w5(), {0, 1, 2}).graph, "Iv__KENq?"},
      {"g4K4K4", g4_compose(catalog_k4(), {0, 1, 2}, catalog_k4(), {0, 1, 2}).graph, "G^_bW["},
      {"g4W5W5", g4_compose(catalog_w5(), {0, 1, 2}, catalog_w5(), {0, 1, 2}).graph, "KHf{@@`?GC_^"},
      {"ring4", ring_compose(four, unsafe).graph, "LvG`WIC@W@ODQQ"},
      {"K63", complete_graph(63), "~??" + std::string(326, '~') + "w"},
      {"C64", cycle_graph(64),
       "~?@?hCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@????C????G????G????C????@?????G?????_????"
       "@?????@??????_?????G?????@??????C??????G??????G??????C??????@???????G???????_??????@???????@????????_???????G"
       "???????@????????C????????G????????G????????C????????@?????????G?????????_????????@?????????@??????????_???????"
       "??K?????????@"},
  };
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::IoError;
}

}  // namespace

TEST(Graph6, K4ByHand) {
  // n=4 -> chr(63+4); six set bits -> chr(63+63)
  EXPECT_EQ(encode_graph6(catalog_k4()), "C~");
}

TEST(Graph6, MatchesReferenceEncoder) {
  for (const auto& r : references()) {
    EXPECT_EQ(encode_graph6(r.graph), r.g6) << r.name;
    EXPECT_EQ(decode_graph6(r.g6), r.graph) << r.name;
    EXPECT_EQ(graph6_record_length(r.g6), r.g6.size()) << r.name;
  }
}

TEST(Graph6, RoundTripRandom) {
  std::mt19937_64 rng(64);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = static_cast<std::size_t>(t % 65);
    const auto g = oracles::random_graph(n, (t % 7) / 6.0, rng);
    EXPECT_EQ(decode_graph6(encode_graph6(g)), g) << "n=" << n;
  }
  for (std::size_t n : {62u, 63u, 64u, 100u, 300u}) {
    const auto g = oracles::random_graph(n, 0.3, rng);
    EXPECT_EQ(decode_graph6(encode_graph6(g)), g) << "n=" << n;
  }
}

TEST(Graph6, HeaderBoundaries) {
  EXPECT_EQ(encode_graph6(SimpleGraph(62))[0], '}');
  EXPECT_EQ(encode_graph6(SimpleGraph(63)).substr(0, 4), "~??~");
  EXPECT_EQ(encode_graph6(SimpleGraph(64)).substr(0, 4), "~?@?");
}

TEST(Graph6, AcceptsHeaderAndNewline) {
  EXPECT_EQ(decode_graph6(">>graph6<<C~\n"), catalog_k4());
}

TEST(Graph6, DecodeErrors) {
  EXPECT_EQ(code_of([] { decode_graph6("C"); }), ErrorCode::DecodeError);
  EXPECT_EQ(code_of([] { decode_graph6("C~~"); }), ErrorCode::DecodeError);
  EXPECT_EQ(code_of([] { decode_graph6("C "); }), ErrorCode::DecodeError);
  // K3: bits 111 then padding; "Bw" is valid, "Bx" sets a padding bit
  EXPECT_EQ(decode_graph6("Bw"), complete_graph(3));
  EXPECT_EQ(code_of([] { decode_graph6("Bx"); }), ErrorCode::DecodeError);
  EXPECT_EQ(code_of([] { decode_graph6(""); }), ErrorCode::DecodeError);
}

TEST(EdgeList, RoundTripAndErrors) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const auto g = oracles::random_graph(static_cast<std::size_t>(t % 20), 0.3, rng);
    EXPECT_EQ(decode_edge_list(encode_edge_list(g)), g);
  }
  EXPECT_EQ(encode_edge_list(path_graph(3)), "3 2\n0 1\n1 2\n");
  EXPECT_EQ(code_of([] { decode_edge_list("3"); }), ErrorCode::DecodeError);
  EXPECT_EQ(code_of([] { decode_edge_list("3 2\n0 1\n"); }), ErrorCode::DecodeError);
  EXPECT_EQ(code_of([] { decode_edge_list("3 1\n0 5\n"); }), ErrorCode::DecodeError);
  EXPECT_EQ(code_of([] { decode_edge_list("3 1\n1 1\n"); }), ErrorCode::DecodeError);
  EXPECT_EQ(code_of([] { decode_edge_list("3 1\n0 1\n2 0\n"); }), ErrorCode::DecodeError);
}

TEST(Formats, Names) {
  EXPECT_EQ(parse_format("dot"), GraphFormat::Dot);
  EXPECT_EQ(format_for_path("x/y.el"), GraphFormat::EdgeList);
  EXPECT_FALSE(format_for_path("graph.txt").has_value());
  EXPECT_THROW(parse_format("gml"), Error);
}

namespace {

// Accepts the DOT subset the exporter emits: statements are node defaults,
// node declarations with optional attributes, or undirected edges.
bool dot_grammar_ok(const std::string& text) {
  static const std::regex node_default(R"(\s*node\s*\[[^\]]*\]\s*;)");
  static const std::regex node_stmt(R"(\s*v\d+(\s*\[\s*\w+\s*=\s*("[^"]*"|\w+)(\s*,\s*\w+\s*=\s*("[^"]*"|\w+))*\s*\])?\s*;)");
  static const std::regex edge_stmt(R"(\s*v\d+\s*--\s*v\d+(\s*\[[^\]]*\])?\s*;)");
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "graph G {") return false;
  bool closed = false;
  while (std::getline(in, line)) {
    if (closed) return line.empty();
    if (line == "}") {
      closed = true;
      continue;
    }
    if (!std::regex_match(line, node_default) && !std::regex_match(line, node_stmt) &&
        !std::regex_match(line, edge_stmt))
      return false;
  }
  return closed;
}

std::size_t count_lines_matching(const std::string& text, const std::regex& re) {
  std::istringstream in(text);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) n += std::regex_search(line, re);
  return n;
}

}  // namespace

TEST(Dot, PlainGraph) {
  const auto text = export_dot(catalog_k4());
  EXPECT_TRUE(dot_grammar_ok(text)) << text;
  EXPECT_EQ(count_lines_matching(text, std::regex("--")), 6u);
  EXPECT_EQ(count_lines_matching(text, std::regex(R"(^\s*v\d+ \[label)")), 4u);
  EXPECT_EQ(count_lines_matching(text, std::regex("dashed|bold")), 0u);
}

TEST(Dot, CompositionStyling) {
  const auto c = k4_ring_family(1);
  const auto text = export_dot(c.graph, &c);
  EXPECT_TRUE(dot_grammar_ok(text)) << text;
  EXPECT_EQ(count_lines_matching(text, std::regex("--")), 18u);
  EXPECT_EQ(count_lines_matching(text, std::regex("style=dashed")), 3u);
  EXPECT_EQ(count_lines_matching(text, std::regex(R"(label="z")")), 1u);

  const auto g4 = g4_compose(catalog_k4(), {0, 1, 2}, catalog_w5(), {0, 1, 2});
  const auto g4_text = export_dot(g4.graph, &g4);
  EXPECT_TRUE(dot_grammar_ok(g4_text));
  EXPECT_EQ(count_lines_matching(g4_text, std::regex("style=bold")), 4u);
  EXPECT_EQ(count_lines_matching(g4_text, std::regex(R"(label="z")")), 0u);
}

TEST(Report, PendantEdge) {
  const SimpleGraph g(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}});
  const auto text = serialize_report(verify_k_critical(g, 4));
  const auto back = parse_report(text);
  EXPECT_FALSE(back.is_k_critical);
  ASSERT_EQ(back.failing_edges.size(), 1u);
  EXPECT_EQ(back.failing_edges[0], (Edge{0, 4}));
  EXPECT_NE(text.find("\"chromatic_vs_k\": \"equal\""), std::string::npos);
  EXPECT_TRUE(report_is_consistent(g, back));
}

TEST(Report, RingWitnesses) {
  const auto g = k4_ring_family(1).graph;
  const auto r = verify_k_critical(g, 4);
  const auto text = serialize_report(r);
  const auto back = parse_report(text);
  EXPECT_TRUE(back.is_k_critical);
  EXPECT_TRUE(back.planar);
  ASSERT_EQ(back.witnesses.size(), 18u);
  for (const auto& w : back.witnesses) EXPECT_EQ(w.coloring.colors.size(), 10u);
  EXPECT_TRUE(report_is_consistent(g, back));
  EXPECT_EQ(serialize_report(back), text);
}

TEST(Report, ExceedsBound) {
  const auto text = serialize_report(verify_k_critical(complete_graph(6), 4));
  EXPECT_NE(text.find("\"chromatic_is_lower_bound\": true"), std::string::npos);
  EXPECT_NE(text.find("\"chromatic_vs_k\": \"greater\""), std::string::npos);
}

TEST(Report, Malformed) {
  EXPECT_EQ(code_of([] { parse_report("{"); }), ErrorCode::DecodeError);
  EXPECT_EQ(code_of([] { parse_report("{\"k\": 4}"); }), ErrorCode::DecodeError);
}
