#include <gtest/gtest.h>

#include "coentropy/graph.hpp"
#include "coentropy/graph6.hpp"

using namespace coentropy;

TEST(Graph, EdgesAreSortedAndDeduplicated) {
  Graph g = from_edge_list(4, {{3, 1}, {1, 2}, {1, 3}, {2, 1}});
  ASSERT_EQ(g.size(), 2);
  EXPECT_EQ(g.edges()[0], (Edge{0, 1}));
  EXPECT_EQ(g.edges()[1], (Edge{0, 2}));
  EXPECT_TRUE(g.has_edge(2, 0));
  EXPECT_FALSE(g.has_edge(1, 2));
}

TEST(Graph, RejectsBadInput) {
  EXPECT_THROW(from_edge_list(3, {{1, 1}}), LoopEdge);
  EXPECT_THROW(from_edge_list(3, {{1, 4}}), OutOfRange);
  EXPECT_THROW(from_edge_list(3, {{0, 2}}), OutOfRange);
  EXPECT_THROW(Graph::from_zero_based(0, {}), OutOfRange);
}

TEST(Graph, DegreesAndComponents) {
  Graph g = from_edge_list(6, {{1, 2}, {2, 3}, {4, 5}});
  EXPECT_EQ(degrees(g), (std::vector<int>{1, 2, 1, 1, 1, 0}));
  EXPECT_TRUE(has_isolated_vertex(g));
  auto c = components(g);
  EXPECT_EQ(c.count, 3);
  EXPECT_EQ(c.isolated_count, 1);
  EXPECT_EQ(c.component_of[0], c.component_of[2]);
  EXPECT_NE(c.component_of[0], c.component_of[3]);
}

TEST(EdgeList, BothNotationsParse) {
  Graph a = parse_edge_list("3; {1,2} {1,3}");
  Graph b = parse_edge_list("{{1, 2}, {1, 3}}", 3);
  Graph c = parse_edge_list("{{1, 2}, {1, 3}}");
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
  EXPECT_EQ(parse_edge_list("5; {1,2}").order(), 5);
  EXPECT_EQ(parse_edge_list("4;").size(), 0);
}

TEST(EdgeList, Malformed) {
  EXPECT_THROW(parse_edge_list("3; {1,2} x"), MalformedEdgeList);
  EXPECT_THROW(parse_edge_list("a; {1,2}"), MalformedEdgeList);
  EXPECT_THROW(parse_edge_list("{}"), MalformedEdgeList);
  EXPECT_THROW(parse_edge_list("2; {1,3}"), OutOfRange);
}

TEST(EdgeList, FormatRoundTrip) {
  Graph g = from_edge_list(5, {{1, 2}, {2, 5}, {3, 4}});
  EXPECT_EQ(format_edge_list(g), "{{1, 2}, {2, 5}, {3, 4}}");
  EXPECT_EQ(parse_edge_list(format_edge_list(g), 5), g);
}

TEST(Graph, PermuteAndComplement) {
  Graph p = from_edge_list(3, {{1, 2}, {2, 3}});
  std::vector<int> perm{1, 0, 2};
  Graph q = permute(p, perm);
  EXPECT_EQ(q, from_edge_list(3, {{1, 2}, {1, 3}}));
  EXPECT_EQ(complement(p), from_edge_list(3, {{1, 3}}));
  EXPECT_EQ(complement(complement(p)), p);
}

TEST(Graph6, KnownEncodings) {
  EXPECT_EQ(graph6_encode(Graph::from_zero_based(1, {})), "@");
  EXPECT_EQ(graph6_encode(Graph::from_zero_based(5, {})), "D??");
  EXPECT_EQ(graph6_encode(from_edge_list(3, {{1, 2}, {1, 3}, {2, 3}})), "Bw");
  EXPECT_EQ(graph6_encode(from_edge_list(4, {{1, 2}, {2, 3}, {3, 4}})), "Ch");
  EXPECT_EQ(graph6_encode(from_edge_list(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}})), "C~");
}

TEST(Graph6, DecodeInvertsEncode) {
  Graph g = from_edge_list(9, {{1, 9}, {2, 8}, {3, 7}, {4, 6}, {5, 9}, {1, 2}});
  EXPECT_EQ(graph6_decode(graph6_encode(g)), g);
  EXPECT_EQ(graph6_decode("Ch\n"), from_edge_list(4, {{1, 2}, {2, 3}, {3, 4}}));
}

TEST(Graph6, Malformed) {
  EXPECT_THROW(graph6_decode(""), MalformedGraph6);
  EXPECT_THROW(graph6_decode("C"), MalformedGraph6);    // too short
  EXPECT_THROW(graph6_decode("Chh"), MalformedGraph6);  // too long
  EXPECT_THROW(graph6_decode("C\x7f"), MalformedGraph6);
  EXPECT_THROW(graph6_decode("Bx"), MalformedGraph6);  // nonzero padding
  EXPECT_THROW(graph6_decode("~??"), MalformedGraph6);  // long form
}
