#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "reslab/graph.hpp"

using namespace reslab;

TEST_CASE("graph construction and queries") {
  std::vector<Edge> e{{0, 1}, {2, 1}, {3, 0}};
  Graph g = Graph::from_edges(4, e);
  CHECK(g.order() == 4);
  CHECK(g.size() == 3);
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(2, 1));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}});
  CHECK(degree(g, 0) == 2);
  CHECK(max_degree(g) == 2);
  CHECK(min_degree(g) == 1);
  CHECK_FALSE(is_regular(g));
  CHECK(is_regular(cycle_graph(7)));
}

TEST_CASE("graph construction rejects malformed edges") {
  std::vector<Edge> loop{{1, 1}};
  std::vector<Edge> dup{{0, 1}, {1, 0}};
  std::vector<Edge> range{{0, 4}};
  CHECK_THROWS_AS(Graph::from_edges(4, loop), Error);
  CHECK_THROWS_WITH_AS(Graph::from_edges(4, dup), doctest::Contains("duplicate edge"), Error);
  CHECK_THROWS_AS(Graph::from_edges(4, range), Error);
  CHECK(Graph::from_edges_dedup(4, dup).size() == 1);
  CHECK_THROWS_AS(degree(Graph(3), 3), Error);
}

TEST_CASE("vertex sets are sorted and duplicate free") {
  VertexSet s({3, 1, 2});
  CHECK(s.members() == std::vector<Vertex>{1, 2, 3});
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(0));
  CHECK_THROWS_AS(VertexSet({1, 1}), Error);
  CHECK_THROWS_AS(VertexSet({-1}), Error);
  CHECK_THROWS_AS(s.mask(3), Error);
  CHECK(VertexSet::range(3).size() == 3);
}

TEST_CASE("set edge counts") {
  Graph k = complete_graph(6);
  VertexSet a({0, 1}), b({2, 3, 4});
  CHECK(edges_between(k, a, b) == 6);
  CHECK(edges_within(k, b) == 3);
  CHECK(cut_size(k, a) == 8);
  CHECK_THROWS_AS(edges_between(k, a, VertexSet({1, 2})), Error);
  CHECK(neighborhood_of_set(star_graph(4), VertexSet({1, 2})) == VertexSet({0}));
}

TEST_CASE("edge count identities on random graphs") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    Graph g = oracle::random_graph(25, 0.3, t);
    std::vector<Vertex> in, out;
    for (int v = 0; v < 25; ++v) (rng() & 1 ? in : out).push_back(v);
    VertexSet x(in), y(out);
    // e(X) + e(Y) + e(X,Y) = m
    CHECK(edges_within(g, x) + edges_within(g, y) + edges_between(g, x, y) == g.size());
    CHECK(cut_size(g, x) == cut_size(g, y));
    std::int64_t deg_sum = 0;
    for (Vertex v : x) deg_sum += degree(g, v);
    CHECK(deg_sum == 2 * edges_within(g, x) + cut_size(g, x));
  }
}

TEST_CASE("edge set operations") {
  Graph g = cycle_graph(5);
  std::vector<Edge> he{{0, 1}, {0, 2}};
  Graph h = Graph::from_edges(5, he);
  CHECK_THROWS_WITH_AS(subtract(g, h), doctest::Contains("{0,2}"), Error);
  Graph d = symmetric_difference(g, h);
  CHECK(d.size() == 5);
  CHECK_FALSE(d.has_edge(0, 1));
  CHECK(d.has_edge(0, 2));
  CHECK(edge_union(g, h).size() == 6);
  CHECK(symmetric_difference(d, h) == g);
  CHECK_THROWS_AS(edge_union(g, Graph(4)), Error);
}

TEST_CASE("induced subgraphs") {
  Graph g = cycle_graph(6);
  VertexSet x({1, 2, 3});
  Graph sub = induced_subgraph(g, x);
  CHECK(sub.order() == 3);
  CHECK(sub.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  Graph full = induced_on_full(g, x);
  CHECK(full.order() == 6);
  CHECK(full.edges() == std::vector<Edge>{{1, 2}, {2, 3}});
}

TEST_CASE("edge list round trip") {
  for (int t = 0; t < 10; ++t) {
    Graph g = oracle::random_graph(30, 0.2, 100 + t);
    CHECK(parse_edge_list(serialize_edge_list(g)) == g);
  }
  CHECK(parse_edge_list("3 2\n\n2 0\n1 2\n").edges() == std::vector<Edge>{{0, 2}, {1, 2}});
  CHECK_THROWS_WITH_AS(parse_edge_list("3 2\n0 1\n1 1\n"), doctest::Contains("line 3"), Error);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), Error);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n1 0\n"), Error);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 x\n"), Error);
  CHECK_THROWS_AS(parse_edge_list(""), Error);
}

TEST_CASE("named graphs") {
  CHECK(complete_graph(5).size() == 10);
  CHECK(cycle_graph(5).size() == 5);
  CHECK(path_graph(5).size() == 4);
  CHECK(star_graph(4).order() == 5);
  CHECK(complete_bipartite(2, 3).size() == 6);
  Graph p = petersen_graph();
  CHECK(p.order() == 10);
  CHECK(p.size() == 15);
  CHECK(is_regular(p));
  CHECK(max_degree(p) == 3);
}
