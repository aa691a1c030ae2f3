#include <doctest.h>

#include "oracles.hpp"
#include "reslab/adversaries.hpp"
#include "reslab/generators.hpp"
#include "reslab/matching.hpp"

using namespace reslab;

namespace {

Graph from_mask(int n, std::uint32_t mask) {
  std::vector<Edge> e;
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (mask >> bit & 1) e.push_back({u, v});
  return Graph::from_edges(n, e);
}

// |N(S) ∩ other| < |S| checked directly.
bool violates_hall(const Graph& g, const VertexSet& s, const VertexSet& left, const VertexSet& right) {
  const VertexSet& other = left.contains(s.members().front()) ? right : left;
  int hits = 0;
  for (Vertex v : neighborhood_of_set(g, s)) hits += other.contains(v);
  return hits < static_cast<int>(s.size());
}

}  // namespace

TEST_CASE("maximum matching on small graphs") {
  CHECK(max_matching(complete_graph(4)).size() == 2);
  CHECK(max_matching(star_graph(5)).size() == 1);
  CHECK(max_matching(petersen_graph()).size() == 5);
  CHECK(max_matching(Graph(0)).size() == 0);
  CHECK(has_perfect_matching(complete_graph(4)));
  CHECK_FALSE(has_perfect_matching(complete_graph(5)));
  CHECK(max_matching(complete_graph(5)).is_near_perfect(5));
  std::vector<Edge> e{{0, 1}, {2, 3}};
  CHECK_FALSE(has_perfect_matching(Graph::from_edges(6, e)));
}

TEST_CASE("maximum matching equals exhaustive search on every graph up to 4 vertices") {
  for (int n = 1; n <= 4; ++n)
    for (std::uint32_t mask = 0; mask < (1u << (n * (n - 1) / 2)); ++mask) {
      Graph g = from_mask(n, mask);
      Matching m = max_matching(g);
      CHECK(is_valid_matching(g, m));
      CHECK(static_cast<int>(m.size()) == oracle::max_matching_size(g));
    }
}

TEST_CASE("maximum matching equals exhaustive search on random graphs") {
  for (std::uint64_t s = 0; s < 300; ++s) {
    const int n = 2 + static_cast<int>(s % 9);
    const double p = 0.1 + 0.1 * static_cast<double>(s % 7);
    Graph g = oracle::random_graph(n, p, s);
    Matching m = max_matching(g);
    REQUIRE(is_valid_matching(g, m));
    CHECK(static_cast<int>(m.size()) == oracle::max_matching_size(g));
  }
}

TEST_CASE("blossoms are handled") {
  // Two triangles joined by a path force a blossom contraction.
  std::vector<Edge> e{{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 4}, {6, 7}};
  Graph g = Graph::from_edges(8, e);
  CHECK(max_matching(g).size() == 4);
  CHECK(max_matching(cycle_graph(9)).size() == 4);
}

TEST_CASE("adding an edge never shrinks the maximum matching") {
  Rng rng = make_rng(Seed{11});
  for (int t = 0; t < 40; ++t) {
    Graph g = oracle::random_graph(30, 0.05, 500 + t);
    auto edges = g.edges();
    std::size_t before = max_matching(g).size();
    for (int k = 0; k < 5; ++k) {
      Vertex u = static_cast<Vertex>(rng() % 30), v = static_cast<Vertex>(rng() % 30);
      if (u == v || g.has_edge(u, v)) continue;
      edges.push_back({u, v});
      g = Graph::from_edges(30, edges);
      std::size_t after = max_matching(g).size();
      CHECK(after >= before);
      before = after;
    }
  }
}

TEST_CASE("matchings on larger random graphs are valid") {
  for (std::uint64_t s = 0; s < 5; ++s) {
    Graph g = gnp(400, 0.02, Seed{s});
    Matching m = max_matching(g);
    CHECK(is_valid_matching(g, m));
  }
}

TEST_CASE("hall witness examples") {
  Graph k33 = complete_bipartite(3, 3);
  CHECK_FALSE(hall_witness(k33, VertexSet({0, 1, 2}), VertexSet({3, 4, 5})).has_value());
  std::vector<Edge> e{{0, 2}, {1, 2}};
  Graph g = Graph::from_edges(4, e);
  auto w = hall_witness(g, VertexSet({0, 1}), VertexSet({2, 3}));
  REQUIRE(w.has_value());
  CHECK(*w == VertexSet({0, 1}));
  CHECK_THROWS_AS(bipartite_match(g, VertexSet({0, 1}), VertexSet({1, 2, 3})), Error);
  CHECK_THROWS_AS(bipartite_match(g, VertexSet({0}), VertexSet({2, 3})), Error);
}

TEST_CASE("hall witness agrees with the permutation oracle") {
  for (std::uint64_t s = 0; s < 200; ++s) {
    Graph g = oracle::random_graph(12, 0.15 + 0.05 * static_cast<double>(s % 5), 1000 + s);
    auto [left, right] = random_equal_bipartition(12, Seed{s});
    auto out = bipartite_match(g, left, right);
    const bool perfect = oracle::has_perfect_bipartite(g, left.members(), right.members());
    CHECK(out.witness.has_value() == !perfect);
    CHECK(is_valid_matching(g, out.matching));
    for (auto [u, v] : out.matching.pairs) CHECK(left.contains(u) != left.contains(v));
    if (out.witness)
      CHECK(violates_hall(g, *out.witness, left, right));
    else
      CHECK(out.matching.size() == left.size());
  }
}

TEST_CASE("matching via random split") {
  auto k4 = bipartite_matching_via_random_split(complete_graph(4), Seed{1});
  REQUIRE(k4.matching.has_value());
  CHECK(k4.matching->size() == 2);
  auto empty = bipartite_matching_via_random_split(Graph(4), Seed{1});
  CHECK_FALSE(empty.matching.has_value());
  CHECK(empty.witness.has_value());
  CHECK_THROWS_AS(bipartite_matching_via_random_split(Graph(5), Seed{1}), Error);
}

TEST_CASE("random split survives a bounded random adversary") {
  int found = 0;
  for (std::uint64_t s = 0; s < 50; ++s) {
    Graph g = gnp(200, 0.2, Seed{s});
    auto move = random_degree_bounded(g, 12, MoveMode::remove, Seed{s + 1000});
    Graph gp = apply_move(g, move);
    auto out = bipartite_matching_via_random_split(gp, Seed{s + 2000});
    if (out.matching) {
      ++found;
      CHECK(out.matching->is_perfect(200));
      CHECK(is_valid_matching(gp, *out.matching));
    }
  }
  CHECK(found >= 45);
}
