#include <doctest.h>

#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "reslab/adversaries.hpp"
#include "reslab/coloring.hpp"
#include "reslab/generators.hpp"

using namespace reslab;

namespace {

std::vector<Vertex> identity(int n) {
  std::vector<Vertex> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

double k0_lhs(int n, double p, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0) +
         k * (k - 1) / 2.0 * std::log1p(-p);
}

}  // namespace

TEST_CASE("greedy coloring") {
  CHECK(greedy_coloring(complete_graph(6), identity(6)).count == 6);
  CHECK(greedy_coloring(Graph(4), identity(4)).count == 1);
  CHECK(greedy_coloring(cycle_graph(5), {4, 2, 0, 1, 3}).count <= 3);
  CHECK_THROWS_AS(greedy_coloring(Graph(3), {0, 1}), Error);
  CHECK_THROWS_AS(greedy_coloring(Graph(3), {0, 1, 1}), Error);
  Coloring bad{{0, 0}, 1};
  std::vector<Edge> e{{0, 1}};
  CHECK_FALSE(is_proper(Graph::from_edges(2, e), bad));
}

TEST_CASE("DSATUR") {
  CHECK(dsatur(complete_bipartite(3, 3)).count == 2);
  CHECK(dsatur(complete_graph(5)).count == 5);
  CHECK(dsatur(Graph(0)).count == 0);
  for (std::uint64_t s = 0; s < 60; ++s) {
    Graph g = oracle::random_graph(3 + static_cast<int>(s % 7), 0.5, s);
    Coloring c = dsatur(g);
    CHECK(is_proper(g, c));
    CHECK(c.count <= oracle::chromatic_number(g) + 1);
  }
}

TEST_CASE("exact chromatic number") {
  CHECK(exact_chromatic(cycle_graph(5)) == 3);
  CHECK(exact_chromatic(petersen_graph()) == 3);
  CHECK(exact_chromatic(Graph(3)) == 1);
  CHECK(exact_chromatic(Graph(0)) == 0);
  std::vector<Edge> e;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) e.push_back({i, j});
  CHECK(exact_chromatic(Graph::from_edges(9, e)) == 4);
  CHECK_THROWS_AS(exact_chromatic(Graph(19)), Error);
  for (std::uint64_t s = 0; s < 60; ++s) {
    Graph g = oracle::random_graph(2 + static_cast<int>(s % 7), 0.45, 200 + s);
    CHECK(exact_chromatic(g) == oracle::chromatic_number(g));
  }
}

TEST_CASE("chromatic estimates are ordered") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    Graph g = gnp(16, 0.4, Seed{s});
    const int chi = exact_chromatic(g);
    const int ds = dsatur(g).count;
    CHECK(chi <= ds);
    Rng rng = make_rng(Seed{s});
    auto order = identity(16);
    std::shuffle(order.begin(), order.end(), rng);
    Coloring gr = greedy_coloring(g, order);
    CHECK(is_proper(g, gr));
    CHECK(chi <= gr.count);
  }
}

TEST_CASE("degeneracy") {
  CHECK(degeneracy(path_graph(6)).d == 1);
  CHECK(degeneracy(star_graph(5)).d == 1);
  CHECK(degeneracy(complete_graph(5)).d == 4);
  CHECK(degeneracy(cycle_graph(6)).d == 2);
  CHECK(degeneracy(Graph(3)).d == 0);
  for (std::uint64_t s = 0; s < 40; ++s) {
    Graph g = oracle::random_graph(4 + static_cast<int>(s % 8), 0.4, 300 + s);
    auto cert = degeneracy(g);
    CHECK(cert.d == oracle::degeneracy(g));
    Coloring c = greedy_coloring(g, cert.coloring_order());
    CHECK(is_proper(g, c));
    CHECK(c.count <= cert.d + 1);
  }
  Graph big = gnp(500, 0.05, Seed{1});
  auto cert = degeneracy(big);
  CHECK(greedy_coloring(big, cert.coloring_order()).count <= cert.d + 1);
}

TEST_CASE("partition coloring of a union") {
  Graph g = gnp(300, 0.3, Seed{1});
  auto plain = partition_color_union(g, Graph(300), 0, Seed{2}, 0.3);
  CHECK(is_proper(g, plain.coloring));
  CHECK(plain.coloring.count <= std::accumulate(plain.part_colors.begin(), plain.part_colors.end(), 0));
  CHECK(plain.patch_set_size == 0);
  CHECK(plain.parts == 1);  // d = 0 gives s = 1

  // Edgeless G with a perfect matching H.
  std::vector<Edge> e;
  for (int i = 0; i < 50; i += 2) e.push_back({i, i + 1});
  Graph h = Graph::from_edges(50, e);
  auto m = partition_color_union(Graph(50), h, 1, Seed{3});
  CHECK(is_proper(h, m.coloring));
  CHECK(m.coloring.count <= m.parts + m.patch_colors);

  CHECK_THROWS_AS(partition_color_union(g, complete_graph(300), 3, Seed{1}), Error);
  CHECK_THROWS_AS(partition_color_union(g, Graph(299), 3, Seed{1}), Error);
}

TEST_CASE("partition coloring stays proper under adversarial H") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    Graph g = gnp(400, 0.2, Seed{s});
    for (int d : {1, 3, 8}) {
      // Random H on non-edges, and a clique H that targets a single part.
      Graph h1 = random_degree_bounded(g, d, MoveMode::add, Seed{s + 50}).h;
      Graph h2 = clique_addition(g, d, Seed{s + 60}).h;
      for (const Graph& h : {h1, h2}) {
        auto u = partition_color_union(g, h, d, Seed{s + 70}, 0.2);
        CHECK(is_proper(edge_union(g, h), u.coloring));
        CHECK(u.patch_set_size <= 2 * u.monochromatic);
      }
    }
  }
}

TEST_CASE("k0") {
  for (int n : {50, 200, 1000, 5000})
    for (double p : {0.05, 0.2, 0.5, 0.9}) {
      const int k = k0(n, p);
      if (k > 0) CHECK(k0_inequality_holds(n, p, k));
      CHECK_FALSE(k0_inequality_holds(n, p, k + 1));
      if (k > 0) CHECK(k0_lhs(n, p, k) >= 4 * std::log(n));
      CHECK(k0_lhs(n, p, k + 1) < 4 * std::log(n));
    }
  for (int n : {100, 5000}) {
    int prev = 1 << 30;
    for (double p = 0.01; p < 1; p += 0.07) {
      CHECK(k0(n, p) <= prev);
      prev = k0(n, p);
    }
  }
  CHECK(k0(5000, 0.01) > 0);
  CHECK_THROWS_AS(k0(100, 0.0), Error);
  CHECK_THROWS_AS(k0(100, 1.0), Error);
}

TEST_CASE("cover number") {
  CHECK(cover_number_bruteforce(complete_graph(5), 2).size == 0);
  CHECK(cover_number_bruteforce(Graph(3), 2).size == 3);
  CHECK(cover_number_bruteforce(cycle_graph(5), 2).size == 5);
  CHECK_THROWS_AS(cover_number_bruteforce(Graph(13), 2), Error);
  for (std::uint64_t s = 0; s < 40; ++s) {
    const int n = 4 + static_cast<int>(s % 4);
    Graph g = oracle::random_graph(n, 0.4, 400 + s);
    const int k = 3;
    CoverResult c = cover_number_bruteforce(g, k);
    CHECK(c.size == oracle::cover_number(g, k));
    CHECK(static_cast<int>(c.pairs.size()) == c.size);
    // Certificate replay: adding the pairs as edges kills every independent k-set.
    Graph closed = edge_union(g, Graph::from_edges_dedup(n, c.pairs));
    CHECK(independent_k_sets(closed, k, 100000).empty());
  }
}

TEST_CASE("independence number") {
  CHECK(independence_number_exact(complete_graph(6)) == 1);
  CHECK(independence_number_exact(Graph(7)) == 7);
  CHECK(independence_number_exact(cycle_graph(5)) == 2);
  CHECK(independence_number_exact(petersen_graph()) == 4);
  CHECK_THROWS_AS(independence_number_exact(Graph(41)), Error);
  for (std::uint64_t s = 0; s < 30; ++s) {
    Graph g = oracle::random_graph(4 + static_cast<int>(s % 10), 0.3, 500 + s);
    CHECK(independence_number_exact(g) == oracle::independence_number(g));
  }
  Graph big = gnp(40, 0.5, Seed{1});
  CHECK(independence_number_exact(big) >= 3);
}
