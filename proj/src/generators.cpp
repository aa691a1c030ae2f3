#include "reslab/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace reslab {

Graph gnp(int n, double p, Seed seed) {
  if (n < 0) throw Error("gnp: negative vertex count");
  if (!(p >= 0.0 && p <= 1.0)) throw Error("gnp: p must lie in [0,1], got " + std::to_string(p));
  Rng rng = make_rng(seed);
  std::vector<Edge> edges;
  if (p == 0.0 || n < 2) return Graph(n);
  if (p >= 0.1) {
    edges.reserve(static_cast<std::size_t>(p * n * (n - 1) / 2 * 1.05) + 16);
    std::bernoulli_distribution coin(p);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (coin(rng)) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
  }
  // Batagelj-Brandes: walk the lower triangle (v > w) with geometric jumps.
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double log_q = std::log1p(-p);
  std::int64_t v = 1, w = -1;
  while (v < n) {
    double r = unit(rng);
    w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
    while (w >= v && v < n) {
      w -= v;
      ++v;
    }
    if (v < n) edges.emplace_back(static_cast<Vertex>(w), static_cast<Vertex>(v));
  }
  return Graph::from_edges(n, edges);
}

Graph random_regular(int n, int d, Seed seed) {
  if (n < 0 || d < 0) throw Error("random_regular: negative parameter");
  if (d >= n && !(n == 0 && d == 0)) throw Error("random_regular: need d < n (d=" + std::to_string(d) + ", n=" + std::to_string(n) + ")");
  if ((static_cast<std::int64_t>(n) * d) % 2 != 0) throw Error("random_regular: n*d must be even");
  if (d == 0) return Graph(n);

  Rng rng = make_rng(seed);
  const std::int64_t cap = 10LL * n * d;
  std::int64_t redraws = 0;
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  std::vector<Vertex> points;

  auto legal = [&](Vertex u, Vertex v) {
    return u != v && std::find(adj[u].begin(), adj[u].end(), v) == adj[u].end();
  };
  // True if some pair among the remaining points can still be joined.
  auto any_legal = [&]() {
    std::vector<Vertex> distinct(points);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (std::size_t i = 0; i < distinct.size(); ++i)
      for (std::size_t j = i + 1; j < distinct.size(); ++j)
        if (legal(distinct[i], distinct[j])) return true;
    return false;
  };

  for (;;) {
    for (auto& a : adj) a.clear();
    points.clear();
    for (Vertex v = 0; v < n; ++v)
      for (int k = 0; k < d; ++k) points.push_back(v);

    bool stuck = false;
    int misses = 0;
    while (!points.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
      std::size_t i = pick(rng), j = pick(rng);
      Vertex u = points[i], v = points[j];
      if (i == j || !legal(u, v)) {
        if (++redraws > cap) throw Error("random_regular: exceeded " + std::to_string(cap) + " redraws");
        if (++misses >= 64 || points.size() <= static_cast<std::size_t>(4 * d + 2)) {
          if (!any_legal()) {
            stuck = true;
            break;
          }
          misses = 0;
        }
        continue;
      }
      misses = 0;
      adj[u].push_back(v);
      adj[v].push_back(u);
      // Remove the higher index first so the lower one stays valid.
      for (std::size_t k : {std::max(i, j), std::min(i, j)}) {
        points[k] = points.back();
        points.pop_back();
      }
    }
    if (!stuck) break;
    if (++redraws > cap) throw Error("random_regular: exceeded " + std::to_string(cap) + " redraws");
  }

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * d / 2);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : adj[v])
      if (v < w) edges.emplace_back(v, w);
  return Graph::from_edges(n, edges);
}

std::pair<VertexSet, VertexSet> random_equal_bipartition(int n, Seed seed) {
  if (n < 0 || n % 2 != 0) throw Error("random_equal_bipartition: n must be even and non-negative");
  return random_balanced_bipartition(n, seed);
}

std::pair<VertexSet, VertexSet> random_balanced_bipartition(int n, Seed seed) {
  if (n < 0) throw Error("random_balanced_bipartition: negative n");
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Rng rng = make_rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  auto mid = perm.begin() + n / 2;
  return {VertexSet(std::vector<Vertex>(perm.begin(), mid)), VertexSet(std::vector<Vertex>(mid, perm.end()))};
}

VertexSet random_subset(int n, int k, Rng& rng) {
  if (k < 0 || k > n) throw Error("random_subset: k out of range");
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  // Partial Fisher-Yates.
  for (int i = 0; i < k; ++i) {
    std::uniform_int_distribution<int> pick(i, n - 1);
    std::swap(perm[i], perm[pick(rng)]);
  }
  perm.resize(static_cast<std::size_t>(k));
  return VertexSet(std::move(perm));
}

}  // namespace reslab
