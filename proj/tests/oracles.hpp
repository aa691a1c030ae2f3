#pragma once
// Brute-force reference implementations. Exponential, small inputs only.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "reslab/graph.hpp"
#include "reslab/rng.hpp"
#include "reslab/generators.hpp"

namespace oracle {

using reslab::Edge;
using reslab::Graph;
using reslab::Vertex;

// Size of a maximum matching by recursion over the lowest unmatched vertex.
inline int max_matching_size(const Graph& g) {
  const int n = g.order();
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, int v) -> int {
    while (v < n && used[v]) ++v;
    if (v >= n) return 0;
    used[v] = 1;
    int best = self(self, v + 1);  // v stays unmatched
    for (Vertex w : g.neighbors(v)) {
      if (used[w]) continue;
      used[w] = 1;
      best = std::max(best, 1 + self(self, v + 1));
      used[w] = 0;
    }
    used[v] = 0;
    return best;
  };
  return rec(rec, 0);
}

// Hamiltonicity by trying every cyclic order starting at vertex 0.
inline bool is_hamiltonian(const Graph& g) {
  const int n = g.order();
  if (n < 3) return false;
  std::vector<Vertex> perm(n - 1);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    bool ok = g.has_edge(0, perm.front()) && g.has_edge(perm.back(), 0);
    for (int i = 0; ok && i + 1 < n - 1; ++i) ok = g.has_edge(perm[i], perm[i + 1]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Smallest k admitting a proper coloring, by enumerating all k^n assignments.
inline int chromatic_number(const Graph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  const auto edges = g.edges();
  for (int k = 1;; ++k) {
    std::vector<int> c(n, 0);
    while (true) {
      bool ok = true;
      for (auto [u, v] : edges)
        if (c[u] == c[v]) {
          ok = false;
          break;
        }
      if (ok) return k;
      int i = 0;
      while (i < n && ++c[i] == k) c[i++] = 0;
      if (i == n) break;
    }
  }
}

// Independence number by subset enumeration.
inline int independence_number(const Graph& g) {
  const int n = g.order();
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    int k = __builtin_popcount(s);
    if (k <= best) continue;
    bool ok = true;
    for (auto [u, v] : g.edges())
      if ((s >> u & 1) && (s >> v & 1)) {
        ok = false;
        break;
      }
    if (ok) best = k;
  }
  return best;
}

// Minimum number of vertex pairs hitting every independent k-set, by trying
// all pair subsets in order of size.
inline int cover_number(const Graph& g, int k) {
  const int n = g.order();
  std::vector<std::uint32_t> sets;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (__builtin_popcount(s) != k) continue;
    bool ok = true;
    for (auto [u, v] : g.edges())
      if ((s >> u & 1) && (s >> v & 1)) ok = false;
    if (ok) sets.push_back(s);
  }
  if (sets.empty()) return 0;
  std::vector<std::uint32_t> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back((1u << u) | (1u << v));
  const int P = static_cast<int>(pairs.size());
  for (int size = 1; size <= P; ++size) {
    std::vector<int> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      bool all = true;
      for (auto s : sets) {
        bool hit = false;
        for (int i : idx)
          if ((s & pairs[i]) == pairs[i]) {
            hit = true;
            break;
          }
        if (!hit) {
          all = false;
          break;
        }
      }
      if (all) return size;
      int i = size - 1;
      while (i >= 0 && idx[i] == P - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return P;
}

// Perfect matching across (left, right) by trying all bijections.
inline bool has_perfect_bipartite(const Graph& g, const std::vector<Vertex>& left, std::vector<Vertex> right) {
  if (left.size() != right.size()) return false;
  std::sort(right.begin(), right.end());
  do {
    bool ok = true;
    for (std::size_t i = 0; ok && i < left.size(); ++i) ok = g.has_edge(left[i], right[i]);
    if (ok) return true;
  } while (std::next_permutation(right.begin(), right.end()));
  return false;
}

// Degeneracy as max over subsets of the min degree inside the subset.
inline int degeneracy(const Graph& g) {
  const int n = g.order();
  int best = 0;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    int mind = n;
    for (int v = 0; v < n; ++v) {
      if (!(s >> v & 1)) continue;
      int d = 0;
      for (Vertex w : g.neighbors(v)) d += s >> w & 1;
      mind = std::min(mind, d);
    }
    best = std::max(best, mind);
  }
  return best;
}

inline Graph random_graph(int n, double p, std::uint64_t seed) { return reslab::gnp(n, p, reslab::Seed{seed}); }

}  // namespace oracle
