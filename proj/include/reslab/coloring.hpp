#pragma once

#include <optional>
#include <vector>

#include "reslab/graph.hpp"
#include "reslab/rng.hpp"

namespace reslab {

struct Coloring {
  std::vector<int> colors;  ///< per-vertex color id
  int count = 0;            ///< number of distinct ids used
};

bool is_proper(const Graph& g, const Coloring& c);

/// Elimination order from min-degree peeling: each vertex has at most d
/// neighbors among the vertices peeled after it.
struct DegeneracyCertificate {
  int d = 0;
  std::vector<Vertex> elimination_order;

  /// Reverse elimination order; greedy coloring along it uses at most d+1 colors.
  std::vector<Vertex> coloring_order() const { return {elimination_order.rbegin(), elimination_order.rend()}; }
};

/// First-fit coloring along `order`, which must be a permutation of [n].
Coloring greedy_coloring(const Graph& g, const std::vector<Vertex>& order);

/// Brélaz DSATUR: highest saturation first, ties by degree then lowest id.
Coloring dsatur(const Graph& g);

inline constexpr int kExactChromaticCap = 18;
/// Branch and bound over DSATUR orders with a clique lower bound.
int exact_chromatic(const Graph& g);

DegeneracyCertificate degeneracy(const Graph& g);

/// Breakdown of the partition-and-patch coloring of G ∪ H.
struct UnionColoring {
  Coloring coloring;
  int parts = 0;                    ///< s
  double np = 0.0;                  ///< np used in s
  std::vector<int> part_colors;     ///< colors used on each G[V_i]
  std::int64_t monochromatic = 0;   ///< H-edges left monochromatic before patching
  int patch_set_size = 0;           ///< |U|
  int patch_colors = 0;             ///< fresh colors used on (G ∪ H)[U]
  int patch_degeneracy = 0;
};

/// Colors G ∪ H where Δ(H) <= d: split [n] at random into s = round(2 d ln^2(np))
/// parts (at least 1, at most n), color each G[V_i] with DSATUR in fresh
/// colors, then recolor the endpoints U of monochromatic H-edges along a
/// degeneracy order of (G ∪ H)[U] with fresh colors. np is n*p when p is
/// given and 2m/n otherwise; for np <= e the log factor is clamped so s = 1.
UnionColoring partition_color_union(const Graph& g, const Graph& h, int d, Seed seed,
                                    std::optional<double> p = std::nullopt);

/// max{k : ln C(n,k) + C(k,2) ln(1-p) >= 4 ln n}, or 0 if no k qualifies.
int k0(int n, double p);
bool k0_inequality_holds(int n, double p, int k);

struct CoverResult {
  int size = 0;
  std::vector<Edge> pairs;
};

inline constexpr int kCoverVertexCap = 12;
inline constexpr int kCoverSetCap = 10000;
/// Minimum number of vertex pairs meeting every independent k-set (exact).
CoverResult cover_number_bruteforce(const Graph& g, int k);

/// All independent sets of size k, each as a sorted vertex list. Throws past `cap`.
std::vector<std::vector<Vertex>> independent_k_sets(const Graph& g, int k, std::size_t cap);

inline constexpr int kIndependenceCap = 40;
int independence_number_exact(const Graph& g);

}  // namespace reslab
